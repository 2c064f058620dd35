//! Involutions of a finite index set {0, .., t-1}.

use crate::error::{Error, Result};

/// A self-inverse permutation, stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    pub fn identity(t: usize) -> Involution {
        Involution {
            map: (0..t).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Involution> {
        let t = map.len();
        for (i, &j) in map.iter().enumerate() {
            if j >= t || map[j] != i {
                return Err(Error::Precondition(
                    "value table is not an involution".into(),
                ));
            }
        }
        Ok(Involution { map })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i == j)
            .map(|(i, _)| i)
    }

    /// Two-cycles (i, sigma(i)) with i < sigma(i).
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i < j)
            .map(|(i, &j)| (i, j))
    }

    /// Cycle notation on 1-based indices; fixed points are omitted.
    pub fn render(&self) -> String {
        if self.is_identity() {
            return "id".into();
        }
        self.pairs()
            .map(|(i, j)| format!("({} {})", i + 1, j + 1))
            .collect::<Vec<_>>()
            .join("")
    }
}

/// All involutions of {0, .., t-1}, in a deterministic order (the first free
/// index is either fixed or paired with each later free index in turn).
pub fn involutions(t: usize) -> Vec<Involution> {
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; t];
    fill(&mut map, &mut out);
    out
}

fn fill(map: &mut Vec<usize>, out: &mut Vec<Involution>) {
    let Some(i) = map.iter().position(|&v| v == usize::MAX) else {
        out.push(Involution { map: map.clone() });
        return;
    };
    map[i] = i;
    fill(map, out);
    map[i] = usize::MAX;
    for j in i + 1..map.len() {
        if map[j] == usize::MAX {
            map[i] = j;
            map[j] = i;
            fill(map, out);
            map[i] = usize::MAX;
            map[j] = usize::MAX;
        }
    }
}
