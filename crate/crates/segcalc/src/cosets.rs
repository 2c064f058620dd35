//! Double-coset combinatorics for a standard parabolic against the linear
//! period subgroup.
//!
//! The cosets are indexed by symmetric non-negative integer matrices with
//! prescribed row sums (the partition); when `d` is odd every diagonal entry
//! must be even. A coset is admissible when its matrix is monomial, in which
//! case the support is an involution. Against a tuple of segments, a coset
//! matrix induces a Jacquet-module splitting of each segment into consecutive
//! chunks, the earlier (left) cells taking the upper ends, and the Mackey
//! criterion asks every cell to be dual to its transpose and every diagonal
//! cell to carry a distinguished class.

use crate::context::Context;
use crate::error::{Error, Result};
use crate::formula::{Atom, Clause};
use crate::perm::Involution;
use crate::segment::{LineSet, Segment};

/// A symmetric matrix of non-negative integers with prescribed row sums,
/// indexing one double coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMatrix {
    t: usize,
    entries: Vec<u64>,
}

impl CosetMatrix {
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<CosetMatrix> {
        let t = rows.len();
        if rows.iter().any(|r| r.len() != t) {
            return Err(Error::Precondition("coset matrix must be square".into()));
        }
        let entries: Vec<u64> = rows.iter().flatten().copied().collect();
        let m = CosetMatrix { t, entries };
        for i in 0..t {
            for j in 0..i {
                if m.entry(i, j) != m.entry(j, i) {
                    return Err(Error::Precondition(
                        "coset matrix must be symmetric".into(),
                    ));
                }
            }
        }
        Ok(m)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.t + j]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        (0..self.t).map(|j| self.entry(i, j)).sum()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.t)
            .map(|i| (0..self.t).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// When `d` is odd all diagonal entries must be even.
    pub fn diagonal_parity_ok(&self, d: u32) -> bool {
        d % 2 == 0 || (0..self.t).all(|i| self.entry(i, i) % 2 == 0)
    }

    /// Monomial support: exactly one nonzero entry in every row.
    pub fn is_admissible(&self) -> bool {
        (0..self.t).all(|i| (0..self.t).filter(|&j| self.entry(i, j) != 0).count() == 1)
    }

    /// The involution supporting an admissible matrix.
    pub fn involution(&self) -> Result<Involution> {
        if !self.is_admissible() {
            return Err(Error::Precondition(
                "coset matrix is not admissible".into(),
            ));
        }
        let map = (0..self.t)
            .map(|i| (0..self.t).find(|&j| self.entry(i, j) != 0).unwrap())
            .collect();
        Involution::from_map(map)
    }
}

/// All coset matrices for the given partition and degree, duplicate-free, in
/// lexicographic row-major order. Backtracking over the upper triangle with
/// row-sum pruning; complete by construction.
pub fn enumerate_coset_matrices(partition: &[u64], d: u32) -> Vec<CosetMatrix> {
    assert!(!partition.is_empty(), "partition must be non-empty");
    let t = partition.len();
    let mut rem = partition.to_vec();
    let mut entries = vec![0u64; t * t];
    let mut out = Vec::new();
    fill_cell(0, 0, t, d, &mut rem, &mut entries, &mut out);
    out
}

fn fill_cell(
    i: usize,
    j: usize,
    t: usize,
    d: u32,
    rem: &mut Vec<u64>,
    entries: &mut Vec<u64>,
    out: &mut Vec<CosetMatrix>,
) {
    if i == t {
        out.push(CosetMatrix {
            t,
            entries: entries.clone(),
        });
        return;
    }
    let (ni, nj) = if j + 1 == t { (i + 1, i + 1) } else { (i, j + 1) };
    let last_in_row = j + 1 == t;
    let diagonal = i == j;
    let step = if diagonal && d % 2 == 1 { 2 } else { 1 };
    let cap = if diagonal {
        rem[i]
    } else {
        rem[i].min(rem[j])
    };
    let candidates: Vec<u64> = if last_in_row {
        // the row sum must close out exactly here
        if rem[i] <= cap && rem[i] % step == 0 {
            vec![rem[i]]
        } else {
            vec![]
        }
    } else {
        (0..=cap).step_by(step as usize).collect()
    };
    for v in candidates {
        entries[i * t + j] = v;
        entries[j * t + i] = v;
        rem[i] -= v;
        if !diagonal {
            rem[j] -= v;
        }
        fill_cell(ni, nj, t, d, rem, entries, out);
        rem[i] += v;
        if !diagonal {
            rem[j] += v;
        }
        entries[i * t + j] = 0;
        entries[j * t + i] = 0;
    }
}

/// The Jacquet-module splitting of a segment tuple along a coset matrix:
/// cell (i, j) holds the chunk of segment i of group size `n_{i,j}`.
#[derive(Debug, Clone)]
pub struct SplitData {
    t: usize,
    cells: Vec<Option<Segment>>,
}

impl SplitData {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn cell(&self, i: usize, j: usize) -> Option<&Segment> {
        self.cells[i * self.t + j].as_ref()
    }

    /// First pair (i, j), i <= j in row-major order, violating the duality
    /// requirement `cell(i,j) = dual(cell(j,i))`; `None` when all pairs hold.
    /// The i = j case asks the diagonal cell to be self-dual.
    pub fn duality_violation(&self, lines: &LineSet) -> Option<(usize, usize)> {
        for i in 0..self.t {
            for j in i..self.t {
                match (self.cell(i, j), self.cell(j, i)) {
                    (None, None) => {}
                    (Some(x), Some(y)) => {
                        if *x != y.dual(lines) {
                            return Some((i, j));
                        }
                    }
                    // unreachable for splittings of symmetric matrices
                    _ => return Some((i, j)),
                }
            }
        }
        None
    }

    /// Duality on strictly off-diagonal pairs only.
    pub fn offdiagonal_ok(&self, lines: &LineSet) -> bool {
        for i in 0..self.t {
            for j in i + 1..self.t {
                match (self.cell(i, j), self.cell(j, i)) {
                    (None, None) => {}
                    (Some(x), Some(y)) => {
                        if *x != y.dual(lines) {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    /// Every nonempty diagonal cell is self-dual.
    pub fn diagonal_self_dual(&self, lines: &LineSet) -> bool {
        (0..self.t).all(|i| match self.cell(i, i) {
            Some(seg) => *seg == seg.dual(lines),
            None => true,
        })
    }

    pub fn dualities_ok(&self, lines: &LineSet) -> bool {
        self.duality_violation(lines).is_none()
    }
}

/// Splits each segment into consecutive chunks according to the row of the
/// coset matrix, the first nonzero cell taking the top of the segment. A cell
/// size that is not a multiple of the line's `k` means the Jacquet module has
/// no matching segment tensor and the coset contributes nothing (`None`).
pub fn jacquet_splitting(
    segments: &[Segment],
    s: &CosetMatrix,
    lines: &LineSet,
) -> Option<SplitData> {
    let t = s.t();
    assert_eq!(segments.len(), t, "segment count must match matrix size");
    for (i, seg) in segments.iter().enumerate() {
        assert_eq!(
            seg.group_size(lines),
            s.row_sum(i),
            "row sums must equal segment group sizes"
        );
    }
    let mut cells = vec![None; t * t];
    for (i, seg) in segments.iter().enumerate() {
        let k = lines.line(seg.line()).k as u64;
        let mut top = seg.b();
        for j in 0..t {
            let m = s.entry(i, j);
            if m == 0 {
                continue;
            }
            if m % k != 0 {
                return None;
            }
            let pts = (m / k) as i64;
            cells[i * t + j] = Some(Segment::raw(seg.line(), top - pts + 1, top));
            top -= pts;
        }
        debug_assert_eq!(top, seg.a() - 1);
    }
    Some(SplitData { t, cells })
}

/// The conjunction of base-case atoms the Mackey criterion leaves open for one
/// splitting, or `None` when the branch is unsatisfiable: some duality pair
/// (including the self-duality of diagonal cells) fails, or a diagonal cell
/// sits in a group where E does not embed.
pub fn mackey_branch(split: &SplitData, ctx: Context, lines: &LineSet) -> Option<Clause> {
    if !split.dualities_ok(lines) {
        return None;
    }
    let mut clause = Clause::empty();
    for i in 0..split.t() {
        if let Some(seg) = split.cell(i, i) {
            if (seg.group_size(lines) * ctx.d() as u64) % 2 != 0 {
                return None;
            }
            clause.insert(Atom::new(seg.clone(), lines));
        }
    }
    Some(clause)
}
