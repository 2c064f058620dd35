//! Disjunctive normal forms over base-case distinction atoms.
//!
//! The classifier cannot decide whether an essentially square-integrable class
//! is distinguished; that predicate is external input. Its answers enter as
//! atoms `Dist(segment)` and every classification result is a DNF over them:
//! a set of clauses, each clause a set of atoms. `TRUE` is the formula holding
//! the empty clause, `FALSE` the empty formula. Formulas are kept normalized
//! by absorption: a clause that is a superset of another clause is dropped.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::segment::{LineSet, Segment};

/// The undecided predicate "this essentially square-integrable class is
/// distinguished", keyed by the stable label `line[a,b]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    label: String,
    segment: Segment,
}

impl Atom {
    pub fn new(segment: Segment, lines: &LineSet) -> Atom {
        Atom {
            label: segment.render(lines),
            segment,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn segment(&self) -> &Segment {
        &self.segment
    }

    pub fn render(&self) -> String {
        format!("Dist({})", self.label)
    }
}

/// A conjunction of atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Clause {
    atoms: BTreeSet<Atom>,
}

impl Clause {
    pub fn empty() -> Clause {
        Clause::default()
    }

    pub fn insert(&mut self, atom: Atom) {
        self.atoms.insert(atom);
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.iter()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn subset_of(&self, other: &Clause) -> bool {
        self.atoms.is_subset(&other.atoms)
    }

    pub fn render(&self) -> String {
        if self.atoms.is_empty() {
            return "TRUE".into();
        }
        self.atoms
            .iter()
            .map(Atom::render)
            .collect::<Vec<_>>()
            .join(" & ")
    }
}

impl FromIterator<Atom> for Clause {
    fn from_iter<T: IntoIterator<Item = Atom>>(iter: T) -> Self {
        Clause {
            atoms: iter.into_iter().collect(),
        }
    }
}

/// A disjunction of clauses, normalized by deduplication and absorption.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DistFormula {
    clauses: BTreeSet<Clause>,
}

impl DistFormula {
    /// FALSE: no clause is satisfiable.
    pub fn unsatisfiable() -> DistFormula {
        DistFormula::default()
    }

    /// TRUE: the empty conjunction holds.
    pub fn tautology() -> DistFormula {
        let mut f = DistFormula::default();
        f.insert_clause(Clause::empty());
        f
    }

    pub fn from_clauses<I: IntoIterator<Item = Clause>>(clauses: I) -> DistFormula {
        let mut f = DistFormula::default();
        for c in clauses {
            f.insert_clause(c);
        }
        f
    }

    /// Inserts a clause, maintaining the absorption invariant.
    pub fn insert_clause(&mut self, clause: Clause) {
        if self.clauses.iter().any(|c| c.subset_of(&clause)) {
            return;
        }
        self.clauses.retain(|c| !clause.subset_of(c));
        self.clauses.insert(clause);
    }

    pub fn clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter()
    }

    pub fn is_true(&self) -> bool {
        self.clauses.contains(&Clause::empty())
    }

    pub fn is_false(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.clauses
            .iter()
            .flat_map(|c| c.atoms().cloned())
            .collect()
    }

    /// Image under an atom relabeling, re-normalized.
    pub fn map_atoms<F: Fn(&Atom) -> Atom>(&self, f: F) -> DistFormula {
        DistFormula::from_clauses(
            self.clauses
                .iter()
                .map(|c| c.atoms().map(&f).collect::<Clause>()),
        )
    }

    fn holds_under(&self, truth: &BTreeSet<&str>) -> bool {
        self.clauses
            .iter()
            .any(|c| c.atoms().all(|a| truth.contains(a.label())))
    }

    /// Three-valued evaluation against a partial oracle.
    pub fn evaluate(&self, oracle: &OracleTable) -> Verdict {
        if self
            .clauses
            .iter()
            .any(|c| c.atoms().all(|a| oracle.get(a.label()) == Some(true)))
        {
            return Verdict::Distinguished;
        }
        if self
            .clauses
            .iter()
            .all(|c| c.atoms().any(|a| oracle.get(a.label()) == Some(false)))
        {
            return Verdict::NotDistinguished;
        }
        Verdict::Undetermined
    }

    pub fn render(&self) -> String {
        if self.is_false() {
            return "FALSE".into();
        }
        if self.is_true() {
            return "TRUE".into();
        }
        self.clauses
            .iter()
            .map(|c| {
                if c.len() > 1 {
                    format!("({})", c.render())
                } else {
                    c.render()
                }
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

/// Exhaustive logical equivalence over the union of the two atom sets.
pub fn formulas_equivalent(f: &DistFormula, g: &DistFormula) -> bool {
    let mut atoms = f.atoms();
    atoms.extend(g.atoms());
    let atoms: Vec<Atom> = atoms.into_iter().collect();
    assert!(
        atoms.len() <= 24,
        "too many atoms for exhaustive equivalence checking"
    );
    for mask in 0u64..(1u64 << atoms.len()) {
        let truth: BTreeSet<&str> = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| a.label())
            .collect();
        if f.holds_under(&truth) != g.holds_under(&truth) {
            return false;
        }
    }
    true
}

/// Result of evaluating a formula against a partial oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Distinguished,
    NotDistinguished,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "distinguished",
            Verdict::NotDistinguished => "not-distinguished",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// Externally supplied truth values for base-case atoms; absent atoms are
/// unknown. File format: one `label = true|false` per line, `#` comments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleTable {
    entries: BTreeMap<String, bool>,
}

impl OracleTable {
    pub fn new() -> OracleTable {
        OracleTable::default()
    }

    pub fn insert(&mut self, label: impl Into<String>, value: bool) {
        self.entries.insert(label.into(), value);
    }

    pub fn get(&self, label: &str) -> Option<bool> {
        self.entries.get(label).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn parse(text: &str) -> Result<OracleTable> {
        let mut table = OracleTable::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx as u32 + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let Some((label, value)) = line.split_once('=') else {
                return Err(Error::Oracle {
                    line: line_no,
                    message: "expected `label = true|false`".into(),
                });
            };
            let label = label.trim();
            if label.is_empty() {
                return Err(Error::Oracle {
                    line: line_no,
                    message: "empty atom label".into(),
                });
            }
            let value = match value.trim() {
                "true" => true,
                "false" => false,
                other => {
                    return Err(Error::Oracle {
                        line: line_no,
                        message: format!("expected true or false, got `{other}`"),
                    })
                }
            };
            table.insert(label, value);
        }
        Ok(table)
    }
}
