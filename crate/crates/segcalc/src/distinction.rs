//! Classification of distinguished standard modules.
//!
//! Two independent routes produce a DNF over base-case atoms:
//!
//! * [`classify_standard_module`] searches the involutions of the index set
//!   for those pairing every segment with its dual; each survivor contributes
//!   the conjunction of atoms attached to its fixed points.
//! * [`classify_via_mackey`] brute-forces every double coset of the parabolic,
//!   splits the (right-ordered) tuple through the Jacquet module and keeps the
//!   satisfiable branches.
//!
//! The two formulas are logically equivalent; the admissibility-exclusion
//! verifier checks the load-bearing half of that claim: no non-admissible
//! coset ever passes the splitting and duality gates on right-ordered input.

use crate::context::Context;
use crate::cosets::{enumerate_coset_matrices, jacquet_splitting, mackey_branch, CosetMatrix};
use crate::error::{Error, Result};
use crate::formula::{Atom, Clause, DistFormula};
use crate::perm::{involutions, Involution};
use crate::segment::{LineSet, Multisegment, Segment};

fn require_embedding(ms: &Multisegment, ctx: Context, lines: &LineSet) -> Result<u64> {
    if ms.is_empty() {
        return Err(Error::Precondition("empty multisegment".into()));
    }
    let n = ms.total_group_size(lines);
    if (n * ctx.d() as u64) % 2 != 0 {
        return Err(Error::NoEmbedding { n, d: ctx.d() });
    }
    Ok(n)
}

/// Involutions pairing every segment with its dual: `seg[sigma(i)] = dual(seg[i])`.
pub fn dual_pairing_involutions(segments: &[Segment], lines: &LineSet) -> Vec<Involution> {
    involutions(segments.len())
        .into_iter()
        .filter(|sigma| {
            (0..segments.len()).all(|i| segments[sigma.apply(i)] == segments[i].dual(lines))
        })
        .collect()
}

/// Dual-pairing involutions whose fixed points all satisfy the embedding
/// condition (group size times d even). These are exactly the involutions the
/// classifier turns into clauses.
pub fn distinguishing_involutions(
    segments: &[Segment],
    ctx: Context,
    lines: &LineSet,
) -> Vec<Involution> {
    dual_pairing_involutions(segments, lines)
        .into_iter()
        .filter(|sigma| {
            sigma
                .fixed_points()
                .all(|i| (segments[i].group_size(lines) * ctx.d() as u64) % 2 == 0)
        })
        .collect()
}

/// The classifier: a disjunction over the valid involutions, each clause the
/// set of base-case atoms of its fixed points. Order-independent.
pub fn classify_standard_module(
    ms: &Multisegment,
    ctx: Context,
    lines: &LineSet,
) -> Result<DistFormula> {
    require_embedding(ms, ctx, lines)?;
    let segments = ms.segments();
    let mut formula = DistFormula::unsatisfiable();
    for sigma in distinguishing_involutions(segments, ctx, lines) {
        let clause: Clause = sigma
            .fixed_points()
            .map(|i| Atom::new(segments[i].clone(), lines))
            .collect();
        formula.insert_clause(clause);
    }
    Ok(formula)
}

/// The brute-force route: reorder to a right-ordered form, enumerate every
/// coset matrix of the resulting partition and keep the satisfiable Mackey
/// branches.
pub fn classify_via_mackey(
    ms: &Multisegment,
    ctx: Context,
    lines: &LineSet,
) -> Result<DistFormula> {
    require_embedding(ms, ctx, lines)?;
    let ordered = ms.right_ordered(lines);
    let partition: Vec<u64> = ordered.iter().map(|s| s.group_size(lines)).collect();
    let mut formula = DistFormula::unsatisfiable();
    for s in enumerate_coset_matrices(&partition, ctx.d()) {
        let Some(split) = jacquet_splitting(&ordered, &s, lines) else {
            continue;
        };
        let Some(clause) = mackey_branch(&split, ctx, lines) else {
            continue;
        };
        formula.insert_clause(clause);
    }
    Ok(formula)
}

/// Why a non-admissible coset matrix contributes nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExclusionOutcome {
    /// Some cell size is not a multiple of the line's k.
    NoSplitting,
    /// An off-diagonal pair fails `cell(i,j) = dual(cell(j,i))` (0-based).
    OffDiagonalViolation { i: usize, j: usize },
    /// A diagonal cell is not self-dual (0-based).
    DiagonalNotSelfDual { i: usize },
    /// All gates passed: a counterexample to the exclusion. Should never occur.
    Satisfiable,
}

impl ExclusionOutcome {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, ExclusionOutcome::Satisfiable)
    }

    pub fn render(&self) -> String {
        match self {
            ExclusionOutcome::NoSplitting => "no-splitting".into(),
            ExclusionOutcome::OffDiagonalViolation { i, j } => {
                format!("off-diagonal-duality-violated({},{})", i + 1, j + 1)
            }
            ExclusionOutcome::DiagonalNotSelfDual { i } => {
                format!("diagonal-not-self-dual({})", i + 1)
            }
            ExclusionOutcome::Satisfiable => "SATISFIABLE-COUNTEREXAMPLE".into(),
        }
    }
}

/// One examined non-admissible matrix.
#[derive(Debug, Clone)]
pub struct ExclusionEntry {
    pub matrix: CosetMatrix,
    pub outcome: ExclusionOutcome,
}

/// Exhaustive record of the exclusion check for one multisegment.
#[derive(Debug, Clone)]
pub struct ExclusionReport {
    pub ordered: Vec<Segment>,
    pub partition: Vec<u64>,
    /// Total number of coset matrices for the partition.
    pub matrices_total: usize,
    /// One entry per non-admissible matrix.
    pub nonadmissible: Vec<ExclusionEntry>,
}

impl ExclusionReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ExclusionEntry> {
        self.nonadmissible
            .iter()
            .filter(|e| e.outcome.is_counterexample())
    }

    pub fn counterexample_count(&self) -> usize {
        self.counterexamples().count()
    }
}

/// Checks every non-admissible coset matrix against the right-ordered form of
/// the multisegment: each must be killed by the splitting gate or by a duality
/// pair. A `Satisfiable` outcome is a counterexample and indicates a bug.
pub fn verify_admissibility_exclusion(
    ms: &Multisegment,
    ctx: Context,
    lines: &LineSet,
) -> ExclusionReport {
    let ordered = ms.right_ordered(lines);
    let partition: Vec<u64> = ordered.iter().map(|s| s.group_size(lines)).collect();
    if ordered.is_empty() {
        return ExclusionReport {
            ordered,
            partition,
            matrices_total: 0,
            nonadmissible: Vec::new(),
        };
    }
    let all = enumerate_coset_matrices(&partition, ctx.d());
    let matrices_total = all.len();
    let mut nonadmissible = Vec::new();
    for matrix in all {
        if matrix.is_admissible() {
            continue;
        }
        let outcome = match jacquet_splitting(&ordered, &matrix, lines) {
            None => ExclusionOutcome::NoSplitting,
            Some(split) => match split.duality_violation(lines) {
                Some((i, j)) if i == j => ExclusionOutcome::DiagonalNotSelfDual { i },
                Some((i, j)) => ExclusionOutcome::OffDiagonalViolation { i, j },
                None => ExclusionOutcome::Satisfiable,
            },
        };
        nonadmissible.push(ExclusionEntry { matrix, outcome });
    }
    ExclusionReport {
        ordered,
        partition,
        matrices_total,
        nonadmissible,
    }
}
