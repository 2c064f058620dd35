//! Cuspidal lines, segments and multisegments.
//!
//! A cuspidal line is the twist lattice `{rho nu^(m*l)}` of a formal
//! supercuspidal `rho` of some `G_k`; the calculus never touches the
//! representation itself, only the label, the group size `k`, the torsion
//! number `l` and a pointer to the dual line. A segment `[a,b]` is an integer
//! interval on such a line (coordinates in units of `l`), and a multisegment
//! is a multiset of segments. Two segments are isomorphic exactly when they
//! carry the same line id and the same endpoints.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::sign::Sign;

/// Opaque handle to a declared cuspidal line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineId(usize);

/// A declared cuspidal line: `rho` is a supercuspidal of `G_k` with torsion
/// number `l`; `dual` points at the line of the contragredient; `omega` is the
/// formal value of the central character at -1 (used only by the sign module).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalLine {
    pub label: String,
    pub k: u32,
    pub l: u32,
    pub dual: LineId,
    pub omega: Sign,
}

/// Raw declaration, before dual references are resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSpec {
    pub label: String,
    pub k: u32,
    pub l: u32,
    pub dual_label: String,
    pub omega: Sign,
}

/// The set of declared cuspidal lines, with duality resolved and validated.
///
/// Duality is an involution; dual lines share `k`, `l` and `omega`. Lines keep
/// their declaration order, which fixes every deterministic ordering downstream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LineSet {
    lines: Vec<CuspidalLine>,
}

impl LineSet {
    pub fn builder() -> LineSetBuilder {
        LineSetBuilder { specs: Vec::new() }
    }

    pub fn from_specs(specs: &[LineSpec]) -> Result<LineSet> {
        let mut by_label: BTreeMap<&str, usize> = BTreeMap::new();
        for (idx, spec) in specs.iter().enumerate() {
            if spec.label.is_empty() {
                return Err(Error::Invalid("line label must be non-empty".into()));
            }
            if spec.k == 0 || spec.l == 0 {
                return Err(Error::Invalid(format!(
                    "line {}: k and l must be positive",
                    spec.label
                )));
            }
            if by_label.insert(&spec.label, idx).is_some() {
                return Err(Error::Invalid(format!("duplicate line {}", spec.label)));
            }
        }
        let mut lines = Vec::with_capacity(specs.len());
        for spec in specs {
            let dual = *by_label.get(spec.dual_label.as_str()).ok_or_else(|| {
                Error::Invalid(format!(
                    "line {}: undeclared dual line {}",
                    spec.label, spec.dual_label
                ))
            })?;
            lines.push(CuspidalLine {
                label: spec.label.clone(),
                k: spec.k,
                l: spec.l,
                dual: LineId(dual),
                omega: spec.omega,
            });
        }
        let set = LineSet { lines };
        for (idx, line) in set.lines.iter().enumerate() {
            let dual = set.line(line.dual);
            if dual.dual != LineId(idx) {
                return Err(Error::Invalid(format!(
                    "lines {} and {}: dual declarations do not pair up",
                    line.label, dual.label
                )));
            }
            if dual.k != line.k || dual.l != line.l {
                return Err(Error::Invalid(format!(
                    "dual lines {} and {} must share k and l",
                    line.label, dual.label
                )));
            }
            if dual.omega != line.omega {
                return Err(Error::Invalid(format!(
                    "dual lines {} and {} must declare the same omega",
                    line.label, dual.label
                )));
            }
        }
        Ok(set)
    }

    pub fn line(&self, id: LineId) -> &CuspidalLine {
        &self.lines[id.0]
    }

    pub fn dual_of(&self, id: LineId) -> LineId {
        self.lines[id.0].dual
    }

    pub fn lookup(&self, label: &str) -> Option<LineId> {
        self.lines.iter().position(|l| l.label == label).map(LineId)
    }

    pub fn iter(&self) -> impl Iterator<Item = (LineId, &CuspidalLine)> {
        self.lines.iter().enumerate().map(|(i, l)| (LineId(i), l))
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// Builds a validated [`LineSet`] from a fluent description.
pub struct LineSetBuilder {
    specs: Vec<LineSpec>,
}

impl LineSetBuilder {
    pub fn self_dual(self, label: &str, k: u32, l: u32) -> Self {
        self.self_dual_with_omega(label, k, l, Sign::Plus)
    }

    pub fn self_dual_with_omega(mut self, label: &str, k: u32, l: u32, omega: Sign) -> Self {
        self.specs.push(LineSpec {
            label: label.into(),
            k,
            l,
            dual_label: label.into(),
            omega,
        });
        self
    }

    pub fn dual_pair(self, a: &str, b: &str, k: u32, l: u32) -> Self {
        self.dual_pair_with_omega(a, b, k, l, Sign::Plus)
    }

    pub fn dual_pair_with_omega(mut self, a: &str, b: &str, k: u32, l: u32, omega: Sign) -> Self {
        self.specs.push(LineSpec {
            label: a.into(),
            k,
            l,
            dual_label: b.into(),
            omega,
        });
        self.specs.push(LineSpec {
            label: b.into(),
            k,
            l,
            dual_label: a.into(),
            omega,
        });
        self
    }

    pub fn finish(self) -> Result<LineSet> {
        LineSet::from_specs(&self.specs)
    }
}

/// A point `rho nu^(offset*l)` on the twist lattice of a cuspidal line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cuspidal {
    pub line: LineId,
    pub offset: i64,
}

/// The integer interval `[a,b]` on a cuspidal line, `a <= b`.
///
/// Its length is `b - a + 1` lattice points and it labels an essentially
/// square-integrable class of the group of size `(b - a + 1) * k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    line: LineId,
    a: i64,
    b: i64,
}

impl Segment {
    pub fn new(line: LineId, a: i64, b: i64) -> Result<Segment> {
        if a > b {
            return Err(Error::Invalid(format!(
                "segment requires a <= b (got [{a},{b}])"
            )));
        }
        Ok(Segment { line, a, b })
    }

    pub(crate) fn raw(line: LineId, a: i64, b: i64) -> Segment {
        debug_assert!(a <= b);
        Segment { line, a, b }
    }

    pub fn line(&self) -> LineId {
        self.line
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Number of lattice points, `b - a + 1`.
    pub fn length(&self) -> i64 {
        self.b - self.a + 1
    }

    /// Size of the group the segment lives on: `length * k`.
    pub fn group_size(&self, lines: &LineSet) -> u64 {
        self.length() as u64 * lines.line(self.line).k as u64
    }

    /// The contragredient segment: `[a,b]` on `rho` maps to `[-b,-a]` on the dual line.
    pub fn dual(&self, lines: &LineSet) -> Segment {
        Segment::raw(lines.dual_of(self.line), -self.b, -self.a)
    }

    pub fn contains(&self, other: &Segment) -> bool {
        self.line == other.line && self.a <= other.a && other.b <= self.b
    }

    /// Linked: the union is again a segment and neither contains the other.
    pub fn linked(&self, other: &Segment) -> bool {
        self.line == other.line
            && other.a <= self.b + 1
            && self.a <= other.b + 1
            && !self.contains(other)
            && !other.contains(self)
    }

    /// `self` precedes `other`: linked, and `other` starts strictly higher.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.linked(other) && other.a > self.a
    }

    /// Lattice points of the segment, bottom to top.
    pub fn points(&self) -> impl Iterator<Item = Cuspidal> + '_ {
        (self.a..=self.b).map(|offset| Cuspidal {
            line: self.line,
            offset,
        })
    }

    pub fn render(&self, lines: &LineSet) -> String {
        format!("{}[{},{}]", lines.line(self.line).label, self.a, self.b)
    }
}

/// `true` iff no earlier segment precedes a later one.
pub fn is_standard_order(segments: &[Segment]) -> bool {
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            if segments[i].precedes(&segments[j]) {
                return false;
            }
        }
    }
    true
}

/// A multiset of segments. The underlying order is kept for rendering and as
/// the final tie-break of [`Multisegment::right_ordered`]; all classifiers are
/// order-independent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(segments: Vec<Segment>) -> Multisegment {
        Multisegment { segments }
    }

    pub fn empty() -> Multisegment {
        Multisegment::default()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn total_group_size(&self, lines: &LineSet) -> u64 {
        self.segments.iter().map(|s| s.group_size(lines)).sum()
    }

    /// Right-ordered form: segments grouped into blocks by cuspidal line
    /// (blocks in line-label order), right endpoints weakly decreasing within
    /// a block, ties broken by `a` ascending and then by input order. The
    /// result is always a standard order.
    pub fn right_ordered(&self, lines: &LineSet) -> Vec<Segment> {
        let mut segs = self.segments.clone();
        segs.sort_by(|x, y| {
            lines
                .line(x.line)
                .label
                .cmp(&lines.line(y.line).label)
                .then(y.b.cmp(&x.b))
                .then(x.a.cmp(&y.a))
        });
        segs
    }

    /// No pair of segments is linked; equivalently the standard module is
    /// irreducible and the transfer to the split form is generic.
    pub fn is_totally_unlinked(&self) -> bool {
        for i in 0..self.segments.len() {
            for j in i + 1..self.segments.len() {
                if self.segments[i].linked(&self.segments[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Elementwise contragredient.
    pub fn dual(&self, lines: &LineSet) -> Multisegment {
        Multisegment {
            segments: self.segments.iter().map(|s| s.dual(lines)).collect(),
        }
    }

    pub fn render(&self, lines: &LineSet) -> String {
        self.segments
            .iter()
            .map(|s| s.render(lines))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<T: IntoIterator<Item = Segment>>(iter: T) -> Self {
        Multisegment {
            segments: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}
