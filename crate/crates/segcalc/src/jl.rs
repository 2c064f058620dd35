//! Jacquet-Langlands transfer of cuspidal lines, segments and multisegments
//! to the split form.
//!
//! A segment `[a,b]` on a line with parameters `(k, l)` transfers to the
//! segment `[((2a-1)l+1)/2, ((2b+1)l-1)/2]` on an F-side line whose cuspidal
//! is a representation of `GL_{kd/l}(F)`. F-side endpoints are half-integers;
//! they are stored doubled so all arithmetic stays exact. The F-side line id
//! is the source id tagged `JL`, and F-side duality mirrors source duality.

use crate::context::Context;
use crate::error::{Error, Result};
use crate::segment::{LineId, LineSet, Multisegment, Segment};

/// Identifier of an F-side cuspidal line (torsion number 1), derived from the
/// source line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FLineId(LineId);

impl FLineId {
    pub fn source(&self) -> LineId {
        self.0
    }

    pub fn render(&self, lines: &LineSet) -> String {
        format!("JL({})", lines.line(self.0).label)
    }
}

/// A segment on the split side, with doubled endpoints: the actual interval is
/// `[a2/2, b2/2]` and consecutive lattice points differ by 1 (i.e. 2 on the
/// doubled grid).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSegment {
    line: FLineId,
    k_f: u32,
    a2: i64,
    b2: i64,
}

impl FSegment {
    pub fn line(&self) -> FLineId {
        self.line
    }

    pub fn k_f(&self) -> u32 {
        self.k_f
    }

    pub fn a2(&self) -> i64 {
        self.a2
    }

    pub fn b2(&self) -> i64 {
        self.b2
    }

    /// Number of lattice points.
    pub fn length(&self) -> i64 {
        (self.b2 - self.a2) / 2 + 1
    }

    pub fn group_size(&self) -> u64 {
        self.length() as u64 * self.k_f as u64
    }

    fn comparable(&self, other: &FSegment) -> bool {
        self.line == other.line
    }

    fn contains(&self, other: &FSegment) -> bool {
        self.comparable(other) && self.a2 <= other.a2 && other.b2 <= self.b2
    }

    pub fn linked(&self, other: &FSegment) -> bool {
        self.comparable(other)
            && other.a2 <= self.b2 + 2
            && self.a2 <= other.b2 + 2
            && !self.contains(other)
            && !other.contains(self)
    }

    pub fn precedes(&self, other: &FSegment) -> bool {
        self.linked(other) && other.a2 > self.a2
    }

    pub fn render(&self, lines: &LineSet) -> String {
        format!(
            "{}[{},{}]",
            self.line.render(lines),
            render_half(self.a2),
            render_half(self.b2)
        )
    }
}

/// Renders a doubled endpoint as an exact integer or half ("2", "-1/2").
pub fn render_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

fn check_transfer(line_id: LineId, lines: &LineSet, ctx: Context) -> Result<(u32, u32)> {
    let line = lines.line(line_id);
    let kd = line.k as u64 * ctx.d() as u64;
    if kd % line.l as u64 != 0 {
        return Err(Error::InvalidLine {
            label: line.label.clone(),
            l: line.l,
            kd,
        });
    }
    Ok(((kd / line.l as u64) as u32, line.l))
}

/// Transfer of the cuspidal itself: the image of `rho` is the class of the
/// segment `[(1-l)/2, (l-1)/2]` on the derived F-side line.
pub fn jl_cuspidal(line_id: LineId, lines: &LineSet, ctx: Context) -> Result<FSegment> {
    let (k_f, l) = check_transfer(line_id, lines, ctx)?;
    Ok(FSegment {
        line: FLineId(line_id),
        k_f,
        a2: 1 - l as i64,
        b2: l as i64 - 1,
    })
}

/// Transfer of a segment; preserves the group size up to the factor `d`.
pub fn jl_segment(segment: &Segment, lines: &LineSet, ctx: Context) -> Result<FSegment> {
    let (k_f, l) = check_transfer(segment.line(), lines, ctx)?;
    let l = l as i64;
    Ok(FSegment {
        line: FLineId(segment.line()),
        k_f,
        a2: (2 * segment.a() - 1) * l + 1,
        b2: (2 * segment.b() + 1) * l - 1,
    })
}

/// Elementwise transfer of a multisegment.
pub fn jl_multisegment(
    ms: &Multisegment,
    lines: &LineSet,
    ctx: Context,
) -> Result<Vec<FSegment>> {
    ms.segments()
        .iter()
        .map(|s| jl_segment(s, lines, ctx))
        .collect()
}
