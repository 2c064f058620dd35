//! A symbolic calculus for the segment combinatorics of standard modules of
//! inner forms of the general linear group over a non-Archimedean field.
//!
//! The crate decides when a standard module carries a nonzero linear period,
//! modulo the essentially square-integrable base case, which enters as formal
//! oracle atoms. Around that classifier it provides the supporting machinery:
//!
//! * [`segment`] — cuspidal lines, segments, multisegments, linkage and
//!   right-ordered forms;
//! * [`jl`] — the Jacquet-Langlands transfer of segments to the split form;
//! * [`cosets`] — the double-coset index matrices, admissibility, the
//!   Jacquet-module splitting and the Mackey criterion;
//! * [`distinction`] — the involution classifier, the brute-force Mackey
//!   route, and the admissibility-exclusion verifier;
//! * [`signs`] — the root-number sign identity;
//! * [`dsl`], [`run`], [`report`] — the session format and the command layer
//!   behind the `segcalc` binary.
//!
//! Everything is a pure function over immutable values; concurrent use needs
//! no coordination.

pub mod context;
pub mod cosets;
pub mod distinction;
pub mod dsl;
pub mod error;
pub mod formula;
pub mod jl;
pub mod perm;
pub mod report;
pub mod run;
pub mod sampling;
pub mod segment;
pub mod sign;
pub mod signs;

pub use context::Context;
pub use dsl::{parse_session, Session};
pub use error::{Error, Result};
pub use formula::{formulas_equivalent, Atom, Clause, DistFormula, OracleTable, Verdict};
pub use perm::{involutions, Involution};
pub use run::{run_command, CommandKind, RunOptions};
pub use segment::{
    is_standard_order, Cuspidal, CuspidalLine, LineId, LineSet, LineSpec, Multisegment, Segment,
};
pub use sign::Sign;
