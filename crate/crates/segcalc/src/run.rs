//! Command dispatch shared by the CLI and the C API.

use std::fmt;
use std::str::FromStr;

use crate::context::Context;
use crate::cosets::enumerate_coset_matrices;
use crate::distinction::{
    classify_standard_module, classify_via_mackey, distinguishing_involutions,
    verify_admissibility_exclusion, ExclusionReport,
};
use crate::dsl::Session;
use crate::error::{Error, Result};
use crate::formula::{formulas_equivalent, DistFormula, OracleTable};
use crate::jl::{jl_multisegment, render_half};
use crate::report::{
    ContextOut, CosetOut, CounterexampleOut, EpsilonCaseOut, ExclusionEntryOut, FSegmentOut,
    FormulaOut, Payload, Report, VerifyDetailOut,
};
use crate::sampling::{random_multisegment, SplitMix64};
use crate::segment::{LineSet, Multisegment, Segment};
use crate::sign::Sign;
use crate::signs::{predicted_sign, total_sign, SignConfig};

/// Desk-scale guard: classifier commands refuse larger multisegments.
const MAX_SEGMENTS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Order,
    Classify,
    Mackey,
    Verify,
    Jl,
    Cosets,
    Epsilon,
}

impl CommandKind {
    pub const ALL: [CommandKind; 7] = [
        CommandKind::Order,
        CommandKind::Classify,
        CommandKind::Mackey,
        CommandKind::Verify,
        CommandKind::Jl,
        CommandKind::Cosets,
        CommandKind::Epsilon,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Order => "order",
            CommandKind::Classify => "classify",
            CommandKind::Mackey => "mackey",
            CommandKind::Verify => "verify",
            CommandKind::Jl => "jl",
            CommandKind::Cosets => "cosets",
            CommandKind::Epsilon => "epsilon",
        }
    }
}

impl FromStr for CommandKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<CommandKind> {
        CommandKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown command `{s}` (expected one of: order, classify, mackey, verify, jl, cosets, epsilon)"
                ))
            })
    }
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Flags shared by every command.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub d: Option<u32>,
    pub eta: Option<Sign>,
    pub oracle: Option<OracleTable>,
    /// `(count, seed)` for the batch verifier.
    pub random: Option<(u64, u64)>,
}

fn effective_context(session: &Session, opts: &RunOptions) -> Result<Context> {
    let d = opts.d.or(session.d).unwrap_or(1);
    let eta = opts.eta.or(session.eta).unwrap_or(Sign::Plus);
    Context::new(d, eta)
}

fn require_nonempty(ms: &Multisegment) -> Result<()> {
    if ms.is_empty() {
        return Err(Error::Precondition(
            "the session declares an empty multisegment".into(),
        ));
    }
    Ok(())
}

fn check_scale(ms: &Multisegment) -> Result<()> {
    if ms.len() > MAX_SEGMENTS {
        return Err(Error::Precondition(format!(
            "multisegment has {} segments; this tool is desk-scale (at most {MAX_SEGMENTS})",
            ms.len()
        )));
    }
    Ok(())
}

fn formula_out(f: &DistFormula) -> FormulaOut {
    FormulaOut {
        display: f.render(),
        clauses: f
            .clauses()
            .map(|c| c.atoms().map(|a| a.label().to_string()).collect())
            .collect(),
    }
}

fn render_all(segs: &[Segment], lines: &LineSet) -> Vec<String> {
    segs.iter().map(|s| s.render(lines)).collect()
}

pub fn run_command(cmd: CommandKind, session: &Session, opts: &RunOptions) -> Result<Report> {
    let ctx = effective_context(session, opts)?;
    let lines = &session.lines;
    let ms = &session.multisegment;
    let mut diagnostics = Vec::new();

    let result = match cmd {
        CommandKind::Order => {
            require_nonempty(ms)?;
            let ordered = ms.right_ordered(lines);
            Payload::Order {
                segments: render_all(&ordered, lines),
                totally_unlinked: ms.is_totally_unlinked(),
            }
        }
        CommandKind::Classify => {
            require_nonempty(ms)?;
            check_scale(ms)?;
            let formula = classify_standard_module(ms, ctx, lines)?;
            let evaluation = opts
                .oracle
                .as_ref()
                .map(|oracle| formula.evaluate(oracle).to_string());
            Payload::Classify {
                formula: formula_out(&formula),
                evaluation,
            }
        }
        CommandKind::Mackey => {
            require_nonempty(ms)?;
            check_scale(ms)?;
            let mackey = classify_via_mackey(ms, ctx, lines)?;
            let classifier = classify_standard_module(ms, ctx, lines)?;
            let equivalent = formulas_equivalent(&mackey, &classifier);
            if !equivalent {
                diagnostics.push("classifier and Mackey formulas disagree; this is a bug".into());
            }
            Payload::Mackey {
                ordered: render_all(&ms.right_ordered(lines), lines),
                mackey_formula: formula_out(&mackey),
                classify_formula: formula_out(&classifier),
                equivalent,
            }
        }
        CommandKind::Verify => {
            if ms.is_empty() && opts.random.is_none() {
                return Err(Error::Precondition(
                    "verify needs a multisegment or --random N --seed S".into(),
                ));
            }
            check_scale(ms)?;
            let mut instances = 0u64;
            let mut nonadmissible_checked = 0u64;
            let mut counterexamples = 0u64;
            let mut failures: Vec<CounterexampleOut> = Vec::new();
            let mut session_detail = None;

            let mut absorb = |report: &ExclusionReport, lines: &LineSet| {
                for entry in &report.nonadmissible {
                    nonadmissible_checked += 1;
                    if entry.outcome.is_counterexample() {
                        counterexamples += 1;
                        if failures.len() < 20 {
                            failures.push(CounterexampleOut {
                                multisegment: render_all(&report.ordered, lines),
                                matrix: entry.matrix.rows(),
                            });
                        }
                    }
                }
            };

            if !ms.is_empty() {
                let report = verify_admissibility_exclusion(ms, ctx, lines);
                instances += 1;
                absorb(&report, lines);
                session_detail = Some(VerifyDetailOut {
                    ordered: render_all(&report.ordered, lines),
                    partition: report.partition.clone(),
                    matrices_total: report.matrices_total,
                    nonadmissible: report
                        .nonadmissible
                        .iter()
                        .map(|e| ExclusionEntryOut {
                            matrix: e.matrix.rows(),
                            outcome: e.outcome.render(),
                        })
                        .collect(),
                });
            }

            if let Some((count, seed)) = opts.random {
                if lines.is_empty() {
                    return Err(Error::Precondition(
                        "--random needs at least one declared line".into(),
                    ));
                }
                let mut rng = SplitMix64::new(seed);
                for _ in 0..count {
                    let random_ms = random_multisegment(lines, &mut rng, 4, 4, 4);
                    let report = verify_admissibility_exclusion(&random_ms, ctx, lines);
                    instances += 1;
                    absorb(&report, lines);
                }
            }

            if counterexamples > failures.len() as u64 {
                diagnostics.push(format!(
                    "failure list truncated to {} of {} counterexamples",
                    failures.len(),
                    counterexamples
                ));
            }
            Payload::Verify {
                instances,
                nonadmissible_checked,
                counterexamples,
                failures,
                session_detail,
            }
        }
        CommandKind::Jl => {
            require_nonempty(ms)?;
            let images = jl_multisegment(ms, lines, ctx)?;
            Payload::Jl {
                segments: images
                    .iter()
                    .map(|f| FSegmentOut {
                        line: f.line().render(lines),
                        left: render_half(f.a2()),
                        right: render_half(f.b2()),
                        k_f: f.k_f(),
                        group_size: f.group_size(),
                    })
                    .collect(),
            }
        }
        CommandKind::Cosets => {
            require_nonempty(ms)?;
            check_scale(ms)?;
            // partition in the order the session lists the segments
            let partition: Vec<u64> = ms.segments().iter().map(|s| s.group_size(lines)).collect();
            let matrices = enumerate_coset_matrices(&partition, ctx.d());
            Payload::Cosets {
                partition,
                count: matrices.len(),
                matrices: matrices
                    .iter()
                    .map(|m| CosetOut {
                        rows: m.rows(),
                        admissible: m.is_admissible(),
                        involution: m.involution().ok().map(|s| s.render()),
                    })
                    .collect(),
            }
        }
        CommandKind::Epsilon => {
            require_nonempty(ms)?;
            check_scale(ms)?;
            let n = ms.total_group_size(lines);
            if (n * ctx.d() as u64) % 2 != 0 {
                return Err(Error::NoEmbedding { n, d: ctx.d() });
            }
            let ordered = ms.right_ordered(lines);
            let sizes: Vec<u64> = ordered.iter().map(|s| s.group_size(lines)).collect();
            let omega: Vec<Sign> = ordered
                .iter()
                .map(|s| lines.line(s.line()).omega)
                .collect();
            let sigmas = distinguishing_involutions(&ordered, ctx, lines);
            if sigmas.is_empty() {
                diagnostics
                    .push("no valid involution: the standard module is not distinguished".into());
            }
            let mut cases = Vec::new();
            for sigma in sigmas {
                let rendered = sigma.render();
                let cfg = SignConfig::new(ctx, sigma, sizes.clone(), omega.clone())?;
                let total = total_sign(&cfg)?;
                let predicted = predicted_sign(n, ctx)?;
                cases.push(EpsilonCaseOut {
                    sigma: rendered,
                    total,
                    predicted,
                    matches: total == predicted,
                });
            }
            Payload::Epsilon {
                ordered: render_all(&ordered, lines),
                n,
                cases,
            }
        }
    };

    Ok(Report {
        command: cmd.name().to_string(),
        context: ContextOut {
            d: ctx.d(),
            eta: ctx.eta(),
        },
        result,
        diagnostics,
    })
}
