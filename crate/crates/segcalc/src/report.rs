//! Structured command reports: a JSON-serializable payload per command plus a
//! plain-text renderer. Field order is fixed by the struct definitions and all
//! collections are deterministically ordered, so identical inputs produce
//! byte-identical reports.

use serde::Serialize;

use crate::sign::Sign;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub context: ContextOut,
    pub result: Payload,
    pub diagnostics: Vec<String>,
}

impl Report {
    /// True when a `verify` run found a counterexample (reserved exit code 4).
    pub fn counterexample_found(&self) -> bool {
        matches!(&self.result, Payload::Verify { counterexamples, .. } if *counterexamples > 0)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} (d = {}, eta = {})\n",
            self.command, self.context.d, self.context.eta
        ));
        match &self.result {
            Payload::Order {
                segments,
                totally_unlinked,
            } => {
                out.push_str(&format!("  right-ordered: {}\n", segments.join(" + ")));
                out.push_str(&format!("  totally unlinked: {totally_unlinked}\n"));
            }
            Payload::Classify {
                formula,
                evaluation,
            } => {
                out.push_str(&format!("  formula: {}\n", formula.display));
                if let Some(v) = evaluation {
                    out.push_str(&format!("  oracle verdict: {v}\n"));
                }
            }
            Payload::Mackey {
                ordered,
                mackey_formula,
                classify_formula,
                equivalent,
            } => {
                out.push_str(&format!("  right-ordered: {}\n", ordered.join(" + ")));
                out.push_str(&format!("  mackey formula: {}\n", mackey_formula.display));
                out.push_str(&format!(
                    "  classifier formula: {}\n",
                    classify_formula.display
                ));
                out.push_str(&format!("  equivalent: {equivalent}\n"));
            }
            Payload::Verify {
                instances,
                nonadmissible_checked,
                counterexamples,
                failures,
                session_detail,
            } => {
                out.push_str(&format!("  instances checked: {instances}\n"));
                out.push_str(&format!(
                    "  non-admissible matrices checked: {nonadmissible_checked}\n"
                ));
                out.push_str(&format!("  counterexamples: {counterexamples}\n"));
                if let Some(detail) = session_detail {
                    out.push_str(&format!(
                        "  session instance: {}\n",
                        detail.ordered.join(" + ")
                    ));
                    for entry in &detail.nonadmissible {
                        out.push_str(&format!(
                            "    {:?} -> {}\n",
                            entry.matrix, entry.outcome
                        ));
                    }
                }
                for f in failures {
                    out.push_str(&format!(
                        "  COUNTEREXAMPLE {} under {:?}\n",
                        f.multisegment.join(" + "),
                        f.matrix
                    ));
                }
            }
            Payload::Jl { segments } => {
                for s in segments {
                    out.push_str(&format!(
                        "  {}[{},{}]  k_f = {}, group size = {}\n",
                        s.line, s.left, s.right, s.k_f, s.group_size
                    ));
                }
            }
            Payload::Cosets {
                partition,
                count,
                matrices,
            } => {
                out.push_str(&format!("  partition: {partition:?}\n"));
                out.push_str(&format!("  |I(P)| = {count}\n"));
                for m in matrices {
                    let mark = if m.admissible { "admissible" } else { "-" };
                    let sigma = m.involution.as_deref().unwrap_or("");
                    out.push_str(&format!("  {:?} {mark} {sigma}\n", m.rows));
                }
            }
            Payload::Epsilon { ordered, n, cases } => {
                out.push_str(&format!("  segments: {}\n", ordered.join(" + ")));
                out.push_str(&format!("  n = {n}\n"));
                for c in cases {
                    out.push_str(&format!(
                        "  sigma = {}: total {} predicted {} match = {}\n",
                        c.sigma, c.total, c.predicted, c.matches
                    ));
                }
            }
        }
        for d in &self.diagnostics {
            out.push_str(&format!("  note: {d}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContextOut {
    pub d: u32,
    pub eta: Sign,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Order {
        segments: Vec<String>,
        totally_unlinked: bool,
    },
    Classify {
        formula: FormulaOut,
        evaluation: Option<String>,
    },
    Mackey {
        ordered: Vec<String>,
        mackey_formula: FormulaOut,
        classify_formula: FormulaOut,
        equivalent: bool,
    },
    Verify {
        instances: u64,
        nonadmissible_checked: u64,
        counterexamples: u64,
        failures: Vec<CounterexampleOut>,
        session_detail: Option<VerifyDetailOut>,
    },
    Jl {
        segments: Vec<FSegmentOut>,
    },
    Cosets {
        partition: Vec<u64>,
        count: usize,
        matrices: Vec<CosetOut>,
    },
    Epsilon {
        ordered: Vec<String>,
        n: u64,
        cases: Vec<EpsilonCaseOut>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaOut {
    pub display: String,
    /// Disjunction of conjunctions of atom labels; TRUE is `[[]]`, FALSE `[]`.
    pub clauses: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FSegmentOut {
    pub line: String,
    pub left: String,
    pub right: String,
    pub k_f: u32,
    pub group_size: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetOut {
    pub rows: Vec<Vec<u64>>,
    pub admissible: bool,
    pub involution: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EpsilonCaseOut {
    pub sigma: String,
    pub total: Sign,
    pub predicted: Sign,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleOut {
    pub multisegment: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDetailOut {
    pub ordered: Vec<String>,
    pub partition: Vec<u64>,
    pub matrices_total: usize,
    pub nonadmissible: Vec<ExclusionEntryOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionEntryOut {
    pub matrix: Vec<Vec<u64>>,
    pub outcome: String,
}
