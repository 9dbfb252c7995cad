//! Command-line front end: `decide`, `solve`, `explain`, `table`, `audit`,
//! `compare`, and `clone` subcommands with `md`, `csv`, and `json` output.
//!
//! Exit codes: 0 when the command succeeds (for `decide`/`explain`, when the
//! proportion holds), 1 when a decided proportion fails, 2 on usage errors.
//! Output is byte-deterministic: fixed orderings, no timestamps.
//!
//! [`run`] does everything except touch the process: the binary is a thin
//! wrapper that prints the returned streams and exits with the code.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::axioms::{audit, AxiomReport};
use crate::clone::enumerate_term_functions;
use crate::engine::{
    explain, proportion, proportion_grid, solve, stable_arity_check, Direction, Evidence,
    Explanation, ExplanationDetail, Quadruple, StabilityReport,
};
use crate::formula::StructureSpec;
use crate::reference::comparison_table;
use crate::{ARITY_CAP, DEFAULT_ARITY};

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "boolprop",
    about = "Decide, solve, and explain analogical proportions a:b::c:d between booleans",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

fn parse_bit(s: &str) -> Result<u8, String> {
    match s {
        "0" => Ok(0),
        "1" => Ok(1),
        other => Err(format!("expected 0 or 1, got `{other}`")),
    }
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Decide whether a:b::c:d holds in a structure (exit 0 yes, 1 no)
    Decide {
        /// Structure spec, e.g. B | B,0 | B,neg | B,or,neg,0,1
        structure: String,
        #[arg(value_parser = parse_bit)]
        a: u8,
        #[arg(value_parser = parse_bit)]
        b: u8,
        #[arg(value_parser = parse_bit)]
        c: u8,
        #[arg(value_parser = parse_bit)]
        d: u8,
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        /// Also print the justification-level explanation
        #[arg(long)]
        explain: bool,
        /// Include trivial rules when listing justifications
        #[arg(long)]
        show_trivial: bool,
        /// Check verdict stability across arities 1..=3 first
        #[arg(long)]
        check_stability: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// List all solutions z of a:b::c:z in a structure
    Solve {
        structure: String,
        #[arg(value_parser = parse_bit)]
        a: u8,
        #[arg(value_parser = parse_bit)]
        b: u8,
        #[arg(value_parser = parse_bit)]
        c: u8,
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        #[arg(long)]
        check_stability: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Decide a:b::c:d and print rules and witnesses (exit 0 yes, 1 no)
    Explain {
        structure: String,
        #[arg(value_parser = parse_bit)]
        a: u8,
        #[arg(value_parser = parse_bit)]
        b: u8,
        #[arg(value_parser = parse_bit)]
        c: u8,
        #[arg(value_parser = parse_bit)]
        d: u8,
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        #[arg(long)]
        show_trivial: bool,
        #[arg(long)]
        check_stability: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Print the 16-row verdict table over one or more structures
    Table {
        #[arg(required = true)]
        structures: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        #[arg(long)]
        check_stability: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Audit the nine-axiom battery for a structure
    Audit {
        structure: String,
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Compare the engine against Klein's and Miclet's closed forms
    Compare {
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Dump the term operations of a structure with representative terms
    Clone {
        structure: String,
        #[arg(long, default_value_t = DEFAULT_ARITY, value_parser = clap::value_parser!(u8).range(1..=ARITY_CAP as i64))]
        arity: u8,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

/// Parses and executes an invocation. `args` must include the binary name.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                CliOutcome {
                    code: e.exit_code(),
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                CliOutcome {
                    code: e.exit_code(),
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match execute(cli.cmd) {
        Ok(outcome) => outcome,
        Err(message) => CliOutcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

fn parse_structure(text: &str) -> Result<StructureSpec, String> {
    text.parse::<StructureSpec>().map_err(|e| e.to_string())
}

fn bit(v: u8) -> bool {
    v == 1
}

fn tf(v: bool) -> &'static str {
    if v {
        "T"
    } else {
        "F"
    }
}

fn execute(cmd: Cmd) -> Result<CliOutcome, String> {
    match cmd {
        Cmd::Decide {
            structure,
            a,
            b,
            c,
            d,
            arity,
            explain: with_explanation,
            show_trivial,
            check_stability,
            format,
        } => {
            let s = parse_structure(&structure)?;
            let q = Quadruple::new(bit(a), bit(b), bit(c), bit(d));
            // representatives are only needed when the verdict gets explained
            let explanation = with_explanation
                .then(|| explain(&s, q, arity, show_trivial))
                .transpose()
                .map_err(|e| e.to_string())?;
            let verdict = match &explanation {
                Some(e) => e.verdict.clone(),
                None => proportion(&s, q, arity).map_err(|e| e.to_string())?,
            };
            let stability = run_stability(&s, check_stability)?;
            let holds = verdict.holds;
            let stdout = match format {
                Format::Md => {
                    let mut out = stability_text(&stability);
                    match &explanation {
                        Some(e) => out.push_str(&e.to_text()),
                        None => {
                            out.push_str(&verdict.headline());
                            out.push_str(&format!("  [arity {arity}]\n"));
                        }
                    }
                    out
                }
                Format::Csv => csv_table(
                    &["structure", "a", "b", "c", "d", "arity", "holds"],
                    &[vec![
                        s.to_string(),
                        a.to_string(),
                        b.to_string(),
                        c.to_string(),
                        d.to_string(),
                        arity.to_string(),
                        tf(holds).to_string(),
                    ]],
                ),
                Format::Json => {
                    let mut value = json!({
                        "structure": s.to_string(),
                        "arity": arity,
                        "proportion": quad_json(q),
                        "holds": holds,
                    });
                    if let Some(e) = &explanation {
                        value["explanation"] = explanation_json(e);
                    }
                    if let Some(report) = &stability {
                        value["stability"] = stability_json(report);
                    }
                    pretty(&value)
                }
            };
            Ok(CliOutcome {
                code: i32::from(!holds),
                stdout,
                stderr: String::new(),
            })
        }
        Cmd::Solve {
            structure,
            a,
            b,
            c,
            arity,
            check_stability,
            format,
        } => {
            let s = parse_structure(&structure)?;
            let solutions = solve(&s, bit(a), bit(b), bit(c), arity).map_err(|e| e.to_string())?;
            let stability = run_stability(&s, check_stability)?;
            let rendered: Vec<String> =
                solutions.iter().map(|d| u8::from(*d).to_string()).collect();
            let stdout = match format {
                Format::Md => format!(
                    "{}{} |= {}:{}::{}:z  for z in {{{}}}  [arity {}]\n",
                    stability_text(&stability),
                    s,
                    a,
                    b,
                    c,
                    rendered.join(", "),
                    arity
                ),
                Format::Csv => csv_table(
                    &["structure", "a", "b", "c", "arity", "solutions"],
                    &[vec![
                        s.to_string(),
                        a.to_string(),
                        b.to_string(),
                        c.to_string(),
                        arity.to_string(),
                        rendered.join(";"),
                    ]],
                ),
                Format::Json => {
                    let mut value = json!({
                        "structure": s.to_string(),
                        "arity": arity,
                        "equation": {"a": a, "b": b, "c": c},
                        "solutions": solutions.iter().map(|d| u8::from(*d)).collect::<Vec<_>>(),
                    });
                    if let Some(report) = &stability {
                        value["stability"] = stability_json(report);
                    }
                    pretty(&value)
                }
            };
            Ok(CliOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
        Cmd::Explain {
            structure,
            a,
            b,
            c,
            d,
            arity,
            show_trivial,
            check_stability,
            format,
        } => {
            let s = parse_structure(&structure)?;
            let q = Quadruple::new(bit(a), bit(b), bit(c), bit(d));
            let explanation = explain(&s, q, arity, show_trivial).map_err(|e| e.to_string())?;
            let stability = run_stability(&s, check_stability)?;
            let holds = explanation.verdict.holds;
            let stdout = match format {
                Format::Md => format!("{}{}", stability_text(&stability), explanation.to_text()),
                Format::Csv => explanation_csv(&explanation),
                Format::Json => {
                    let mut value = json!({
                        "structure": s.to_string(),
                        "arity": arity,
                        "proportion": quad_json(q),
                        "holds": holds,
                        "explanation": explanation_json(&explanation),
                    });
                    if let Some(report) = &stability {
                        value["stability"] = stability_json(report);
                    }
                    pretty(&value)
                }
            };
            Ok(CliOutcome {
                code: i32::from(!holds),
                stdout,
                stderr: String::new(),
            })
        }
        Cmd::Table {
            structures,
            arity,
            check_stability,
            format,
        } => {
            let specs: Vec<StructureSpec> = structures
                .iter()
                .map(|t| parse_structure(t))
                .collect::<Result<_, _>>()?;
            let grids: Vec<[bool; 16]> = specs
                .iter()
                .map(|s| proportion_grid(s, arity).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let mut stability_out = String::new();
            let mut stability_reports = Vec::new();
            if check_stability {
                for s in &specs {
                    let report = stable_arity_check(s, 1, ARITY_CAP).map_err(|e| e.to_string())?;
                    stability_out.push_str(&report.to_text());
                    stability_reports.push(report);
                }
            }
            let headers: Vec<String> = ["a", "b", "c", "d"]
                .iter()
                .map(|h| h.to_string())
                .chain(specs.iter().map(|s| s.to_string()))
                .collect();
            let rows: Vec<Vec<String>> = Quadruple::all()
                .map(|q| {
                    let mut row = vec![
                        u8::from(q.a).to_string(),
                        u8::from(q.b).to_string(),
                        u8::from(q.c).to_string(),
                        u8::from(q.d).to_string(),
                    ];
                    row.extend(grids.iter().map(|g| tf(g[q.row_index()]).to_string()));
                    row
                })
                .collect();
            let stdout = match format {
                Format::Md => format!("{stability_out}{}", md_table(&headers, &rows)),
                Format::Csv => {
                    // stability notes would corrupt the csv stream
                    let out = csv_table(&headers, &rows);
                    return Ok(CliOutcome {
                        code: 0,
                        stdout: out,
                        stderr: stability_out,
                    });
                }
                Format::Json => {
                    let mut value = json!({
                        "arity": arity,
                        "structures": specs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        "rows": Quadruple::all().map(|q| {
                            json!({
                                "a": u8::from(q.a),
                                "b": u8::from(q.b),
                                "c": u8::from(q.c),
                                "d": u8::from(q.d),
                                "verdicts": grids
                                    .iter()
                                    .map(|g| g[q.row_index()])
                                    .collect::<Vec<_>>(),
                            })
                        }).collect::<Vec<_>>(),
                    });
                    if !stability_reports.is_empty() {
                        value["stability"] =
                            Value::Array(stability_reports.iter().map(stability_json).collect());
                    }
                    pretty(&value)
                }
            };
            Ok(CliOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
        Cmd::Audit {
            structure,
            arity,
            format,
        } => {
            let s = parse_structure(&structure)?;
            let report = audit(&s, arity).map_err(|e| e.to_string())?;
            let stdout = match format {
                Format::Md => audit_md(&report),
                Format::Csv => csv_table(
                    &["axiom", "holds", "counterexamples"],
                    &report
                        .entries
                        .iter()
                        .map(|e| {
                            vec![
                                e.axiom.name().to_string(),
                                tf(e.holds).to_string(),
                                e.counterexamples
                                    .iter()
                                    .map(|ce| ce.to_string())
                                    .collect::<Vec<_>>()
                                    .join("; "),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
                Format::Json => pretty(&json!({
                    "structure": s.to_string(),
                    "arity": arity,
                    "axioms": report.entries.iter().map(|e| {
                        json!({
                            "axiom": e.axiom.name(),
                            "holds": e.holds,
                            "counterexamples": e.counterexamples
                                .iter()
                                .map(|ce| ce.bits())
                                .collect::<Vec<_>>(),
                        })
                    }).collect::<Vec<_>>(),
                })),
            };
            Ok(CliOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
        Cmd::Compare { arity, format } => {
            let rows = comparison_table(arity).map_err(|e| e.to_string())?;
            let headers: Vec<String> = [
                "a",
                "b",
                "c",
                "d",
                "Miclet",
                "Klein",
                "B,neg,0,1",
                "B,or,neg,0,1",
            ]
            .iter()
            .map(|h| h.to_string())
            .collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        u8::from(r.quadruple.a).to_string(),
                        u8::from(r.quadruple.b).to_string(),
                        u8::from(r.quadruple.c).to_string(),
                        u8::from(r.quadruple.d).to_string(),
                        tf(r.miclet).to_string(),
                        tf(r.klein).to_string(),
                        tf(r.neg_structure).to_string(),
                        tf(r.full_structure).to_string(),
                    ]
                })
                .collect();
            let stdout = match format {
                Format::Md => md_table(&headers, &cells),
                Format::Csv => csv_table(&headers, &cells),
                Format::Json => pretty(&json!({
                    "arity": arity,
                    "rows": rows.iter().map(|r| {
                        json!({
                            "a": u8::from(r.quadruple.a),
                            "b": u8::from(r.quadruple.b),
                            "c": u8::from(r.quadruple.c),
                            "d": u8::from(r.quadruple.d),
                            "miclet": r.miclet,
                            "klein": r.klein,
                            "neg_structure": r.neg_structure,
                            "full_structure": r.full_structure,
                        })
                    }).collect::<Vec<_>>(),
                })),
            };
            Ok(CliOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
        Cmd::Clone {
            structure,
            arity,
            format,
        } => {
            let s = parse_structure(&structure)?;
            let tfs = enumerate_term_functions(&s, arity).map_err(|e| e.to_string())?;
            let headers = vec!["table".to_string(), "representative".to_string()];
            let rows: Vec<Vec<String>> = tfs
                .iter()
                .map(|(t, f)| vec![t.to_string(), f.to_string()])
                .collect();
            let stdout = match format {
                Format::Md => md_table(&headers, &rows),
                Format::Csv => csv_table(&headers, &rows),
                Format::Json => pretty(&json!({
                    "structure": s.to_string(),
                    "arity": arity,
                    "functions": tfs.iter().map(|(t, f)| {
                        json!({
                            "table": t.values().iter().map(|v| u8::from(*v)).collect::<Vec<_>>(),
                            "representative": f.to_string(),
                        })
                    }).collect::<Vec<_>>(),
                })),
            };
            Ok(CliOutcome {
                code: 0,
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn run_stability(s: &StructureSpec, requested: bool) -> Result<Option<StabilityReport>, String> {
    if !requested {
        return Ok(None);
    }
    stable_arity_check(s, 1, ARITY_CAP)
        .map(Some)
        .map_err(|e| e.to_string())
}

fn stability_text(report: &Option<StabilityReport>) -> String {
    report
        .as_ref()
        .map(StabilityReport::to_text)
        .unwrap_or_default()
}

fn quad_json(q: Quadruple) -> Value {
    json!({
        "a": u8::from(q.a),
        "b": u8::from(q.b),
        "c": u8::from(q.c),
        "d": u8::from(q.d),
    })
}

fn bits_json(bits: &[bool]) -> Value {
    Value::Array(bits.iter().map(|v| json!(u8::from(*v))).collect())
}

fn stability_json(report: &StabilityReport) -> Value {
    json!({
        "structure": report.structure.to_string(),
        "lo": report.lo,
        "hi": report.hi,
        "passed": report.passed(),
        "disagreements": report.disagreements.iter().map(|d| {
            json!({
                "quadruple": quad_json(d.quadruple),
                "verdicts": d.verdicts.iter().map(|(n, v)| {
                    json!({"arity": n, "holds": v})
                }).collect::<Vec<_>>(),
            })
        }).collect::<Vec<_>>(),
    })
}

fn explanation_json(e: &Explanation) -> Value {
    match &e.detail {
        ExplanationDetail::Justified {
            shown,
            member_count,
            nontrivial_count,
        } => json!({
            "kind": "justified",
            "members": member_count,
            "nontrivial": nontrivial_count,
            "rules": shown.iter().map(|r| {
                json!({
                    "phi": r.phi,
                    "psi": r.psi,
                    "witness_source": bits_json(&r.source_witness),
                    "witness_target": bits_json(&r.target_witness),
                })
            }).collect::<Vec<_>>(),
        }),
        ExplanationDetail::Refuted { distinguishing } => {
            let si = match &e.verdict.evidence {
                Evidence::StrictInclusion(si) => si,
                Evidence::Maximal { .. } => unreachable!("refutation carries an inclusion"),
            };
            json!({
                "kind": "refuted",
                "direction": match si.direction {
                    Direction::Forward => "forward",
                    Direction::Backward => "backward",
                },
                "smaller": {
                    "quadruple": quad_json(si.smaller.quadruple()),
                    "members": si.smaller.len(),
                },
                "larger": {
                    "quadruple": quad_json(si.larger.quadruple()),
                    "members": si.larger.len(),
                },
                "distinguishing": {
                    "phi": distinguishing.phi,
                    "psi": distinguishing.psi,
                    "witness_source": bits_json(&distinguishing.source_witness),
                    "witness_target": bits_json(&distinguishing.target_witness),
                },
            })
        }
    }
}

fn explanation_csv(e: &Explanation) -> String {
    let headers = ["phi", "psi", "witness_source", "witness_target"];
    let render_bits = |bits: &[bool]| {
        bits.iter()
            .map(|v| u8::from(*v).to_string())
            .collect::<Vec<_>>()
            .join(";")
    };
    let rows: Vec<Vec<String>> = match &e.detail {
        ExplanationDetail::Justified { shown, .. } => shown
            .iter()
            .map(|r| {
                vec![
                    r.phi.clone(),
                    r.psi.clone(),
                    render_bits(&r.source_witness),
                    render_bits(&r.target_witness),
                ]
            })
            .collect(),
        ExplanationDetail::Refuted { distinguishing } => vec![vec![
            distinguishing.phi.clone(),
            distinguishing.psi.clone(),
            render_bits(&distinguishing.source_witness),
            render_bits(&distinguishing.target_witness),
        ]],
    };
    csv_table(&headers, &rows)
}

fn audit_md(report: &AxiomReport) -> String {
    let headers = vec![
        "axiom".to_string(),
        "holds".to_string(),
        "counterexamples".to_string(),
    ];
    let rows: Vec<Vec<String>> = report
        .entries
        .iter()
        .map(|e| {
            vec![
                e.axiom.name().to_string(),
                tf(e.holds).to_string(),
                e.counterexamples
                    .iter()
                    .map(|ce| ce.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            ]
        })
        .collect();
    md_table(&headers, &rows)
}

fn pretty(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("valid json");
    out.push('\n');
    out
}

fn md_table<H: AsRef<str>>(headers: &[H], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    // cell content may contain `|` (formula representatives do)
    let escape = |cell: &str| cell.replace('|', "\\|");
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(|c| escape(c)).collect())
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.as_ref().len()).collect();
    for row in &rows {
        debug_assert_eq!(row.len(), cols);
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        out.push('|');
        for (j, cell) in cells.iter().enumerate() {
            out.push(' ');
            out.push_str(cell);
            out.push_str(&" ".repeat(widths[j] - cell.len()));
            out.push_str(" |");
        }
        out.push('\n');
    };
    emit(
        &mut out,
        &headers
            .iter()
            .map(|h| h.as_ref().to_string())
            .collect::<Vec<_>>(),
    );
    emit(
        &mut out,
        &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>(),
    );
    for row in &rows {
        emit(&mut out, row);
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_table<H: AsRef<str>>(headers: &[H], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(
        &headers
            .iter()
            .map(|h| csv_field(h.as_ref()))
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for row in rows {
        out.push_str(
            &row.iter()
                .map(|c| csv_field(c))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}
