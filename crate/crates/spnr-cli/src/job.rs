//! The stdin-driven job: truth-table lines, one input, one run mode.
//!
//! Input layout (read from stdin):
//!
//! ```text
//!   00:00        ← 2^n truth-table lines, increasing output order
//!   01:01
//!   10:10
//!   11:11
//!   01           ← the input to evaluate
//!   S            ← run mode: A (amplitudes), P (print), S (simulate)
//! ```
//!
//! Mode A reports the register amplitudes just before measurement with the
//! ancillas initialized to the input line. Mode P prints the compiled
//! circuit. Mode S prints one sampled output per trial (default 100).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::json;
use spnr::compiler::{compile_circuit, output_distribution, register_state, run_trials};
use spnr::render::{render_circuit, RenderFormat};
use spnr::theta::ThetaPolicy;
use spnr::truth_table::TruthTable;
use spnr::{BasisIndex, BitString, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Amplitudes,
    Print,
    Simulate,
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub table_lines: Vec<String>,
    pub input: BitString,
    pub mode: Mode,
    pub trials: u64,
    pub seed: Option<u64>,
    pub format: OutputFormat,
}

/// Split raw stdin into table lines, input line, and mode line. Trailing
/// blank lines are tolerated and stripped.
pub fn stdin_driver(raw: &str) -> Result<JobSpec, Error> {
    let mut lines: Vec<&str> = raw.lines().map(str::trim_end).collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.len() < 3 {
        return Err(Error::TableShape {
            line: lines.len(),
            message: format!(
                "expected at least 3 lines (table, input, mode), got {}",
                lines.len()
            ),
        });
    }
    let mode = match lines.pop().unwrap().trim() {
        "A" => Mode::Amplitudes,
        "P" => Mode::Print,
        "S" => Mode::Simulate,
        other => return Err(Error::Usage(format!("unknown mode `{other}`"))),
    };
    let input_line = lines.pop().unwrap().trim();
    let input: BitString = input_line.parse().map_err(|_| Error::TableSyntax {
        line: lines.len() + 1,
        message: format!("invalid input line `{input_line}`"),
    })?;
    Ok(JobSpec {
        table_lines: lines.iter().map(|l| l.trim().to_string()).collect(),
        input,
        mode,
        trials: 100,
        seed: None,
        format: OutputFormat::Plain,
    })
}

pub struct JobOutput {
    pub stdout: String,
    pub stderr: Vec<String>,
}

/// Run a job. The returned stdout is fully determined by (spec, seed).
pub fn run_job(spec: &JobSpec) -> Result<JobOutput, Error> {
    let table = TruthTable::parse(&spec.table_lines)?;
    if spec.input.len() != table.n {
        return Err(Error::Config(format!(
            "input width {} does not match the {}-bit table",
            spec.input.len(),
            table.n
        )));
    }
    let policy = ThetaPolicy::<f64>::for_width(table.n as u32)?;
    let compiled = compile_circuit(&table, &policy)?;
    let mut stderr: Vec<String> = compiled
        .warnings
        .iter()
        .map(|w| format!("warning: {w}"))
        .collect();
    let circuit = compiled.circuit;

    let stdout = match spec.mode {
        Mode::Print => {
            let text = render_circuit(&circuit, RenderFormat::Text);
            match spec.format {
                OutputFormat::Plain => text,
                OutputFormat::Json => {
                    let mut out = json!({ "circuit": text }).to_string();
                    out.push('\n');
                    out
                }
            }
        }
        Mode::Amplitudes => {
            let state = register_state(&circuit, &spec.input)?;
            match spec.format {
                OutputFormat::Plain => {
                    let mut out = String::new();
                    for k in 0..state.dim() {
                        let a = state.amplitude(BasisIndex(k))?;
                        let label = BasisIndex(k).to_bitstring(table.n);
                        writeln!(out, "{label}: {:.6}{:+.6}i", unsign_zero(a.re), unsign_zero(a.im))
                            .unwrap();
                    }
                    out
                }
                OutputFormat::Json => {
                    let mut amplitudes = BTreeMap::new();
                    for k in 0..state.dim() {
                        let a = state.amplitude(BasisIndex(k))?;
                        amplitudes.insert(
                            BasisIndex(k).to_bitstring(table.n).to_string(),
                            vec![unsign_zero(a.re), unsign_zero(a.im)],
                        );
                    }
                    let dist = output_distribution(&circuit, &spec.input)?;
                    let mut out = json!({
                        "amplitudes": amplitudes,
                        "distribution": dist.to_map(),
                    })
                    .to_string();
                    out.push('\n');
                    out
                }
            }
        }
        Mode::Simulate => {
            let (seed, noted) = resolve_seed(spec.seed);
            if let Some(note) = noted {
                stderr.push(note);
            }
            let outputs = run_trials(&circuit, &spec.input, spec.trials, seed)?;
            match spec.format {
                OutputFormat::Plain => {
                    let mut out = String::new();
                    for o in &outputs {
                        writeln!(out, "{o}").unwrap();
                    }
                    out
                }
                OutputFormat::Json => {
                    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
                    for o in &outputs {
                        *counts.entry(o.to_string()).or_default() += 1;
                    }
                    let dist = output_distribution(&circuit, &spec.input)?;
                    let mut out = json!({
                        "seed": seed,
                        "trials": spec.trials,
                        "counts": counts,
                        "distribution": dist.to_map(),
                    })
                    .to_string();
                    out.push('\n');
                    out
                }
            }
        }
    };
    Ok(JobOutput { stdout, stderr })
}

/// Anything that rounds to zero at the printed precision is reported as a
/// plain 0.000000 rather than -0.000000.
fn unsign_zero(x: f64) -> f64 {
    if x.abs() < 5e-7 {
        0.0
    } else {
        x
    }
}

/// Use the given seed, or draw one from system entropy and report it so
/// the run can be reproduced.
pub fn resolve_seed(seed: Option<u64>) -> (u64, Option<String>) {
    match seed {
        Some(s) => (s, None),
        None => {
            let s: u64 = rand::random();
            (s, Some(format!("seed: {s}")))
        }
    }
}
