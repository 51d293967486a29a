//! Deterministic circuit rendering: a one-gate-per-line text form and a
//! DOT graph form.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gate::{Circuit, Gate, Polarity};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Dot,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "dot" => Ok(RenderFormat::Dot),
            other => Err(Error::Usage(other.to_string())),
        }
    }
}

/// Wire label: register qubits are `q0, q1, …`, ancillas `a0, a1, …`.
fn wire<R: Real>(circuit: &Circuit<R>, q: usize) -> String {
    if q < circuit.n_register {
        format!("q{q}")
    } else {
        format!("a{}", q - circuit.n_register)
    }
}

fn gate_label<R: Real>(circuit: &Circuit<R>, gate: &Gate<R>) -> String {
    match gate {
        Gate::Hadamard { target } => format!("H {}", wire(circuit, *target)),
        Gate::Swap { a, b } => format!("swap {} {}", wire(circuit, *a), wire(circuit, *b)),
        Gate::TwoLevelBias {
            theta,
            pair_index,
            register,
        } => {
            let regs: Vec<String> = register.iter().map(|&q| wire(circuit, q)).collect();
            format!("bias theta={theta} pair={pair_index} reg=[{}]", regs.join(" "))
        }
        Gate::ControlledTwoLevelX {
            pair_index,
            register,
            controls,
        } => {
            let regs: Vec<String> = register.iter().map(|&q| wire(circuit, q)).collect();
            let ctls: Vec<String> = controls
                .iter()
                .map(|&(q, pol)| {
                    let sign = if pol == Polarity::Positive { "+" } else { "-" };
                    format!("{sign}{}", wire(circuit, q))
                })
                .collect();
            format!(
                "cx pair={pair_index} reg=[{}] ctl=[{}]",
                regs.join(" "),
                ctls.join(" ")
            )
        }
    }
}

/// Render a circuit. Byte-identical output for equal circuits.
pub fn render_circuit<R: Real>(circuit: &Circuit<R>, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => {
            let mut out = format!(
                "# {} register + {} ancilla\n",
                circuit.n_register, circuit.n_ancilla
            );
            for gate in &circuit.gates {
                out.push_str(&gate_label(circuit, gate));
                out.push('\n');
            }
            out
        }
        RenderFormat::Dot => {
            let mut out = String::from("digraph circuit {\n  rankdir=LR;\n");
            for (k, gate) in circuit.gates.iter().enumerate() {
                let label = gate_label(circuit, gate).replace('"', "\\\"");
                writeln!(out, "  g{k} [label=\"{label}\"];").unwrap();
            }
            for k in 1..circuit.gates.len() {
                writeln!(out, "  g{} -> g{};", k - 1, k).unwrap();
            }
            out.push_str("}\n");
            out
        }
    }
}
