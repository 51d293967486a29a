//! Truth-table-to-circuit synthesis and circuit evaluation.
//!
//! The compiled circuit puts a Hadamard on every register qubit, runs the
//! bias cascade U_{0,2^n−1}, …, U_{0,1} to concentrate amplitude on |0⟩,
//! and then, for each table entry with output value k ≥ 1, a two-level X
//! on the pair (|0⟩, |k⟩) controlled by the entry's input pattern on the
//! ancilla wires. An input matching entry k therefore fires exactly one
//! flip, moving the concentrated amplitude onto |f(input)⟩.
//!
//! Ancillas start in a basis state and only ever act as controls, so the
//! default evaluation path simulates the n register qubits and resolves
//! ancilla controls classically. `output_distribution_full` runs the
//! genuine 2n-qubit register for cross-checking.

use rand::Rng;

use crate::bits::{BasisIndex, BitString};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::gate::{Circuit, Gate, Polarity};
use crate::scalar::Real;
use crate::seeding::trial_rng;
use crate::statevector::StateVector;
use crate::theta::{check_eq3, ThetaPolicy};
use crate::truth_table::TruthTable;

/// A compiled circuit plus any non-fatal compile diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Compiled<R: Real> {
    pub circuit: Circuit<R>,
    pub warnings: Vec<String>,
}

/// Synthesize the circuit for a truth table under an angle policy.
pub fn compile_circuit<R: Real>(tt: &TruthTable, policy: &ThetaPolicy<R>) -> Result<Compiled<R>> {
    if policy.n as usize != tt.n {
        return Err(Error::Config(format!(
            "policy width {} does not match table width {}",
            policy.n, tt.n
        )));
    }
    let n = tt.n;
    let mut warnings = Vec::new();
    if !check_eq3(policy.n, policy.theta)? {
        warnings.push(format!(
            "theta {} fails the feasibility inequality at n={n}; the circuit is well-defined \
             but the majority-success guarantee does not hold",
            policy.theta
        ));
    }

    let register: Vec<usize> = (0..n).collect();
    let mut circuit = Circuit::new(n, n);

    for q in 0..n {
        circuit.gates.push(Gate::Hadamard { target: q });
    }
    for i in (1..1usize << n).rev() {
        circuit.gates.push(Gate::TwoLevelBias {
            theta: policy.theta,
            pair_index: i,
            register: register.clone(),
        });
    }
    // entry 0 needs no flip: |0⟩ already carries the concentrated amplitude
    for (k, entry) in tt.entries.iter().enumerate().skip(1) {
        let controls = (0..n)
            .map(|j| {
                let polarity = if entry.input.bit(j) {
                    Polarity::Positive
                } else {
                    Polarity::Negative
                };
                (n + j, polarity)
            })
            .collect();
        circuit.gates.push(Gate::ControlledTwoLevelX {
            pair_index: k,
            register: register.clone(),
            controls,
        });
    }

    Ok(Compiled { circuit, warnings })
}

fn check_input_width<R: Real>(circuit: &Circuit<R>, input: &BitString) -> Result<()> {
    if input.len() != circuit.n_ancilla {
        return Err(Error::Config(format!(
            "input width {} does not match the {} ancilla wires",
            input.len(),
            circuit.n_ancilla
        )));
    }
    Ok(())
}

/// Register state just before measurement, with the ancillas treated as
/// classical control bits fixed to `input`.
pub fn register_state<R: Real>(circuit: &Circuit<R>, input: &BitString) -> Result<StateVector<R>> {
    check_input_width(circuit, input)?;
    let n = circuit.n_register;
    let mut state = StateVector::init_basis(n, BasisIndex(0))?;
    for gate in &circuit.gates {
        match gate {
            Gate::ControlledTwoLevelX {
                pair_index,
                register,
                controls,
            } => {
                let mut quantum_controls = Vec::new();
                let mut fires = true;
                for &(q, pol) in controls {
                    if q < n {
                        quantum_controls.push((q, pol));
                    } else {
                        let bit = input.bit(q - n);
                        if bit != (pol == Polarity::Positive) {
                            fires = false;
                        }
                    }
                }
                if fires {
                    state.apply_two_level(
                        &crate::gate::x_matrix(),
                        *pair_index,
                        register,
                        &quantum_controls,
                    )?;
                }
            }
            other => {
                if other.qubits().iter().any(|&q| q >= n) {
                    return Err(Error::Config(
                        "gate acts on an ancilla wire; classical-ancilla evaluation \
                         only supports ancillas as controls"
                            .to_string(),
                    ));
                }
                state.apply_gate(other)?;
            }
        }
    }
    Ok(state)
}

/// Exact Born-rule distribution of the register measurement.
pub fn output_distribution<R: Real>(
    circuit: &Circuit<R>,
    input: &BitString,
) -> Result<Distribution<R>> {
    let state = register_state(circuit, input)?;
    let probs = (0..state.dim())
        .map(|k| state.probability_of(BasisIndex(k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Distribution::from_probs(circuit.n_register, probs))
}

/// The same distribution computed on the full register+ancilla state, with
/// the ancillas as genuine qubits initialized to `input`.
pub fn output_distribution_full<R: Real>(
    circuit: &Circuit<R>,
    input: &BitString,
) -> Result<Distribution<R>> {
    check_input_width(circuit, input)?;
    let n = circuit.n_register;
    let total = circuit.total_qubits();
    let mut state = StateVector::init_basis(total, BasisIndex(input.to_index().0))?;
    for gate in &circuit.gates {
        state.apply_gate(gate)?;
    }
    // marginalize the ancillas out of the register distribution
    let mut probs = vec![R::zero(); 1 << n];
    for k in 0..state.dim() {
        probs[k >> (total - n)] += state.probability_of(BasisIndex(k))?;
    }
    Ok(Distribution::from_probs(n, probs))
}

/// One sampled run of the circuit on `input`.
pub fn evaluate<R: Real, G: Rng + ?Sized>(
    circuit: &Circuit<R>,
    input: &BitString,
    rng: &mut G,
) -> Result<BitString> {
    Ok(output_distribution(circuit, input)?.sample(rng))
}

/// `trials` independent runs, trial i drawing from the seed-split stream
/// of `master_seed` (see [`crate::seeding`]).
pub fn run_trials<R: Real>(
    circuit: &Circuit<R>,
    input: &BitString,
    trials: u64,
    master_seed: u64,
) -> Result<Vec<BitString>> {
    let dist = output_distribution(circuit, input)?;
    Ok((0..trials)
        .map(|i| dist.sample(&mut trial_rng(master_seed, i)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::eq3_lhs;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_4;

    fn complement() -> Compiled<f64> {
        let tt = TruthTable::parse(&["11:00", "10:01", "01:10", "00:11"]).unwrap();
        compile_circuit(&tt, &ThetaPolicy::for_width(2).unwrap()).unwrap()
    }

    fn identity2() -> Compiled<f64> {
        let tt = TruthTable::parse(&["00:00", "01:01", "10:10", "11:11"]).unwrap();
        compile_circuit(&tt, &ThetaPolicy::for_width(2).unwrap()).unwrap()
    }

    fn control_pattern(gate: &Gate<f64>) -> String {
        match gate {
            Gate::ControlledTwoLevelX { controls, .. } => controls
                .iter()
                .map(|&(_, p)| if p == Polarity::Positive { '1' } else { '0' })
                .collect(),
            _ => panic!("not a flip gate"),
        }
    }

    #[test]
    fn complement_circuit_structure() {
        let c = complement().circuit;
        assert_eq!(c.gates.len(), 8);
        assert!(matches!(c.gates[0], Gate::Hadamard { target: 0 }));
        assert!(matches!(c.gates[1], Gate::Hadamard { target: 1 }));
        for (pos, pair) in [(2, 3), (3, 2), (4, 1)] {
            match &c.gates[pos] {
                Gate::TwoLevelBias {
                    theta, pair_index, ..
                } => {
                    assert_eq!(*pair_index, pair);
                    assert!((theta - FRAC_PI_4).abs() < 1e-15);
                }
                other => panic!("expected bias at {pos}, got {other:?}"),
            }
        }
        assert_eq!(control_pattern(&c.gates[5]), "10");
        assert_eq!(control_pattern(&c.gates[6]), "01");
        assert_eq!(control_pattern(&c.gates[7]), "00");
        assert!(crate::gate::validate_gate_set(&c).is_empty());
    }

    #[test]
    fn identity_circuit_controls() {
        let c = identity2().circuit;
        assert_eq!(control_pattern(&c.gates[5]), "01");
        assert_eq!(control_pattern(&c.gates[6]), "10");
        assert_eq!(control_pattern(&c.gates[7]), "11");
    }

    #[test]
    fn n3_gate_counts() {
        let tt = TruthTable::from_permutation(3, &[3, 1, 4, 0, 2, 7, 5, 6]).unwrap();
        let c = compile_circuit(&tt, &ThetaPolicy::<f64>::for_width(3).unwrap())
            .unwrap()
            .circuit;
        let hadamards = c
            .gates
            .iter()
            .filter(|g| matches!(g, Gate::Hadamard { .. }))
            .count();
        let biases = c
            .gates
            .iter()
            .filter(|g| matches!(g, Gate::TwoLevelBias { .. }))
            .count();
        let flips = c
            .gates
            .iter()
            .filter(|g| matches!(g, Gate::ControlledTwoLevelX { .. }))
            .count();
        assert_eq!((hadamards, biases, flips), (3, 7, 7));
    }

    #[test]
    fn complement_distribution_on_01() {
        let c = complement().circuit;
        let d = output_distribution(&c, &"01".parse().unwrap()).unwrap();
        let (best, p) = d.argmax();
        assert_eq!(best.to_string(), "10");
        assert!((p - 0.9160533905932737).abs() < 1e-9);
        assert!((d.total() - 1.0).abs() < 1e-9);
        assert!((d.prob_of(&"01".parse().unwrap()) - 0.0625).abs() < 1e-12);
        assert!((d.prob_of(&"00".parse().unwrap()) - 0.021446609406726238).abs() < 1e-12);
    }

    #[test]
    fn complement_entry_zero_needs_no_flip() {
        let c = complement().circuit;
        let d = output_distribution(&c, &"11".parse().unwrap()).unwrap();
        let (best, p) = d.argmax();
        assert_eq!(best.to_string(), "00");
        assert!((p - 0.9160533905932737).abs() < 1e-9);
    }

    #[test]
    fn success_probability_is_input_independent() {
        let c = complement().circuit;
        let tt = TruthTable::parse(&["11:00", "10:01", "01:10", "00:11"]).unwrap();
        let expect = eq3_lhs(2, FRAC_PI_4).unwrap().powi(2);
        for k in 0..4 {
            let input = BasisIndex(k).to_bitstring(2);
            let d = output_distribution(&c, &input).unwrap();
            let f = tt.apply(&input).unwrap();
            assert!((d.prob_of(f) - expect).abs() < 1e-9, "input {input}");
        }
    }

    #[test]
    fn headline_claim_for_random_n3_bijections() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let policy = ThetaPolicy::<f64>::for_width(3).unwrap();
        let expect = eq3_lhs(3, policy.theta).unwrap().powi(2);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..8).collect();
            perm.shuffle(&mut rng);
            let tt = TruthTable::from_permutation(3, &perm).unwrap();
            let c = compile_circuit(&tt, &policy).unwrap().circuit;
            for k in 0..8 {
                let input = BasisIndex(k).to_bitstring(3);
                let d = output_distribution(&c, &input).unwrap();
                let (best, p) = d.argmax();
                assert_eq!(&best, tt.apply(&input).unwrap());
                assert!((p - expect).abs() < 1e-9);
                assert!(p > 0.5);
            }
        }
    }

    #[test]
    fn reduced_matches_full_simulation() {
        for compiled in [complement(), identity2()] {
            for k in 0..4 {
                let input = BasisIndex(k).to_bitstring(2);
                let reduced = output_distribution(&compiled.circuit, &input).unwrap();
                let full = output_distribution_full(&compiled.circuit, &input).unwrap();
                assert!(reduced.max_abs_diff(&full) < 1e-12);
            }
        }
    }

    #[test]
    fn cascade_amplitude_matches_closed_form_up_to_n6() {
        // links the inequality's left-hand side to the construction
        for n in 1..=6u32 {
            let policy = ThetaPolicy::<f64>::for_width(n.max(2)).unwrap();
            let theta = policy.theta;
            let mut state = StateVector::init_basis(n as usize, BasisIndex(0)).unwrap();
            for q in 0..n as usize {
                state.apply_gate(&Gate::Hadamard { target: q }).unwrap();
            }
            let register: Vec<usize> = (0..n as usize).collect();
            for i in (1..1usize << n).rev() {
                state
                    .apply_gate(&Gate::TwoLevelBias {
                        theta,
                        pair_index: i,
                        register: register.clone(),
                    })
                    .unwrap();
            }
            let a0 = state.amplitude(BasisIndex(0)).unwrap().re;
            let lhs = eq3_lhs(n, theta).unwrap();
            assert!((a0 - lhs).abs() < 1e-9, "n={n}: {a0} vs {lhs}");
        }
    }

    #[test]
    fn sampling_frequency_and_replay() {
        let c = complement().circuit;
        let input: BitString = "01".parse().unwrap();
        let outputs = run_trials(&c, &input, 10_000, 2024).unwrap();
        let hits = outputs.iter().filter(|b| b.to_string() == "10").count();
        let freq = hits as f64 / outputs.len() as f64;
        assert!((freq - 0.916).abs() < 0.02, "frequency {freq}");
        // same seed, same outputs
        assert_eq!(outputs, run_trials(&c, &input, 10_000, 2024).unwrap());
    }

    #[test]
    fn width_mismatch_is_a_configuration_error() {
        let c = complement().circuit;
        assert!(matches!(
            output_distribution(&c, &"011".parse().unwrap()),
            Err(Error::Config(_))
        ));
        let tt = TruthTable::parse(&["0:0", "1:1"]).unwrap();
        assert!(matches!(
            compile_circuit(&tt, &ThetaPolicy::<f64>::for_width(2).unwrap()),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn infeasible_theta_warns_but_compiles() {
        // n=1 policy angle is π/2, which misses the strict inequality
        let tt = TruthTable::parse(&["1:0", "0:1"]).unwrap();
        let policy = ThetaPolicy::<f64>::for_width(1).unwrap();
        let compiled = compile_circuit(&tt, &policy).unwrap();
        assert_eq!(compiled.warnings.len(), 1);
        assert_eq!(compiled.circuit.gates.len(), 1 + 1 + 1);
    }
}
