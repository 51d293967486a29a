//! Layered networks mixing hard-threshold units with quantum blocks.
//!
//! A network is a feed-forward stack of layers. Each layer partitions its
//! units between classical threshold units (weighted sum plus offset,
//! g(x) = 1 iff x ≥ 0) and quantum blocks: a p-qubit circuit over the
//! restricted gate set whose qubits are each wired to exactly one unit of
//! the previous layer with unit weight. A block initializes its qubits to
//! the wired values, applies its circuit, and projectively measures; bit r
//! of the outcome becomes the value of the block's r-th unit.
//!
//! `eval_network` samples one pass; `network_distribution` enumerates
//! every intermediate measurement branch for the exact distribution.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{BasisIndex, BitString};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::gate::validate_gate_set;
use crate::gate::Circuit;
use crate::scalar::Real;
use crate::statevector::StateVector;

pub const DEFAULT_BRANCH_CAP: u64 = 1 << 20;

/// A hard-threshold unit: 1 iff Σ wᵢvᵢ + d ≥ 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalUnit<R: Real> {
    /// (source unit in the previous layer, edge weight)
    pub incoming: Vec<(usize, R)>,
    pub offset: R,
}

/// A quantum block: circuit over ℛ, one previous-layer source per qubit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantumBlock<R: Real> {
    pub circuit: Circuit<R>,
    /// wire r feeds qubit r; bit r of the measurement is unit r's value
    pub wiring: Vec<usize>,
}

impl<R: Real> QuantumBlock<R> {
    pub fn width(&self) -> usize {
        self.wiring.len()
    }

    /// Outcome distribution of the block's measurement given the wired
    /// input bits.
    fn distribution(&self, inputs: &[bool]) -> Result<Distribution<R>> {
        let p = self.width();
        let index = inputs.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        let mut state = StateVector::init_basis(p, BasisIndex(index))?;
        for gate in &self.circuit.gates {
            state.apply_gate(gate)?;
        }
        let total = state.norm_sq();
        let probs = (0..state.dim())
            .map(|k| Ok(state.probability_of(BasisIndex(k))? / total))
            .collect::<Result<Vec<_>>>()?;
        Ok(Distribution::from_probs(p, probs))
    }

    fn gather_inputs(&self, previous: &[bool]) -> Result<Vec<bool>> {
        self.wiring
            .iter()
            .map(|&src| {
                previous.get(src).copied().ok_or_else(|| {
                    Error::Wiring(format!(
                        "block wire source {src} outside previous layer of width {}",
                        previous.len()
                    ))
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element<R: Real> {
    Classical(ClassicalUnit<R>),
    Block(QuantumBlock<R>),
}

impl<R: Real> Element<R> {
    pub fn width(&self) -> usize {
        match self {
            Element::Classical(_) => 1,
            Element::Block(b) => b.width(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Layer<R: Real> {
    pub elements: Vec<Element<R>>,
}

impl<R: Real> Layer<R> {
    pub fn width(&self) -> usize {
        self.elements.iter().map(Element::width).sum()
    }
}

/// Feed-forward network over consecutive layers. Layer 1 is the input;
/// `layers` describes layers 2..k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Network<R: Real> {
    pub input_width: usize,
    pub layers: Vec<Layer<R>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkViolation {
    pub layer: usize,
    pub element: usize,
    pub reason: String,
}

impl<R: Real> Network<R> {
    pub fn output_width(&self) -> usize {
        self.layers
            .last()
            .map(Layer::width)
            .unwrap_or(self.input_width)
    }

    /// Upper bound on the number of measurement branches.
    fn branch_leaves(&self) -> u64 {
        let mut leaves: u64 = 1;
        for layer in &self.layers {
            for element in &layer.elements {
                if let Element::Block(b) = element {
                    leaves = leaves.saturating_mul(1u64 << b.width().min(63));
                }
            }
        }
        leaves
    }
}

/// Structural checks: every edge references the directly preceding layer,
/// classical units have at least one edge, block wiring hits distinct
/// sources, block circuits stay inside the gate set.
pub fn validate_network<R: Real>(net: &Network<R>) -> Vec<NetworkViolation> {
    let mut violations = Vec::new();
    let mut prev_width = net.input_width;
    for (l, layer) in net.layers.iter().enumerate() {
        for (e, element) in layer.elements.iter().enumerate() {
            let mut push = |reason: String| {
                violations.push(NetworkViolation {
                    layer: l + 2, // human layer numbering, inputs are layer 1
                    element: e,
                    reason,
                })
            };
            match element {
                Element::Classical(unit) => {
                    if unit.incoming.is_empty() {
                        push("classical unit with no incoming edges".to_string());
                    }
                    for &(src, _) in &unit.incoming {
                        if src >= prev_width {
                            push(format!(
                                "edge source {src} outside previous layer of width {prev_width}"
                            ));
                        }
                    }
                }
                Element::Block(block) => {
                    if block.wiring.is_empty() {
                        push("quantum block with no qubits".to_string());
                    }
                    if block.wiring.len() != block.circuit.total_qubits() {
                        push(format!(
                            "wiring has {} entries but the circuit has {} qubits",
                            block.wiring.len(),
                            block.circuit.total_qubits()
                        ));
                    }
                    let mut seen = std::collections::HashSet::new();
                    for &src in &block.wiring {
                        if src >= prev_width {
                            push(format!(
                                "wire source {src} outside previous layer of width {prev_width}"
                            ));
                        }
                        if !seen.insert(src) {
                            push(format!("two block qubits wired to source {src}"));
                        }
                    }
                    for v in validate_gate_set(&block.circuit) {
                        push(format!("gate {}: {}", v.position, v.reason));
                    }
                }
            }
        }
        prev_width = layer.width();
    }
    violations
}

/// The hard-threshold activation of a single classical unit.
pub fn eval_classical_unit<R: Real>(unit: &ClassicalUnit<R>, values: &[bool]) -> Result<bool> {
    let mut acc = unit.offset;
    for &(src, weight) in &unit.incoming {
        let v = values.get(src).copied().ok_or_else(|| {
            Error::Wiring(format!(
                "edge source {src} outside previous layer of width {}",
                values.len()
            ))
        })?;
        if v {
            acc += weight;
        }
    }
    Ok(acc >= R::zero())
}

fn ensure_valid<R: Real>(net: &Network<R>, input: &BitString) -> Result<()> {
    if input.len() != net.input_width {
        return Err(Error::Config(format!(
            "input width {} does not match network input width {}",
            input.len(),
            net.input_width
        )));
    }
    let violations = validate_network(net);
    if let Some(v) = violations.first() {
        return Err(Error::Config(format!(
            "invalid network (layer {}, element {}): {}",
            v.layer, v.element, v.reason
        )));
    }
    Ok(())
}

/// One sampled forward pass.
pub fn eval_network<R: Real, G: Rng + ?Sized>(
    net: &Network<R>,
    input: &BitString,
    rng: &mut G,
) -> Result<BitString> {
    ensure_valid(net, input)?;
    let mut values: Vec<bool> = input.0.clone();
    for layer in &net.layers {
        let mut next = Vec::with_capacity(layer.width());
        for element in &layer.elements {
            match element {
                Element::Classical(unit) => next.push(eval_classical_unit(unit, &values)?),
                Element::Block(block) => {
                    let inputs = block.gather_inputs(&values)?;
                    let outcome = block.distribution(&inputs)?.sample(rng);
                    next.extend(outcome.0);
                }
            }
        }
        values = next;
    }
    Ok(BitString(values))
}

/// Exact output distribution by depth-first enumeration of every
/// intermediate measurement branch.
pub fn network_distribution<R: Real>(
    net: &Network<R>,
    input: &BitString,
) -> Result<Distribution<R>> {
    network_distribution_capped(net, input, DEFAULT_BRANCH_CAP)
}

pub fn network_distribution_capped<R: Real>(
    net: &Network<R>,
    input: &BitString,
    cap: u64,
) -> Result<Distribution<R>> {
    ensure_valid(net, input)?;
    if net.branch_leaves() > cap {
        return Err(Error::ResourceCap { cap });
    }
    let out_width = net.output_width();
    let mut probs = vec![R::zero(); 1 << out_width];
    descend(net, 0, input.0.clone(), R::one(), &mut probs)?;
    Ok(Distribution::from_probs(out_width, probs))
}

fn descend<R: Real>(
    net: &Network<R>,
    layer_idx: usize,
    values: Vec<bool>,
    weight: R,
    probs: &mut [R],
) -> Result<()> {
    if layer_idx == net.layers.len() {
        let index = values.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        probs[index] += weight;
        return Ok(());
    }
    // branches = partial next-layer value vectors with their weights
    let mut branches = vec![(Vec::new(), weight)];
    for element in &net.layers[layer_idx].elements {
        match element {
            Element::Classical(unit) => {
                let bit = eval_classical_unit(unit, &values)?;
                for (partial, _) in &mut branches {
                    partial.push(bit);
                }
            }
            Element::Block(block) => {
                let inputs = block.gather_inputs(&values)?;
                let dist = block.distribution(&inputs)?;
                let mut expanded = Vec::new();
                for (partial, w) in branches {
                    for (outcome, p) in dist.iter() {
                        if p > R::zero() {
                            let mut grown = partial.clone();
                            grown.extend(&outcome.0);
                            expanded.push((grown, w * p));
                        }
                    }
                }
                branches = expanded;
            }
        }
    }
    for (next_values, w) in branches {
        descend(net, layer_idx + 1, next_values, w, probs)?;
    }
    Ok(())
}
