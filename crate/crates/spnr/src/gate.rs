//! The restricted gate set ℛ and circuits over it.
//!
//! ℛ contains the Hadamard gate, the swap gate, two-level "bias" rotations
//! built from
//!
//! ```text
//!   U(θ) = | cos θ   sin θ |
//!          | sin θ  −cos θ |
//! ```
//!
//! acting on the basis pair (|0⟩, |i⟩) of a qubit register, and controlled
//! two-level X gates on the same kind of pair. `decompose_bias` reproduces
//! the gate-level realization of U(θ) as a basis change around a
//! z-rotation; the simulator itself applies `bias_matrix` directly.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// Dense 2×2 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<R: Real>(pub [[Complex<R>; 2]; 2]);

impl<R: Real> Mat2<R> {
    pub fn identity() -> Self {
        let one = Complex::new(R::one(), R::zero());
        let zero = Complex::new(R::zero(), R::zero());
        Mat2([[one, zero], [zero, one]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [[Complex::new(R::zero(), R::zero()); 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = self.0[r][0] * rhs.0[0][c] + self.0[r][1] * rhs.0[1][c];
            }
        }
        Mat2(out)
    }

    pub fn adjoint(&self) -> Self {
        Mat2([
            [self.0[0][0].conj(), self.0[1][0].conj()],
            [self.0[0][1].conj(), self.0[1][1].conj()],
        ])
    }

    pub fn scale(&self, factor: Complex<R>) -> Self {
        let mut out = self.0;
        for row in &mut out {
            for cell in row {
                *cell = *cell * factor;
            }
        }
        Mat2(out)
    }

    /// Max entrywise |M†M − I|.
    pub fn unitarity_deviation(&self) -> R {
        let p = self.adjoint().mul(self);
        let mut dev = R::zero();
        for (r, row) in p.0.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let target = if r == c { R::one() } else { R::zero() };
                let d = (*cell - Complex::new(target, R::zero())).norm();
                if d > dev {
                    dev = d;
                }
            }
        }
        dev
    }

    pub fn max_abs_diff(&self, other: &Self) -> R {
        let mut m = R::zero();
        for r in 0..2 {
            for c in 0..2 {
                let d = (self.0[r][c] - other.0[r][c]).norm();
                if d > m {
                    m = d;
                }
            }
        }
        m
    }
}

/// The two-level rotation matrix `[[cos θ, sin θ], [sin θ, −cos θ]]`.
///
/// Real, symmetric, unitary, determinant −1. Total on any real `theta`;
/// the construction of interest keeps θ in (0, π/2).
pub fn bias_matrix<R: Real>(theta: R) -> Mat2<R> {
    let c = Complex::new(theta.cos(), R::zero());
    let s = Complex::new(theta.sin(), R::zero());
    Mat2([[c, s], [s, -c]])
}

/// Pauli-X, the matrix of the flip gates.
pub fn x_matrix<R: Real>() -> Mat2<R> {
    let one = Complex::new(R::one(), R::zero());
    let zero = Complex::new(R::zero(), R::zero());
    Mat2([[zero, one], [one, zero]])
}

pub fn hadamard_matrix<R: Real>() -> Mat2<R> {
    let h = Complex::new(R::one() / R::SQRT_2(), R::zero());
    Mat2([[h, h], [h, -h]])
}

/// Single-qubit primitives used by the gate-level bias realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BiasPrimitive<R: Real> {
    Z,
    H,
    S,
    SInv,
    /// z-rotation `diag(e^{−iα/2}, e^{iα/2})`.
    RotZ(R),
}

impl<R: Real> BiasPrimitive<R> {
    pub fn matrix(&self) -> Mat2<R> {
        let zero = Complex::new(R::zero(), R::zero());
        let one = Complex::new(R::one(), R::zero());
        let i = Complex::new(R::zero(), R::one());
        match *self {
            BiasPrimitive::Z => Mat2([[one, zero], [zero, -one]]),
            BiasPrimitive::H => hadamard_matrix(),
            BiasPrimitive::S => Mat2([[one, zero], [zero, i]]),
            BiasPrimitive::SInv => Mat2([[one, zero], [zero, -i]]),
            BiasPrimitive::RotZ(alpha) => {
                let half = alpha / (R::one() + R::one());
                Mat2([
                    [Complex::new(half.cos(), -half.sin()), zero],
                    [zero, Complex::new(half.cos(), half.sin())],
                ])
            }
        }
    }
}

/// Gate-level realization of `bias_matrix(theta)`: a Z, the
/// `S⁻¹·H·S⁻¹` basis change, a z-rotation by 2θ, and the inverse basis
/// change. Listed in application order (first element applied first).
///
/// The composition equals `bias_matrix(theta)` up to a global phase.
pub fn decompose_bias<R: Real>(theta: R) -> Vec<BiasPrimitive<R>> {
    let two_theta = theta + theta;
    vec![
        BiasPrimitive::Z,
        BiasPrimitive::SInv,
        BiasPrimitive::H,
        BiasPrimitive::SInv,
        BiasPrimitive::RotZ(two_theta),
        BiasPrimitive::S,
        BiasPrimitive::H,
        BiasPrimitive::S,
    ]
}

/// Multiply out a primitive sequence given in application order.
pub fn compose_primitives<R: Real>(seq: &[BiasPrimitive<R>]) -> Mat2<R> {
    seq.iter()
        .fold(Mat2::identity(), |acc, p| p.matrix().mul(&acc))
}

/// Control polarity: a positive control fires on |1⟩, a negative one on |0⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Positive,
    Negative,
}

/// A gate from ℛ. Qubit indices are global within the circuit:
/// `0..n_register` are register wires, `n_register..` ancilla wires.
///
/// Two-level gates mix the amplitudes of register patterns 0 and
/// `pair_index` (read MSB-first over the `register` list) and leave every
/// other amplitude untouched.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate<R: Real> {
    Hadamard {
        target: usize,
    },
    Swap {
        a: usize,
        b: usize,
    },
    TwoLevelBias {
        theta: R,
        pair_index: usize,
        register: Vec<usize>,
    },
    ControlledTwoLevelX {
        pair_index: usize,
        register: Vec<usize>,
        controls: Vec<(usize, Polarity)>,
    },
}

impl<R: Real> Gate<R> {
    /// Every qubit the gate touches, controls included.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::Hadamard { target } => vec![*target],
            Gate::Swap { a, b } => vec![*a, *b],
            Gate::TwoLevelBias { register, .. } => register.clone(),
            Gate::ControlledTwoLevelX {
                register, controls, ..
            } => {
                let mut qs = register.clone();
                qs.extend(controls.iter().map(|&(q, _)| q));
                qs
            }
        }
    }
}

/// An ordered gate sequence over a register/ancilla split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit<R: Real> {
    pub n_register: usize,
    pub n_ancilla: usize,
    pub gates: Vec<Gate<R>>,
}

impl<R: Real> Circuit<R> {
    pub fn new(n_register: usize, n_ancilla: usize) -> Self {
        Circuit {
            n_register,
            n_ancilla,
            gates: Vec::new(),
        }
    }

    pub fn total_qubits(&self) -> usize {
        self.n_register + self.n_ancilla
    }
}

/// A gate that falls outside ℛ or breaks the circuit's declared widths.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub position: usize,
    pub reason: String,
}

/// Check a circuit against the gate-set rules: indices within the declared
/// widths, pair indices ≥ 1 and within the register dimension, controls
/// disjoint from the register, and a single shared bias angle.
pub fn validate_gate_set<R: Real>(circuit: &Circuit<R>) -> Vec<Violation> {
    let mut violations = Vec::new();
    let total = circuit.total_qubits();
    let mut shared_theta: Option<R> = None;

    for (position, gate) in circuit.gates.iter().enumerate() {
        for q in gate.qubits() {
            if q >= total {
                violations.push(Violation {
                    position,
                    reason: format!("qubit {q} outside circuit width {total}"),
                });
            }
        }
        match gate {
            Gate::Hadamard { .. } => {}
            Gate::Swap { a, b } => {
                if a == b {
                    violations.push(Violation {
                        position,
                        reason: format!("swap with identical wires q{a}"),
                    });
                }
            }
            Gate::TwoLevelBias {
                theta,
                pair_index,
                register,
            } => {
                check_pair(&mut violations, position, *pair_index, register);
                match shared_theta {
                    None => shared_theta = Some(*theta),
                    Some(t) if (t - *theta).abs() > R::algebra_tol() => {
                        violations.push(Violation {
                            position,
                            reason: "mixed bias angles".to_string(),
                        });
                    }
                    Some(_) => {}
                }
            }
            Gate::ControlledTwoLevelX {
                pair_index,
                register,
                controls,
            } => {
                check_pair(&mut violations, position, *pair_index, register);
                for &(c, _) in controls {
                    if register.contains(&c) {
                        violations.push(Violation {
                            position,
                            reason: format!("control q{c} overlaps the gate register"),
                        });
                    }
                }
            }
        }
    }
    violations
}

fn check_pair(violations: &mut Vec<Violation>, position: usize, pair_index: usize, register: &[usize]) {
    if pair_index == 0 {
        violations.push(Violation {
            position,
            reason: "pair index 0: the pair partner is always basis state 0".to_string(),
        });
    }
    if register.len() >= usize::BITS as usize || pair_index >= 1 << register.len() {
        violations.push(Violation {
            position,
            reason: format!(
                "pair index {pair_index} outside the {}-qubit register dimension",
                register.len()
            ),
        });
    }
}
