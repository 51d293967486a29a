//! Simulation toolkit for a restricted quantum gate set: dense statevector
//! kernels, truth-table-to-circuit synthesis, hybrid threshold/quantum
//! networks with mid-network measurement, and pseudo-spin binding
//! statistics.
//!
//! The gate set consists of Hadamard, swap, two-level rotations built from
//! `[[cos θ, sin θ], [sin θ, −cos θ]]` on the basis pair (|0⟩, |i⟩), and
//! controlled two-level X gates. [`compiler`] turns any bijective n-bit
//! truth table into a circuit over that set which, for a policy angle
//! θ = π/divisor(n), returns the correct output with probability above
//! one half ([`theta`] carries the feasibility check in closed form).
//! [`network`] evaluates layered networks mixing hard-threshold units and
//! measured quantum blocks; [`posner`] computes binding probabilities and
//! the binding-correlation measure for entangled pseudo-spin pairs.
//!
//! All numeric code is generic over the scalar via [`scalar::Real`]
//! (`f32` or `f64`); the `*64` aliases below fix `f64`, the default
//! precision used by the CLI and the test suite.

pub mod bits;
pub mod compiler;
pub mod distribution;
pub mod error;
pub mod gate;
pub mod network;
pub mod posner;
pub mod render;
pub mod scalar;
pub mod seeding;
pub mod statevector;
pub mod theta;
pub mod truth_table;

pub use bits::{BasisIndex, BitString};
pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision aliases for the main domain types.
pub type StateVector64 = statevector::StateVector<f64>;
pub type Gate64 = gate::Gate<f64>;
pub type Circuit64 = gate::Circuit<f64>;
pub type ThetaPolicy64 = theta::ThetaPolicy<f64>;
pub type Distribution64 = distribution::Distribution<f64>;
pub type Network64 = network::Network<f64>;
pub type JointPseudoSpinState64 = posner::JointPseudoSpinState<f64>;
pub type BindingDistribution64 = posner::BindingDistribution<f64>;

/// Single-precision aliases.
pub type StateVector32 = statevector::StateVector<f32>;
pub type Circuit32 = gate::Circuit<f32>;
