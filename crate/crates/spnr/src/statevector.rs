//! Dense statevector simulation of the restricted gate set.
//!
//! A `StateVector` holds all 2^n complex amplitudes of an n-qubit register.
//! Two-level gates on the basis pair (0, i) of a qubit register mix exactly
//! two amplitudes per assignment of the remaining wires; everything else is
//! untouched bit for bit.

use num_complex::Complex;
use rand::Rng;

use crate::bits::{BasisIndex, BitString};
use crate::error::{Error, Result};
use crate::gate::{bias_matrix, hadamard_matrix, x_matrix, Gate, Mat2, Polarity};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<R: Real> {
    n_qubits: usize,
    amplitudes: Vec<Complex<R>>,
}

impl<R: Real> StateVector<R> {
    /// The basis state |index⟩ on `n_qubits` wires.
    pub fn init_basis(n_qubits: usize, index: BasisIndex) -> Result<Self> {
        assert!(n_qubits >= 1, "need at least one qubit");
        let dim = 1usize << n_qubits;
        if index.0 >= dim {
            return Err(Error::OutOfRange {
                what: "basis index",
                index: index.0,
                limit: dim,
            });
        }
        let mut amplitudes = vec![Complex::new(R::zero(), R::zero()); dim];
        amplitudes[index.0] = Complex::new(R::one(), R::zero());
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<R>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: BasisIndex) -> Result<Complex<R>> {
        self.check_index(index)?;
        Ok(self.amplitudes[index.0])
    }

    /// Σ|a|².
    pub fn norm_sq(&self) -> R {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probability_of(&self, index: BasisIndex) -> Result<R> {
        self.check_index(index)?;
        Ok(self.amplitudes[index.0].norm_sqr())
    }

    fn check_index(&self, index: BasisIndex) -> Result<()> {
        if index.0 >= self.dim() {
            return Err(Error::OutOfRange {
                what: "basis index",
                index: index.0,
                limit: self.dim(),
            });
        }
        Ok(())
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n_qubits {
            return Err(Error::OutOfRange {
                what: "qubit",
                index: q,
                limit: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Index-space bit position of a qubit (qubit 0 is the MSB).
    fn bit_pos(&self, qubit: usize) -> usize {
        self.n_qubits - 1 - qubit
    }

    pub fn apply_gate(&mut self, gate: &Gate<R>) -> Result<()> {
        match gate {
            Gate::Hadamard { target } => {
                self.apply_two_level(&hadamard_matrix(), 1, &[*target], &[])
            }
            Gate::Swap { a, b } => self.apply_swap(*a, *b),
            Gate::TwoLevelBias {
                theta,
                pair_index,
                register,
            } => self.apply_two_level(&bias_matrix(*theta), *pair_index, register, &[]),
            Gate::ControlledTwoLevelX {
                pair_index,
                register,
                controls,
            } => self.apply_two_level(&x_matrix(), *pair_index, register, controls),
        }
    }

    fn apply_swap(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        if a == b {
            return Ok(());
        }
        let bit_a = 1usize << self.bit_pos(a);
        let bit_b = 1usize << self.bit_pos(b);
        for k in 0..self.dim() {
            if k & bit_a != 0 && k & bit_b == 0 {
                self.amplitudes.swap(k, k ^ bit_a ^ bit_b);
            }
        }
        Ok(())
    }

    /// Apply a 2×2 unitary to the basis pair (0, `pair_index`) of the
    /// subspace spanned by the `register` qubits (MSB first), for every
    /// assignment of the remaining wires that satisfies `controls`.
    pub fn apply_two_level(
        &mut self,
        matrix: &Mat2<R>,
        pair_index: usize,
        register: &[usize],
        controls: &[(usize, Polarity)],
    ) -> Result<()> {
        let dev = matrix.unitarity_deviation();
        if dev > R::unitary_tol() {
            return Err(Error::NonUnitary {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        for &q in register {
            self.check_qubit(q)?;
        }
        for &(q, _) in controls {
            self.check_qubit(q)?;
            if register.contains(&q) {
                return Err(Error::Wiring(format!(
                    "control q{q} overlaps the gate register"
                )));
            }
        }
        let m = register.len();
        if pair_index == 0 || pair_index >= 1usize << m {
            return Err(Error::OutOfRange {
                what: "two-level pair index",
                index: pair_index,
                limit: 1usize << m,
            });
        }

        // index bits of the pair-i register pattern, MSB of the pattern on
        // the first register wire
        let mut pair_bits = 0usize;
        for (r, &q) in register.iter().enumerate() {
            if pair_index >> (m - 1 - r) & 1 == 1 {
                pair_bits |= 1 << self.bit_pos(q);
            }
        }

        // index-space bit positions of the non-register wires, for
        // scattering the enumeration counter
        let free_positions: Vec<usize> = (0..self.n_qubits)
            .filter(|q| !register.contains(q))
            .map(|q| self.bit_pos(q))
            .collect();
        let control_masks: Vec<(usize, bool)> = controls
            .iter()
            .map(|&(q, pol)| (1usize << self.bit_pos(q), pol == Polarity::Positive))
            .collect();

        for j in 0..1usize << free_positions.len() {
            let mut base = 0usize;
            for (t, &pos) in free_positions.iter().enumerate() {
                if j >> t & 1 == 1 {
                    base |= 1 << pos;
                }
            }
            if control_masks
                .iter()
                .any(|&(mask, positive)| (base & mask != 0) != positive)
            {
                continue;
            }
            let i0 = base;
            let i1 = base | pair_bits;
            let a0 = self.amplitudes[i0];
            let a1 = self.amplitudes[i1];
            self.amplitudes[i0] = matrix.0[0][0] * a0 + matrix.0[0][1] * a1;
            self.amplitudes[i1] = matrix.0[1][0] * a0 + matrix.0[1][1] * a1;
        }
        Ok(())
    }

    /// Single-shot projective measurement of the whole register.
    pub fn measure_all<G: Rng + ?Sized>(&self, rng: &mut G) -> Result<BitString> {
        let norm = self.norm_sq();
        if (norm - R::one()).abs() > R::norm_tol() {
            return Err(Error::Unnormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        let u = R::from_f64_lossy(rng.gen::<f64>()) * norm;
        let mut acc = R::zero();
        let mut outcome = self.dim() - 1;
        for (k, a) in self.amplitudes.iter().enumerate() {
            acc += a.norm_sqr();
            if u < acc {
                outcome = k;
                break;
            }
        }
        Ok(BasisIndex(outcome).to_bitstring(self.n_qubits))
    }
}
