//! Pseudo-spin binding statistics for entangled molecule pairs.
//!
//! A joint state of two molecules is a normalized 3×3 complex coefficient
//! matrix over pseudo-spins σ ∈ {−1, 0, +1}. Binding collapses onto total
//! pseudo-spin zero, so the bonding probability is the σ+σ′ = 0 weight.
//! For two entangled pairs (a,a′) and (b,b′), the joint distribution of
//! the binary binding indicators (r, r′) is the 3⁴-term sum
//!
//! ```text
//!   P_{rr′} = Σ |C^{aa′}|² |C^{bb′}|² g_r(σ_a, σ_b) g_{r′}(σ_{a′}, σ_{b′})
//! ```
//!
//! with g₁(σ,σ′) = δ_{σ+σ′,0} and g₀ = 1 − g₁. The entanglement measure is
//! the covariance of r and r′ under that distribution; it vanishes exactly
//! when the coefficients factor into a product state.
//!
//! Matrix storage order is fixed as σ = (−1, 0, +1) along both axes.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// The three pseudo-spin values, in storage order.
pub const PSEUDO_SPINS: [i8; 3] = [-1, 0, 1];

/// Normalized coefficient matrix `C_{σσ′}` of one entangled molecule pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointPseudoSpinState<R: Real> {
    /// rows σ, columns σ′, both in (−1, 0, +1) order
    pub coefficients: [[Complex<R>; 3]; 3],
}

impl<R: Real> JointPseudoSpinState<R> {
    pub fn new(coefficients: [[Complex<R>; 3]; 3]) -> Result<Self> {
        let state = JointPseudoSpinState { coefficients };
        state.check_normalized()?;
        Ok(state)
    }

    /// Build from unnormalized coefficients.
    pub fn normalized(mut coefficients: [[Complex<R>; 3]; 3]) -> Self {
        let norm: R = coefficients
            .iter()
            .flatten()
            .map(|c| c.norm_sqr())
            .sum::<R>()
            .sqrt();
        for row in &mut coefficients {
            for c in row {
                *c = c.unscale(norm);
            }
        }
        JointPseudoSpinState { coefficients }
    }

    /// Product state with per-molecule coefficient vectors (σ order −1,0,+1).
    pub fn product(a: [Complex<R>; 3], b: [Complex<R>; 3]) -> Self {
        let mut coefficients = [[Complex::new(R::zero(), R::zero()); 3]; 3];
        for (i, row) in coefficients.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i] * b[j];
            }
        }
        Self::normalized(coefficients)
    }

    fn check_normalized(&self) -> Result<()> {
        let total: R = self.coefficients.iter().flatten().map(|c| c.norm_sqr()).sum();
        if (total - R::one()).abs() > R::algebra_tol() {
            return Err(Error::Unnormalized {
                norm: total.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    fn weight(&self, i: usize, j: usize) -> R {
        self.coefficients[i][j].norm_sqr()
    }
}

/// Joint distribution of the two binary binding indicators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BindingDistribution<R: Real> {
    /// `p[r][r']` for r, r′ ∈ {0, 1}
    pub p: [[R; 2]; 2],
}

impl<R: Real> BindingDistribution<R> {
    /// Marginal probability that the first pair binds.
    pub fn marginal_r(&self) -> R {
        self.p[1][0] + self.p[1][1]
    }

    /// Marginal probability that the second pair binds.
    pub fn marginal_r_prime(&self) -> R {
        self.p[0][1] + self.p[1][1]
    }
}

/// δ_{σ+σ′,0} — does a pseudo-spin pair allow binding?
fn binds(sigma: i8, sigma_prime: i8) -> bool {
    sigma + sigma_prime == 0
}

/// Bonding probability: total weight on total pseudo-spin zero.
pub fn p_react<R: Real>(state: &JointPseudoSpinState<R>) -> Result<R> {
    state.check_normalized()?;
    let mut total = R::zero();
    for (i, &sigma) in PSEUDO_SPINS.iter().enumerate() {
        for (j, &sigma_prime) in PSEUDO_SPINS.iter().enumerate() {
            if binds(sigma, sigma_prime) {
                total += state.weight(i, j);
            }
        }
    }
    Ok(total)
}

/// Joint binding distribution of two entangled pairs (a,a′) and (b,b′),
/// by direct 3⁴-term summation.
pub fn joint_probs<R: Real>(
    c_aa: &JointPseudoSpinState<R>,
    c_bb: &JointPseudoSpinState<R>,
) -> Result<BindingDistribution<R>> {
    c_aa.check_normalized()?;
    c_bb.check_normalized()?;
    let mut p = [[R::zero(); 2]; 2];
    for (ia, &sigma_a) in PSEUDO_SPINS.iter().enumerate() {
        for (iap, &sigma_ap) in PSEUDO_SPINS.iter().enumerate() {
            let w_a = c_aa.weight(ia, iap);
            for (ib, &sigma_b) in PSEUDO_SPINS.iter().enumerate() {
                for (ibp, &sigma_bp) in PSEUDO_SPINS.iter().enumerate() {
                    let r = binds(sigma_a, sigma_b) as usize;
                    let r_prime = binds(sigma_ap, sigma_bp) as usize;
                    p[r][r_prime] += w_a * c_bb.weight(ib, ibp);
                }
            }
        }
    }
    Ok(BindingDistribution { p })
}

/// Covariance of the binding indicators, `[δr δr′]`. Positive means the
/// two reactions are positively correlated, negative anti-correlated;
/// range is [−1/4, 1/4].
pub fn entanglement_measure<R: Real>(dist: &BindingDistribution<R>) -> R {
    let r_bar = dist.marginal_r();
    let r_prime_bar = dist.marginal_r_prime();
    let mut cov = R::zero();
    for r in 0..2 {
        for r_prime in 0..2 {
            let dr = R::from_usize_lossy(r) - r_bar;
            let drp = R::from_usize_lossy(r_prime) - r_prime_bar;
            cov += dist.p[r][r_prime] * dr * drp;
        }
    }
    cov
}
