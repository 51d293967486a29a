//! The bias-angle policy and its feasibility inequality.
//!
//! The construction uses θ = π/2^((n/2)+1) for even n and
//! θ = π/2^(((n−1)/2)+1) for odd n. Such a θ is usable when
//!
//! ```text
//!   (1/√2^n) · (cos^{2^n−1}θ + Σ_{i=0}^{2^n−2} cos^i θ · sin θ) > 1/√2
//! ```
//!
//! The left-hand side is evaluated in closed form — geometric series plus a
//! log-domain power — so n = 26 (2^26 − 1 summands in the literal form)
//! costs the same as n = 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// The divisor rule: f(n) = 2^((n/2)+1) for even n, 2^(((n−1)/2)+1) for odd.
pub fn divisor(n: u32) -> Result<u64> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "bit width",
            index: n as usize,
            limit: 1,
        });
    }
    let exp = if n % 2 == 0 { n / 2 + 1 } else { (n - 1) / 2 + 1 };
    Ok(1u64 << exp)
}

/// Angle policy for an n-bit function: θ = π / divisor(n).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaPolicy<R: Real> {
    pub n: u32,
    pub divisor: u64,
    pub theta: R,
}

impl<R: Real> ThetaPolicy<R> {
    pub fn for_width(n: u32) -> Result<Self> {
        let divisor = divisor(n)?;
        let theta = R::PI() / R::from_f64_lossy(divisor as f64);
        Ok(ThetaPolicy { n, divisor, theta })
    }
}

fn check_theta<R: Real>(theta: R) -> Result<()> {
    // closed at π/2 so the boundary case is reportable as `false` rather
    // than an error
    if theta <= R::zero() || theta > R::FRAC_PI_2() {
        return Err(Error::Config(format!(
            "theta {theta} outside (0, π/2]"
        )));
    }
    Ok(())
}

/// 1/√2^n, as a power of the same constant the inequality compares
/// against so the n = 1 boundary case lands exactly on the threshold.
fn scale_factor<R: Real>(n: u32) -> R {
    (R::one() / R::SQRT_2()).powi(n as i32)
}

/// Left-hand side of the feasibility inequality, closed form:
///
/// ```text
///   (1/√2^n) · (cos^m θ + sin θ · (1 − cos^m θ)/(1 − cos θ)),  m = 2^n − 1
/// ```
///
/// This is exactly the amplitude the compiled circuit leaves on |0⟩ after
/// the Hadamard layer and the bias cascade.
pub fn eq3_lhs<R: Real>(n: u32, theta: R) -> Result<R> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "bit width",
            index: n as usize,
            limit: 1,
        });
    }
    check_theta(theta)?;
    // cos(π/2) is not exactly zero in floating point; pin the boundary so
    // the strict inequality is decided by the limit value
    let c = if theta == R::FRAC_PI_2() {
        R::zero()
    } else {
        theta.cos()
    };
    let s = theta.sin();
    let m = R::from_f64_lossy((1u64 << n) as f64 - 1.0);
    // cos^m θ via the log domain; c ∈ [0, 1) here so ln c ≤ 0
    let cos_pow_m = if c == R::zero() {
        R::zero()
    } else {
        (m * c.ln()).exp()
    };
    let geometric = if c == R::one() {
        m
    } else {
        (R::one() - cos_pow_m) / (R::one() - c)
    };
    let scale = scale_factor::<R>(n);
    Ok(scale * (cos_pow_m + s * geometric))
}

/// Literal summation of the inequality's left-hand side. Exponential in n;
/// meant as the independent check of the closed form at small n.
pub fn eq3_lhs_literal<R: Real>(n: u32, theta: R) -> Result<R> {
    if n < 1 || n > 24 {
        return Err(Error::OutOfRange {
            what: "bit width (literal form)",
            index: n as usize,
            limit: 24,
        });
    }
    check_theta(theta)?;
    let c = if theta == R::FRAC_PI_2() {
        R::zero()
    } else {
        theta.cos()
    };
    let s = theta.sin();
    let terms = (1u64 << n) - 1;
    let mut cos_pow = R::one();
    let mut sum = R::zero();
    for _ in 0..terms {
        sum += cos_pow * s;
        cos_pow *= c;
    }
    Ok(scale_factor::<R>(n) * (cos_pow + sum))
}

/// True iff the inequality holds strictly at machine precision.
pub fn check_eq3<R: Real>(n: u32, theta: R) -> Result<bool> {
    Ok(eq3_lhs(n, theta)? > R::one() / R::SQRT_2())
}
