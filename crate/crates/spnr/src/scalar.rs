//! Scalar abstraction for the numeric kernels.
//!
//! Everything downstream (state vectors, gate matrices, the angle policy,
//! the binding statistics) is generic over a floating-point scalar. `f64`
//! is the default throughout the crate root aliases; `f32` works but the
//! per-type tolerances are correspondingly looser.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable as the amplitude/probability field.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Tolerance for algebraic identities (unitarity products, amplitude
    /// comparisons between two exact computation routes).
    fn algebra_tol() -> Self;

    /// Tolerance for accumulated norms over a whole circuit.
    fn norm_tol() -> Self;

    /// Tolerance for the per-gate unitarity check `‖M†M − I‖`.
    fn unitary_tol() -> Self;

    fn from_f64_lossy(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 conversion")
    }

    fn from_usize_lossy(x: usize) -> Self {
        <Self as FromPrimitive>::from_usize(x).expect("usize conversion")
    }
}

impl Real for f64 {
    fn algebra_tol() -> Self {
        1e-12
    }

    fn norm_tol() -> Self {
        1e-9
    }

    fn unitary_tol() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn algebra_tol() -> Self {
        1e-5
    }

    fn norm_tol() -> Self {
        1e-4
    }

    fn unitary_tol() -> Self {
        1e-4
    }
}
