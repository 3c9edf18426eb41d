//! Scalar abstraction for the numeric core.
//!
//! Everything numeric in this crate is generic over [`Real`], so the whole
//! pipeline can be instantiated at `f32` or `f64`. The crate root exports
//! `f64` aliases, which is what the CLI and the test suites use; `f32` is
//! mainly useful for memory-bound experiments.

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::FromPrimitive;

/// Floating-point scalar the solver core is generic over.
///
/// `RealField` brings in the elementary functions and the ordered-field
/// structure nalgebra needs; `FromPrimitive` lets constants written as `f64`
/// literals be injected without a wall of `T::from(..).unwrap()` noise.
pub trait Real: RealField + Copy + FromPrimitive + Default {
    /// Machine epsilon of the concrete type.
    fn eps() -> Self;
}

impl Real for f32 {
    fn eps() -> Self {
        f32::EPSILON
    }
}

impl Real for f64 {
    fn eps() -> Self {
        f64::EPSILON
    }
}

/// Numeric tolerance stated for `f64`, widened when the scalar is coarser.
///
/// At `f64` this returns `tol_f64` verbatim, so the spec-level tolerances in
/// this crate hold exactly as written; at `f32` the floor of a few hundred
/// ulps takes over.
#[inline]
pub fn tol<T: Real>(tol_f64: f64) -> T {
    real::<T>(tol_f64).max(T::eps() * real(512.0))
}

/// Shorthand for `Complex<T>` amplitudes and matrix entries.
pub type C<T> = Complex<T>;

/// Inject an `f64` constant into the scalar type.
#[inline]
pub fn real<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("finite f64 constant")
}

/// Inject a `usize` into the scalar type.
#[inline]
pub fn real_of_usize<T: Real>(v: usize) -> T {
    T::from_usize(v).expect("usize fits scalar")
}

/// `e^{i·theta}` as a complex scalar.
#[inline]
pub fn cis<T: Real>(theta: T) -> C<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// Complex zero.
#[inline]
pub fn c_zero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

/// Complex one.
#[inline]
pub fn c_one<T: Real>() -> C<T> {
    Complex::new(T::one(), T::zero())
}

/// Real value lifted to a complex scalar.
#[inline]
pub fn c_re<T: Real>(re: T) -> C<T> {
    Complex::new(re, T::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_roundtrip() {
        let x: f64 = real(0.25);
        assert_eq!(x, 0.25);
        let y: f32 = real(0.5);
        assert_eq!(y, 0.5);
    }

    #[test]
    fn cis_is_unit() {
        let z = cis(1.234_f64);
        assert!((z.norm_sqr() - 1.0).abs() < 1e-15);
    }
}
