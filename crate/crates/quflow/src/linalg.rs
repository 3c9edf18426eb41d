//! Dense complex linear algebra helpers shared by the conditioning pipeline,
//! the circuit synthesis code, and the test oracles.
//!
//! Problem sizes in this crate top out around 64x64 (a Hermitized 30-bus
//! system), so everything is dense and delegated to nalgebra.

use crate::scalar::{c_one, c_zero, cis, real, C, Real};
use nalgebra::{DMatrix, DVector};
use thiserror::Error;

pub type CMat<T> = DMatrix<C<T>>;
pub type CVec<T> = DVector<C<T>>;
pub type RMat<T> = DMatrix<T>;
pub type RVec<T> = DVector<T>;

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix is singular within {0:e} relative tolerance")]
    Singular(f64),
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian within {0:e}")]
    NotHermitian(f64),
    #[error("dimension mismatch: matrix is {n}x{n}, vector has length {len}")]
    DimensionMismatch { n: usize, len: usize },
}

/// Relative singularity cutoff used by the direct solves and `condition_number`.
pub const SINGULARITY_RTOL: f64 = 1e-12;

/// Complex identity matrix.
pub fn eye<T: Real>(n: usize) -> CMat<T> {
    CMat::<T>::identity(n, n)
}

/// Lift a real matrix into the complex plane.
pub fn to_complex<T: Real>(m: &RMat<T>) -> CMat<T> {
    m.map(|x| C::new(x, T::zero()))
}

/// Lift a real vector into the complex plane.
pub fn vec_to_complex<T: Real>(v: &RVec<T>) -> CVec<T> {
    v.map(|x| C::new(x, T::zero()))
}

/// Largest element magnitude of `m` (max norm).
pub fn max_abs<T: Real>(m: &CMat<T>) -> T {
    m.iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a.max(b))
        .sqrt()
}

/// `max_ij |a_ij - b_ij|`.
pub fn max_abs_diff<T: Real>(a: &CMat<T>, b: &CMat<T>) -> T {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    max_abs(&(a - b))
}

/// Hermiticity check: `max |A - A^dagger| <= tol`.
pub fn is_hermitian<T: Real>(m: &CMat<T>, tol: T) -> bool {
    m.is_square() && max_abs_diff(m, &m.adjoint()) <= tol
}

/// Unitarity check: `max |U U^dagger - I| <= tol`.
pub fn is_unitary<T: Real>(m: &CMat<T>, tol: T) -> bool {
    m.is_square() && max_abs_diff(&(m * m.adjoint()), &eye(m.nrows())) <= tol
}

/// Eigendecomposition of a Hermitian matrix: returns `(lambda, V)` with
/// `A = V diag(lambda) V^dagger`, eigenvalues ascending.
pub fn hermitian_eigen<T: Real>(m: &CMat<T>, tol: T) -> Result<(RVec<T>, CMat<T>), LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if !is_hermitian(m, tol) {
        return Err(LinalgError::NotHermitian(1e-10));
    }
    // Symmetrize explicitly so roundoff asymmetry cannot leak into the solver.
    let sym = (m + m.adjoint()).scale(real(0.5));
    let eig = sym.symmetric_eigen();
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[i]
            .partial_cmp(&eig.eigenvalues[j])
            .expect("non-NaN eigenvalue")
    });
    let values = RVec::<T>::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
    let mut vectors = CMat::<T>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok((values, vectors))
}

/// `exp(i * scale * A)` for Hermitian `A`, via exact eigendecomposition.
pub fn exp_i_hermitian<T: Real>(m: &CMat<T>, scale: T, tol: T) -> Result<CMat<T>, LinalgError> {
    let (values, vectors) = hermitian_eigen(m, tol)?;
    let phases = CMat::<T>::from_diagonal(&CVec::<T>::from_iterator(
        values.len(),
        values.iter().map(|&l| cis(scale * l)),
    ));
    Ok(&vectors * phases * vectors.adjoint())
}

/// Singular values of `m`, descending.
pub fn singular_values<T: Real>(m: &CMat<T>) -> RVec<T> {
    let mut sv: Vec<T> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).expect("non-NaN singular value"));
    RVec::<T>::from_vec(sv)
}

/// 2-norm condition number `sigma_max / sigma_min` via full SVD.
pub fn condition_number<T: Real>(m: &CMat<T>) -> Result<T, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let sv = singular_values(m);
    let smax = sv[0];
    let smin = sv[sv.len() - 1];
    if smin <= smax * real(SINGULARITY_RTOL) {
        return Err(LinalgError::Singular(SINGULARITY_RTOL));
    }
    Ok(smax / smin)
}

/// Direct dense solve `A x = b` by LU with partial pivoting.
pub fn solve<T: Real>(a: &CMat<T>, b: &CVec<T>) -> Result<CVec<T>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if a.nrows() != b.len() {
        return Err(LinalgError::DimensionMismatch {
            n: a.nrows(),
            len: b.len(),
        });
    }
    a.clone()
        .lu()
        .solve(b)
        .ok_or(LinalgError::Singular(SINGULARITY_RTOL))
}

/// Real-valued dense solve, used by the power-flow iterations.
pub fn solve_real<T: Real>(a: &RMat<T>, b: &RVec<T>) -> Result<RVec<T>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if a.nrows() != b.len() {
        return Err(LinalgError::DimensionMismatch {
            n: a.nrows(),
            len: b.len(),
        });
    }
    a.clone()
        .lu()
        .solve(b)
        .ok_or(LinalgError::Singular(SINGULARITY_RTOL))
}

/// Kronecker product `a (x) b`.
pub fn kron<T: Real>(a: &CMat<T>, b: &CMat<T>) -> CMat<T> {
    a.kronecker(b)
}

/// Frobenius distance between `a` and `e^{i phi} b`, minimized over the
/// global phase `phi`. Zero for matrices equal up to global phase; an upper
/// bound on the operator-norm distance.
pub fn frobenius_dist_mod_phase<T: Real>(a: &CMat<T>, b: &CMat<T>) -> T {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    // min_phi ||a - e^{i phi} b||_F is attained at phi = arg(tr(b^dagger a)).
    let inner: C<T> = b
        .iter()
        .zip(a.iter())
        .fold(c_zero(), |acc, (x, y)| acc + x.conj() * *y);
    let phase = if inner.norm_sqr() > T::zero() {
        inner / C::new(inner.norm_sqr().sqrt(), T::zero())
    } else {
        c_one()
    };
    (a - b.map(|z| z * phase)).norm()
}

/// Distance between unit vectors up to global phase (Euclidean, phase-aligned).
pub fn vec_dist_mod_phase<T: Real>(a: &CVec<T>, b: &CVec<T>) -> T {
    assert_eq!(a.len(), b.len(), "length mismatch");
    let inner: C<T> = b
        .iter()
        .zip(a.iter())
        .fold(c_zero(), |acc, (x, y)| acc + x.conj() * *y);
    let phase = if inner.norm_sqr() > T::zero() {
        inner / C::new(inner.norm_sqr().sqrt(), T::zero())
    } else {
        c_one()
    };
    (a - b.map(|z| z * phase)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> C<f64> {
        C::new(re, im)
    }

    #[test]
    fn hermitian_eigen_reconstructs() {
        let a = CMat::<f64>::from_row_slice(
            2,
            2,
            &[c64(2.0, 0.0), c64(0.5, -0.25), c64(0.5, 0.25), c64(1.0, 0.0)],
        );
        let (l, v) = hermitian_eigen(&a, 1e-10).unwrap();
        let rebuilt = &v
            * CMat::from_diagonal(&CVec::from_iterator(2, l.iter().map(|&x| c64(x, 0.0))))
            * v.adjoint();
        assert!(max_abs_diff(&a, &rebuilt) < 1e-12);
        assert!(l[0] <= l[1]);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = CMat::<f64>::zeros(4, 4);
        let e = exp_i_hermitian(&z, 1.0, 1e-10).unwrap();
        assert!(max_abs_diff(&e, &eye(4)) < 1e-14);
    }

    #[test]
    fn exp_i_hermitian_is_unitary() {
        let a = CMat::<f64>::from_row_slice(
            2,
            2,
            &[c64(0.3, 0.0), c64(0.1, 0.7), c64(0.1, -0.7), c64(-1.2, 0.0)],
        );
        let u = exp_i_hermitian(&a, 2.5, 1e-10).unwrap();
        assert!(is_unitary(&u, 1e-12));
    }

    #[test]
    fn condition_number_diag() {
        let m = to_complex(&RMat::<f64>::from_diagonal(&RVec::from_vec(vec![10.0, 1.0])));
        assert!((condition_number(&m).unwrap() - 10.0).abs() < 1e-12);
        assert!((condition_number(&eye::<f64>(3)).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn condition_number_rejects_singular() {
        let m = CMat::<f64>::zeros(2, 2);
        assert_eq!(condition_number(&m), Err(LinalgError::Singular(SINGULARITY_RTOL)));
    }

    #[test]
    fn solve_matches_known() {
        let a = to_complex(&RMat::<f64>::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 4.0]));
        let b = vec_to_complex(&RVec::from_vec(vec![2.0, 4.0]));
        let x = solve(&a, &b).unwrap();
        assert!((x[0] - c64(1.0, 0.0)).norm() < 1e-14);
        assert!((x[1] - c64(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn phase_aligned_distance_ignores_global_phase() {
        let a = eye::<f64>(3);
        let b = a.map(|z| z * C::from_polar(1.0, 1.1));
        assert!(frobenius_dist_mod_phase(&a, &b) < 1e-14);
        assert!(frobenius_dist_mod_phase(&b, &a) < 1e-14);
    }

    #[test]
    fn generic_at_f32() {
        let m = eye::<f32>(2);
        assert!((condition_number(&m).unwrap() - 1.0).abs() < 1e-6);
    }
}
