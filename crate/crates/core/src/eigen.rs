//! Dominant eigenpair of a nonnegative matrix via shifted power iteration.
//!
//! Iterating on `M + I` instead of `M` shifts the spectrum so the dominant
//! eigenvalue is strictly separated in modulus even for bipartite-like
//! spectra (e.g. `[[0,1],[1,0]]`, whose unshifted iteration oscillates).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{from_f64, Real};

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions<R> {
    /// Max-norm threshold on successive normalized iterates.
    pub tol: R,
    pub max_iter: usize,
}

impl<R: Real> Default for SolverOptions<R> {
    fn default() -> Self {
        Self {
            tol: from_f64(1e-12),
            max_iter: 100_000,
        }
    }
}

impl<R: Real> SolverOptions<R> {
    pub fn new(tol: R, max_iter: usize) -> Self {
        Self { tol, max_iter }
    }
}

#[derive(Debug, Clone)]
pub struct EigenPair<R> {
    /// Dominant eigenvalue of the *unshifted* matrix.
    pub value: R,
    /// Dominant eigenvector, entrywise nonnegative, normalized to unit sum.
    pub vector: Vec<R>,
}

/// Computes the dominant eigenpair of a nonnegative square matrix.
///
/// The returned vector sums to one; the eigenvalue is the Rayleigh estimate
/// of the shifted iteration minus one.
pub fn dominant_eigenpair<R: Real>(m: &Matrix<R>, opts: &SolverOptions<R>) -> Result<EigenPair<R>> {
    assert!(m.is_square(), "dominant_eigenpair needs a square matrix");
    debug_assert!(m.is_nonnegative(), "matrix must be nonnegative");
    let n = m.rows();
    assert!(n >= 1, "empty matrix");
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }

    let mut v = vec![from_f64::<R>(1.0) / crate::scalar::from_usize(n); n];
    for _ in 0..opts.max_iter {
        // w = (M + I) v
        let mut w = m.matvec(&v);
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi = *wi + *vi;
        }
        // Entries stay nonnegative, so the L1 norm is the plain sum and is >= 1.
        let sum: R = w.iter().copied().sum();
        for wi in w.iter_mut() {
            *wi = *wi / sum;
        }
        let diff = w
            .iter()
            .zip(&v)
            .map(|(&a, &b)| (a - b).abs())
            .fold(R::zero(), R::max);
        v = w;
        if diff < opts.tol {
            let mv = m.matvec(&v);
            let num: R = v.iter().zip(&mv).map(|(&a, &b)| a * b).sum();
            let den: R = v.iter().map(|&a| a * a).sum();
            return Ok(EigenPair {
                value: num / den,
                vector: v,
            });
        }
    }
    Err(Error::NonConvergence(opts.max_iter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn opts() -> SolverOptions<f64> {
        SolverOptions::default()
    }

    #[test]
    fn diagonal_dominant() {
        let m = Matrix::from_rows(vec![vec![2.0, 0.0], vec![0.0, 1.0]]);
        let pair = dominant_eigenpair(&m, &opts()).unwrap();
        assert!((pair.value - 2.0).abs() < 1e-9);
        assert!((pair.vector[0] - 1.0).abs() < 1e-9);
        assert!(pair.vector[1].abs() < 1e-9);
    }

    #[test]
    fn bipartite_spectrum_converges_under_shift() {
        // Unshifted power iteration oscillates on [[0,1],[1,0]] (eigenvalues +-1).
        let m = Matrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let pair = dominant_eigenpair(&m, &opts()).unwrap();
        assert!((pair.value - 1.0).abs() < 1e-12);
        assert!((pair.vector[0] - 0.5).abs() < 1e-12);
        assert!((pair.vector[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn zero_matrix_is_an_error() {
        let m: Matrix<f64> = Matrix::zeros(3, 3);
        assert!(matches!(
            dominant_eigenpair(&m, &opts()),
            Err(Error::ZeroMatrix)
        ));
    }

    #[test]
    fn non_convergence_reports_budget() {
        let m = Matrix::from_rows(vec![vec![2.0, 0.0], vec![0.0, 1.0]]);
        let tight = SolverOptions::new(1e-15, 2);
        assert!(matches!(
            dominant_eigenpair(&m, &tight),
            Err(Error::NonConvergence(2))
        ));
    }

    #[test]
    fn residual_is_small_at_convergence() {
        let m = Matrix::from_rows(vec![
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
        ]);
        let pair = dominant_eigenpair(&m, &opts()).unwrap();
        let mv = m.matvec(&pair.vector);
        let resid = mv
            .iter()
            .zip(&pair.vector)
            .map(|(&a, &b)| (a - pair.value * b).abs())
            .fold(0.0f64, f64::max);
        assert!(resid < 1e-8 * pair.value, "residual {resid}");
    }

    #[test]
    fn single_entry_matrix() {
        let m = Matrix::from_rows(vec![vec![3.5]]);
        let pair = dominant_eigenpair(&m, &opts()).unwrap();
        assert!((pair.value - 3.5).abs() < 1e-12);
        assert_eq!(pair.vector, vec![1.0]);
    }

    #[test]
    fn runs_at_f32() {
        let m: Matrix<f32> = Matrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let opts = SolverOptions::new(1e-6f32, 10_000);
        let pair = dominant_eigenpair(&m, &opts).unwrap();
        assert!((pair.value - 1.0).abs() < 1e-4);
    }
}
