//! Small dense complex linear-algebra helpers shared across the engines.
//!
//! Everything here operates on `ndarray` arrays of `Complex64`; the
//! decompositions are delegated to LAPACK through `ndarray-linalg`.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, Eigh, Norm, SVD, Solve, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Hermitian eigendecomposition, eigenvalues ascending, eigenvectors in columns.
pub fn eigh(matrix: &Array2<C64>) -> Result<(Array1<f64>, Array2<C64>)> {
    matrix
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Eigen(e.to_string()))
}

/// General complex eigendecomposition, eigenvectors in columns.
pub fn eig(matrix: &Array2<C64>) -> Result<(Array1<C64>, Array2<C64>)> {
    matrix.eig().map_err(|e| Error::Eigen(e.to_string()))
}

/// 2-norm condition number estimate via singular values.
pub fn condition_number(matrix: &Array2<C64>) -> Result<f64> {
    let (_, sigma, _) = matrix
        .svd(false, false)
        .map_err(|e| Error::Eigen(e.to_string()))?;
    let max = sigma.iter().cloned().fold(0.0_f64, f64::max);
    let min = sigma.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(max / min)
}

/// Solve `A x = b` for dense complex `A`.
pub fn solve(matrix: &Array2<C64>, rhs: &Array1<C64>) -> Result<Array1<C64>> {
    matrix
        .solve(rhs)
        .map_err(|e| Error::Eigen(format!("linear solve failed: {e}")))
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for ((i, j), &av) in a.indexed_iter() {
        if av == C64::new(0.0, 0.0) {
            continue;
        }
        for ((k, l), &bv) in b.indexed_iter() {
            out[[i * br + k, j * bc + l]] = av * bv;
        }
    }
    out
}

/// Matrix exponential by scaling-and-squaring with a Taylor core.
///
/// The argument is scaled until its 1-norm is below 1/2, the series is summed
/// to machine precision, and the result squared back up. Adequate for the
/// superoperator sizes used here (dimension <= 1024).
pub fn expm(matrix: &Array2<C64>) -> Array2<C64> {
    let dim = matrix.nrows();
    let norm = matrix.norm_l1().max(1e-300);
    let squarings = norm.log2().ceil().max(0.0) as u32 + 1;
    let scale = 2f64.powi(squarings as i32);
    let scaled = matrix.mapv(|v| v / scale);

    let mut result = Array2::eye(dim);
    let mut term: Array2<C64> = Array2::eye(dim);
    for k in 1..=40 {
        term = term.dot(&scaled) / C64::new(k as f64, 0.0);
        result = result + &term;
        if term.norm_l1() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.dot(&result);
    }
    result
}

/// Frobenius norm of the difference of two matrices.
pub fn frobenius_diff(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    (a - b).mapv(|v| v.norm_sqr()).sum().sqrt()
}

/// Operator (spectral) norm via the largest singular value.
pub fn operator_norm(matrix: &Array2<C64>) -> Result<f64> {
    let (_, sigma, _) = matrix
        .svd(false, false)
        .map_err(|e| Error::Eigen(e.to_string()))?;
    Ok(sigma.iter().cloned().fold(0.0_f64, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn eigh_recovers_pauli_z_spectrum() {
        let z = array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]];
        let (vals, _) = eigh(&z).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eig_handles_non_hermitian() {
        // Jordan-free upper triangular matrix: eigenvalues on the diagonal.
        let m = array![[c(1.0, 0.0), c(2.0, 0.0)], [c(0.0, 0.0), c(3.0, 0.0)]];
        let (vals, _) = eig(&m).unwrap();
        let mut re: Vec<f64> = vals.iter().map(|v| v.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] - 1.0).abs() < 1e-12 && (re[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn expm_matches_rotation() {
        // exp(i theta X) = cos(theta) I + i sin(theta) X
        let theta = 0.7;
        let x = array![[c(0.0, 0.0), c(0.0, theta)], [c(0.0, theta), c(0.0, 0.0)]];
        let e = expm(&x);
        assert!((e[[0, 0]].re - theta.cos()).abs() < 1e-13);
        assert!((e[[0, 1]].im - theta.sin()).abs() < 1e-13);
    }

    #[test]
    fn kron_shape_and_values() {
        let i2: Array2<C64> = Array2::eye(2);
        let x = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
        let k = kron(&i2, &x);
        assert_eq!(k.dim(), (4, 4));
        assert_eq!(k[[0, 1]], c(1.0, 0.0));
        assert_eq!(k[[2, 3]], c(1.0, 0.0));
        assert_eq!(k[[0, 2]], c(0.0, 0.0));
    }
}
