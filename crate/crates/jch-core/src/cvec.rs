//! Real-matrix × complex-vector products used by the propagators.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// m · v for real m and complex v.
pub(crate) fn mat_vec(m: &DMatrix<f64>, v: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(m.ncols(), v.len());
    let mut out = vec![Complex64::ZERO; m.nrows()];
    for (col, &x) in v.iter().enumerate() {
        if x == Complex64::ZERO {
            continue;
        }
        for row in 0..m.nrows() {
            out[row] += m[(row, col)] * x;
        }
    }
    out
}

/// mᵀ · v for real m and complex v.
pub(crate) fn tr_mat_vec(m: &DMatrix<f64>, v: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(m.nrows(), v.len());
    let mut out = vec![Complex64::ZERO; m.ncols()];
    for col in 0..m.ncols() {
        let mut acc = Complex64::ZERO;
        for (row, &x) in v.iter().enumerate() {
            acc += m[(row, col)] * x;
        }
        out[col] = acc;
    }
    out
}
