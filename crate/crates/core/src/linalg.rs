//! Thin wrappers over the dense eigensolvers.

use faer::{Mat, Side};

use crate::{Error, Result, C64};

/// Real symmetric eigendecomposition, eigenvalues ascending.
pub(crate) fn eigh_real(a: &Mat<f64>, context: &str) -> Result<(Vec<f64>, Mat<f64>)> {
    let evd = a.self_adjoint_eigen(Side::Lower).map_err(|_| Error::Eigensolver {
        context: context.to_string(),
    })?;
    let values = evd.S().column_vector().iter().copied().collect();
    Ok((values, evd.U().to_owned()))
}

/// Complex Hermitian eigendecomposition, eigenvalues ascending.
pub(crate) fn eigh_complex(a: &Mat<C64>, context: &str) -> Result<(Vec<f64>, Mat<C64>)> {
    let evd = a.self_adjoint_eigen(Side::Lower).map_err(|_| Error::Eigensolver {
        context: context.to_string(),
    })?;
    let values = evd.S().column_vector().iter().map(|z| z.re).collect();
    Ok((values, evd.U().to_owned()))
}

/// Ascending permutation of `values`. Runs of entries whose neighbours lie
/// within `tol` of each other keep their input order.
pub(crate) fn tolerant_order(values: &[f64], tol: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] - values[order[end - 1]] <= tol {
            end += 1;
        }
        order[start..end].sort_unstable();
        start = end;
    }
    order
}

pub(crate) fn max_abs_asymmetry(a: &Mat<f64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..i {
            worst = worst.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    worst
}

pub(crate) fn max_abs_non_hermiticity(a: &Mat<C64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..=i {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}
