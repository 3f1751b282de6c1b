//! Hermitian eigendecomposition, SVD, general eigenvalues and spectral calculus.
//!
//! The iterations themselves are nalgebra's (Householder reduction followed by
//! implicit shifted QR). This module owns the contracts around them: input
//! validation, ordering of the spectrum, PSD clamping and error reporting.

use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen, SVD};

use super::matrix::{ComplexMatrix, ComplexVector, C64};
use crate::error::{Error, Result};

const MAX_SWEEPS_PER_DIM: usize = 1000;

/// Relative tolerance on `‖H − H*‖_F` accepted as self-adjoint.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Relative tolerance below which a negative eigenvalue is clamped to zero.
pub const PSD_CLAMP_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct HermitianEig {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal columns, column `k` pairs with `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let diag: Vec<C64> = self.eigenvalues.iter().map(|&l| C64::new(l, 0.0)).collect();
        let v = &self.eigenvectors;
        &(v * &ComplexMatrix::from_diagonal(&diag)) * &v.adjoint()
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn max_eigenvector(&self) -> ComplexVector {
        let k = self.eigenvalues.len() - 1;
        self.eigenvectors.as_nalgebra().column(k).into_owned()
    }
}

#[derive(Clone, Debug)]
pub struct SvdParts {
    pub left: ComplexMatrix,
    /// Non-negative, descending.
    pub singulars: Vec<f64>,
    /// `T = left · diag(singulars) · right*`.
    pub right: ComplexMatrix,
}

impl SvdParts {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let diag: Vec<C64> = self.singulars.iter().map(|&s| C64::new(s, 0.0)).collect();
        &(&self.left * &ComplexMatrix::from_diagonal(&diag)) * &self.right.adjoint()
    }

    /// Numerical rank threshold `n·ε·σ₁`.
    pub fn rank_tol(&self) -> f64 {
        self.singulars.len() as f64 * f64::EPSILON * self.singulars.first().copied().unwrap_or(0.0)
    }

    /// Singular values with those at or below [`Self::rank_tol`] set to exactly zero.
    pub fn truncated_singulars(&self) -> Vec<f64> {
        let tol = self.rank_tol();
        self.singulars.iter().map(|&s| if s <= tol { 0.0 } else { s }).collect()
    }
}

fn check_hermitian(h: &ComplexMatrix) -> Result<()> {
    h.dim()?;
    let defect = h.hermitian_defect();
    if defect > HERMITIAN_TOL * (1.0 + h.frobenius_norm()) {
        return Err(Error::NotHermitian { asymmetry: defect });
    }
    Ok(())
}

/// Eigendecomposition of a self-adjoint matrix, eigenvalues ascending.
pub fn eig_hermitian(h: &ComplexMatrix) -> Result<HermitianEig> {
    check_hermitian(h)?;
    let n = h.rows();
    let sym = h.hermitian_part().into_nalgebra();
    let eig = SymmetricEigen::try_new(sym, f64::EPSILON, MAX_SWEEPS_PER_DIM * n)
        .ok_or(Error::NoConvergence("hermitian eigensolver"))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(HermitianEig { eigenvalues, eigenvectors: ComplexMatrix::wrap(vectors) })
}

/// Eigenvalues only, ascending. `h` must already be exactly self-adjoint
/// (e.g. built by [`ComplexMatrix::hermitian_part`]); no validation is done.
pub fn hermitian_eigenvalues_unchecked(h: &DMatrix<C64>) -> DVector<f64> {
    let mut ev = h.clone().symmetric_eigenvalues();
    ev.as_mut_slice().sort_by(f64::total_cmp);
    ev
}

/// Largest eigenvalue and a unit eigenvector for it.
pub fn max_eigenpair(h: &ComplexMatrix) -> Result<(f64, ComplexVector)> {
    let eig = eig_hermitian(h)?;
    Ok((eig.max_eigenvalue(), eig.max_eigenvector()))
}

/// Singular value decomposition with singular values sorted descending.
pub fn svd(t: &ComplexMatrix) -> Result<SvdParts> {
    let n = t.rows().max(t.cols());
    let dec = SVD::try_new(t.as_nalgebra().clone(), true, true, f64::EPSILON, MAX_SWEEPS_PER_DIM * n)
        .ok_or(Error::NoConvergence("svd"))?;
    let u = dec.u.ok_or(Error::NoConvergence("svd left vectors"))?;
    let v_t = dec.v_t.ok_or(Error::NoConvergence("svd right vectors"))?;
    let k = dec.singular_values.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| dec.singular_values[b].total_cmp(&dec.singular_values[a]));
    let singulars = order.iter().map(|&i| dec.singular_values[i].max(0.0)).collect();
    let left = DMatrix::from_fn(u.nrows(), k, |i, j| u[(i, order[j])]);
    let right = DMatrix::from_fn(v_t.ncols(), k, |i, j| v_t[(order[j], i)].conj());
    Ok(SvdParts { left: ComplexMatrix::wrap(left), singulars, right: ComplexMatrix::wrap(right) })
}

/// Largest singular value.
pub fn largest_singular_value(t: &ComplexMatrix) -> Result<f64> {
    let n = t.rows().max(t.cols());
    let dec = SVD::try_new(t.as_nalgebra().clone(), false, false, f64::EPSILON, MAX_SWEEPS_PER_DIM * n)
        .ok_or(Error::NoConvergence("svd"))?;
    Ok(dec.singular_values.iter().copied().fold(0.0, f64::max))
}

/// Eigenvalues (with multiplicity) of a general square matrix, read off the
/// diagonal of its complex Schur form.
pub fn eig_general(t: &ComplexMatrix) -> Result<Vec<C64>> {
    let n = t.dim()?;
    let schur = Schur::try_new(t.as_nalgebra().clone(), f64::EPSILON, MAX_SWEEPS_PER_DIM * n)
        .ok_or(Error::NoConvergence("schur"))?;
    let ev = schur.eigenvalues().ok_or(Error::NoConvergence("schur"))?;
    Ok(ev.iter().copied().collect())
}

pub fn determinant(t: &ComplexMatrix) -> Result<C64> {
    t.dim()?;
    Ok(t.as_nalgebra().clone().determinant())
}

/// `f(P)` for positive semidefinite `P`, computed as `V·diag(f(max(λ,0)))·V*`.
///
/// Eigenvalues down to `−1e−10·(1+‖P‖)` are clamped to zero before `f` sees them.
pub fn apply_spectral_function(p: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let eig = eig_hermitian(p)?;
    let norm = eig.eigenvalues.iter().fold(0.0_f64, |m, l| m.max(l.abs()));
    let floor = -PSD_CLAMP_TOL * (1.0 + norm);
    let mut mapped = Vec::with_capacity(eig.eigenvalues.len());
    for &l in &eig.eigenvalues {
        if l < floor {
            return Err(Error::NotPsd { eigenvalue: l });
        }
        let x = l.max(0.0);
        let y = f(x);
        if y.is_nan() {
            return Err(Error::DomainError { at: x });
        }
        mapped.push(C64::new(y, 0.0));
    }
    let v = &eig.eigenvectors;
    let out = &(v * &ComplexMatrix::from_diagonal(&mapped)) * &v.adjoint();
    Ok(out.hermitian_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::I;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn diagonal_and_involution_spectra() {
        let e = eig_hermitian(&ComplexMatrix::from_real_diagonal(&[3.0, 1.0])).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 3.0]);
        let x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let e = eig_hermitian(&x).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-15 && (e.eigenvalues[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let t = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(eig_hermitian(&t), Err(Error::NotHermitian { .. })));
        let r = ComplexMatrix::from_real_rows(&[&[0.0, 1.0, 2.0]]).unwrap();
        assert!(matches!(eig_hermitian(&r), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn svd_small_cases() {
        let s = svd(&ComplexMatrix::from_real_diagonal(&[2.0, 0.0])).unwrap();
        assert_eq!(s.singulars, vec![2.0, 0.0]);
        let s = svd(&ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()).unwrap();
        assert!((s.singulars[0] - 1.0).abs() < 1e-15 && s.singulars[1].abs() < 1e-15);
        let s = svd(&ComplexMatrix::from_real_diagonal(&[0.5, -3.0, 1.0])).unwrap();
        assert!((s.singulars[0] - 3.0).abs() < 1e-15);
        assert!(s.reconstruct().max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.5, -3.0, 1.0])) < 1e-14);
    }

    #[test]
    fn general_eigenvalues() {
        let mut ev = eig_general(&ComplexMatrix::from_real_diagonal(&[2.0, -3.0])).unwrap();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert_eq!(ev, vec![c(-3.0), c(2.0)]);
        let ev = eig_general(&ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()).unwrap();
        assert!(ev.iter().all(|z| z.norm() < 1e-15));
        // companion matrix of z^2 - 3z + 2 = (z-1)(z-2)
        let comp = ComplexMatrix::from_real_rows(&[&[3.0, -2.0], &[1.0, 0.0]]).unwrap();
        let mut ev = eig_general(&comp).unwrap();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((ev[0] - c(1.0)).norm() < 1e-12 && (ev[1] - c(2.0)).norm() < 1e-12);
    }

    #[test]
    fn spectral_function_cases() {
        let p = ComplexMatrix::from_real_diagonal(&[4.0, 9.0]);
        let r = apply_spectral_function(&p, f64::sqrt).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[2.0, 3.0])) < 1e-15);

        let g = ComplexMatrix::from_row_major(2, 2, vec![c(1.0), I, c(0.5), c(2.0)]).unwrap();
        let p = &g.adjoint() * &g;
        let sq = apply_spectral_function(&p, |t| t * t).unwrap();
        assert!(sq.max_abs_diff(&(&p * &p)) < 1e-10);

        let tiny = ComplexMatrix::from_real_diagonal(&[-1e-14, 1.0]);
        let r = apply_spectral_function(&tiny, f64::sqrt).unwrap();
        assert_eq!(r.get(0, 0), c(0.0));

        let neg = ComplexMatrix::from_real_diagonal(&[-1e-3, 1.0]);
        assert!(matches!(apply_spectral_function(&neg, f64::sqrt), Err(Error::NotPsd { .. })));
        let nan = apply_spectral_function(&ComplexMatrix::identity(2), |_| f64::NAN);
        assert!(matches!(nan, Err(Error::DomainError { .. })));
    }
}
