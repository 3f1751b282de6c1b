use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type ComplexVector = DVector<C64>;

pub const I: C64 = C64::new(0.0, 1.0);

/// Dense complex matrix standing in for a bounded operator on a finite
/// dimensional Hilbert space.
///
/// Entries are always finite. There is no mutating API: every operation
/// returns a new matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<C64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadDim(format!("{rows}x{cols} matrix")));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Self::from_nalgebra(DMatrix::from_row_slice(rows, cols, &entries))
    }

    /// Wraps a nalgebra matrix after checking that every entry is finite.
    pub fn from_nalgebra(inner: DMatrix<C64>) -> Result<Self> {
        if inner.nrows() == 0 || inner.ncols() == 0 {
            return Err(Error::BadDim("empty matrix".into()));
        }
        for j in 0..inner.ncols() {
            for i in 0..inner.nrows() {
                let z = inner[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self { inner })
    }

    pub(crate) fn wrap(inner: DMatrix<C64>) -> Self {
        debug_assert!(inner.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        Self { inner }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self::wrap(DMatrix::from_fn(rows, cols, f))
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|row| row.iter().map(|&x| C64::new(x, 0.0))).collect();
        Self::from_row_major(r, c, entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self::wrap(DMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Self::wrap(DMatrix::identity(n, n))
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        Self::wrap(DMatrix::from_diagonal(&DVector::from_column_slice(diag)))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diagonal(&d)
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Side length of a square matrix.
    pub fn dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(Error::NotSquare { rows: self.rows(), cols: self.cols() })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.inner[(i, j)]
    }

    /// Row-major copy of the entries.
    pub fn entries(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.inner[(i, j)]);
            }
        }
        out
    }

    pub fn as_nalgebra(&self) -> &DMatrix<C64> {
        &self.inner
    }

    pub fn into_nalgebra(self) -> DMatrix<C64> {
        self.inner
    }

    pub fn adjoint(&self) -> Self {
        Self::wrap(self.inner.adjoint())
    }

    pub fn scale(&self, c: C64) -> Self {
        Self::wrap(&self.inner * c)
    }

    pub fn scale_re(&self, c: f64) -> Self {
        Self::wrap(self.inner.map(|z| z * c))
    }

    pub fn trace(&self) -> C64 {
        self.inner.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖A − A*‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (&self.inner - self.inner.adjoint()).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    /// `(A + A*)/2` with exactly real diagonal and exactly conjugate-symmetric
    /// off-diagonal entries.
    pub fn hermitian_part(&self) -> Self {
        let n = self.rows();
        let a = &self.inner;
        Self::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => C64::new(a[(i, i)].re, 0.0),
            std::cmp::Ordering::Less => (a[(i, j)] + a[(j, i)].conj()) * 0.5,
            std::cmp::Ordering::Greater => ((a[(j, i)] + a[(i, j)].conj()) * 0.5).conj(),
        })
    }

    /// `Re(e^{iθ}A) = (e^{iθ}A + e^{-iθ}A*)/2`.
    pub fn rotated_real_part(&self, theta: f64) -> Self {
        self.scale(C64::from_polar(1.0, theta)).hermitian_part()
    }

    /// Integer power, `A^0 = I`.
    pub fn powi(&self, k: u32) -> Result<Self> {
        let n = self.dim()?;
        let mut acc = DMatrix::identity(n, n);
        for _ in 0..k {
            acc = &acc * &self.inner;
        }
        Ok(Self::wrap(acc))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        Ok(Self::wrap(&self.inner * &other.inner))
    }

    pub fn apply(&self, x: &ComplexVector) -> ComplexVector {
        &self.inner * x
    }

    /// `⟨Ax, x⟩ = x* A x`.
    pub fn quadratic_form(&self, x: &ComplexVector) -> C64 {
        inner(&(&self.inner * x), x)
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.inner.iter().zip(other.inner.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        self.inner.iter().zip(other.inner.iter()).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }
}

/// `⟨x, y⟩ = Σ x_i conj(y_i)`, linear in the first argument.
pub fn inner(x: &ComplexVector, y: &ComplexVector) -> C64 {
    x.iter().zip(y.iter()).map(|(a, b)| a * b.conj()).sum()
}

pub fn vector_norm(x: &ComplexVector) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            write!(f, " ")?;
            for j in 0..self.cols() {
                let z = self.inner[(i, j)];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                assert_eq!(
                    (self.rows(), self.cols()),
                    (rhs.rows(), rhs.cols()),
                    "shape mismatch in elementwise op"
                );
                ComplexMatrix::wrap(&self.inner $op &rhs.inner)
            }
        }
        impl $tr<ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl Mul<&ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols(), rhs.rows(), "shape mismatch in product");
        ComplexMatrix::wrap(&self.inner * &rhs.inner)
    }
}

impl Mul<ComplexMatrix> for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix::wrap(-&self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_entries() {
        let err = ComplexMatrix::from_row_major(1, 2, vec![C64::new(1.0, 0.0), C64::new(f64::NAN, 0.0)]);
        assert_eq!(err.unwrap_err(), Error::NonFinite { row: 0, col: 1 });
        assert!(matches!(
            ComplexMatrix::from_row_major(2, 2, vec![C64::new(0.0, 0.0); 3]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn hermitian_part_is_exactly_self_adjoint() {
        let a = ComplexMatrix::from_fn(3, 3, |i, j| C64::new(0.1 * i as f64 + 0.7, 0.3 * j as f64 - 0.2));
        let h = a.hermitian_part();
        assert_eq!(h, h.adjoint());
        let x = (&a + &a.adjoint()).scale_re(0.5);
        assert!(h.max_abs_diff(&x) < 1e-15);
    }

    #[test]
    fn row_major_round_trip() {
        let entries: Vec<C64> = (0..6).map(|k| C64::new(k as f64, -(k as f64))).collect();
        let m = ComplexMatrix::from_row_major(2, 3, entries.clone()).unwrap();
        assert_eq!(m.get(1, 0), entries[3]);
        assert_eq!(m.entries(), entries);
    }

    #[test]
    fn quadratic_form_matches_definition() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let x = ComplexVector::from_vec(vec![C64::new(1.0, 0.0), C64::new(0.0, 1.0)]);
        // x* A x = conj(x0) * x1 = i
        assert_eq!(a.quadratic_form(&x), C64::new(0.0, 1.0));
    }
}
