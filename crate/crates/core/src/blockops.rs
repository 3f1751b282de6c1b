//! 2×2 operator matrices on `H ⊕ H`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// `[[A, B], [C, D]]` kept both as blocks and as the assembled `2n×2n` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Block2 {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub c: ComplexMatrix,
    pub d: ComplexMatrix,
    pub assembled: ComplexMatrix,
}

impl Block2 {
    /// Block size `n`.
    pub fn half_dim(&self) -> usize {
        self.a.rows()
    }

    /// Splits a `2n×2n` matrix into its four blocks.
    pub fn from_assembled(m: &ComplexMatrix) -> Result<Self> {
        let size = m.dim()?;
        if size % 2 != 0 {
            return Err(Error::DimensionMismatch(format!("cannot split odd dimension {size} into 2x2 blocks")));
        }
        let n = size / 2;
        let inner = m.as_nalgebra();
        let block = |r: usize, c: usize| ComplexMatrix::wrap(inner.view((r * n, c * n), (n, n)).into_owned());
        Ok(Self { a: block(0, 0), b: block(0, 1), c: block(1, 0), d: block(1, 1), assembled: m.clone() })
    }
}

pub fn block2(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix, d: &ComplexMatrix) -> Result<Block2> {
    let n = a.dim()?;
    for (name, m) in [("B", b), ("C", c), ("D", d)] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "block {name} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let mut out = DMatrix::<C64>::zeros(2 * n, 2 * n);
    for (m, r, col) in [(a, 0, 0), (b, 0, n), (c, n, 0), (d, n, n)] {
        out.view_mut((r, col), (n, n)).copy_from(m.as_nalgebra());
    }
    Ok(Block2 { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone(), assembled: ComplexMatrix::wrap(out) })
}

/// `[[0, A], [B, 0]]`.
pub fn off_diag(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Block2> {
    let z = ComplexMatrix::zeros(a.rows());
    block2(&z, a, b, &z)
}

/// `[[A, 0], [0, B]]`.
pub fn direct_sum(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Block2> {
    let z = ComplexMatrix::zeros(a.rows());
    block2(a, &z, &z, b)
}

/// The swap `[[0, I], [I, 0]]`.
pub fn swap_unitary(n: usize) -> ComplexMatrix {
    let i = ComplexMatrix::identity(n);
    off_diag(&i, &i).expect("square blocks").assembled
}

/// `[[I, −I], [I, I]] / √2`.
pub fn rotation_unitary(n: usize) -> ComplexMatrix {
    let i = ComplexMatrix::identity(n);
    block2(&i, &-&i, &i, &i).expect("square blocks").assembled.scale_re(std::f64::consts::FRAC_1_SQRT_2)
}
