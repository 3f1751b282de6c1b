//! Absolute value, polar and Cartesian decompositions, and the
//! `(s,t)`-Aluthge transform `Δ_{s,t}(T) = |T|^s U |T|^t`.

use crate::error::{Error, Result};
use crate::linalg::{svd, ComplexMatrix, C64, I};

/// `T = U·P` with `P = |T|` and `ker U = ker |T|`.
#[derive(Clone, Debug)]
pub struct PolarParts {
    pub isometry_part: ComplexMatrix,
    pub modulus: ComplexMatrix,
}

/// `T = X + iY` with `X`, `Y` self-adjoint.
#[derive(Clone, Debug)]
pub struct CartesianParts {
    pub real_part: ComplexMatrix,
    pub imag_part: ComplexMatrix,
}

impl CartesianParts {
    pub fn recombine(&self) -> ComplexMatrix {
        &self.real_part + &self.imag_part.scale(I)
    }
}

/// Exponents of the `(s,t)`-Aluthge transform: `s, t ≥ 0`, `s + t = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AluthgeParams {
    s: f64,
    t: f64,
}

impl AluthgeParams {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        let ok = s.is_finite() && t.is_finite() && s >= 0.0 && t >= 0.0 && (s + t - 1.0).abs() <= 1e-12;
        if !ok {
            return Err(Error::ParamOutOfRange {
                name: "s,t".into(),
                value: s,
                range: format!("s,t >= 0 with s + t = 1 (got s = {s}, t = {t})"),
            });
        }
        Ok(Self { s, t })
    }

    /// `(s, 1 − s)`.
    pub fn from_s(s: f64) -> Result<Self> {
        Self::new(s, 1.0 - s)
    }

    pub fn classical() -> Self {
        Self { s: 0.5, t: 0.5 }
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

/// Functional calculus of `|T|` and `|T*|` read off one SVD `T = W Σ V*`:
/// `|T|^γ = V Σ^γ V*`, `|T*|^γ = W Σ^γ W*`, polar factor `U = W Π V*`.
///
/// Singular values at or below `n·ε·σ₁` are treated as exact zeros, so the
/// kernel condition and the powers agree on what the kernel is. `γ = 0` gives
/// the identity (`0^0 = 1`).
#[derive(Clone, Debug)]
pub struct ModulusCalculus {
    left: ComplexMatrix,
    singulars: Vec<f64>,
    right: ComplexMatrix,
}

impl ModulusCalculus {
    pub fn new(t: &ComplexMatrix) -> Result<Self> {
        t.dim()?;
        let parts = svd(t)?;
        let singulars = parts.truncated_singulars();
        Ok(Self { left: parts.left, singulars, right: parts.right })
    }

    fn spectral(basis: &ComplexMatrix, gamma: f64, values: impl Iterator<Item = f64>) -> ComplexMatrix {
        if gamma == 0.0 {
            return ComplexMatrix::identity(basis.rows());
        }
        let d: Vec<C64> = values.map(|x| C64::new(x, 0.0)).collect();
        (&(basis * &ComplexMatrix::from_diagonal(&d)) * &basis.adjoint()).hermitian_part()
    }

    pub fn singulars(&self) -> &[f64] {
        &self.singulars
    }

    pub fn norm(&self) -> f64 {
        self.singulars.first().copied().unwrap_or(0.0)
    }

    /// `|T|^γ`.
    pub fn abs_pow(&self, gamma: f64) -> ComplexMatrix {
        Self::spectral(&self.right, gamma, self.singulars.iter().map(|s| s.powf(gamma)))
    }

    /// `|T*|^γ`.
    pub fn abs_adj_pow(&self, gamma: f64) -> ComplexMatrix {
        Self::spectral(&self.left, gamma, self.singulars.iter().map(|s| s.powf(gamma)))
    }

    /// Partial isometry of the polar decomposition.
    pub fn isometry(&self) -> ComplexMatrix {
        let d: Vec<C64> = self.singulars.iter().map(|&s| C64::new(if s > 0.0 { 1.0 } else { 0.0 }, 0.0)).collect();
        &(&self.left * &ComplexMatrix::from_diagonal(&d)) * &self.right.adjoint()
    }
}

/// `|T| = (T*T)^{1/2}`.
pub fn absolute_value(t: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(ModulusCalculus::new(t)?.abs_pow(1.0))
}

/// `|T|^γ`, with `|T|^0 = I`.
pub fn abs_power(t: &ComplexMatrix, gamma: f64) -> Result<ComplexMatrix> {
    Ok(ModulusCalculus::new(t)?.abs_pow(gamma))
}

pub fn polar(t: &ComplexMatrix) -> Result<PolarParts> {
    let calc = ModulusCalculus::new(t)?;
    Ok(PolarParts { isometry_part: calc.isometry(), modulus: calc.abs_pow(1.0) })
}

pub fn cartesian(t: &ComplexMatrix) -> Result<CartesianParts> {
    t.dim()?;
    let real_part = t.hermitian_part();
    // Y = (T − T*)/(2i) is the Hermitian part of −iT.
    let imag_part = t.scale(-I).hermitian_part();
    Ok(CartesianParts { real_part, imag_part })
}

/// `Δ_{s,t}(T) = |T|^s · U · |T|^t`.
pub fn aluthge(t: &ComplexMatrix, p: AluthgeParams) -> Result<ComplexMatrix> {
    let calc = ModulusCalculus::new(t)?;
    Ok(&(&calc.abs_pow(p.s) * &calc.isometry()) * &calc.abs_pow(p.t))
}
