//! Seeded random operators and check instances.
//!
//! A sample seed packs the dimension into bits 0-7 and the class-cycle index
//! into bits 8-15; the upper 48 bits are a hash of the master seed, the check
//! and the sample position. Everything an instance needs is derived from that
//! one number, so a seed alone replays it.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector, C64};
use crate::registry::{CheckDef, CheckKind, OpClass, Params};

/// Unit vectors drawn per instance of a vector-level check.
pub const VECTORS_PER_INSTANCE: usize = 200;

/// Largest norm a scaled sample is given.
pub const MAX_SAMPLE_NORM: f64 = 2.0;
const MIN_SAMPLE_NORM: f64 = 0.1;

/// Length of the class cycle; divisible by every possible class-list length.
const CLASS_CYCLE: u64 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SampleSpec {
    pub op_class: OpClass,
    pub dim: usize,
    pub seed: u64,
}

/// Standalone sample of one class.
pub fn sample_operator(spec: &SampleSpec) -> Result<ComplexMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(RawSample::draw(spec.op_class, spec.dim, &mut rng)?.build())
}

/// Gaussian data and target norm from which a sample is built. Tightness
/// search perturbs this representation so every step stays inside the class.
#[derive(Clone, Debug, PartialEq)]
pub struct RawSample {
    pub class: OpClass,
    pub dim: usize,
    /// Target norm (`‖·‖` for scaled classes, largest eigenvalue modulus for normal).
    pub rho: f64,
    pub data: Vec<f64>,
}

impl RawSample {
    fn data_len(class: OpClass, n: usize) -> usize {
        match class {
            OpClass::SquareZero => 2 * (n / 2) * (n / 2),
            OpClass::Normal => 2 * n * n + 2 * n,
            _ => 2 * n * n,
        }
    }

    pub fn draw(class: OpClass, dim: usize, rng: &mut impl Rng) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadDim("dimension must be at least 1".into()));
        }
        if !class.available_in(dim) {
            return Err(Error::BadDim(format!("class {class} needs an even dimension, got {dim}")));
        }
        let rho = rng.random_range(MIN_SAMPLE_NORM..MAX_SAMPLE_NORM);
        let data = (0..Self::data_len(class, dim)).map(|_| rng.sample(StandardNormal)).collect();
        Ok(Self { class, dim, rho, data })
    }

    fn gaussian(data: &[f64], n: usize) -> DMatrix<C64> {
        DMatrix::from_fn(n, n, |i, j| {
            let k = 2 * (i * n + j);
            C64::new(data[k], data[k + 1])
        })
    }

    fn scaled(m: DMatrix<C64>, rho: f64) -> DMatrix<C64> {
        let nrm = spectral_norm(&m);
        if nrm > 0.0 {
            m * C64::new(rho / nrm, 0.0)
        } else {
            m
        }
    }

    /// Haar-distributed unitary: QR of a Gaussian with the phases of `diag(R)` removed.
    fn unitary(g: DMatrix<C64>) -> DMatrix<C64> {
        let n = g.nrows();
        let qr = g.qr();
        let (q, r) = (qr.q(), qr.r());
        let phases = DMatrix::from_fn(n, n, |i, j| {
            if i != j {
                C64::new(0.0, 0.0)
            } else if r[(i, i)].norm() > 0.0 {
                r[(i, i)] / r[(i, i)].norm()
            } else {
                C64::new(1.0, 0.0)
            }
        });
        q * phases
    }

    pub fn build(&self) -> ComplexMatrix {
        let n = self.dim;
        let rho = self.rho;
        let m = match self.class {
            OpClass::General => Self::scaled(Self::gaussian(&self.data, n), rho),
            OpClass::SelfAdjoint => {
                let g = Self::gaussian(&self.data, n);
                let h = (&g + g.adjoint()) * C64::new(0.5, 0.0);
                Self::scaled(h, rho)
            }
            OpClass::Positive => {
                let g = Self::gaussian(&self.data, n);
                let p = g.adjoint() * &g;
                // G*G is Hermitian in exact arithmetic; enforce it on the floats
                let p = DMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        C64::new(p[(i, i)].re, 0.0)
                    } else if i < j {
                        p[(i, j)]
                    } else {
                        p[(j, i)].conj()
                    }
                });
                Self::scaled(p, rho)
            }
            OpClass::Normal => {
                let q = Self::unitary(Self::gaussian(&self.data, n));
                let tail = &self.data[2 * n * n..];
                let d: Vec<C64> = (0..n).map(|i| C64::new(tail[2 * i], tail[2 * i + 1])).collect();
                let top = d.iter().map(|z| z.norm()).fold(0.0, f64::max);
                let scale = if top > 0.0 { rho / top } else { 1.0 };
                let diag = DMatrix::from_fn(n, n, |i, j| if i == j { d[i] * scale } else { C64::new(0.0, 0.0) });
                &q * diag * q.adjoint()
            }
            OpClass::Unitary => Self::unitary(Self::gaussian(&self.data, n)),
            OpClass::SquareZero => {
                let h = n / 2;
                let b = Self::scaled(Self::gaussian(&self.data, h), rho);
                let mut m = DMatrix::zeros(n, n);
                m.view_mut((0, h), (h, h)).copy_from(&b);
                m
            }
        };
        ComplexMatrix::wrap(m)
    }
}

fn spectral_norm(m: &DMatrix<C64>) -> f64 {
    m.singular_values().max()
}

/// Splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of sample `index` of check number `check_index` at dimension `dim`.
pub fn sample_seed(master: u64, check_index: usize, dim: usize, index: usize) -> u64 {
    let h = mix(mix(mix(mix(master) ^ check_index as u64) ^ dim as u64) ^ index as u64);
    let cycle = index as u64 % CLASS_CYCLE;
    (h & !0xFFFF) | (cycle << 8) | (dim as u64 & 0xFF)
}

pub fn seed_dim(seed: u64) -> usize {
    (seed & 0xFF) as usize
}

pub fn seed_cycle(seed: u64) -> usize {
    ((seed >> 8) & 0xFF) as usize
}

/// Operators, parameters and probe vectors of one seeded instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub seed: u64,
    pub raw: Vec<RawSample>,
    pub ops: Vec<ComplexMatrix>,
    pub params: Params,
    pub vectors: Vec<ComplexVector>,
}

/// Classes slot `slot` may take in dimension `n`.
pub fn slot_classes(check: &CheckDef, slot: usize, n: usize) -> Vec<OpClass> {
    check.slots[slot].classes.iter().copied().filter(|c| c.available_in(n)).collect()
}

pub fn unit_vector(n: usize, rng: &mut impl Rng) -> ComplexVector {
    loop {
        let v = ComplexVector::from_fn(n, |_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let nv = v.norm();
        if nv > 1e-12 {
            return v / C64::new(nv, 0.0);
        }
    }
}

/// Draws parameters from the check's grids, applying `overrides` afterwards
/// (the grid draw still happens so the random stream does not shift).
pub fn draw_params(check: &CheckDef, overrides: &Params, rng: &mut impl Rng) -> Params {
    let mut out = Params::new();
    for spec in check.params {
        let v = spec.grid[rng.random_range(0..spec.grid.len())];
        out.set(spec.name, overrides.get(spec.name).unwrap_or(v));
    }
    out
}

/// Rebuilds the instance a sample seed describes. With `class`, every slot
/// uses that class instead of cycling through the slot's classes.
pub fn instance_from_seed(check: &CheckDef, seed: u64, overrides: &Params, class: Option<OpClass>) -> Result<Instance> {
    let n = seed_dim(seed);
    if n == 0 {
        return Err(Error::BadDim(format!("seed {seed} encodes dimension 0")));
    }
    let cycle = seed_cycle(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = draw_params(check, overrides, &mut rng);
    let mut raw = Vec::with_capacity(check.slots.len());
    for k in 0..check.slots.len() {
        let class = match class {
            Some(c) => c,
            None => {
                let classes = slot_classes(check, k, n);
                if classes.is_empty() {
                    return Err(Error::BadDim(format!("slot {} of {} has no class in dimension {n}", k, check.id)));
                }
                classes[(cycle + k) % classes.len()]
            }
        };
        raw.push(RawSample::draw(class, n, &mut rng)?);
    }
    let vectors = if check.kind == CheckKind::Operator {
        Vec::new()
    } else {
        (0..VECTORS_PER_INSTANCE).map(|_| unit_vector(n, &mut rng)).collect()
    };
    let ops = raw.iter().map(RawSample::build).collect();
    Ok(Instance { seed, raw, ops, params, vectors })
}
