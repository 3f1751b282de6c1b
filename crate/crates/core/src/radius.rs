//! Scalar functionals: operator norm, numerical radius, field-of-values
//! boundary, Crawford number and spectral radius.
//!
//! Everything numerical-range related goes through the support function
//! `g(θ) = λmax(Re(e^{iθ}T))`. It is 2π-periodic and Lipschitz with constant
//! `‖T‖`, `w(T) = max_θ g(θ)`, and `c(T) = max(0, −min_θ g(θ))`.

use std::f64::consts::{PI, TAU};

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    eig_general, hermitian_eigenvalues_unchecked, largest_singular_value, max_eigenpair, ComplexMatrix, ComplexVector,
    C64,
};

/// Knobs for the angle search shared by [`numerical_radius_with`] and [`crawford_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusConfig {
    /// Number of uniformly spaced angles in `[0, 2π)`; rounded up to even.
    pub grid: usize,
    /// How many of the best grid brackets get golden-section refinement.
    pub refine_brackets: usize,
    /// Target bracket width for the refinement.
    pub bracket_tol: f64,
    /// Golden-section iteration budget per bracket.
    pub max_iters: usize,
    /// Enclosure tolerance, relative to `1 + ‖T‖`.
    pub encl_tol: f64,
}

impl Default for RadiusConfig {
    fn default() -> Self {
        Self { grid: 720, refine_brackets: 3, bracket_tol: 1e-12, max_iters: 200, encl_tol: 1e-9 }
    }
}

impl RadiusConfig {
    /// Defaults for the Crawford number (finer grid).
    pub fn crawford() -> Self {
        Self { grid: 1440, ..Self::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RadiusResult {
    pub value: f64,
    /// Maximizing angle in `[0, 2π)`.
    pub theta_star: f64,
    #[serde(skip)]
    pub witness: ComplexVector,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Debug)]
pub struct FovBoundary {
    pub points: Vec<C64>,
    pub angles: Vec<f64>,
}

/// Precomputed Cartesian parts for repeated evaluation of `Re(e^{iθ}T)`.
struct RotatedRealPart {
    x: DMatrix<C64>,
    y: DMatrix<C64>,
}

impl RotatedRealPart {
    fn new(t: &ComplexMatrix) -> Self {
        let x = t.hermitian_part().into_nalgebra();
        let y = t.scale(C64::new(0.0, -1.0)).hermitian_part().into_nalgebra();
        Self { x, y }
    }

    /// `cos θ·X − sin θ·Y`; exactly self-adjoint because X and Y are.
    fn at(&self, theta: f64) -> DMatrix<C64> {
        let (s, c) = theta.sin_cos();
        self.x.zip_map(&self.y, |a, b| a * c - b * s)
    }

    /// `(λmin, λmax)` of `Re(e^{iθ}T)`.
    fn extremes(&self, theta: f64) -> (f64, f64) {
        let ev = hermitian_eigenvalues_unchecked(&self.at(theta));
        (ev[0], ev[ev.len() - 1])
    }

    fn support(&self, theta: f64) -> f64 {
        self.extremes(theta).1
    }
}

pub fn op_norm(t: &ComplexMatrix) -> Result<f64> {
    largest_singular_value(t)
}

/// `λmax(Re(e^{iθ}T))`.
pub fn real_part_extreme(t: &ComplexMatrix, theta: f64) -> Result<f64> {
    t.dim()?;
    Ok(RotatedRealPart::new(t).support(theta))
}

/// Support-function samples on the uniform grid, `g(2πk/K)` for `k < K`.
/// Eigenvalues of `Re(e^{iθ}T)` give `g(θ)` and `g(θ+π) = −λmin`, so only
/// half the grid needs a solve.
fn support_grid(rot: &RotatedRealPart, k: usize) -> Vec<f64> {
    let half = k / 2;
    let mut g = vec![0.0; k];
    for j in 0..half {
        let (lo, hi) = rot.extremes(TAU * j as f64 / k as f64);
        g[j] = hi;
        g[j + half] = -lo;
    }
    g
}

struct Extremum {
    theta: f64,
    value: f64,
    width: f64,
}

/// Golden-section search for a maximum of `f` on `[a, b]`.
fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64, max_iters: usize) -> Extremum {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc >= fd { (c, fc) } else { (d, fd) };
    for _ in 0..max_iters {
        if b - a <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        for (x, fx) in [(c, fc), (d, fd)] {
            if fx > best.1 {
                best = (x, fx);
            }
        }
    }
    Extremum { theta: best.0, value: best.1, width: b - a }
}

/// Maximizes a periodic function sampled on a uniform grid: multi-start
/// golden-section refinement on the best local maxima of the grid.
fn periodic_max(f: &impl Fn(f64) -> f64, grid: &[f64], cfg: &RadiusConfig) -> Extremum {
    let k = grid.len();
    let h = TAU / k as f64;
    let mut peaks: Vec<usize> = (0..k)
        .filter(|&j| {
            let prev = grid[(j + k - 1) % k];
            let next = grid[(j + 1) % k];
            grid[j] >= prev && grid[j] >= next
        })
        .collect();
    peaks.sort_by(|&a, &b| grid[b].total_cmp(&grid[a]).then(a.cmp(&b)));
    peaks.truncate(cfg.refine_brackets.max(1));

    let mut best = Extremum { theta: 0.0, value: f64::NEG_INFINITY, width: h };
    for &j in &peaks {
        let centre = h * j as f64;
        let mut e = golden_max(f, centre - h, centre + h, cfg.bracket_tol, cfg.max_iters);
        if grid[j] > e.value {
            e = Extremum { theta: centre, value: grid[j], width: e.width };
        }
        if e.value > best.value {
            best = e;
        }
    }
    best.theta = best.theta.rem_euclid(TAU);
    best
}

fn validated_grid(cfg: &RadiusConfig) -> Result<usize> {
    if cfg.grid < 4 {
        return Err(Error::ConfigError(format!("angle grid must have at least 4 points, got {}", cfg.grid)));
    }
    Ok(cfg.grid + cfg.grid % 2)
}

pub fn numerical_radius(t: &ComplexMatrix) -> Result<RadiusResult> {
    numerical_radius_with(t, &RadiusConfig::default())
}

pub fn numerical_radius_with(t: &ComplexMatrix, cfg: &RadiusConfig) -> Result<RadiusResult> {
    let n = t.dim()?;
    let k = validated_grid(cfg)?;
    let norm = op_norm(t)?;
    if norm == 0.0 {
        let mut witness = ComplexVector::zeros(n);
        witness[0] = C64::new(1.0, 0.0);
        return Ok(RadiusResult { value: 0.0, theta_star: 0.0, witness, lower: 0.0, upper: 0.0 });
    }
    let rot = RotatedRealPart::new(t);
    let grid = support_grid(&rot, k);
    let best = periodic_max(&|th| rot.support(th), &grid, cfg);

    let lower = best.value.max(0.0);
    let upper = lower + norm * best.width;
    let tol = cfg.encl_tol * (1.0 + norm);
    if upper - lower > tol {
        return Err(Error::EnclosureTooWide { width: upper - lower, tol });
    }
    let (_, witness) = max_eigenpair(&ComplexMatrix::wrap(rot.at(best.theta)))?;
    Ok(RadiusResult { value: lower, theta_star: best.theta, witness, lower, upper })
}

/// Boundary points of the numerical range: for `θ_k = 2πk/K`, `⟨Tx,x⟩` with
/// `x` a top eigenvector of `Re(e^{−iθ_k}T)`.
pub fn fov_boundary(t: &ComplexMatrix, k: usize) -> Result<FovBoundary> {
    t.dim()?;
    if k < 3 {
        return Err(Error::ConfigError(format!("need at least 3 boundary points, got {k}")));
    }
    let rot = RotatedRealPart::new(t);
    let mut points = Vec::with_capacity(k);
    let mut angles = Vec::with_capacity(k);
    for j in 0..k {
        let theta = TAU * j as f64 / k as f64;
        let (_, x) = max_eigenpair(&ComplexMatrix::wrap(rot.at(-theta)))?;
        points.push(t.quadratic_form(&x));
        angles.push(theta);
    }
    Ok(FovBoundary { points, angles })
}

/// `c(T) = min_{‖x‖=1} |⟨Tx,x⟩|`, the distance from 0 to the numerical range.
pub fn crawford(t: &ComplexMatrix) -> Result<f64> {
    crawford_with(t, &RadiusConfig::crawford())
}

/// Evaluated as `max(0, −min_θ g(θ))` with the same grid-plus-refinement search
/// as the numerical radius (minimizing `g` is maximizing `θ ↦ −g(θ)`).
pub fn crawford_with(t: &ComplexMatrix, cfg: &RadiusConfig) -> Result<f64> {
    t.dim()?;
    let k = validated_grid(cfg)?;
    let rot = RotatedRealPart::new(t);
    let neg: Vec<f64> = support_grid(&rot, k).into_iter().map(|v| -v).collect();
    let best = periodic_max(&|th| -rot.support(th), &neg, cfg);
    Ok(best.value.max(0.0))
}

/// Distance from the origin to the convex hull of `K` boundary points of the
/// numerical range; 0 when the origin lies inside. Converges to `c(T)` from
/// above as `K` grows.
pub fn crawford_hull(t: &ComplexMatrix, k: usize) -> Result<f64> {
    let fov = fov_boundary(t, k)?;
    Ok(hull_distance_to_origin(&fov.points))
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull (counter-clockwise, no collinear points) by monotone chain.
fn convex_hull(points: &[C64]) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|z| (z.re, z.im)).collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn segment_distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let s = if len2 == 0.0 { 0.0 } else { (-(a.0 * dx + a.1 * dy) / len2).clamp(0.0, 1.0) };
    (a.0 + s * dx).hypot(a.1 + s * dy)
}

pub(crate) fn hull_distance_to_origin(points: &[C64]) -> f64 {
    let hull = convex_hull(points);
    match hull.len() {
        0 => f64::NAN,
        1 => hull[0].0.hypot(hull[0].1),
        2 => segment_distance(hull[0], hull[1]),
        m => {
            let inside = (0..m).all(|i| cross(hull[i], hull[(i + 1) % m], (0.0, 0.0)) >= 0.0);
            if inside {
                0.0
            } else {
                (0..m).map(|i| segment_distance(hull[i], hull[(i + 1) % m])).fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(t: &ComplexMatrix) -> Result<f64> {
    Ok(eig_general(t)?.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Numerical radius of a 2×2 matrix with non-negative entries: the spectral
/// radius of its symmetrization `[(b_ij + b_ji)/2]`, in closed form.
pub fn w_nonneg_entries(b: [[f64; 2]; 2]) -> Result<f64> {
    for (i, row) in b.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v.is_nan() || v < 0.0 {
                return Err(Error::NegativeEntry { row: i, col: j, value: v });
            }
        }
    }
    let (a, d) = (b[0][0], b[1][1]);
    let off = b[0][1] + b[1][0];
    Ok(0.5 * ((a + d) + ((a - d).powi(2) + off * off).sqrt()))
}

/// `max_θ ‖Re(e^{iθ}T)‖`, maximized directly over the operator norm of the
/// rotated real part (a second route to `w(T)`).
pub fn max_rotated_real_norm(t: &ComplexMatrix, cfg: &RadiusConfig) -> Result<f64> {
    t.dim()?;
    let k = validated_grid(cfg)?;
    let rot = RotatedRealPart::new(t);
    let norm_at = |th: f64| {
        let (lo, hi) = rot.extremes(th);
        hi.max(-lo)
    };
    // ‖Re(e^{iθ}T)‖ has period π.
    let grid: Vec<f64> = (0..k).map(|j| norm_at(PI * j as f64 / k as f64)).collect();
    let scaled = |u: f64| norm_at(u / 2.0);
    Ok(periodic_max(&scaled, &grid, cfg).value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{eig_hermitian, vector_norm, I};

    fn jordan() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()
    }

    fn sample(n: usize, k: u64) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |i, j| {
            let a = ((i * 31 + j * 17) as u64 ^ k.wrapping_mul(2654435761)) as f64;
            C64::new((a * 0.37).sin(), (a * 0.91 + 1.0).cos())
        })
    }

    #[test]
    fn op_norm_cases() {
        let t = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert!((op_norm(&t).unwrap() - 2.0).abs() < 1e-15);
        let u = ComplexMatrix::from_row_major(2, 2, vec![C64::new(0.0, 0.0), I, I, C64::new(0.0, 0.0)]).unwrap();
        assert!((op_norm(&u).unwrap() - 1.0).abs() < 1e-15);
        let t = sample(5, 2);
        let top = eig_hermitian(&(&t.adjoint() * &t)).unwrap().max_eigenvalue();
        assert!((op_norm(&t).unwrap() - top.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn real_part_extreme_cases() {
        let h = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, -3.0]]).unwrap();
        let top = eig_hermitian(&h).unwrap().max_eigenvalue();
        assert!((real_part_extreme(&h, 0.0).unwrap() - top).abs() < 1e-14);
        for th in [0.0, 0.3, 1.7, 4.0] {
            assert!((real_part_extreme(&jordan(), th).unwrap() - 0.5).abs() < 1e-15);
        }
        let t = sample(3, 7);
        let a = real_part_extreme(&t, 0.9).unwrap();
        let b = real_part_extreme(&t.scale_re(2.5), 0.9).unwrap();
        assert!((b - 2.5 * a).abs() < 1e-13);
    }

    #[test]
    fn numerical_radius_exact_cases() {
        let r = numerical_radius(&jordan()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
        let r = numerical_radius(&ComplexMatrix::from_real_diagonal(&[-2.0, 1.0])).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = numerical_radius(&ComplexMatrix::zeros(3)).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn radius_result_invariants() {
        for k in 0..5 {
            let t = sample(4, k);
            let r = numerical_radius(&t).unwrap();
            assert!(r.lower <= r.value && r.value <= r.upper);
            assert!(r.upper - r.lower <= 1e-9 * (1.0 + op_norm(&t).unwrap()));
            assert!((0.0..TAU).contains(&r.theta_star));
            assert!((vector_norm(&r.witness) - 1.0).abs() < 1e-12);
            assert!(t.quadratic_form(&r.witness).norm() >= r.lower - 1e-12);
        }
    }

    #[test]
    fn numerical_radius_matches_fine_grid() {
        for k in 0..3 {
            let t = sample(4, 11 + k);
            let rot = RotatedRealPart::new(&t);
            let oracle = (0..20000).map(|j| rot.support(TAU * j as f64 / 20000.0)).fold(f64::MIN, f64::max);
            let w = numerical_radius(&t).unwrap().value;
            assert!(w >= oracle - 1e-12 && w - oracle < 1e-6, "{w} vs {oracle}");
        }
    }

    #[test]
    fn enclosure_failure_is_reported() {
        let cfg = RadiusConfig { max_iters: 2, ..RadiusConfig::default() };
        assert!(matches!(numerical_radius_with(&sample(3, 1), &cfg), Err(Error::EnclosureTooWide { .. })));
        let cfg = RadiusConfig { grid: 2, ..RadiusConfig::default() };
        assert!(matches!(numerical_radius_with(&sample(3, 1), &cfg), Err(Error::ConfigError(_))));
    }

    #[test]
    fn fov_boundary_cases() {
        let d = ComplexMatrix::from_diagonal(&[C64::new(1.0, 0.0), I, C64::new(-1.0, 0.0)]);
        let fov = fov_boundary(&d, 64).unwrap();
        for p in &fov.points {
            // inside the triangle with vertices 1, i, -1
            assert!(p.im >= -1e-10 && p.im + p.re <= 1.0 + 1e-10 && p.im - p.re <= 1.0 + 1e-10, "{p}");
        }
        for p in fov_boundary(&jordan(), 32).unwrap().points {
            assert!((p.norm() - 0.5).abs() < 1e-9);
        }
        let t = sample(4, 3);
        let w = numerical_radius(&t).unwrap().value;
        assert!(fov_boundary(&t, 50).unwrap().points.iter().all(|p| p.norm() <= w + 1e-9));
        assert!(matches!(fov_boundary(&t, 2), Err(Error::ConfigError(_))));
    }

    #[test]
    fn crawford_cases() {
        assert!((crawford(&ComplexMatrix::identity(3)).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(crawford(&ComplexMatrix::from_real_diagonal(&[1.0, -1.0])).unwrap(), 0.0);
        assert!((crawford(&ComplexMatrix::from_real_diagonal(&[1.0, 2.0])).unwrap() - 1.0).abs() < 1e-12);
        assert!((crawford_hull(&ComplexMatrix::from_real_diagonal(&[1.0, 2.0]), 16).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn crawford_agrees_with_hull_route() {
        // shifted away from the origin so the distance is positive
        let t = &sample(3, 5).scale_re(0.3) + &ComplexMatrix::identity(3).scale(C64::new(1.0, 0.5));
        let c = crawford(&t).unwrap();
        let hull = crawford_hull(&t, 1440).unwrap();
        assert!(c > 0.1);
        assert!(hull >= c - 1e-12 && hull - c < 1e-5, "{c} vs {hull}");
    }

    #[test]
    fn hull_distance_degenerate_inputs() {
        assert_eq!(hull_distance_to_origin(&[C64::new(3.0, 4.0)]), 5.0);
        let seg = [C64::new(1.0, -1.0), C64::new(1.0, 1.0), C64::new(1.0, 0.0)];
        assert!((hull_distance_to_origin(&seg) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn spectral_radius_cases() {
        assert!((spectral_radius(&ComplexMatrix::from_real_diagonal(&[2.0, -3.0])).unwrap() - 3.0).abs() < 1e-14);
        assert!(spectral_radius(&jordan()).unwrap() < 1e-15);
        for (a, b, c, d) in [(1.0, 2.0, 0.5, 0.25), (0.0, 3.0, 1.0, 4.0), (2.0, 0.0, 0.0, 1.0)] {
            let m = ComplexMatrix::from_real_rows(&[&[a, b], &[c, d]]).unwrap();
            let closed = ((a + d) + ((a - d) * (a - d) + 4.0 * b * c).sqrt()) / 2.0;
            assert!((spectral_radius(&m).unwrap() - closed).abs() < 1e-10);
        }
    }

    #[test]
    fn nonneg_entries_closed_form() {
        assert!((w_nonneg_entries([[0.0, 1.0], [0.0, 0.0]]).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(w_nonneg_entries([[3.0, 0.0], [0.0, 1.5]]).unwrap(), 3.0);
        assert!(matches!(
            w_nonneg_entries([[1.0, -1.0], [0.0, 0.0]]),
            Err(Error::NegativeEntry { row: 0, col: 1, .. })
        ));
        for m in [[[0.3, 1.2], [0.1, 0.8]], [[2.0, 0.0], [3.0, 0.5]]] {
            let t = ComplexMatrix::from_real_rows(&[&m[0], &m[1]]).unwrap();
            let w = numerical_radius(&t).unwrap().value;
            assert!((w_nonneg_entries(m).unwrap() - w).abs() < 1e-9);
        }
    }

    #[test]
    fn rotated_norm_route_agrees() {
        for k in 0..3 {
            let t = sample(3, 40 + k);
            let a = numerical_radius(&t).unwrap().value;
            let b = max_rotated_real_norm(&t, &RadiusConfig::default()).unwrap();
            assert!((a - b).abs() < 1e-10);
        }
    }
}
