use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::sampling::{instance_from_seed, sample_seed, RawSample};
use super::suite::overrides_for;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::registry::{evaluate, find_check, CheckDef, Evaluation, OpClass, Params};

#[derive(Clone, Debug)]
pub struct TightenConfig {
    pub restarts: usize,
    /// Perturbation steps per restart.
    pub steps: usize,
    pub dims: Vec<usize>,
    /// Force every slot to this class.
    pub class: Option<OpClass>,
    /// Minimize this part only instead of the worst part.
    pub part: Option<String>,
    pub params: Params,
    pub seed: u64,
    pub literal: bool,
}

impl Default for TightenConfig {
    fn default() -> Self {
        Self {
            restarts: 20,
            steps: 200,
            dims: vec![2, 3, 4],
            class: None,
            part: None,
            params: Params::new(),
            seed: 1,
            literal: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TightnessResult {
    /// Best evaluation found; `seed` is the seed of the restart it came from.
    pub best: Evaluation,
    /// Objective value (normalized slack of the selected part).
    pub min_slack: f64,
    /// Seeds of all restarts, in order.
    pub seed_trail: Vec<u64>,
    /// Objective after each restart's descent.
    pub restart_slacks: Vec<f64>,
    #[serde(skip)]
    pub operators: Vec<ComplexMatrix>,
}

fn objective(e: &Evaluation, part: Option<&str>) -> f64 {
    match part {
        None => e.normalized_slack,
        Some(label) => {
            e.parts.iter().filter(|p| p.label == label).map(|p| p.normalized_slack()).fold(f64::INFINITY, f64::min)
        }
    }
}

struct Probe<'a> {
    check: &'a CheckDef,
    params: &'a Params,
    vectors: &'a [crate::linalg::ComplexVector],
    literal: bool,
    part: Option<&'a str>,
}

impl Probe<'_> {
    fn eval(&self, raw: &[RawSample]) -> Option<(f64, Evaluation, Vec<ComplexMatrix>)> {
        let ops: Vec<ComplexMatrix> = raw.iter().map(RawSample::build).collect();
        let e = evaluate(self.check, &ops, self.params, self.vectors, self.literal).ok()?;
        let f = objective(&e, self.part);
        f.is_finite().then_some((f, e, ops))
    }
}

/// Multi-start random search with coordinate perturbation descent on the
/// slack of `check_id`.
///
/// Each restart draws a seeded instance, then repeatedly perturbs one
/// coordinate of the underlying sample data (or its target norm) and keeps
/// the change when the slack decreases. The step size halves after a run of
/// rejected moves.
pub fn tightness_search(check_id: &str, cfg: &TightenConfig) -> Result<TightnessResult> {
    let check = find_check(check_id)?;
    if cfg.restarts == 0 {
        return Err(Error::ConfigError("restarts must be at least 1".into()));
    }
    if cfg.dims.is_empty() || cfg.dims.iter().any(|&d| !(1..=255).contains(&d)) {
        return Err(Error::ConfigError("dimensions must lie in 1..=255".into()));
    }
    if let Some(class) = cfg.class {
        if let Some(slot) = check.slots.iter().find(|s| !s.classes.contains(&class)) {
            return Err(Error::ConfigError(format!(
                "slot {} of {} does not accept class {class}",
                slot.name, check.id
            )));
        }
        if let Some(&d) = cfg.dims.iter().find(|&&d| !class.available_in(d)) {
            return Err(Error::ConfigError(format!("class {class} is not available in dimension {d}")));
        }
    }
    check.resolve_params(&overrides_for(check, &cfg.params))?;

    let mut best: Option<(f64, Evaluation, Vec<ComplexMatrix>)> = None;
    let mut trail = Vec::with_capacity(cfg.restarts);
    let mut restart_slacks = Vec::with_capacity(cfg.restarts);
    for r in 0..cfg.restarts {
        let dim = cfg.dims[r % cfg.dims.len()];
        let seed = sample_seed(cfg.seed, usize::MAX, dim, r);
        trail.push(seed);
        let inst = match instance_from_seed(check, seed, &overrides_for(check, &cfg.params), cfg.class) {
            Ok(i) => i,
            Err(_) => continue,
        };
        let probe = Probe {
            check,
            params: &inst.params,
            vectors: &inst.vectors,
            literal: cfg.literal,
            part: cfg.part.as_deref(),
        };
        let Some(mut current) = probe.eval(&inst.raw) else {
            restart_slacks.push(f64::INFINITY);
            continue;
        };
        let mut raw = inst.raw.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
        let mut step = 0.25;
        let mut rejected = 0;
        for _ in 0..cfg.steps {
            if step < 1e-9 {
                break;
            }
            let slot = rng.random_range(0..raw.len());
            let mut trial = raw.clone();
            let coord = rng.random_range(0..=trial[slot].data.len());
            let delta: f64 = step * rng.sample::<f64, _>(StandardNormal);
            if coord == trial[slot].data.len() {
                trial[slot].rho = (trial[slot].rho * (1.0 + delta)).clamp(0.05, 2.0);
            } else {
                trial[slot].data[coord] += delta;
            }
            match probe.eval(&trial) {
                Some(next) if next.0 < current.0 => {
                    raw = trial;
                    current = next;
                    rejected = 0;
                }
                _ => {
                    rejected += 1;
                    if rejected >= 12 {
                        step *= 0.5;
                        rejected = 0;
                    }
                }
            }
        }
        restart_slacks.push(current.0);
        current.1.seed = Some(seed);
        if best.as_ref().is_none_or(|b| current.0 < b.0) {
            best = Some(current);
        }
    }
    let (min_slack, best, operators) =
        best.ok_or_else(|| Error::AssumptionViolated(format!("no restart of {check_id} produced a finite slack")))?;
    Ok(TightnessResult { best, min_slack, seed_trail: trail, restart_slacks, operators })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_operators_attain_the_norm() {
        let cfg = TightenConfig {
            restarts: 3,
            steps: 20,
            class: Some(OpClass::Normal),
            part: Some("upper".into()),
            ..TightenConfig::default()
        };
        let r = tightness_search("N1", &cfg).unwrap();
        assert!(r.min_slack <= 1e-6);
        assert_eq!(r.seed_trail.len(), 3);
    }

    #[test]
    fn square_zero_attains_half_norm() {
        let cfg = TightenConfig {
            restarts: 2,
            steps: 10,
            dims: vec![2, 4],
            class: Some(OpClass::SquareZero),
            part: Some("lower".into()),
            ..TightenConfig::default()
        };
        assert!(tightness_search("N1", &cfg).unwrap().min_slack <= 1e-6);
    }

    #[test]
    fn aluthge_bound_is_attained_in_dimension_two() {
        let cfg = TightenConfig { dims: vec![2], params: Params::new().with("p", 1.0), ..TightenConfig::default() };
        assert!(tightness_search("T3.1", &cfg).unwrap().min_slack <= 1e-6);
    }

    #[test]
    fn rejects_bad_class() {
        let cfg = TightenConfig { class: Some(OpClass::General), ..TightenConfig::default() };
        assert!(matches!(tightness_search("C3.8", &cfg), Err(Error::ConfigError(_))));
        assert!(matches!(tightness_search("nope", &cfg), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn descent_never_increases_slack() {
        let cfg = TightenConfig { restarts: 2, steps: 40, dims: vec![3], ..TightenConfig::default() };
        let r = tightness_search("N3", &cfg).unwrap();
        let check = find_check("N3").unwrap();
        for (k, &seed) in r.seed_trail.iter().enumerate() {
            let inst = instance_from_seed(check, seed, &Params::new(), None).unwrap();
            let start = evaluate(check, &inst.ops, &inst.params, &inst.vectors, false).unwrap();
            assert!(r.restart_slacks[k] <= start.normalized_slack);
        }
    }
}
