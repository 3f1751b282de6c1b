use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::sampling::{instance_from_seed, sample_seed};
use crate::error::{Error, Result};
use crate::registry::{evaluate, find_check, identity_checks, list_checks, CheckDef, Evaluation, Expected, Params};

/// Default relative tolerance: a part fails when its normalized slack is below `−tol`.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Check ids; empty means the whole catalog.
    pub checks: Vec<String>,
    pub dims: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Worker threads; `None` uses every available core.
    pub workers: Option<usize>,
    /// Parameter overrides, applied to the checks that declare them.
    pub params: Params,
    /// Evaluate printed forms where they differ from the encoded ones.
    pub literal: bool,
    /// Record wall-clock time per report (makes output run-dependent).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: Vec::new(),
            dims: vec![2, 3, 4],
            samples: 100,
            seed: 1,
            tol: DEFAULT_TOL,
            workers: None,
            params: Params::new(),
            literal: false,
            timings: false,
        }
    }
}

/// Expands a suite name into check ids: `all`, `identities`, or a comma list.
pub fn resolve_suite(name: &str) -> Result<Vec<String>> {
    let ids: Vec<String> = match name.trim() {
        "all" => list_checks().iter().map(|c| c.id.to_string()).collect(),
        "identities" => identity_checks().iter().map(|c| c.id).chain(["L3.3"]).map(String::from).collect(),
        list => list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect(),
    };
    if ids.is_empty() {
        return Err(Error::ConfigError("empty check selection".into()));
    }
    for id in &ids {
        find_check(id)?;
    }
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    KnownTypoConfirmed,
    KnownTypoUnconfirmed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::KnownTypoConfirmed => "known-typo-confirmed",
            Verdict::KnownTypoUnconfirmed => "known-typo-unconfirmed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    /// Sample seed; absent for shipped witnesses.
    pub seed: Option<u64>,
    /// Normalized slack of the violated part.
    pub slack: f64,
    pub params: Params,
    pub part: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleError {
    pub seed: u64,
    pub message: String,
}

/// Aggregate over all samples of one check at one dimension.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub check: String,
    pub dim: usize,
    pub samples: usize,
    /// Smallest normalized slack seen (`None` if every sample errored).
    pub min_slack: Option<f64>,
    pub min_slack_seed: Option<u64>,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
    pub wall_time_ms: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<SampleError>,
}

/// Index of a check in the combined catalog; part of every sample seed.
fn catalog_index(id: &str) -> usize {
    list_checks().iter().chain(identity_checks()).position(|c| c.id == id).expect("resolved id")
}

/// Overrides restricted to the parameters `check` declares.
pub fn overrides_for(check: &CheckDef, params: &Params) -> Params {
    let mut out = Params::new();
    for (k, v) in params.iter() {
        if check.param(k).is_some() {
            out.set(k, v);
        }
    }
    out
}

fn validate(cfg: &SuiteConfig) -> Result<()> {
    if cfg.samples == 0 {
        return Err(Error::ConfigError("samples must be at least 1".into()));
    }
    if cfg.dims.is_empty() {
        return Err(Error::ConfigError("no dimensions given".into()));
    }
    if let Some(&d) = cfg.dims.iter().find(|&&d| !(2..=255).contains(&d)) {
        return Err(Error::ConfigError(format!("dimension {d} outside 2..=255")));
    }
    if !(cfg.tol.is_finite() && cfg.tol >= 0.0) {
        return Err(Error::ConfigError(format!("tolerance must be finite and nonnegative, got {}", cfg.tol)));
    }
    if cfg.workers == Some(0) {
        return Err(Error::ConfigError("workers must be at least 1".into()));
    }
    for (k, _) in cfg.params.iter() {
        let declared = cfg.checks.iter().filter_map(|id| find_check(id).ok()).any(|c| c.param(k).is_some());
        if !declared {
            return Err(Error::ConfigError(format!("no selected check has a parameter `{k}`")));
        }
    }
    Ok(())
}

/// Evaluates the instance behind a sample seed.
pub fn replay(check: &CheckDef, seed: u64, params: &Params, literal: bool) -> Result<Evaluation> {
    let inst = instance_from_seed(check, seed, &overrides_for(check, params), None)?;
    let mut e = evaluate(check, &inst.ops, &inst.params, &inst.vectors, literal)?;
    e.seed = Some(seed);
    Ok(e)
}

struct Outcome {
    seed: u64,
    result: Result<Evaluation>,
    millis: f64,
}

fn run_sample(check: &CheckDef, seed: u64, cfg: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let result = replay(check, seed, &cfg.params, cfg.literal);
    Outcome { seed, result, millis: start.elapsed().as_secs_f64() * 1e3 }
}

/// Evaluations of the shipped witnesses that apply in the current mode.
fn witness_violations(check: &CheckDef, dim: usize, cfg: &SuiteConfig) -> Vec<Violation> {
    let literal = cfg.literal && check.has_literal();
    let mut out = Vec::new();
    for w in check.witnesses.iter().filter(|w| w.literal_only == literal) {
        let Some(inst) = (w.build)(dim) else { continue };
        let vectors = inst.vectors.unwrap_or_default();
        if let Ok(e) = evaluate(check, &inst.ops, &inst.params, &vectors, cfg.literal) {
            if e.violates(cfg.tol) {
                out.push(Violation {
                    seed: None,
                    slack: e.normalized_slack,
                    params: e.params,
                    part: e.part,
                    witness: Some(w.description.to_string()),
                });
            }
        }
    }
    out
}

fn aggregate(check: &CheckDef, dim: usize, outcomes: Vec<Outcome>, cfg: &SuiteConfig) -> CheckReport {
    let expected = check.effective_expected(cfg.literal);
    let mut min: Option<(f64, u64)> = None;
    let mut violations = Vec::new();
    let mut errors = Vec::new();
    let mut millis = 0.0;
    for o in &outcomes {
        millis += o.millis;
        match &o.result {
            Ok(e) => {
                if min.is_none_or(|(m, _)| e.normalized_slack < m) {
                    min = Some((e.normalized_slack, o.seed));
                }
                if e.violates(cfg.tol) {
                    violations.push(Violation {
                        seed: Some(o.seed),
                        slack: e.normalized_slack,
                        params: e.params.clone(),
                        part: e.part.clone(),
                        witness: None,
                    });
                }
            }
            Err(err) => errors.push(SampleError { seed: o.seed, message: err.to_string() }),
        }
    }
    if expected == Expected::KnownTypo {
        violations.extend(witness_violations(check, dim, cfg));
    }
    let verdict = match expected {
        Expected::Pass if violations.is_empty() && errors.is_empty() => Verdict::Pass,
        Expected::Pass => Verdict::Fail,
        Expected::KnownTypo if violations.is_empty() => Verdict::KnownTypoUnconfirmed,
        Expected::KnownTypo => Verdict::KnownTypoConfirmed,
    };
    CheckReport {
        check: check.id.to_string(),
        dim,
        samples: outcomes.len(),
        min_slack: min.map(|m| m.0),
        min_slack_seed: min.map(|m| m.1),
        violations,
        verdict,
        wall_time_ms: cfg.timings.then_some(millis),
        errors,
    }
}

/// Runs every selected check at every dimension on `samples` seeded instances.
///
/// Reports come back in check order, then dimension order. Per-sample seeds
/// depend only on the master seed and the sample's position, and results are
/// merged by index, so the output does not depend on the worker count.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut cfg = cfg.clone();
    if cfg.checks.is_empty() {
        cfg.checks = list_checks().iter().map(|c| c.id.to_string()).collect();
    }
    let checks: Vec<&CheckDef> = cfg.checks.iter().map(|id| find_check(id)).collect::<Result<_>>()?;
    validate(&cfg)?;

    let tasks: Vec<(usize, usize, u64)> = checks
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| {
            let idx = catalog_index(c.id);
            cfg.dims.iter().flat_map(move |&d| (0..cfg.samples).map(move |s| (ci, d, sample_seed(cfg.seed, idx, d, s))))
        })
        .collect();

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| Error::ConfigError(format!("thread pool: {e}")))?;
    let outcomes: Vec<Outcome> =
        pool.install(|| tasks.par_iter().map(|&(ci, _, seed)| run_sample(checks[ci], seed, &cfg)).collect());

    let mut outcomes = outcomes.into_iter();
    let mut reports = Vec::with_capacity(checks.len() * cfg.dims.len());
    for check in &checks {
        for &d in &cfg.dims {
            let chunk: Vec<Outcome> = outcomes.by_ref().take(cfg.samples).collect();
            reports.push(aggregate(check, d, chunk, &cfg));
        }
    }
    Ok(reports)
}

/// Whether any report failed.
pub fn any_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CsvRow<'a> {
    check: &'a str,
    dim: usize,
    samples: usize,
    min_slack: Option<f64>,
    min_slack_seed: Option<u64>,
    violations: usize,
    verdict: &'static str,
    wall_time_ms: Option<f64>,
    errors: usize,
}

/// One row per report; violations and errors as counts.
pub fn reports_to_csv(reports: &[CheckReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(CsvRow {
            check: &r.check,
            dim: r.dim,
            samples: r.samples,
            min_slack: r.min_slack,
            min_slack_seed: r.min_slack_seed,
            violations: r.violations.len(),
            verdict: r.verdict.as_str(),
            wall_time_ms: r.wall_time_ms,
            errors: r.errors.len(),
        })
        .map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(format!("csv: {e}")))
}

pub fn reports_to_json(reports: &[CheckReport]) -> Result<String> {
    serde_json::to_string_pretty(reports).map_err(|e| Error::Parse(format!("json: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(ids: &[&str], dims: &[usize], samples: usize) -> SuiteConfig {
        SuiteConfig {
            checks: ids.iter().map(|s| s.to_string()).collect(),
            dims: dims.to_vec(),
            samples,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn n1_suite_passes() {
        let reports = run_suite(&cfg(&["N1"], &[2, 4], 50)).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass);
            assert!(r.min_slack.unwrap() >= -1e-8);
            assert_eq!(r.wall_time_ms, None);
        }
    }

    #[test]
    fn known_typo_is_confirmed() {
        let reports = run_suite(&cfg(&["KT-C3.9p"], &[2], 5)).unwrap();
        assert_eq!(reports[0].verdict, Verdict::KnownTypoConfirmed);
        assert!(reports[0].violations.iter().any(|v| v.witness.is_some()));
    }

    #[test]
    fn config_validation() {
        assert!(matches!(run_suite(&cfg(&["N1"], &[2], 0)), Err(Error::ConfigError(_))));
        assert!(matches!(run_suite(&cfg(&["N1"], &[1], 3)), Err(Error::ConfigError(_))));
        assert!(matches!(run_suite(&cfg(&["X9"], &[2], 3)), Err(Error::UnknownCheck(_))));
        let mut c = cfg(&["N1"], &[2], 3);
        c.params = Params::new().with("r", 2.0);
        assert!(matches!(run_suite(&c), Err(Error::ConfigError(_))));
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let mut a = cfg(&["T2.5", "C3.4"], &[2, 3], 6);
        a.workers = Some(1);
        let mut b = a.clone();
        b.workers = Some(3);
        assert_eq!(
            reports_to_json(&run_suite(&a).unwrap()).unwrap(),
            reports_to_json(&run_suite(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn replay_reproduces_min_slack() {
        let reports = run_suite(&cfg(&["C3.9"], &[3], 8)).unwrap();
        let r = &reports[0];
        let e = replay(find_check("C3.9").unwrap(), r.min_slack_seed.unwrap(), &Params::new(), false).unwrap();
        assert_eq!(e.normalized_slack.to_bits(), r.min_slack.unwrap().to_bits());
    }

    #[test]
    fn suite_names() {
        assert_eq!(resolve_suite("all").unwrap().len(), 34);
        assert_eq!(resolve_suite("identities").unwrap().len(), 5);
        assert_eq!(resolve_suite("N1, N2").unwrap(), vec!["N1", "N2"]);
        assert!(resolve_suite("N1,zz").is_err());
    }

    #[test]
    fn csv_has_one_row_per_report() {
        let reports = run_suite(&cfg(&["N1"], &[2, 3], 2)).unwrap();
        let text = reports_to_csv(&reports).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("check,dim,samples,minSlack"));
    }
}
