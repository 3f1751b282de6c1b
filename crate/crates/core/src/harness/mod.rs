//! Seeded sampling, suite execution, tightness search and report output.

pub mod sampling;
pub mod suite;
pub mod tighten;

pub use sampling::{sample_operator, RawSample, SampleSpec};
pub use suite::{
    any_failure, replay, reports_to_csv, reports_to_json, resolve_suite, run_suite, CheckReport, SuiteConfig, Verdict,
    Violation, DEFAULT_TOL,
};
pub use tighten::{tightness_search, TightenConfig, TightnessResult};
