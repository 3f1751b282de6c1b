//! Executable catalog of numerical-radius inequalities and identities.
//!
//! Each [`CheckDef`] evaluates to a list of [`Part`]s, one per inequality or
//! identity in the statement. A part holds `lhs ≤ rhs` (or `lhs = rhs`); the
//! evaluation keeps the part with the smallest normalized slack.

mod checks;
mod table;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, ComplexMatrix, ComplexVector};

pub use table::{find_check, identity_checks, list_checks};

/// Operator classes the sampler can produce and the checks can require.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpClass {
    General,
    Normal,
    #[serde(rename = "selfadjoint")]
    SelfAdjoint,
    Positive,
    Unitary,
    #[serde(rename = "squarezero")]
    SquareZero,
}

impl OpClass {
    pub const ALL: [OpClass; 6] = [
        OpClass::General,
        OpClass::Normal,
        OpClass::SelfAdjoint,
        OpClass::Positive,
        OpClass::Unitary,
        OpClass::SquareZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OpClass::General => "general",
            OpClass::Normal => "normal",
            OpClass::SelfAdjoint => "selfadjoint",
            OpClass::Positive => "positive",
            OpClass::Unitary => "unitary",
            OpClass::SquareZero => "squarezero",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::ConfigError(format!("unknown operator class `{name}`")))
    }

    /// Whether `m` belongs to the class, up to roundoff relative to its size.
    pub fn contains(self, m: &ComplexMatrix) -> bool {
        let scale = 1.0 + m.frobenius_norm();
        let tol = 1e-10 * scale * scale;
        match self {
            OpClass::General => true,
            OpClass::SelfAdjoint => m.is_hermitian(1e-10 * scale),
            OpClass::Positive => {
                m.is_hermitian(1e-10 * scale)
                    && eig_hermitian(&m.hermitian_part()).is_ok_and(|e| e.eigenvalues[0] >= -1e-10 * scale)
            }
            OpClass::Normal => {
                let a = m.adjoint();
                (&a * m).frobenius_distance(&(m * &a)) <= tol
            }
            OpClass::Unitary => {
                let n = m.rows();
                (&m.adjoint() * m).frobenius_distance(&ComplexMatrix::identity(n)) <= 1e-10 * n as f64
            }
            OpClass::SquareZero => (m * m).frobenius_norm() <= tol,
        }
    }

    /// Classes that admit a sample in dimension `n`.
    pub fn available_in(self, n: usize) -> bool {
        self != OpClass::SquareZero || n.is_multiple_of(2)
    }
}

impl fmt::Display for OpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One operator argument of a check and the classes it accepts.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Slot {
    pub name: &'static str,
    pub classes: &'static [OpClass],
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Domain {
    /// `x ≥ min`.
    AtLeast { min: f64 },
    /// `lo ≤ x ≤ hi`.
    Closed { lo: f64, hi: f64 },
    /// `lo < x < hi`.
    Open { lo: f64, hi: f64 },
    /// Integer `x ≥ min`.
    Integer { min: f64 },
    /// Angle in `[0, 2π)`.
    Angle,
}

impl Domain {
    pub fn contains(&self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        match *self {
            Domain::AtLeast { min } => x >= min,
            Domain::Closed { lo, hi } => (lo..=hi).contains(&x),
            Domain::Open { lo, hi } => x > lo && x < hi,
            Domain::Integer { min } => x >= min && x.fract() == 0.0,
            Domain::Angle => (0.0..std::f64::consts::TAU).contains(&x),
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            Domain::AtLeast { min } => format!(">= {min}"),
            Domain::Closed { lo, hi } => format!("[{lo}, {hi}]"),
            Domain::Open { lo, hi } => format!("({lo}, {hi})"),
            Domain::Integer { min } => format!("integer >= {min}"),
            Domain::Angle => "[0, 2pi)".into(),
        }
    }
}

/// A scalar parameter of a check: its admissible range, the grid it is
/// sampled from and the value used when none is given.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
    pub grid: &'static [f64],
    pub default: f64,
}

/// Named parameter values.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, f64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `k=v,k=v`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Self::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::ConfigError(format!("expected key=value, found `{item}`")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::ConfigError(format!("parameter `{}` needs a number, got `{v}`", k.trim())))?;
            out.set(k.trim(), v);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Operator,
    Vector,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Pass,
    KnownTypo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartKind {
    Inequality,
    Identity,
}

/// Where the statement comes from, with a short verbatim quote.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Reference {
    pub anchor: &'static str,
    pub quote: &'static str,
}

/// Operators, parameters and optional probe vectors of a concrete instance.
pub struct WitnessInstance {
    pub ops: Vec<ComplexMatrix>,
    pub params: Params,
    pub vectors: Option<Vec<ComplexVector>>,
}

/// A fixed instance shipped with a check, built for a given dimension.
#[derive(Clone, Copy)]
pub struct Witness {
    pub description: &'static str,
    /// Only meaningful for the printed (literal) form.
    pub literal_only: bool,
    pub build: fn(usize) -> Option<WitnessInstance>,
}

impl fmt::Debug for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Witness")
            .field("description", &self.description)
            .field("literal_only", &self.literal_only)
            .finish()
    }
}

pub(crate) type EvalFn = fn(&Ctx) -> Result<Vec<Part>>;

/// One catalog entry.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub slots: &'static [Slot],
    pub params: &'static [ParamSpec],
    pub kind: CheckKind,
    pub expected: Expected,
    pub reference: Reference,
    /// Printed form of the statement when it differs from the encoded one.
    pub literal: Option<&'static str>,
    pub notes: &'static str,
    pub witnesses: &'static [Witness],
    pub(crate) eval: EvalFn,
}

impl fmt::Debug for CheckDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckDef").field("id", &self.id).field("statement", &self.statement).finish()
    }
}

impl CheckDef {
    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    pub fn has_literal(&self) -> bool {
        self.literal.is_some()
    }

    /// Expected status once the literal switch is applied.
    pub fn effective_expected(&self, literal: bool) -> Expected {
        if literal && self.has_literal() {
            Expected::KnownTypo
        } else {
            self.expected
        }
    }

    /// Fills defaults, rejects unknown names and out-of-range values.
    pub fn resolve_params(&self, given: &Params) -> Result<Params> {
        for (name, _) in given.iter() {
            if self.param(name).is_none() {
                return Err(Error::ConfigError(format!("check {} has no parameter `{name}`", self.id)));
            }
        }
        let mut out = Params::new();
        for spec in self.params {
            let v = given.get(spec.name).unwrap_or(spec.default);
            if !spec.domain.contains(v) {
                return Err(Error::ParamOutOfRange {
                    name: spec.name.to_string(),
                    value: v,
                    range: spec.domain.describe(),
                });
            }
            out.set(spec.name, v);
        }
        Ok(out)
    }

    /// Checks operator count, shapes and class membership.
    pub fn validate_operators(&self, ops: &[ComplexMatrix]) -> Result<usize> {
        if ops.len() != self.slots.len() {
            return Err(Error::DimensionMismatch(format!(
                "check {} takes {} operators, got {}",
                self.id,
                self.slots.len(),
                ops.len()
            )));
        }
        let n = ops[0].dim()?;
        for (slot, m) in self.slots.iter().zip(ops) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "operator {} is {}x{}, expected {n}x{n}",
                    slot.name,
                    m.rows(),
                    m.cols()
                )));
            }
            if !slot.classes.iter().any(|c| c.contains(m)) {
                let names: Vec<&str> = slot.classes.iter().map(|c| c.name()).collect();
                return Err(Error::AssumptionViolated(format!(
                    "check {}: operator {} must be one of [{}]",
                    self.id,
                    slot.name,
                    names.join(", ")
                )));
            }
        }
        Ok(n)
    }
}

/// One inequality `lhs ≤ rhs` or identity `lhs = rhs` of a statement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Part {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub kind: PartKind,
}

impl Part {
    pub fn le(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self { label: label.into(), lhs, rhs, kind: PartKind::Inequality }
    }

    pub fn eq(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self { label: label.into(), lhs, rhs, kind: PartKind::Identity }
    }

    /// `rhs − lhs` for inequalities, `−|lhs − rhs|` for identities.
    pub fn slack(&self) -> f64 {
        match self.kind {
            PartKind::Inequality => self.rhs - self.lhs,
            PartKind::Identity => -(self.lhs - self.rhs).abs(),
        }
    }

    /// Slack divided by the tolerance scale: `max(1, |rhs|)` for
    /// inequalities, `1 + |rhs|` for identities.
    pub fn normalized_slack(&self) -> f64 {
        let scale = match self.kind {
            PartKind::Inequality => self.rhs.abs().max(1.0),
            PartKind::Identity => 1.0 + self.rhs.abs(),
        };
        self.slack() / scale
    }
}

/// Result of evaluating a check on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Evaluation {
    pub check: String,
    /// Label of the part with the smallest normalized slack.
    pub part: String,
    pub kind: PartKind,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub normalized_slack: f64,
    pub params: Params,
    pub seed: Option<u64>,
    pub literal: bool,
    pub parts: Vec<Part>,
}

impl Evaluation {
    pub fn violates(&self, tol: f64) -> bool {
        self.normalized_slack < -tol
    }

    pub fn find_part(&self, label: &str) -> Option<&Part> {
        self.parts.iter().find(|p| p.label == label)
    }
}

/// Inputs a check body sees.
pub struct Ctx<'a> {
    pub(crate) ops: &'a [ComplexMatrix],
    pub(crate) params: &'a Params,
    pub(crate) vectors: &'a [ComplexVector],
    pub(crate) literal: bool,
}

impl Ctx<'_> {
    fn op(&self, i: usize) -> &ComplexMatrix {
        &self.ops[i]
    }

    fn p(&self, name: &str) -> f64 {
        self.params.get(name).expect("parameters are resolved before evaluation")
    }

    fn vectors(&self) -> Result<&[ComplexVector]> {
        if self.vectors.is_empty() {
            return Err(Error::ConfigError("vector-level check needs at least one unit vector".into()));
        }
        Ok(self.vectors)
    }
}

/// Evaluates a check on concrete operators.
///
/// `vectors` are the unit vectors for vector-level parts (ignored by
/// operator-level checks). With `literal`, the printed form of the statement
/// is evaluated instead of the encoded one, where the two differ.
pub fn evaluate(
    check: &CheckDef,
    ops: &[ComplexMatrix],
    params: &Params,
    vectors: &[ComplexVector],
    literal: bool,
) -> Result<Evaluation> {
    let n = check.validate_operators(ops)?;
    let params = check.resolve_params(params)?;
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("probe vectors must have length {n}")));
    }
    let literal = literal && check.has_literal();
    let parts = (check.eval)(&Ctx { ops, params: &params, vectors, literal })?;
    for p in &parts {
        if !(p.lhs.is_finite() && p.rhs.is_finite()) {
            return Err(Error::NonFiniteValue(format!("{} part `{}`", check.id, p.label)));
        }
    }
    let worst = parts
        .iter()
        .min_by(|a, b| a.normalized_slack().total_cmp(&b.normalized_slack()))
        .ok_or_else(|| Error::AssumptionViolated(format!("no part of {} applies to these operators", check.id)))?
        .clone();
    Ok(Evaluation {
        check: check.id.to_string(),
        part: worst.label.clone(),
        kind: worst.kind,
        lhs: worst.lhs,
        rhs: worst.rhs,
        slack: worst.slack(),
        normalized_slack: worst.normalized_slack(),
        params,
        seed: None,
        literal,
        parts,
    })
}

#[cfg(test)]
mod tests;
