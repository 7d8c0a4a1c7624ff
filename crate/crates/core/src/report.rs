//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::spectra::LevelParams;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented disagreement with the published formulas. Never fatal.
    Finding,
}

fn finite_or_null<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(serialize_with = "finite_or_null")]
    pub measured: f64,
    pub expected: Option<f64>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<LevelParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn within(measured: f64, expected: f64, tolerance: f64) -> bool {
    (measured - expected).abs() <= tolerance
}

impl Check {
    /// Pass iff |measured − expected| ≤ tolerance; NaN fails.
    pub fn compare(name: impl Into<String>, measured: f64, expected: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            status: if within(measured, expected, tolerance) {
                Status::Pass
            } else {
                Status::Fail
            },
            measured,
            expected: Some(expected),
            tolerance,
            params: None,
            note: None,
        }
    }

    /// Like [`Check::compare`], but a disagreement is recorded as a finding.
    pub fn finding(name: impl Into<String>, measured: f64, expected: f64, tolerance: f64, note: impl Into<String>) -> Self {
        let mut c = Self::compare(name, measured, expected, tolerance);
        if c.status == Status::Fail {
            c.status = Status::Finding;
        }
        c.note = Some(note.into());
        c
    }

    /// An unconditional failure, e.g. an evaluation error.
    pub fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            measured: f64::NAN,
            expected: None,
            tolerance: 0.0,
            params: None,
            note: Some(err.to_string()),
        }
    }

    pub fn with_params(mut self, p: LevelParams) -> Self {
        self.params = Some(p);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub seed: Option<u64>,
    pub quadrature_orders: BTreeMap<String, usize>,
    pub build_id: String,
}

impl Provenance {
    pub fn new(seed: Option<u64>) -> Self {
        let quadrature_orders = BTreeMap::from([
            ("radial".to_string(), crate::geometry::DEFAULT_RADIAL_ORDER),
        ]);
        Provenance {
            seed,
            quadrature_orders,
            build_id: format!("cpnb-core {}", env!("CARGO_PKG_VERSION")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    /// Set when the whole report concerns a single level.
    pub params: Option<LevelParams>,
    pub checks: Vec<Check>,
    pub provenance: Provenance,
}

impl ReportDocument {
    pub fn new(params: Option<LevelParams>, checks: Vec<Check>, provenance: Provenance) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            params,
            checks,
            provenance,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }
}
