//! Exhaustive and seeded-random relation sweeps with structured reports.

mod algebra;
mod fock;
mod hecke;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::CyclotomicPoly;
use crate::par::Exec;

pub use algebra::{biangular, confluence, jacobi, violet};
pub use fock::{fock_relations, mouse, sym};
pub use hecke::{hecke, hoops};

pub const SUITES: &[&str] = &[
    "jacobi",
    "biangular",
    "violet",
    "fock-relations",
    "mouse",
    "sym",
    "hecke",
    "hoops",
    "confluence",
];

/// One violated identity, with both sides in canonical syntax.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub bounds: BTreeMap<String, serde_json::Value>,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            bounds: BTreeMap::new(),
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn bound(mut self, key: &str, v: impl Serialize) -> Self {
        self.bounds
            .insert(key.into(), serde_json::to_value(v).unwrap());
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn absorb(&mut self, t: Tally) {
        self.checked += t.checked;
        self.failures.extend(t.failures);
    }

    pub(crate) fn finish(mut self) -> Self {
        self.failures.sort();
        self
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bounds: Vec<String> = self
            .bounds
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(f, "suite {} ({})", self.suite, bounds.join(", "))?;
        writeln!(
            f,
            "checked {}, failures {}",
            self.checked,
            self.failures.len()
        )?;
        for x in &self.failures {
            writeln!(f, "FAIL {}\n  lhs: {}\n  rhs: {}", x.inputs, x.lhs, x.rhs)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Partial counts from one work item of a sweep.
#[derive(Default, Debug)]
pub(crate) struct Tally {
    checked: usize,
    failures: Vec<Failure>,
}

impl Tally {
    pub(crate) fn check<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub(crate) fn pass(&mut self) {
        self.checked += 1;
    }

    pub(crate) fn fail(&mut self, inputs: String, lhs: String, rhs: String) {
        self.checked += 1;
        self.failures.push(Failure { inputs, lhs, rhs });
    }

    pub(crate) fn merge(mut self, o: Tally) -> Tally {
        self.checked += o.checked;
        self.failures.extend(o.failures);
        self
    }
}

/// Knobs shared by the suites; unset fields take per-suite defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub bound: Option<i64>,
    pub ks: Option<Vec<i64>>,
    pub seed: u64,
    pub samples: Option<usize>,
    pub f: Option<CyclotomicPoly>,
    pub rmax: Option<usize>,
    pub exec: Exec,
}

impl SuiteParams {
    pub(crate) fn ks(&self) -> Vec<i64> {
        self.ks.clone().unwrap_or_else(|| (-2..=2).collect())
    }
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "jacobi" => jacobi(p),
        "biangular" => biangular(p),
        "violet" => violet(p),
        "fock-relations" => fock_relations(p),
        "mouse" => mouse(p),
        "sym" => sym(p),
        "hecke" => hecke(p),
        "hoops" => hoops(p),
        "confluence" => confluence(p),
        _ => Err(Error::UnknownSuite(name.into())),
    }
}

pub(crate) fn too_large(what: &str, v: i64, max: i64) -> Result<()> {
    if v > max {
        return Err(Error::InvalidArgument(format!(
            "{what} {v} exceeds the supported maximum {max}"
        )));
    }
    Ok(())
}
