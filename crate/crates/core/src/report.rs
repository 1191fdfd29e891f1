//! Pass/fail reports for identities checked on basis tuples.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::linalg::{Coeff, Tuples};

/// A single identity, given as a defect function on index tuples. The
/// identity holds iff the defect vanishes on every tuple.
pub struct Condition<'a, S> {
    pub name: &'static str,
    pub arity: usize,
    pub range: usize,
    pub defect: Box<dyn Fn(&[usize]) -> Vec<S> + 'a>,
}

impl<'a, S> Condition<'a, S> {
    pub fn new(
        name: &'static str,
        arity: usize,
        range: usize,
        defect: impl Fn(&[usize]) -> Vec<S> + 'a,
    ) -> Self {
        Condition {
            name,
            arity,
            range,
            defect: Box::new(defect),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness<S> {
    /// 0-based basis indices.
    pub tuple: Vec<usize>,
    pub defect: Vec<S>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionResult<S> {
    pub name: String,
    pub tuples: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first: Option<Witness<S>>,
    /// λ-degrees carrying a nonzero defect coefficient somewhere. Only
    /// populated for polynomial coefficients.
    #[serde(skip_serializing_if = "BTreeSet::is_empty")]
    pub degrees: BTreeSet<usize>,
}

impl<S> ConditionResult<S> {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report<S> {
    pub passed: bool,
    pub conditions: Vec<ConditionResult<S>>,
}

impl<S> Report<S> {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn get(&self, name: &str) -> Option<&ConditionResult<S>> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn from_conditions(conditions: Vec<ConditionResult<S>>) -> Self {
        Report {
            passed: conditions.iter().all(ConditionResult::passed),
            conditions,
        }
    }
}

/// Coefficients that can report which λ-degrees are present.
pub trait Degrees {
    fn degrees(&self) -> Vec<usize>;
}

impl Degrees for crate::linalg::Rational {
    fn degrees(&self) -> Vec<usize> {
        Vec::new()
    }
}

impl Degrees for crate::linalg::Poly {
    fn degrees(&self) -> Vec<usize> {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }
}

pub fn run_condition<S: Coeff + Degrees>(c: &Condition<'_, S>) -> ConditionResult<S> {
    let mut res = ConditionResult {
        name: c.name.to_string(),
        tuples: 0,
        failures: 0,
        first: None,
        degrees: BTreeSet::new(),
    };
    for t in Tuples::new(c.range, c.arity) {
        res.tuples += 1;
        let d = (c.defect)(&t);
        if d.iter().all(Coeff::is_zero) {
            continue;
        }
        res.failures += 1;
        for x in &d {
            res.degrees.extend(x.degrees());
        }
        if res.first.is_none() {
            res.first = Some(Witness { tuple: t, defect: d });
        }
    }
    res
}

pub fn run<S: Coeff + Degrees>(conds: &[Condition<'_, S>]) -> Report<S> {
    Report::from_conditions(conds.iter().map(run_condition).collect())
}

/// Every defect of every condition, in tuple order.
#[derive(Clone, Debug, PartialEq)]
pub struct DefectTable<S> {
    pub entries: Vec<(String, Vec<(Vec<usize>, Vec<S>)>)>,
}

impl<S: Clone> DefectTable<S> {
    pub fn get(&self, name: &str) -> Option<&[(Vec<usize>, Vec<S>)]> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }
}

pub fn table<S: Coeff>(conds: &[Condition<'_, S>]) -> DefectTable<S> {
    DefectTable {
        entries: conds
            .iter()
            .map(|c| {
                let rows = Tuples::new(c.range, c.arity)
                    .map(|t| {
                        let d = (c.defect)(&t);
                        (t, d)
                    })
                    .collect();
                (c.name.to_string(), rows)
            })
            .collect(),
    }
}

/// 1-based `e`-labels for human-readable witnesses.
pub fn label_tuple(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|i| format!("e{}", i + 1)).collect();
    format!("({})", parts.join(", "))
}

impl<S: fmt::Display> fmt::Display for Report<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            if c.failures == 0 {
                writeln!(f, "{:<6} pass  ({} tuples)", c.name, c.tuples)?;
                continue;
            }
            write!(f, "{:<6} FAIL  ({} of {} tuples)", c.name, c.failures, c.tuples)?;
            if let Some(w) = &c.first {
                let d: Vec<String> = w.defect.iter().map(ToString::to_string).collect();
                write!(f, "  first {} defect [{}]", label_tuple(&w.tuple), d.join(", "))?;
            }
            if !c.degrees.is_empty() {
                let ds: Vec<String> = c.degrees.iter().map(ToString::to_string).collect();
                write!(f, "  λ-degrees {{{}}}", ds.join(", "))?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}
