//! Plain-text renderings. Witness tuples are shown with 1-based labels.

use std::fmt::{Display, Write};

use hlya::cohomology::{Cohomology23, CohomologyHigher};
use hlya::linalg::{Matrix, Rational};
use hlya::report::{label_tuple, Report};
use hlya::selftest::SuiteResult;

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn list<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn report<S: Display>(r: &Report<S>) -> String {
    let mut out = String::new();
    for c in &r.conditions {
        let _ = write!(out, "{:<14}{}  {}/{} tuples fail", c.name, status(c.passed()), c.failures, c.tuples);
        if let Some(w) = &c.first {
            let _ = write!(out, ", first at {} defect {}", label_tuple(&w.tuple), list(&w.defect));
        }
        if !c.degrees.is_empty() {
            let degrees: Vec<usize> = c.degrees.iter().copied().collect();
            let _ = write!(out, ", λ-degrees {}", list(&degrees));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{}", status(r.passed()));
    out
}

pub fn cohomology23(h: &Cohomology23) -> String {
    format!(
        "dim C2 = {}\ndim C3 = {}\ndim Z = {}\ndim B = {}\ndim H2 = {}\ndim H3 = {}\ndim H = {}\n",
        h.c2dim, h.c3dim, h.zdim, h.bdim, h.hdim2, h.hdim3, h.hdim
    )
}

pub fn cohomology_higher(h: &CohomologyHigher) -> String {
    format!(
        "level {}\ndim C = {} + {}\ndim Z = {}\ndim B = {}\ndim H = {}\n",
        h.level, h.cdims[0], h.cdims[1], h.zdim, h.bdim, h.hdim
    )
}

fn matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for row in m.to_rows() {
        let _ = writeln!(out, "  {}", list(&row));
    }
    out
}

pub fn matrices(title: &str, ms: &[Matrix]) -> String {
    let mut out = format!("{title}: {}\n", ms.len());
    for (i, m) in ms.iter().enumerate() {
        let _ = write!(out, "#{}\n{}", i + 1, matrix(m));
    }
    out
}

pub fn coordinates(c: &[Rational]) -> String {
    format!("class {}\n", list(c))
}

pub fn decompose(map: Option<&Matrix>, class: &[Rational]) -> String {
    match map {
        Some(f) => format!("coboundary of\n{}{}", matrix(f), coordinates(class)),
        None => format!("not a coboundary\n{}", coordinates(class)),
    }
}

pub fn equivalence(f: Option<&Matrix>) -> String {
    match f {
        Some(f) => format!("equivalent via\n{}", matrix(f)),
        None => "not equivalent\n".to_string(),
    }
}

pub fn selftest(res: &[SuiteResult]) -> String {
    let mut out = String::new();
    for s in res {
        let _ = write!(out, "{:<30}{}  {}/{} cases fail", s.name, status(s.passed()), s.failures, s.cases);
        if let Some(k) = s.first_failure {
            let _ = write!(out, ", first case {k}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{}", status(res.iter().all(SuiteResult::passed)));
    out
}
