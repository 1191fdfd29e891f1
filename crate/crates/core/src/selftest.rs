//! Seeded property suites, run by the `selftest` command.

use rand::Rng;
use serde::Serialize;

use crate::algebra::check_hlya;
use crate::cohomology::{check_cocycle23, coboundary_of, delta_matrix};
use crate::deformation::{check_lambda, deform, deformation_split};
use crate::extension::{
    are_equivalent, build_extension, find_section, induced_cocycle, induced_representation,
    validate_extension,
};
use crate::random::{self, Rng64};
use crate::representation::{adjoint, check_representation, semidirect};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Index of the first failing case.
    pub first_failure: Option<usize>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Case = fn(&mut Rng64, usize) -> Result<bool>;

const SUITES: [(&str, usize, Case); 6] = [
    ("semidirect-equivalence", 40, semidirect_case),
    ("delta-squared", 12, delta_case),
    ("coboundary-is-cocycle", 40, coboundary_case),
    ("deformation-split", 30, deformation_case),
    ("extension-round-trip", 20, extension_case),
    ("coboundary-shift-equivalence", 12, shift_case),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Runs every suite with its own stream derived from `seed`. Library errors
/// count as failures.
pub fn run(seed: u64) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(i, &(name, cases, case))| {
            let mut rng = random::rng(seed.wrapping_mul(31).wrapping_add(i as u64));
            let mut res = SuiteResult {
                name,
                cases,
                failures: 0,
                first_failure: None,
            };
            for k in 0..cases {
                if !case(&mut rng, k).unwrap_or(false) {
                    res.failures += 1;
                    res.first_failure.get_or_insert(k);
                }
            }
            res
        })
        .collect()
}

fn vdim(k: usize) -> usize {
    1 + k % 2
}

fn semidirect_case(rng: &mut Rng64, k: usize) -> Result<bool> {
    let base = random::dim2_rep(rng, vdim(k));
    let r = if k % 2 == 0 {
        base
    } else {
        random::perturb_rep(rng, &base).0
    };
    Ok(check_representation(&r).passed() == check_hlya(&semidirect(&r)).passed())
}

fn delta_case(rng: &mut Rng64, k: usize) -> Result<bool> {
    let r = random::dim2_rep(rng, vdim(k));
    let d1 = delta_matrix(&r, 1)?;
    let d2 = delta_matrix(&r, 2)?;
    Ok((&d2 * &d1).is_zero())
}

fn coboundary_case(rng: &mut Rng64, k: usize) -> Result<bool> {
    let r = random::dim2_rep(rng, vdim(k));
    let f = random::equivariant_map(rng, &r);
    Ok(check_cocycle23(&r, &coboundary_of(&r, &f)?)?.passed())
}

fn deformation_case(rng: &mut Rng64, _: usize) -> Result<bool> {
    let a = random::dim2_algebra(rng);
    let r = adjoint(&a)?;
    let p = if rng.gen_bool(0.5) {
        random::cocycle(rng, &r)
    } else {
        random::cochain_pair(rng, &r)
    };
    let l = deform(&a, &p)?;
    Ok(check_lambda(&l).passed() == deformation_split(&a, &p)?.passed())
}

fn extension_case(rng: &mut Rng64, k: usize) -> Result<bool> {
    let r = random::dim2_rep(rng, vdim(k));
    let p = random::cocycle(rng, &r);
    let e = build_extension(&r.algebra, &r, &p)?;
    let s = find_section(&e)?;
    Ok(validate_extension(&e)?.passed()
        && induced_representation(&e, &s)? == r
        && induced_cocycle(&e, &s)? == p)
}

fn shift_case(rng: &mut Rng64, k: usize) -> Result<bool> {
    let r = random::dim2_rep(rng, vdim(k));
    let p = random::cocycle(rng, &r);
    let f = random::equivariant_map(rng, &r);
    let e1 = build_extension(&r.algebra, &r, &p)?;
    let e2 = build_extension(&r.algebra, &r, &p.add(&coboundary_of(&r, &f)?))?;
    Ok(are_equivalent(&e1, &e2)?.is_some())
}
