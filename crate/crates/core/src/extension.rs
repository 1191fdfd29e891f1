//! Abelian extensions `0 → V → T̂ → T → 0`: construction from cocycles,
//! induced data from sections, equivalence and classification.

use crate::algebra::{check_hlya, is_morphism, HomLYAlgebra};
use crate::cohomology::{check_cocycle23, class_coordinates, decompose, Cochain, CocyclePair};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, MultiLinear, Rational, Tuples};
use crate::report::{self, Condition, ConditionResult, Report};
use crate::representation::{check_representation, semidirect, Representation};

#[derive(Clone, Debug, PartialEq)]
pub struct AbelianExtension {
    pub total: HomLYAlgebra,
    /// `(n + m) × m`
    pub inj: Matrix,
    /// `n × (n + m)`
    pub proj: Matrix,
    pub base: HomLYAlgebra,
    /// `β` on the kernel, `m × m`.
    pub module_twist: Matrix,
}

/// `σ: T → T̂` with `p∘σ = id` and `α̂∘σ = σ∘α`, as an `(n + m) × n` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub sigma: Matrix,
}

impl AbelianExtension {
    pub fn base_dim(&self) -> usize {
        self.base.dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_twist.rows()
    }

    fn check_shapes(&self) -> Result<()> {
        let (n, m) = (self.base_dim(), self.module_dim());
        let ok = self.total.dim == n + m
            && self.module_twist.is_square()
            && (self.inj.rows(), self.inj.cols()) == (n + m, m)
            && (self.proj.rows(), self.proj.cols()) == (n, n + m);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidExtension(format!(
                "shapes do not fit a base of dimension {n} and a kernel of dimension {m}"
            )))
        }
    }

    /// Coordinates of `v ∈ T̂` in the image of `inj`.
    fn module_coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.inj
            .solve(v)
            .ok_or_else(|| Error::OutsideModule(format!("{v:?} is not in the image of the injection")))
    }
}

fn matrix_condition<'a>(name: &'static str, lhs: Matrix, rhs: Matrix) -> Condition<'a, Rational> {
    Condition::new(name, 0, 1, move |_: &[usize]| (&lhs - &rhs).data().to_vec())
}

fn rank_condition<'a>(name: &'static str, m: &Matrix, want: usize) -> Condition<'a, Rational> {
    let short = want as i64 - m.rank() as i64;
    Condition::new(name, 0, 1, move |_: &[usize]| vec![Rational::from_int(short)])
}

fn prefixed(prefix: &str, r: Report<Rational>) -> Vec<ConditionResult<Rational>> {
    r.conditions
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}{}", c.name);
            c
        })
        .collect()
}

pub const EXTENSION_CONDITIONS: [&str; 9] = [
    "EXACT",
    "INJ-RANK",
    "PROJ-RANK",
    "INJ-TWIST",
    "PROJ-TWIST",
    "PROJ-BINARY",
    "PROJ-TERNARY",
    "IDEAL-BINARY",
    "IDEAL-TERNARY",
];

/// All structural conditions, then the axioms of the total and base algebras
/// prefixed with `TOTAL-` and `BASE-`. Exactness at the middle follows from
/// `EXACT` and the two rank conditions.
pub fn validate_extension(e: &AbelianExtension) -> Result<Report<Rational>> {
    e.check_shapes()?;
    let (n, m) = (e.base_dim(), e.module_dim());
    let t = &e.total;
    let b = &e.base;
    let hat = &t.alpha;
    let proj = &e.proj;
    let inj = &e.inj;
    let inj_cols: Vec<Vec<Rational>> = (0..m).map(|a| inj.column(a)).collect();
    let all: Vec<Vec<Rational>> = (0..n + m).map(|k| crate::linalg::unit(n + m, k)).collect();
    let inj_cols3 = inj_cols.clone();
    let conds = vec![
        matrix_condition("EXACT", proj * inj, Matrix::zeros(n, m)),
        rank_condition("INJ-RANK", inj, m),
        rank_condition("PROJ-RANK", proj, n),
        matrix_condition("INJ-TWIST", hat * inj, inj * &e.module_twist),
        matrix_condition("PROJ-TWIST", proj * hat, &b.alpha * proj),
        Condition::new("PROJ-BINARY", 2, n + m, move |x: &[usize]| {
            let mut d = proj.mul_vec(t.binary.value(x));
            let (p0, p1) = (proj.column(x[0]), proj.column(x[1]));
            crate::linalg::sub_into(&mut d, &b.bracket2(&p0, &p1));
            d
        }),
        Condition::new("PROJ-TERNARY", 3, n + m, move |x: &[usize]| {
            let mut d = proj.mul_vec(t.ternary.value(x));
            let (p0, p1, p2) = (proj.column(x[0]), proj.column(x[1]), proj.column(x[2]));
            crate::linalg::sub_into(&mut d, &b.bracket3(&p0, &p1, &p2));
            d
        }),
        Condition::new("IDEAL-BINARY", 2, m, move |x: &[usize]| {
            t.bracket2(&inj_cols[x[0]], &inj_cols[x[1]])
        }),
        // [u, v, ·], [u, ·, v] and [·, u, v] over every basis vector of T̂.
        Condition::new("IDEAL-TERNARY", 2, m, move |x: &[usize]| {
            let (u, v) = (&inj_cols3[x[0]], &inj_cols3[x[1]]);
            let mut d = Vec::new();
            for w in &all {
                d.extend(t.bracket3(u, v, w));
                d.extend(t.bracket3(u, w, v));
                d.extend(t.bracket3(w, u, v));
            }
            d
        }),
    ];
    let mut results: Vec<ConditionResult<Rational>> = conds.iter().map(report::run_condition).collect();
    results.extend(prefixed("TOTAL-", check_hlya(t)));
    results.extend(prefixed("BASE-", check_hlya(b)));
    Ok(Report::from_conditions(results))
}

pub fn check_section(e: &AbelianExtension, s: &Section) -> Result<()> {
    let (n, m) = (e.base_dim(), e.module_dim());
    if (s.sigma.rows(), s.sigma.cols()) != (n + m, n) {
        return Err(Error::InvalidSection("shape".into()));
    }
    if !(&e.proj * &s.sigma).is_identity() {
        return Err(Error::InvalidSection("proj∘sigma is not the identity".into()));
    }
    if &e.total.alpha * &s.sigma != &s.sigma * &e.base.alpha {
        return Err(Error::InvalidSection("sigma does not intertwine the twists".into()));
    }
    Ok(())
}

/// The first solution of `p∘σ = id`, `α̂∘σ = σ∘α` under the solver's
/// free-variables-zero rule.
pub fn find_section(e: &AbelianExtension) -> Result<Section> {
    e.check_shapes()?;
    let (n, m) = (e.base_dim(), e.module_dim());
    let big = n + m;
    let unknowns = big * n;
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs = Vec::new();
    // (p σ)[i][c] = δ_ic
    for i in 0..n {
        for c in 0..n {
            let mut row = vec![Rational::zero(); unknowns];
            for k in 0..big {
                row[var(k, c)] += &e.proj[(i, k)];
            }
            rows.push(row);
            rhs.push(if i == c { Rational::one() } else { Rational::zero() });
        }
    }
    // (α̂ σ − σ α)[r][c] = 0
    for r in 0..big {
        for c in 0..n {
            let mut row = vec![Rational::zero(); unknowns];
            for k in 0..big {
                row[var(k, c)] += &e.total.alpha[(r, k)];
            }
            for k in 0..n {
                row[var(r, k)] -= &e.base.alpha[(k, c)];
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    let sys = Matrix::from_rows(rows).ok_or_else(|| Error::InvalidExtension("empty".into()))?;
    let x = sys.solve(&rhs).ok_or(Error::NoCompatibleSection)?;
    Ok(Section {
        sigma: Matrix::from_vec(big, n, x),
    })
}

/// `ρ(x)u = [σx, u]`, `D(x, y)u = [σx, σy, u]`, `θ(x, y)u = [u, σx, σy]`,
/// read in kernel coordinates.
pub fn induced_representation(e: &AbelianExtension, s: &Section) -> Result<Representation> {
    e.check_shapes()?;
    check_section(e, s)?;
    let (n, m) = (e.base_dim(), e.module_dim());
    let t = &e.total;
    let sig: Vec<Vec<Rational>> = (0..n).map(|i| s.sigma.column(i)).collect();
    let us: Vec<Vec<Rational>> = (0..m).map(|a| e.inj.column(a)).collect();
    let read = |f: &dyn Fn(&[Rational]) -> Vec<Rational>| -> Result<Matrix> {
        let cols: Result<Vec<Vec<Rational>>> = us.iter().map(|u| e.module_coords(&f(u))).collect();
        Ok(Matrix::from_columns(m, &cols?))
    };
    let mut rho = Vec::with_capacity(n);
    for x in &sig {
        rho.push(read(&|u| t.bracket2(x, u))?);
    }
    let mut d = vec![Vec::with_capacity(n); n];
    let mut theta = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            d[i].push(read(&|u| t.bracket3(&sig[i], &sig[j], u))?);
            theta[i].push(read(&|u| t.bracket3(u, &sig[i], &sig[j]))?);
        }
    }
    Representation::new(e.base.clone(), e.module_twist.clone(), rho, d, theta)
}

/// `ν(x, y) = [σx, σy] − σ[x, y]`, `ω(x, y, z) = [σx, σy, σz] − σ[x, y, z]`.
pub fn induced_cocycle(e: &AbelianExtension, s: &Section) -> Result<CocyclePair> {
    e.check_shapes()?;
    check_section(e, s)?;
    let (n, m) = (e.base_dim(), e.module_dim());
    let t = &e.total;
    let b = &e.base;
    let sig: Vec<Vec<Rational>> = (0..n).map(|i| s.sigma.column(i)).collect();
    let mut nu = Cochain::zeros(2, n, m);
    for x in Tuples::new(n, 2) {
        let mut v = t.bracket2(&sig[x[0]], &sig[x[1]]);
        crate::linalg::sub_into(&mut v, &s.sigma.mul_vec(b.binary.value(&x)));
        nu.value_mut(&x).clone_from_slice(&e.module_coords(&v)?);
    }
    let mut omega = Cochain::zeros(3, n, m);
    for x in Tuples::new(n, 3) {
        let mut v = t.bracket3(&sig[x[0]], &sig[x[1]], &sig[x[2]]);
        crate::linalg::sub_into(&mut v, &s.sigma.mul_vec(b.ternary.value(&x)));
        omega.value_mut(&x).clone_from_slice(&e.module_coords(&v)?);
    }
    Ok(CocyclePair { nu, omega })
}

/// `T ⊕ V` with `[x, y]` gaining `ν(x, y)` and `[x, y, z]` gaining
/// `ω(x, y, z)` on top of the semidirect product, without validating `R`
/// or `p`.
pub fn build_extension_unchecked(r: &Representation, p: &CocyclePair) -> AbelianExtension {
    let (n, m) = (r.dim(), r.vdim);
    let mut total = semidirect(r);
    add_module_part(&mut total.binary, &p.nu, n);
    add_module_part(&mut total.ternary, &p.omega, n);
    let mut inj = Matrix::zeros(n + m, m);
    inj.set_block(n, 0, &Matrix::identity(m));
    let mut proj = Matrix::zeros(n, n + m);
    proj.set_block(0, 0, &Matrix::identity(n));
    AbelianExtension {
        total,
        inj,
        proj,
        base: r.algebra.clone(),
        module_twist: r.beta.clone(),
    }
}

fn add_module_part(total: &mut MultiLinear<Rational>, f: &Cochain, n: usize) {
    for x in Tuples::new(n, f.arity()) {
        let v = f.value(&x).to_vec();
        let slot = total.value_mut(&x);
        for (a, c) in v.iter().enumerate() {
            slot[n + a] += c;
        }
    }
}

pub fn build_extension(t: &HomLYAlgebra, r: &Representation, p: &CocyclePair) -> Result<AbelianExtension> {
    if &r.algebra != t {
        return Err(Error::MismatchedExtensions(
            "the representation is over a different algebra".into(),
        ));
    }
    let rep = check_representation(r);
    if !rep.passed() {
        return Err(Error::InvalidRepresentation(rep.failed_names().join(", ")));
    }
    let cc = check_cocycle23(r, p)?;
    if !cc.passed() {
        return Err(Error::NotCocycle(cc.failed_names().join(", ")));
    }
    Ok(build_extension_unchecked(r, p))
}

/// An isomorphism `F: T̂₁ → T̂₂` that is the identity on `T` and on `V`, or
/// `None` when the cocycles lie in different classes. Every returned `F` has
/// been verified.
pub fn are_equivalent(e1: &AbelianExtension, e2: &AbelianExtension) -> Result<Option<Matrix>> {
    e1.check_shapes()?;
    e2.check_shapes()?;
    if e1.base != e2.base {
        return Err(Error::MismatchedExtensions("different base algebras".into()));
    }
    if e1.module_twist != e2.module_twist {
        return Err(Error::MismatchedExtensions("different kernels".into()));
    }
    let s1 = find_section(e1)?;
    let s2 = find_section(e2)?;
    let r1 = induced_representation(e1, &s1)?;
    let r2 = induced_representation(e2, &s2)?;
    if r1 != r2 {
        return Err(Error::MismatchedExtensions("different induced representations".into()));
    }
    let p1 = induced_cocycle(e1, &s1)?;
    let p2 = induced_cocycle(e2, &s2)?;
    let f = match decompose(&r1, &p1.sub(&p2))? {
        Some(f) => f,
        None => return Ok(None),
    };
    let (n, m) = (e1.base_dim(), e1.module_dim());
    // In section coordinates F is (x, u) ↦ (x, u + f(x)).
    let frame1 = Matrix::hstack(&s1.sigma, &e1.inj);
    let frame2 = Matrix::hstack(&s2.sigma, &e2.inj);
    let inv1 = frame1
        .inverse()
        .ok_or_else(|| Error::InvalidExtension("section and injection do not span".into()))?;
    let mut shear = Matrix::identity(n + m);
    shear.set_block(n, 0, &f);
    let big_f = &(&frame2 * &shear) * &inv1;
    let morph = is_morphism(&big_f, &e1.total, &e2.total)?;
    if !morph.passed() {
        return Err(Error::EquivalenceVerification(morph.failed_names().join(", ")));
    }
    if &big_f * &e1.inj != e2.inj || &e2.proj * &big_f != e1.proj {
        return Err(Error::EquivalenceVerification("diagram does not commute".into()));
    }
    Ok(Some(big_f))
}

/// Coordinates of the class of the extension in the basis of
/// `cohomology23(R).representatives`.
pub fn classify(e: &AbelianExtension) -> Result<Vec<Rational>> {
    let s = find_section(e)?;
    let r = induced_representation(e, &s)?;
    let p = induced_cocycle(e, &s)?;
    class_coordinates(&r, &p)
}
