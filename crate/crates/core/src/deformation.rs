//! One-parameter infinitesimal deformations, Nijenhuis operators and
//! trivial deformations.

use crate::algebra::{check_deformation_type, check_hlya, HomLYAlgebra};
use crate::cohomology::{check_cocycle23, CocyclePair};
use crate::error::{Error, Result};
use crate::linalg::{apply, lift, Arg, Coeff, Matrix, MultiLinear, Poly, Rational};
use crate::report::{self, Condition, Report};
use crate::representation::adjoint;

/// `T_λ`: brackets with entries in `ℚ[λ]`, twist independent of `λ`.
pub type LambdaAlgebra = HomLYAlgebra<Poly>;

fn check_pair_shape(a: &HomLYAlgebra, p: &CocyclePair) -> Result<()> {
    let n = a.dim;
    if p.nu.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: p.nu.arity(),
        });
    }
    if p.omega.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: p.omega.arity(),
        });
    }
    for h in [&p.nu, &p.omega] {
        if h.dim_in() != n || h.dim_out() != n {
            return Err(Error::DimensionMismatch(format!(
                "deformation maps must be {n}-dimensional in and out"
            )));
        }
    }
    Ok(())
}

/// `[x, y]_λ = [x, y] + λν(x, y)` and `[x, y, z]_λ = [x, y, z] + λω(x, y, z)`.
pub fn deform(a: &HomLYAlgebra, p: &CocyclePair) -> Result<LambdaAlgebra> {
    check_pair_shape(a, p)?;
    let join = |base: &MultiLinear<Rational>, slope: &MultiLinear<Rational>| {
        MultiLinear::from_fn(base.arity(), a.dim, a.dim, |t| {
            base.value(t)
                .iter()
                .zip(slope.value(t))
                .map(|(c0, c1)| Poly::from_coeffs(vec![c0.clone(), c1.clone()]))
                .collect()
        })
    };
    HomLYAlgebra::new(a.alpha.clone(), join(&a.binary, &p.nu), join(&a.ternary, &p.omega))
}

/// Every axiom expanded over `ℚ[λ]`; failing conditions list the λ-degrees
/// at which a nonzero coefficient appeared.
pub fn check_lambda(l: &LambdaAlgebra) -> Report<Poly> {
    check_hlya(l)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeformationSplit {
    /// `(ν, ω)` against the adjoint representation.
    pub cocycle: Report<Rational>,
    /// `(T, ν, ω, α)` as an algebra of deformation type.
    pub deformation_type: Report<Rational>,
}

impl DeformationSplit {
    pub fn passed(&self) -> bool {
        self.cocycle.passed() && self.deformation_type.passed()
    }
}

pub fn deformation_split(a: &HomLYAlgebra, p: &CocyclePair) -> Result<DeformationSplit> {
    check_pair_shape(a, p)?;
    let r = adjoint(a)?;
    let cocycle = check_cocycle23(&r, p)?;
    let t = HomLYAlgebra::new(a.alpha.clone(), p.nu.clone(), p.omega.clone())?;
    Ok(DeformationSplit {
        cocycle,
        deformation_type: check_deformation_type(&t),
    })
}

fn check_operator(a: &HomLYAlgebra, n: &Matrix) -> Result<()> {
    if n.rows() != a.dim || n.cols() != a.dim {
        return Err(Error::DimensionMismatch(format!(
            "operator must be {0}x{0}",
            a.dim
        )));
    }
    Ok(())
}

pub const NIJENHUIS_CONDITIONS: [&str; 2] = ["NIJ2", "NIJ3"];

fn nijenhuis_conditions<'a>(a: &'a HomLYAlgebra, n: &'a Matrix) -> Vec<Condition<'a, Rational>> {
    let dim = a.dim;
    let n2 = n.pow(2);
    let col = |i: usize| n.column(i);
    let b = |x: &[Rational], y: &[Rational]| a.bracket2(x, y);
    let t = |x: &[Rational], y: &[Rational], z: &[Rational]| a.bracket3(x, y, z);
    let e = move |i: usize| crate::linalg::unit::<Rational>(dim, i);
    let n2b = n2.clone();
    vec![
        Condition::new("NIJ2", 2, dim, move |x: &[usize]| {
            let (x1, x2) = (e(x[0]), e(x[1]));
            let (n1, nn2) = (col(x[0]), col(x[1]));
            let mut inner = b(&n1, &x2);
            crate::linalg::add_into(&mut inner, &b(&x1, &nn2));
            let mut d = apply(n, &inner);
            crate::linalg::sub_into(&mut d, &apply(&n2, a.binary.value(x)));
            crate::linalg::sub_into(&mut d, &b(&n1, &nn2));
            d
        }),
        Condition::new("NIJ3", 3, dim, move |x: &[usize]| {
            let (x1, x2, x3) = (e(x[0]), e(x[1]), e(x[2]));
            let (m1, m2, m3) = (col(x[0]), col(x[1]), col(x[2]));
            let mut inner = t(&m1, &x2, &x3);
            crate::linalg::add_into(&mut inner, &t(&x1, &m2, &x3));
            crate::linalg::add_into(&mut inner, &t(&x1, &x2, &m3));
            let mut d = apply(n, &inner);
            crate::linalg::sub_into(&mut d, &apply(&n2b, a.ternary.value(x)));
            crate::linalg::sub_into(&mut d, &t(&m1, &m2, &x3));
            crate::linalg::sub_into(&mut d, &t(&m1, &x2, &m3));
            crate::linalg::sub_into(&mut d, &t(&x1, &m2, &m3));
            d
        }),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct NijenhuisCheck {
    pub report: Report<Rational>,
    /// `N∘α = α∘N`, needed for the deformed brackets to stay multiplicative.
    pub commutes_with_alpha: bool,
}

impl NijenhuisCheck {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

pub fn is_nijenhuis(a: &HomLYAlgebra, n: &Matrix) -> Result<NijenhuisCheck> {
    check_operator(a, n)?;
    Ok(NijenhuisCheck {
        report: report::run(&nijenhuis_conditions(a, n)),
        commutes_with_alpha: n * &a.alpha == &a.alpha * n,
    })
}

/// The pair obtained by differentiating `[φ_λ ·, φ_λ ·]` at `λ = 0` with
/// `φ_λ = id + λN`, without checking `N`.
pub fn nijenhuis_pair_unchecked(a: &HomLYAlgebra, n: &Matrix) -> CocyclePair {
    let dim = a.dim;
    let b_n0 = a.binary.precompose(0, n);
    let b_n1 = a.binary.precompose(1, n);
    let nu = MultiLinear::from_fn(2, dim, dim, |x| {
        let mut v = b_n0.value(x).to_vec();
        crate::linalg::add_into(&mut v, b_n1.value(x));
        crate::linalg::sub_into(&mut v, &apply(n, a.binary.value(x)));
        v
    });
    let t_n: Vec<MultiLinear<Rational>> = (0..3).map(|s| a.ternary.precompose(s, n)).collect();
    let omega = MultiLinear::from_fn(3, dim, dim, |x| {
        let mut v = t_n[0].value(x).to_vec();
        crate::linalg::add_into(&mut v, t_n[1].value(x));
        crate::linalg::add_into(&mut v, t_n[2].value(x));
        crate::linalg::sub_into(&mut v, &apply(n, a.ternary.value(x)));
        v
    });
    CocyclePair { nu, omega }
}

pub fn nijenhuis_deformation(a: &HomLYAlgebra, n: &Matrix) -> Result<CocyclePair> {
    let check = is_nijenhuis(a, n)?;
    if !check.passed() {
        return Err(Error::NotNijenhuis(check.report.failed_names().join(", ")));
    }
    if !check.commutes_with_alpha {
        return Err(Error::NotTwistCompatible);
    }
    Ok(nijenhuis_pair_unchecked(a, n))
}

pub const TRIVIALITY_CONDITIONS: [&str; 2] = ["TRIV2", "TRIV3"];

/// `φ_λ[x, y]_λ = [φ_λ x, φ_λ y]` and `φ_λ[x, y, z]_λ = [φ_λ x, φ_λ y, φ_λ z]`
/// for `φ_λ = id + λN`, as identities in `ℚ[λ]` on basis tuples. The
/// ternary identity has terms up to `λ³`.
pub fn triviality_conditions<'a>(
    a: &'a HomLYAlgebra,
    l: &'a LambdaAlgebra,
    n: &'a Matrix,
) -> Vec<Condition<'a, Poly>> {
    let dim = a.dim;
    let ap = a.to_poly();
    // φ_λ e_i = e_i + λ N e_i
    let phi: Vec<Vec<Poly>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|k| {
                    let c0 = if k == i { Rational::one() } else { Rational::zero() };
                    Poly::from_coeffs(vec![c0, n[(k, i)].clone()])
                })
                .collect()
        })
        .collect();
    let phi_apply = move |v: &[Poly]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(); dim];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, p) in phi[i].iter().enumerate() {
                out[k] += &c.mul_ref(p);
            }
        }
        out
    };
    let images: Vec<Vec<Poly>> = (0..dim)
        .map(|i| phi_apply(&lift::<Poly>(&crate::linalg::unit::<Rational>(dim, i))))
        .collect();
    let ap3 = ap.clone();
    let images3 = images.clone();
    let phi3 = phi_apply.clone();
    vec![
        Condition::new("TRIV2", 2, dim, move |x: &[usize]| {
            let mut d = phi_apply(l.binary.value(x));
            crate::linalg::sub_into(
                &mut d,
                &ap.binary.eval(&[Arg::Vector(&images[x[0]]), Arg::Vector(&images[x[1]])]),
            );
            d
        }),
        Condition::new("TRIV3", 3, dim, move |x: &[usize]| {
            let mut d = phi3(l.ternary.value(x));
            crate::linalg::sub_into(
                &mut d,
                &ap3.ternary.eval(&[
                    Arg::Vector(&images3[x[0]]),
                    Arg::Vector(&images3[x[1]]),
                    Arg::Vector(&images3[x[2]]),
                ]),
            );
            d
        }),
    ]
}

/// Checks that `id + λN` identifies `deform(A, p)` with `A`.
pub fn check_trivial(a: &HomLYAlgebra, n: &Matrix, p: &CocyclePair) -> Result<Report<Poly>> {
    check_operator(a, n)?;
    let l = deform(a, p)?;
    let lam = check_lambda(&l);
    if !lam.passed() {
        return Err(Error::DeformationInvalid(lam.failed_names().join(", ")));
    }
    let conds = triviality_conditions(a, &l, n);
    Ok(report::run(&conds))
}
