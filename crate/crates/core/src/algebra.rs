//! Hom-Lie-Yamaguti algebras by structure constants and their axioms.

use crate::error::{Error, Result};
use crate::linalg::{apply, sub_into, Arg, Coeff, Matrix, MultiLinear, Rational};
use crate::report::{self, Condition, DefectTable, Degrees, Report};

/// An algebra `(T, α, [·,·], [·,·,·])` on the basis `e_0 … e_{n-1}`.
///
/// `alpha` has `α(e_j)` in column `j`. `binary.value(&[i, j])` holds the
/// coordinates of `[e_i, e_j]` and `ternary.value(&[i, j, k])` those of
/// `[e_i, e_j, e_k]`. Coefficients are rational, or polynomial in λ for
/// deformed algebras.
#[derive(Clone, Debug, PartialEq)]
pub struct HomLYAlgebra<S = Rational> {
    pub dim: usize,
    pub alpha: Matrix,
    pub binary: MultiLinear<S>,
    pub ternary: MultiLinear<S>,
}

/// Which Jacobi-type axiom to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Hlya,
    /// HLY3 replaced by `[[x1,x2],αx3] + c.p. = 0`.
    DeformationType,
}

pub const HLYA_AXIOMS: [&str; 8] = ["HLY01", "HLY02", "HLY1", "HLY2", "HLY3", "HLY4", "HLY5", "HLY6"];
pub const DEFORMATION_AXIOMS: [&str; 8] =
    ["HLY01", "HLY02", "HLY1", "HLY2", "HLY3'", "HLY4", "HLY5", "HLY6"];

impl<S: Coeff> HomLYAlgebra<S> {
    pub fn new(alpha: Matrix, binary: MultiLinear<S>, ternary: MultiLinear<S>) -> Result<Self> {
        let n = alpha.rows();
        if !alpha.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "alpha is {}x{}, expected square",
                alpha.rows(),
                alpha.cols()
            )));
        }
        if binary.arity() != 2 || binary.dim_in() != n || binary.dim_out() != n {
            return Err(Error::DimensionMismatch(format!(
                "binary tensor must be {n}x{n}x{n}"
            )));
        }
        if ternary.arity() != 3 || ternary.dim_in() != n || ternary.dim_out() != n {
            return Err(Error::DimensionMismatch(format!(
                "ternary tensor must be {n}x{n}x{n}x{n}"
            )));
        }
        Ok(HomLYAlgebra {
            dim: n,
            alpha,
            binary,
            ternary,
        })
    }

    /// Zero brackets with the given twist.
    pub fn abelian(alpha: Matrix) -> Self {
        let n = alpha.rows();
        HomLYAlgebra {
            dim: n,
            alpha,
            binary: MultiLinear::zeros(2, n, n),
            ternary: MultiLinear::zeros(3, n, n),
        }
    }

    pub fn bracket2(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.binary.eval(&[Arg::Vector(x), Arg::Vector(y)])
    }

    pub fn bracket3(&self, x: &[S], y: &[S], z: &[S]) -> Vec<S> {
        self.ternary
            .eval(&[Arg::Vector(x), Arg::Vector(y), Arg::Vector(z)])
    }

    pub fn twist(&self, x: &[S]) -> Vec<S> {
        apply(&self.alpha, x)
    }

    fn check_len(&self, v: &[S]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for algebra of dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }
}

impl HomLYAlgebra<Rational> {
    /// The same algebra with constant polynomial coefficients.
    pub fn to_poly(&self) -> HomLYAlgebra<crate::linalg::Poly> {
        HomLYAlgebra {
            dim: self.dim,
            alpha: self.alpha.clone(),
            binary: self.binary.map(|c| crate::linalg::Poly::constant(c.clone())),
            ternary: self.ternary.map(|c| crate::linalg::Poly::constant(c.clone())),
        }
    }
}

pub fn eval_binary<S: Coeff>(a: &HomLYAlgebra<S>, x: &[S], y: &[S]) -> Result<Vec<S>> {
    a.check_len(x)?;
    a.check_len(y)?;
    Ok(a.bracket2(x, y))
}

pub fn eval_ternary<S: Coeff>(a: &HomLYAlgebra<S>, x: &[S], y: &[S], z: &[S]) -> Result<Vec<S>> {
    a.check_len(x)?;
    a.check_len(y)?;
    a.check_len(z)?;
    Ok(a.bracket3(x, y, z))
}

fn cyclic3(t: &[usize]) -> [[usize; 3]; 3] {
    [[t[0], t[1], t[2]], [t[1], t[2], t[0]], [t[2], t[0], t[1]]]
}

/// The axioms of `mode` as defect functions on basis tuples.
pub fn axiom_conditions<S: Coeff>(a: &HomLYAlgebra<S>, mode: Mode) -> Vec<Condition<'static, S>> {
    let n = a.dim;
    let alpha = a.alpha.clone();
    let alpha2 = alpha.pow(2);
    let b = a.binary.clone();
    let t = a.ternary.clone();

    let b_aa = b.precompose_all(&alpha);
    let t_aaa = t.precompose_all(&alpha);
    // [u, α x]
    let b_1a = b.precompose(1, &alpha);
    // [u, α² x] and [α² x, u]
    let b_1a2 = b.precompose(1, &alpha2);
    let b_0a2 = b.precompose(0, &alpha2);
    // [u, α x, α y]
    let t_12a = t.precompose(1, &alpha).precompose(2, &alpha);
    // [α x, α y, u]
    let t_01a = t.precompose(0, &alpha).precompose(1, &alpha);
    let t_01a2 = t.precompose(0, &alpha2).precompose(1, &alpha2);
    let t_12a2 = t.precompose(1, &alpha2).precompose(2, &alpha2);
    let t_02a2 = t.precompose(0, &alpha2).precompose(2, &alpha2);

    let mut conds = Vec::new();
    {
        let (b, alpha) = (b.clone(), alpha.clone());
        conds.push(Condition::new("HLY01", 2, n, move |x: &[usize]| {
            let mut d = apply(&alpha, b.value(x));
            sub_into(&mut d, b_aa.value(x));
            d
        }));
    }
    {
        let (t, alpha) = (t.clone(), alpha.clone());
        conds.push(Condition::new("HLY02", 3, n, move |x: &[usize]| {
            let mut d = apply(&alpha, t.value(x));
            sub_into(&mut d, t_aaa.value(x));
            d
        }));
    }
    {
        let b = b.clone();
        conds.push(Condition::new("HLY1", 2, n, move |x: &[usize]| {
            let mut d = b.value(x).to_vec();
            crate::linalg::add_into(&mut d, b.value(&[x[1], x[0]]));
            d
        }));
    }
    {
        let t = t.clone();
        conds.push(Condition::new("HLY2", 3, n, move |x: &[usize]| {
            let mut d = t.value(x).to_vec();
            crate::linalg::add_into(&mut d, t.value(&[x[1], x[0], x[2]]));
            d
        }));
    }
    {
        let (b, t) = (b.clone(), t.clone());
        let name = match mode {
            Mode::Hlya => "HLY3",
            Mode::DeformationType => "HLY3'",
        };
        conds.push(Condition::new(name, 3, n, move |x: &[usize]| {
            let mut d = vec![S::zero(); n];
            for [i, j, k] in cyclic3(x) {
                if mode == Mode::Hlya {
                    crate::linalg::add_into(&mut d, t.value(&[i, j, k]));
                }
                let v = b_1a.eval(&[Arg::Vector(b.value(&[i, j])), Arg::Basis(k)]);
                crate::linalg::add_into(&mut d, &v);
            }
            d
        }));
    }
    {
        let b = b.clone();
        conds.push(Condition::new("HLY4", 4, n, move |x: &[usize]| {
            let mut d = vec![S::zero(); n];
            for [i, j, k] in cyclic3(x) {
                let v = t_12a.eval(&[Arg::Vector(b.value(&[i, j])), Arg::Basis(k), Arg::Basis(x[3])]);
                crate::linalg::add_into(&mut d, &v);
            }
            d
        }));
    }
    {
        let (b, t) = (b.clone(), t.clone());
        conds.push(Condition::new("HLY5", 4, n, move |x: &[usize]| {
            let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
            let mut d = t_01a.eval(&[Arg::Basis(i), Arg::Basis(j), Arg::Vector(b.value(&[k, l]))]);
            sub_into(&mut d, &b_1a2.eval(&[Arg::Vector(t.value(&[i, j, k])), Arg::Basis(l)]));
            sub_into(&mut d, &b_0a2.eval(&[Arg::Basis(k), Arg::Vector(t.value(&[i, j, l]))]));
            d
        }));
    }
    {
        let t = t.clone();
        conds.push(Condition::new("HLY6", 5, n, move |x: &[usize]| {
            let (i, j, k, l, m) = (x[0], x[1], x[2], x[3], x[4]);
            let mut d = t_01a2.eval(&[
                Arg::Basis(i),
                Arg::Basis(j),
                Arg::Vector(t.value(&[k, l, m])),
            ]);
            sub_into(
                &mut d,
                &t_12a2.eval(&[Arg::Vector(t.value(&[i, j, k])), Arg::Basis(l), Arg::Basis(m)]),
            );
            sub_into(
                &mut d,
                &t_02a2.eval(&[Arg::Basis(k), Arg::Vector(t.value(&[i, j, l])), Arg::Basis(m)]),
            );
            sub_into(
                &mut d,
                &t_01a2.eval(&[Arg::Basis(k), Arg::Basis(l), Arg::Vector(t.value(&[i, j, m]))]),
            );
            d
        }));
    }
    conds
}

pub fn check_hlya<S: Coeff + Degrees>(a: &HomLYAlgebra<S>) -> Report<S> {
    report::run(&axiom_conditions(a, Mode::Hlya))
}

pub fn check_deformation_type<S: Coeff + Degrees>(a: &HomLYAlgebra<S>) -> Report<S> {
    report::run(&axiom_conditions(a, Mode::DeformationType))
}

pub fn check_mode<S: Coeff + Degrees>(a: &HomLYAlgebra<S>, mode: Mode) -> Report<S> {
    report::run(&axiom_conditions(a, mode))
}

/// Defects of every axiom on every basis tuple.
pub fn axiom_table<S: Coeff>(a: &HomLYAlgebra<S>, mode: Mode) -> DefectTable<S> {
    report::table(&axiom_conditions(a, mode))
}

/// Checks that `phi: A → B` intertwines the twists and preserves both
/// brackets.
pub fn is_morphism(phi: &Matrix, a: &HomLYAlgebra, b: &HomLYAlgebra) -> Result<Report<Rational>> {
    if phi.rows() != b.dim || phi.cols() != a.dim {
        return Err(Error::DimensionMismatch(format!(
            "morphism is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            b.dim,
            a.dim
        )));
    }
    let images: Vec<Vec<Rational>> = (0..a.dim).map(|i| phi.column(i)).collect();
    let phi_alpha = phi * &a.alpha;
    let alpha_phi = &b.alpha * phi;
    let conds = vec![
        Condition::new("twist", 1, a.dim, |x: &[usize]| {
            let mut d = phi_alpha.column(x[0]);
            sub_into(&mut d, &alpha_phi.column(x[0]));
            d
        }),
        Condition::new("binary", 2, a.dim, |x: &[usize]| {
            let mut d = phi.mul_vec(a.binary.value(x));
            sub_into(&mut d, &b.bracket2(&images[x[0]], &images[x[1]]));
            d
        }),
        Condition::new("ternary", 3, a.dim, |x: &[usize]| {
            let mut d = phi.mul_vec(a.ternary.value(x));
            sub_into(
                &mut d,
                &b.bracket3(&images[x[0]], &images[x[1]], &images[x[2]]),
            );
            d
        }),
    ];
    Ok(report::run(&conds))
}

/// The algebra with the given binary bracket and `[x,y,z] := [[x,y],z]`.
pub fn from_lie(binary: MultiLinear<Rational>, alpha: Matrix) -> Result<HomLYAlgebra> {
    let n = alpha.rows();
    if binary.arity() != 2 || binary.dim_in() != n || binary.dim_out() != n {
        return Err(Error::DimensionMismatch(format!(
            "binary tensor must be {n}x{n}x{n}"
        )));
    }
    let ternary = MultiLinear::from_fn(3, n, n, |x| {
        binary.eval(&[Arg::Vector(binary.value(&[x[0], x[1]])), Arg::Basis(x[2])])
    });
    HomLYAlgebra::new(alpha, binary, ternary)
}

/// Twists `A` along an endomorphism `β` commuting with `α`: the twist
/// becomes `β∘α`, the binary bracket `β∘[·,·]` and the ternary `β²∘[·,·,·]`.
pub fn yau_twist(a: &HomLYAlgebra, beta: &Matrix) -> Result<HomLYAlgebra> {
    if beta.rows() != a.dim || !beta.is_square() {
        return Err(Error::DimensionMismatch("twist map shape".into()));
    }
    HomLYAlgebra::new(
        beta * &a.alpha,
        a.binary.postcompose(beta),
        a.ternary.postcompose(&beta.pow(2)),
    )
}

/// Sets `[e_i, e_j] = Σ_k c_k e_k` and the antisymmetric partner.
pub fn set_antisymmetric(b: &mut MultiLinear<Rational>, i: usize, j: usize, value: &[Rational]) {
    b.value_mut(&[i, j]).clone_from_slice(value);
    let neg: Vec<Rational> = value.iter().map(|x| -x).collect();
    b.value_mut(&[j, i]).clone_from_slice(&neg);
}

/// Basis vector `e_i` as a rational vector.
pub fn basis(n: usize, i: usize) -> Vec<Rational> {
    crate::linalg::unit(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn dim2() -> HomLYAlgebra {
        let mut b = MultiLinear::zeros(2, 2, 2);
        set_antisymmetric(&mut b, 0, 1, &[q(1, 1), q(0, 1)]);
        from_lie(b, Matrix::identity(2)).unwrap()
    }

    #[test]
    fn abelian_passes_any_twist() {
        let a = HomLYAlgebra::<Rational>::abelian(Matrix::from_i64(&[&[2, 1], &[0, 0]]));
        assert!(check_hlya(&a).passed());
        assert!(check_deformation_type(&a).passed());
    }

    #[test]
    fn dim2_from_lie() {
        let a = dim2();
        assert_eq!(
            eval_binary(&a, &basis(2, 0), &basis(2, 1)).unwrap(),
            basis(2, 0)
        );
        assert_eq!(a.ternary.value(&[0, 1, 1]), &basis(2, 0)[..]);
        assert_eq!(a.ternary.value(&[0, 1, 0]), &[q(0, 1), q(0, 1)][..]);
        let r = check_hlya(&a);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn broken_antisymmetry_reports_witness() {
        let mut a = dim2();
        a.binary.value_mut(&[1, 0])[0] = q(1, 1);
        let r = check_hlya(&a);
        let hly1 = r.get("HLY1").unwrap();
        assert!(!hly1.passed());
        assert_eq!(hly1.first.as_ref().unwrap().tuple, vec![0, 1]);
    }

    #[test]
    fn dim2_lie_with_zero_ternary_is_deformation_type() {
        let mut a = dim2();
        a.ternary = MultiLinear::zeros(3, 2, 2);
        assert!(check_deformation_type(&a).passed());
    }

    #[test]
    fn morphism_examples() {
        let a = dim2();
        assert!(is_morphism(&Matrix::identity(2), &a, &a).unwrap().passed());
        assert!(is_morphism(&Matrix::zeros(2, 2), &a, &a).unwrap().passed());
        let phi = Matrix::diag(&[q(2, 1), q(1, 1)]);
        assert!(is_morphism(&phi, &a, &a).unwrap().passed());
        assert_eq!(
            is_morphism(&Matrix::identity(3), &a, &a).unwrap_err().name(),
            "DimensionMismatch"
        );
    }

    #[test]
    fn dimension_errors() {
        let a = dim2();
        assert!(eval_binary(&a, &basis(3, 0), &basis(2, 0)).is_err());
        assert!(eval_ternary(&a, &basis(2, 0), &basis(2, 0), &basis(2, 0))
            .unwrap()
            .iter()
            .all(Rational::is_zero));
    }

    #[test]
    fn yau_twist_with_singular_endomorphism() {
        // α = [[a, b], [0, 1]] is an endomorphism of [e1, e2] = e1.
        let beta = Matrix::from_i64(&[&[0, 3], &[0, 1]]);
        let t = yau_twist(&dim2(), &beta).unwrap();
        let r = check_hlya(&t);
        assert!(r.passed(), "{r}");
    }
}
