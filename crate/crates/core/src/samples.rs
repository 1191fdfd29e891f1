//! Small named algebras and modules used by tests, the CLI and the self-test.

use crate::algebra::{from_lie, set_antisymmetric, HomLYAlgebra};
use crate::linalg::{q, Matrix, MultiLinear, Rational};
use crate::representation::Representation;

fn lie(n: usize, brackets: &[(usize, usize, &[i64])]) -> HomLYAlgebra {
    let mut b = MultiLinear::zeros(2, n, n);
    for &(i, j, v) in brackets {
        let v: Vec<Rational> = v.iter().map(|&x| q(x, 1)).collect();
        set_antisymmetric(&mut b, i, j, &v);
    }
    from_lie(b, Matrix::identity(n)).expect("shapes are fixed")
}

/// `[e1, e2] = e1`, `[x, y, z] = [[x, y], z]`, `α = id`.
pub fn dim2() -> HomLYAlgebra {
    lie(2, &[(0, 1, &[1, 0])])
}

/// `ℝ³` with the cross product, i.e. `so(3)`.
pub fn cross_product() -> HomLYAlgebra {
    lie(3, &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0]), (2, 0, &[0, 1, 0])])
}

/// `[e1, e2] = e3`.
pub fn heisenberg() -> HomLYAlgebra {
    lie(3, &[(0, 1, &[0, 0, 1])])
}

/// Basis `(h, e, f)`.
pub fn sl2() -> HomLYAlgebra {
    lie(3, &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])])
}

pub fn abelian(n: usize) -> HomLYAlgebra {
    HomLYAlgebra::abelian(Matrix::identity(n))
}

/// `ρ = D = θ = 0` with `β = id`.
pub fn trivial_rep(a: HomLYAlgebra, vdim: usize) -> Representation {
    Representation::zero(a, Matrix::identity(vdim))
}

/// The Lie-Yamaguti module attached to a Lie module `ρ` of a Lie algebra
/// viewed through [`from_lie`]: `D(x, y) = ρ([x, y])`, `θ(x, y) = ρ(y)ρ(x)`.
pub fn lie_module(a: HomLYAlgebra, rho: Vec<Matrix>) -> Representation {
    let n = a.dim;
    let m = rho.first().map_or(0, Matrix::rows);
    let d = (0..n)
        .map(|i| (0..n).map(|j| representation_of(&rho, a.binary.value(&[i, j]), m)).collect())
        .collect();
    let theta = (0..n)
        .map(|i| (0..n).map(|j| &rho[j] * &rho[i]).collect())
        .collect();
    Representation::new(a, Matrix::identity(m), rho, d, theta).expect("shapes are fixed")
}

fn representation_of(rho: &[Matrix], x: &[Rational], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (r, c) in rho.iter().zip(x) {
        if !c.is_zero() {
            out = &out + &r.scale(c);
        }
    }
    out
}

/// Twists a representation along module and algebra endomorphisms: `β' = ψβ`,
/// `ρ' = ψρ`, `D' = ψ²D`, `θ' = ψ²θ`, on the algebra `yau_twist(A, φ)`.
/// Valid when `φ` commutes with `α`, `ψ` with `β` and `ψ` intertwines `ρ`, `D`,
/// `θ` with their `φ`-twisted versions.
pub fn yau_twist_rep(r: &Representation, phi: &Matrix, psi: &Matrix) -> crate::Result<Representation> {
    let a = crate::algebra::yau_twist(&r.algebra, phi)?;
    let psi2 = psi.pow(2);
    Representation::new(
        a,
        psi * &r.beta,
        r.rho.iter().map(|x| psi * x).collect(),
        r.d.iter().map(|row| row.iter().map(|x| &psi2 * x).collect()).collect(),
        r.theta.iter().map(|row| row.iter().map(|x| &psi2 * x).collect()).collect(),
    )
}

/// Moves a representation along basis changes `p` of `T` and `s` of `V`.
pub fn transport(r: &Representation, p: &Matrix, s: &Matrix) -> Option<Representation> {
    let pinv = p.inverse()?;
    let sinv = s.inverse()?;
    let a = &r.algebra;
    let algebra = HomLYAlgebra::new(
        &(p * &a.alpha) * &pinv,
        a.binary.precompose_all(&pinv).postcompose(p),
        a.ternary.precompose_all(&pinv).postcompose(p),
    )
    .ok()?;
    let conj = |x: &Matrix| &(s * x) * &sinv;
    Representation::new(
        algebra,
        conj(&r.beta),
        r.rho_twisted(&pinv).iter().map(conj).collect(),
        r.d_twisted(&pinv).iter().map(|row| row.iter().map(conj).collect()).collect(),
        r.theta_twisted(&pinv).iter().map(|row| row.iter().map(conj).collect()).collect(),
    )
    .ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_hlya;
    use crate::representation::{adjoint, check_representation};

    #[test]
    fn samples_are_hlyas() {
        for a in [dim2(), cross_product(), heisenberg(), sl2(), abelian(3)] {
            assert!(check_hlya(&a).passed());
            assert!(check_representation(&adjoint(&a).unwrap()).passed());
        }
    }

    #[test]
    fn lie_module_of_adjoint_matches_adjoint() {
        let a = sl2();
        let ad = adjoint(&a).unwrap();
        let r = lie_module(a, ad.rho.clone());
        assert_eq!(r, ad);
    }

    #[test]
    fn transport_preserves_validity() {
        let r = adjoint(&dim2()).unwrap();
        let p = Matrix::from_i64(&[&[1, 2], &[1, 3]]);
        let s = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let t = transport(&r, &p, &s).unwrap();
        assert!(check_representation(&t).passed());
        assert_ne!(t, r);
    }
}
