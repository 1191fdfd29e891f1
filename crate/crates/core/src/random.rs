//! Seeded generators of small random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{from_lie, set_antisymmetric, yau_twist, HomLYAlgebra};
use crate::cohomology::{cochain_space, cocycle_space, CocyclePair};
use crate::linalg::{q, Matrix, MultiLinear, Rational};
use crate::representation::Representation;
use crate::samples;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An integer in `-2..=2`, occasionally halved.
pub fn small<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-2..=2);
    if rng.gen_bool(0.2) {
        q(n, 2)
    } else {
        q(n, 1)
    }
}

pub fn nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = small(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| small(rng)).collect();
    Matrix::from_vec(rows, cols, data)
}

pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

fn combination<R: Rng>(rng: &mut R, basis: &[Matrix], rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for b in basis {
        out = &out + &b.scale(&small(rng));
    }
    out
}

/// A random Lie bracket on a space of dimension `n ≤ 3`, in a random basis.
pub fn lie_bracket<R: Rng>(rng: &mut R, n: usize) -> MultiLinear<Rational> {
    if n == 2 {
        // Every antisymmetric bracket in dimension 2 satisfies Jacobi.
        let mut b = MultiLinear::zeros(2, 2, 2);
        let v = vec![small(rng), small(rng)];
        set_antisymmetric(&mut b, 0, 1, &v);
        return b;
    }
    let base = match n {
        3 => {
            let forms = [
                samples::cross_product(),
                samples::heisenberg(),
                samples::sl2(),
                samples::abelian(3),
            ];
            forms.choose(rng).expect("nonempty").binary.clone()
        }
        _ => MultiLinear::zeros(2, n, n),
    };
    let p = invertible(rng, n);
    let pinv = p.inverse().expect("invertible");
    base.precompose_all(&pinv).postcompose(&p)
}

/// A classical Lie-Yamaguti algebra (`α = id`) coming from a random Lie algebra.
pub fn classical_lya<R: Rng>(rng: &mut R, n: usize) -> HomLYAlgebra {
    from_lie(lie_bracket(rng, n), Matrix::identity(n)).expect("square shapes")
}

/// Endomorphisms `φ` of the Lie algebra `[e1, e2] = e1`.
fn dim2_endomorphism<R: Rng>(rng: &mut R) -> Matrix {
    let b = small(rng);
    if rng.gen_bool(0.5) {
        Matrix::from_rows(vec![vec![Rational::zero(), b], vec![Rational::zero(), small(rng)]])
    } else {
        // diag(-1, 1) is an involution, which keeps cochain spaces nonzero
        let (a, b) = if rng.gen_bool(0.5) {
            (q(-1, 1), Rational::zero())
        } else {
            (small(rng), b)
        };
        Matrix::from_rows(vec![vec![a, b], vec![Rational::zero(), Rational::one()]])
    }
    .expect("square")
}

/// Lie modules of `[e1, e2] = e1` or of the abelian algebra, on `V` of
/// dimension `m`, as `(ρ(e1), ρ(e2))`.
fn dim2_module<R: Rng>(rng: &mut R, abelian: bool, m: usize) -> Vec<Matrix> {
    if abelian {
        let x = matrix(rng, m, m);
        let lin = |rng: &mut R| &Matrix::scalar(m, &small(rng)) + &x.scale(&small(rng));
        return vec![lin(rng), lin(rng)];
    }
    if m != 2 || rng.gen_bool(0.3) {
        return vec![Matrix::zeros(m, m), matrix(rng, m, m)];
    }
    // [E12, diag(u, u+1) + w E12] = E12
    let u = small(rng);
    let w = if rng.gen_bool(0.5) { Rational::zero() } else { small(rng) };
    let a = Matrix::from_rows(vec![vec![q(0, 1), q(1, 1)], vec![q(0, 1), q(0, 1)]]).expect("2x2");
    let b = Matrix::from_rows(vec![vec![u.clone(), w], vec![q(0, 1), &u + &q(1, 1)]]).expect("2x2");
    vec![a, b]
}

/// Module maps `ψ` with `ψρ(x) = ρ(φx)ψ` for every basis vector `x`.
fn intertwiners(rho: &[Matrix], phi: &Matrix) -> Vec<Matrix> {
    let m = rho[0].rows();
    let n = rho.len();
    let twisted: Vec<Matrix> = (0..n)
        .map(|i| {
            let mut s = Matrix::zeros(m, m);
            for (k, r) in rho.iter().enumerate() {
                s = &s + &r.scale(&phi[(k, i)]);
            }
            s
        })
        .collect();
    let cols: Vec<Vec<Rational>> = (0..m * m)
        .map(|e| {
            let mut unit = Matrix::zeros(m, m);
            unit[(e / m, e % m)] = Rational::one();
            let mut col = Vec::new();
            for i in 0..n {
                let d = &(&unit * &rho[i]) - &(&twisted[i] * &unit);
                col.extend(d.data().iter().cloned());
            }
            col
        })
        .collect();
    Matrix::from_columns(n * m * m, &cols)
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_vec(m, m, v))
        .collect()
}

/// A valid representation of a random HLYA of dimension 2 on a module of
/// dimension `m ≤ 2`: a Lie module Yau-twisted along a random pair
/// `(φ, ψ)`, then moved to a random basis.
pub fn dim2_rep<R: Rng>(rng: &mut R, m: usize) -> Representation {
    let abelian = rng.gen_bool(0.25);
    let bracket = if abelian {
        MultiLinear::zeros(2, 2, 2)
    } else {
        samples::dim2().binary
    };
    let a = from_lie(bracket, Matrix::identity(2)).expect("2x2");
    let rho = dim2_module(rng, abelian, m);
    let r = samples::lie_module(a, rho.clone());
    if rng.gen_bool(0.3) {
        return samples::transport(&r, &invertible(rng, 2), &invertible(rng, m)).expect("invertible");
    }
    let phi = if abelian {
        if rng.gen_bool(0.5) {
            let p = invertible(rng, 2);
            let d = Matrix::diag(&[q(1, 1), q(-1, 1)]);
            &(&p * &d) * &p.inverse().expect("invertible")
        } else {
            matrix(rng, 2, 2)
        }
    } else {
        dim2_endomorphism(rng)
    };
    let basis = intertwiners(&rho, &phi);
    let psi = if basis.is_empty() {
        Matrix::zeros(m, m)
    } else {
        let mut psi = combination(rng, &basis, m, m);
        if psi.is_zero() {
            psi = basis[0].clone();
        }
        psi
    };
    let twisted = samples::yau_twist_rep(&r, &phi, &psi).expect("shapes agree");
    let p = invertible(rng, 2);
    let s = invertible(rng, m);
    samples::transport(&twisted, &p, &s).expect("invertible")
}

/// A valid representation with `α = id` and `β = id` of a random classical
/// algebra of dimension `n ≤ 3` (a Lie module or the trivial module).
pub fn classical_rep<R: Rng>(rng: &mut R, n: usize, m: usize) -> Representation {
    if n == 2 {
        let abelian = rng.gen_bool(0.25);
        let bracket = if abelian {
            MultiLinear::zeros(2, 2, 2)
        } else {
            samples::dim2().binary
        };
        let a = from_lie(bracket, Matrix::identity(2)).expect("2x2");
        let r = samples::lie_module(a, dim2_module(rng, abelian, m));
        return samples::transport(&r, &invertible(rng, 2), &invertible(rng, m)).expect("invertible");
    }
    let a = classical_lya(rng, n);
    if m == n && rng.gen_bool(0.7) {
        let ad = crate::representation::adjoint_unchecked(&a);
        return samples::lie_module(a, ad.rho);
    }
    samples::trivial_rep(a, m)
}

/// A random HLYA of dimension 2 with a possibly non-invertible twist.
pub fn dim2_algebra<R: Rng>(rng: &mut R) -> HomLYAlgebra {
    let r = dim2_rep(rng, 1);
    r.algebra
}

/// Which field of a representation a perturbation touched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepField {
    Beta,
    Rho,
    D,
    Theta,
}

/// Adds a nonzero amount to one random entry of `β`, `ρ`, `D` or `θ`.
pub fn perturb_rep<R: Rng>(rng: &mut R, r: &Representation) -> (Representation, RepField) {
    let mut out = r.clone();
    let n = r.dim();
    let m = r.vdim;
    let (a, b) = (rng.gen_range(0..m), rng.gen_range(0..m));
    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let c = nonzero(rng);
    let field = *[RepField::Beta, RepField::Rho, RepField::D, RepField::Theta]
        .choose(rng)
        .expect("nonempty");
    let target = match field {
        RepField::Beta => &mut out.beta,
        RepField::Rho => &mut out.rho[i],
        RepField::D => &mut out.d[i][j],
        RepField::Theta => &mut out.theta[i][j],
    };
    target[(a, b)] += &c;
    (out, field)
}

/// A random element of the `(2,3)`-cocycle space.
pub fn cocycle<R: Rng>(rng: &mut R, r: &Representation) -> CocyclePair {
    let basis = cocycle_space(r).expect("valid representation");
    let mut p = CocyclePair::zero(r.dim(), r.vdim);
    for b in &basis {
        p = p.add(&b.scale(&small(rng)));
    }
    p
}

/// A random `f: T → V` with `f∘α = β∘f`, as an `m × n` matrix.
pub fn equivariant_map<R: Rng>(rng: &mut R, r: &Representation) -> Matrix {
    let c1 = cochain_space(r, 1).expect("arity 1");
    let coeffs: Vec<Rational> = (0..c1.dim()).map(|_| small(rng)).collect();
    crate::cohomology::matrix_from_cochain(&c1.combine(&coeffs))
}

/// A random pair in `C² × C³` (not necessarily a cocycle).
pub fn cochain_pair<R: Rng>(rng: &mut R, r: &Representation) -> CocyclePair {
    let c2 = cochain_space(r, 2).expect("arity 2");
    let c3 = cochain_space(r, 3).expect("arity 3");
    let a: Vec<Rational> = (0..c2.dim()).map(|_| small(rng)).collect();
    let b: Vec<Rational> = (0..c3.dim()).map(|_| small(rng)).collect();
    CocyclePair {
        nu: c2.combine(&a),
        omega: c3.combine(&b),
    }
}

/// `yau_twist` along a random scalar, which always commutes with `α`.
pub fn scalar_twist<R: Rng>(rng: &mut R, a: &HomLYAlgebra) -> HomLYAlgebra {
    yau_twist(a, &Matrix::scalar(a.dim, &small(rng))).expect("square")
}
