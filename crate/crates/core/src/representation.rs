//! Representations `(V, β, ρ, D, θ)` of a Hom-Lie-Yamaguti algebra.

use crate::algebra::{check_hlya, HomLYAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, MultiLinear, Rational};
use crate::report::{self, Condition, DefectTable, Report};

/// `rho[i] = ρ(e_i)`, `d[i][j] = D(e_i, e_j)` and `theta[i][j] = θ(e_i, e_j)`,
/// each an `m × m` matrix acting on `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub algebra: HomLYAlgebra,
    pub vdim: usize,
    pub beta: Matrix,
    pub rho: Vec<Matrix>,
    pub d: Vec<Vec<Matrix>>,
    pub theta: Vec<Vec<Matrix>>,
}

/// How the `D`-cyclic condition is composed with `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Hr41Form {
    /// `(D([x1,x2],αx3) + c.p.)∘β = 0`, the condition the semidirect product
    /// actually needs.
    #[default]
    Composed,
    /// `D([x1,x2],αx3) + c.p. = 0` without `β`.
    Bare,
}

pub const REP_CONDITIONS: [&str; 10] = [
    "HR01", "HR02", "HR03", "HR31", "HR41", "HR42", "HR51", "HR52", "HR61", "HR62",
];

fn square_grid(n: usize, m: usize) -> Vec<Vec<Matrix>> {
    vec![vec![Matrix::zeros(m, m); n]; n]
}

impl Representation {
    pub fn new(
        algebra: HomLYAlgebra,
        beta: Matrix,
        rho: Vec<Matrix>,
        d: Vec<Vec<Matrix>>,
        theta: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let n = algebra.dim;
        let m = beta.rows();
        let bad = |what: &str| Error::DimensionMismatch(format!("{what} has the wrong shape"));
        if !beta.is_square() {
            return Err(bad("beta"));
        }
        let ok_mat = |x: &Matrix| x.rows() == m && x.cols() == m;
        if rho.len() != n || !rho.iter().all(ok_mat) {
            return Err(bad("rho"));
        }
        for (name, g) in [("D", &d), ("theta", &theta)] {
            if g.len() != n || !g.iter().all(|row| row.len() == n && row.iter().all(ok_mat)) {
                return Err(bad(name));
            }
        }
        Ok(Representation {
            algebra,
            vdim: m,
            beta,
            rho,
            d,
            theta,
        })
    }

    /// `ρ = D = θ = 0` on a module of dimension `beta.rows()`.
    pub fn zero(algebra: HomLYAlgebra, beta: Matrix) -> Self {
        let n = algebra.dim;
        let m = beta.rows();
        Representation {
            algebra,
            vdim: m,
            beta,
            rho: vec![Matrix::zeros(m, m); n],
            d: square_grid(n, m),
            theta: square_grid(n, m),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        let mut acc = Matrix::zeros(self.vdim, self.vdim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &self.rho[i].scale(c);
            }
        }
        acc
    }

    fn pair_of(grid: &[Vec<Matrix>], m: usize, x: &[Rational], y: &[Rational]) -> Matrix {
        let mut acc = Matrix::zeros(m, m);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    acc = &acc + &grid[i][j].scale(&(a * b));
                }
            }
        }
        acc
    }

    pub fn d_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        Self::pair_of(&self.d, self.vdim, x, y)
    }

    pub fn theta_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        Self::pair_of(&self.theta, self.vdim, x, y)
    }

    /// `ρ` with its argument precomposed by `a`: entry `i` is `ρ(a e_i)`.
    pub fn rho_twisted(&self, a: &Matrix) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.rho_of(&a.column(i))).collect()
    }

    pub fn d_twisted(&self, a: &Matrix) -> Vec<Vec<Matrix>> {
        self.grid_twisted(&self.d, a)
    }

    pub fn theta_twisted(&self, a: &Matrix) -> Vec<Vec<Matrix>> {
        self.grid_twisted(&self.theta, a)
    }

    fn grid_twisted(&self, grid: &[Vec<Matrix>], a: &Matrix) -> Vec<Vec<Matrix>> {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|i| a.column(i)).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Self::pair_of(grid, self.vdim, &cols[i], &cols[j]))
                    .collect()
            })
            .collect()
    }
}

fn flat(m: Matrix) -> Vec<Rational> {
    m.data().to_vec()
}

/// The ten representation conditions as defect functions; each defect is an
/// `m × m` matrix flattened row-major.
pub fn rep_conditions(r: &Representation, form: Hr41Form) -> Vec<Condition<'_, Rational>> {
    let a = &r.algebra;
    let n = a.dim;
    let alpha = a.alpha.clone();
    let alpha2 = alpha.pow(2);
    let beta = r.beta.clone();
    let beta2 = beta.pow(2);
    let a1: Vec<Vec<Rational>> = (0..n).map(|i| alpha.column(i)).collect();
    let a2: Vec<Vec<Rational>> = (0..n).map(|i| alpha2.column(i)).collect();
    let rho_a = r.rho_twisted(&alpha);
    let rho_a2 = r.rho_twisted(&alpha2);
    let d_a = r.d_twisted(&alpha);
    let d_a2 = r.d_twisted(&alpha2);
    let th_a = r.theta_twisted(&alpha);
    let th_a2 = r.theta_twisted(&alpha2);
    let br2 = |i: usize, j: usize| a.binary.value(&[i, j]).to_vec();
    let br3 = |i: usize, j: usize, k: usize| a.ternary.value(&[i, j, k]).to_vec();

    let mut conds: Vec<Condition<'_, Rational>> = Vec::new();
    {
        let (rho_a, beta) = (rho_a.clone(), beta.clone());
        conds.push(Condition::new("HR01", 1, n, move |x: &[usize]| {
            let i = x[0];
            flat(&(&rho_a[i] * &beta) - &(&beta * &r.rho[i]))
        }));
    }
    {
        let (d_a, beta) = (d_a.clone(), beta.clone());
        conds.push(Condition::new("HR02", 2, n, move |x: &[usize]| {
            let (i, j) = (x[0], x[1]);
            flat(&(&d_a[i][j] * &beta) - &(&beta * &r.d[i][j]))
        }));
    }
    {
        let (th_a, beta) = (th_a.clone(), beta.clone());
        conds.push(Condition::new("HR03", 2, n, move |x: &[usize]| {
            let (i, j) = (x[0], x[1]);
            flat(&(&th_a[i][j] * &beta) - &(&beta * &r.theta[i][j]))
        }));
    }
    {
        let (rho_a, beta) = (rho_a.clone(), beta.clone());
        conds.push(Condition::new("HR31", 2, n, move |x: &[usize]| {
            let (i, j) = (x[0], x[1]);
            let mut m = &r.d[i][j] - &r.theta[j][i];
            m = &m + &r.theta[i][j];
            m = &m + &(&r.rho_of(&br2(i, j)) * &beta);
            m = &m - &(&rho_a[i] * &r.rho[j]);
            m = &m + &(&rho_a[j] * &r.rho[i]);
            flat(m)
        }));
    }
    {
        let (a1, beta) = (a1.clone(), beta.clone());
        conds.push(Condition::new("HR41", 3, n, move |x: &[usize]| {
            let mut m = Matrix::zeros(r.vdim, r.vdim);
            for [i, j, k] in [[x[0], x[1], x[2]], [x[1], x[2], x[0]], [x[2], x[0], x[1]]] {
                m = &m + &r.d_of(&br2(i, j), &a1[k]);
            }
            if form == Hr41Form::Composed {
                m = &m * &beta;
            }
            flat(m)
        }));
    }
    {
        let (a1, th_a, beta) = (a1.clone(), th_a.clone(), beta.clone());
        conds.push(Condition::new("HR42", 3, n, move |x: &[usize]| {
            let (i, j, l) = (x[0], x[1], x[2]);
            let mut m = &r.theta_of(&br2(i, j), &a1[l]) * &beta;
            m = &m - &(&th_a[i][l] * &r.rho[j]);
            m = &m + &(&th_a[j][l] * &r.rho[i]);
            flat(m)
        }));
    }
    {
        let (d_a, rho_a2, beta2) = (d_a.clone(), rho_a2.clone(), beta2.clone());
        conds.push(Condition::new("HR51", 3, n, move |x: &[usize]| {
            let (i, j, l) = (x[0], x[1], x[2]);
            let mut m = &d_a[i][j] * &r.rho[l];
            m = &m - &(&rho_a2[l] * &r.d[i][j]);
            m = &m - &(&r.rho_of(&br3(i, j, l)) * &beta2);
            flat(m)
        }));
    }
    {
        let (a1, rho_a2, beta) = (a1.clone(), rho_a2.clone(), beta.clone());
        conds.push(Condition::new("HR52", 3, n, move |x: &[usize]| {
            let (i, l, mm) = (x[0], x[1], x[2]);
            let mut m = &r.theta_of(&a1[i], &br2(l, mm)) * &beta;
            m = &m - &(&rho_a2[l] * &r.theta[i][mm]);
            m = &m + &(&rho_a2[mm] * &r.theta[i][l]);
            flat(m)
        }));
    }
    {
        let (a2, d_a2, th_a2, beta2) = (a2.clone(), d_a2.clone(), th_a2.clone(), beta2.clone());
        conds.push(Condition::new("HR61", 4, n, move |x: &[usize]| {
            let (i, j, l, mm) = (x[0], x[1], x[2], x[3]);
            let mut m = &d_a2[i][j] * &r.theta[l][mm];
            m = &m - &(&th_a2[l][mm] * &r.d[i][j]);
            m = &m - &(&r.theta_of(&br3(i, j, l), &a2[mm]) * &beta2);
            m = &m - &(&r.theta_of(&a2[l], &br3(i, j, mm)) * &beta2);
            flat(m)
        }));
    }
    conds.push(Condition::new("HR62", 4, n, move |x: &[usize]| {
        let (i, l, mm, p) = (x[0], x[1], x[2], x[3]);
        let mut m = &r.theta_of(&a2[i], &br3(l, mm, p)) * &beta2;
        m = &m - &(&th_a2[mm][p] * &r.theta[i][l]);
        m = &m + &(&th_a2[l][p] * &r.theta[i][mm]);
        m = &m - &(&d_a2[l][mm] * &r.theta[i][p]);
        flat(m)
    }));
    conds
}

pub fn check_representation(r: &Representation) -> Report<Rational> {
    report::run(&rep_conditions(r, Hr41Form::Composed))
}

pub fn check_representation_with(r: &Representation, form: Hr41Form) -> Report<Rational> {
    report::run(&rep_conditions(r, form))
}

pub fn representation_table(r: &Representation) -> DefectTable<Rational> {
    report::table(&rep_conditions(r, Hr41Form::Composed))
}

/// `ρ(x)y = [x,y]`, `D(x,y)z = [x,y,z]`, `θ(x,y)z = [z,x,y]`, `β = α`.
pub fn adjoint(a: &HomLYAlgebra) -> Result<Representation> {
    let rep = check_hlya(a);
    if !rep.passed() {
        return Err(Error::InvalidAlgebra(rep.failed_names().join(", ")));
    }
    Ok(adjoint_unchecked(a))
}

/// The adjoint data without validating the algebra first.
pub fn adjoint_unchecked(a: &HomLYAlgebra) -> Representation {
    let n = a.dim;
    let rho = (0..n)
        .map(|i| {
            let cols: Vec<Vec<Rational>> = (0..n).map(|k| a.binary.value(&[i, k]).to_vec()).collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    let d = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let cols: Vec<Vec<Rational>> =
                        (0..n).map(|k| a.ternary.value(&[i, j, k]).to_vec()).collect();
                    Matrix::from_columns(n, &cols)
                })
                .collect()
        })
        .collect();
    let theta = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let cols: Vec<Vec<Rational>> =
                        (0..n).map(|k| a.ternary.value(&[k, i, j]).to_vec()).collect();
                    Matrix::from_columns(n, &cols)
                })
                .collect()
        })
        .collect();
    Representation {
        algebra: a.clone(),
        vdim: n,
        beta: a.alpha.clone(),
        rho,
        d,
        theta,
    }
}

/// `T ⋉ V` on the basis `e_0 … e_{n-1}, u_0 … u_{m-1}`.
pub fn semidirect(r: &Representation) -> HomLYAlgebra {
    let n = r.dim();
    let m = r.vdim;
    let big = n + m;
    let a = &r.algebra;
    let mut b = MultiLinear::zeros(2, big, big);
    let mut t = MultiLinear::zeros(3, big, big);
    for i in 0..n {
        for j in 0..n {
            b.value_mut(&[i, j])[..n].clone_from_slice(a.binary.value(&[i, j]));
            for k in 0..n {
                t.value_mut(&[i, j, k])[..n].clone_from_slice(a.ternary.value(&[i, j, k]));
            }
        }
    }
    for i in 0..n {
        for u in 0..m {
            for c in 0..m {
                let x = &r.rho[i][(c, u)];
                b.value_mut(&[i, n + u])[n + c] = x.clone();
                b.value_mut(&[n + u, i])[n + c] = -x;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for u in 0..m {
                for c in 0..m {
                    t.value_mut(&[i, j, n + u])[n + c] = r.d[i][j][(c, u)].clone();
                    t.value_mut(&[i, n + u, j])[n + c] = -&r.theta[i][j][(c, u)];
                    t.value_mut(&[n + u, i, j])[n + c] = r.theta[i][j][(c, u)].clone();
                }
            }
        }
    }
    HomLYAlgebra {
        dim: big,
        alpha: Matrix::block_diag(&a.alpha, &r.beta),
        binary: b,
        ternary: t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{from_lie, set_antisymmetric};
    use crate::linalg::q;

    fn dim2() -> HomLYAlgebra {
        let mut b = MultiLinear::zeros(2, 2, 2);
        set_antisymmetric(&mut b, 0, 1, &[q(1, 1), q(0, 1)]);
        from_lie(b, Matrix::identity(2)).unwrap()
    }

    #[test]
    fn zero_rep_passes_with_any_beta() {
        let r = Representation::zero(dim2(), Matrix::from_i64(&[&[1, 5], &[0, 0]]));
        assert!(check_representation(&r).passed());
    }

    #[test]
    fn adjoint_reads_structure_constants() {
        let a = dim2();
        let r = adjoint(&a).unwrap();
        assert_eq!(r.rho[0].column(1), vec![q(1, 1), q(0, 1)]);
        for (i, j, k) in [(0, 1, 1), (1, 0, 0), (0, 0, 1)] {
            assert_eq!(r.theta[i][j].column(k), a.ternary.value(&[k, i, j]));
        }
        let rep = check_representation(&r);
        assert!(rep.passed(), "{rep}");
        assert!(check_hlya(&semidirect(&r)).passed());
    }

    #[test]
    fn zeroed_theta_breaks_hr31() {
        let mut r = adjoint(&dim2()).unwrap();
        r.theta = square_grid(2, 2);
        let rep = check_representation(&r);
        assert!(!rep.get("HR31").unwrap().passed());
        assert!(!check_hlya(&semidirect(&r)).passed());
    }

    #[test]
    fn adjoint_rejects_invalid_algebra() {
        let mut a = dim2();
        a.binary.value_mut(&[1, 0])[0] = q(1, 1);
        assert_eq!(adjoint(&a).unwrap_err().name(), "InvalidAlgebra");
    }

    /// Base `[e1,e2] = e1` with `e3` central; a 3-dimensional module with
    /// `β = 0`, `θ = 0`, `ρ(e1) = E12`, `ρ(e3) = E23`, `D(x,y) = [ρ(x),ρ(y)]`.
    fn heisenberg_module() -> Representation {
        let mut b = MultiLinear::zeros(2, 3, 3);
        set_antisymmetric(&mut b, 0, 1, &[q(1, 1), q(0, 1), q(0, 1)]);
        let base = from_lie(b, Matrix::identity(3)).unwrap();
        let e = |i: usize, j: usize| {
            let mut m = Matrix::zeros(3, 3);
            m[(i, j)] = q(1, 1);
            m
        };
        let rho = vec![e(0, 1), Matrix::zeros(3, 3), e(1, 2)];
        let d = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| &(&rho[i] * &rho[j]) - &(&rho[j] * &rho[i]))
                    .collect()
            })
            .collect();
        Representation::new(base, Matrix::zeros(3, 3), rho, d, square_grid(3, 3)).unwrap()
    }

    #[test]
    fn bare_hr41_is_stronger_than_the_semidirect_product_needs() {
        let r = heisenberg_module();
        let rep = check_representation(&r);
        assert!(rep.passed(), "{rep}");
        assert!(check_hlya(&semidirect(&r)).passed());
        let bare = check_representation_with(&r, Hr41Form::Bare);
        assert_eq!(bare.failed_names(), vec!["HR41"]);
    }

    #[test]
    fn bare_hr41_fails_on_an_adjoint() {
        let t = semidirect(&heisenberg_module());
        let r = adjoint(&t).unwrap();
        assert!(check_representation(&r).passed());
        let bare = check_representation_with(&r, Hr41Form::Bare);
        assert_eq!(bare.failed_names(), vec!["HR41"]);
    }

    #[test]
    fn semidirect_module_is_abelian() {
        let r = adjoint(&dim2()).unwrap();
        let s = semidirect(&r);
        for u in 2..4 {
            for v in 2..4 {
                assert!(s.binary.value(&[u, v]).iter().all(Rational::is_zero));
                for x in 0..4 {
                    assert!(s.ternary.value(&[u, v, x]).iter().all(Rational::is_zero));
                    assert!(s.ternary.value(&[u, x, v]).iter().all(Rational::is_zero));
                    assert!(s.ternary.value(&[x, u, v]).iter().all(Rational::is_zero));
                }
            }
        }
    }
}
