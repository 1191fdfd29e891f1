//! Cochains, the coboundary operator and (2,3)-cohomology.

use crate::error::{Error, Result};
use crate::linalg::{apply, axpy, sub_into, Arg, Matrix, MultiLinear, Rational, Tuples};
use crate::report::{self, Condition, DefectTable, Report};
use crate::representation::{check_representation, Representation};

/// An `m`-linear map `T^m → V`; `dim_in = dim T`, `dim_out = dim V`.
pub type Cochain = MultiLinear<Rational>;

/// Default cap on `dim V · (dim T)^arity`.
pub const DEFAULT_MAX_SIZE: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct CocyclePair {
    pub nu: Cochain,
    pub omega: Cochain,
}

impl CocyclePair {
    pub fn zero(n: usize, vdim: usize) -> Self {
        CocyclePair {
            nu: Cochain::zeros(2, n, vdim),
            omega: Cochain::zeros(3, n, vdim),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CocyclePair {
            nu: self.nu.add(&other.nu),
            omega: self.omega.add(&other.omega),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CocyclePair {
            nu: self.nu.sub(&other.nu),
            omega: self.omega.sub(&other.omega),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CocyclePair {
            nu: self.nu.scale(c),
            omega: self.omega.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nu.is_zero() && self.omega.is_zero()
    }
}

/// Index tuples with every argument pair `(2k, 2k+1)` strictly increasing.
/// A cochain is determined by its values on these.
fn reduced_tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    Tuples::new(n, arity)
        .filter(|t| (0..arity / 2).all(|k| t[2 * k] < t[2 * k + 1]))
        .collect()
}

/// Sorts each argument pair, returning the sign, or `None` if some pair has
/// equal entries.
fn normalize(t: &mut [usize]) -> Option<bool> {
    let mut neg = false;
    for k in 0..t.len() / 2 {
        match t[2 * k].cmp(&t[2 * k + 1]) {
            std::cmp::Ordering::Equal => return None,
            std::cmp::Ordering::Greater => {
                t.swap(2 * k, 2 * k + 1);
                neg = !neg;
            }
            std::cmp::Ordering::Less => {}
        }
    }
    Some(neg)
}

/// The space `C^m(T, V)` with a fixed echelon basis.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub arity: usize,
    pub n: usize,
    pub vdim: usize,
    pub basis: Vec<Cochain>,
    reduced: Vec<Vec<usize>>,
    free: Vec<usize>,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn reduced_vector(&self, f: &Cochain) -> Vec<Rational> {
        let mut v = Vec::with_capacity(self.reduced.len() * self.vdim);
        for t in &self.reduced {
            v.extend_from_slice(f.value(t));
        }
        v
    }

    /// Coordinates of `f` in [`CochainSpace::basis`].
    pub fn coords(&self, f: &Cochain) -> Result<Vec<Rational>> {
        if f.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: f.arity(),
            });
        }
        if f.dim_in() != self.n || f.dim_out() != self.vdim {
            return Err(Error::DimensionMismatch("cochain shape".into()));
        }
        let r = self.reduced_vector(f);
        let c: Vec<Rational> = self.free.iter().map(|&i| r[i].clone()).collect();
        if &self.combine(&c) != f {
            return Err(Error::InvalidCochain(format!(
                "arity-{} map is not in the cochain space",
                self.arity
            )));
        }
        Ok(c)
    }

    pub fn contains(&self, f: &Cochain) -> bool {
        self.coords(f).is_ok()
    }

    pub fn combine(&self, c: &[Rational]) -> Cochain {
        let mut out = Cochain::zeros(self.arity, self.n, self.vdim);
        for (x, b) in c.iter().zip(&self.basis) {
            if !x.is_zero() {
                out = out.add(&b.scale(x));
            }
        }
        out
    }
}

fn identity_columns(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|k| {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            e
        })
        .collect()
}

fn raw_size(n: usize, vdim: usize, arity: usize) -> u128 {
    (vdim as u128).saturating_mul((n as u128).saturating_pow(arity as u32))
}

/// `C^m(T, V)`: equivariant maps, antisymmetric in each argument pair.
/// Arity 1 has no pair condition.
pub fn cochain_space(r: &Representation, arity: usize) -> Result<CochainSpace> {
    if arity == 0 {
        return Err(Error::InvalidLevel { min: 1, got: 0 });
    }
    let n = r.dim();
    let m = r.vdim;
    let alpha = &r.algebra.alpha;
    let reduced = reduced_tuples(n, arity);
    let pos: std::collections::HashMap<Vec<usize>, usize> = reduced
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let size = reduced.len() * m;
    let mut cons = Matrix::zeros(size, size);
    // Row (J, a): f(α e_J)_a − (β f(e_J))_a = 0.
    let alpha_cols: Vec<Vec<(usize, Rational)>> = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| !alpha[(i, j)].is_zero())
                .map(|i| (i, alpha[(i, j)].clone()))
                .collect()
        })
        .collect();
    for (ji, jt) in reduced.iter().enumerate() {
        let supports: Vec<&Vec<(usize, Rational)>> = jt.iter().map(|&j| &alpha_cols[j]).collect();
        if supports.iter().all(|s| !s.is_empty()) {
            let mut pick = vec![0usize; arity];
            'outer: loop {
                let mut t: Vec<usize> = (0..arity).map(|s| supports[s][pick[s]].0).collect();
                let mut c = Rational::one();
                for s in 0..arity {
                    c = &c * &supports[s][pick[s]].1;
                }
                if let Some(neg) = normalize(&mut t) {
                    if neg {
                        c = -c;
                    }
                    let ii = pos[&t];
                    for a in 0..m {
                        cons[(ji * m + a, ii * m + a)] += &c;
                    }
                }
                let mut s = arity;
                loop {
                    if s == 0 {
                        break 'outer;
                    }
                    s -= 1;
                    pick[s] += 1;
                    if pick[s] < supports[s].len() {
                        break;
                    }
                    pick[s] = 0;
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let x = &r.beta[(a, b)];
                if !x.is_zero() {
                    cons[(ji * m + a, ji * m + b)] -= x;
                }
            }
        }
    }
    let rref = cons.rref();
    let mut is_pivot = vec![false; size];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..size).filter(|&c| !is_pivot[c]).collect();
    let basis = cons
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut f = Cochain::zeros(arity, n, m);
            for (ti, t) in reduced.iter().enumerate() {
                let vals = &v[ti * m..(ti + 1) * m];
                if vals.iter().all(Rational::is_zero) {
                    continue;
                }
                f.value_mut(t).clone_from_slice(vals);
                if arity >= 2 {
                    expand_antisymmetric(&mut f, t, vals);
                }
            }
            f
        })
        .collect();
    Ok(CochainSpace {
        arity,
        n,
        vdim: m,
        basis,
        reduced,
        free,
    })
}

/// Writes `±vals` at every pair-permutation of the sorted tuple `t`.
fn expand_antisymmetric(f: &mut Cochain, t: &[usize], vals: &[Rational]) {
    let pairs = t.len() / 2;
    for mask in 1u64..(1u64 << pairs) {
        let mut s = t.to_vec();
        let mut neg = false;
        for k in 0..pairs {
            if mask & (1 << k) != 0 {
                s.swap(2 * k, 2 * k + 1);
                neg = !neg;
            }
        }
        let v: Vec<Rational> = if neg {
            vals.iter().map(|x| -x).collect()
        } else {
            vals.to_vec()
        };
        f.value_mut(&s).clone_from_slice(&v);
    }
}

/// Checks equivariance and pair antisymmetry directly on all tuples.
pub fn is_cochain(r: &Representation, f: &Cochain) -> bool {
    if f.dim_in() != r.dim() || f.dim_out() != r.vdim {
        return false;
    }
    if f.precompose_all(&r.algebra.alpha) != f.postcompose(&r.beta) {
        return false;
    }
    if f.arity() < 2 {
        return true;
    }
    (0..f.arity() / 2).all(|k| f.swap_slots(2 * k, 2 * k + 1) == f.scale(&-Rational::one()))
}

/// An arity-1 cochain from an `m × n` matrix whose column `j` is `f(e_j)`.
pub fn cochain_from_matrix(f: &Matrix) -> Cochain {
    Cochain::from_fn(1, f.cols(), f.rows(), |t| f.column(t[0]))
}

pub fn matrix_from_cochain(f: &Cochain) -> Matrix {
    let cols: Vec<Vec<Rational>> = (0..f.dim_in()).map(|j| f.value(&[j]).to_vec()).collect();
    Matrix::from_columns(f.dim_out(), &cols)
}

struct DeltaData {
    n_level: usize,
    rho_a: Vec<Matrix>,
    d_odd: Vec<Vec<Matrix>>,
    d_even: Vec<Vec<Matrix>>,
    th_even: Vec<Vec<Matrix>>,
}

impl DeltaData {
    fn new(r: &Representation, n_level: usize) -> Self {
        let alpha = &r.algebra.alpha;
        let a_even = alpha.pow(2 * n_level as u32);
        let a_odd = alpha.pow(2 * n_level as u32 - 1);
        DeltaData {
            n_level,
            rho_a: r.rho_twisted(&a_even),
            d_odd: r.d_twisted(&a_odd),
            d_even: r.d_twisted(&a_even),
            th_even: r.theta_twisted(&a_even),
        }
    }
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn without_pair(x: &[usize], p: usize) -> Vec<usize> {
    x.iter()
        .enumerate()
        .filter(|&(i, _)| i != p && i != p + 1)
        .map(|(_, &v)| v)
        .collect()
}

/// The sums `Σ_k Σ_j ± h(α²x, …, [x_{2k-1}, x_{2k}, x_j], …)` shared by both
/// components, with `h_sub[p]` carrying `α²` in every slot except `p`.
fn bracket_sum(
    r: &Representation,
    h_sub: &[Cochain],
    x: &[usize],
    pairs: usize,
    n_level: usize,
    out: &mut [Rational],
) {
    let len = x.len();
    for k in 1..=pairs {
        let p = 2 * k - 2;
        let rest = without_pair(x, p);
        let s = sign(n_level + k);
        for jj in (2 * k)..len {
            let slot = jj - 2;
            let br = r.algebra.ternary.value(&[x[p], x[p + 1], x[jj]]);
            let v = h_sub[slot].eval_one_vector(&rest, slot, br);
            axpy(out, &s, &v);
        }
    }
}

fn check_delta_args(r: &Representation, n_level: usize, f: &Cochain, g: &Cochain) -> Result<()> {
    if n_level == 0 {
        return Err(Error::InvalidLevel { min: 1, got: 0 });
    }
    if f.arity() != 2 * n_level {
        return Err(Error::ArityMismatch {
            expected: 2 * n_level,
            found: f.arity(),
        });
    }
    if g.arity() != 2 * n_level + 1 {
        return Err(Error::ArityMismatch {
            expected: 2 * n_level + 1,
            found: g.arity(),
        });
    }
    for h in [f, g] {
        if h.dim_in() != r.dim() || h.dim_out() != r.vdim {
            return Err(Error::DimensionMismatch("cochain shape".into()));
        }
    }
    Ok(())
}

/// `δ(f, g) = (δ_I f, δ_II g)` evaluated literally, without checking that
/// the inputs or outputs are cochains.
pub fn delta_raw(
    r: &Representation,
    n_level: usize,
    f: &Cochain,
    g: &Cochain,
) -> Result<(Cochain, Cochain)> {
    check_delta_args(r, n_level, f, g)?;
    let dd = DeltaData::new(r, n_level);
    let nn = dd.n_level;
    let n = r.dim();
    let m = r.vdim;
    let alpha = &r.algebra.alpha;
    let alpha2 = alpha.pow(2);
    let two_n = 2 * nn;

    // g(αx_1, …, αx_{2n}, u)
    let g_a = g.precompose_except(alpha, &[two_n]);
    let f_sub: Vec<Cochain> = (0..two_n).map(|p| f.precompose_except(&alpha2, &[p])).collect();
    let g_sub: Vec<Cochain> = (0..two_n + 1)
        .map(|p| g.precompose_except(&alpha2, &[p]))
        .collect();

    let d1 = Cochain::from_fn(two_n + 2, n, m, |x| {
        let mut out = vec![Rational::zero(); m];
        let mut head: Vec<usize> = x[..two_n].to_vec();
        head.push(x[two_n + 1]);
        out.clone_from_slice(&dd.rho_a[x[two_n]].mul_vec(g.value(&head)));
        sub_into(&mut out, &dd.rho_a[x[two_n + 1]].mul_vec(g.value(&x[..two_n + 1])));
        let br = r.algebra.binary.value(&[x[two_n], x[two_n + 1]]);
        sub_into(&mut out, &g_a.eval_one_vector(&x[..two_n + 1], two_n, br));
        for k in 1..=nn {
            let p = 2 * k - 2;
            let v = dd.d_odd[x[p]][x[p + 1]].mul_vec(f.value(&without_pair(x, p)));
            axpy(&mut out, &sign(nn + k + 1), &v);
        }
        bracket_sum(r, &f_sub, x, nn, nn, &mut out);
        out
    });

    let d2 = Cochain::from_fn(two_n + 3, n, m, |x| {
        let mut out = dd.th_even[x[two_n + 1]][x[two_n + 2]].mul_vec(g.value(&x[..two_n + 1]));
        let mut head: Vec<usize> = x[..two_n].to_vec();
        head.push(x[two_n + 1]);
        sub_into(
            &mut out,
            &dd.th_even[x[two_n]][x[two_n + 2]].mul_vec(g.value(&head)),
        );
        for k in 1..=nn + 1 {
            let p = 2 * k - 2;
            let v = dd.d_even[x[p]][x[p + 1]].mul_vec(g.value(&without_pair(x, p)));
            axpy(&mut out, &sign(nn + k + 1), &v);
        }
        bracket_sum(r, &g_sub, x, nn + 1, nn, &mut out);
        out
    });
    Ok((d1, d2))
}

/// `δ(f, g)`, rejecting outputs that fail the cochain conditions.
pub fn delta(
    r: &Representation,
    n_level: usize,
    f: &Cochain,
    g: &Cochain,
) -> Result<(Cochain, Cochain)> {
    let (a, b) = delta_raw(r, n_level, f, g)?;
    for h in [&a, &b] {
        if !is_cochain(r, h) {
            return Err(Error::InvalidCochain(format!(
                "coboundary of arity {} is not a cochain",
                h.arity()
            )));
        }
    }
    Ok((a, b))
}

/// Matrix of `δ` from `C^{2n} ⊕ C^{2n+1}` to `C^{2n+2} ⊕ C^{2n+3}` in the
/// echelon bases of [`cochain_space`].
pub fn delta_matrix(r: &Representation, n_level: usize) -> Result<Matrix> {
    delta_matrix_guarded(r, n_level, u128::MAX)
}

pub fn delta_matrix_guarded(r: &Representation, n_level: usize, max_size: u128) -> Result<Matrix> {
    if n_level == 0 {
        return Err(Error::InvalidLevel { min: 1, got: 0 });
    }
    let size = raw_size(r.dim(), r.vdim, 2 * n_level + 3);
    if size > max_size {
        return Err(Error::SizeGuard {
            size,
            limit: max_size,
        });
    }
    let c0 = cochain_space(r, 2 * n_level)?;
    let c1 = cochain_space(r, 2 * n_level + 1)?;
    let c2 = cochain_space(r, 2 * n_level + 2)?;
    let c3 = cochain_space(r, 2 * n_level + 3)?;
    let (n, m) = (r.dim(), r.vdim);
    let zero_f = Cochain::zeros(2 * n_level, n, m);
    let zero_g = Cochain::zeros(2 * n_level + 1, n, m);
    let mut cols = Vec::with_capacity(c0.dim() + c1.dim());
    let inputs = c0
        .basis
        .iter()
        .map(|f| (f, &zero_g))
        .chain(c1.basis.iter().map(|g| (&zero_f, g)));
    for (f, g) in inputs {
        let (a, b) = delta_raw(r, n_level, f, g)?;
        let mut col = c2.coords(&a)?;
        col.extend(c3.coords(&b)?);
        cols.push(col);
    }
    Ok(Matrix::from_columns(c2.dim() + c3.dim(), &cols))
}

/// Dimensions of `C^{2n}`, `C^{2n+1}`, `C^{2n+2}` and `C^{2n+3}`.
pub fn level_dims(r: &Representation, n_level: usize) -> Result<[usize; 4]> {
    let mut out = [0; 4];
    for (i, d) in out.iter_mut().enumerate() {
        *d = cochain_space(r, 2 * n_level + i)?.dim();
    }
    Ok(out)
}

pub const COCYCLE_CONDITIONS: [&str; 8] =
    ["SKEW2", "SKEW3", "CC01", "CC02", "CC1", "CC2", "CC3", "CC4"];

/// The (2,3)-cocycle conditions as defect functions on basis tuples.
pub fn cocycle_conditions<'a>(r: &'a Representation, p: &'a CocyclePair) -> Vec<Condition<'a, Rational>> {
    let a = &r.algebra;
    let n = a.dim;
    let alpha = &a.alpha;
    let alpha2 = alpha.pow(2);
    let nu = &p.nu;
    let om = &p.omega;
    let beta = &r.beta;
    let nu_aa = nu.precompose_all(alpha);
    let om_aaa = om.precompose_all(alpha);
    let nu_1a = nu.precompose(1, alpha);
    let nu_1a2 = nu.precompose(1, &alpha2);
    let nu_0a2 = nu.precompose(0, &alpha2);
    let om_12a = om.precompose(1, alpha).precompose(2, alpha);
    let om_01a = om.precompose(0, alpha).precompose(1, alpha);
    let om_01a2 = om.precompose(0, &alpha2).precompose(1, &alpha2);
    let om_12a2 = om.precompose(1, &alpha2).precompose(2, &alpha2);
    let om_02a2 = om.precompose(0, &alpha2).precompose(2, &alpha2);
    let rho_a = r.rho_twisted(alpha);
    let rho_a2 = r.rho_twisted(&alpha2);
    let d_a = r.d_twisted(alpha);
    let d_a2 = r.d_twisted(&alpha2);
    let th_a = r.theta_twisted(alpha);
    let th_a2 = r.theta_twisted(&alpha2);
    let b = move |i: usize, j: usize| a.binary.value(&[i, j]);
    let t = move |i: usize, j: usize, k: usize| a.ternary.value(&[i, j, k]);
    let cyc = |x: &[usize]| [[x[0], x[1], x[2]], [x[1], x[2], x[0]], [x[2], x[0], x[1]]];
    let m = r.vdim;

    vec![
        Condition::new("SKEW2", 2, n, move |x: &[usize]| {
            let mut d = nu.value(x).to_vec();
            crate::linalg::add_into(&mut d, nu.value(&[x[1], x[0]]));
            d
        }),
        Condition::new("SKEW3", 3, n, move |x: &[usize]| {
            let mut d = om.value(x).to_vec();
            crate::linalg::add_into(&mut d, om.value(&[x[1], x[0], x[2]]));
            d
        }),
        Condition::new("CC01", 2, n, move |x: &[usize]| {
            let mut d = nu_aa.value(x).to_vec();
            sub_into(&mut d, &apply(beta, nu.value(x)));
            d
        }),
        Condition::new("CC02", 3, n, move |x: &[usize]| {
            let mut d = om_aaa.value(x).to_vec();
            sub_into(&mut d, &apply(beta, om.value(x)));
            d
        }),
        Condition::new("CC1", 3, n, move |x: &[usize]| {
            let mut d = vec![Rational::zero(); m];
            for [i, j, k] in cyc(x) {
                crate::linalg::add_into(&mut d, om.value(&[i, j, k]));
                sub_into(&mut d, &rho_a[i].mul_vec(nu.value(&[j, k])));
                crate::linalg::add_into(&mut d, &nu_1a.eval(&[Arg::Vector(b(i, j)), Arg::Basis(k)]));
            }
            d
        }),
        Condition::new("CC2", 4, n, move |x: &[usize]| {
            let l = x[3];
            let mut d = vec![Rational::zero(); m];
            for [i, j, k] in cyc(x) {
                crate::linalg::add_into(&mut d, &th_a[i][l].mul_vec(nu.value(&[j, k])));
                crate::linalg::add_into(
                    &mut d,
                    &om_12a.eval(&[Arg::Vector(b(i, j)), Arg::Basis(k), Arg::Basis(l)]),
                );
            }
            d
        }),
        Condition::new("CC3", 4, n, move |x: &[usize]| {
            let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
            let mut d = om_01a.eval(&[Arg::Basis(i), Arg::Basis(j), Arg::Vector(b(k, l))]);
            crate::linalg::add_into(&mut d, &d_a[i][j].mul_vec(nu.value(&[k, l])));
            sub_into(&mut d, &nu_1a2.eval(&[Arg::Vector(t(i, j, k)), Arg::Basis(l)]));
            sub_into(&mut d, &nu_0a2.eval(&[Arg::Basis(k), Arg::Vector(t(i, j, l))]));
            sub_into(&mut d, &rho_a2[k].mul_vec(om.value(&[i, j, l])));
            crate::linalg::add_into(&mut d, &rho_a2[l].mul_vec(om.value(&[i, j, k])));
            d
        }),
        Condition::new("CC4", 5, n, move |x: &[usize]| {
            let (i, j, k, l, mm) = (x[0], x[1], x[2], x[3], x[4]);
            let mut d = om_01a2.eval(&[Arg::Basis(i), Arg::Basis(j), Arg::Vector(t(k, l, mm))]);
            crate::linalg::add_into(&mut d, &d_a2[i][j].mul_vec(om.value(&[k, l, mm])));
            sub_into(&mut d, &om_12a2.eval(&[Arg::Vector(t(i, j, k)), Arg::Basis(l), Arg::Basis(mm)]));
            sub_into(&mut d, &om_02a2.eval(&[Arg::Basis(k), Arg::Vector(t(i, j, l)), Arg::Basis(mm)]));
            sub_into(&mut d, &om_01a2.eval(&[Arg::Basis(k), Arg::Basis(l), Arg::Vector(t(i, j, mm))]));
            sub_into(&mut d, &th_a2[l][mm].mul_vec(om.value(&[i, j, k])));
            crate::linalg::add_into(&mut d, &th_a2[k][mm].mul_vec(om.value(&[i, j, l])));
            sub_into(&mut d, &d_a2[k][l].mul_vec(om.value(&[i, j, mm])));
            d
        }),
    ]
}

fn check_pair_shape(r: &Representation, p: &CocyclePair) -> Result<()> {
    let (n, m) = (r.dim(), r.vdim);
    if p.nu.arity() != 2 || p.omega.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: if p.nu.arity() != 2 { 2 } else { 3 },
            found: if p.nu.arity() != 2 {
                p.nu.arity()
            } else {
                p.omega.arity()
            },
        });
    }
    for h in [&p.nu, &p.omega] {
        if h.dim_in() != n || h.dim_out() != m {
            return Err(Error::DimensionMismatch(format!(
                "pair maps must go from dimension {n} to dimension {m}"
            )));
        }
    }
    Ok(())
}

pub fn check_cocycle23(r: &Representation, p: &CocyclePair) -> Result<Report<Rational>> {
    check_pair_shape(r, p)?;
    Ok(report::run(&cocycle_conditions(r, p)))
}

pub fn cocycle_table(r: &Representation, p: &CocyclePair) -> Result<DefectTable<Rational>> {
    check_pair_shape(r, p)?;
    Ok(report::table(&cocycle_conditions(r, p)))
}

fn check_map_shape(r: &Representation, f: &Matrix) -> Result<()> {
    if f.rows() != r.vdim || f.cols() != r.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            r.vdim,
            r.dim()
        )));
    }
    Ok(())
}

/// The pair `(ν, ω)` cobounded by `f: T → V`, without checking `f∘α = β∘f`.
pub fn coboundary_unchecked(r: &Representation, f: &Matrix) -> CocyclePair {
    let a = &r.algebra;
    let (n, m) = (a.dim, r.vdim);
    let fe: Vec<Vec<Rational>> = (0..n).map(|j| f.column(j)).collect();
    let nu = Cochain::from_fn(2, n, m, |x| {
        let (i, j) = (x[0], x[1]);
        let mut v = r.rho[i].mul_vec(&fe[j]);
        sub_into(&mut v, &r.rho[j].mul_vec(&fe[i]));
        sub_into(&mut v, &f.mul_vec(a.binary.value(&[i, j])));
        v
    });
    let omega = Cochain::from_fn(3, n, m, |x| {
        let (i, j, k) = (x[0], x[1], x[2]);
        let mut v = r.theta[j][k].mul_vec(&fe[i]);
        sub_into(&mut v, &r.theta[i][k].mul_vec(&fe[j]));
        crate::linalg::add_into(&mut v, &r.d[i][j].mul_vec(&fe[k]));
        sub_into(&mut v, &f.mul_vec(a.ternary.value(&[i, j, k])));
        v
    });
    CocyclePair { nu, omega }
}

pub fn coboundary_of(r: &Representation, f: &Matrix) -> Result<CocyclePair> {
    check_map_shape(r, f)?;
    if f * &r.algebra.alpha != &r.beta * f {
        return Err(Error::NotEquivariant);
    }
    Ok(coboundary_unchecked(r, f))
}

/// Both cochain spaces of the (2,3) level, with helpers to move between
/// pairs and coordinates in `C² ⊕ C³`.
pub struct Level23 {
    pub c1: CochainSpace,
    pub c2: CochainSpace,
    pub c3: CochainSpace,
}

impl Level23 {
    pub fn new(r: &Representation) -> Result<Self> {
        Ok(Level23 {
            c1: cochain_space(r, 1)?,
            c2: cochain_space(r, 2)?,
            c3: cochain_space(r, 3)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.c2.dim() + self.c3.dim()
    }

    pub fn coords(&self, p: &CocyclePair) -> Result<Vec<Rational>> {
        let mut v = self.c2.coords(&p.nu)?;
        v.extend(self.c3.coords(&p.omega)?);
        Ok(v)
    }

    pub fn pair(&self, c: &[Rational]) -> CocyclePair {
        let k = self.c2.dim();
        CocyclePair {
            nu: self.c2.combine(&c[..k]),
            omega: self.c3.combine(&c[k..]),
        }
    }

    /// Columns: coordinates of the coboundaries of the `C¹` basis.
    pub fn coboundary_matrix(&self, r: &Representation) -> Result<Matrix> {
        let cols: Result<Vec<Vec<Rational>>> = self
            .c1
            .basis
            .iter()
            .map(|f| self.coords(&coboundary_unchecked(r, &matrix_from_cochain(f))))
            .collect();
        Ok(Matrix::from_columns(self.dim(), &cols?))
    }

    /// Rows: CC1–CC4 defects on all tuples; columns: basis of `C² ⊕ C³`.
    pub fn cocycle_matrix(&self, r: &Representation) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|k| {
                let mut e = vec![Rational::zero(); self.dim()];
                e[k] = Rational::one();
                let p = self.pair(&e);
                let mut col = Vec::new();
                for c in cocycle_conditions(r, &p).iter().skip(4) {
                    for t in Tuples::new(c.range, c.arity) {
                        col.extend((c.defect)(&t));
                    }
                }
                col
            })
            .collect();
        let rows = cols.first().map_or(0, Vec::len);
        Matrix::from_columns(rows, &cols)
    }

    /// Kernel of [`Level23::cocycle_matrix`] in coordinates of `C² ⊕ C³`.
    pub fn cocycle_kernel(&self, r: &Representation) -> Vec<Vec<Rational>> {
        let zmat = self.cocycle_matrix(r);
        if zmat.rows() == 0 {
            return identity_columns(self.dim());
        }
        zmat.kernel_basis()
    }
}

/// Basis of the joint cocycle space `Z ⊂ C² × C³`.
pub fn cocycle_space(r: &Representation) -> Result<Vec<CocyclePair>> {
    let level = Level23::new(r)?;
    Ok(level
        .cocycle_kernel(r)
        .iter()
        .map(|c| level.pair(c))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cohomology23 {
    pub c2dim: usize,
    pub c3dim: usize,
    pub zdim: usize,
    pub bdim: usize,
    /// `dim π(Z) − dim π(B)` for the projection `π` onto `C²`.
    pub hdim2: usize,
    /// `dim(Z ∩ C³) − dim(B ∩ C³)`.
    pub hdim3: usize,
    pub hdim: usize,
    /// Cocycles whose classes form a basis of the cohomology group.
    pub representatives: Vec<CocyclePair>,
}

struct Classifier {
    level: Level23,
    bmat: Matrix,
    reps: Vec<Vec<Rational>>,
}

fn classifier(r: &Representation) -> Result<(Classifier, Cohomology23)> {
    let rep = check_representation(r);
    if !rep.passed() {
        return Err(Error::InvalidRepresentation(rep.failed_names().join(", ")));
    }
    let level = Level23::new(r)?;
    let total = level.dim();
    let k2 = level.c2.dim();
    let zbasis = level.cocycle_kernel(r);
    let bmat = level.coboundary_matrix(r)?;
    let bdim = bmat.rank();
    let zdim = zbasis.len();

    let proj2 = |cols: &[Vec<Rational>]| -> usize {
        let trunc: Vec<Vec<Rational>> = cols.iter().map(|c| c[..k2].to_vec()).collect();
        Matrix::from_columns(k2, &trunc).rank()
    };
    let bcols: Vec<Vec<Rational>> = (0..bmat.cols()).map(|j| bmat.column(j)).collect();
    let z2 = proj2(&zbasis);
    let b2 = proj2(&bcols);

    // Complement of B in Z: Z-basis vectors that are pivots after B.
    let mut all = bcols.clone();
    all.extend(zbasis.iter().cloned());
    let piv = Matrix::from_columns(total, &all).rref().pivots;
    let reps: Vec<Vec<Rational>> = piv
        .into_iter()
        .filter(|&c| c >= bcols.len())
        .map(|c| zbasis[c - bcols.len()].clone())
        .collect();
    let representatives = reps.iter().map(|c| level.pair(c)).collect();
    let info = Cohomology23 {
        c2dim: k2,
        c3dim: level.c3.dim(),
        zdim,
        bdim,
        hdim2: z2 - b2,
        hdim3: (zdim - z2) - (bdim - b2),
        hdim: zdim - bdim,
        representatives,
    };
    Ok((Classifier { level, bmat, reps }, info))
}

pub fn cohomology23(r: &Representation) -> Result<Cohomology23> {
    classifier(r).map(|(_, info)| info)
}

/// Coordinates of the class of the cocycle `p` in the basis of
/// [`Cohomology23::representatives`].
pub fn class_coordinates(r: &Representation, p: &CocyclePair) -> Result<Vec<Rational>> {
    let report = check_cocycle23(r, p)?;
    if !report.passed() {
        return Err(Error::NotCocycle(report.failed_names().join(", ")));
    }
    let (cl, _) = classifier(r)?;
    let target = cl.level.coords(p)?;
    let nb = cl.bmat.cols();
    let mut cols: Vec<Vec<Rational>> = (0..nb).map(|j| cl.bmat.column(j)).collect();
    cols.extend(cl.reps.iter().cloned());
    let sol = Matrix::from_columns(cl.level.dim(), &cols)
        .solve(&target)
        .ok_or_else(|| Error::NotCocycle("cocycle outside the computed cocycle space".into()))?;
    Ok(sol[nb..].to_vec())
}

/// A map `f` with `f∘α = β∘f` whose coboundary is `p`, if one exists.
pub fn decompose(r: &Representation, p: &CocyclePair) -> Result<Option<Matrix>> {
    let report = check_cocycle23(r, p)?;
    if !report.passed() {
        return Err(Error::NotCocycle(report.failed_names().join(", ")));
    }
    let level = Level23::new(r)?;
    let target = level.coords(p)?;
    let bmat = level.coboundary_matrix(r)?;
    Ok(bmat.solve(&target).map(|c| matrix_from_cochain(&level.c1.combine(&c))))
}

pub fn is_derivation(r: &Representation, f: &Matrix) -> Result<bool> {
    check_map_shape(r, f)?;
    if f * &r.algebra.alpha != &r.beta * f {
        return Ok(false);
    }
    Ok(coboundary_unchecked(r, f).is_zero())
}

/// Basis of the equivariant derivations `T → V`, as `m × n` matrices.
pub fn derivation_space(r: &Representation) -> Result<Vec<Matrix>> {
    let level = Level23::new(r)?;
    let bmat = level.coboundary_matrix(r)?;
    let kernel = if bmat.rows() == 0 {
        identity_columns(level.c1.dim())
    } else {
        bmat.kernel_basis()
    };
    Ok(kernel
        .iter()
        .map(|c| matrix_from_cochain(&level.c1.combine(c)))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyHigher {
    pub level: usize,
    pub cdims: [usize; 2],
    pub zdim: usize,
    pub bdim: usize,
    pub hdim: usize,
}

/// `H^{2n} × H^{2n+1}` for `n ≥ 2`, from `ker δ_n` and `im δ_{n-1}`.
pub fn cohomology_higher(r: &Representation, n_level: usize, max_size: u128) -> Result<CohomologyHigher> {
    if n_level < 2 {
        return Err(Error::InvalidLevel {
            min: 2,
            got: n_level,
        });
    }
    let size = raw_size(r.dim(), r.vdim, 2 * n_level + 3);
    if size > max_size {
        return Err(Error::SizeGuard {
            size,
            limit: max_size,
        });
    }
    let rep = check_representation(r);
    if !rep.passed() {
        return Err(Error::InvalidRepresentation(rep.failed_names().join(", ")));
    }
    let dn = delta_matrix(r, n_level)?;
    let dprev = delta_matrix(r, n_level - 1)?;
    let domain = dn.cols();
    let zdim = domain - dn.rank();
    let bdim = dprev.rank();
    Ok(CohomologyHigher {
        level: n_level,
        cdims: [
            cochain_space(r, 2 * n_level)?.dim(),
            cochain_space(r, 2 * n_level + 1)?.dim(),
        ],
        zdim,
        bdim,
        hdim: zdim.saturating_sub(bdim),
    })
}
