//! Naive evaluators written straight from the defining identities. They read
//! structure constants out of the library types but do all arithmetic on
//! plain vectors with explicit loops, so they can serve as oracles.
#![allow(dead_code)]

use hlya::algebra::HomLYAlgebra;
use hlya::linalg::{Matrix, MultiLinear, Rational};
use hlya::representation::Representation;

pub type Q = Rational;
pub type V = Vec<Q>;
/// Row-major square or rectangular matrix.
pub type Mat = Vec<Vec<Q>>;

pub fn zeros(n: usize) -> V {
    vec![Q::zero(); n]
}

pub fn unit(n: usize, i: usize) -> V {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

pub fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &V) -> V {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero(v: &V) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `Σ sign · term`.
pub fn signed_sum(len: usize, terms: &[(i64, V)]) -> V {
    let mut out = zeros(len);
    for (s, t) in terms {
        for (o, x) in out.iter_mut().zip(t) {
            if *s > 0 {
                *o += x;
            } else {
                *o -= x;
            }
        }
    }
    out
}

pub fn mat(m: &Matrix) -> Mat {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn mv(a: &Mat, x: &V) -> V {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

/// All `k`-tuples over `0..n`, last index fastest.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for i in 0..n {
                let mut s = t.clone();
                s.push(i);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

pub struct Alg {
    pub n: usize,
    pub alpha: Mat,
    pub b: Vec<Vec<V>>,
    pub t: Vec<Vec<Vec<V>>>,
}

impl Alg {
    pub fn of(a: &HomLYAlgebra) -> Self {
        let n = a.dim;
        Alg {
            n,
            alpha: mat(&a.alpha),
            b: (0..n)
                .map(|i| (0..n).map(|j| a.binary.value(&[i, j]).to_vec()).collect())
                .collect(),
            t: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| a.ternary.value(&[i, j, k]).to_vec()).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn e(&self, i: usize) -> V {
        unit(self.n, i)
    }

    pub fn al(&self, x: &V) -> V {
        mv(&self.alpha, x)
    }

    pub fn al2(&self, x: &V) -> V {
        self.al(&self.al(x))
    }

    pub fn br(&self, x: &V, y: &V) -> V {
        let mut out = zeros(self.n);
        for i in support(x) {
            for j in support(y) {
                let c = &x[i] * &y[j];
                out = add(&out, &scale(&c, &self.b[i][j]));
            }
        }
        out
    }

    pub fn tr(&self, x: &V, y: &V, z: &V) -> V {
        let mut out = zeros(self.n);
        for i in support(x) {
            for j in support(y) {
                let c = &x[i] * &y[j];
                for k in support(z) {
                    out = add(&out, &scale(&(&c * &z[k]), &self.t[i][j][k]));
                }
            }
        }
        out
    }
}

fn support(x: &V) -> Vec<usize> {
    (0..x.len()).filter(|&i| !x[i].is_zero()).collect()
}

pub const HLY: [(&str, usize); 8] = [
    ("HLY01", 2),
    ("HLY02", 3),
    ("HLY1", 2),
    ("HLY2", 3),
    ("HLY3", 3),
    ("HLY4", 4),
    ("HLY5", 4),
    ("HLY6", 5),
];

/// Left side minus right side of each axiom on basis vectors.
pub fn hly_defect(a: &Alg, name: &str, t: &[usize]) -> V {
    let x: Vec<V> = t.iter().map(|&i| a.e(i)).collect();
    let n = a.n;
    let cyc = |f: &dyn Fn(&V, &V, &V) -> V| {
        add(&add(&f(&x[0], &x[1], &x[2]), &f(&x[1], &x[2], &x[0])), &f(&x[2], &x[0], &x[1]))
    };
    match name {
        "HLY01" => sub(&a.al(&a.br(&x[0], &x[1])), &a.br(&a.al(&x[0]), &a.al(&x[1]))),
        "HLY02" => sub(
            &a.al(&a.tr(&x[0], &x[1], &x[2])),
            &a.tr(&a.al(&x[0]), &a.al(&x[1]), &a.al(&x[2])),
        ),
        "HLY1" => add(&a.br(&x[0], &x[1]), &a.br(&x[1], &x[0])),
        "HLY2" => add(&a.tr(&x[0], &x[1], &x[2]), &a.tr(&x[1], &x[0], &x[2])),
        "HLY3" => cyc(&|p, q, r| add(&a.br(&a.br(p, q), &a.al(r)), &a.tr(p, q, r))),
        "HLY3'" => cyc(&|p, q, r| a.br(&a.br(p, q), &a.al(r))),
        "HLY4" => {
            let w = a.al(&x[3]);
            cyc(&|p, q, r| a.tr(&a.br(p, q), &a.al(r), &w))
        }
        "HLY5" => signed_sum(
            n,
            &[
                (1, a.tr(&a.al(&x[0]), &a.al(&x[1]), &a.br(&x[2], &x[3]))),
                (-1, a.br(&a.tr(&x[0], &x[1], &x[2]), &a.al2(&x[3]))),
                (-1, a.br(&a.al2(&x[2]), &a.tr(&x[0], &x[1], &x[3]))),
            ],
        ),
        "HLY6" => {
            let (p, q) = (a.al2(&x[0]), a.al2(&x[1]));
            signed_sum(
                n,
                &[
                    (1, a.tr(&p, &q, &a.tr(&x[2], &x[3], &x[4]))),
                    (-1, a.tr(&a.tr(&x[0], &x[1], &x[2]), &a.al2(&x[3]), &a.al2(&x[4]))),
                    (-1, a.tr(&a.al2(&x[2]), &a.tr(&x[0], &x[1], &x[3]), &a.al2(&x[4]))),
                    (-1, a.tr(&a.al2(&x[2]), &a.al2(&x[3]), &a.tr(&x[0], &x[1], &x[4]))),
                ],
            )
        }
        _ => panic!("unknown axiom {name}"),
    }
}

/// For each axiom, the first failing tuple and its defect.
pub fn hly_first_failures(a: &Alg) -> Vec<(&'static str, Option<(Vec<usize>, V)>)> {
    HLY.iter()
        .map(|&(name, arity)| {
            let hit = tuples(a.n, arity).into_iter().find_map(|t| {
                let d = hly_defect(a, name, &t);
                (!is_zero(&d)).then_some((t, d))
            });
            (name, hit)
        })
        .collect()
}

pub const LY: [(&str, usize); 6] = [("LY1", 2), ("LY2", 3), ("LY3", 3), ("LY4", 4), ("LY5", 4), ("LY6", 5)];

/// The classical identities with no twist anywhere.
pub fn ly_defect(a: &Alg, name: &str, t: &[usize]) -> V {
    let x: Vec<V> = t.iter().map(|&i| a.e(i)).collect();
    let n = a.n;
    let (b, tr) = (|p: &V, q: &V| a.br(p, q), |p: &V, q: &V, r: &V| a.tr(p, q, r));
    match name {
        "LY1" => add(&b(&x[0], &x[1]), &b(&x[1], &x[0])),
        "LY2" => add(&tr(&x[0], &x[1], &x[2]), &tr(&x[1], &x[0], &x[2])),
        "LY3" => {
            let mut out = zeros(n);
            for [i, j, k] in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
                out = add(&out, &b(&b(&x[i], &x[j]), &x[k]));
                out = add(&out, &tr(&x[i], &x[j], &x[k]));
            }
            out
        }
        "LY4" => {
            let mut out = zeros(n);
            for [i, j, k] in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
                out = add(&out, &tr(&b(&x[i], &x[j]), &x[k], &x[3]));
            }
            out
        }
        "LY5" => signed_sum(
            n,
            &[
                (1, tr(&x[0], &x[1], &b(&x[2], &x[3]))),
                (-1, b(&tr(&x[0], &x[1], &x[2]), &x[3])),
                (-1, b(&x[2], &tr(&x[0], &x[1], &x[3]))),
            ],
        ),
        "LY6" => signed_sum(
            n,
            &[
                (1, tr(&x[0], &x[1], &tr(&x[2], &x[3], &x[4]))),
                (-1, tr(&tr(&x[0], &x[1], &x[2]), &x[3], &x[4])),
                (-1, tr(&x[2], &tr(&x[0], &x[1], &x[3]), &x[4])),
                (-1, tr(&x[2], &x[3], &tr(&x[0], &x[1], &x[4]))),
            ],
        ),
        _ => panic!("unknown identity {name}"),
    }
}

pub struct Rep {
    pub alg: Alg,
    pub m: usize,
    pub beta: Mat,
    pub rho: Vec<Mat>,
    pub d: Vec<Vec<Mat>>,
    pub theta: Vec<Vec<Mat>>,
}

impl Rep {
    pub fn of(r: &Representation) -> Self {
        Rep {
            alg: Alg::of(&r.algebra),
            m: r.vdim,
            beta: mat(&r.beta),
            rho: r.rho.iter().map(mat).collect(),
            d: r.d.iter().map(|row| row.iter().map(mat).collect()).collect(),
            theta: r.theta.iter().map(|row| row.iter().map(mat).collect()).collect(),
        }
    }

    pub fn be(&self, u: &V) -> V {
        mv(&self.beta, u)
    }

    pub fn rho(&self, x: &V, u: &V) -> V {
        let mut out = zeros(self.m);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = add(&out, &scale(c, &mv(&self.rho[i], u)));
            }
        }
        out
    }

    fn pair(&self, g: &[Vec<Mat>], x: &V, y: &V, u: &V) -> V {
        let mut out = zeros(self.m);
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                let c = a * b;
                if !c.is_zero() {
                    out = add(&out, &scale(&c, &mv(&g[i][j], u)));
                }
            }
        }
        out
    }

    pub fn d(&self, x: &V, y: &V, u: &V) -> V {
        self.pair(&self.d, x, y, u)
    }

    pub fn th(&self, x: &V, y: &V, u: &V) -> V {
        self.pair(&self.theta, x, y, u)
    }
}

/// The matrix of a linear operator on `V`, flattened row-major.
pub fn operator(m: usize, f: impl Fn(&V) -> V) -> V {
    let cols: Vec<V> = (0..m).map(|c| f(&unit(m, c))).collect();
    let mut out = Vec::with_capacity(m * m);
    for r in 0..m {
        for col in &cols {
            out.push(col[r].clone());
        }
    }
    out
}

/// Classical module identities (`α = β = id`) and the library condition each
/// one specializes.
pub const R: [(&str, &str, usize); 7] = [
    ("R1", "HR31", 2),
    ("R0", "HR41", 3),
    ("R2", "HR52", 3),
    ("R3", "HR42", 3),
    ("R4", "HR51", 3),
    ("R5", "HR61", 4),
    ("R6", "HR62", 4),
];

pub fn r_defect(r: &Rep, name: &str, t: &[usize]) -> V {
    let a = &r.alg;
    let x: Vec<V> = t.iter().map(|&i| a.e(i)).collect();
    let m = r.m;
    operator(m, |u| match name {
        "R1" => signed_sum(
            m,
            &[
                (1, r.d(&x[0], &x[1], u)),
                (-1, r.th(&x[1], &x[0], u)),
                (1, r.th(&x[0], &x[1], u)),
                (1, r.rho(&a.br(&x[0], &x[1]), u)),
                (-1, r.rho(&x[0], &r.rho(&x[1], u))),
                (1, r.rho(&x[1], &r.rho(&x[0], u))),
            ],
        ),
        "R0" => signed_sum(
            m,
            &[
                (1, r.d(&a.br(&x[0], &x[1]), &x[2], u)),
                (1, r.d(&a.br(&x[1], &x[2]), &x[0], u)),
                (1, r.d(&a.br(&x[2], &x[0]), &x[1], u)),
            ],
        ),
        "R2" => signed_sum(
            m,
            &[
                (1, r.th(&x[0], &a.br(&x[1], &x[2]), u)),
                (-1, r.rho(&x[1], &r.th(&x[0], &x[2], u))),
                (1, r.rho(&x[2], &r.th(&x[0], &x[1], u))),
            ],
        ),
        "R3" => signed_sum(
            m,
            &[
                (1, r.th(&a.br(&x[0], &x[1]), &x[2], u)),
                (-1, r.th(&x[0], &x[2], &r.rho(&x[1], u))),
                (1, r.th(&x[1], &x[2], &r.rho(&x[0], u))),
            ],
        ),
        "R4" => signed_sum(
            m,
            &[
                (1, r.d(&x[0], &x[1], &r.rho(&x[2], u))),
                (-1, r.rho(&x[2], &r.d(&x[0], &x[1], u))),
                (-1, r.rho(&a.tr(&x[0], &x[1], &x[2]), u)),
            ],
        ),
        "R5" => signed_sum(
            m,
            &[
                (1, r.d(&x[0], &x[1], &r.th(&x[2], &x[3], u))),
                (-1, r.th(&x[2], &x[3], &r.d(&x[0], &x[1], u))),
                (-1, r.th(&a.tr(&x[0], &x[1], &x[2]), &x[3], u)),
                (-1, r.th(&x[2], &a.tr(&x[0], &x[1], &x[3]), u)),
            ],
        ),
        "R6" => signed_sum(
            m,
            &[
                (1, r.th(&x[0], &a.tr(&x[1], &x[2], &x[3]), u)),
                (-1, r.th(&x[2], &x[3], &r.th(&x[0], &x[1], u))),
                (1, r.th(&x[1], &x[3], &r.th(&x[0], &x[2], u))),
                (-1, r.d(&x[1], &x[2], &r.th(&x[0], &x[3], u))),
            ],
        ),
        _ => panic!("unknown identity {name}"),
    })
}

/// A raw multilinear map `T^k → V` given by its values on basis tuples.
pub struct Raw {
    pub arity: usize,
    pub n: usize,
    pub m: usize,
    pub vals: Vec<V>,
}

impl Raw {
    pub fn zero(arity: usize, n: usize, m: usize) -> Self {
        Raw {
            arity,
            n,
            m,
            vals: vec![zeros(m); n.pow(arity as u32)],
        }
    }

    pub fn of(f: &MultiLinear<Q>) -> Self {
        let (k, n, m) = (f.arity(), f.dim_in(), f.dim_out());
        Raw {
            arity: k,
            n,
            m,
            vals: tuples(n, k).iter().map(|t| f.value(t).to_vec()).collect(),
        }
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    pub fn at(&self, t: &[usize]) -> &V {
        &self.vals[self.index(t)]
    }

    /// Full multilinear expansion on arbitrary vectors, skipping zero
    /// coordinates.
    pub fn eval(&self, xs: &[V]) -> V {
        let support: Vec<Vec<usize>> = xs
            .iter()
            .map(|x| (0..self.n).filter(|&i| !x[i].is_zero()).collect())
            .collect();
        let mut out = zeros(self.m);
        let mut t = vec![0; self.arity];
        self.expand(xs, &support, 0, Q::one(), &mut t, &mut out);
        out
    }

    fn expand(&self, xs: &[V], support: &[Vec<usize>], slot: usize, c: Q, t: &mut Vec<usize>, out: &mut V) {
        if slot == self.arity {
            *out = add(out, &scale(&c, self.at(t)));
            return;
        }
        for &i in &support[slot] {
            t[slot] = i;
            self.expand(xs, support, slot + 1, &c * &xs[slot][i], t, out);
        }
    }
}

pub const CC: [(&str, usize); 8] = [
    ("SKEW2", 2),
    ("SKEW3", 3),
    ("CC01", 2),
    ("CC02", 3),
    ("CC1", 3),
    ("CC2", 4),
    ("CC3", 4),
    ("CC4", 5),
];

pub fn cc_defect(r: &Rep, nu: &Raw, om: &Raw, name: &str, t: &[usize]) -> V {
    let a = &r.alg;
    let m = r.m;
    let x: Vec<V> = t.iter().map(|&i| a.e(i)).collect();
    let nu = |p: &V, q: &V| nu.eval(&[p.clone(), q.clone()]);
    let om = |p: &V, q: &V, s: &V| om.eval(&[p.clone(), q.clone(), s.clone()]);
    let (al, al2) = (|v: &V| a.al(v), |v: &V| a.al2(v));
    match name {
        "SKEW2" => add(&nu(&x[0], &x[1]), &nu(&x[1], &x[0])),
        "SKEW3" => add(&om(&x[0], &x[1], &x[2]), &om(&x[1], &x[0], &x[2])),
        "CC01" => sub(&nu(&al(&x[0]), &al(&x[1])), &r.be(&nu(&x[0], &x[1]))),
        "CC02" => sub(
            &om(&al(&x[0]), &al(&x[1]), &al(&x[2])),
            &r.be(&om(&x[0], &x[1], &x[2])),
        ),
        "CC1" => {
            let mut out = zeros(m);
            for [i, j, k] in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
                out = add(&out, &om(&x[i], &x[j], &x[k]));
                out = sub(&out, &r.rho(&al(&x[i]), &nu(&x[j], &x[k])));
                out = add(&out, &nu(&a.br(&x[i], &x[j]), &al(&x[k])));
            }
            out
        }
        "CC2" => {
            let mut out = zeros(m);
            let y = al(&x[3]);
            for [i, j, k] in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
                out = add(&out, &r.th(&al(&x[i]), &y, &nu(&x[j], &x[k])));
                out = add(&out, &om(&a.br(&x[i], &x[j]), &al(&x[k]), &y));
            }
            out
        }
        "CC3" => {
            let (x1, x2, y1, y2) = (&x[0], &x[1], &x[2], &x[3]);
            signed_sum(
                m,
                &[
                    (1, om(&al(x1), &al(x2), &a.br(y1, y2))),
                    (1, r.d(&al(x1), &al(x2), &nu(y1, y2))),
                    (-1, nu(&a.tr(x1, x2, y1), &al2(y2))),
                    (-1, nu(&al2(y1), &a.tr(x1, x2, y2))),
                    (-1, r.rho(&al2(y1), &om(x1, x2, y2))),
                    (1, r.rho(&al2(y2), &om(x1, x2, y1))),
                ],
            )
        }
        "CC4" => {
            let (x1, x2, y1, y2, y3) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
            signed_sum(
                m,
                &[
                    (1, om(&al2(x1), &al2(x2), &a.tr(y1, y2, y3))),
                    (1, r.d(&al2(x1), &al2(x2), &om(y1, y2, y3))),
                    (-1, om(&a.tr(x1, x2, y1), &al2(y2), &al2(y3))),
                    (-1, om(&al2(y1), &a.tr(x1, x2, y2), &al2(y3))),
                    (-1, om(&al2(y1), &al2(y2), &a.tr(x1, x2, y3))),
                    (-1, r.th(&al2(y2), &al2(y3), &om(x1, x2, y1))),
                    (1, r.th(&al2(y1), &al2(y3), &om(x1, x2, y2))),
                    (-1, r.d(&al2(y1), &al2(y2), &om(x1, x2, y3))),
                ],
            )
        }
        _ => panic!("unknown condition {name}"),
    }
}

/// `(ν, ω)` cobounded by `f`, given as its images of the basis.
pub fn coboundary(r: &Rep, f: &[V]) -> (Raw, Raw) {
    let a = &r.alg;
    let (n, m) = (a.n, r.m);
    let fv = |x: &V| {
        let mut out = zeros(m);
        for (i, c) in x.iter().enumerate() {
            out = add(&out, &scale(c, &f[i]));
        }
        out
    };
    let mut nu = Raw::zero(2, n, m);
    for t in tuples(n, 2) {
        let (x, y) = (a.e(t[0]), a.e(t[1]));
        let v = signed_sum(m, &[(1, r.rho(&x, &fv(&y))), (-1, r.rho(&y, &fv(&x))), (-1, fv(&a.br(&x, &y)))]);
        let idx = nu.index(&t);
        nu.vals[idx] = v;
    }
    let mut om = Raw::zero(3, n, m);
    for t in tuples(n, 3) {
        let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
        let v = signed_sum(
            m,
            &[
                (1, r.th(&y, &z, &fv(&x))),
                (-1, r.th(&x, &z, &fv(&y))),
                (1, r.d(&x, &y, &fv(&z))),
                (-1, fv(&a.tr(&x, &y, &z))),
            ],
        );
        let idx = om.index(&t);
        om.vals[idx] = v;
    }
    (nu, om)
}

/// Yamaguti's coboundary at level `n` with every twist the identity.
pub fn classical_delta(r: &Rep, level: usize, f: &Raw, g: &Raw) -> (Raw, Raw) {
    let a = &r.alg;
    let (dim, m) = (a.n, r.m);
    let two_n = 2 * level;
    let sgn = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    let basis: Vec<V> = (0..dim).map(|i| a.e(i)).collect();

    let mut d1 = Raw::zero(two_n + 2, dim, m);
    for t in tuples(dim, two_n + 2) {
        let x: Vec<V> = t.iter().map(|&i| basis[i].clone()).collect();
        let mut terms = Vec::new();
        let mut head: Vec<V> = x[..two_n].to_vec();
        head.push(x[two_n + 1].clone());
        terms.push((1, r.rho(&x[two_n], &g.eval(&head))));
        terms.push((-1, r.rho(&x[two_n + 1], &g.eval(&x[..two_n + 1]))));
        let mut last: Vec<V> = x[..two_n].to_vec();
        last.push(a.br(&x[two_n], &x[two_n + 1]));
        terms.push((-1, g.eval(&last)));
        for k in 1..=level {
            let rest = drop_pair(&x, 2 * k - 2);
            terms.push((sgn(level + k + 1), r.d(&x[2 * k - 2], &x[2 * k - 1], &f.eval(&rest))));
            for j in (2 * k)..(two_n + 2) {
                terms.push((sgn(level + k), f.eval(&with_bracket(a, &x, 2 * k - 2, j))));
            }
        }
        let idx = d1.index(&t);
        d1.vals[idx] = signed_sum(m, &terms);
    }

    let mut d2 = Raw::zero(two_n + 3, dim, m);
    for t in tuples(dim, two_n + 3) {
        let x: Vec<V> = t.iter().map(|&i| basis[i].clone()).collect();
        let mut terms = Vec::new();
        terms.push((1, r.th(&x[two_n + 1], &x[two_n + 2], &g.eval(&x[..two_n + 1]))));
        let mut head: Vec<V> = x[..two_n].to_vec();
        head.push(x[two_n + 1].clone());
        terms.push((-1, r.th(&x[two_n], &x[two_n + 2], &g.eval(&head))));
        for k in 1..=level + 1 {
            let rest = drop_pair(&x, 2 * k - 2);
            terms.push((sgn(level + k + 1), r.d(&x[2 * k - 2], &x[2 * k - 1], &g.eval(&rest))));
            for j in (2 * k)..(two_n + 3) {
                terms.push((sgn(level + k), g.eval(&with_bracket(a, &x, 2 * k - 2, j))));
            }
        }
        let idx = d2.index(&t);
        d2.vals[idx] = signed_sum(m, &terms);
    }
    (d1, d2)
}

fn drop_pair(x: &[V], p: usize) -> Vec<V> {
    x.iter()
        .enumerate()
        .filter(|&(i, _)| i != p && i != p + 1)
        .map(|(_, v)| v.clone())
        .collect()
}

/// Drops `x_p, x_{p+1}` and replaces `x_j` by `[x_p, x_{p+1}, x_j]`.
fn with_bracket(a: &Alg, x: &[V], p: usize, j: usize) -> Vec<V> {
    let br = a.tr(&x[p], &x[p + 1], &x[j]);
    x.iter()
        .enumerate()
        .filter(|&(i, _)| i != p && i != p + 1)
        .map(|(i, v)| if i == j { br.clone() } else { v.clone() })
        .collect()
}

/// Rank by plain fraction-valued Gaussian elimination.
pub fn rank(rows: &[V]) -> usize {
    let mut rows: Vec<V> = rows.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                let sub_row = scale(&f, &rows[rank]);
                rows[i] = sub(&rows[i], &sub_row);
            }
        }
        rank += 1;
    }
    rank
}

/// Dimensions of `C², C³, Z, B` for the (2,3) level, found by enumerating
/// every linear constraint on raw coordinates `(ν, ω) ∈ V^{n²} × V^{n³}`.
pub struct LevelDims {
    pub c2: usize,
    pub c3: usize,
    pub z: usize,
    pub b: usize,
}

pub fn level_dims_by_enumeration(r: &Rep) -> LevelDims {
    let (n, m) = (r.alg.n, r.m);
    let n2 = n * n * m;
    let n3 = n * n * n * m;
    let unknowns = n2 + n3;
    // Column `c` of the constraint system is the defect vector of the `c`-th
    // raw unit pair; rows are (condition, tuple, component).
    let unit_pair = |c: usize| {
        let mut nu = Raw::zero(2, n, m);
        let mut om = Raw::zero(3, n, m);
        if c < n2 {
            nu.vals[c / m][c % m] = Q::one();
        } else {
            let c = c - n2;
            om.vals[c / m][c % m] = Q::one();
        }
        (nu, om)
    };
    let columns_for = |names: &[&str]| -> Vec<V> {
        (0..unknowns)
            .map(|c| {
                let (nu, om) = unit_pair(c);
                let mut col = Vec::new();
                for &(name, arity) in CC.iter().filter(|(nm, _)| names.contains(nm)) {
                    for t in tuples(n, arity) {
                        col.extend(cc_defect(r, &nu, &om, name, &t));
                    }
                }
                col
            })
            .collect()
    };
    let transpose = |cols: &[V]| -> Vec<V> {
        let len = cols.first().map_or(0, |c| c.len());
        (0..len).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    };
    let restrict = |cols: Vec<V>, keep: std::ops::Range<usize>| -> Vec<V> {
        transpose(&cols).into_iter().map(|row| row[keep.clone()].to_vec()).collect()
    };
    let c2 = n2 - rank(&restrict(columns_for(&["SKEW2", "CC01"]), 0..n2));
    let c3 = n3 - rank(&restrict(columns_for(&["SKEW3", "CC02"]), n2..unknowns));
    let all: Vec<&str> = CC.iter().map(|(nm, _)| *nm).collect();
    let z = unknowns - rank(&transpose(&columns_for(&all)));

    // Equivariant f: T → V, then the span of their coboundaries.
    let fdim = n * m;
    let mut equiv_rows = Vec::new();
    let f_of = |c: usize| -> Vec<V> {
        let mut f = vec![zeros(m); n];
        f[c / m][c % m] = Q::one();
        f
    };
    for c in 0..fdim {
        let f = f_of(c);
        let fv = |x: &V| {
            let mut out = zeros(m);
            for (i, w) in x.iter().enumerate() {
                out = add(&out, &scale(w, &f[i]));
            }
            out
        };
        let mut col = Vec::new();
        for i in 0..n {
            let e = r.alg.e(i);
            col.extend(sub(&fv(&r.alg.al(&e)), &r.be(&fv(&e))));
        }
        equiv_rows.push(col);
    }
    let kernel = kernel_of_columns(&equiv_rows, fdim);
    let images: Vec<V> = kernel
        .iter()
        .map(|coeffs| {
            let mut f = vec![zeros(m); n];
            for (c, w) in coeffs.iter().enumerate() {
                f[c / m][c % m] = w.clone();
            }
            let (nu, om) = coboundary(r, &f);
            nu.vals.into_iter().chain(om.vals).flatten().collect()
        })
        .collect();
    let b = if images.is_empty() { 0 } else { rank(&images) };
    LevelDims { c2, c3, z, b }
}

/// Kernel of the linear map whose `c`-th column is `cols[c]`.
fn kernel_of_columns(cols: &[V], unknowns: usize) -> Vec<V> {
    let len = cols.first().map_or(0, |c| c.len());
    let mut rows: Vec<V> = (0..len).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..unknowns {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        rows[rank] = scale(&inv, &rows[rank]);
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let s = scale(&f, &rows[rank]);
                rows[i] = sub(&rows[i], &s);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (0..unknowns)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = zeros(unknowns);
            v[free] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[row][free];
            }
            v
        })
        .collect()
}
