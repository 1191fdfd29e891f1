//! Exact scalars, λ-polynomials, dense matrices and small multilinear maps.

mod matrix;
mod multilinear;
mod poly;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, SubAssign};

pub use matrix::{dot, is_zero_vec, Matrix, Rref};
pub use multilinear::{Arg, MultiLinear, Tuples};
pub use poly::Poly;
pub use rational::{q, ParseRationalError, Rational};

/// Coefficient ring for structure constants: ℚ itself or ℚ[λ].
pub trait Coeff:
    'static + Clone + PartialEq + Debug + Display + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        Poly::constant(r)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        Poly::scale(self, r)
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit<S: Coeff>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::from_rational(Rational::one());
    v
}

/// `m · v` for a rational matrix acting on a vector over any coefficient ring.
pub fn apply<S: Coeff>(m: &Matrix, v: &[S]) -> Vec<S> {
    assert_eq!(m.cols(), v.len(), "apply dimension");
    (0..m.rows())
        .map(|i| {
            let mut acc = S::zero();
            for (a, x) in m.row(i).iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    acc += &x.scale(a);
                }
            }
            acc
        })
        .collect()
}

pub fn add_into<S: Coeff>(acc: &mut [S], v: &[S]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += x;
    }
}

pub fn sub_into<S: Coeff>(acc: &mut [S], v: &[S]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a -= x;
    }
}

/// `acc += c · v`
pub fn axpy<S: Coeff>(acc: &mut [S], c: &S, v: &[S]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &c.mul_ref(x);
        }
    }
}

pub fn vec_is_zero<S: Coeff>(v: &[S]) -> bool {
    v.iter().all(Coeff::is_zero)
}

pub fn lift<S: Coeff>(v: &[Rational]) -> Vec<S> {
    v.iter().cloned().map(S::from_rational).collect()
}
