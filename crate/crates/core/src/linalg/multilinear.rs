use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use super::{Coeff, Matrix, Rational};

/// A multilinear map `(K^n)^arity → K^m` stored by its values on basis
/// tuples. The value at `(i_1, …, i_k)` is the contiguous slice
/// `data[offset(i) .. offset(i) + m]`.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiLinear<S> {
    arity: usize,
    dim_in: usize,
    dim_out: usize,
    data: Vec<S>,
}

/// One argument of a multilinear evaluation.
#[derive(Clone, Copy, Debug)]
pub enum Arg<'a, S> {
    Basis(usize),
    Vector(&'a [S]),
}

/// All index tuples of a given length over `0..n`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Tuples {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Tuples {
    pub fn new(n: usize, len: usize) -> Self {
        let cur = if n == 0 && len > 0 {
            None
        } else {
            Some(vec![0; len])
        };
        Tuples { n, cur }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().unwrap();
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.cur = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.n {
                break;
            }
            cur[pos] = 0;
        }
        Some(out)
    }
}

impl<S: Coeff> MultiLinear<S> {
    pub fn zeros(arity: usize, dim_in: usize, dim_out: usize) -> Self {
        let len = dim_in.pow(arity as u32) * dim_out;
        MultiLinear {
            arity,
            dim_in,
            dim_out,
            data: vec![S::zero(); len],
        }
    }

    pub fn from_data(arity: usize, dim_in: usize, dim_out: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), dim_in.pow(arity as u32) * dim_out, "tensor data length");
        MultiLinear {
            arity,
            dim_in,
            dim_out,
            data,
        }
    }

    /// Tabulates `f` on every basis tuple.
    pub fn from_fn(
        arity: usize,
        dim_in: usize,
        dim_out: usize,
        mut f: impl FnMut(&[usize]) -> Vec<S>,
    ) -> Self {
        let mut out = MultiLinear::zeros(arity, dim_in, dim_out);
        for t in Tuples::new(dim_in, arity) {
            let v = f(&t);
            assert_eq!(v.len(), dim_out, "from_fn value length");
            out.value_mut(&t).clone_from_slice(&v);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    pub fn tuples(&self) -> Tuples {
        Tuples::new(self.dim_in, self.arity)
    }

    fn offset(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        let mut idx = 0;
        for &i in tuple {
            debug_assert!(i < self.dim_in);
            idx = idx * self.dim_in + i;
        }
        idx * self.dim_out
    }

    pub fn value(&self, tuple: &[usize]) -> &[S] {
        let o = self.offset(tuple);
        &self.data[o..o + self.dim_out]
    }

    pub fn value_mut(&mut self, tuple: &[usize]) -> &mut [S] {
        let o = self.offset(tuple);
        &mut self.data[o..o + self.dim_out]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero)
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.arity == other.arity && self.dim_in == other.dim_in && self.dim_out == other.dim_out
    }

    /// Evaluates on arbitrary arguments by multilinear expansion.
    pub fn eval(&self, args: &[Arg<'_, S>]) -> Vec<S> {
        assert_eq!(args.len(), self.arity, "eval arity");
        let mut support: Vec<Vec<(usize, Option<&S>)>> = Vec::with_capacity(args.len());
        for a in args {
            match a {
                Arg::Basis(i) => support.push(vec![(*i, None)]),
                Arg::Vector(v) => {
                    assert_eq!(v.len(), self.dim_in, "eval argument length");
                    let s: Vec<_> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i, Some(c)))
                        .collect();
                    if s.is_empty() {
                        return vec![S::zero(); self.dim_out];
                    }
                    support.push(s);
                }
            }
        }
        let mut out = vec![S::zero(); self.dim_out];
        let mut pick = vec![0usize; support.len()];
        let mut tuple = vec![0usize; support.len()];
        loop {
            let mut coeff: Option<S> = None;
            for (slot, &p) in pick.iter().enumerate() {
                let (i, c) = support[slot][p];
                tuple[slot] = i;
                if let Some(c) = c {
                    coeff = Some(match coeff {
                        None => c.clone(),
                        Some(acc) => acc.mul_ref(c),
                    });
                }
            }
            let val = self.value(&tuple);
            match coeff {
                None => {
                    for (o, x) in out.iter_mut().zip(val) {
                        *o += x;
                    }
                }
                Some(c) => {
                    for (o, x) in out.iter_mut().zip(val) {
                        if !x.is_zero() {
                            *o += &c.mul_ref(x);
                        }
                    }
                }
            }
            let mut slot = support.len();
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                pick[slot] += 1;
                if pick[slot] < support[slot].len() {
                    break;
                }
                pick[slot] = 0;
            }
        }
    }

    /// Evaluates on basis vectors with a single vector argument in `slot`.
    pub fn eval_one_vector(&self, basis: &[usize], slot: usize, v: &[S]) -> Vec<S> {
        let args: Vec<Arg<'_, S>> = (0..self.arity)
            .map(|s| if s == slot { Arg::Vector(v) } else { Arg::Basis(basis[s]) })
            .collect();
        self.eval(&args)
    }

    /// The map `(x_1, …, x_k) ↦ f(…, m·x_slot, …)`.
    pub fn precompose(&self, slot: usize, m: &Matrix) -> Self {
        assert!(slot < self.arity, "precompose slot");
        assert!(m.is_square() && m.rows() == self.dim_in, "precompose matrix shape");
        let mut out = MultiLinear::zeros(self.arity, self.dim_in, self.dim_out);
        let mut src = vec![0usize; self.arity];
        for t in self.tuples() {
            src.copy_from_slice(&t);
            let target = out.offset(&t);
            for r in 0..self.dim_in {
                let c = &m[(r, t[slot])];
                if c.is_zero() {
                    continue;
                }
                src[slot] = r;
                let o = self.offset(&src);
                for a in 0..self.dim_out {
                    let x = &self.data[o + a];
                    if !x.is_zero() {
                        out.data[target + a] += &x.scale(c);
                    }
                }
            }
        }
        out
    }

    /// Precomposes `m` in every slot except those listed in `skip`.
    pub fn precompose_except(&self, m: &Matrix, skip: &[usize]) -> Self {
        let mut out = self.clone();
        for slot in 0..self.arity {
            if !skip.contains(&slot) {
                out = out.precompose(slot, m);
            }
        }
        out
    }

    pub fn precompose_all(&self, m: &Matrix) -> Self {
        self.precompose_except(m, &[])
    }

    /// The map `x ↦ m · f(x)`.
    pub fn postcompose(&self, m: &Matrix) -> Self {
        assert_eq!(m.cols(), self.dim_out, "postcompose matrix shape");
        let mut out = MultiLinear::zeros(self.arity, self.dim_in, m.rows());
        for t in self.tuples() {
            let v = super::apply(m, self.value(&t));
            out.value_mut(&t).clone_from_slice(&v);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.same_shape(other), "tensor shape mismatch");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.same_shape(other), "tensor shape mismatch");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MultiLinear {
            arity: self.arity,
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            data: self.data.iter().map(|x| x.scale(c)).collect(),
        }
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> MultiLinear<T> {
        MultiLinear {
            arity: self.arity,
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Swaps two argument slots.
    pub fn swap_slots(&self, a: usize, b: usize) -> Self {
        let mut out = MultiLinear::zeros(self.arity, self.dim_in, self.dim_out);
        for t in self.tuples() {
            let mut s = t.clone();
            s.swap(a, b);
            out.value_mut(&s).clone_from_slice(self.value(&t));
        }
        out
    }
}

impl<S: Coeff + Serialize> MultiLinear<S> {
    /// Nested arrays of depth `arity + 1`, the innermost holding the value.
    pub fn to_nested(&self) -> Value {
        fn build<S: Coeff + Serialize>(t: &MultiLinear<S>, prefix: &mut Vec<usize>) -> Value {
            if prefix.len() == t.arity {
                return serde_json::to_value(t.value(prefix)).expect("serializable coefficient");
            }
            let items = (0..t.dim_in)
                .map(|i| {
                    prefix.push(i);
                    let v = build(t, prefix);
                    prefix.pop();
                    v
                })
                .collect();
            Value::Array(items)
        }
        build(self, &mut Vec::new())
    }
}

impl<S: Coeff + DeserializeOwned> MultiLinear<S> {
    /// Inverse of [`MultiLinear::to_nested`]. Errors name the offending path.
    pub fn from_nested(
        v: &Value,
        arity: usize,
        dim_in: usize,
        dim_out: usize,
    ) -> Result<Self, String> {
        fn walk<S: Coeff + DeserializeOwned>(
            v: &Value,
            depth: usize,
            arity: usize,
            dim_in: usize,
            dim_out: usize,
            path: &mut Vec<usize>,
            out: &mut Vec<S>,
        ) -> Result<(), String> {
            fn fmt_path(path: &[usize]) -> String {
                let p: Vec<String> = path.iter().map(ToString::to_string).collect();
                format!("[{}]", p.join("]["))
            }
            let arr = v
                .as_array()
                .ok_or_else(|| format!("expected array at {}", fmt_path(path)))?;
            if depth == arity {
                if arr.len() != dim_out {
                    return Err(format!(
                        "expected {} values at {}, found {}",
                        dim_out,
                        fmt_path(path),
                        arr.len()
                    ));
                }
                for (k, x) in arr.iter().enumerate() {
                    let c = S::deserialize(x).map_err(|e| {
                        let mut at = path.clone();
                        at.push(k);
                        format!("{} at {}", e, fmt_path(&at))
                    })?;
                    out.push(c);
                }
                return Ok(());
            }
            if arr.len() != dim_in {
                return Err(format!(
                    "expected {} entries at {}, found {}",
                    dim_in,
                    fmt_path(path),
                    arr.len()
                ));
            }
            for (i, x) in arr.iter().enumerate() {
                path.push(i);
                walk(x, depth + 1, arity, dim_in, dim_out, path, out)?;
                path.pop();
            }
            Ok(())
        }
        let mut data = Vec::with_capacity(dim_in.pow(arity as u32) * dim_out);
        walk(v, 0, arity, dim_in, dim_out, &mut Vec::new(), &mut data)?;
        Ok(MultiLinear::from_data(arity, dim_in, dim_out, data))
    }
}
