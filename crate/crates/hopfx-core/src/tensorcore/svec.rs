//! Sorted sparse vectors and an accumulator for building them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exactfield::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SVec {
    pub(crate) e: Vec<(usize, Scalar)>,
}

impl SVec {
    pub fn new() -> Self {
        SVec { e: Vec::new() }
    }

    pub fn basis(i: usize, n: u32) -> Self {
        SVec { e: alloc::vec![(i, Scalar::one(n))] }
    }

    /// From (index, value) pairs in any order; duplicates are summed.
    pub fn from_pairs(n: u32, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Acc::new(n);
        for (i, v) in pairs {
            acc.add(i, &v);
        }
        acc.into_svec()
    }

    pub fn from_dense(xs: &[Scalar]) -> Self {
        SVec { e: xs.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect() }
    }

    pub fn to_dense(&self, dim: usize, n: u32) -> Vec<Scalar> {
        let mut out = alloc::vec![Scalar::zero(n); dim];
        for (i, v) in &self.e {
            out[*i] = v.clone();
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.e.iter().map(|(i, v)| (*i, v))
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.e.binary_search_by_key(&i, |(k, _)| *k).ok().map(|p| &self.e[p].1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.e.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SVec {
        if c.is_zero() {
            return SVec::new();
        }
        SVec { e: self.e.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> SVec {
        SVec { e: self.e.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    pub fn add(&self, o: &SVec) -> SVec {
        let mut out = Vec::with_capacity(self.e.len() + o.e.len());
        let (mut a, mut b) = (self.e.iter().peekable(), o.e.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.clone()));
                        b.next();
                    } else {
                        let s = x + y;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SVec { e: out }
    }

    pub fn sub(&self, o: &SVec) -> SVec {
        self.add(&o.neg())
    }

    /// Σ a_i b_i.
    pub fn dot(&self, o: &SVec, n: u32) -> Scalar {
        let mut s = Scalar::zero(n);
        let (mut a, mut b) = (self.e.iter().peekable(), o.e.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                s.add_mul(x, y);
                a.next();
                b.next();
            }
        }
        s
    }

    /// Pairing with a dense covector.
    pub fn pair(&self, f: &[Scalar], n: u32) -> Scalar {
        let mut s = Scalar::zero(n);
        for (i, v) in &self.e {
            s.add_mul(v, &f[*i]);
        }
        s
    }
}

/// Accumulator for sparse sums.
#[derive(Clone, Debug)]
pub struct Acc {
    n: u32,
    m: BTreeMap<usize, Scalar>,
}

impl Acc {
    pub fn new(n: u32) -> Self {
        Acc { n, m: BTreeMap::new() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn add(&mut self, i: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        match self.m.get_mut(&i) {
            Some(s) => *s += v,
            None => {
                self.m.insert(i, v.clone());
            }
        }
    }

    #[inline]
    pub fn add_mul(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        match self.m.get_mut(&i) {
            Some(s) => s.add_mul(a, b),
            None => {
                let p = a * b;
                if !p.is_zero() {
                    self.m.insert(i, p);
                }
            }
        }
    }

    pub fn add_svec(&mut self, v: &SVec, c: &Scalar) {
        for (i, x) in &v.e {
            self.add_mul(*i, x, c);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn into_svec(self) -> SVec {
        SVec { e: self.m.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub(crate) fn into_map(self) -> BTreeMap<usize, Scalar> {
        let mut m = self.m;
        m.retain(|_, v| !v.is_zero());
        m
    }
}
