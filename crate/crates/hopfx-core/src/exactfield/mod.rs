//! Exact scalars in ℚ(ζ_N).
//!
//! A [`Scalar`] is a polynomial in ζ_N of degree below φ(N), reduced modulo the
//! N-th cyclotomic polynomial. For N ∈ {1, 2} the field is ℚ and the value is
//! kept as a single [`Rational`].

mod parse;
pub mod poly;
mod rational;

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

pub use parse::ParseError;
pub(crate) use rational::lcm_denoms;
pub use rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    DivisionByZero,
    ConductorMismatch { left: u32, right: u32 },
    Parse(ParseError),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => f.write_str("division by zero"),
            FieldError::ConductorMismatch { left, right } => {
                write!(f, "conductor mismatch: {left} vs {right}")
            }
            FieldError::Parse(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Q(Rational),
    Cyc(Box<[Rational]>),
}

/// Exact element of ℚ(ζ_N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    n: u32,
    repr: Repr,
}

pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out as usize
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = exact_div_monic(&num, &den);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Reduce an arbitrary polynomial in ζ_n into canonical coefficients.
fn reduce(n: u32, mut poly: Vec<Rational>) -> Vec<Rational> {
    let deg = euler_phi(n);
    // ζ^n = 1 first: keeps degrees below n cheaply
    if poly.len() > n as usize {
        let mut folded = vec![Rational::ZERO; n as usize];
        for (i, c) in poly.into_iter().enumerate() {
            if !c.is_zero() {
                let slot = &mut folded[i % n as usize];
                *slot = &*slot + &c;
            }
        }
        poly = folded;
    }
    if poly.len() > deg {
        let phi = cyclotomic_poly(n);
        for top in (deg..poly.len()).rev() {
            let c = core::mem::take(&mut poly[top]);
            if c.is_zero() {
                continue;
            }
            // subtract c·x^{top-deg}·Φ_n (Φ_n monic)
            for (j, &b) in phi.iter().enumerate().take(deg) {
                if b != 0 {
                    let idx = top - deg + j;
                    let t = &c * &Rational::from_int(b);
                    poly[idx] = &poly[idx] - &t;
                }
            }
        }
        poly.truncate(deg);
    }
    poly.resize(deg, Rational::ZERO);
    poly
}

impl Scalar {
    fn check_n(n: u32) {
        assert!(n >= 1, "conductor must be positive");
    }

    pub fn zero(n: u32) -> Self {
        Self::from_rational(n, Rational::ZERO)
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::ONE)
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, Rational::from_int(v))
    }

    pub fn from_frac(n: u32, p: i64, q: i64) -> Self {
        Self::from_rational(n, Rational::new(p, q))
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        Self::check_n(n);
        if euler_phi(n) == 1 {
            Scalar { n, repr: Repr::Q(r) }
        } else {
            let mut c = vec![Rational::ZERO; euler_phi(n)];
            c[0] = r;
            Scalar { n, repr: Repr::Cyc(c.into_boxed_slice()) }
        }
    }

    /// Build from an arbitrary-length coefficient list in powers of ζ_n.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        Self::check_n(n);
        if n == 2 {
            // ζ_2 = -1
            let mut acc = Rational::ZERO;
            for (i, c) in coeffs.iter().enumerate() {
                acc = if i % 2 == 0 { &acc + c } else { &acc - c };
            }
            return Scalar { n, repr: Repr::Q(acc) };
        }
        let red = reduce(n, coeffs);
        if n == 1 {
            Scalar { n, repr: Repr::Q(red.into_iter().next().unwrap_or_default()) }
        } else {
            Scalar { n, repr: Repr::Cyc(red.into_boxed_slice()) }
        }
    }

    /// ζ_n^k.
    pub fn zeta_pow(n: u32, k: u32) -> Self {
        let k = (k % n) as usize;
        let mut c = vec![Rational::ZERO; k + 1];
        c[k] = Rational::ONE;
        Self::from_coeffs(n, c)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Canonical coefficients, length φ(N).
    pub fn coeffs(&self) -> Vec<Rational> {
        match &self.repr {
            Repr::Q(r) => vec![r.clone()],
            Repr::Cyc(c) => c.to_vec(),
        }
    }

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match &self.repr {
            Repr::Q(r) => Some(r.clone()),
            Repr::Cyc(c) => c[1..].iter().all(Rational::is_zero).then(|| c[0].clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Q(r) => r.is_zero(),
            Repr::Cyc(c) => c.iter().all(Rational::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Q(r) => r.is_one(),
            Repr::Cyc(c) => c[0].is_one() && c[1..].iter().all(Rational::is_zero),
        }
    }

    fn same(&self, o: &Self) -> Result<(), FieldError> {
        if self.n == o.n {
            Ok(())
        } else {
            Err(FieldError::ConductorMismatch { left: self.n, right: o.n })
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, FieldError> {
        self.same(o)?;
        Ok(match (&self.repr, &o.repr) {
            (Repr::Q(a), Repr::Q(b)) => Scalar { n: self.n, repr: Repr::Q(a + b) },
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                Scalar { n: self.n, repr: Repr::Cyc(a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()) }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, FieldError> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, FieldError> {
        self.same(o)?;
        Ok(match (&self.repr, &o.repr) {
            (Repr::Q(a), Repr::Q(b)) => Scalar { n: self.n, repr: Repr::Q(a * b) },
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                let mut prod = vec![Rational::ZERO; a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] = &prod[i + j] + &(x * y);
                        }
                    }
                }
                Scalar { n: self.n, repr: Repr::Cyc(reduce(self.n, prod).into_boxed_slice()) }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_inv(&self) -> Result<Self, FieldError> {
        match &self.repr {
            Repr::Q(a) => a.recip().map(|r| Scalar { n: self.n, repr: Repr::Q(r) }).ok_or(FieldError::DivisionByZero),
            Repr::Cyc(c) => {
                if self.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                cyc_inverse(self.n, c).ok_or(FieldError::DivisionByZero)
            }
        }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, FieldError> {
        self.same(o)?;
        self.try_mul(&o.try_inv()?)
    }

    /// Panicking inverse, for callers that already excluded zero.
    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero scalar")
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self += a * b`, the inner loop of every contraction.
    #[inline]
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut self.repr, &a.repr, &b.repr) {
            (Repr::Q(s), Repr::Q(x), Repr::Q(y)) => {
                let t = x * y;
                *s = &*s + &t;
            }
            _ => {
                let t = a * b;
                *self += &t;
            }
        }
    }

    pub fn parse(text: &str, n: u32) -> Result<Self, FieldError> {
        parse::parse_scalar(text, n).map_err(FieldError::Parse)
    }
}

/// Inverse by solving the φ×φ multiplication system over ℚ.
fn cyc_inverse(n: u32, a: &[Rational]) -> Option<Scalar> {
    let deg = a.len();
    // column j = a·ζ^j
    let mut m: Vec<Vec<Rational>> = vec![vec![Rational::ZERO; deg + 1]; deg];
    for j in 0..deg {
        let mut p = vec![Rational::ZERO; j + deg];
        for (i, x) in a.iter().enumerate() {
            p[i + j] = x.clone();
        }
        let col = reduce(n, p);
        for (i, v) in col.into_iter().enumerate() {
            m[i][j] = v;
        }
    }
    m[0][deg] = Rational::ONE;
    // Gauss–Jordan on the augmented system
    for c in 0..deg {
        let p = (c..deg).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip()?;
        for v in m[c].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..deg {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                #[allow(clippy::needless_range_loop)]
                for k in c..=deg {
                    let t = &f * &m[c][k];
                    m[r][k] = &m[r][k] - &t;
                }
            }
        }
    }
    let x: Vec<Rational> = m.into_iter().map(|row| row[deg].clone()).collect();
    Some(Scalar { n, repr: Repr::Cyc(x.into_boxed_slice()) })
}

impl Ord for Scalar {
    /// Lexicographic on canonical coefficients (lowest power first); only a
    /// deterministic tie-break, not a field order.
    fn cmp(&self, o: &Self) -> Ordering {
        self.n.cmp(&o.n).then_with(|| self.coeffs().cmp(&o.coeffs()))
    }
}
impl PartialOrd for Scalar {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Q(r) => Repr::Q(-r),
            Repr::Cyc(c) => Repr::Cyc(c.iter().map(|x| -x).collect()),
        };
        Scalar { n: self.n, repr }
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $f:ident, $try:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            /// Panics on conductor mismatch (and on division by zero).
            fn $f(self, o: &Scalar) -> Scalar {
                match self.$try(o) {
                    Ok(v) => v,
                    Err(e) => panic!("{}", e),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
    };
}
scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        assert_eq!(self.n, o.n, "conductor mismatch");
        match (&mut self.repr, &o.repr) {
            (Repr::Q(a), Repr::Q(b)) => *a = &*a + b,
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    if !y.is_zero() {
                        *x = &*x + y;
                    }
                }
            }
            _ => unreachable!(),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self += &-o;
    }
}

/// Binary operation selector for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, FieldError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coeffs();
        let mut first = true;
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    f.write_str("z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
