//! Characteristic polynomials and rational roots, as needed to find
//! eigenvalues of small exact matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{lcm_denoms, Rational, Scalar};

/// Largest |y| scanned when looking for integer roots of the rescaled polynomial.
pub const ROOT_SCAN_LIMIT: i64 = 1 << 20;

/// det(xI − A) by Faddeev–LeVerrier; coefficients from x⁰ up to xⁿ.
pub fn char_poly(a: &[Vec<Scalar>], n: u32) -> Vec<Scalar> {
    let m = a.len();
    let mut coeffs = vec![Scalar::zero(n); m + 1];
    coeffs[m] = Scalar::one(n);
    let mut mk: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(n); m]; m];
    for k in 1..=m {
        // M_k = A M_{k-1} + c_{m-k+1} I
        let mut next = matmul(a, &mk, n);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[m - k + 1];
        }
        let am = matmul(a, &next, n);
        let mut tr = Scalar::zero(n);
        for (i, row) in am.iter().enumerate() {
            tr += &row[i];
        }
        coeffs[m - k] = -(&tr / &Scalar::from_int(n, k as i64));
        mk = next;
    }
    coeffs
}

fn matmul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], n: u32) -> Vec<Vec<Scalar>> {
    let m = a.len();
    let mut out = vec![vec![Scalar::zero(n); m]; m];
    for i in 0..m {
        for k in 0..m {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j].add_mul(&a[i][k], &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero(x.conductor());
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// The search for rational roots would exceed [`ROOT_SCAN_LIMIT`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBoundTooLarge;

/// All distinct rational roots of a monic polynomial over ℚ(ζ_N), ascending.
/// `abs_bound`, if given, is a known bound on the absolute value of every
/// root and tightens the scan. Roots in ℚ(ζ_N) \ ℚ are not reported.
pub fn rational_roots(p: &[Scalar], abs_bound: Option<&Rational>) -> Result<Vec<Rational>, RootBoundTooLarge> {
    let n = p.last().map_or(1, Scalar::conductor);
    let mut deg = p.len() - 1;
    while deg > 0 && p[deg].is_zero() {
        deg -= 1;
    }
    let p = &p[..=deg];
    let lead = p[deg].inv();
    let p: Vec<Scalar> = p.iter().map(|c| c * &lead).collect();
    let mut roots = Vec::new();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(Rational::ZERO);
    }
    let q = &p[zeros..];
    if q.len() <= 1 {
        return Ok(roots);
    }
    // rational roots must be roots of the ζ⁰-component, which is monic over ℚ
    let comp: Vec<Rational> = q.iter().map(|c| c.coeffs()[0].clone()).collect();
    let m = comp.len() - 1;
    let d = lcm_denoms(&comp);
    // y = d·x is a root of the monic integer polynomial Σ a_i d^{m-i} y^i
    let mut ints = Vec::with_capacity(m + 1);
    let mut dp = BigInt::one();
    for i in (0..=m).rev() {
        let c = &comp[i];
        ints.push(c.numer() * (&d / c.denom()) * &dp / &d);
        dp *= &d;
    }
    ints.reverse();
    // ints[i] = a_i · d^{m-i}; integral because a_i d is integral
    let cauchy = ints.iter().take(m).map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let mut bound = cauchy;
    if let Some(b) = abs_bound {
        let scaled = (b.numer() * &d).div_ceil(&b.denom());
        bound = bound.min(scaled.abs());
    }
    let b = bound.to_i64().filter(|&b| b <= ROOT_SCAN_LIMIT).ok_or(RootBoundTooLarge)?;
    let b0 = &ints[0];
    for y in -b..=b {
        if y == 0 || !(b0 % BigInt::from(y)).is_zero() {
            continue;
        }
        let yb = BigInt::from(y);
        let mut acc = BigInt::zero();
        for c in ints.iter().rev() {
            acc = acc * &yb + c;
        }
        if !acc.is_zero() {
            continue;
        }
        let x = Rational::from_bigints(yb, d.clone());
        if eval(q, &Scalar::from_rational(n, x.clone())).is_zero() {
            roots.push(x);
        }
    }
    roots.sort();
    Ok(roots)
}
