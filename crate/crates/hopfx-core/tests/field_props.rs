use hopfx_core::exactfield::{Rational, Scalar};
use proptest::prelude::*;

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| Rational::new(p, q))
}

/// A scalar in ℚ(ζ_n) from an unreduced polynomial of degree < n + 3, so
/// reduction modulo Φ_n is exercised.
fn scalar(n: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec(rational(), 1..(n as usize + 3)).prop_map(move |c| Scalar::from_coeffs(n, c))
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (scalar(n), scalar(n), scalar(n)))
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses((a, b, _c) in triple()) {
        prop_assume!(!a.is_zero());
        let ai = a.inv();
        prop_assert!((&a * &ai).is_one());
        prop_assert_eq!(&(&b / &a) * &a, b);
    }

    #[test]
    fn print_parse_round_trip((a, _b, _c) in triple()) {
        let text = a.to_string();
        prop_assert_eq!(Scalar::parse(&text, a.conductor()).unwrap(), a);
    }

    #[test]
    fn reduction_is_idempotent((a, _b, _c) in triple()) {
        let again = Scalar::from_coeffs(a.conductor(), a.coeffs());
        prop_assert_eq!(again.coeffs(), a.coeffs());
        prop_assert_eq!(a.coeffs().len(), hopfx_core::exactfield::euler_phi(a.conductor()));
    }

    #[test]
    fn zeta_has_order_n(k in 0u32..30, idx in 0usize..6) {
        let n = CONDUCTORS[idx];
        let z = Scalar::zeta_pow(n, 1);
        prop_assert!(z.pow(n).is_one());
        prop_assert_eq!(Scalar::zeta_pow(n, k), z.pow(k));
    }
}

#[test]
fn spec_examples() {
    assert_eq!(&Scalar::from_frac(1, 1, 2) + &Scalar::from_frac(1, 1, 3), Scalar::from_frac(1, 5, 6));
    let z4 = Scalar::zeta_pow(4, 1);
    assert_eq!(&z4 * &z4, Scalar::from_int(4, -1));
    let s = &(&Scalar::one(3) + &Scalar::zeta_pow(3, 1)) + &Scalar::zeta_pow(3, 2);
    assert!(s.is_zero());
    assert_eq!(Scalar::parse("3/2", 1).unwrap(), Scalar::from_frac(1, 3, 2));
    let want = &Scalar::zeta_pow(5, 2) - &Scalar::from_frac(5, 1, 3);
    assert_eq!(Scalar::parse("z^2-1/3", 5).unwrap(), want);
    assert!(Scalar::parse("z^4", 4).unwrap().is_one());
}

#[test]
fn errors_are_reported() {
    use hopfx_core::exactfield::{scalar_arith, ArithOp};
    let a = Scalar::one(3);
    assert!(scalar_arith(&a, &Scalar::one(4), ArithOp::Add).is_err());
    assert!(scalar_arith(&a, &Scalar::zero(3), ArithOp::Div).is_err());
    assert!(Scalar::parse("1/", 1).is_err());
    assert!(Scalar::parse("z^", 3).is_err());
}
