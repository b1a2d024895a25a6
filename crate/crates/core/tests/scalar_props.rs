use compshuffle::{Monomial, Poly, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -4i64..5), 0..4)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(a, b, c, k)| (Monomial::new(a, b, c), BigInt::from(k)))))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| Scalar::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn inverses(a in scalar()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn canonical_after_scaling(a in scalar(), k in 1i64..6) {
        let num = a.numer().scale(&BigInt::from(-k));
        let den = a.denom().scale(&BigInt::from(-k));
        prop_assert_eq!(Scalar::new(num, den).unwrap(), a);
    }
}

#[test]
fn spec_examples() {
    let q = Scalar::q();
    assert_eq!((Scalar::one() - q.clone()) + q.clone(), Scalar::one());
    assert_eq!(q.inv().unwrap() * q.pow(3), q.pow(2));
    let one_minus_q2 = Scalar::one() - q.pow(2);
    let ratio = one_minus_q2.checked_div(&(Scalar::one() - q.clone())).unwrap();
    assert_eq!(ratio, Scalar::one() + q.clone());
    assert_eq!(ratio.to_string(), "q + 1");
    assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
}
