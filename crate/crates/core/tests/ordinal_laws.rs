use std::cmp::Ordering;

use euclid_core::ordinal::Ordinal;
use euclid_core::syntax::parse_ordinal;
use proptest::prelude::*;

/// `w^e * c` for a finite `e`.
fn finite_term(e: u64, c: u64) -> Ordinal {
    Ordinal::term(Ordinal::from(e), c)
}

/// Ordinals below `w^w`, built as a sum of terms in arbitrary order so that
/// absorption is exercised.
fn below_omega_omega() -> impl Strategy<Value = Ordinal> {
    prop::collection::vec((0u64..5, 0u64..6), 0..5).prop_map(|ts| {
        ts.into_iter()
            .fold(Ordinal::zero(), |acc, (e, c)| acc.add(&finite_term(e, c)))
    })
}

/// Ordinals with small ordinal exponents, reaching `w^(w^2)`.
fn nested() -> impl Strategy<Value = Ordinal> {
    prop::collection::vec((below_omega_omega(), 1u64..4), 0..4).prop_map(|ts| {
        ts.into_iter()
            .fold(Ordinal::zero(), |acc, (e, c)| acc.add(&Ordinal::term(e, c)))
    })
}

fn nonzero() -> impl Strategy<Value = Ordinal> {
    below_omega_omega().prop_filter("nonzero", |a| !a.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn add_is_associative(a in nested(), b in nested(), c in nested()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn zero_is_neutral(a in nested()) {
        prop_assert_eq!(a.add(&Ordinal::zero()), a.clone());
        prop_assert_eq!(Ordinal::zero().add(&a), a.clone());
        prop_assert_eq!(a.natural_sum(&Ordinal::zero()), a);
    }

    #[test]
    fn left_subtraction_round_trip(a in nested(), b in nested()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let g = lo.left_subtract(&hi).unwrap();
        prop_assert_eq!(lo.add(&g), hi);
    }

    #[test]
    fn left_subtraction_rejects_larger(a in nested(), b in nested()) {
        prop_assume!(a > b);
        prop_assert!(a.left_subtract(&b).is_err());
    }

    #[test]
    fn natural_sum_commutes(a in nested(), b in nested()) {
        prop_assert_eq!(a.natural_sum(&b), b.natural_sum(&a));
    }

    #[test]
    fn natural_sum_associates(a in nested(), b in nested(), c in nested()) {
        prop_assert_eq!(a.natural_sum(&b).natural_sum(&c), a.natural_sum(&b.natural_sum(&c)));
    }

    #[test]
    fn natural_sum_cancels(a in below_omega_omega(), b in below_omega_omega(), c in below_omega_omega()) {
        if a.natural_sum(&c) == b.natural_sum(&c) {
            prop_assert_eq!(a, b);
        } else {
            prop_assert_ne!(a, b);
        }
    }

    #[test]
    fn natural_sum_strictly_monotone(a in nested(), b in nested(), c in nested()) {
        prop_assume!(a < b);
        prop_assert!(a.natural_sum(&c) < b.natural_sum(&c));
    }

    #[test]
    fn hessenberg_lower_bound(a in below_omega_omega(), b in below_omega_omega()) {
        let lo = std::cmp::max(a.add(&b), b.add(&a));
        prop_assert_ne!(lo.compare(&a.natural_sum(&b)), Ordering::Greater);
    }

    #[test]
    fn hessenberg_upper_bound(a in nonzero(), b in nonzero()) {
        let hi = a.mul(&b).add(&b.mul(&a));
        prop_assert_ne!(a.natural_sum(&b).compare(&hi), Ordering::Greater);
    }

    #[test]
    fn multiplication_distributes(a in below_omega_omega(), b in below_omega_omega(), c in below_omega_omega()) {
        // standard left distributivity a(b + c) = ab + ac
        prop_assert_eq!(a.std_mul(&b.add(&c)), a.std_mul(&b).add(&a.std_mul(&c)));
        // the same law with the reversed argument order
        prop_assert_eq!(b.add(&c).mul(&a), b.mul(&a).add(&c.mul(&a)));
    }

    #[test]
    fn multiplication_associates(a in below_omega_omega(), b in below_omega_omega(), c in below_omega_omega()) {
        prop_assert_eq!(a.std_mul(&b).std_mul(&c), a.std_mul(&b.std_mul(&c)));
    }

    #[test]
    fn order_matches_addition(a in nested(), b in nested()) {
        // a < b iff some nonzero g has a + g = b
        let witness = a.left_subtract(&b).ok().filter(|g| !g.is_zero());
        prop_assert_eq!(a < b, witness.is_some());
        if let Some(g) = witness {
            prop_assert_eq!(a.add(&g), b);
        }
    }

    #[test]
    fn compare_is_total_and_antisymmetric(a in nested(), b in nested()) {
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        prop_assert_eq!(a.compare(&b) == Ordering::Equal, a == b);
    }

    #[test]
    fn addition_is_monotone_on_the_right(a in nested(), b in nested(), c in nested()) {
        prop_assume!(b < c);
        prop_assert!(a.add(&b) < a.add(&c));
    }

    #[test]
    fn printed_ordinals_reparse(a in nested()) {
        prop_assert_eq!(parse_ordinal(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn successor_and_limits(a in nested()) {
        let s = a.successor();
        prop_assert!(!s.is_limit());
        prop_assert!(a < s);
        prop_assert_eq!(a.left_subtract(&s).unwrap(), Ordinal::one());
    }
}

#[test]
fn finite_agreement() {
    for m in 0..=200u64 {
        for n in 0..=200u64 {
            let (a, b) = (Ordinal::from(m), Ordinal::from(n));
            assert_eq!(a.natural_sum(&b), Ordinal::from(m + n));
            assert_eq!(a.add(&b), Ordinal::from(m + n));
        }
    }
}

#[test]
fn zero_breaks_the_upper_bound() {
    let zero = Ordinal::zero();
    let one = Ordinal::one();
    let hi = zero.mul(&one).add(&one.mul(&zero));
    assert!(zero.natural_sum(&one) > hi);
}
