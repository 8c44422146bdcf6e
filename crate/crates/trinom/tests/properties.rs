//! Property tests for the polynomial ring and its parsers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use trinom::gf2poly::{mod_pow_x, Gf2Poly};

fn arb_poly(max_degree: u64) -> impl Strategy<Value = Gf2Poly> {
    prop::collection::btree_set(0..=max_degree, 0..24).prop_map(|exps| {
        let exps: Vec<u64> = BTreeSet::from_iter(exps).into_iter().collect();
        Gf2Poly::from_exponents(&exps).unwrap()
    })
}

fn arb_nonzero(max_degree: u64) -> impl Strategy<Value = Gf2Poly> {
    arb_poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn add_is_commutative_and_self_inverse(a in arb_poly(300), b in arb_poly(300)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&a), Gf2Poly::zero());
        prop_assert_eq!(a.add(&Gf2Poly::zero()), a);
    }

    #[test]
    fn add_is_associative(a in arb_poly(300), b in arb_poly(300), c in arb_poly(300)) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_is_commutative_and_associative(
        a in arb_poly(200),
        b in arb_poly(200),
        c in arb_poly(200),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributes_over_add(a in arb_poly(200), b in arb_poly(200), c in arb_poly(200)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn mul_degree_adds(a in arb_nonzero(200), b in arb_nonzero(200)) {
        let product = a.mul(&b);
        prop_assert_eq!(
            product.degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn div_rem_reconstructs(a in arb_poly(300), b in arb_nonzero(300)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!(a.rem(&b).unwrap(), r);
    }

    #[test]
    fn gcd_divides_both_and_sees_common_factors(
        a in arb_nonzero(120),
        b in arb_nonzero(120),
        c in arb_nonzero(60),
    ) {
        let g = a.gcd(&b);
        prop_assert!(a.is_divisible_by(&g).unwrap());
        prop_assert!(b.is_divisible_by(&g).unwrap());
        // a planted common divisor always shows up in the gcd
        let g = a.mul(&c).gcd(&b.mul(&c));
        prop_assert!(g.is_divisible_by(&c).unwrap());
    }

    #[test]
    fn square_and_pow_agree_with_mul(a in arb_poly(150), n in 0u64..6) {
        prop_assert_eq!(a.square(), a.mul(&a));
        let mut by_hand = Gf2Poly::one();
        for _ in 0..n {
            by_hand = by_hand.mul(&a);
        }
        prop_assert_eq!(a.pow(n), by_hand);
    }

    #[test]
    fn reciprocal_is_an_involution_off_x(a in arb_nonzero(300)) {
        // force a nonzero constant coefficient
        let mut a = a;
        a.set_coeff(0, true);
        prop_assert_eq!(a.reciprocal().unwrap().reciprocal().unwrap(), a);
    }

    #[test]
    fn parse_format_round_trip(a in arb_poly(300)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Gf2Poly>().unwrap(), a);
    }

    #[test]
    fn mod_pow_x_matches_pow_then_rem(k in 0u64..400, f in arb_nonzero(40)) {
        prop_assume!(f.degree() >= Some(1));
        prop_assert_eq!(
            mod_pow_x(k, &f).unwrap(),
            Gf2Poly::x().pow(k).rem(&f).unwrap()
        );
    }
}
