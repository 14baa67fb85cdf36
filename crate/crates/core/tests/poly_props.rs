use divisorforge::poly::{content_primitive, poly_eval, poly_gcd, rat_divides, resultant, root_sum_resultant};
use divisorforge::{IntPoly, RatPoly, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    int_poly(max_deg, bound).prop_filter("nonconstant", |p| !p.is_constant())
}

fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn rat_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rational(12), 1..=max_deg + 1).prop_map(RatPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn resultant_vanishes_iff_common_factor(a in int_poly(4, 6), b in int_poly(4, 6), shared in int_poly(1, 3)) {
        // half the cases get a forced common factor
        let (a, b) = if shared.is_constant() { (a, b) } else { (&a * &shared, &b * &shared) };
        let r = resultant(&a.to_rat(), &b.to_rat()).unwrap();
        let g = poly_gcd(&a.to_rat(), &b.to_rat()).unwrap();
        prop_assert_eq!(r.is_zero(), g.deg() >= 1);
    }

    #[test]
    fn content_times_primitive_is_identity(p in rat_poly(5).prop_filter("nonzero", |p| !p.is_zero())) {
        let (c, prim) = content_primitive(&p).unwrap();
        prop_assert!(prim.lc() > BigInt::zero());
        prop_assert!(prim.content().is_one());
        prop_assert_eq!(prim.to_rat().scale(&c), p);
    }

    #[test]
    fn root_sum_resultant_degree(a in nonconstant(3, 5), b in nonconstant(3, 5), n in 1i64..4) {
        let r = root_sum_resultant(&a, &b, n).unwrap();
        prop_assert_eq!(r.deg(), a.deg() * b.deg());
    }

    #[test]
    fn divisibility_closure(m in 2i64..40, k1 in -30i64..30, k2 in -30i64..30, d1 in 1i64..30, d2 in 1i64..30, r2 in rational(40)) {
        let mb = BigInt::from(m);
        // denominators prime to m keep m | r
        let d1 = if d1.gcd(&m) == 1 { d1 } else { 1 };
        let d2 = if d2.gcd(&m) == 1 { d2 } else { 1 };
        let x = Rational::new(BigInt::from(m * k1), d1.into());
        let y = Rational::new(BigInt::from(m * k2), d2.into());
        prop_assert!(rat_divides(&mb, &x) && rat_divides(&mb, &y));
        prop_assert!(rat_divides(&mb, &(&x + &y)));
        if r2.denom().gcd(&mb).is_one() {
            prop_assert!(rat_divides(&mb, &(&x * &r2)));
        }
    }

    #[test]
    fn evaluation_is_multiplicative(a in rat_poly(4), b in rat_poly(4), r in rational(9)) {
        let prod = &a * &b;
        prop_assert_eq!(poly_eval(&prod, &r), poly_eval(&a, &r) * poly_eval(&b, &r));
        let sum = &a + &b;
        prop_assert_eq!(poly_eval(&sum, &r), poly_eval(&a, &r) + poly_eval(&b, &r));
    }
}
