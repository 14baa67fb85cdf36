use divisorforge::{RatPoly, Rational};
use divisorforge_cli::parse_poly;
use divisorforge_cli::report::Poly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    let small = (-1000i64..=1000, 1i64..=50).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
    let huge = (any::<i128>(), 1u64..).prop_map(|(n, d)| Rational::new(BigInt::from(n) * BigInt::from(n), d.into()));
    prop_oneof![4 => small, 1 => huge, 2 => Just(Rational::from_integer(0.into()))]
}

fn rat_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rational(), 0..=8).prop_map(RatPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(p in rat_poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn json_form_is_lossless(p in rat_poly()) {
        let json = serde_json::to_string(&Poly::from_rat(&p)).unwrap();
        let back: Poly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_rat().unwrap(), p);
    }

    #[test]
    fn products_parse_as_products(a in rat_poly(), b in rat_poly()) {
        let text = format!("({a})({b})");
        prop_assert_eq!(parse_poly(&text).unwrap(), &a * &b);
        let text = format!("({a}) - ({b})");
        prop_assert_eq!(parse_poly(&text).unwrap(), &a - &b);
    }

    #[test]
    fn whitespace_is_ignored(p in rat_poly(), seed in any::<u64>()) {
        let chars: Vec<char> = p.to_string().chars().collect();
        let mut spaced = String::new();
        for (i, &c) in chars.iter().enumerate() {
            spaced.push(c);
            // a space between two digits would read as a product
            let inside_number = c.is_ascii_digit() && chars.get(i + 1).is_some_and(char::is_ascii_digit);
            if !inside_number && (seed >> (i % 64)) & 1 == 1 {
                spaced.push(' ');
            }
        }
        prop_assert_eq!(parse_poly(&spaced).unwrap(), p);
    }

    #[test]
    fn garbage_never_panics(s in "[x0-9+*^/() a-z-]{0,24}") {
        let _ = parse_poly(&s);
    }
}
