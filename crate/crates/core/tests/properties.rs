use chebfib::algebra::{format_rational, frac, golden, parse_elem, parse_rational, q5, sqrt5, sqrt5_i_tower, Elem, Rational};
use chebfib::chebyshev::{cheb_eval, cheb_poly, cheb_rep_eval, Kind};
use chebfib::sequences::{binom, coeff_c, coeff_d, fib, lucas};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| frac(a, b))
}

fn q5_elem() -> impl Strategy<Value = Elem> {
    (small_rat(), small_rat()).prop_map(|(a, b)| q5(a, b))
}

fn q5i_elem() -> impl Strategy<Value = Elem> {
    (q5_elem(), q5_elem()).prop_map(|(a, b)| sqrt5_i_tower().elem(a, b).unwrap())
}

proptest! {
    #[test]
    fn q5_field_axioms(a in q5_elem(), b in q5_elem(), c in q5_elem()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn q5i_field_axioms(a in q5i_elem(), b in q5i_elem()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn pow_is_additive(a in q5_elem(), i in -6i64..=6, j in -6i64..=6) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.pow(i) * a.pow(j), a.pow(i + j));
    }

    #[test]
    fn print_parse_round_trip(a in q5i_elem(), q in small_rat()) {
        prop_assert_eq!(parse_elem(&a.to_string()).unwrap(), a);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn binet(n in -200i64..=200) {
        let (alpha, beta) = golden();
        let f = (alpha.pow(n) - beta.pow(n)) / sqrt5();
        let l = alpha.pow(n) + beta.pow(n);
        prop_assert_eq!(f.to_rational(), Some(Rational::from_integer(fib(n))));
        prop_assert_eq!(l.to_rational(), Some(Rational::from_integer(lucas(n))));
    }

    #[test]
    fn weights_split_the_binomial(n in 1i64..=60, k in 0i64..=60) {
        prop_assume!(k <= n);
        let b = Rational::from_integer(binom(n + k, n - k).unwrap());
        let d = if k == 0 { Rational::from_integer(0.into()) } else { coeff_d(n, k).unwrap() };
        prop_assert_eq!(coeff_c(n, k).unwrap() + d, b);
    }

    #[test]
    fn chebyshev_three_ways(n in 0i64..=40, x in small_rat()) {
        let e = Elem::Rat(x.clone());
        for kind in [Kind::T, Kind::U] {
            let rec = cheb_eval(kind, n, &e);
            prop_assert_eq!(&rec, &cheb_rep_eval(kind, n, &e));
            prop_assert_eq!(rec, Elem::Rat(cheb_poly(kind, n).unwrap().eval_rational(&x)));
        }
    }
}
