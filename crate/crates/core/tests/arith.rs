use aode::arith::{
    factor_irreducible, is_irreducible, ord_at_factor, rat, rational_roots, RFunc, UPoly,
};
use proptest::prelude::*;

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| UPoly::from_ints(&c))
}

fn nonzero(max_deg: usize) -> impl Strategy<Value = UPoly> {
    upoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn rfunc() -> impl Strategy<Value = RFunc> {
    (upoly(3), nonzero(2)).prop_map(|(n, d)| RFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in rfunc(), b in rfunc(), c in rfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), RFunc::one());
        }
    }

    #[test]
    fn derivative_is_a_derivation(a in rfunc(), b in rfunc()) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_is_additive(f in nonzero(4), g in nonzero(4), c in -3i64..=3) {
        let p = UPoly::linear_root(&rat(c));
        let fg = &f * &g;
        prop_assert_eq!(
            ord_at_factor(&fg, &p).unwrap(),
            ord_at_factor(&f, &p).unwrap() + ord_at_factor(&g, &p).unwrap()
        );
    }

    #[test]
    fn factorization_round_trip(f in nonzero(6)) {
        let fac = factor_irreducible(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (p, m) in &fac.factors {
            prop_assert!(*m >= 1);
            prop_assert!(p.is_monic());
            prop_assert!(is_irreducible(p).unwrap());
        }
    }

    #[test]
    fn rational_roots_are_roots(f in nonzero(5)) {
        for r in rational_roots(&f).unwrap() {
            prop_assert!(f.eval(&r) == rat(0));
        }
    }
}
