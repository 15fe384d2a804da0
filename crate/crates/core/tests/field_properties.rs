mod common;

use bcf_core::arith::{
    floor, int, pow10_neg, rat, refine_root, NumberFieldElement, PolySpec, Rational, RealValue,
};
use num_traits::{One, Signed};
use proptest::prelude::*;
use std::cmp::Ordering;

use common::field;

fn coords(d: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), d)
        .prop_filter("nonzero", |v| v.iter().any(|(n, _)| *n != 0))
}

fn element(
    f: &std::sync::Arc<bcf_core::arith::NumberField>,
    c: &[(i64, i64)],
) -> NumberFieldElement {
    NumberFieldElement::new(f, c.iter().map(|&(n, d)| rat(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_exact(c in coords(3)) {
        let f = field(&[-1, -1, -1, 1], 1, 2);
        let x = element(&f, &c);
        let one = x.mul(&x.invert().unwrap()).unwrap();
        prop_assert_eq!(one.residue(), &[int(1), int(0), int(0)]);
    }

    #[test]
    fn inverse_is_exact_in_quartic_field(c in coords(4)) {
        let f = field(&[-2, 0, 0, 0, 1], 1, 2);
        let x = element(&f, &c);
        let one = x.mul(&x.invert().unwrap()).unwrap();
        prop_assert!(one.as_rational().is_some_and(One::is_one));
    }

    #[test]
    fn floor_brackets_value(c in coords(3)) {
        let f = field(&[-1, -1, -1, 1], 1, 2);
        let x = element(&f, &c);
        let fl = x.floor().unwrap();
        let v = RealValue::Field(x);
        let lower = v.cmp_rational(&Rational::from_integer(fl.clone())).unwrap();
        let upper = v.cmp_rational(&Rational::from_integer(fl + 1)).unwrap();
        prop_assert_ne!(lower, Some(Ordering::Less));
        prop_assert_eq!(upper, Some(Ordering::Less));
    }

    #[test]
    fn product_agrees_with_interval_values(a in coords(3), b in coords(3)) {
        let f = field(&[-1, -1, -1, 1], 1, 2);
        let x = element(&f, &a);
        let y = element(&f, &b);
        let w = pow10_neg(30);
        let xy = x.mul(&y).unwrap().approximate(&w).unwrap();
        let direct = x.approximate(&w).unwrap() * y.approximate(&w).unwrap();
        prop_assert!((xy - direct).abs() < pow10_neg(25));
    }

    #[test]
    fn refine_root_nests(num in 1i64..64) {
        let poly = PolySpec::from_i64s(&[-1, -1, -1, -1, 1]);
        let width = rat(1, num * 1000);
        let (lo, hi) = refine_root(&poly, (int(1), int(2)), &width).unwrap();
        prop_assert!(int(1) <= lo && hi <= int(2));
        prop_assert!(&hi - &lo <= width);
        prop_assert!(poly.sign_at(&lo) * poly.sign_at(&hi) < 0);
    }

    #[test]
    fn rational_floor_is_canonical(n in -10_000i64..10_000, d in 1i64..500) {
        let x = rat(n, d);
        let fl = Rational::from_integer(floor(&x));
        prop_assert!(fl <= x && x < fl + int(1));
        let q = &x * rat(d, 7);
        prop_assert!(q.denom().is_positive());
        prop_assert!(num_integer::Integer::gcd(q.numer(), q.denom()) == One::one());
    }
}
