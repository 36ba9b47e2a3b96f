use cyclic_plane::cli::eval::eval_str;
use cyclic_plane::cli::parse::parse;
use cyclic_plane::hopf::{FElement, FIndex};
use cyclic_plane::{BasisIndex, CycNum, Order, PlaneElement};
use proptest::prelude::*;

fn order(n: usize) -> Order {
    Order::new(n).unwrap()
}

fn cyc(n: usize) -> impl Strategy<Value = CycNum> {
    prop::collection::vec(-20i64..=20, n).prop_map(move |d| CycNum::from_dense(order(n), &d).unwrap())
}

fn order_and_cycs(lo: usize, hi: usize) -> impl Strategy<Value = (usize, CycNum, CycNum, CycNum)> {
    (lo..=hi).prop_flat_map(|n| (Just(n), cyc(n), cyc(n), cyc(n)))
}

fn plane_elem(n: usize) -> impl Strategy<Value = PlaneElement> {
    prop::collection::vec((0..n, 0..n, cyc(n)), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(PlaneElement::zero(order(n)), |acc, (r, s, c)| {
            &acc + &PlaneElement::term(BasisIndex { r, s }, c)
        })
    })
}

fn f_elem(n: usize) -> impl Strategy<Value = FElement> {
    prop::collection::vec((0..n, 0..n, 0..n, cyc(n)), 0..3).prop_map(move |terms| {
        terms.into_iter().fold(FElement::zero(order(n)), |acc, (a, b, c, k)| {
            &acc + &FElement::term(FIndex { a, b, c }, k)
        })
    })
}

proptest! {
    #[test]
    fn cyc_ring_axioms((n, a, b, c) in order_and_cycs(2, 12)) {
        let o = order(n);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &CycNum::one(o), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn q_powers_invert(n in 2usize..=12, k in -100i64..100) {
        let o = order(n);
        prop_assert!((CycNum::q_pow(o, k) * CycNum::q_pow(o, -k)).is_one());
        prop_assert_eq!(CycNum::q_pow(o, k), CycNum::q_pow(o, 1).pow(k.rem_euclid(n as i64) as u32));
    }

    #[test]
    fn canonical_form_is_stable(n in 2usize..=12, dense in prop::collection::vec(-50i64..=50, 1..30)) {
        let o = order(n);
        let once = CycNum::from_dense(o, &dense).unwrap();
        prop_assert_eq!(once.coeffs().len(), n - 1);
        let again = CycNum::from_dense(o, once.coeffs()).unwrap();
        prop_assert_eq!(once, again);
    }

    #[test]
    fn complex_evaluation_is_a_homomorphism((_n, a, b, _c) in order_and_cycs(2, 12)) {
        let prod = (&a * &b).to_complex() - a.to_complex() * b.to_complex();
        let sum = (&a + &b).to_complex() - (a.to_complex() + b.to_complex());
        prop_assert!(prod.norm() < 1e-8 && sum.norm() < 1e-8);
    }

    #[test]
    fn plane_associative((u, v, w) in (2usize..=8).prop_flat_map(|n| (plane_elem(n), plane_elem(n), plane_elem(n)))) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
    }

    #[test]
    fn f_associative((u, v, w) in (2usize..=5).prop_flat_map(|n| (f_elem(n), f_elem(n), f_elem(n)))) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn printed_normal_forms_reparse(
        n in 2usize..=9,
        atoms in prop::collection::vec(prop::sample::select(vec!["x", "y", "q", "2", "x^2", "y^-1", "(x + y)", "(1 - q)"]), 1..6),
        ops in prop::collection::vec(prop::sample::select(vec![" + ", " - ", "*"]), 5),
    ) {
        let mut src = atoms[0].to_string();
        for (atom, op) in atoms[1..].iter().zip(&ops) {
            src.push_str(op);
            src.push_str(atom);
        }
        let first = eval_str(&src, n).unwrap();
        prop_assert_eq!(eval_str(&first, n).unwrap(), first.clone());
        let expr = parse(&src).unwrap();
        prop_assert_eq!(parse(&expr.to_string()).unwrap(), expr);
    }
}
