use proptest::prelude::*;

use sqsym::algebra::{l_to_m, m_to_l};
use sqsym::hopf::{antipode, multiply, product_l, product_m, AntipodeRoute};
use sqsym::realize::{realize_expr, realize_l};
use sqsym::{Basis, Coeff, DottedComposition, DottedPart, Expr};

fn part() -> impl Strategy<Value = DottedPart> {
    (0u32..4, any::<bool>()).prop_map(|(v, d)| if d { DottedPart::dotted(v) } else { DottedPart::plain(v + 1) })
}

fn comp(max_len: usize) -> impl Strategy<Value = DottedComposition> {
    prop::collection::vec(part(), 0..=max_len).prop_map(DottedComposition::new)
}

fn expr(basis: Basis) -> impl Strategy<Value = Expr> {
    prop::collection::vec((comp(4), -5i64..=5, 1i64..=3), 0..5).prop_map(move |terms| {
        Expr::from_terms(
            basis,
            terms
                .into_iter()
                .map(|(c, p, q)| (c, Coeff::new(p.into(), q.into()))),
        )
    })
}

fn size(c: &DottedComposition) -> u32 {
    c.total_degree() + c.fermionic_degree()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(c in comp(8)) {
        let back: DottedComposition = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn def_sets_round_trip(c in comp(10)) {
        let s = c.def_sets();
        prop_assert_eq!(DottedComposition::from_def_sets(c.total_degree(), c.fermionic_degree(), &s.d, &s.f).unwrap(), c);
    }

    #[test]
    fn reverse_twice(c in comp(8)) {
        prop_assert_eq!(c.reverse().reverse(), c);
    }

    #[test]
    fn expression_json_and_text_round_trip(e in expr(Basis::L)) {
        prop_assert_eq!(Expr::from_json(&e.to_json()).unwrap(), e.clone());
        let text: Expr = e.to_plain().parse().unwrap();
        if e.is_zero() {
            prop_assert!(text.is_zero());
        } else {
            prop_assert_eq!(text, e);
        }
    }

    #[test]
    fn basis_change_round_trip(e in expr(Basis::M)) {
        prop_assert_eq!(l_to_m(&m_to_l(&e).unwrap()).unwrap(), e);
    }

    #[test]
    fn products_are_associative(a in comp(2), b in comp(2), c in comp(2)) {
        prop_assume!(size(&a) + size(&b) + size(&c) <= 7);
        for basis in [Basis::M, Basis::L] {
            let x = Expr::basis_element(basis, a.clone());
            let y = Expr::basis_element(basis, b.clone());
            let z = Expr::basis_element(basis, c.clone());
            let left = multiply(&multiply(&x, &y).unwrap(), &z).unwrap();
            let right = multiply(&x, &multiply(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn fundamental_product_matches_polynomials(a in comp(3), b in comp(3)) {
        let n = (size(&a) + size(&b)) as usize;
        prop_assume!(n <= 6);
        let lhs = realize_expr(&product_l(&a, &b), n);
        prop_assert_eq!(lhs, realize_l(&a, n).mul(&realize_l(&b, n)).unwrap());
        let via_m = l_to_m(&product_l(&a, &b)).unwrap();
        let direct = multiply(
            &l_to_m(&Expr::basis_element(Basis::L, a.clone())).unwrap(),
            &l_to_m(&Expr::basis_element(Basis::L, b.clone())).unwrap(),
        ).unwrap();
        prop_assert_eq!(via_m, direct);
    }

    #[test]
    fn monomial_product_is_supercommutative(a in comp(3), b in comp(3)) {
        prop_assume!(size(&a) + size(&b) <= 8);
        let sign = if a.fermionic_degree() * b.fermionic_degree() % 2 == 1 { -1 } else { 1 };
        let swapped = product_m(&b, &a).scale(&Coeff::from_integer(sign.into()));
        prop_assert_eq!(product_m(&a, &b), swapped);
    }

    #[test]
    fn antipode_routes_agree_and_square_to_identity(c in comp(4)) {
        prop_assume!(size(&c) <= 6);
        let l = Expr::basis_element(Basis::L, c.clone());
        let s = antipode(&l, AntipodeRoute::Columns).unwrap();
        prop_assert_eq!(&s, &antipode(&l, AntipodeRoute::Monomial).unwrap());
        prop_assert_eq!(antipode(&s, AntipodeRoute::Columns).unwrap(), l);
    }
}
