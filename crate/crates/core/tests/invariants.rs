//! Exhaustive checks over small universes.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use sqsym::algebra::{cofundamental_to_m, l_to_m, m_to_l};
use sqsym::composition::{compositions_of, strong_leq, universe, weak_leq};
use sqsym::hopf::{antipode_l, antipode_m, coproduct_l, coproduct_m, multiply, product_l, product_m};
use sqsym::realize::{extract_m_faithful, realize_expr, realize_m};
use sqsym::shuffles::fundamental_paths;
use sqsym::superschur::{
    bosonic_strips, enumerate_s_tableaux, fermionic_strips, schur_to_l, superpartitions,
    Superpartition, WeightEntry,
};
use sqsym::{Basis, DottedComposition, Expr};

fn by_degree(max: u32) -> BTreeMap<(u32, u32), Vec<DottedComposition>> {
    let mut groups: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for a in universe(max, max) {
        groups.entry(a.degrees()).or_default().push(a);
    }
    groups
}

#[test]
fn def_sets_round_trip_up_to_eight() {
    let all = universe(8, 8);
    assert!(all.len() > 1000, "{}", all.len());
    for a in all {
        let (n, m) = a.degrees();
        let s = a.def_sets();
        assert_eq!(DottedComposition::from_def_sets(n, m, &s.d, &s.f).unwrap(), a);
    }
}

#[test]
fn strong_implies_weak() {
    for group in by_degree(6).values() {
        for b in group {
            for a in group {
                if strong_leq(b, a) {
                    assert!(weak_leq(b, a), "{b} {a}");
                }
            }
        }
    }
}

#[test]
fn orders_are_partial_orders() {
    for group in by_degree(5).values() {
        for leq in [strong_leq as fn(&DottedComposition, &DottedComposition) -> bool, weak_leq] {
            let rel: Vec<Vec<bool>> = group.iter().map(|x| group.iter().map(|y| leq(x, y)).collect()).collect();
            for i in 0..group.len() {
                assert!(rel[i][i]);
                for j in 0..group.len() {
                    if i != j {
                        assert!(!(rel[i][j] && rel[j][i]), "{} {}", group[i], group[j]);
                    }
                    if rel[i][j] {
                        for k in 0..group.len() {
                            if rel[j][k] {
                                assert!(rel[i][k], "{} {} {}", group[i], group[j], group[k]);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumerations_match_brute_force() {
    for a in universe(6, 6) {
        let (n, m) = a.degrees();
        let all = compositions_of(n, m);
        let finer: BTreeSet<_> = all.iter().filter(|b| strong_leq(b, &a)).cloned().collect();
        assert_eq!(a.strong_refinements().into_iter().collect::<BTreeSet<_>>(), finer, "{a}");
        let coarser: BTreeSet<_> = universe(6, 6)
            .into_iter()
            .filter(|g| g.total_degree() == n && weak_leq(&a, g))
            .collect();
        assert_eq!(a.weak_coarsenings().into_iter().collect::<BTreeSet<_>>(), coarser, "{a}");
    }
}

#[test]
fn column_decomposition_reassembles() {
    for a in universe(6, 6).into_iter().filter(|a| !a.is_empty()) {
        let cols = a.column_decomposition();
        assert!(cols.iter().all(|c| c.is_column()), "{a}");
        let back = cols[1..].iter().try_fold(cols[0].clone(), |acc, x| acc.near_concat(x));
        assert_eq!(back, Some(a.clone()));
    }
}

#[test]
fn dot_free_orders_coincide() {
    for n in 0..=6 {
        let all = compositions_of(n, 0);
        for b in &all {
            for a in &all {
                let classical = a.def_sets().d.is_subset(&b.def_sets().d);
                assert_eq!(strong_leq(b, a), classical);
                assert_eq!(weak_leq(b, a), classical);
            }
        }
    }
}

#[test]
fn basis_changes() {
    for a in universe(6, 6) {
        let l = Expr::basis_element(Basis::L, a.clone());
        let m = l_to_m(&l).unwrap();
        assert_eq!(m.len(), a.strong_refinements().len());
        assert!(m.terms().all(|(_, k)| *k == sqsym::Coeff::from_integer(1.into())));
        assert_eq!(m_to_l(&m).unwrap(), l);
        let back = l_to_m(&m_to_l(&Expr::basis_element(Basis::M, a.clone())).unwrap()).unwrap();
        assert_eq!(back, Expr::basis_element(Basis::M, a.clone()));
        if a.fermionic_degree() == 0 {
            assert_eq!(cofundamental_to_m(&a), m);
        }
    }
}

#[test]
fn dot_free_fundamental_paths_are_classical_shuffles() {
    for n in 0..=5 {
        for a in common::compositions(n) {
            for b in common::compositions(5 - n) {
                let paths = fundamental_paths(&common::to_dotted(&a), &common::to_dotted(&b));
                assert!(paths.iter().all(|p| p.sign == 1));
                let mut got = common::Lin::new();
                for p in &paths {
                    let c: Vec<u32> = p.comp.parts().iter().map(|x| x.value()).collect();
                    *got.entry(c).or_insert(0) += 1;
                }
                assert_eq!(got, common::f_product(&a, &b), "{a:?} {b:?}");
            }
        }
    }
}

fn small_pairs(max_n: u32, max_m: u32) -> Vec<(DottedComposition, DottedComposition)> {
    let comps: Vec<_> = universe(max_n + max_m, max_m)
        .into_iter()
        .filter(|a| a.total_degree() <= max_n)
        .collect();
    let mut out = Vec::new();
    for a in &comps {
        for b in &comps {
            if a.total_degree() + b.total_degree() <= max_n && a.fermionic_degree() + b.fermionic_degree() <= max_m {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[test]
fn monomial_product_through_fundamentals_and_oracle() {
    for (a, b) in small_pairs(5, 2) {
        let pm = product_m(&a, &b);
        let la = m_to_l(&Expr::basis_element(Basis::M, a.clone())).unwrap();
        let lb = m_to_l(&Expr::basis_element(Basis::M, b.clone())).unwrap();
        assert_eq!(l_to_m(&multiply(&la, &lb).unwrap()).unwrap(), pm, "{a} {b}");
        if a.total_degree() + b.total_degree() <= 4 {
            continue;
        }
        // degree 5 pairs: the oracle in n+m variables
        let n = (a.total_degree() + a.fermionic_degree() + b.total_degree() + b.fermionic_degree()) as usize;
        let rhs = realize_m(&a, n).mul(&realize_m(&b, n)).unwrap();
        assert_eq!(realize_expr(&pm, n), rhs, "{a} {b}");
    }
}

#[test]
fn operations_preserve_bidegree() {
    let comps = universe(5, 5);
    for a in &comps {
        let d = a.degrees();
        for e in [antipode_m(a), antipode_l(a)] {
            assert!(e.terms().all(|(c, _)| c.degrees() == d), "{a}");
        }
        for t in [coproduct_m(a), coproduct_l(a)] {
            for ((l, r), _) in t.terms() {
                assert_eq!((l.total_degree() + r.total_degree(), l.fermionic_degree() + r.fermionic_degree()), d);
            }
        }
    }
    for (a, b) in small_pairs(4, 2) {
        let d = (a.total_degree() + b.total_degree(), a.fermionic_degree() + b.fermionic_degree());
        for e in [product_m(&a, &b), product_l(&a, &b)] {
            assert!(e.terms().all(|(c, _)| c.degrees() == d));
        }
    }
}

#[test]
fn extraction_inverts_realization() {
    let all = universe(4, 4);
    for a in &all {
        let e = Expr::basis_element(Basis::M, a.clone()).add(&antipode_m(a)).unwrap();
        let need = a.len().max(1);
        for n in [need, need + 1] {
            assert_eq!(extract_m_faithful(&realize_expr(&e, n), need).unwrap(), e, "{a} in {n}");
        }
    }
}

/// Circle positions `(row, column)` read off the drawn diagram.
fn drawn_circles(s: &Superpartition) -> Vec<(usize, u32)> {
    s.rows()
        .iter()
        .enumerate()
        .filter(|(_, (_, circled))| *circled)
        .map(|(i, (len, _))| (i + 1, len + 1))
        .collect()
}

fn drawn_cells(s: &Superpartition) -> BTreeSet<(usize, u32)> {
    s.rows()
        .iter()
        .enumerate()
        .flat_map(|(i, (len, _))| (1..=*len).map(move |c| (i + 1, c)))
        .collect()
}

/// The defining conditions, checked on pictures.
fn is_strip(inner: &Superpartition, outer: &Superpartition, ell: u32, fermionic: bool) -> bool {
    let a = drawn_cells(inner);
    let b = drawn_cells(outer);
    if !a.is_subset(&b) {
        return false;
    }
    let new: Vec<_> = b.difference(&a).copied().collect();
    if new.len() as u32 != ell {
        return false;
    }
    let columns: BTreeSet<u32> = new.iter().map(|&(_, c)| c).collect();
    if columns.len() != new.len() {
        return false;
    }
    let rows_with_new: BTreeSet<usize> = new.iter().map(|&(r, _)| r).collect();
    // lowest circle first
    let mut old: Vec<_> = drawn_circles(inner);
    let mut now: Vec<_> = drawn_circles(outer);
    old.reverse();
    now.reverse();
    if fermionic {
        let fresh: Vec<usize> = (0..now.len())
            .filter(|&i| {
                let col = now[i].1;
                !columns.contains(&col) && (1..col).all(|c| columns.contains(&c))
            })
            .collect();
        if fresh.len() != 1 {
            return false;
        }
        now.remove(fresh[0]);
    }
    old.len() == now.len()
        && old
            .iter()
            .zip(&now)
            .all(|(&(r, _), &(s, _))| s == r + usize::from(rows_with_new.contains(&r)))
}

#[test]
fn strips_satisfy_definition_and_are_complete() {
    for size in 0..=5u32 {
        for m in 0..=size as usize {
            for g in superpartitions(size - m as u32, m) {
                for ell in 0..=(6 - size) {
                    let target = g.degree() + ell;
                    let bos: BTreeSet<_> = bosonic_strips(&g, ell).into_iter().collect();
                    let want: BTreeSet<_> = superpartitions(target, m)
                        .into_iter()
                        .filter(|h| is_strip(&g, h, ell, false))
                        .collect();
                    assert_eq!(bos, want, "bosonic {g} + {ell}");
                    let fer: BTreeSet<_> = fermionic_strips(&g, ell).into_iter().map(|(h, _)| h).collect();
                    let want: BTreeSet<_> = superpartitions(target, m + 1)
                        .into_iter()
                        .filter(|h| is_strip(&g, h, ell, true))
                        .collect();
                    assert_eq!(fer, want, "fermionic {g} + {ell}");
                }
            }
        }
    }
}

#[test]
fn standardization_is_idempotent_and_keeps_shape() {
    let empty = Superpartition::empty();
    let weights: Vec<Vec<WeightEntry>> = vec![
        vec![WeightEntry::plain(2), WeightEntry::dotted(1), WeightEntry::plain(2)],
        vec![WeightEntry::plain(0), WeightEntry::dotted(2), WeightEntry::plain(3)],
        vec![WeightEntry::dotted(0), WeightEntry::plain(2), WeightEntry::dotted(1), WeightEntry::plain(2)],
        vec![WeightEntry::plain(1), WeightEntry::plain(2), WeightEntry::dotted(1), WeightEntry::plain(2)],
        vec![WeightEntry::plain(2), WeightEntry::dotted(0), WeightEntry::plain(2), WeightEntry::plain(1)],
    ];
    let mut seen = 0;
    for w in &weights {
        let n: u32 = w.iter().map(|e| e.value).sum();
        let m = w.iter().filter(|e| e.dotted).count();
        for lambda in superpartitions(n, m) {
            for t in enumerate_s_tableaux(&lambda, &empty, w) {
                seen += 1;
                let s = t.standardize();
                assert!(s.is_dot_standard());
                assert_eq!(s.outer(), t.outer());
                assert_eq!(s.inner(), t.inner());
                assert_eq!(s.inv_sign(), t.inv_sign());
                assert_eq!(s.standardize(), s);
            }
        }
    }
    assert!(seen > 20, "{seen}");
}

#[test]
fn schur_terms_share_one_bidegree() {
    let empty = Superpartition::empty();
    for size in 0..=6u32 {
        for m in 0..=size as usize {
            for lambda in superpartitions(size - m as u32, m) {
                let e = schur_to_l(&lambda, &empty).unwrap();
                assert!(!e.is_zero(), "{lambda}");
                let d = (lambda.degree(), m as u32);
                assert!(e.terms().all(|(c, _)| c.degrees() == d), "{lambda}");
                // skew by a dot-free inner shape
                for inner in superpartitions(1, 0) {
                    if let Ok(sk) = schur_to_l(&lambda, &inner) {
                        let d = (lambda.degree() - 1, m as u32);
                        assert!(sk.terms().all(|(c, _)| c.degrees() == d));
                    }
                }
            }
        }
    }
}
