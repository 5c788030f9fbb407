//! A tiny, separate implementation of ordinary quasisymmetric functions
//! (no dots anywhere), plus the Schur-to-fundamental expansion via standard
//! Young tableaux. Used as an outside reference.
#![allow(dead_code)]

use std::collections::BTreeMap;

use sqsym::{Basis, DottedComposition, Expr, TensorExpr};

pub type Comp = Vec<u32>;
pub type Lin = BTreeMap<Comp, i64>;
pub type Lin2 = BTreeMap<(Comp, Comp), i64>;

fn add(l: &mut Lin, c: Comp, k: i64) {
    let v = l.entry(c.clone()).or_insert(0);
    *v += k;
    if *v == 0 {
        l.remove(&c);
    }
}

fn add2(l: &mut Lin2, a: Comp, b: Comp, k: i64) {
    let key = (a, b);
    let v = l.entry(key.clone()).or_insert(0);
    *v += k;
    if *v == 0 {
        l.remove(&key);
    }
}

pub fn compositions(n: u32) -> Vec<Comp> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Quasi-shuffle.
pub fn m_product(a: &[u32], b: &[u32]) -> Lin {
    let mut out = Lin::new();
    if a.is_empty() || b.is_empty() {
        add(&mut out, [a, b].concat(), 1);
        return out;
    }
    for (c, k) in m_product(&a[1..], b) {
        add(&mut out, [&[a[0]][..], &c].concat(), k);
    }
    for (c, k) in m_product(a, &b[1..]) {
        add(&mut out, [&[b[0]][..], &c].concat(), k);
    }
    for (c, k) in m_product(&a[1..], &b[1..]) {
        add(&mut out, [&[a[0] + b[0]][..], &c].concat(), k);
    }
    out
}

/// Descent composition of a word of distinct integers.
fn des_comp(w: &[u32]) -> Comp {
    let mut out = Vec::new();
    let mut run = 0;
    for i in 0..w.len() {
        run += 1;
        if i + 1 == w.len() || w[i] > w[i + 1] {
            out.push(run);
            run = 0;
        }
    }
    out
}

/// Some permutation of `offset+1..=offset+n` whose descent composition is `a`.
fn word_for(a: &[u32], offset: u32) -> Vec<u32> {
    // fill blocks right to left with the smallest values
    let mut blocks = Vec::new();
    let mut next = offset + 1;
    for &p in a.iter().rev() {
        blocks.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    blocks.reverse();
    blocks.concat()
}

fn shuffles(u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in shuffles(&u[1..], v) {
        w.insert(0, u[0]);
        out.push(w);
    }
    for mut w in shuffles(u, &v[1..]) {
        w.insert(0, v[0]);
        out.push(w);
    }
    out
}

/// Fundamental product through shuffles of permutations.
pub fn f_product(a: &[u32], b: &[u32]) -> Lin {
    let n: u32 = a.iter().sum();
    let u = word_for(a, 0);
    let v = word_for(b, n);
    let mut out = Lin::new();
    for w in shuffles(&u, &v) {
        add(&mut out, des_comp(&w), 1);
    }
    out
}

pub fn m_coproduct(a: &[u32]) -> Lin2 {
    let mut out = Lin2::new();
    for k in 0..=a.len() {
        add2(&mut out, a[..k].to_vec(), a[k..].to_vec(), 1);
    }
    out
}

/// Cut the ribbon after each of its cells.
pub fn f_coproduct(a: &[u32]) -> Lin2 {
    let n: u32 = a.iter().sum();
    let mut out = Lin2::new();
    for k in 0..=n {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let mut seen = 0;
        for &p in a {
            if seen + p <= k {
                left.push(p);
            } else if seen >= k {
                right.push(p);
            } else {
                left.push(k - seen);
                right.push(seen + p - k);
            }
            seen += p;
        }
        add2(&mut out, left, right, 1);
    }
    out
}

fn coarsenings(a: &[u32]) -> Vec<Comp> {
    if a.len() <= 1 {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for rest in coarsenings(&a[1..]) {
        out.push([&[a[0]][..], &rest].concat());
        let mut merged = rest.clone();
        merged[0] += a[0];
        out.push(merged);
    }
    out
}

pub fn m_antipode(a: &[u32]) -> Lin {
    let sign = if a.len().is_multiple_of(2) { 1 } else { -1 };
    let rev: Vec<u32> = a.iter().rev().copied().collect();
    let mut out = Lin::new();
    for c in coarsenings(&rev) {
        add(&mut out, c, sign);
    }
    out
}

/// `S(F_α) = (-1)^{|α|} F_{ω(α)}`, with `ω` the reversed conjugate.
pub fn f_antipode(a: &[u32]) -> Lin {
    let n: u32 = a.iter().sum();
    let mut out = Lin::new();
    if n == 0 {
        add(&mut out, vec![], 1);
        return out;
    }
    let rev: Vec<u32> = a.iter().rev().copied().collect();
    let mut des = std::collections::BTreeSet::new();
    let mut s = 0;
    for &p in &rev[..rev.len() - 1] {
        s += p;
        des.insert(s);
    }
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..n {
        if !des.contains(&i) {
            parts.push(i - last);
            last = i;
        }
    }
    parts.push(n - last);
    add(&mut out, parts, if n.is_multiple_of(2) { 1 } else { -1 });
    out
}

/// Standard Young tableaux of shape `lambda` (English), expanded into fundamentals.
pub fn schur_fundamental(lambda: &[u32]) -> Lin {
    let n: u32 = lambda.iter().sum();
    let mut out = Lin::new();
    let mut rows = vec![0u32; lambda.len()];
    let mut row_of = Vec::new();
    fn go(lambda: &[u32], rows: &mut Vec<u32>, row_of: &mut Vec<usize>, n: u32, out: &mut Lin) {
        if row_of.len() as u32 == n {
            let mut comp = Vec::new();
            let mut run = 0;
            for i in 0..row_of.len() {
                run += 1;
                if i + 1 == row_of.len() || row_of[i + 1] > row_of[i] {
                    comp.push(run);
                    run = 0;
                }
            }
            add(out, comp, 1);
            return;
        }
        for r in 0..lambda.len() {
            if rows[r] < lambda[r] && (r == 0 || rows[r - 1] > rows[r]) {
                rows[r] += 1;
                row_of.push(r);
                go(lambda, rows, row_of, n, out);
                row_of.pop();
                rows[r] -= 1;
            }
        }
    }
    go(lambda, &mut rows, &mut row_of, n, &mut out);
    out
}

pub fn partitions(n: u32) -> Vec<Comp> {
    fn go(n: u32, max: u32) -> Vec<Comp> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in go(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    go(n, n)
}

pub fn to_dotted(c: &[u32]) -> DottedComposition {
    let pairs: Vec<(u32, bool)> = c.iter().map(|&v| (v, false)).collect();
    DottedComposition::from_pairs(&pairs).unwrap()
}

fn from_dotted(c: &DottedComposition) -> Comp {
    c.parts()
        .iter()
        .map(|p| {
            assert!(!p.is_dotted(), "classical input produced a dotted part");
            p.value()
        })
        .collect()
}

fn int(k: &sqsym::Coeff) -> i64 {
    assert!(k.is_integer(), "non-integer coefficient {k}");
    i64::try_from(k.to_integer()).unwrap()
}

pub fn lin_of(e: &Expr) -> Lin {
    e.terms().map(|(c, k)| (from_dotted(c), int(k))).collect()
}

pub fn lin2_of(t: &TensorExpr) -> Lin2 {
    t.terms()
        .map(|((a, b), k)| ((from_dotted(a), from_dotted(b)), int(k)))
        .collect()
}

pub fn expr_of(basis: Basis, l: &Lin) -> Expr {
    Expr::from_terms(
        basis,
        l.iter()
            .map(|(c, &k)| (to_dotted(c), sqsym::Coeff::from_integer(k.into()))),
    )
}

/// Compares every classical operation of degree at most `max_degree` with the
/// library; returns a description of each disagreement.
pub fn classical_mismatches(max_degree: u32) -> Vec<String> {
    use sqsym::hopf::{antipode_l, antipode_m, coproduct_l, coproduct_m, product_l, product_m};
    let mut bad = Vec::new();
    let all: Vec<Comp> = (0..=max_degree).flat_map(compositions).collect();
    for a in &all {
        let da = to_dotted(a);
        if lin2_of(&coproduct_m(&da)) != m_coproduct(a) {
            bad.push(format!("coproduct M{da}"));
        }
        if lin2_of(&coproduct_l(&da)) != f_coproduct(a) {
            bad.push(format!("coproduct L{da}"));
        }
        if lin_of(&antipode_m(&da)) != m_antipode(a) {
            bad.push(format!("antipode M{da}"));
        }
        if lin_of(&antipode_l(&da)) != f_antipode(a) {
            bad.push(format!("antipode L{da}"));
        }
        for b in &all {
            if a.iter().sum::<u32>() + b.iter().sum::<u32>() > max_degree {
                continue;
            }
            let db = to_dotted(b);
            if lin_of(&product_m(&da, &db)) != m_product(a, b) {
                bad.push(format!("product M{da} M{db}"));
            }
            if lin_of(&product_l(&da, &db)) != f_product(a, b) {
                bad.push(format!("product L{da} L{db}"));
            }
        }
    }
    bad
}

/// Dot-free Schur expansions of degree at most `max_degree` that disagree with standard tableaux.
pub fn classical_schur_mismatches(max_degree: u32) -> Vec<String> {
    use sqsym::superschur::{schur_to_l, Superpartition};
    let mut bad = Vec::new();
    for n in 0..=max_degree {
        for lambda in partitions(n) {
            let sp = Superpartition::new(vec![], lambda.clone()).unwrap();
            let got = schur_to_l(&sp, &Superpartition::empty()).unwrap();
            if lin_of(&got) != schur_fundamental(&lambda) {
                bad.push(format!("s{sp}"));
            }
        }
    }
    bad
}
