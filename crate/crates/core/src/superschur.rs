//! Superpartitions, horizontal strips of type s, s-tableaux, and the
//! expansion of superspace Schur functions into fundamentals.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::algebra::{sign_coeff, Basis, Expr};
use crate::composition::{Cursor, DottedComposition, DottedPart};
use crate::error::{Error, Result};
use crate::realize::{SuperMonomial, SuperPolynomial};

/// A pair `(Λᵃ; Λˢ)`: distinct fermionic parts (circled rows, one may be 0)
/// and an ordinary partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Superpartition {
    fermionic: Vec<u32>,
    bosonic: Vec<u32>,
}

impl Superpartition {
    pub fn new(mut fermionic: Vec<u32>, mut bosonic: Vec<u32>) -> Result<Self> {
        fermionic.sort_unstable_by(|a, b| b.cmp(a));
        bosonic.sort_unstable_by(|a, b| b.cmp(a));
        if fermionic.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSuperpartition(
                "fermionic parts must be distinct".into(),
            ));
        }
        if bosonic.contains(&0) {
            return Err(Error::InvalidSuperpartition(
                "bosonic parts must be positive".into(),
            ));
        }
        Ok(Superpartition { fermionic, bosonic })
    }

    pub fn empty() -> Self {
        Superpartition {
            fermionic: Vec::new(),
            bosonic: Vec::new(),
        }
    }

    /// Strictly decreasing.
    pub fn fermionic(&self) -> &[u32] {
        &self.fermionic
    }

    pub fn bosonic(&self) -> &[u32] {
        &self.bosonic
    }

    pub fn circles(&self) -> usize {
        self.fermionic.len()
    }

    /// `Λ*` without zero parts.
    pub fn star(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self
            .fermionic
            .iter()
            .chain(&self.bosonic)
            .copied()
            .filter(|&p| p > 0)
            .collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }

    /// `|Λ*|`.
    pub fn degree(&self) -> u32 {
        self.fermionic.iter().chain(&self.bosonic).sum()
    }

    /// Row (1-based, from the top) of the circle ending a row of length `len`.
    fn circle_row(&self, len: u32) -> usize {
        1 + self
            .fermionic
            .iter()
            .chain(&self.bosonic)
            .filter(|&&p| p > len)
            .count()
    }

    /// Rows of the circles, listed from the lowest circle up.
    pub fn circle_rows(&self) -> Vec<usize> {
        self.fermionic.iter().rev().map(|&p| self.circle_row(p)).collect()
    }

    /// Diagram rows from the top: `(length, circled)`. Circled rows sit above
    /// non-circled rows of the same length.
    pub fn rows(&self) -> Vec<(u32, bool)> {
        let mut rows: Vec<(u32, bool)> = self
            .fermionic
            .iter()
            .map(|&p| (p, true))
            .chain(self.bosonic.iter().map(|&p| (p, false)))
            .collect();
        rows.sort_by(|a, b| b.cmp(a));
        rows
    }

    /// Whether `self` fits inside `outer` (diagrams and circle counts).
    pub fn fits_in(&self, outer: &Superpartition) -> bool {
        let inner = self.star();
        let out = outer.star();
        inner.len() <= out.len()
            && inner.iter().zip(&out).all(|(a, b)| a <= b)
            && self.circles() <= outer.circles()
    }

    fn without_fermionic(&self, part: u32) -> Superpartition {
        let fermionic = self.fermionic.iter().copied().filter(|&p| p != part).collect();
        let mut bosonic = self.bosonic.clone();
        if part > 0 {
            bosonic.push(part);
        }
        Superpartition::new(fermionic, bosonic).expect("still valid")
    }
}

impl fmt::Display for Superpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.fermionic), join(&self.bosonic))
    }
}

impl FromStr for Superpartition {
    type Err = Error;

    /// Parses `(3,0;5,3,2)`, `(;2)`, `(0;)` or `(;)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect('(')?;
        let mut lists = [Vec::new(), Vec::new()];
        for (k, list) in lists.iter_mut().enumerate() {
            let close = if k == 0 { ';' } else { ')' };
            if cur.eat(close) {
                continue;
            }
            loop {
                list.push(cur.digits()?);
                if cur.eat(close) {
                    break;
                }
                cur.expect(',')?;
            }
        }
        if !cur.at_end() {
            let (pos, c) = cur.peek().expect("not at end");
            return Err(Error::parse(pos, format!("unexpected trailing `{c}`")));
        }
        let [fermionic, bosonic] = lists;
        if fermionic.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSuperpartition(
                "fermionic parts must be strictly decreasing".into(),
            ));
        }
        if bosonic.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSuperpartition(
                "bosonic parts must be weakly decreasing".into(),
            ));
        }
        Superpartition::new(fermionic, bosonic)
    }
}

/// Partitions of `n` with parts at most `max`, decreasing.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Strictly decreasing lists of `m` values in `0..=max` summing to at most `budget`.
fn distinct_parts(m: usize, max: i64, budget: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut v = max.min(i64::from(budget));
    while v >= (m as i64) - 1 {
        let first = v as u32;
        for mut rest in distinct_parts(m - 1, v - 1, budget - first) {
            rest.insert(0, first);
            out.push(rest);
        }
        v -= 1;
    }
    out
}

/// All superpartitions with `|Λ*| = degree` and `m` circles.
pub fn superpartitions(degree: u32, m: usize) -> Vec<Superpartition> {
    let mut out = Vec::new();
    for ferm in distinct_parts(m, i64::from(degree), degree) {
        let rest = degree - ferm.iter().sum::<u32>();
        for bos in partitions(rest, rest) {
            out.push(Superpartition {
                fermionic: ferm.clone(),
                bosonic: bos,
            });
        }
    }
    out.sort();
    out
}

/// Cells of `outer / inner` when it is a horizontal strip, as `(row, column)`.
fn horizontal_strip(inner: &[u32], outer: &[u32]) -> Option<Vec<(usize, u32)>> {
    let at = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    if inner.len() > outer.len() {
        return None;
    }
    let mut cells = Vec::new();
    for i in 0..outer.len() {
        let (a, b) = (at(inner, i), at(outer, i));
        if a > b {
            return None;
        }
        if i > 0 && b > at(inner, i - 1) {
            return None;
        }
        cells.extend((a + 1..=b).map(|c| (i + 1, c)));
    }
    Some(cells)
}

/// The circle rule shared by both strip kinds: the i-th circle from below
/// stays in its row, or drops one row when the strip has a cell there.
fn circles_follow(inner: &Superpartition, outer: &Superpartition, cells: &[(usize, u32)]) -> bool {
    let strip_rows: BTreeSet<usize> = cells.iter().map(|&(r, _)| r).collect();
    let before = inner.circle_rows();
    let after = outer.circle_rows();
    before.len() == after.len()
        && before
            .iter()
            .zip(&after)
            .all(|(&r, &s)| s == r + usize::from(strip_rows.contains(&r)))
}

/// Checks that `outer / inner` is a bosonic horizontal `ℓ`-strip of type s.
pub fn is_bosonic_strip(inner: &Superpartition, outer: &Superpartition, ell: u32) -> bool {
    if inner.circles() != outer.circles() || outer.degree() != inner.degree() + ell {
        return false;
    }
    match horizontal_strip(&inner.star(), &outer.star()) {
        Some(cells) => circles_follow(inner, outer, &cells),
        None => false,
    }
}

/// Checks that `outer / inner` is a fermionic horizontal `ℓ`-strip of type s
/// and returns the column of the new circle.
pub fn fermionic_strip_column(inner: &Superpartition, outer: &Superpartition, ell: u32) -> Option<u32> {
    if outer.circles() != inner.circles() + 1 || outer.degree() != inner.degree() + ell {
        return None;
    }
    let cells = horizontal_strip(&inner.star(), &outer.star())?;
    let columns: BTreeSet<u32> = cells.iter().map(|&(_, c)| c).collect();
    let c = (1..).find(|c| !columns.contains(c)).expect("finite strip");
    if !outer.fermionic.contains(&(c - 1)) {
        return None;
    }
    circles_follow(inner, &outer.without_fermionic(c - 1), &cells).then_some(c)
}

type StripKey = (Superpartition, u32, bool);

static STRIP_CACHE: Mutex<Option<HashMap<StripKey, Vec<Superpartition>>>> = Mutex::new(None);

fn strips_cached(gamma: &Superpartition, ell: u32, fermionic: bool) -> Vec<Superpartition> {
    let key = (gamma.clone(), ell, fermionic);
    if let Some(v) = STRIP_CACHE
        .lock()
        .expect("cache lock")
        .get_or_insert_with(HashMap::new)
        .get(&key)
    {
        return v.clone();
    }
    let m = gamma.circles() + usize::from(fermionic);
    let found: Vec<Superpartition> = superpartitions(gamma.degree() + ell, m)
        .into_iter()
        .filter(|g| {
            if fermionic {
                fermionic_strip_column(gamma, g, ell).is_some()
            } else {
                is_bosonic_strip(gamma, g, ell)
            }
        })
        .collect();
    STRIP_CACHE
        .lock()
        .expect("cache lock")
        .get_or_insert_with(HashMap::new)
        .insert(key, found.clone());
    found
}

/// All `Γ'` with `Γ'/Γ` a bosonic horizontal `ℓ`-strip of type s.
pub fn bosonic_strips(gamma: &Superpartition, ell: u32) -> Vec<Superpartition> {
    strips_cached(gamma, ell, false)
}

/// All `Γ'` with `Γ'/Γ` a fermionic horizontal `ℓ`-strip of type s, with the new circle's column.
pub fn fermionic_strips(gamma: &Superpartition, ell: u32) -> Vec<(Superpartition, u32)> {
    strips_cached(gamma, ell, true)
        .into_iter()
        .map(|g| {
            let c = fermionic_strip_column(gamma, &g, ell).expect("filtered");
            (g, c)
        })
        .collect()
}

/// One letter's weight: a value, dotted for fermionic steps. Non-dotted 0 is allowed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightEntry {
    pub value: u32,
    pub dotted: bool,
}

impl WeightEntry {
    pub fn plain(value: u32) -> Self {
        WeightEntry {
            value,
            dotted: false,
        }
    }

    pub fn dotted(value: u32) -> Self {
        WeightEntry {
            value,
            dotted: true,
        }
    }
}

impl fmt::Display for WeightEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dotted {
            write!(f, "d{}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// An s-tableau: a chain of superpartitions with its weight and fillings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct STableau {
    chain: Vec<Superpartition>,
    weight: Vec<WeightEntry>,
    cells: BTreeMap<(usize, u32), usize>,
    /// Circle fillings from the lowest circle up; `None` for circles of the inner shape.
    circles: Vec<Option<usize>>,
}

impl STableau {
    /// Builds the tableau of a chain `Ω = Λ₍₀₎, …, Λ₍ₙ₎ = Λ` with weight `α₁, …, αₙ`.
    pub fn from_chain(chain: Vec<Superpartition>, weight: Vec<WeightEntry>) -> Result<Self> {
        if chain.len() != weight.len() + 1 {
            return Err(Error::InvalidTableau(format!(
                "{} shapes do not match {} weight entries",
                chain.len(),
                weight.len()
            )));
        }
        let mut cells = BTreeMap::new();
        let mut circles: Vec<Option<usize>> = vec![None; chain[0].circles()];
        for (i, w) in weight.iter().enumerate() {
            let (inner, outer) = (&chain[i], &chain[i + 1]);
            let letter = i + 1;
            let strip = horizontal_strip(&inner.star(), &outer.star());
            if w.dotted {
                let c = fermionic_strip_column(inner, outer, w.value).ok_or_else(|| {
                    Error::InvalidTableau(format!("{outer}/{inner} is not a fermionic {}-strip", w.value))
                })?;
                // the new circle's index among the circles counted from below
                let at = outer.fermionic.iter().rev().position(|&p| p == c - 1).expect("new circle");
                circles.insert(at, Some(letter));
            } else if !is_bosonic_strip(inner, outer, w.value) {
                return Err(Error::InvalidTableau(format!(
                    "{outer}/{inner} is not a bosonic {}-strip",
                    w.value
                )));
            }
            for cell in strip.expect("checked") {
                cells.insert(cell, letter);
            }
        }
        Ok(STableau {
            chain,
            weight,
            cells,
            circles,
        })
    }

    pub fn chain(&self) -> &[Superpartition] {
        &self.chain
    }

    pub fn weight(&self) -> &[WeightEntry] {
        &self.weight
    }

    pub fn inner(&self) -> &Superpartition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &Superpartition {
        self.chain.last().expect("nonempty chain")
    }

    /// Letters in the cells, keyed by `(row, column)`.
    pub fn cells(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.cells
    }

    /// Filled circles read from top to bottom.
    pub fn circle_word(&self) -> Vec<usize> {
        self.circles.iter().rev().flatten().copied().collect()
    }

    pub fn inv(&self) -> usize {
        let w = self.circle_word();
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    /// `(-1)^{inv(T)}`.
    pub fn inv_sign(&self) -> i8 {
        if self.inv().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Every non-dotted weight entry equals 1.
    pub fn is_dot_standard(&self) -> bool {
        self.weight.iter().all(|w| w.dotted || w.value == 1)
    }

    fn row_of(&self, letter: usize) -> Option<usize> {
        self.cells.iter().find(|(_, &l)| l == letter).map(|(&(r, _), _)| r)
    }

    /// `comp(T)` of a dot-standard tableau.
    pub fn comp(&self) -> Result<DottedComposition> {
        if !self.is_dot_standard() {
            return Err(Error::NotDotStandard);
        }
        let mut parts = Vec::new();
        let mut run = 0;
        for (i, w) in self.weight.iter().enumerate() {
            if w.dotted {
                parts.push(DottedPart::dotted(w.value));
                continue;
            }
            run += 1;
            let descent = match self.weight.get(i + 1) {
                None => false,
                Some(next) if next.dotted => true,
                Some(_) => self.row_of(i + 2) > self.row_of(i + 1),
            };
            if descent {
                parts.push(DottedPart::plain(run));
                run = 0;
            }
        }
        if run > 0 {
            parts.push(DottedPart::plain(run));
        }
        Ok(DottedComposition::new(parts))
    }

    /// `std(T)`: each bosonic letter's cells become consecutive letters from
    /// left to right, and letters of empty bosonic steps are dropped.
    pub fn standardize(&self) -> STableau {
        let mut chain = vec![self.chain[0].clone()];
        let mut weight = Vec::new();
        for (i, w) in self.weight.iter().enumerate() {
            let outer = &self.chain[i + 1];
            if w.dotted {
                chain.push(outer.clone());
                weight.push(*w);
                continue;
            }
            let mut cells: Vec<(usize, u32)> = self
                .cells
                .iter()
                .filter(|(_, &l)| l == i + 1)
                .map(|(&cell, _)| cell)
                .collect();
            cells.sort_by_key(|&(r, c)| (c, r));
            for &(row, _) in &cells {
                let current = chain.last().expect("nonempty").clone();
                let mut target = current.star();
                if target.len() < row {
                    target.push(0);
                }
                target[row - 1] += 1;
                let next = bosonic_strips(&current, 1)
                    .into_iter()
                    .find(|g| g.star() == target)
                    .expect("a single cell of a strip is itself a strip");
                chain.push(next);
                weight.push(WeightEntry::plain(1));
            }
            debug_assert_eq!(chain.last(), Some(outer));
        }
        STableau::from_chain(chain, weight).expect("standardization keeps strips valid")
    }

    /// ASCII picture: letters in cells, `(k)` for a circle filled with `k`,
    /// `( )` for an unfilled circle, `.` for cells of the inner shape.
    pub fn render(&self) -> String {
        let outer = self.outer();
        let inner_star = self.inner().star();
        let circle_rows = outer.circle_rows();
        let mut lines = Vec::new();
        for (r, (len, circled)) in outer.rows().iter().enumerate() {
            let row = r + 1;
            let mut tokens: Vec<String> = (1..=*len)
                .map(|c| match self.cells.get(&(row, c)) {
                    Some(l) => l.to_string(),
                    None if inner_star.get(r).is_some_and(|&v| c <= v) => ".".into(),
                    None => "?".into(),
                })
                .collect();
            if *circled {
                let idx = circle_rows.iter().position(|&x| x == row).expect("circle row");
                tokens.push(match self.circles[idx] {
                    Some(l) => format!("({l})"),
                    None => "( )".into(),
                });
            }
            lines.push(tokens.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for STableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All s-tableaux of shape `Λ/Ω` with the given weight.
pub fn enumerate_s_tableaux(lambda: &Superpartition, omega: &Superpartition, weight: &[WeightEntry]) -> Vec<STableau> {
    let mut out = Vec::new();
    let mut chain = vec![omega.clone()];
    fn go(lambda: &Superpartition, weight: &[WeightEntry], chain: &mut Vec<Superpartition>, out: &mut Vec<Vec<Superpartition>>) {
        let current = chain.last().expect("nonempty").clone();
        let step = chain.len() - 1;
        if step == weight.len() {
            if current == *lambda {
                out.push(chain.clone());
            }
            return;
        }
        let w = weight[step];
        let next: Vec<Superpartition> = if w.dotted {
            fermionic_strips(&current, w.value).into_iter().map(|(g, _)| g).collect()
        } else {
            bosonic_strips(&current, w.value)
        };
        for g in next.into_iter().filter(|g| g.fits_in(lambda)) {
            chain.push(g);
            go(lambda, weight, chain, out);
            chain.pop();
        }
    }
    go(lambda, weight, &mut chain, &mut out);
    out.into_iter()
        .map(|c| STableau::from_chain(c, weight.to_vec()).expect("valid by construction"))
        .collect()
}

/// All dot-standard s-tableaux of shape `Λ/Ω`.
pub fn dot_standard_tableaux(lambda: &Superpartition, omega: &Superpartition) -> Vec<STableau> {
    let mut out = Vec::new();
    let mut chain = vec![omega.clone()];
    let mut weight = Vec::new();
    fn go(
        lambda: &Superpartition,
        chain: &mut Vec<Superpartition>,
        weight: &mut Vec<WeightEntry>,
        out: &mut Vec<STableau>,
    ) {
        let current = chain.last().expect("nonempty").clone();
        if current == *lambda {
            out.push(STableau::from_chain(chain.clone(), weight.clone()).expect("valid by construction"));
            return;
        }
        let mut steps: Vec<(Superpartition, WeightEntry)> = bosonic_strips(&current, 1)
            .into_iter()
            .map(|g| (g, WeightEntry::plain(1)))
            .collect();
        if current.circles() < lambda.circles() {
            for v in 0..=lambda.degree() - current.degree() {
                steps.extend(fermionic_strips(&current, v).into_iter().map(|(g, _)| (g, WeightEntry::dotted(v))));
            }
        }
        for (g, w) in steps {
            if !g.fits_in(lambda) {
                continue;
            }
            chain.push(g);
            weight.push(w);
            go(lambda, chain, weight, out);
            weight.pop();
            chain.pop();
        }
    }
    go(lambda, &mut chain, &mut weight, &mut out);
    out
}

fn check_shapes(lambda: &Superpartition, omega: &Superpartition) -> Result<()> {
    if !omega.fits_in(lambda) {
        return Err(Error::IncompatibleShape(format!("{omega} is not contained in {lambda}")));
    }
    Ok(())
}

/// `s_{Λ/Ω} = Σ_T (-1)^{inv(T)} L_{comp(T)}` over dot-standard tableaux.
pub fn schur_to_l(lambda: &Superpartition, omega: &Superpartition) -> Result<Expr> {
    check_shapes(lambda, omega)?;
    let mut e = Expr::zero(Basis::L);
    for t in dot_standard_tableaux(lambda, omega) {
        e.add_term(t.comp()?, sign_coeff(t.inv_sign() < 0));
    }
    Ok(e)
}

/// Every weight of `n` letters whose values sum to `total` with exactly `dots` dotted entries.
fn weights(n: usize, total: u32, dots: usize) -> Vec<Vec<WeightEntry>> {
    if n == 0 {
        return if total == 0 && dots == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for v in 0..=total {
        for dotted in [false, true] {
            if dotted && dots == 0 {
                continue;
            }
            for mut rest in weights(n - 1, total - v, dots - usize::from(dotted)) {
                rest.insert(0, WeightEntry { value: v, dotted });
                out.push(rest);
            }
        }
    }
    out
}

/// `s_{Λ/Ω}` in `n` variables, straight from the tableau generating sum.
pub fn realize_s(lambda: &Superpartition, omega: &Superpartition, nvars: usize) -> Result<SuperPolynomial> {
    check_shapes(lambda, omega)?;
    let total = lambda.degree() - omega.degree();
    let dots = lambda.circles() - omega.circles();
    let mut p = SuperPolynomial::zero(nvars);
    for w in weights(nvars, total, dots) {
        let tableaux = enumerate_s_tableaux(lambda, omega, &w);
        if tableaux.is_empty() {
            continue;
        }
        let theta: Vec<usize> = (1..=nvars).filter(|&i| w[i - 1].dotted).collect();
        let exps: Vec<u32> = w.iter().map(|e| e.value).collect();
        let (m, _) = SuperMonomial::new(nvars, &theta, &exps).expect("distinct θ");
        for t in tableaux {
            p.add_term(m.clone(), sign_coeff(t.inv_sign() < 0));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::l_to_m;
    use crate::realize::realize_expr;

    fn sp(s: &str) -> Superpartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_diagram() {
        let l = sp("(3,0;5,3,2)");
        assert_eq!(l.to_string(), "(3,0;5,3,2)");
        assert_eq!(l.star(), vec![5, 3, 3, 2]);
        assert_eq!(l.rows(), vec![(5, false), (3, true), (3, false), (2, false), (0, true)]);
        assert_eq!(l.circle_rows(), vec![5, 2]);
        assert_eq!(sp("(;)"), Superpartition::empty());
        assert!("(1,1;)".parse::<Superpartition>().is_err());
        assert!("(0,1;)".parse::<Superpartition>().is_err());
        assert!("(;1,2)".parse::<Superpartition>().is_err());
        assert!(matches!("(;x)".parse::<Superpartition>(), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn strip_examples() {
        let g = sp("(;2)");
        assert_eq!(bosonic_strips(&g, 0), vec![g.clone()]);
        assert_eq!(bosonic_strips(&g, 1), vec![sp("(;2,1)"), sp("(;3)")]);
        let e = Superpartition::empty();
        assert_eq!(fermionic_strips(&e, 0), vec![(sp("(0;)"), 1)]);
        assert_eq!(fermionic_strips(&e, 2), vec![(sp("(2;)"), 3)]);
        for (g, _) in fermionic_strips(&sp("(1;2)"), 2) {
            assert_eq!(g.circles(), 2);
        }
        // a circle at the origin moves down when its row gains a cell
        assert_eq!(bosonic_strips(&sp("(0;)"), 1), vec![sp("(0;1)")]);
    }

    fn chain(items: &[&str]) -> Vec<Superpartition> {
        items.iter().map(|s| sp(s)).collect()
    }

    #[test]
    fn chain_tableau() {
        let t = STableau::from_chain(
            chain(&["(;)", "(;2)", "(;3)", "(2;4)", "(0;4,3)", "(1,0;5,3)"]),
            vec![
                WeightEntry::plain(2),
                WeightEntry::plain(1),
                WeightEntry::dotted(3),
                WeightEntry::plain(1),
                WeightEntry::dotted(2),
            ],
        )
        .unwrap();
        assert_eq!(t.circle_word(), vec![5, 3]);
        assert_eq!(t.inv_sign(), -1);
        assert_eq!(t.render(), "1 1 2 3 5\n3 3 4\n5 (5)\n(3)");
        assert!(matches!(t.comp(), Err(Error::NotDotStandard)));
        let s = t.standardize();
        assert!(s.is_dot_standard());
        assert_eq!(s.outer(), t.outer());
        assert_eq!(s.inv_sign(), t.inv_sign());
        assert_eq!(s.standardize(), s);
    }

    #[test]
    fn dot_standard_comp_example() {
        let t = STableau::from_chain(
            chain(&[
                "(;)",
                "(;1)",
                "(;2)",
                "(2;2)",
                "(2;3)",
                "(2;3,1)",
                "(2;4,1)",
                "(1;4,3)",
                "(1,0;4,4)",
                "(1,0;4,4,1)",
            ]),
            [1, 1, 102, 1, 1, 1, 1, 101, 1]
                .iter()
                .map(|&v| if v > 100 { WeightEntry::dotted(v - 100) } else { WeightEntry::plain(v) })
                .collect(),
        )
        .unwrap();
        assert_eq!(t.render(), "1 2 4 6\n3 3 7 8\n5 (3)\n9\n(8)");
        assert_eq!(t.comp().unwrap(), "[2,d2,1,2,1,d1,1]".parse().unwrap());
        assert_eq!(t.circle_word(), vec![3, 8]);
        assert_eq!(t.inv_sign(), 1);
        assert_eq!(t.standardize(), t);
    }

    #[test]
    fn schur_example() {
        let got = schur_to_l(&sp("(1;2,2)"), &Superpartition::empty()).unwrap();
        let expected: Expr = "L[d1,2,2] + L[d1,1,2,1] + L[1,d1,1,2] + L[1,d1,2,1] + L[2,d1,2] \
            + L[1,1,d1,1,1] + L[2,1,d1,1] + L[1,2,d1,1] + L[2,2,d1] + L[1,2,1,d1]"
            .parse()
            .unwrap();
        assert_eq!(got, expected);
        assert_eq!(dot_standard_tableaux(&sp("(1;2,2)"), &Superpartition::empty()).len(), 10);
    }

    #[test]
    fn degenerate_shapes() {
        let l = sp("(1;2)");
        assert_eq!(schur_to_l(&l, &l).unwrap(), Expr::unit(Basis::L));
        assert_eq!(schur_to_l(&sp("(;2)"), &Superpartition::empty()).unwrap(), "L[2]".parse().unwrap());
        assert!(matches!(
            schur_to_l(&sp("(;2)"), &sp("(;3)")),
            Err(Error::IncompatibleShape(_))
        ));
        let t = enumerate_s_tableaux(&l, &l, &[WeightEntry::plain(0), WeightEntry::plain(0)]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].inv(), 0);
    }

    #[test]
    fn small_realizations() {
        let e = Superpartition::empty();
        let p = realize_s(&sp("(;1)"), &e, 2).unwrap();
        assert_eq!(p, realize_expr(&"M[1]".parse().unwrap(), 2));
        let p = realize_s(&sp("(0;)"), &e, 2).unwrap();
        assert_eq!(p, realize_expr(&"M[d0]".parse().unwrap(), 2));
    }

    #[test]
    fn generating_sum_matches_expansion() {
        let e = Superpartition::empty();
        for l in ["(1;2,2)", "(1;1)", "(0;2)", "(1,0;1)", "(2;1)"] {
            let l = sp(l);
            let n = (l.degree() as usize) + l.circles();
            let lhs = realize_s(&l, &e, n).unwrap();
            let rhs = realize_expr(&l_to_m(&schur_to_l(&l, &e).unwrap()).unwrap(), n);
            assert_eq!(lhs, rhs, "{l}");
        }
    }
}
