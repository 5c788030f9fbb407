//! Explicit superpolynomials in `N` commuting variables `x_i` and `N`
//! anticommuting variables `θ_i`, used as a brute-force oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::json;

use crate::algebra::{cofundamental_to_m, Basis, Coeff, Expr, TensorExpr};
use crate::composition::{DottedComposition, DottedPart};
use crate::error::{Error, Result};

/// `θ_{t_1} ⋯ θ_{t_k} x_1^{e_1} ⋯ x_N^{e_N}` with `t_1 < ⋯ < t_k`.
///
/// Indices are 1-based; `exponents[i - 1]` is the exponent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SuperMonomial {
    theta: Vec<usize>,
    exponents: Vec<u32>,
}

impl SuperMonomial {
    pub fn one(nvars: usize) -> Self {
        SuperMonomial {
            theta: Vec::new(),
            exponents: vec![0; nvars],
        }
    }

    /// Builds a monomial from an unordered θ list, returning the sign of the
    /// sorting permutation, or `None` if an index repeats.
    pub fn new(nvars: usize, theta: &[usize], exponents: &[u32]) -> Option<(Self, bool)> {
        assert!(exponents.len() == nvars, "exponent vector has wrong length");
        assert!(theta.iter().all(|&t| (1..=nvars).contains(&t)), "θ index out of range");
        let mut sorted = theta.to_vec();
        let mut odd = false;
        // insertion sort counting transpositions
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((
            SuperMonomial {
                theta: sorted,
                exponents: exponents.to_vec(),
            },
            odd,
        ))
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Product with sign; `None` when a θ index repeats.
    fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        let mut theta = Vec::with_capacity(self.theta.len() + other.theta.len());
        let mut odd = false;
        let (mut i, mut j) = (0, 0);
        while i < self.theta.len() || j < other.theta.len() {
            if j == other.theta.len() || (i < self.theta.len() && self.theta[i] < other.theta[j]) {
                theta.push(self.theta[i]);
                i += 1;
            } else if i == self.theta.len() || other.theta[j] < self.theta[i] {
                // other.theta[j] jumps over the remaining entries of self
                if (self.theta.len() - i) % 2 == 1 {
                    odd = !odd;
                }
                theta.push(other.theta[j]);
                j += 1;
            } else {
                return None;
            }
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Some((SuperMonomial { theta, exponents }, odd))
    }

    /// Indices carrying a θ or a positive x exponent, increasing.
    fn support(&self) -> Vec<usize> {
        (1..=self.exponents.len())
            .filter(|&i| self.exponents[i - 1] > 0 || self.theta.binary_search(&i).is_ok())
            .collect()
    }

    /// The composition read off the support, restricted to indices in `range`.
    fn pattern(&self, range: std::ops::RangeInclusive<usize>) -> DottedComposition {
        let parts = self
            .support()
            .into_iter()
            .filter(|i| range.contains(i))
            .map(|i| {
                let e = self.exponents[i - 1];
                if self.theta.binary_search(&i).is_ok() {
                    DottedPart::dotted(e)
                } else {
                    DottedPart::plain(e)
                }
            })
            .collect();
        DottedComposition::new(parts)
    }

    fn render(&self) -> String {
        let mut factors: Vec<String> = self.theta.iter().map(|t| format!("theta[{t}]")).collect();
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x[{}]", i + 1)),
                _ => factors.push(format!("x[{}]^{e}", i + 1)),
            }
        }
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

/// A polynomial in `x_1..x_N` and `θ_1..θ_N` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperPolynomial {
    nvars: usize,
    terms: BTreeMap<SuperMonomial, Coeff>,
}

impl SuperPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SuperPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(SuperMonomial::one(nvars), Coeff::one());
        p
    }

    /// `x_i`.
    pub fn x(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let (m, _) = SuperMonomial::new(nvars, &[], &exps).expect("no θ");
        let mut p = Self::zero(nvars);
        p.add_term(m, Coeff::one());
        p
    }

    /// `θ_i`.
    pub fn theta(nvars: usize, i: usize) -> Self {
        let (m, _) = SuperMonomial::new(nvars, &[i], &vec![0; nvars]).expect("single θ");
        let mut p = Self::zero(nvars);
        p.add_term(m, Coeff::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as `is_zero`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: SuperMonomial, k: Coeff) {
        if k.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Coeff::zero);
        *slot += k;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, k: &Coeff) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, ka) in &self.terms {
            for (b, kb) in &other.terms {
                if let Some((m, odd)) = a.mul(b) {
                    let k = ka * kb;
                    out.add_term(m, if odd { -k } else { k });
                }
            }
        }
        Ok(out)
    }

    /// Terms by decreasing exponent vector, then increasing θ indices.
    fn display_order(&self) -> Vec<(&SuperMonomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.exponents.cmp(&a.exponents).then_with(|| a.theta.cmp(&b.theta)));
        v
    }

    pub fn to_plain(&self) -> String {
        crate::algebra::render(self.display_order().into_iter(), SuperMonomial::render, false)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .display_order()
            .into_iter()
            .map(|(m, k)| {
                let x: Vec<[u64; 2]> = m
                    .exponents
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| [i as u64 + 1, u64::from(e)])
                    .collect();
                json!({
                    "theta": m.theta,
                    "x": x,
                    "num": k.numer().to_string(),
                    "den": k.denom().to_string(),
                })
            })
            .collect();
        json!({ "nvars": self.nvars, "terms": terms })
    }

    pub fn to_latex(&self) -> String {
        crate::algebra::render(
            self.display_order().into_iter(),
            |m| {
                let mut s = String::new();
                for t in &m.theta {
                    s.push_str(&format!("\\theta_{{{t}}}"));
                }
                for (i, &e) in m.exponents.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("x_{{{}}}", i + 1)),
                        _ => s.push_str(&format!("x_{{{}}}^{{{e}}}", i + 1)),
                    }
                }
                if s.is_empty() {
                    s.push('1');
                }
                s
            },
            true,
        )
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

/// Strictly increasing index tuples of length `k` from `1..=n`.
fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(1, n, k, &mut cur, &mut out);
    out
}

/// `M_α` in `N` variables: `Σ_{i_1<⋯<i_l} θ_{i_1}^{η_1}⋯θ_{i_l}^{η_l} x_{i_1}^{α_1}⋯x_{i_l}^{α_l}`.
pub fn realize_m(alpha: &DottedComposition, nvars: usize) -> SuperPolynomial {
    let mut p = SuperPolynomial::zero(nvars);
    for idx in increasing_tuples(nvars, alpha.len()) {
        let mut exps = vec![0; nvars];
        let mut theta = Vec::new();
        for (part, &i) in alpha.parts().iter().zip(&idx) {
            exps[i - 1] = part.value();
            if part.is_dotted() {
                theta.push(i);
            }
        }
        let (m, odd) = SuperMonomial::new(nvars, &theta, &exps).expect("distinct indices");
        debug_assert!(!odd);
        p.add_term(m, Coeff::one());
    }
    p
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Strict,
    Equal,
    Weak,
}

/// `Σ_{i_1 ≤ ⋯ ≤ i_s}` with the relation between `i_k` and `i_{k+1}` given by
/// `rel(k)`, each position `k` contributing `x_{i_k}` or, when `k ∈ f`, `θ_{i_k}`.
fn position_sum<R>(size: u32, f: &std::collections::BTreeSet<u32>, nvars: usize, rel: R) -> SuperPolynomial
where
    R: Fn(u32) -> Step,
{
    let mut p = SuperPolynomial::zero(nvars);
    if size == 0 {
        return SuperPolynomial::one(nvars);
    }
    let mut exps = vec![0u32; nvars];
    let mut theta = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go<R: Fn(u32) -> Step>(
        k: u32,
        prev: usize,
        size: u32,
        f: &std::collections::BTreeSet<u32>,
        nvars: usize,
        rel: &R,
        exps: &mut Vec<u32>,
        theta: &mut Vec<usize>,
        p: &mut SuperPolynomial,
    ) {
        if k > size {
            if let Some((m, odd)) = SuperMonomial::new(nvars, theta, exps) {
                p.add_term(m, if odd { -Coeff::one() } else { Coeff::one() });
            }
            return;
        }
        let range = if k == 1 {
            1..=nvars
        } else {
            match rel(k - 1) {
                Step::Strict => prev + 1..=nvars,
                Step::Equal => prev..=prev,
                Step::Weak => prev..=nvars,
            }
        };
        for i in range {
            let dotted = f.contains(&k);
            if dotted {
                if theta.last() == Some(&i) {
                    continue;
                }
                theta.push(i);
            } else {
                exps[i - 1] += 1;
            }
            go(k + 1, i, size, f, nvars, rel, exps, theta, p);
            if dotted {
                theta.pop();
            } else {
                exps[i - 1] -= 1;
            }
        }
    }
    go(1, 0, size, f, nvars, &rel, &mut exps, &mut theta, &mut p);
    p
}

/// `M_α` through the D/E/F form: weakly increasing indices, strict exactly at `D(α)`.
pub fn realize_m_by_positions(alpha: &DottedComposition, nvars: usize) -> SuperPolynomial {
    let sets = alpha.def_sets();
    let size = alpha.total_degree() + alpha.fermionic_degree();
    position_sum(size, &sets.f, nvars, |k| {
        if sets.d.contains(&k) {
            Step::Strict
        } else {
            Step::Equal
        }
    })
}

/// `L_α` through the D/E/F form: strict at `D(α)`, equal at `E(α)`, weak elsewhere.
pub fn realize_l(alpha: &DottedComposition, nvars: usize) -> SuperPolynomial {
    let sets = alpha.def_sets();
    let size = alpha.total_degree() + alpha.fermionic_degree();
    position_sum(size, &sets.f, nvars, |k| {
        if sets.d.contains(&k) {
            Step::Strict
        } else if sets.e.contains(&k) {
            Step::Equal
        } else {
            Step::Weak
        }
    })
}

/// `L_α` as `Σ_{β≼α} M_β`.
pub fn realize_l_via_m(alpha: &DottedComposition, nvars: usize) -> SuperPolynomial {
    let mut p = SuperPolynomial::zero(nvars);
    for beta in alpha.strong_refinements() {
        p = p.add(&realize_m(&beta, nvars)).expect("same ring");
    }
    p
}

/// Realizes an expression in any basis.
pub fn realize_expr(e: &Expr, nvars: usize) -> SuperPolynomial {
    let mut p = SuperPolynomial::zero(nvars);
    for (c, k) in e.terms() {
        let q = match e.basis() {
            Basis::M => realize_m(c, nvars),
            Basis::L => realize_l(c, nvars),
            Basis::Lbar => realize_expr(&cofundamental_to_m(c), nvars),
        };
        p = p.add(&q.scale(k)).expect("same ring");
    }
    p
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Groups monomials by pattern and checks each group is complete with one coefficient.
fn group_patterns<K, P, C>(p: &SuperPolynomial, pattern: P, copies: C) -> Result<BTreeMap<K, Coeff>>
where
    K: Ord + Clone + fmt::Debug,
    P: Fn(&SuperMonomial) -> K,
    C: Fn(&K) -> usize,
{
    let mut groups: BTreeMap<K, (Coeff, usize)> = BTreeMap::new();
    for (m, k) in p.terms() {
        let key = pattern(m);
        match groups.get_mut(&key) {
            None => {
                groups.insert(key, (k.clone(), 1));
            }
            Some((v, n)) => {
                if v != k {
                    return Err(Error::NotQuasisymmetric(format!(
                        "pattern {key:?} carries coefficients {v} and {k}"
                    )));
                }
                *n += 1;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (key, (k, n)) in groups {
        let want = copies(&key);
        if n != want {
            return Err(Error::NotQuasisymmetric(format!(
                "pattern {key:?} appears {n} times, expected {want}"
            )));
        }
        out.insert(key, k);
    }
    Ok(out)
}

pub fn is_quasisymmetric(p: &SuperPolynomial) -> bool {
    extract_m(p).is_ok()
}

/// Reads the M-expansion of a quasisymmetric polynomial.
pub fn extract_m(p: &SuperPolynomial) -> Result<Expr> {
    let n = p.nvars;
    let groups = group_patterns(p, |m| m.pattern(1..=n), |c: &DottedComposition| binomial(n, c.len()))?;
    Ok(Expr::from_terms(Basis::M, groups))
}

/// Like [`extract_m`], but refuses when compositions of length `needed` could
/// not be told apart in `p`'s ring.
pub fn extract_m_faithful(p: &SuperPolynomial, needed: usize) -> Result<Expr> {
    if needed > p.nvars {
        return Err(Error::FaithfulnessExceeded {
            vars: p.nvars,
            needed,
        });
    }
    extract_m(p)
}

/// Splits the variables into `1..=n1` and `n1+1..=N` and reads the result as
/// an element of the tensor square in the `M⊗M` basis.
pub fn split_tensor(p: &SuperPolynomial, n1: usize) -> Result<TensorExpr> {
    let n = p.nvars;
    let n2 = n - n1;
    let groups = group_patterns(
        p,
        |m| (m.pattern(1..=n1), m.pattern(n1 + 1..=n)),
        |(a, b): &(DottedComposition, DottedComposition)| binomial(n1, a.len()) * binomial(n2, b.len()),
    )?;
    let mut t = TensorExpr::zero((Basis::M, Basis::M));
    for ((a, b), k) in groups {
        t.add_term(a, b, k);
    }
    Ok(t)
}
