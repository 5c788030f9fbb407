//! Linear combinations of basis elements over exact rationals, and changes of basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{weak_leq, compositions_of, Cursor, DottedComposition};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Which basis an [`Expr`] is written in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Basis {
    /// Monomial.
    M,
    /// Fundamental.
    L,
    /// Cofundamental.
    Lbar,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::L => "L",
            Basis::Lbar => "Lbar",
        }
    }

    fn latex(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::L => "L",
            Basis::Lbar => "\\bar{L}",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(Basis::M),
            "L" => Ok(Basis::L),
            "Lbar" => Ok(Basis::Lbar),
            _ => Err(Error::parse(0, format!("unknown basis `{s}`"))),
        }
    }
}

pub(crate) fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// `(-1)^k`.
pub(crate) fn sign_coeff(odd: bool) -> Coeff {
    if odd {
        -Coeff::one()
    } else {
        Coeff::one()
    }
}

/// A finite linear combination of basis elements, tagged with its basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expr {
    basis: Basis,
    terms: BTreeMap<DottedComposition, Coeff>,
}

impl Expr {
    pub fn zero(basis: Basis) -> Self {
        Expr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element indexed by `comp`.
    pub fn basis_element(basis: Basis, comp: DottedComposition) -> Self {
        let mut e = Self::zero(basis);
        e.terms.insert(comp, Coeff::one());
        e
    }

    /// `1`, the basis element of the empty composition.
    pub fn unit(basis: Basis) -> Self {
        Self::basis_element(basis, DottedComposition::empty())
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (DottedComposition, Coeff)>,
    {
        let mut e = Self::zero(basis);
        for (c, k) in terms {
            e.add_term(c, k);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DottedComposition, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, comp: &DottedComposition) -> Coeff {
        self.terms.get(comp).cloned().unwrap_or_else(Coeff::zero)
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

    pub fn add_term(&mut self, comp: DottedComposition, k: Coeff) {
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(comp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `k * other` into `self`.
    pub fn add_scaled(&mut self, other: &Expr, k: &Coeff) -> Result<()> {
        self.check_basis(other)?;
        for (c, v) in &other.terms {
            self.add_term(c.clone(), v * k);
        }
        Ok(())
    }

    pub fn add(&self, other: &Expr) -> Result<Expr> {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Expr) -> Result<Expr> {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one())?;
        Ok(out)
    }

    pub fn scale(&self, k: &Coeff) -> Expr {
        if k.is_zero() {
            return Self::zero(self.basis);
        }
        Expr {
            basis: self.basis,
            terms: self.terms.iter().map(|(c, v)| (c.clone(), v * k)).collect(),
        }
    }

    pub fn neg(&self) -> Expr {
        self.scale(&-Coeff::one())
    }

    /// Coefficient of the empty composition.
    pub fn counit(&self) -> Coeff {
        self.coefficient(&DottedComposition::empty())
    }

    /// The set of bidegrees `(n, m)` present among the terms.
    pub fn degrees(&self) -> BTreeSet<(u32, u32)> {
        self.terms.keys().map(|c| c.degrees()).collect()
    }

    fn check_basis(&self, other: &Expr) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        Ok(())
    }

    pub(crate) fn expect_basis(&self, basis: Basis, op: &'static str) -> Result<()> {
        if self.basis != basis {
            return Err(Error::UnsupportedBasis {
                op,
                basis: self.basis,
            });
        }
        Ok(())
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<F>(&self, target: Basis, mut f: F) -> Result<Expr>
    where
        F: FnMut(&DottedComposition) -> Result<Expr>,
    {
        let mut out = Expr::zero(target);
        for (c, k) in &self.terms {
            out.add_scaled(&f(c)?, k)?;
        }
        Ok(out)
    }

    pub fn to_plain(&self) -> String {
        render(self.terms.iter(), |c| format!("{}{}", self.basis, c), false)
    }

    pub fn to_latex(&self) -> String {
        render(
            self.terms.iter(),
            |c| format!("{}_{{{}}}", self.basis.latex(), c.to_latex()),
            true,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ExprJson::from(self)).expect("expression serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Expr> {
        let raw: ExprJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::parse(0, format!("invalid expression JSON: {e}")))?;
        raw.try_into()
    }
}

/// Formats a rational coefficient; `latex` selects `\frac`.
pub(crate) fn format_coeff(k: &Coeff, latex: bool) -> String {
    if k.is_integer() {
        k.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", k.numer(), k.denom())
    } else {
        format!("{}/{}", k.numer(), k.denom())
    }
}

/// Joins `coefficient * label` terms with ` + ` and ` - `.
pub(crate) fn render<'a, K: 'a, I, F>(terms: I, label: F, latex: bool) -> String
where
    I: Iterator<Item = (&'a K, &'a Coeff)>,
    F: Fn(&K) -> String,
{
    let mut out = String::new();
    for (i, (key, k)) in terms.enumerate() {
        let negative = k.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = k.abs();
        if !abs.is_one() {
            out.push_str(&format_coeff(&abs, latex));
            out.push_str(if latex { " " } else { "*" });
        }
        out.push_str(&label(key));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    comp: DottedComposition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct ExprJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

fn term_json(comp: &DottedComposition, k: &Coeff) -> TermJson {
    TermJson {
        comp: comp.clone(),
        num: k.numer().to_string(),
        den: k.denom().to_string(),
    }
}

fn parse_coeff(num: &str, den: &str) -> Result<Coeff> {
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid numerator `{num}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid denominator `{den}`")))?;
    if d.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl From<&Expr> for ExprJson {
    fn from(e: &Expr) -> Self {
        ExprJson {
            basis: e.basis,
            terms: e.terms.iter().map(|(c, k)| term_json(c, k)).collect(),
        }
    }
}

impl TryFrom<ExprJson> for Expr {
    type Error = Error;

    fn try_from(raw: ExprJson) -> Result<Expr> {
        let mut e = Expr::zero(raw.basis);
        for t in raw.terms {
            check_parts(&t.comp)?;
            e.add_term(t.comp, parse_coeff(&t.num, &t.den)?);
        }
        Ok(e)
    }
}

fn check_parts(c: &DottedComposition) -> Result<()> {
    if c.parts().iter().any(|p| !p.is_dotted() && p.value() == 0) {
        return Err(Error::ZeroPlainPart);
    }
    Ok(())
}

/// Parses `[coef*]B[comp]` terms joined by `+` and `-`, e.g. `2*L[1,d2] - M[3]`.
///
/// All terms must share one basis. A coefficient is an integer or `p/q`.
impl FromStr for Expr {
    type Err = Error;

    /// `0` alone is the zero of the M basis; zero carries no other basis in text.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Expr::zero(Basis::M));
        }
        let mut cur = Cursor::new(s);
        let mut out: Option<Expr> = None;
        let mut first = true;
        loop {
            let mut k = Coeff::one();
            if cur.eat('-') {
                k = -k;
            } else if !cur.eat('+') && !first {
                break;
            }
            first = false;
            cur.skip_ws();
            if matches!(cur.peek(), Some((_, c)) if c.is_ascii_digit()) {
                let num = cur.digits()?;
                let mut value = coeff(i64::from(num));
                if cur.eat('/') {
                    let start = cur.position();
                    let den = cur.digits()?;
                    if den == 0 {
                        return Err(Error::parse(start, "zero denominator"));
                    }
                    value /= coeff(i64::from(den));
                }
                cur.expect('*')?;
                k *= value;
            }
            cur.skip_ws();
            let start = cur.position();
            let basis = if cur.rest().starts_with("Lbar") {
                cur.advance(4);
                Basis::Lbar
            } else if cur.rest().starts_with('L') {
                cur.advance(1);
                Basis::L
            } else if cur.rest().starts_with('M') {
                cur.advance(1);
                Basis::M
            } else {
                return Err(Error::parse(start, "expected a basis name M, L or Lbar"));
            };
            let comp = cur.composition()?;
            let e = out.get_or_insert_with(|| Expr::zero(basis));
            if e.basis != basis {
                return Err(Error::BasisMismatch {
                    left: e.basis,
                    right: basis,
                });
            }
            e.add_term(comp, k);
        }
        if !cur.at_end() {
            let (pos, c) = cur.peek().expect("not at end");
            return Err(Error::parse(pos, format!("unexpected `{c}`")));
        }
        out.ok_or_else(|| Error::parse(0, "empty expression"))
    }
}

/// Rewrites an expression in the L basis into the M basis.
pub fn l_to_m(e: &Expr) -> Result<Expr> {
    e.expect_basis(Basis::L, "L_to_M")?;
    e.map_linear(Basis::M, |alpha| {
        Ok(Expr::from_terms(
            Basis::M,
            alpha
                .strong_refinements()
                .into_iter()
                .map(|b| (b, Coeff::one())),
        ))
    })
}

/// `M_α = Σ_{β≼α} (-1)^{ℓ(β)-ℓ(α)} L_β`.
pub fn m_to_l_element(alpha: &DottedComposition) -> Expr {
    let len = alpha.len();
    Expr::from_terms(
        Basis::L,
        alpha
            .strong_refinements()
            .into_iter()
            .map(|b| {
                let odd = (b.len() - len) % 2 == 1;
                (b, sign_coeff(odd))
            }),
    )
}

pub fn m_to_l(e: &Expr) -> Result<Expr> {
    e.expect_basis(Basis::M, "M_to_L")?;
    e.map_linear(Basis::L, |alpha| Ok(m_to_l_element(alpha)))
}

/// `L̄_α = Σ_{β⊴α} M_β`.
pub fn cofundamental_to_m(alpha: &DottedComposition) -> Expr {
    let (n, m) = alpha.degrees();
    Expr::from_terms(
        Basis::M,
        compositions_of(n, m)
            .into_iter()
            .filter(|b| weak_leq(b, alpha))
            .map(|b| (b, Coeff::one())),
    )
}

pub fn lbar_to_m(e: &Expr) -> Result<Expr> {
    e.expect_basis(Basis::Lbar, "Lbar_to_M")?;
    e.map_linear(Basis::M, |alpha| Ok(cofundamental_to_m(alpha)))
}

/// Converts between bases. Only `L ↔ M` and `Lbar → M` are available.
pub fn convert(e: &Expr, to: Basis) -> Result<Expr> {
    match (e.basis, to) {
        (a, b) if a == b => Ok(e.clone()),
        (Basis::L, Basis::M) => l_to_m(e),
        (Basis::M, Basis::L) => m_to_l(e),
        (Basis::Lbar, Basis::M) => lbar_to_m(e),
        (Basis::Lbar, Basis::L) => m_to_l(&lbar_to_m(e)?),
        (from, _) => Err(Error::UnsupportedBasis {
            op: "convert",
            basis: from,
        }),
    }
}

/// A linear combination of tensors `A_β ⊗ B_γ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorExpr {
    bases: (Basis, Basis),
    terms: BTreeMap<(DottedComposition, DottedComposition), Coeff>,
}

impl TensorExpr {
    pub fn zero(bases: (Basis, Basis)) -> Self {
        TensorExpr {
            bases,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(bases: (Basis, Basis)) -> Self {
        let mut t = Self::zero(bases);
        t.add_term(DottedComposition::empty(), DottedComposition::empty(), Coeff::one());
        t
    }

    pub fn bases(&self) -> (Basis, Basis) {
        self.bases
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(DottedComposition, DottedComposition), &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, left: &DottedComposition, right: &DottedComposition) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
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

    pub fn add_term(&mut self, left: DottedComposition, right: DottedComposition, k: Coeff) {
        if k.is_zero() {
            return;
        }
        let slot = self.terms.entry((left, right)).or_insert_with(Coeff::zero);
        *slot += k;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `k · (a ⊗ b)`.
    pub fn add_product(&mut self, a: &Expr, b: &Expr, k: &Coeff) -> Result<()> {
        if (a.basis, b.basis) != self.bases {
            return Err(Error::BasisMismatch {
                left: self.bases.0,
                right: a.basis,
            });
        }
        for (ca, ka) in &a.terms {
            for (cb, kb) in &b.terms {
                self.add_term(ca.clone(), cb.clone(), ka * kb * k);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorExpr) -> Result<TensorExpr> {
        if self.bases != other.bases {
            return Err(Error::BasisMismatch {
                left: self.bases.0,
                right: other.bases.0,
            });
        }
        let mut out = self.clone();
        for ((l, r), k) in &other.terms {
            out.add_term(l.clone(), r.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Coeff) -> TensorExpr {
        let mut out = Self::zero(self.bases);
        for ((l, r), v) in &self.terms {
            out.add_term(l.clone(), r.clone(), v * k);
        }
        out
    }

    /// Applies linear maps to each slot: `Σ k f(a) ⊗ g(b)`.
    pub fn map_slots<F, G>(&self, bases: (Basis, Basis), mut f: F, mut g: G) -> Result<TensorExpr>
    where
        F: FnMut(&DottedComposition) -> Result<Expr>,
        G: FnMut(&DottedComposition) -> Result<Expr>,
    {
        let mut out = Self::zero(bases);
        for ((l, r), k) in &self.terms {
            out.add_product(&f(l)?, &g(r)?, k)?;
        }
        Ok(out)
    }

    /// Contracts with a bilinear map `Σ k μ(a, b)`.
    pub fn contract<F>(&self, target: Basis, mut mu: F) -> Result<Expr>
    where
        F: FnMut(&DottedComposition, &DottedComposition) -> Result<Expr>,
    {
        let mut out = Expr::zero(target);
        for ((l, r), k) in &self.terms {
            out.add_scaled(&mu(l, r)?, k)?;
        }
        Ok(out)
    }

    pub fn to_plain(&self) -> String {
        let (a, b) = self.bases;
        render(
            self.terms.iter(),
            |(l, r)| format!("{a}{l} ⊗ {b}{r}"),
            false,
        )
    }

    pub fn to_latex(&self) -> String {
        let (a, b) = self.bases;
        render(
            self.terms.iter(),
            |(l, r)| {
                format!(
                    "{}_{{{}}} \\otimes {}_{{{}}}",
                    a.latex(),
                    l.to_latex(),
                    b.latex(),
                    r.to_latex()
                )
            },
            true,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((l, r), k)| {
                serde_json::json!({
                    "left": l,
                    "right": r,
                    "num": k.numer().to_string(),
                    "den": k.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "bases": [self.bases.0, self.bases.1],
            "terms": terms,
        })
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

/// `(a⊗b)(c⊗d) = (-1)^{m_b m_c} ac ⊗ bd`, extended bilinearly.
///
/// `mul(basis, x, y)` multiplies two basis elements of `basis`.
pub fn koszul_mul<F>(t1: &TensorExpr, t2: &TensorExpr, mul: F) -> Result<TensorExpr>
where
    F: Fn(Basis, &DottedComposition, &DottedComposition) -> Result<Expr>,
{
    let (lb, rb) = t1.bases;
    if t2.bases != t1.bases {
        return Err(Error::BasisMismatch {
            left: lb,
            right: t2.bases.0,
        });
    }
    let mut out = TensorExpr::zero(t1.bases);
    for ((a, b), k1) in &t1.terms {
        for ((c, d), k2) in &t2.terms {
            let odd = b.fermionic_degree() * c.fermionic_degree() % 2 == 1;
            let k = k1 * k2 * sign_coeff(odd);
            out.add_product(&mul(lb, a, c)?, &mul(rb, b, d)?, &k)?;
        }
    }
    Ok(out)
}
