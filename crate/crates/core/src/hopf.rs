//! Products, coproducts and antipodes on the monomial and fundamental bases,
//! the auxiliary `•` and `⊙` products, and a machine check of the Hopf axioms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{koszul_mul, l_to_m, m_to_l, sign_coeff, Basis, Coeff, Expr, TensorExpr};
use crate::composition::{universe, DottedComposition, DottedPart};
use crate::error::{Error, Result};
use crate::realize::{realize_expr, realize_l, split_tensor};
use crate::shuffles::{fundamental_paths, overlapping_shuffles};

fn signed(sign: i8) -> Coeff {
    sign_coeff(sign < 0)
}

pub fn product_m(alpha: &DottedComposition, beta: &DottedComposition) -> Expr {
    Expr::from_terms(
        Basis::M,
        overlapping_shuffles(alpha, beta)
            .into_iter()
            .map(|s| (s.comp, signed(s.sign))),
    )
}

pub fn product_l(alpha: &DottedComposition, beta: &DottedComposition) -> Expr {
    Expr::from_terms(
        Basis::L,
        fundamental_paths(alpha, beta)
            .into_iter()
            .map(|s| (s.comp, signed(s.sign))),
    )
}

/// Product of basis elements in `basis` (M or L).
pub fn product_basis(basis: Basis, alpha: &DottedComposition, beta: &DottedComposition) -> Result<Expr> {
    match basis {
        Basis::M => Ok(product_m(alpha, beta)),
        Basis::L => Ok(product_l(alpha, beta)),
        Basis::Lbar => Err(Error::UnsupportedBasis {
            op: "product",
            basis,
        }),
    }
}

/// Bilinear product of two expressions in the same basis.
pub fn multiply(a: &Expr, b: &Expr) -> Result<Expr> {
    bilinear(a, b, |x, y| product_basis(a.basis(), x, y))
}

fn bilinear<F>(a: &Expr, b: &Expr, f: F) -> Result<Expr>
where
    F: Fn(&DottedComposition, &DottedComposition) -> Result<Expr>,
{
    if a.basis() != b.basis() {
        return Err(Error::BasisMismatch {
            left: a.basis(),
            right: b.basis(),
        });
    }
    let mut out = Expr::zero(a.basis());
    for (x, kx) in a.terms() {
        for (y, ky) in b.terms() {
            out.add_scaled(&f(x, y)?, &(kx * ky))?;
        }
    }
    Ok(out)
}

/// `Δ(M_α) = Σ_{β·γ=α} M_β ⊗ M_γ`.
pub fn coproduct_m(alpha: &DottedComposition) -> TensorExpr {
    deconcatenations(Basis::M, alpha)
}

fn deconcatenations(basis: Basis, alpha: &DottedComposition) -> TensorExpr {
    let mut t = TensorExpr::zero((basis, basis));
    let parts = alpha.parts();
    for k in 0..=parts.len() {
        t.add_term(
            DottedComposition::new(parts[..k].to_vec()),
            DottedComposition::new(parts[k..].to_vec()),
            Coeff::one(),
        );
    }
    t
}

/// `Δ(L_α)`: deconcatenations, plus every split of one non-dotted part
/// `a + b` into `(…, a) ⊗ (b, …)`.
pub fn coproduct_l(alpha: &DottedComposition) -> TensorExpr {
    let mut t = deconcatenations(Basis::L, alpha);
    let parts = alpha.parts();
    for (i, part) in parts.iter().enumerate() {
        if part.is_dotted() {
            continue;
        }
        for a in 1..part.value() {
            let mut left = parts[..i].to_vec();
            left.push(DottedPart::plain(a));
            let mut right = vec![DottedPart::plain(part.value() - a)];
            right.extend_from_slice(&parts[i + 1..]);
            t.add_term(
                DottedComposition::new(left),
                DottedComposition::new(right),
                Coeff::one(),
            );
        }
    }
    t
}

pub fn coproduct_basis(basis: Basis, alpha: &DottedComposition) -> Result<TensorExpr> {
    match basis {
        Basis::M => Ok(coproduct_m(alpha)),
        Basis::L => Ok(coproduct_l(alpha)),
        Basis::Lbar => Err(Error::UnsupportedBasis {
            op: "coproduct",
            basis,
        }),
    }
}

pub fn coproduct(e: &Expr) -> Result<TensorExpr> {
    let mut out = TensorExpr::zero((e.basis(), e.basis()));
    for (c, k) in e.terms() {
        out = out.add(&coproduct_basis(e.basis(), c)?.scale(k))?;
    }
    Ok(out)
}

/// `(-1)^{ℓ + C(m,2)}`.
fn antipode_sign(alpha: &DottedComposition) -> Coeff {
    let m = alpha.fermionic_degree() as usize;
    sign_coeff((alpha.len() + m * m.saturating_sub(1) / 2) % 2 == 1)
}

/// `S(M_α) = (-1)^{ℓ(α) + C(m,2)} Σ_{γ ⊵ Rev(α)} M_γ`.
pub fn antipode_m(alpha: &DottedComposition) -> Expr {
    let sign = antipode_sign(alpha);
    Expr::from_terms(
        Basis::M,
        alpha
            .reverse()
            .weak_coarsenings()
            .into_iter()
            .map(|g| (g, sign.clone())),
    )
}

/// Antipode of a column: signed sum of `L_β` over maximal `β ⊵ Rev(α)`.
pub fn antipode_l_column(alpha: &DottedComposition) -> Result<Expr> {
    if !alpha.is_column() {
        return Err(Error::NotAColumn(alpha.to_string()));
    }
    let sign = antipode_sign(alpha);
    Ok(Expr::from_terms(
        Basis::L,
        alpha
            .reverse()
            .weak_coarsenings()
            .into_iter()
            .filter(|b| b.is_maximal())
            .map(|b| (b, sign.clone())),
    ))
}

/// `S(L_γ)` from the column decomposition `γ = α¹ ⊙ ⋯ ⊙ αˡ`:
/// `(-1)^{Σ_{i<j} m_i m_j} S(L_{αˡ}) • ⋯ • S(L_{α¹})`.
pub fn antipode_l(gamma: &DottedComposition) -> Expr {
    let columns = gamma.column_decomposition();
    let mut out = Expr::unit(Basis::L);
    let mut seen = 0;
    let mut crossings = 0;
    for col in &columns {
        let m = col.fermionic_degree();
        crossings += seen * m;
        seen += m;
        let s = antipode_l_column(col).expect("column decomposition yields columns");
        out = bullet(&s, &out).expect("both in L");
    }
    out.scale(&sign_coeff(crossings % 2 == 1))
}

/// How `antipode` computes in the L basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AntipodeRoute {
    Columns,
    Monomial,
}

pub fn antipode(e: &Expr, route: AntipodeRoute) -> Result<Expr> {
    match (e.basis(), route) {
        (Basis::M, _) => e.map_linear(Basis::M, |c| Ok(antipode_m(c))),
        (Basis::L, AntipodeRoute::Columns) => e.map_linear(Basis::L, |c| Ok(antipode_l(c))),
        (Basis::L, AntipodeRoute::Monomial) => {
            let m = l_to_m(e)?;
            m_to_l(&m.map_linear(Basis::M, |c| Ok(antipode_m(c)))?)
        }
        (basis, _) => Err(Error::UnsupportedBasis {
            op: "antipode",
            basis,
        }),
    }
}

/// `M_α • M_β = M_{α·β}` and `L_α • L_β = L_{α·β}`.
pub fn bullet(a: &Expr, b: &Expr) -> Result<Expr> {
    check_bullet_basis(a)?;
    bilinear(a, b, |x, y| Ok(Expr::basis_element(a.basis(), x.concat(y))))
}

fn check_bullet_basis(a: &Expr) -> Result<()> {
    if a.basis() == Basis::Lbar {
        return Err(Error::UnsupportedBasis {
            op: "bullet/odot",
            basis: Basis::Lbar,
        });
    }
    Ok(())
}

/// `M_α ⊙ M_β = M_{α⊙β}`, zero when both boundary parts are dotted or an operand is empty.
pub fn odot_m(alpha: &DottedComposition, beta: &DottedComposition) -> Expr {
    if alpha.is_empty() || beta.is_empty() {
        return Expr::zero(Basis::M);
    }
    match alpha.near_concat(beta) {
        Some(g) => Expr::basis_element(Basis::M, g),
        None => Expr::zero(Basis::M),
    }
}

/// `L_α ⊙ L_β`: `L_{α⊙β} - L_{α·β}` when both boundary parts are non-dotted,
/// otherwise computed through the monomial basis.
pub fn odot_l(alpha: &DottedComposition, beta: &DottedComposition) -> Expr {
    match (alpha.last(), beta.first()) {
        (Some(x), Some(y)) if !x.is_dotted() && !y.is_dotted() => {
            let fused = alpha.near_concat(beta).expect("plain boundary");
            Expr::from_terms(
                Basis::L,
                [(fused, Coeff::one()), (alpha.concat(beta), -Coeff::one())],
            )
        }
        _ => odot_l_via_m(alpha, beta),
    }
}

pub(crate) fn odot_l_via_m(alpha: &DottedComposition, beta: &DottedComposition) -> Expr {
    let a = l_to_m(&Expr::basis_element(Basis::L, alpha.clone())).expect("L");
    let b = l_to_m(&Expr::basis_element(Basis::L, beta.clone())).expect("L");
    let m = bilinear(&a, &b, |x, y| Ok(odot_m(x, y))).expect("M");
    m_to_l(&m).expect("M")
}

pub fn odot(a: &Expr, b: &Expr) -> Result<Expr> {
    check_bullet_basis(a)?;
    match a.basis() {
        Basis::M => bilinear(a, b, |x, y| Ok(odot_m(x, y))),
        _ => bilinear(a, b, |x, y| Ok(odot_l(x, y))),
    }
}

/// Replaceable operations, so the verification suite can be pointed at a
/// deliberately broken implementation.
#[derive(Clone, Copy)]
pub struct HopfOps {
    pub antipode_m: fn(&DottedComposition) -> Expr,
    pub antipode_l: fn(&DottedComposition) -> Expr,
}

impl Default for HopfOps {
    fn default() -> Self {
        HopfOps {
            antipode_m,
            antipode_l,
        }
    }
}

/// Largest `n + m` accepted by [`verify_hopf`].
pub const MAX_VERIFY_SIZE: u32 = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub universe: String,
    pub cases: usize,
    pub status: Status,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub checks: Vec<CheckResult>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs `f` on every case in parallel and reports the first failure in input order.
fn run_check<T, F>(name: &str, universe: &str, cases: &[T], f: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> std::result::Result<(), String> + Sync,
{
    let failure = cases
        .par_iter()
        .map(|c| f(c).err())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    CheckResult {
        name: name.to_string(),
        universe: universe.to_string(),
        cases: cases.len(),
        status: if failure.is_some() { Status::Fail } else { Status::Pass },
        counterexample: failure,
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: String, left: &T, right: &T) -> std::result::Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left} != {right}"))
    }
}

/// `Σ S(a₁) a₂` (left) or `Σ a₁ S(a₂)` (right) for a basis element.
fn convolution(basis: Basis, alpha: &DottedComposition, ops: &HopfOps, left: bool) -> Result<Expr> {
    let s = |c: &DottedComposition| match basis {
        Basis::M => (ops.antipode_m)(c),
        _ => (ops.antipode_l)(c),
    };
    let delta = coproduct_basis(basis, alpha)?;
    delta.contract(basis, |a, b| {
        if left {
            multiply(&s(a), &Expr::basis_element(basis, b.clone()))
        } else {
            multiply(&Expr::basis_element(basis, a.clone()), &s(b))
        }
    })
}

type Triple = BTreeMap<(DottedComposition, DottedComposition, DottedComposition), Coeff>;

fn add_triple(t: &mut Triple, key: (DottedComposition, DottedComposition, DottedComposition), k: Coeff) {
    let slot = t.entry(key.clone()).or_insert_with(Coeff::zero);
    *slot += k;
    if slot.is_zero() {
        t.remove(&key);
    }
}

fn coassociativity(basis: Basis, alpha: &DottedComposition) -> Result<bool> {
    let delta = coproduct_basis(basis, alpha)?;
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), k) in delta.terms() {
        for ((x, y), k2) in coproduct_basis(basis, a)?.terms() {
            add_triple(&mut left, (x.clone(), y.clone(), b.clone()), k * k2);
        }
        for ((x, y), k2) in coproduct_basis(basis, b)?.terms() {
            add_triple(&mut right, (a.clone(), x.clone(), y.clone()), k * k2);
        }
    }
    Ok(left == right)
}

fn counit_axioms(basis: Basis, alpha: &DottedComposition) -> Result<bool> {
    let delta = coproduct_basis(basis, alpha)?;
    let mut left = Expr::zero(basis);
    let mut right = Expr::zero(basis);
    for ((a, b), k) in delta.terms() {
        if a.is_empty() {
            left.add_term(b.clone(), k.clone());
        }
        if b.is_empty() {
            right.add_term(a.clone(), k.clone());
        }
    }
    let id = Expr::basis_element(basis, alpha.clone());
    Ok(left == id && right == id)
}

fn bialgebra(basis: Basis, alpha: &DottedComposition, beta: &DottedComposition) -> Result<bool> {
    let lhs = coproduct(&product_basis(basis, alpha, beta)?)?;
    let rhs = koszul_mul(&coproduct_basis(basis, alpha)?, &coproduct_basis(basis, beta)?, |b, x, y| {
        product_basis(b, x, y)
    })?;
    Ok(lhs == rhs)
}

/// Both sides of `S(F•G) = (-1)^{m_F m_G}(S(G)•S(F) + S(G)⊙S(F))` on `M_α, M_β`.
pub fn theorem_bullet_sides(alpha: &DottedComposition, beta: &DottedComposition, s: fn(&DottedComposition) -> Expr) -> (Expr, Expr) {
    let lhs = s(&alpha.concat(beta));
    let (sa, sb) = (s(alpha), s(beta));
    let sign = sign_coeff(alpha.fermionic_degree() * beta.fermionic_degree() % 2 == 1);
    let rhs = bullet(&sb, &sa)
        .and_then(|x| x.add(&odot(&sb, &sa)?))
        .expect("M basis")
        .scale(&sign);
    (lhs, rhs)
}

/// Both sides of `S(F⊙G) = (-1)^{m_F m_G - 1} S(G)⊙S(F)` on `M_α, M_β`.
pub fn theorem_odot_sides(alpha: &DottedComposition, beta: &DottedComposition, s: fn(&DottedComposition) -> Expr) -> (Expr, Expr) {
    let lhs = odot_m(alpha, beta).map_linear(Basis::M, |c| Ok(s(c))).expect("M");
    let sign = sign_coeff((alpha.fermionic_degree() * beta.fermionic_degree()).is_multiple_of(2));
    let rhs = odot(&s(beta), &s(alpha)).expect("M").scale(&sign);
    (lhs, rhs)
}

/// Every pair from `comps` with combined `n + m ≤ max_size` and combined `m ≤ max_fermionic`.
pub fn pairs_within(comps: &[DottedComposition], max_size: u32, max_fermionic: u32) -> Vec<(DottedComposition, DottedComposition)> {
    let size = |c: &DottedComposition| c.total_degree() + c.fermionic_degree();
    let mut out = Vec::new();
    for a in comps {
        for b in comps {
            if size(a) + size(b) <= max_size && a.fermionic_degree() + b.fermionic_degree() <= max_fermionic {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Checks the Hopf structure on every composition with `n + m ≤ max_size`
/// and `m ≤ max_fermionic` (pairs: combined bounds).
pub fn verify_hopf(max_size: u32, max_fermionic: u32) -> Result<HopfReport> {
    verify_hopf_with(max_size, max_fermionic, &HopfOps::default())
}

pub fn verify_hopf_with(max_size: u32, max_fermionic: u32, ops: &HopfOps) -> Result<HopfReport> {
    if max_size > MAX_VERIFY_SIZE {
        return Err(Error::IncompatibleShape(format!(
            "verification is limited to n+m <= {MAX_VERIFY_SIZE}"
        )));
    }
    let comps = universe(max_size, max_fermionic);
    let pairs = pairs_within(&comps, max_size, max_fermionic);
    let nonempty_pairs: Vec<_> = pairs
        .iter()
        .filter(|(a, b)| !a.is_empty() && !b.is_empty())
        .cloned()
        .collect();
    let single = format!("n+m<={max_size}, m<={max_fermionic}");
    let paired = format!("pairs with combined n+m<={max_size}, m<={max_fermionic}");
    let err = |e: Error| e.to_string();
    let mut checks = Vec::new();

    for basis in [Basis::M, Basis::L] {
        for left in [true, false] {
            let side = if left { "left" } else { "right" };
            checks.push(run_check(&format!("convolution_{side}_{basis}"), &single, &comps, |a| {
                let got = convolution(basis, a, ops, left).map_err(err)?;
                let want = Expr::unit(basis).scale(&if a.is_empty() { Coeff::one() } else { Coeff::zero() });
                expect_eq(format!("{basis}{a}"), &got, &want)
            }));
        }
        checks.push(run_check(&format!("coassociativity_{basis}"), &single, &comps, |a| {
            if coassociativity(basis, a).map_err(err)? {
                Ok(())
            } else {
                Err(format!("{basis}{a}"))
            }
        }));
        checks.push(run_check(&format!("counit_{basis}"), &single, &comps, |a| {
            if counit_axioms(basis, a).map_err(err)? {
                Ok(())
            } else {
                Err(format!("{basis}{a}"))
            }
        }));
        checks.push(run_check(&format!("bialgebra_{basis}"), &paired, &pairs, |(a, b)| {
            if bialgebra(basis, a, b).map_err(err)? {
                Ok(())
            } else {
                Err(format!("{basis}{a} * {basis}{b}"))
            }
        }));
    }

    checks.push(run_check("antipode_cross_route", &single, &comps, |g| {
        let l = Expr::basis_element(Basis::L, g.clone());
        let via_m = m_to_l(&l_to_m(&l).map_err(err)?.map_linear(Basis::M, |c| Ok((ops.antipode_m)(c))).map_err(err)?)
            .map_err(err)?;
        expect_eq(format!("S(L{g})"), &(ops.antipode_l)(g), &via_m)
    }));
    checks.push(run_check("product_cross_route", &paired, &pairs, |(a, b)| {
        let l = product_l(a, b);
        let la = l_to_m(&Expr::basis_element(Basis::L, a.clone())).map_err(err)?;
        let lb = l_to_m(&Expr::basis_element(Basis::L, b.clone())).map_err(err)?;
        let via_m = multiply(&la, &lb).map_err(err)?;
        expect_eq(format!("L{a} * L{b}"), &l_to_m(&l).map_err(err)?, &via_m)
    }));
    checks.push(run_check("product_oracle", &paired, &pairs, |(a, b)| {
        let n = (a.total_degree() + a.fermionic_degree() + b.total_degree() + b.fermionic_degree()) as usize;
        let pm = realize_expr(&product_m(a, b), n);
        let ma = realize_expr(&Expr::basis_element(Basis::M, a.clone()), n);
        let mb = realize_expr(&Expr::basis_element(Basis::M, b.clone()), n);
        expect_eq(format!("M{a} * M{b}"), &pm, &ma.mul(&mb).map_err(err)?)?;
        let pl = realize_expr(&product_l(a, b), n);
        let la = realize_l(a, n);
        let lb = realize_l(b, n);
        expect_eq(format!("L{a} * L{b}"), &pl, &la.mul(&lb).map_err(err)?)
    }));
    checks.push(run_check("coproduct_oracle", &single, &comps, |a| {
        let n = (a.total_degree() + a.fermionic_degree()) as usize;
        let split = split_tensor(&realize_l(a, 2 * n), n).map_err(err)?;
        let as_l = split
            .map_slots((Basis::L, Basis::L), |x| Ok(crate::algebra::m_to_l_element(x)), |y| {
                Ok(crate::algebra::m_to_l_element(y))
            })
            .map_err(err)?;
        expect_eq(format!("Delta(L{a})"), &as_l, &coproduct_l(a))
    }));
    checks.push(run_check("theorem_bullet", &paired, &nonempty_pairs, |(a, b)| {
        let (l, r) = theorem_bullet_sides(a, b, ops.antipode_m);
        expect_eq(format!("S(M{a} . M{b})"), &l, &r)
    }));
    checks.push(run_check("theorem_odot", &paired, &nonempty_pairs, |(a, b)| {
        let (l, r) = theorem_odot_sides(a, b, ops.antipode_m);
        expect_eq(format!("S(M{a} o M{b})"), &l, &r)
    }));
    checks.push(run_check("fundamental_bullet", &paired, &pairs, |(a, b)| {
        let la = l_to_m(&Expr::basis_element(Basis::L, a.clone())).map_err(err)?;
        let lb = l_to_m(&Expr::basis_element(Basis::L, b.clone())).map_err(err)?;
        let got = m_to_l(&bullet(&la, &lb).map_err(err)?).map_err(err)?;
        expect_eq(format!("L{a} . L{b}"), &got, &Expr::basis_element(Basis::L, a.concat(b)))
    }));
    let plain_boundary: Vec<_> = nonempty_pairs
        .iter()
        .filter(|(a, b)| !a.last().expect("nonempty").is_dotted() && !b.first().expect("nonempty").is_dotted())
        .cloned()
        .collect();
    checks.push(run_check("fundamental_odot", &paired, &plain_boundary, |(a, b)| {
        let sum = Expr::basis_element(Basis::L, a.concat(b))
            .add(&odot_l_via_m(a, b))
            .map_err(err)?;
        let fused = a.near_concat(b).expect("plain boundary");
        expect_eq(format!("L{a} o L{b}"), &sum, &Expr::basis_element(Basis::L, fused))
    }));
    Ok(HopfReport { checks })
}
