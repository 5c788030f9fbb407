//! Dotted compositions, their D/E/F statistics and the two refinement orders.
//!
//! A dotted composition is a finite sequence of parts, each either a positive
//! integer or a dotted nonnegative integer. The text form is `[2,d3,1]`, with
//! `d` marking a dotted part.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One entry of a dotted composition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DottedPart {
    #[serde(rename = "v")]
    value: u32,
    #[serde(rename = "dot")]
    dotted: bool,
}

impl DottedPart {
    pub fn new(value: u32, dotted: bool) -> Result<Self> {
        if !dotted && value == 0 {
            return Err(Error::ZeroPlainPart);
        }
        Ok(DottedPart { value, dotted })
    }

    /// A non-dotted part. Panics on zero.
    pub fn plain(value: u32) -> Self {
        assert!(value > 0, "non-dotted part must be at least 1");
        DottedPart {
            value,
            dotted: false,
        }
    }

    pub fn dotted(value: u32) -> Self {
        DottedPart {
            value,
            dotted: true,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn is_dotted(self) -> bool {
        self.dotted
    }

    /// Number of positions the part occupies in the D/E/F encoding: `value + η`.
    pub fn width(self) -> u32 {
        self.value + u32::from(self.dotted)
    }

    /// The fused entry `a + b` of a near-concatenation; `None` when both are dotted.
    pub fn fuse(self, other: DottedPart) -> Option<DottedPart> {
        if self.dotted && other.dotted {
            return None;
        }
        Some(DottedPart {
            value: self.value + other.value,
            dotted: self.dotted || other.dotted,
        })
    }

    pub fn to_latex(self) -> String {
        if self.dotted {
            format!("\\dot{{{}}}", self.value)
        } else {
            self.value.to_string()
        }
    }
}

// Ordered by value, with a dotted part before the non-dotted part of equal value.
impl Ord for DottedPart {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then(other.dotted.cmp(&self.dotted))
    }
}

impl PartialOrd for DottedPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DottedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dotted {
            write!(f, "d{}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// The D, E, F and F⁻ sets of a dotted composition.
///
/// With partial sums `P_i = Σ_{j≤i} (α_j + η_j)`: `d` holds `P_1, …, P_{ℓ-1}`,
/// `e` the integers strictly inside `(P_{i-1}, P_i)` for dotted `α_i`, and `f`
/// the `P_i` with `α_i` dotted. `f_minus` drops the largest element of `f`
/// when it is not in `d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DefSets {
    pub d: BTreeSet<u32>,
    pub e: BTreeSet<u32>,
    pub f: BTreeSet<u32>,
    pub f_minus: BTreeSet<u32>,
}

/// A finite sequence of dotted parts; the index set of every basis.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DottedComposition {
    parts: Vec<DottedPart>,
}

/// Structural flags computed by [`DottedComposition::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_column: bool,
    pub is_maximal: bool,
    pub maximal_strong_coarsening: DottedComposition,
}

impl DottedComposition {
    pub fn new(parts: Vec<DottedPart>) -> Self {
        DottedComposition { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a composition from `(value, dotted)` pairs.
    pub fn from_pairs(pairs: &[(u32, bool)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(v, d)| DottedPart::new(v, d))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn parts(&self) -> &[DottedPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<DottedPart> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<DottedPart> {
        self.parts.last().copied()
    }

    pub fn total_degree(&self) -> u32 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn fermionic_degree(&self) -> u32 {
        self.parts.iter().filter(|p| p.dotted).count() as u32
    }

    /// `(n, m)`: total degree and number of dotted parts.
    pub fn degrees(&self) -> (u32, u32) {
        (self.total_degree(), self.fermionic_degree())
    }

    /// The 0/1 indicator sequence of dotted positions.
    pub fn eta(&self) -> Vec<u8> {
        self.parts.iter().map(|p| u8::from(p.dotted)).collect()
    }

    pub fn def_sets(&self) -> DefSets {
        let mut sets = DefSets::default();
        let mut prev = 0u32;
        let last = self.parts.len().saturating_sub(1);
        for (i, part) in self.parts.iter().enumerate() {
            let next = prev + part.width();
            if i < last {
                sets.d.insert(next);
            }
            if part.dotted {
                sets.e.extend(prev + 1..next);
                sets.f.insert(next);
            }
            prev = next;
        }
        sets.f_minus = sets.f.clone();
        if let Some(&top) = sets.f.iter().next_back() {
            if !sets.d.contains(&top) {
                sets.f_minus.remove(&top);
            }
        }
        sets
    }

    /// Inverse of [`def_sets`](Self::def_sets): the unique composition of
    /// degree `(n, m)` with the given D and F sets.
    pub fn from_def_sets(n: u32, m: u32, d: &BTreeSet<u32>, f: &BTreeSet<u32>) -> Result<Self> {
        let size = n + m;
        let inconsistent = || Error::InconsistentSets {
            n,
            m,
            d: d.iter().copied().collect(),
            f: f.iter().copied().collect(),
        };
        if f.len() != m as usize {
            return Err(inconsistent());
        }
        if size == 0 {
            return if d.is_empty() {
                Ok(Self::empty())
            } else {
                Err(inconsistent())
            };
        }
        if d.iter().any(|&x| x == 0 || x >= size) {
            return Err(inconsistent());
        }
        if f.iter().any(|x| !d.contains(x) && *x != size) {
            return Err(inconsistent());
        }
        let mut parts = Vec::with_capacity(d.len() + 1);
        let mut prev = 0;
        for &cut in d.iter().chain(std::iter::once(&size)) {
            let width = cut - prev;
            let part = if f.contains(&cut) {
                DottedPart::dotted(width - 1)
            } else {
                DottedPart::plain(width)
            };
            parts.push(part);
            prev = cut;
        }
        Ok(Self::new(parts))
    }

    pub fn reverse(&self) -> Self {
        Self::new(self.parts.iter().rev().copied().collect())
    }

    /// `α·β`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::new(parts)
    }

    /// `α⊙β`: fuses the last part of `self` with the first part of `other`.
    ///
    /// Returns `None` when both boundary parts are dotted. With an empty operand
    /// there is nothing to fuse and the result is the plain concatenation.
    pub fn near_concat(&self, other: &Self) -> Option<Self> {
        let (Some(last), Some(first)) = (self.last(), other.first()) else {
            return Some(self.concat(other));
        };
        let fused = last.fuse(first)?;
        let mut parts = self.parts[..self.len() - 1].to_vec();
        parts.push(fused);
        parts.extend_from_slice(&other.parts[1..]);
        Some(Self::new(parts))
    }

    /// Splits into columns `α¹ ⊙ α² ⊙ … ⊙ αˡ`, each column having all
    /// non-dotted entries equal to 1.
    pub fn column_decomposition(&self) -> Vec<Self> {
        let mut columns = Vec::new();
        if self.is_empty() {
            return columns;
        }
        let mut current = Vec::new();
        for part in &self.parts {
            if part.dotted {
                current.push(*part);
                continue;
            }
            current.push(DottedPart::plain(1));
            for _ in 1..part.value {
                columns.push(Self::new(std::mem::take(&mut current)));
                current.push(DottedPart::plain(1));
            }
        }
        columns.push(Self::new(current));
        columns
    }

    /// All non-dotted entries equal 1.
    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|p| p.dotted || p.value == 1)
    }

    /// No two consecutive non-dotted entries.
    pub fn is_maximal(&self) -> bool {
        self.parts
            .windows(2)
            .all(|w| w[0].dotted || w[1].dotted)
    }

    /// The unique maximal composition strongly coarsening `self`: every run of
    /// consecutive non-dotted entries is summed.
    pub fn maximal_strong_coarsening(&self) -> Self {
        let mut parts: Vec<DottedPart> = Vec::with_capacity(self.len());
        for &part in &self.parts {
            match parts.last_mut() {
                Some(prev) if !prev.dotted && !part.dotted => prev.value += part.value,
                _ => parts.push(part),
            }
        }
        Self::new(parts)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            is_column: self.is_column(),
            is_maximal: self.is_maximal(),
            maximal_strong_coarsening: self.maximal_strong_coarsening(),
        }
    }

    /// All `β` with `β ≼ self`, sorted.
    ///
    /// Each non-dotted part splits independently into an integer composition;
    /// dotted parts never change.
    pub fn strong_refinements(&self) -> Vec<Self> {
        let mut acc: Vec<Vec<DottedPart>> = vec![Vec::new()];
        for part in &self.parts {
            let pieces: Vec<Vec<DottedPart>> = if part.dotted {
                vec![vec![*part]]
            } else {
                integer_compositions(part.value)
                    .into_iter()
                    .map(|c| c.into_iter().map(DottedPart::plain).collect())
                    .collect()
            };
            acc = acc
                .iter()
                .flat_map(|prefix| {
                    pieces.iter().map(move |piece| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(piece);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<Self> = acc.into_iter().map(Self::new).collect();
        out.sort();
        out
    }

    /// All `γ` with `self ⊴ γ`, sorted.
    pub fn weak_coarsenings(&self) -> Vec<Self> {
        let mut out = BTreeSet::new();
        let mut current = Vec::new();
        coarsen_from(&self.parts, 0, &mut current, &mut out);
        out.into_iter().collect()
    }

    pub fn to_latex(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_latex()).collect();
        format!("({})", inner.join(","))
    }
}

fn coarsen_from(
    parts: &[DottedPart],
    start: usize,
    current: &mut Vec<DottedPart>,
    out: &mut BTreeSet<DottedComposition>,
) {
    if start == parts.len() {
        out.insert(DottedComposition::new(current.clone()));
        return;
    }
    let mut value = 0;
    let mut dots = 0;
    for end in start..parts.len() {
        value += parts[end].value;
        dots += u32::from(parts[end].dotted);
        if dots > 1 {
            break;
        }
        current.push(DottedPart {
            value,
            dotted: dots == 1,
        });
        coarsen_from(parts, end + 1, current, out);
        current.pop();
    }
}

/// `β ≼ α`: `α` is obtained from `β` by summing adjacent non-dotted parts.
///
/// Decided through the D/E/F criterion; compositions of different degrees are
/// incomparable.
pub fn strong_leq(beta: &DottedComposition, alpha: &DottedComposition) -> bool {
    if beta.degrees() != alpha.degrees() {
        return false;
    }
    let a = alpha.def_sets();
    let b = beta.def_sets();
    a.d.is_subset(&b.d) && a.e == b.e && a.f == b.f
}

/// `β ⊴ α`: `α` is obtained from `β` by summing consecutive blocks, each with
/// at most one dotted part, a block sum being dotted iff the block holds a
/// dotted part.
pub fn weak_leq(beta: &DottedComposition, alpha: &DottedComposition) -> bool {
    if beta.degrees() != alpha.degrees() {
        return false;
    }
    let b = beta.parts();
    let a = alpha.parts();
    // reach[i][j]: b[..i] can be blocked into a[..j].
    let mut reach = vec![vec![false; a.len() + 1]; b.len() + 1];
    reach[0][0] = true;
    for j in 0..a.len() {
        for i in 0..b.len() {
            if !reach[i][j] {
                continue;
            }
            let mut value = 0;
            let mut dots = 0;
            for k in i..b.len() {
                value += b[k].value;
                dots += u32::from(b[k].dotted);
                if dots > 1 || value > a[j].value {
                    break;
                }
                if value == a[j].value && (dots == 1) == a[j].dotted {
                    reach[k + 1][j + 1] = true;
                }
            }
        }
    }
    reach[b.len()][a.len()]
}

/// All compositions of `n` (ordered, positive parts), in lexicographic order.
pub fn integer_compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in integer_compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every dotted composition of total degree `n` and fermionic degree `m`, sorted.
pub fn compositions_of(n: u32, m: u32) -> Vec<DottedComposition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    build_compositions(n, m, &mut current, &mut out);
    out.sort();
    out
}

fn build_compositions(
    n: u32,
    m: u32,
    current: &mut Vec<DottedPart>,
    out: &mut Vec<DottedComposition>,
) {
    if n == 0 && m == 0 {
        out.push(DottedComposition::new(current.clone()));
    }
    for v in 1..=n {
        current.push(DottedPart::plain(v));
        build_compositions(n - v, m, current, out);
        current.pop();
    }
    if m > 0 {
        for v in 0..=n {
            current.push(DottedPart::dotted(v));
            build_compositions(n - v, m - 1, current, out);
            current.pop();
        }
    }
}

/// All dotted compositions with `n + m ≤ max_size` and `m ≤ max_fermionic`,
/// sorted by size then by the composition order.
pub fn universe(max_size: u32, max_fermionic: u32) -> Vec<DottedComposition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        for m in 0..=max_fermionic.min(size) {
            out.extend(compositions_of(size - m, m));
        }
    }
    out
}

impl fmt::Display for DottedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for DottedComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cursor = Cursor::new(s);
        let comp = cursor.composition()?;
        cursor.skip_ws();
        if let Some((pos, c)) = cursor.peek() {
            return Err(Error::parse(pos, format!("unexpected trailing `{c}`")));
        }
        Ok(comp)
    }
}

/// Character cursor shared by the small text grammars of the crate.
/// Whitespace between tokens is ignored.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    pub(crate) fn peek(&self) -> Option<(usize, char)> {
        self.src[self.pos..].chars().next().map(|c| (self.pos, c))
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some((_, c)) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    pub(crate) fn eat(&mut self, expected: char) -> bool {
        self.skip_ws();
        match self.peek() {
            Some((_, c)) if c == expected => {
                self.pos += c.len_utf8();
                true
            }
            _ => false,
        }
    }

    pub(crate) fn expect(&mut self, expected: char) -> Result<()> {
        if self.eat(expected) {
            return Ok(());
        }
        Err(match self.peek() {
            Some((pos, c)) => Error::parse(pos, format!("expected `{expected}`, found `{c}`")),
            None => Error::parse(self.pos, format!("expected `{expected}`, found end of input")),
        })
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    pub(crate) fn digits(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while let Some((_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some((pos, c)) => Error::parse(pos, format!("expected a number, found `{c}`")),
                None => Error::parse(self.pos, "expected a number, found end of input"),
            });
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "number too large"))
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn advance(&mut self, bytes: usize) {
        self.pos += bytes;
    }

    pub(crate) fn part(&mut self) -> Result<DottedPart> {
        self.skip_ws();
        let start = self.pos;
        let dotted = self.eat('d');
        let value = self.digits()?;
        DottedPart::new(value, dotted).map_err(|_| Error::parse(start, "non-dotted part must be at least 1"))
    }

    pub(crate) fn composition(&mut self) -> Result<DottedComposition> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if self.eat(']') {
            return Ok(DottedComposition::new(parts));
        }
        loop {
            parts.push(self.part()?);
            if self.eat(']') {
                break;
            }
            self.expect(',')?;
        }
        Ok(DottedComposition::new(parts))
    }
}
