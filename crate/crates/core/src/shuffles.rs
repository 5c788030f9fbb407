//! Lattice-path shuffles: overlapping shuffles for monomial products and
//! fundamental paths over dotted permutations for fundamental products.

use std::fmt;

use serde::Serialize;

use crate::composition::{DottedComposition, DottedPart};
use crate::error::{Error, Result};

/// An entry of a dotted permutation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Letter {
    pub value: u32,
    pub dotted: bool,
}

impl Letter {
    pub fn plain(value: u32) -> Self {
        Letter {
            value,
            dotted: false,
        }
    }

    pub fn dotted(value: u32) -> Self {
        Letter {
            value,
            dotted: true,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dotted {
            write!(f, "d{}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A word whose non-dotted entries are pairwise distinct.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct DottedPermutation {
    entries: Vec<Letter>,
}

impl DottedPermutation {
    pub fn new(entries: Vec<Letter>) -> Result<Self> {
        let mut seen: Vec<u32> = entries.iter().filter(|l| !l.dotted).map(|l| l.value).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedValue(w[0]));
        }
        Ok(DottedPermutation { entries })
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// The non-dotted entries, in order.
    pub fn plain_values(&self) -> Vec<u32> {
        self.entries.iter().filter(|l| !l.dotted).map(|l| l.value).collect()
    }
}

impl fmt::Display for DottedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// `comp(w)`.
///
/// A non-dotted entry ends a part when the next non-dotted entry is smaller or
/// when a dotted entry follows it directly. Dotted entries become dotted parts
/// in place.
pub fn comp_of_word(w: &DottedPermutation) -> DottedComposition {
    let e = &w.entries;
    let mut parts = Vec::new();
    let mut run = 0;
    for (i, letter) in e.iter().enumerate() {
        if letter.dotted {
            parts.push(DottedPart::dotted(letter.value));
            continue;
        }
        run += 1;
        let descent = match e.get(i + 1) {
            Some(next) if next.dotted => true,
            _ => e[i + 1..]
                .iter()
                .find(|l| !l.dotted)
                .is_some_and(|next| next.value < letter.value),
        };
        if descent {
            parts.push(DottedPart::plain(run));
            run = 0;
        }
    }
    if run > 0 {
        parts.push(DottedPart::plain(run));
    }
    DottedComposition::new(parts)
}

/// A word representing `α` whose non-dotted entries are `start, start+1, …`.
///
/// Non-dotted parts receive blocks of consecutive values, the rightmost part
/// the smallest, each block increasing. Dotted parts carry their own value.
pub fn represent(alpha: &DottedComposition, start: u32) -> DottedPermutation {
    let mut next = start;
    let mut blocks: Vec<Vec<Letter>> = alpha
        .parts()
        .iter()
        .rev()
        .map(|p| {
            if p.is_dotted() {
                vec![Letter::dotted(p.value())]
            } else {
                let block = (next..next + p.value()).map(Letter::plain).collect();
                next += p.value();
                block
            }
        })
        .collect();
    blocks.reverse();
    DottedPermutation {
        entries: blocks.into_iter().flatten().collect(),
    }
}

/// One step of a grid path.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Horizontal,
    Vertical,
    /// Unit diagonal of an overlapping shuffle.
    Diagonal,
    /// Over a dotted column label, climbing `rows` increasing non-dotted rows.
    RowDiagonal { rows: usize },
    /// Over a dotted row label, crossing `cols` increasing non-dotted columns.
    ColumnDiagonal { cols: usize },
}

/// A signed overlapping shuffle of two compositions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OverlappingShuffle {
    pub steps: Vec<Step>,
    pub comp: DottedComposition,
    pub sign: i8,
}

/// Counts, for each dotted column crossed at height `h`, the dotted rows among the first `h`.
struct DotCounter {
    dotted_rows_prefix: Vec<usize>,
}

impl DotCounter {
    fn new(rows: impl Iterator<Item = bool>) -> Self {
        let mut prefix = vec![0];
        for d in rows {
            let last = *prefix.last().expect("nonempty");
            prefix.push(last + usize::from(d));
        }
        DotCounter {
            dotted_rows_prefix: prefix,
        }
    }

    fn below(&self, height: usize) -> usize {
        self.dotted_rows_prefix[height]
    }
}

/// All overlapping shuffles of `α` (columns) and `β` (rows).
///
/// Diagonal steps over cells where both labels are dotted are excluded; the
/// sign is `(-1)^k` with `k` the number of doubly-dotted cells below the path.
pub fn overlapping_shuffles(alpha: &DottedComposition, beta: &DottedComposition) -> Vec<OverlappingShuffle> {
    let a = alpha.parts();
    let b = beta.parts();
    let dots = DotCounter::new(b.iter().map(|p| p.is_dotted()));
    let mut out = Vec::new();
    let mut steps = Vec::new();
    let mut parts = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        j: usize,
        below: usize,
        a: &[DottedPart],
        b: &[DottedPart],
        dots: &DotCounter,
        steps: &mut Vec<Step>,
        parts: &mut Vec<DottedPart>,
        out: &mut Vec<OverlappingShuffle>,
    ) {
        if i == b.len() && j == a.len() {
            out.push(OverlappingShuffle {
                steps: steps.clone(),
                comp: DottedComposition::new(parts.clone()),
                sign: if below.is_multiple_of(2) { 1 } else { -1 },
            });
            return;
        }
        let column_dots = |j: usize| if a[j].is_dotted() { dots.below(i) } else { 0 };
        if j < a.len() {
            steps.push(Step::Horizontal);
            parts.push(a[j]);
            go(i, j + 1, below + column_dots(j), a, b, dots, steps, parts, out);
            parts.pop();
            steps.pop();
        }
        if i < b.len() {
            steps.push(Step::Vertical);
            parts.push(b[i]);
            go(i + 1, j, below, a, b, dots, steps, parts, out);
            parts.pop();
            steps.pop();
        }
        if i < b.len() && j < a.len() {
            if let Some(fused) = a[j].fuse(b[i]) {
                steps.push(Step::Diagonal);
                parts.push(fused);
                go(i + 1, j + 1, below + column_dots(j), a, b, dots, steps, parts, out);
                parts.pop();
                steps.pop();
            }
        }
    }

    go(0, 0, 0, a, b, &dots, &mut steps, &mut parts, &mut out);
    out
}

/// A fundamental path with its dotted permutation `Π(P)`, `Γ(P) = comp(Π(P))` and sign.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FundamentalShuffle {
    pub steps: Vec<Step>,
    pub word: DottedPermutation,
    pub comp: DottedComposition,
    pub sign: i8,
}

/// Fundamental paths for the canonical representatives of `α` and `β`.
pub fn fundamental_paths(alpha: &DottedComposition, beta: &DottedComposition) -> Vec<FundamentalShuffle> {
    let plain_alpha: u32 = alpha
        .parts()
        .iter()
        .filter(|p| !p.is_dotted())
        .map(|p| p.value())
        .sum();
    fundamental_paths_for_words(&represent(alpha, 1), &represent(beta, plain_alpha + 1))
}

/// Fundamental paths in the grid whose columns are labeled by `wa` and rows by `wb`.
///
/// The non-dotted entries of `wa` should all be smaller than those of `wb`.
pub fn fundamental_paths_for_words(wa: &DottedPermutation, wb: &DottedPermutation) -> Vec<FundamentalShuffle> {
    let a = &wa.entries;
    let b = &wb.entries;
    let dots = DotCounter::new(b.iter().map(|l| l.dotted));
    let mut out = Vec::new();
    let mut steps = Vec::new();
    let mut word = Vec::new();

    // Length of the longest run of increasing non-dotted labels starting at `from`.
    fn increasing_run(labels: &[Letter], from: usize) -> usize {
        let mut k = 0;
        while from + k < labels.len() && !labels[from + k].dotted {
            if k > 0 && labels[from + k - 1].value > labels[from + k].value {
                break;
            }
            k += 1;
        }
        k
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        j: usize,
        below: usize,
        a: &[Letter],
        b: &[Letter],
        dots: &DotCounter,
        steps: &mut Vec<Step>,
        word: &mut Vec<Letter>,
        out: &mut Vec<FundamentalShuffle>,
    ) {
        if i == b.len() && j == a.len() {
            let w = DottedPermutation {
                entries: word.clone(),
            };
            out.push(FundamentalShuffle {
                steps: steps.clone(),
                comp: comp_of_word(&w),
                word: w,
                sign: if below.is_multiple_of(2) { 1 } else { -1 },
            });
            return;
        }
        let column_dots = |j: usize| if a[j].dotted { dots.below(i) } else { 0 };
        if j < a.len() {
            steps.push(Step::Horizontal);
            word.push(a[j]);
            go(i, j + 1, below + column_dots(j), a, b, dots, steps, word, out);
            word.pop();
            steps.pop();
        }
        if i < b.len() {
            steps.push(Step::Vertical);
            word.push(b[i]);
            go(i + 1, j, below, a, b, dots, steps, word, out);
            word.pop();
            steps.pop();
        }
        if j < a.len() && a[j].dotted {
            for k in 1..=increasing_run(b, i) {
                steps.push(Step::RowDiagonal { rows: k });
                word.push(Letter::dotted(a[j].value + k as u32));
                go(i + k, j + 1, below + column_dots(j), a, b, dots, steps, word, out);
                word.pop();
                steps.pop();
            }
        }
        if i < b.len() && b[i].dotted {
            for k in 1..=increasing_run(a, j) {
                steps.push(Step::ColumnDiagonal { cols: k });
                word.push(Letter::dotted(b[i].value + k as u32));
                go(i + 1, j + k, below, a, b, dots, steps, word, out);
                word.pop();
                steps.pop();
            }
        }
    }

    go(0, 0, 0, a, b, &dots, &mut steps, &mut word, &mut out);
    out
}
