use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A braid word: a sequence of signed Artin generators on a fixed number of
/// strands. Letter `+j` is `σ_j`, letter `-j` is `σ_j⁻¹`, with
/// `1 ≤ j ≤ strands − 1`. The empty sequence is the identity braid.
///
/// `PartialEq` on `BraidWord` is letter-for-letter equality of words, not
/// equality in the braid group; use [`crate::garside::equals`] for the latter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::ShapeMismatch("strand count must be at least 1".into()));
        }
        for &g in &letters {
            let j = g.unsigned_abs() as usize;
            if g == 0 || j < 1 || j > strands.saturating_sub(1) {
                return Err(Error::IndexOutOfRange {
                    index: g as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single generator `σ_j` (or `σ_j⁻¹` for negative `j`).
    pub fn generator(strands: usize, j: i32) -> Result<Self> {
        BraidWord::new(strands, vec![j])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` (self's letters first).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandCountMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Reverse the letters and negate each one.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    pub fn power(&self, e: i64) -> BraidWord {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(self.letters.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &BraidWord) -> Result<BraidWord> {
        self.concat(w)?.concat(&self.inverse())
    }

    /// Cancel adjacent inverse pairs until none remain. This is an explicit
    /// normalization step; no operation applies it implicitly.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if let Some(&top) = stack.last() {
                if top == -g {
                    stack.pop();
                    continue;
                }
            }
            stack.push(g);
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// The induced permutation, with strands labelled by their positions at
    /// the end of the word: `π(i)` is the starting position of the strand
    /// that finishes at position `i`. Under this labelling
    /// `π_{αβ} = π_α ∘ π_β` and the curve-system action is a left action.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &g in &self.letters {
            p.swap_entries(g.unsigned_abs() as usize);
        }
        p
    }

    pub fn is_i_pure(&self, i: usize) -> bool {
        self.permutation().apply(i) == i
    }

    pub fn is_p_pure(&self, p: &StrandSet) -> bool {
        let perm = self.permutation();
        p.iter().all(|i| perm.apply(i) == i)
    }

    /// Geometric strand deletion. `keep` holds positions at the start of the
    /// word; the kept strands are followed through the diagram, letters
    /// crossing two kept strands survive (reindexed to their rank among the
    /// kept strands), and all other letters vanish.
    pub fn delete_strands(&self, keep: &StrandSet) -> Result<BraidWord> {
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        if let Some(max) = keep.iter().last() {
            if max > self.strands {
                return Err(Error::IndexOutOfRange {
                    index: max as i64,
                    strands: self.strands,
                });
            }
        }
        let mut kept = vec![false; self.strands];
        for i in keep.iter() {
            kept[i - 1] = true;
        }
        let mut letters = Vec::new();
        for &g in &self.letters {
            let j = g.unsigned_abs() as usize;
            if kept[j - 1] && kept[j] {
                let rank = kept[..j].iter().filter(|&&b| b).count();
                letters.push(if g > 0 { rank as i32 } else { -(rank as i32) });
            }
            kept.swap(j - 1, j);
        }
        BraidWord::new(keep.len(), letters)
    }
}

/// A subset of strand positions `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrandSet(BTreeSet<usize>);

impl StrandSet {
    pub fn empty() -> Self {
        StrandSet(BTreeSet::new())
    }

    pub fn singleton(i: usize) -> Self {
        StrandSet([i].into_iter().collect())
    }

    pub fn full(n: usize) -> Self {
        StrandSet((1..=n).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }
}

impl FromIterator<usize> for StrandSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        StrandSet(iter.into_iter().collect())
    }
}

impl std::fmt::Display for StrandSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parse a whitespace-separated word. Tokens are nonzero integers
/// (`"1 2 -1"`) or `sN`/`sN^-1` forms (`"s1 s2 s1^-1"`).
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for (pos, tok) in text.split_whitespace().enumerate() {
        let g: i32 = if let Some(rest) = tok.strip_prefix('s') {
            let (idx, sign) = if let Some(base) = rest.strip_suffix("^-1") {
                (base, -1)
            } else {
                (rest, 1)
            };
            let j: i32 = idx.parse().map_err(|_| Error::Parse {
                position: pos,
                message: format!("invalid generator token `{tok}`"),
            })?;
            j * sign
        } else {
            tok.parse().map_err(|_| Error::Parse {
                position: pos,
                message: format!("invalid letter `{tok}`"),
            })?
        };
        if g == 0 {
            return Err(Error::Parse {
                position: pos,
                message: "letter 0 is not a generator".into(),
            });
        }
        let j = g.unsigned_abs() as usize;
        if j > strands.saturating_sub(1) {
            return Err(Error::IndexOutOfRange {
                index: g as i64,
                strands,
            });
        }
        letters.push(g);
    }
    BraidWord::new(strands, letters)
}

/// Format as whitespace-separated signed integers; round-trips byte-exactly
/// through [`parse_word`].
pub fn format_word(w: &BraidWord) -> String {
    w.letters()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Alternate display syntax: `s1 s2 s1^-1`.
pub fn format_word_sigma(w: &BraidWord) -> String {
    w.letters()
        .iter()
        .map(|&g| {
            if g > 0 {
                format!("s{g}")
            } else {
                format!("s{}^-1", -g)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse a comma-separated strand set such as `"1,3,4"`. Empty input gives
/// the empty set.
pub fn parse_strand_set(text: &str, strands: usize) -> Result<StrandSet> {
    let mut set = StrandSet::empty();
    for (pos, tok) in text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let i: usize = tok.parse().map_err(|_| Error::Parse {
            position: pos,
            message: format!("invalid strand index `{tok}`"),
        })?;
        if i < 1 || i > strands {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                strands,
            });
        }
        set.insert(i);
    }
    Ok(set)
}
