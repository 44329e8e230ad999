//! Decompositions along unnested standard curve systems.
//!
//! A composition `n = (n₁, …, n_r)` of `n` encodes the standard system of
//! round circles whose i-th circle encloses the i-th block of punctures
//! (circles are only present for blocks of size ≥ 2). A braid preserving
//! standardness splits uniquely into a cabled exterior — each strand of an
//! r-braid thickened into a tube of parallel strands — times a block sum of
//! interior braids, and this module implements both constructions, their
//! inverse (extraction by strand deletion), and the search for preserved
//! systems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::equals;
use crate::perm::Permutation;
use crate::word::{BraidWord, StrandSet};

/// An ordered composition `(n₁, …, n_r)` of its total, all parts ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::ShapeMismatch(
                "composition parts must be positive and nonempty".into(),
            ));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of strands preceding block `i` (1-based).
    pub fn offset(&self, i: usize) -> usize {
        self.parts[..i - 1].iter().sum()
    }

    /// The strand positions of block `i`.
    pub fn block(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let off = self.offset(i);
        off + 1..=off + self.parts[i - 1]
    }

    /// Encodes a nonempty essential curve system: at least two blocks and at
    /// least one circle (a block of size ≥ 2).
    pub fn is_essential(&self) -> bool {
        self.len() >= 2 && self.parts.iter().any(|&p| p >= 2)
    }

    /// Restrict a strand set blockwise: returns `(P₀, [P₁, …, P_r])` where
    /// `P_i` holds the block-local indices of members falling in block `i`
    /// and `P₀` the blocks met by `P`.
    pub fn project_strand_set(&self, p: &StrandSet) -> (StrandSet, Vec<StrandSet>) {
        let mut locals = vec![StrandSet::empty(); self.len()];
        for x in p.iter() {
            let mut off = 0;
            for (i, &sz) in self.parts.iter().enumerate() {
                if x <= off + sz {
                    locals[i].insert(x - off);
                    break;
                }
                off += sz;
            }
        }
        let outer = locals
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_empty())
            .map(|(i, _)| i + 1)
            .collect();
        (outer, locals)
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// The action of an r-permutation on r-compositions: block sizes travel with
/// the blocks, so the part landing at slot `i` is `n_{θ⁻¹(i)}`.
pub fn act_on_composition(theta: &Permutation, n: &Composition) -> Result<Composition> {
    if theta.degree() != n.len() {
        return Err(Error::DegreeMismatch(theta.degree(), n.len()));
    }
    let inv = theta.inverse();
    let parts = (1..=n.len()).map(|i| n.parts[inv.apply(i) - 1]).collect();
    Composition::new(parts)
}

/// Positive word swapping a block of `u` strands past a block of `v`
/// strands (offset `a`), one strand at a time: `u·v` letters, every
/// cross-block pair crossing exactly once.
fn block_swap_letters(a: usize, u: usize, v: usize) -> Vec<i32> {
    let mut letters = Vec::with_capacity(u * v);
    for t in 1..=v {
        for h in (a + t..=a + u + t - 1).rev() {
            letters.push(h as i32);
        }
    }
    letters
}

/// Cable a tubular braid: replace strand `i` of `a0` by `n_i` parallel
/// copies. Letters are expanded back to front so that the running block
/// layout matches the composition at the end of the word, which is where the
/// interior blocks of a decomposition live.
pub fn cable(a0: &BraidWord, n: &Composition) -> Result<BraidWord> {
    if a0.strands() != n.len() {
        return Err(Error::DegreeMismatch(a0.strands(), n.len()));
    }
    let mut layout = n.parts.clone();
    let mut segments: Vec<Vec<i32>> = Vec::with_capacity(a0.len());
    for &g in a0.letters().iter().rev() {
        let j = g.unsigned_abs() as usize;
        let a: usize = layout[..j - 1].iter().sum();
        let (p, q) = (layout[j - 1], layout[j]);
        let seg = if g > 0 {
            block_swap_letters(a, q, p)
        } else {
            let mut inv: Vec<i32> = block_swap_letters(a, p, q);
            inv.reverse();
            for l in inv.iter_mut() {
                *l = -*l;
            }
            inv
        };
        segments.push(seg);
        layout.swap(j - 1, j);
    }
    let mut letters = Vec::with_capacity(segments.iter().map(Vec::len).sum());
    for seg in segments.into_iter().rev() {
        letters.extend(seg);
    }
    BraidWord::new(n.total(), letters)
}

/// Block sum `(α₁ ⊕ ⋯ ⊕ α_r)_n`: each interior word shifted into its block.
pub fn block_sum(interiors: &[BraidWord], n: &Composition) -> Result<BraidWord> {
    if interiors.len() != n.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} interior braids for {} blocks",
            interiors.len(),
            n.len()
        )));
    }
    let mut letters = Vec::new();
    let mut offset = 0usize;
    for (w, &sz) in interiors.iter().zip(&n.parts) {
        if w.strands() != sz {
            return Err(Error::ShapeMismatch(format!(
                "interior on {} strands placed in a block of size {}",
                w.strands(),
                sz
            )));
        }
        for &g in w.letters() {
            let shifted = g.unsigned_abs() as i32 + offset as i32;
            letters.push(if g > 0 { shifted } else { -shifted });
        }
        offset += sz;
    }
    BraidWord::new(n.total(), letters)
}

/// A braid expressed as cabled exterior times block sum of interiors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub composition: Composition,
    pub exterior: BraidWord,
    pub interiors: Vec<BraidWord>,
}

impl Decomposition {
    pub fn new(
        composition: Composition,
        exterior: BraidWord,
        interiors: Vec<BraidWord>,
    ) -> Result<Self> {
        if exterior.strands() != composition.len() {
            return Err(Error::ShapeMismatch(format!(
                "exterior on {} strands for {} blocks",
                exterior.strands(),
                composition.len()
            )));
        }
        if interiors.len() != composition.len()
            || interiors
                .iter()
                .zip(composition.parts())
                .any(|(w, &sz)| w.strands() != sz)
        {
            return Err(Error::ShapeMismatch(
                "interior strand counts must match the composition".into(),
            ));
        }
        Ok(Decomposition {
            composition,
            exterior,
            interiors,
        })
    }
}

/// Multiply a decomposition back out into a single word.
pub fn compose_decomposition(d: &Decomposition) -> Result<BraidWord> {
    let c = cable(&d.exterior, &d.composition)?;
    let s = block_sum(&d.interiors, &d.composition)?;
    c.concat(&s)
}

/// Recover the decomposition of `w` over the composition `n`, or report that
/// `w` does not carry the standard system of `n` to a standard system.
///
/// The candidate exterior is `w` with all but one representative strand per
/// block deleted; candidate interior `i` is `w` restricted to block `i`.
/// Strand deletion is isotopy-invariant, so the candidates are exactly the
/// components whenever a decomposition expression exists, and recomposition
/// decides success.
pub fn extract(w: &BraidWord, n: &Composition) -> Result<Decomposition> {
    if w.strands() != n.total() {
        return Err(Error::ShapeMismatch(format!(
            "word on {} strands against a composition of {}",
            w.strands(),
            n.total()
        )));
    }
    let pi = w.permutation();
    let mut interiors = Vec::with_capacity(n.len());
    for i in 1..=n.len() {
        let keep: StrandSet = n.block(i).map(|x| pi.apply(x)).collect();
        interiors.push(w.delete_strands(&keep)?);
    }
    let reps: StrandSet = (1..=n.len()).map(|i| pi.apply(n.offset(i) + 1)).collect();
    let exterior = w.delete_strands(&reps)?;
    let candidate = Decomposition::new(n.clone(), exterior, interiors)?;
    if equals(&compose_decomposition(&candidate)?, w)? {
        Ok(candidate)
    } else {
        Err(Error::NotStandardlyReduced)
    }
}

/// All essential compositions in lexicographic order.
pub fn essential_compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(remaining: usize, parts: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            let c = Composition::new(parts.clone()).expect("parts positive");
            if c.is_essential() {
                out.push(c);
            }
            return;
        }
        for first in 1..=remaining {
            parts.push(first);
            rec(remaining - first, parts, out);
            parts.pop();
        }
    }
    rec(n, &mut parts, &mut out);
    out.sort_by(|a, b| a.parts.cmp(&b.parts));
    out
}

/// Essential compositions whose standard curve system is carried to itself
/// by `w`, in lexicographic order.
pub fn find_preserved_compositions(w: &BraidWord) -> Vec<Composition> {
    let mut out = Vec::new();
    for c in essential_compositions(w.strands()) {
        if let Ok(d) = extract(w, &c) {
            let theta = d.exterior.permutation();
            if let Ok(acted) = act_on_composition(&theta, &c) {
                if acted == c {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// A caller-supplied standardization: a 1-pure braid `ζ` carrying the
/// outermost reduction system of the braid under study to the standard
/// system of `composition`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionHint {
    pub composition: Composition,
    pub standardizer: BraidWord,
}

/// Structured text record for a decomposition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub composition: Vec<usize>,
    pub exterior: Vec<i32>,
    pub interiors: Vec<Vec<i32>>,
}

impl From<&Decomposition> for DecompositionRecord {
    fn from(d: &Decomposition) -> Self {
        DecompositionRecord {
            composition: d.composition.parts().to_vec(),
            exterior: d.exterior.letters().to_vec(),
            interiors: d.interiors.iter().map(|w| w.letters().to_vec()).collect(),
        }
    }
}

impl DecompositionRecord {
    pub fn into_decomposition(self) -> Result<Decomposition> {
        let composition = Composition::new(self.composition)?;
        let exterior = BraidWord::new(composition.len(), self.exterior)?;
        let interiors = self
            .interiors
            .into_iter()
            .zip(composition.parts())
            .map(|(letters, &sz)| BraidWord::new(sz, letters))
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(composition, exterior, interiors)
    }
}
