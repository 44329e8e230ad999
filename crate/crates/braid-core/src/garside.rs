//! Garside left-canonical normal form and the exact word problem.
//!
//! Every braid word is rewritten as `Δ^p · x₁ ⋯ x_ℓ` where each `x_i` is a
//! permutation braid (a positive braid in which any two strands cross at most
//! once), no factor is trivial or `Δ`, and adjacent factors are left-weighted.
//! Two words represent the same element of `B_n` exactly when they produce
//! the same form, which makes the form a canonical key for equality,
//! centrality, periodicity and search deduplication.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{BraidWord, StrandSet};

/// Left-canonical form `Δ^inf · factors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of Δ in front (the infimum).
    pub fn inf(&self) -> i64 {
        self.inf
    }

    /// Canonical length: the number of permutation-braid factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// A word representing this element: `inf` copies of the Δ word (or its
    /// inverse) followed by a reduced word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if self.inf != 0 {
            let d = delta_word(n);
            let block = if self.inf > 0 { d } else { d.inverse() };
            for _ in 0..self.inf.unsigned_abs() {
                letters.extend_from_slice(block.letters());
            }
        }
        for f in &self.factors {
            letters.extend(permutation_braid_letters(f));
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for x in &self.factors {
            write!(f, " | {x}")?;
        }
        Ok(())
    }
}

/// The half twist `Δ = σ₁(σ₂σ₁)⋯(σ_{n−1}⋯σ₁)`.
pub fn delta_word(n: usize) -> BraidWord {
    let letters: Vec<i32> = (1..n as i32).flat_map(|g| (1..=g).rev()).collect();
    BraidWord::new(n, letters).expect("delta letters are in range")
}

/// The full twist `Δ²`, central for every n.
pub fn full_twist_word(n: usize) -> BraidWord {
    delta_word(n).power(2)
}

fn delta_perm(n: usize) -> Permutation {
    Permutation::from_images((1..=n).rev().collect()).expect("reversal is a bijection")
}

/// Conjugation by Δ: flips generator indices `σ_i ↦ σ_{n−i}`.
fn tau(p: &Permutation) -> Permutation {
    let n = p.degree();
    let images = (1..=n)
        .map(|i| n + 1 - p.apply(n + 1 - i))
        .collect::<Vec<_>>();
    Permutation::from_images(images).expect("tau preserves bijections")
}

/// σ_i right-divides the permutation braid of `p`.
fn finishes_with(p: &Permutation, i: usize) -> bool {
    p.apply(i) > p.apply(i + 1)
}

/// σ_i left-divides the permutation braid of `p`.
fn starts_with(p: &Permutation, i: usize) -> bool {
    // position of value i comes after position of value i+1
    let mut pos_i = 0;
    let mut pos_i1 = 0;
    for (idx, &v) in p.images().iter().enumerate() {
        if v == i {
            pos_i = idx;
        } else if v == i + 1 {
            pos_i1 = idx;
        }
    }
    pos_i > pos_i1
}

/// Make the adjacent pair `(x, y)` left-weighted by sliding initial
/// generators of `y` onto the tail of `x`. Preserves the product `x·y`.
fn left_weight_pair(x: &mut Permutation, y: &mut Permutation) -> bool {
    let n = x.degree();
    let mut changed = false;
    'sweep: loop {
        for i in 1..n {
            if starts_with(y, i) && !finishes_with(x, i) {
                x.swap_entries(i);
                y.swap_values(i);
                changed = true;
                continue 'sweep;
            }
        }
        break;
    }
    changed
}

/// Adjacent factors are left-weighted: the first takes every generator-start
/// the second could supply.
pub fn is_left_weighted_pair(x: &Permutation, y: &Permutation) -> bool {
    (1..x.degree()).all(|i| !starts_with(y, i) || finishes_with(x, i))
}

/// A reduced positive word for the permutation braid of `p`, produced by
/// repeatedly peeling the smallest finishing generator.
fn permutation_braid_letters(p: &Permutation) -> Vec<i32> {
    let mut q = p.clone();
    let n = q.degree();
    let mut rev = Vec::new();
    'peel: loop {
        for i in 1..n {
            if finishes_with(&q, i) {
                rev.push(i as i32);
                q.swap_entries(i);
                continue 'peel;
            }
        }
        break;
    }
    rev.reverse();
    rev
}

/// Compute the left-canonical form of a word.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let w0 = delta_perm(n);
    let mut inf: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());
    for &g in w.letters() {
        let j = g.unsigned_abs() as usize;
        if g > 0 {
            let mut t = Permutation::identity(n);
            t.swap_entries(j);
            factors.push(t);
        } else {
            // σ_j⁻¹ = Δ⁻¹ · (Δ σ_j⁻¹); pushing Δ⁻¹ to the front twists the
            // factors accumulated so far.
            inf -= 1;
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            let mut s = w0.clone();
            s.swap_entries(j);
            factors.push(s);
        }
    }

    loop {
        let mut changed = false;
        factors.retain(|f| {
            let keep = !f.is_identity();
            changed |= !keep;
            keep
        });
        let mut i = 0;
        while i < factors.len() {
            if factors[i] == w0 {
                for f in factors.iter_mut().take(i) {
                    *f = tau(f);
                }
                factors.remove(i);
                inf += 1;
                changed = true;
            } else {
                i += 1;
            }
        }
        for i in 0..factors.len().saturating_sub(1) {
            let (a, b) = factors.split_at_mut(i + 1);
            changed |= left_weight_pair(&mut a[i], &mut b[0]);
        }
        if !changed {
            break;
        }
    }

    NormalForm {
        strands: n,
        inf,
        factors,
    }
}

/// Group-element equality via canonical forms.
pub fn equals(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandCountMismatch(a.strands(), b.strands()));
    }
    Ok(normal_form(a) == normal_form(b))
}

/// Whether a word represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_trivial()
}

/// Outcome of the centrality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Centrality {
    /// The identity braid.
    Trivial,
    /// `Δ^{2m}`, reporting `m`.
    CentralPowerOfFullTwist(i64),
    /// Central but not a power of Δ²; occurs only in B₁ and B₂, where the
    /// whole group is abelian (odd powers of σ₁ in B₂).
    Central,
    NotCentral,
}

/// Classify a word against the centre of its braid group. For n ≥ 3 the
/// centre is generated by Δ²; B₂ is infinite cyclic so every element is
/// central, with `Δ²_{(2)} = σ₁²`.
pub fn centrality(w: &BraidWord) -> Centrality {
    let nf = normal_form(w);
    if nf.is_trivial() {
        return Centrality::Trivial;
    }
    if nf.factors.is_empty() && nf.inf % 2 == 0 {
        return Centrality::CentralPowerOfFullTwist(nf.inf / 2);
    }
    if w.strands() <= 2 {
        return Centrality::Central;
    }
    Centrality::NotCentral
}

fn power_is_central(w: &BraidWord, e: i64) -> bool {
    matches!(
        centrality(&w.power(e)),
        Centrality::Trivial | Centrality::CentralPowerOfFullTwist(_)
    )
}

/// A braid is periodic when some power is central; it suffices to test the
/// n-th and (n−1)-st powers, which detect the two rotation types.
pub fn is_periodic(w: &BraidWord) -> bool {
    let n = w.strands();
    if n <= 2 {
        return true;
    }
    power_is_central(w, n as i64) || power_is_central(w, n as i64 - 1)
}

/// `P`-pure, and trivial after deleting the strands outside `P`.
pub fn is_p_straight(w: &BraidWord, p: &StrandSet) -> bool {
    if !w.is_p_pure(p) {
        return false;
    }
    if p.is_empty() {
        return true;
    }
    let deleted = w
        .delete_strands(p)
        .expect("nonempty in-range keep set");
    is_trivial(&deleted)
}

/// Breadth-first conjugacy search: looks for `γ` with `γ·a·γ⁻¹ = b`,
/// conjugating by single generators in the fixed order
/// `σ₁, …, σ_{n−1}, σ₁⁻¹, …, σ_{n−1}⁻¹` and deduplicating states by their
/// canonical forms. The two ends are expanded alternately and meet in the
/// middle, so a conjugator of length `ℓ ≤ bound` costs two searches of
/// radius about `ℓ/2`. Deterministic; exceeding the bound is inconclusive,
/// not a proof of non-conjugacy.
pub fn conjugacy_search(a: &BraidWord, b: &BraidWord, bound: usize) -> Result<BraidWord> {
    if a.strands() != b.strands() {
        return Err(Error::StrandCountMismatch(a.strands(), b.strands()));
    }
    let n = a.strands();
    let mut gens: Vec<i32> = (1..n as i32).collect();
    gens.extend((1..n as i32).map(|j| -j));

    // each side maps a state's canonical form to the conjugator reaching it
    let mut fwd: HashMap<NormalForm, Vec<i32>> = HashMap::new();
    let mut bwd: HashMap<NormalForm, Vec<i32>> = HashMap::new();
    let start = normal_form(a);
    let target = normal_form(b);
    if start == target {
        return Ok(BraidWord::identity(n));
    }
    fwd.insert(start.clone(), Vec::new());
    bwd.insert(target.clone(), Vec::new());
    let mut fwd_frontier = vec![start];
    let mut bwd_frontier = vec![target];

    let finish = |fwd_word: &[i32], bwd_word: &[i32]| -> Result<BraidWord> {
        // γ a γ⁻¹ = x = δ b δ⁻¹ gives (δ⁻¹γ) a (δ⁻¹γ)⁻¹ = b
        let mut letters: Vec<i32> = bwd_word.iter().rev().map(|&g| -g).collect();
        letters.extend_from_slice(fwd_word);
        let gamma = BraidWord::new(n, letters)?;
        if !equals(&gamma.conjugate(a)?, b)? {
            return Err(Error::VerificationFailed(
                "search produced an invalid conjugator".into(),
            ));
        }
        Ok(gamma)
    };

    let fwd_max = bound.div_ceil(2);
    let bwd_max = bound / 2;
    let mut fwd_depth = 0usize;
    let mut bwd_depth = 0usize;
    loop {
        let can_fwd = fwd_depth < fwd_max && !fwd_frontier.is_empty();
        let can_bwd = bwd_depth < bwd_max && !bwd_frontier.is_empty();
        if !can_fwd && !can_bwd {
            break;
        }
        // expand the shallower side first, forward on ties; scanning
        // frontiers in insertion order keeps the outcome deterministic
        let expand_fwd = if can_fwd && can_bwd {
            fwd_depth <= bwd_depth
        } else {
            can_fwd
        };
        let (own_frontier, own, other) = if expand_fwd {
            fwd_depth += 1;
            (&mut fwd_frontier, &mut fwd, &bwd)
        } else {
            bwd_depth += 1;
            (&mut bwd_frontier, &mut bwd, &fwd)
        };
        let mut next = Vec::new();
        for state in own_frontier.iter() {
            let state_word = state.to_word();
            let parent = own.get(state).expect("frontier states are recorded").clone();
            for &g in &gens {
                let mut letters = Vec::with_capacity(state_word.len() + 2);
                letters.push(g);
                letters.extend_from_slice(state_word.letters());
                letters.push(-g);
                let child = normal_form(&BraidWord::new(n, letters)?);
                if own.contains_key(&child) {
                    continue;
                }
                let mut path = Vec::with_capacity(parent.len() + 1);
                path.push(g);
                path.extend_from_slice(&parent);
                if let Some(other_path) = other.get(&child) {
                    return if expand_fwd {
                        finish(&path, other_path)
                    } else {
                        finish(other_path, &path)
                    };
                }
                own.insert(child.clone(), path);
                next.push(child);
            }
        }
        *own_frontier = next;
    }
    Err(Error::BoundExceeded)
}

/// As [`conjugacy_search`], but only conjugators accepted by `accept` count
/// as solutions; rejected solutions keep the search going.
pub fn conjugacy_search_filtered(
    a: &BraidWord,
    b: &BraidWord,
    bound: usize,
    accept: impl Fn(&BraidWord) -> bool,
) -> Result<BraidWord> {
    if a.strands() != b.strands() {
        return Err(Error::StrandCountMismatch(a.strands(), b.strands()));
    }
    let n = a.strands();
    let target = normal_form(b);
    let start = normal_form(a);
    if start == target {
        let id = BraidWord::identity(n);
        if accept(&id) {
            return Ok(id);
        }
    }
    let mut gens: Vec<i32> = (1..n as i32).collect();
    gens.extend((1..n as i32).map(|j| -j));

    let mut visited: HashMap<NormalForm, ()> = HashMap::new();
    visited.insert(start.clone(), ());
    let mut queue: VecDeque<(NormalForm, Vec<i32>)> = VecDeque::new();
    queue.push_back((start, Vec::new()));

    while let Some((state, conj)) = queue.pop_front() {
        if conj.len() >= bound {
            continue;
        }
        let state_word = state.to_word();
        for &g in &gens {
            let mut letters = Vec::with_capacity(state_word.len() + 2);
            letters.push(g);
            letters.extend_from_slice(state_word.letters());
            letters.push(-g);
            let child_word = BraidWord::new(n, letters).expect("generators in range");
            let child = normal_form(&child_word);
            let mut path = Vec::with_capacity(conj.len() + 1);
            path.push(g);
            path.extend_from_slice(&conj);
            if child == target {
                let gamma = BraidWord::new(n, path.clone()).expect("letters in range");
                debug_assert!(
                    equals(&gamma.conjugate(a).unwrap(), b).unwrap(),
                    "search solution must conjugate a to b"
                );
                if accept(&gamma) {
                    return Ok(gamma);
                }
            }
            if !visited.contains_key(&child) {
                visited.insert(child.clone(), ());
                queue.push_back((child, path));
            }
        }
    }
    Err(Error::BoundExceeded)
}
