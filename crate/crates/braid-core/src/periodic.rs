//! Periodic braids: the rotation elements δ and ε, the half twist Δ, the
//! commuting factors μ_{s,j}, classification of periodic elements, and
//! conjugators onto ε-power and μ-power normal forms.
//!
//! The basic identities are `δ^n = Δ² = ε^{n−1}` and `(μ_s)^s = Δ²` on
//! `r = ds + 1` strands.

use crate::error::{Error, Result};
use crate::garside::{
    centrality, conjugacy_search, delta_word, equals, full_twist_word, is_periodic, normal_form,
    Centrality,
};
use crate::linking::lk;
use crate::word::BraidWord;

/// `δ = σ_{n−1} ⋯ σ₁`, the n-fold rotation.
pub fn delta(n: usize) -> BraidWord {
    let letters: Vec<i32> = (1..n as i32).rev().collect();
    BraidWord::new(n, letters).expect("delta letters in range")
}

/// `ε = δσ₁`, the (n−1)-fold rotation about the first puncture.
pub fn epsilon(n: usize) -> BraidWord {
    let mut letters: Vec<i32> = (1..n as i32).rev().collect();
    if n >= 2 {
        letters.push(1);
    }
    BraidWord::new(n, letters).expect("epsilon letters in range")
}

/// The half twist `Δ`.
pub fn half_twist(n: usize) -> BraidWord {
    delta_word(n)
}

/// The full twist `Δ²`.
pub fn full_twist(n: usize) -> BraidWord {
    full_twist_word(n)
}

/// `μ_{s,j} = (σ_{js} ⋯ σ₂σ₁)(σ₁σ₂ ⋯ σ_{(j−1)s+1})` on `r = ds + 1`
/// strands, for `1 ≤ j ≤ d`.
pub fn mu_factor(s: usize, d: usize, j: usize) -> Result<BraidWord> {
    if s < 2 || d < 1 {
        return Err(Error::ShapeMismatch(format!(
            "mu factors need s ≥ 2 and d ≥ 1, got s={s}, d={d}"
        )));
    }
    let r = d * s + 1;
    if j < 1 || j > d {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            strands: r,
        });
    }
    let mut letters: Vec<i32> = (1..=(j * s) as i32).rev().collect();
    letters.extend(1..=((j - 1) * s + 1) as i32);
    BraidWord::new(r, letters)
}

/// `μ_s = μ_{s,1} μ_{s,2} ⋯ μ_{s,d}`.
pub fn mu(s: usize, d: usize) -> Result<BraidWord> {
    let mut out = BraidWord::identity(d * s + 1);
    for j in 1..=d {
        out = out.concat(&mu_factor(s, d, j)?)?;
    }
    Ok(out)
}

/// Strand position `[k, ℓ] = (k−1)s + ℓ + 1`, with `ℓ` read modulo `s` into
/// `1..=s`. Strand 1 sits outside the brackets.
pub fn bracket_index(s: usize, k: usize, l: i64) -> usize {
    let l_mod = (l - 1).rem_euclid(s as i64) as usize + 1;
    (k - 1) * s + l_mod + 1
}

/// Classification of a braid under the periodic trichotomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodicKind {
    /// Conjugate to `δ^m` with `m ≢ 0 (mod n)`: no pure strand.
    DeltaType(i64),
    /// Conjugate to `ε^m` with `m ≢ 0 (mod n−1)`: exactly one pure strand.
    EpsilonType(i64),
    /// `Δ^{2m}`.
    Central(i64),
    NotPeriodic,
}

/// Classify a braid as central, δ-type, ε-type, or not periodic. Exponents
/// of non-central kinds are read off the central powers `w^n = Δ^{2m}`
/// (δ-type) and `w^{n−1} = Δ^{2m}` (ε-type).
pub fn classify_periodic(w: &BraidWord) -> PeriodicKind {
    if !is_periodic(w) {
        return PeriodicKind::NotPeriodic;
    }
    match centrality(w) {
        Centrality::Trivial => return PeriodicKind::Central(0),
        Centrality::CentralPowerOfFullTwist(m) => return PeriodicKind::Central(m),
        _ => {}
    }
    let n = w.strands() as i64;
    let fixed = w.permutation().fixed_points().len();
    let exponent = |power: i64| -> i64 {
        let nf = normal_form(&w.power(power));
        debug_assert!(nf.factors().is_empty() && nf.inf() % 2 == 0);
        nf.inf() / 2
    };
    if fixed == 0 {
        PeriodicKind::DeltaType(exponent(n))
    } else {
        debug_assert_eq!(fixed, 1, "non-central periodic braids have ≤ 1 pure strand");
        PeriodicKind::EpsilonType(exponent(n - 1))
    }
}

/// The exponent `m` with `w` conjugate to `ε^m`, for 1-pure periodic
/// braids. Since `lk(ε) = 1` and `lk` is a conjugacy invariant among 1-pure
/// braids, the exponent is just `lk(w)`.
pub fn eps_exponent(w: &BraidWord) -> Result<i64> {
    if !w.is_i_pure(1) {
        return Err(Error::NotOnePure);
    }
    if !is_periodic(w) {
        return Err(Error::NotPeriodic);
    }
    lk(w)
}

/// Find a 1-unlinked `γ` with `γ·w·γ⁻¹ = ε^m`, returning `(γ, m)`.
///
/// A plain conjugator found by search is automatically 1-pure because the
/// only pure strand of a non-central `ε^m` is the first; multiplying by
/// `ε^{-lk(γ₁)}` then kills its linking number.
pub fn conjugator_to_eps_power(w: &BraidWord, bound: usize) -> Result<(BraidWord, i64)> {
    let m = eps_exponent(w)?;
    let n = w.strands();
    let target = epsilon(n).power(m);
    if matches!(
        centrality(w),
        Centrality::Trivial | Centrality::CentralPowerOfFullTwist(_)
    ) {
        // central 1-pure periodic braids are exact ε-powers: Δ^{2c} = ε^{(n−1)c}
        if !equals(w, &target)? {
            return Err(Error::VerificationFailed(
                "central input is not the expected power of the full twist".into(),
            ));
        }
        return Ok((BraidWord::identity(n), m));
    }
    let gamma1 = conjugacy_search(w, &target, bound)?;
    debug_assert!(gamma1.is_i_pure(1));
    let q = lk(&gamma1)?;
    let gamma = epsilon(n).power(-q).concat(&gamma1)?;
    if lk(&gamma)? != 0 || !equals(&gamma.conjugate(w)?, &target)? {
        return Err(Error::VerificationFailed(
            "eps-power conjugator failed its postcondition".into(),
        ));
    }
    Ok((gamma, m))
}

/// Shape data for a μ-power normal form on `r = ds + 1` strands with
/// exponent `m = dt`, `gcd(s, t) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuShape {
    pub r: usize,
    pub s: usize,
    pub d: usize,
    pub t: i64,
    pub m: i64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Conjugate a 1-pure, periodic, non-central braid onto `μ_s^t`: returns a
/// 1-pure `ζ₀` with `ζ₀ · a0 · ζ₀⁻¹ = μ_s^t` and the shape `(r, s, d, t)`.
pub fn mu_standardize(a0: &BraidWord, bound: usize) -> Result<(BraidWord, MuShape)> {
    if !a0.is_i_pure(1) {
        return Err(Error::NotOnePure);
    }
    if !is_periodic(a0) {
        return Err(Error::NotPeriodic);
    }
    if matches!(
        centrality(a0),
        Centrality::Trivial | Centrality::CentralPowerOfFullTwist(_)
    ) {
        return Err(Error::CentralInput);
    }
    let r = a0.strands();
    let m = lk(a0)?;
    let d = gcd(m.unsigned_abs(), (r - 1) as u64) as usize;
    let t = m / d as i64;
    let s = (r - 1) / d;
    debug_assert!(s >= 2, "central inputs were rejected above");
    let shape = MuShape { r, s, d, t, m };
    let target = mu(s, d)?.power(t);
    let zeta0 = conjugacy_search(a0, &target, bound)?;
    debug_assert!(zeta0.is_i_pure(1));
    if !equals(&zeta0.conjugate(a0)?, &target)? {
        return Err(Error::VerificationFailed(
            "mu standardizer failed its postcondition".into(),
        ));
    }
    Ok((zeta0, shape))
}
