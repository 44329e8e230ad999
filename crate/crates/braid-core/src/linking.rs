//! Linking numbers of the first strand.
//!
//! `lk` is the homomorphism on 1-pure braids fixed by `lk(σ₁²) = 1` and
//! `lk(σ_i) = 0` for `i ≥ 2`; it equals half the signed count of crossings
//! involving the first strand. `lk_i` refines it to the pairwise linking of
//! the first strand with the strand finishing at position `i`.

use std::iter::Sum;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::word::BraidWord;

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }
}

impl From<i64> for HalfInteger {
    fn from(v: i64) -> Self {
        HalfInteger { twice: 2 * v }
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger {
            twice: self.twice + rhs.twice,
        }
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger { twice: -self.twice }
    }
}

impl Sum for HalfInteger {
    fn sum<I: Iterator<Item = HalfInteger>>(iter: I) -> HalfInteger {
        iter.fold(HalfInteger::default(), Add::add)
    }
}

impl std::fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

fn require_one_pure(w: &BraidWord) -> Result<()> {
    if w.is_i_pure(1) {
        Ok(())
    } else {
        Err(Error::NotOnePure)
    }
}

/// Linking number of the first strand with all the others.
pub fn lk(w: &BraidWord) -> Result<i64> {
    require_one_pure(w)?;
    let mut pos = 1usize;
    let mut signed = 0i64;
    for &g in w.letters() {
        let j = g.unsigned_abs() as usize;
        if pos == j || pos == j + 1 {
            signed += g.signum() as i64;
            pos = if pos == j { j + 1 } else { j };
        }
    }
    debug_assert_eq!(pos, 1);
    debug_assert_eq!(signed % 2, 0, "1-pure words have even crossing totals");
    Ok(signed / 2)
}

/// Pairwise linking number of the first strand with the strand finishing at
/// position `i`, as an exact half-integer.
pub fn lk_i(w: &BraidWord, i: usize) -> Result<HalfInteger> {
    require_one_pure(w)?;
    if i < 2 || i > w.strands() {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            strands: w.strands(),
        });
    }
    // The strand finishing at position i starts at π(i).
    let mut other = w.permutation().apply(i);
    let mut first = 1usize;
    let mut signed = 0i64;
    for &g in w.letters() {
        let j = g.unsigned_abs() as usize;
        let pair = (first == j && other == j + 1) || (other == j && first == j + 1);
        if pair {
            signed += g.signum() as i64;
        }
        if first == j {
            first = j + 1;
        } else if first == j + 1 {
            first = j;
        }
        if other == j {
            other = j + 1;
        } else if other == j + 1 {
            other = j;
        }
    }
    Ok(HalfInteger::from_twice(signed))
}

/// `true` when the braid is 1-pure with vanishing linking number.
pub fn is_one_unlinked(w: &BraidWord) -> bool {
    matches!(lk(w), Ok(0))
}
