use crate::error::{Error, Result};
use crate::word::StrandSet;

/// A permutation of `{1, …, n}` stored as its image list.
///
/// `images[i-1] = π(i)`. Composition is ordinary function composition:
/// `(a ∘ b)(i) = a(b(i))`, matching the convention that braid words compose
/// as `π_{αβ} = π_α ∘ π_β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Validates that `images` is a bijection of `{1, …, n}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::ShapeMismatch(format!(
                    "image list {images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&v| self.images[v - 1]).collect();
        Permutation { images }
    }

    /// Post-compose with the transposition `(j, j+1)`: `self ← self ∘ τ_j`.
    pub(crate) fn swap_entries(&mut self, j: usize) {
        self.images.swap(j - 1, j);
    }

    /// Pre-compose with the transposition `(j, j+1)`: `self ← τ_j ∘ self`.
    pub(crate) fn swap_values(&mut self, j: usize) {
        for v in self.images.iter_mut() {
            if *v == j {
                *v = j + 1;
            } else if *v == j + 1 {
                *v = j;
            }
        }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Nontrivial cycles, each listed as the forward orbit from its least
    /// element, ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn apply_set(&self, set: &StrandSet) -> StrandSet {
        set.iter().map(|i| self.apply(i)).collect()
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
