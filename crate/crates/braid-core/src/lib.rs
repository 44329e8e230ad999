//! Braid group computations on the punctured disk: words and linking
//! numbers, Garside left-canonical forms, cabling decompositions along
//! standard curve systems, periodic elements, and constructive root
//! conjugacy for partially pure braids.

pub mod error;
pub mod garside;
pub mod linking;
pub mod perm;
pub mod periodic;
pub mod roots;
pub mod tubular;
pub mod word;

pub use error::{Error, Result};
pub use garside::{equals, normal_form, Centrality, NormalForm};
pub use linking::{lk, lk_i, HalfInteger};
pub use perm::Permutation;
pub use word::{parse_word, BraidWord, StrandSet};
