use std::fmt;

use crate::grading::{BiCharacter, GroupElement};
use crate::scalar::Scalar;

/// An element of `S_3`, named by its word in the transpositions
/// `s1 = (1 2)` and `s2 = (2 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm {
    Id,
    S1,
    S2,
    /// `s1 o s2`
    S1S2,
    /// `s2 o s1`
    S2S1,
    /// `s2 o s1 o s2 = (1 3)`
    S2S1S2,
}

impl Perm {
    pub const ALL: [Perm; 6] = [Perm::Id, Perm::S1, Perm::S2, Perm::S1S2, Perm::S2S1, Perm::S2S1S2];

    /// Generators in composition order; the last one acts first.
    pub fn word(self) -> &'static [u8] {
        match self {
            Perm::Id => &[],
            Perm::S1 => &[1],
            Perm::S2 => &[2],
            Perm::S1S2 => &[1, 2],
            Perm::S2S1 => &[2, 1],
            Perm::S2S1S2 => &[2, 1, 2],
        }
    }

    /// `+1` for even words, `-1` for odd ones.
    pub fn sign(self) -> i64 {
        if self.word().len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Applies the word to a triple, rightmost generator first; `s_i` swaps
    /// slots `i` and `i + 1`.
    pub fn apply<T: Clone>(self, t: &[T; 3]) -> [T; 3] {
        let mut out = t.clone();
        for &g in self.word().iter().rev() {
            out.swap(g as usize - 1, g as usize);
        }
        out
    }

    /// The parity `|pi(x1, x2, x3)|`: each generator contributes
    /// `eps(x_i, x_{i+1})` evaluated on the tuple it acts on.
    pub fn parity<S: Scalar>(self, eps: &BiCharacter<S>, degrees: &[GroupElement; 3]) -> S {
        let mut t = degrees.clone();
        let mut acc = S::one();
        for &g in self.word().iter().rev() {
            let i = g as usize - 1;
            acc = acc * eps.eval(&t[i], &t[i + 1]);
            t.swap(i, i + 1);
        }
        acc
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Perm::Id => "id",
            Perm::S1 => "s1",
            Perm::S2 => "s2",
            Perm::S1S2 => "s1s2",
            Perm::S2S1 => "s2s1",
            Perm::S2S1S2 => "s2s1s2",
        })
    }
}

/// Free-function form of [`Perm::parity`].
pub fn permutation_parity<S: Scalar>(eps: &BiCharacter<S>, pi: Perm, degrees: &[GroupElement; 3]) -> S {
    pi.parity(eps, degrees)
}

/// The six subgroups of `S_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupTag {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl SubgroupTag {
    pub const ALL: [SubgroupTag; 6] =
        [SubgroupTag::G1, SubgroupTag::G2, SubgroupTag::G3, SubgroupTag::G4, SubgroupTag::G5, SubgroupTag::G6];

    pub fn elements(self) -> &'static [Perm] {
        match self {
            SubgroupTag::G1 => &[Perm::Id],
            SubgroupTag::G2 => &[Perm::Id, Perm::S1],
            SubgroupTag::G3 => &[Perm::Id, Perm::S2],
            SubgroupTag::G4 => &[Perm::Id, Perm::S2S1S2],
            SubgroupTag::G5 => &[Perm::Id, Perm::S1S2, Perm::S2S1],
            SubgroupTag::G6 => &Perm::ALL,
        }
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index())
    }
}
