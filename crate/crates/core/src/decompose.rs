//! The two recursive decompositions behind the bijection.
//!
//! * `f` splits a nonempty 021-avoiding ascent sequence at its special
//!   maximum into a pair `(y, z)` of shorter 021-avoiding ascent sequences.
//! * `g` splits a nonempty 132-avoiding permutation around its largest
//!   entry, `π = π_L n π_R`, into the standardizations of the two sides.
//!
//! Both are bijections onto the disjoint union over `i` of pairs of sizes
//! `(i - 1, n - i)`, and `*_compose` is the inverse of `*_decompose`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::patterns::{avoids_perm, avoids_word, pattern_021, pattern_132};
use crate::seq::{compact_or_spaced, standardize, AscentSequence, Permutation};
use crate::stats::{asc, special_max_of};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AscCase {
    /// Repeated special maximum, or the all-zero sequence; `left` is empty.
    Repeated,
    /// Unique special maximum; `left` is the prefix before it.
    Unique,
}

/// Result of `f`. The case is determined by whether `left` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AscDecomp {
    left: AscentSequence,
    right: AscentSequence,
}

impl AscDecomp {
    /// Pairs two 021-avoiding ascent sequences.
    pub fn new(left: AscentSequence, right: AscentSequence) -> Result<Self> {
        require_021_avoiding(&left)?;
        require_021_avoiding(&right)?;
        Ok(Self { left, right })
    }

    pub fn case(&self) -> AscCase {
        if self.left.is_empty() {
            AscCase::Repeated
        } else {
            AscCase::Unique
        }
    }

    pub fn left(&self) -> &AscentSequence {
        &self.left
    }

    pub fn right(&self) -> &AscentSequence {
        &self.right
    }

    pub fn into_parts(self) -> (AscentSequence, AscentSequence) {
        (self.left, self.right)
    }

    /// Length of the sequence this pair composes to.
    pub fn composed_len(&self) -> usize {
        self.left.len() + self.right.len() + 1
    }
}

/// Result of `g`: the standardized sides of the largest entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PermDecomp {
    left: Permutation,
    right: Permutation,
}

impl PermDecomp {
    pub fn new(left: Permutation, right: Permutation) -> Result<Self> {
        require_132_avoiding(&left)?;
        require_132_avoiding(&right)?;
        Ok(Self { left, right })
    }

    pub fn left(&self) -> &Permutation {
        &self.left
    }

    pub fn right(&self) -> &Permutation {
        &self.right
    }

    pub fn into_parts(self) -> (Permutation, Permutation) {
        (self.left, self.right)
    }

    pub fn composed_len(&self) -> usize {
        self.left.len() + self.right.len() + 1
    }
}

pub(crate) fn require_021_avoiding(x: &AscentSequence) -> Result<()> {
    let p = pattern_021();
    if avoids_word(x, &p) {
        Ok(())
    } else {
        Err(Error::ContainsPattern {
            pattern: compact_or_spaced(&p),
        })
    }
}

pub(crate) fn require_132_avoiding(pi: &Permutation) -> Result<()> {
    let p = pattern_132();
    if avoids_perm(pi, &p) {
        Ok(())
    } else {
        Err(Error::ContainsPattern {
            pattern: compact_or_spaced(&p),
        })
    }
}

/// Splits a nonempty 021-avoiding ascent sequence.
///
/// Repeated special maximum: the entry at the start of the special maximum
/// run is removed, giving `(ε, z)`. An all-zero sequence loses its last
/// entry instead. Unique special maximum `M` at position `i`: `y` is the
/// prefix before `i` and `z` is the suffix after `i` with `M - 1`
/// subtracted from each nonzero entry.
pub fn f_decompose(x: &AscentSequence) -> Result<AscDecomp> {
    if x.is_empty() {
        return Err(Error::Empty);
    }
    require_021_avoiding(x)?;
    Ok(f_decompose_unchecked(x))
}

pub(crate) fn f_decompose_unchecked(x: &[u32]) -> AscDecomp {
    debug_assert!(!x.is_empty());
    let info = special_max_of(x);
    let (left, right) = match info.run {
        None => (Vec::new(), x[..x.len() - 1].to_vec()),
        Some((start, _)) if info.repeated() => {
            let mut z = x.to_vec();
            z.remove(start - 1);
            (Vec::new(), z)
        }
        Some((start, _)) => {
            let shift = info.value - 1;
            let y = x[..start - 1].to_vec();
            let z = x[start..]
                .iter()
                .map(|&v| if v == 0 { 0 } else { v - shift })
                .collect();
            (y, z)
        }
    };
    AscDecomp {
        left: AscentSequence::from_vec_unchecked(left),
        right: AscentSequence::from_vec_unchecked(right),
    }
}

/// Inverse of [`f_decompose`].
pub fn f_compose(d: &AscDecomp) -> AscentSequence {
    AscentSequence::from_vec_unchecked(f_compose_raw(&d.left, &d.right))
}

pub(crate) fn f_compose_raw(left: &[u32], right: &[u32]) -> Vec<u32> {
    if left.is_empty() {
        let info = special_max_of(right);
        match info.run_start() {
            None => vec![0; right.len() + 1],
            Some(start) => {
                let mut x = right.to_vec();
                x.insert(start - 1, info.value);
                x
            }
        }
    } else {
        let m = asc(left) as u32 + 1;
        let mut x = Vec::with_capacity(left.len() + right.len() + 1);
        x.extend_from_slice(left);
        x.push(m);
        x.extend(right.iter().map(|&v| if v == 0 { 0 } else { v + m - 1 }));
        x
    }
}

/// Splits a nonempty 132-avoiding permutation around its largest entry.
pub fn g_decompose(pi: &Permutation) -> Result<PermDecomp> {
    if pi.is_empty() {
        return Err(Error::Empty);
    }
    require_132_avoiding(pi)?;
    Ok(g_decompose_unchecked(pi))
}

pub(crate) fn g_decompose_unchecked(pi: &[u32]) -> PermDecomp {
    let n = pi.len() as u32;
    let at = pi
        .iter()
        .position(|&v| v == n)
        .expect("a nonempty permutation contains its length");
    let left = standardize(&pi[..at]).expect("permutation entries are distinct");
    let right = standardize(&pi[at + 1..]).expect("permutation entries are distinct");
    PermDecomp { left, right }
}

/// Inverse of [`g_decompose`]: `left` shifted above `right`, joined by `n`.
pub fn g_compose(d: &PermDecomp) -> Permutation {
    Permutation::from_vec_unchecked(g_compose_raw(&d.left, &d.right))
}

pub(crate) fn g_compose_raw(left: &[u32], right: &[u32]) -> Vec<u32> {
    let shift = right.len() as u32;
    let n = (left.len() + right.len() + 1) as u32;
    let mut pi = Vec::with_capacity(n as usize);
    pi.extend(left.iter().map(|&v| v + shift));
    pi.push(n);
    pi.extend_from_slice(right);
    pi
}
