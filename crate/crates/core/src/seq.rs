//! Domain types shared by every other module: ascent sequences, permutations
//! and the two kinds of patterns, together with their text forms.
//!
//! The canonical text form separates entries by single spaces (`0 1 0 1 2 2`).
//! On input the compact digit form (`010122`) is also accepted, as are commas
//! as separators. The empty object is written `ε` (an empty string parses too).

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Symbol used for the empty sequence in text output.
pub const EMPTY_SYMBOL: &str = "ε";

/// Parses an integer word in spaced, comma-separated or compact digit form.
pub fn parse_values(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() || text == EMPTY_SYMBOL {
        return Ok(Vec::new());
    }
    let parse = |token: &str| {
        token.parse::<u32>().map_err(|_| Error::Parse {
            token: token.to_string(),
        })
    };
    if text.contains(|c: char| c.is_whitespace() || c == ',') {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse)
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10).ok_or_else(|| Error::Parse {
                    token: c.to_string(),
                })
            })
            .collect()
    }
}

/// Writes `values` in canonical spaced form, `ε` when empty.
pub fn format_values(values: &[u32]) -> String {
    if values.is_empty() {
        return EMPTY_SYMBOL.to_string();
    }
    let mut out = String::with_capacity(values.len() * 2);
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out
}

/// Compact form used when naming small patterns in diagnostics, e.g. `021`.
pub(crate) fn compact_or_spaced(values: &[u32]) -> String {
    if values.iter().all(|&v| v < 10) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        format_values(values)
    }
}

macro_rules! sequence_newtype_impls {
    ($ty:ident) => {
        impl Deref for $ty {
            type Target = [u32];

            fn deref(&self) -> &[u32] {
                &self.0
            }
        }

        impl AsRef<[u32]> for $ty {
            fn as_ref(&self) -> &[u32] {
                &self.0
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&format_values(&self.0))
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                Self::new(parse_values(s)?)
            }
        }

        impl TryFrom<Vec<u32>> for $ty {
            type Error = Error;

            fn try_from(values: Vec<u32>) -> Result<Self> {
                Self::new(values)
            }
        }

        impl From<$ty> for Vec<u32> {
            fn from(value: $ty) -> Vec<u32> {
                value.into_vec()
            }
        }
    };
}

/// A sequence `x_1 … x_n` with `x_1 = 0` and `x_i ≤ asc(x_1 … x_{i-1}) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AscentSequence(Vec<u32>);

impl AscentSequence {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        validate_ascent_sequence(&values)?;
        Ok(Self(values))
    }

    /// The all-zero sequence of length `n`.
    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Caller guarantees the ascent condition.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(validate_ascent_sequence(&values).is_ok(), "{values:?}");
        Self(values)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

sequence_newtype_impls!(AscentSequence);

/// Checks both defining conditions of an ascent sequence.
///
/// The reported index is 1-based; for a bound violation `bound` is
/// `asc(prefix) + 1`.
pub fn validate_ascent_sequence(values: &[u32]) -> Result<()> {
    let Some(&first) = values.first() else {
        return Ok(());
    };
    if first != 0 {
        return Err(Error::FirstEntryNonzero { value: first });
    }
    let mut ascents = 0u32;
    for i in 1..values.len() {
        let bound = ascents + 1;
        if values[i] > bound {
            return Err(Error::AscentBoundExceeded {
                index: i + 1,
                value: values[i],
                bound,
            });
        }
        if values[i - 1] < values[i] {
            ascents += 1;
        }
    }
    Ok(())
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        validate_permutation(&values)?;
        Ok(Self(values))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(validate_permutation(&values).is_ok(), "{values:?}");
        Self(values)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

sequence_newtype_impls!(Permutation);

pub fn validate_permutation(values: &[u32]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 || v as usize > n {
            return Err(Error::PermValueOutOfRange {
                index: i + 1,
                value: v,
                len: n,
            });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::DuplicateValue {
                index: i + 1,
                value: v,
            });
        }
    }
    Ok(())
}

/// Replaces the t-th smallest entry of a word with distinct entries by `t`.
pub fn standardize(word: &[u32]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_unstable_by_key(|&i| word[i]);
    let mut ranks = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        ranks[i] = rank as u32 + 1;
    }
    if let Some(w) = order.windows(2).find(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::DuplicateValue {
            index: w[0].max(w[1]) + 1,
            value: word[w[0]],
        });
    }
    Ok(Permutation(ranks))
}

/// A word over `{0, …, k}` using every letter, matched with both `<` and `=`
/// significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WordPattern(Vec<u32>);

impl WordPattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(&max) = letters.iter().max() {
            let mut present = vec![false; max as usize + 1];
            for &l in &letters {
                present[l as usize] = true;
            }
            if let Some(missing) = present.iter().position(|p| !p) {
                return Err(Error::PatternLetterMissing {
                    letter: missing as u32,
                    max,
                });
            }
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

sequence_newtype_impls!(WordPattern);

/// A classical permutation pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PermPattern(Permutation);

impl PermPattern {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values).map(Self)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn as_slice(&self) -> &[u32] {
        self.0.as_slice()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0.into_vec()
    }
}

impl From<Permutation> for PermPattern {
    fn from(perm: Permutation) -> Self {
        Self(perm)
    }
}

sequence_newtype_impls!(PermPattern);
