//! Subsequence pattern matching under order isomorphism.
//!
//! One engine serves both words and permutations: an occurrence of `p` in
//! `seq` is an index tuple `i_1 < … < i_k` such that for all `a, b` the
//! comparison of `seq[i_a]` with `seq[i_b]` equals that of `p[a]` with
//! `p[b]`. For permutations equality never occurs, so this reduces to the
//! classical notion; for words both `<` and `=` must agree.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::seq::{PermPattern, Permutation, WordPattern};

/// Strictly increasing 1-based positions of one pattern occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Occurrence {
    pub indices: Vec<usize>,
}

impl Occurrence {
    /// The entries of `seq` selected by this occurrence.
    pub fn values(&self, seq: &[u32]) -> Vec<u32> {
        self.indices.iter().map(|&i| seq[i - 1]).collect()
    }
}

/// The word pattern `021`.
pub fn pattern_021() -> WordPattern {
    WordPattern::new(vec![0, 2, 1]).expect("021 is a valid word pattern")
}

/// The permutation pattern `132`.
pub fn pattern_132() -> PermPattern {
    PermPattern::new(vec![1, 3, 2]).expect("132 is a permutation")
}

struct Search<'a> {
    seq: &'a [u32],
    pattern: &'a [u32],
    /// Only tuples whose final index is the last position of `seq`.
    anchor_last: bool,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn new<'a>(seq: &'a [u32], pattern: &'a [u32], anchor_last: bool) -> Search<'a> {
        Search {
            seq,
            pattern,
            anchor_last,
            chosen: Vec::with_capacity(pattern.len()),
        }
    }

    fn fits(&self, candidate: usize) -> bool {
        let depth = self.chosen.len();
        let letter = self.pattern[depth];
        let value = self.seq[candidate];
        self.chosen
            .iter()
            .zip(self.pattern)
            .all(|(&j, &l)| self.seq[j].cmp(&value) == l.cmp(&letter))
    }

    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let k = self.pattern.len();
        let n = self.seq.len();
        let depth = self.chosen.len();
        if depth == k {
            return visit(&self.chosen);
        }
        let lo = self.chosen.last().map_or(0, |&j| j + 1);
        // Leave room for the remaining pattern letters.
        let Some(hi) = (n + depth + 1).checked_sub(k) else {
            return ControlFlow::Continue(());
        };
        let lo = if self.anchor_last && depth + 1 == k {
            lo.max(n - 1)
        } else {
            lo
        };
        for candidate in lo..hi {
            if self.fits(candidate) {
                self.chosen.push(candidate);
                let flow = self.run(visit);
                self.chosen.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn collect_occurrences(seq: &[u32], pattern: &[u32]) -> Vec<Occurrence> {
    let mut out = Vec::new();
    let _ = Search::new(seq, pattern, false).run(&mut |tuple: &[usize]| {
        out.push(Occurrence {
            indices: tuple.iter().map(|&j| j + 1).collect(),
        });
        ControlFlow::Continue(())
    });
    out
}

fn contains_raw(seq: &[u32], pattern: &[u32], anchor_last: bool) -> bool {
    if anchor_last && seq.is_empty() {
        return false;
    }
    Search::new(seq, pattern, anchor_last)
        .run(&mut |_: &[usize]| ControlFlow::Break(()))
        .is_break()
}

/// True if some occurrence of `pattern` in `seq` uses the last position.
///
/// Used for prefix pruning during generation: an extension can only
/// create new occurrences that end at the newly appended entry.
pub(crate) fn contains_ending_at_last(seq: &[u32], pattern: &[u32]) -> bool {
    contains_raw(seq, pattern, true)
}

/// All occurrences of a word pattern, in lexicographic order of index tuples.
pub fn occurrences_word(seq: &[u32], p: &WordPattern) -> Vec<Occurrence> {
    collect_occurrences(seq, p.letters())
}

pub fn contains_word(seq: &[u32], p: &WordPattern) -> bool {
    contains_raw(seq, p.letters(), false)
}

pub fn avoids_word(seq: &[u32], p: &WordPattern) -> bool {
    !contains_word(seq, p)
}

/// All occurrences of a permutation pattern, in lexicographic order.
pub fn occurrences_perm(perm: &Permutation, p: &PermPattern) -> Vec<Occurrence> {
    collect_occurrences(perm, p)
}

pub fn contains_perm(perm: &Permutation, p: &PermPattern) -> bool {
    contains_raw(perm, p, false)
}

pub fn avoids_perm(perm: &Permutation, p: &PermPattern) -> bool {
    !contains_perm(perm, p)
}

/// True iff the nonzero entries of `x` form a weakly increasing word.
///
/// On ascent sequences this is equivalent to avoiding `021`.
pub fn nonzero_weakly_increasing(x: &[u32]) -> bool {
    let mut last = 0;
    for &v in x.iter().filter(|&&v| v != 0) {
        if v < last {
            return false;
        }
        last = v;
    }
    true
}
