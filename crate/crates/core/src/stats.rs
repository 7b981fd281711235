//! The statistics `asc` and `rlm`, and the special maximum of an ascent
//! sequence.

use serde::Serialize;

use crate::seq::AscentSequence;

/// Number of indices `i` with `x_i < x_{i+1}`.
pub fn asc(x: &[u32]) -> usize {
    x.windows(2).filter(|w| w[0] < w[1]).count()
}

/// Number of right-to-left minima: indices whose entry is strictly smaller
/// than every later entry.
pub fn rlm(x: &[u32]) -> usize {
    let mut count = 0;
    let mut suffix_min: Option<u32> = None;
    for &v in x.iter().rev() {
        if suffix_min.map_or(true, |m| v < m) {
            count += 1;
            suffix_min = Some(v);
        }
    }
    count
}

/// Special maximum of an ascent sequence.
///
/// `value` is the largest `M` attained at an index where
/// `x_i = asc(x_1 … x_{i-1}) + 1` holds. The indices realizing it form one
/// contiguous block, reported as a 1-based inclusive `run`. For an all-zero
/// sequence (including the empty one) no index qualifies: `value` is 0 and
/// `run` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpecialMaxInfo {
    pub value: u32,
    pub run: Option<(usize, usize)>,
}

impl SpecialMaxInfo {
    pub fn run_start(&self) -> Option<usize> {
        self.run.map(|(start, _)| start)
    }

    pub fn run_end(&self) -> Option<usize> {
        self.run.map(|(_, end)| end)
    }

    /// More than one special maximum index.
    pub fn repeated(&self) -> bool {
        matches!(self.run, Some((start, end)) if end > start)
    }
}

pub fn special_max(x: &AscentSequence) -> SpecialMaxInfo {
    special_max_of(x)
}

/// Single pass with a running ascent counter. `x` must be an ascent sequence.
pub(crate) fn special_max_of(x: &[u32]) -> SpecialMaxInfo {
    let mut ascents = 0u32;
    let mut best: Option<(u32, usize)> = None;
    for i in 0..x.len() {
        if i > 0 {
            if x[i] == ascents + 1 && best.map_or(true, |(m, _)| x[i] > m) {
                best = Some((x[i], i));
            }
            if x[i - 1] < x[i] {
                ascents += 1;
            }
        }
    }
    match best {
        None => SpecialMaxInfo {
            value: 0,
            run: None,
        },
        Some((m, start)) => {
            let len = x[start..].iter().take_while(|&&v| v == m).count();
            SpecialMaxInfo {
                value: m,
                run: Some((start + 1, start + len)),
            }
        }
    }
}
