//! Exhaustive generation of ascent sequences and permutations, exact
//! counting, joint `(asc, rlm)` distributions and the equidistribution
//! check for the bijection.
//!
//! Both generators walk a prefix tree depth first, trying values in
//! increasing order, so objects come out in lexicographic order. A prefix
//! that already contains a forbidden pattern is cut, which is sound because
//! extending a sequence never removes an occurrence. After each extension
//! only occurrences ending at the new entry need to be looked for.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{phi, phi_inv};
use crate::error::{Error, Result};
use crate::patterns::{avoids_perm, contains_ending_at_last, pattern_021, pattern_132};
use crate::seq::{format_values, AscentSequence, PermPattern, Permutation, WordPattern};
use crate::stats::{asc, rlm};

/// Default cap on the length of enumerated ascent sequences.
pub const ASCENT_CAP: usize = 20;
/// Default cap on the length of enumerated permutations.
pub const PERM_CAP: usize = 13;
/// Largest `n` accepted by [`catalan`].
pub const CATALAN_MAX: usize = 30;

/// Depth at which the generation tree is cut into independent subtrees
/// for parallel work.
const SPLIT_DEPTH: usize = 6;

/// Per-family length limits. `Caps::unlimited()` is the override.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub ascent: usize,
    pub perm: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            ascent: ASCENT_CAP,
            perm: PERM_CAP,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Self {
            ascent: usize::MAX,
            perm: usize::MAX,
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// How values may extend a prefix.
trait Shape: Clone {
    fn value_range(&self, prefix: &[u32]) -> (u32, u32);
    fn admits(&self, value: u32) -> bool;
    fn push(&mut self, prefix: &[u32]);
    fn pop(&mut self, value: u32);
}

#[derive(Clone, Default)]
struct AscentShape {
    /// `ascents[i]` is `asc` of the prefix of length `i + 1`.
    ascents: Vec<u32>,
}

impl Shape for AscentShape {
    fn value_range(&self, _prefix: &[u32]) -> (u32, u32) {
        match self.ascents.last() {
            None => (0, 0),
            Some(&a) => (0, a + 1),
        }
    }

    fn admits(&self, _value: u32) -> bool {
        true
    }

    fn push(&mut self, prefix: &[u32]) {
        let a = match prefix {
            [.., prev, last] if prev < last => self.ascents.last().copied().unwrap_or(0) + 1,
            _ => self.ascents.last().copied().unwrap_or(0),
        };
        self.ascents.push(a);
    }

    fn pop(&mut self, _value: u32) {
        self.ascents.pop();
    }
}

#[derive(Clone)]
struct PermShape {
    used: Vec<bool>,
}

impl PermShape {
    fn new(n: usize) -> Self {
        Self {
            used: vec![false; n + 1],
        }
    }
}

impl Shape for PermShape {
    fn value_range(&self, _prefix: &[u32]) -> (u32, u32) {
        (1, self.used.len() as u32 - 1)
    }

    fn admits(&self, value: u32) -> bool {
        !self.used[value as usize]
    }

    fn push(&mut self, prefix: &[u32]) {
        self.used[*prefix.last().expect("pushed a value") as usize] = true;
    }

    fn pop(&mut self, value: u32) {
        self.used[value as usize] = false;
    }
}

/// Depth-first walk over the prefix tree of one family.
#[derive(Clone)]
struct Walker<S> {
    n: usize,
    shape: S,
    root: S,
    patterns: Vec<Vec<u32>>,
    prefix: Vec<u32>,
    /// Backtracking never removes entries below this length.
    floor: usize,
    started: bool,
    done: bool,
}

impl<S: Shape> Walker<S> {
    fn new(n: usize, shape: S, patterns: Vec<Vec<u32>>) -> Self {
        // Every sequence contains the empty pattern.
        let done = patterns.iter().any(|p| p.is_empty());
        Self {
            n,
            root: shape.clone(),
            shape,
            patterns,
            prefix: Vec::with_capacity(n),
            floor: 0,
            started: false,
            done,
        }
    }

    fn restart(&self) -> Self {
        Self::new(self.n, self.root.clone(), self.patterns.clone())
    }

    /// The subtree below `prefix`, which must itself be admissible.
    fn subtree(&self, prefix: &[u32]) -> Self {
        let mut w = self.restart();
        for &v in prefix {
            w.prefix.push(v);
            w.shape.push(&w.prefix);
        }
        w.floor = prefix.len();
        w
    }

    /// Same tree truncated at `depth`; its leaves are the admissible prefixes.
    fn truncated(&self, depth: usize) -> Self {
        Self::new(depth.min(self.n), self.root.clone(), self.patterns.clone())
    }

    /// Pushes the smallest admissible value `>= from`.
    fn push_from(&mut self, from: u32) -> bool {
        let (lo, hi) = self.shape.value_range(&self.prefix);
        for v in from.max(lo)..=hi {
            if !self.shape.admits(v) {
                continue;
            }
            self.prefix.push(v);
            if self
                .patterns
                .iter()
                .any(|p| contains_ending_at_last(&self.prefix, p))
            {
                self.prefix.pop();
                continue;
            }
            self.shape.push(&self.prefix);
            return true;
        }
        false
    }

    fn descend(&mut self) -> bool {
        while self.prefix.len() < self.n {
            if !self.push_from(0) {
                return false;
            }
        }
        true
    }

    fn bump(&mut self) -> bool {
        while self.prefix.len() > self.floor {
            let v = self.prefix.pop().expect("prefix above floor");
            self.shape.pop(v);
            if self.push_from(v + 1) {
                return true;
            }
        }
        false
    }

    fn next_leaf(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        let mut ready = if self.started {
            self.bump()
        } else {
            self.started = true;
            true
        };
        while ready {
            if self.descend() {
                return Some(&self.prefix);
            }
            ready = self.bump();
        }
        self.done = true;
        None
    }

    fn count(mut self) -> u128 {
        let mut total = 0u128;
        while self.next_leaf().is_some() {
            total += 1;
        }
        total
    }

    /// Folds every leaf of the whole tree (ignoring iteration progress) in
    /// parallel over subtrees, merging in tree order so the outcome matches
    /// a sequential run.
    fn par_fold<T, F, M>(&self, threads: Option<usize>, init: T, fold: F, merge: M) -> T
    where
        T: Send + Sync + Clone,
        F: Fn(&mut T, &[u32]) + Sync,
        M: Fn(T, T) -> T,
        S: Send + Sync,
    {
        let run = |w: &Self| {
            let mut acc = init.clone();
            let mut w = w.clone();
            while let Some(leaf) = w.next_leaf() {
                fold(&mut acc, leaf);
            }
            acc
        };
        if threads == Some(1) || self.n <= SPLIT_DEPTH {
            return run(&self.restart());
        }
        let mut roots = self.truncated(SPLIT_DEPTH);
        let mut subtrees = Vec::new();
        while let Some(prefix) = roots.next_leaf() {
            subtrees.push(self.subtree(prefix));
        }
        let parts: Vec<T> = match rayon::ThreadPoolBuilder::new()
            .num_threads(threads.unwrap_or(0))
            .build()
        {
            Ok(pool) => pool.install(|| subtrees.par_iter().map(run).collect()),
            Err(_) => subtrees.iter().map(run).collect(),
        };
        parts.into_iter().fold(init.clone(), merge)
    }
}

/// Lexicographic stream of the ascent sequences of one length avoiding a
/// set of word patterns.
#[derive(Clone)]
pub struct AscentSequences {
    walker: Walker<AscentShape>,
}

impl AscentSequences {
    pub fn new(n: usize, patterns: &[WordPattern], cap: usize) -> Result<Self> {
        check_cap(n, cap)?;
        let patterns = patterns.iter().map(|p| p.letters().to_vec()).collect();
        Ok(Self {
            walker: Walker::new(n, AscentShape::default(), patterns),
        })
    }

    /// Advances without allocating a new object.
    pub fn next_slice(&mut self) -> Option<&[u32]> {
        self.walker.next_leaf()
    }

    /// Number of remaining objects, as an exact integer.
    pub fn exact_count(self) -> u128 {
        self.walker.count()
    }

    /// Exact count, splitting the search over `threads` workers.
    pub fn par_count(&self, threads: Option<usize>) -> u128 {
        self.walker
            .par_fold(threads, 0u128, |acc, _| *acc += 1, |a, b| a + b)
    }

    pub fn par_distribution(&self, threads: Option<usize>) -> JointDistribution {
        self.walker.par_fold(
            threads,
            JointDistribution::default(),
            |d, x| d.record(asc(x), rlm(x)),
            JointDistribution::merged,
        )
    }
}

impl Iterator for AscentSequences {
    type Item = AscentSequence;

    fn next(&mut self) -> Option<AscentSequence> {
        self.walker
            .next_leaf()
            .map(|x| AscentSequence::from_vec_unchecked(x.to_vec()))
    }
}

/// Lexicographic stream of the permutations of one length avoiding a set of
/// classical patterns.
#[derive(Clone)]
pub struct AvoidingPermutations {
    walker: Walker<PermShape>,
}

impl AvoidingPermutations {
    pub fn new(n: usize, patterns: &[PermPattern], cap: usize) -> Result<Self> {
        check_cap(n, cap)?;
        let patterns = patterns.iter().map(|p| p.to_vec()).collect();
        Ok(Self {
            walker: Walker::new(n, PermShape::new(n), patterns),
        })
    }

    pub fn next_slice(&mut self) -> Option<&[u32]> {
        self.walker.next_leaf()
    }

    pub fn exact_count(self) -> u128 {
        self.walker.count()
    }

    pub fn par_count(&self, threads: Option<usize>) -> u128 {
        self.walker
            .par_fold(threads, 0u128, |acc, _| *acc += 1, |a, b| a + b)
    }

    pub fn par_distribution(&self, threads: Option<usize>) -> JointDistribution {
        self.walker.par_fold(
            threads,
            JointDistribution::default(),
            |d, x| d.record(asc(x), rlm(x)),
            JointDistribution::merged,
        )
    }
}

impl Iterator for AvoidingPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.walker
            .next_leaf()
            .map(|x| Permutation::from_vec_unchecked(x.to_vec()))
    }
}

/// All ascent sequences of length `n`, under the default cap.
pub fn gen_ascent_sequences(n: usize) -> Result<AscentSequences> {
    AscentSequences::new(n, &[], ASCENT_CAP)
}

/// Ascent sequences of length `n` avoiding every pattern in `patterns`.
pub fn gen_avoiding_ascent(n: usize, patterns: &[WordPattern]) -> Result<AscentSequences> {
    AscentSequences::new(n, patterns, ASCENT_CAP)
}

/// Permutations of `[n]` avoiding every pattern in `patterns`.
pub fn gen_perms_avoiding(n: usize, patterns: &[PermPattern]) -> Result<AvoidingPermutations> {
    AvoidingPermutations::new(n, patterns, PERM_CAP)
}

/// The `n`-th Catalan number via `C_{m+1} = Σ C_i C_{m-i}`.
pub fn catalan(n: usize) -> Result<u128> {
    if n > CATALAN_MAX {
        return Err(Error::CatalanOutOfRange {
            n,
            max: CATALAN_MAX,
        });
    }
    let mut c = vec![1u128; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    Ok(c[n])
}

/// Exact counts of objects by `(asc, rlm)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JointDistribution {
    entries: BTreeMap<(usize, usize), u128>,
    total: u128,
}

/// One cell where two distributions disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistributionDelta {
    pub asc: usize,
    pub rlm: usize,
    pub left: u128,
    pub right: u128,
}

impl JointDistribution {
    pub fn record(&mut self, first: usize, second: usize) {
        *self.entries.entry((first, second)).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn merged(mut self, other: Self) -> Self {
        for (key, count) in other.entries {
            *self.entries.entry(key).or_insert(0) += count;
        }
        self.total += other.total;
        self
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn get(&self, asc: usize, rlm: usize) -> u128 {
        self.entries.get(&(asc, rlm)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(asc, rlm, count)` triples in increasing key order.
    pub fn triples(&self) -> Vec<(usize, usize, u128)> {
        self.entries.iter().map(|(&(a, r), &c)| (a, r, c)).collect()
    }

    /// Cells whose counts differ, in increasing key order.
    pub fn difference(&self, other: &Self) -> Vec<DistributionDelta> {
        let mut keys: Vec<_> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|&(a, r)| {
                let (left, right) = (self.get(a, r), other.get(a, r));
                (left != right).then_some(DistributionDelta {
                    asc: a,
                    rlm: r,
                    left,
                    right,
                })
            })
            .collect()
    }
}

/// Tallies `(asc, rlm)` over a stream of objects.
pub fn joint_distribution<I>(objects: I) -> JointDistribution
where
    I: IntoIterator,
    I::Item: AsRef<[u32]>,
{
    joint_distribution_by(objects, asc, rlm)
}

/// Tallies an arbitrary pair of statistics over a stream of objects.
pub fn joint_distribution_by<I, A, B>(objects: I, first: A, second: B) -> JointDistribution
where
    I: IntoIterator,
    I::Item: AsRef<[u32]>,
    A: Fn(&[u32]) -> usize,
    B: Fn(&[u32]) -> usize,
{
    let mut d = JointDistribution::default();
    for obj in objects {
        let obj = obj.as_ref();
        d.record(first(obj), second(obj));
    }
    d
}

/// First object on which the bijection check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    Rejected {
        input: Vec<u32>,
        reason: String,
    },
    WrongLength {
        input: Vec<u32>,
        image: Vec<u32>,
    },
    ImageContains132 {
        input: Vec<u32>,
        image: Vec<u32>,
    },
    StatisticsDiffer {
        input: Vec<u32>,
        image: Vec<u32>,
        input_stats: (usize, usize),
        image_stats: (usize, usize),
    },
    RoundTrip {
        input: Vec<u32>,
        image: Vec<u32>,
        back: Vec<u32>,
    },
    Collision {
        first: Vec<u32>,
        second: Vec<u32>,
        image: Vec<u32>,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_values;
        match self {
            Self::Rejected { input, reason } => {
                write!(f, "map rejected {}: {reason}", s(input))
            }
            Self::WrongLength { input, image } => {
                write!(f, "{} maps to {} of a different length", s(input), s(image))
            }
            Self::ImageContains132 { input, image } => {
                write!(f, "{} maps to {}, which contains 132", s(input), s(image))
            }
            Self::StatisticsDiffer {
                input,
                image,
                input_stats,
                image_stats,
            } => write!(
                f,
                "{} has (asc, rlm) = {:?} but its image {} has {:?}",
                s(input),
                input_stats,
                s(image),
                image_stats
            ),
            Self::RoundTrip { input, image, back } => write!(
                f,
                "{} maps to {} which maps back to {}",
                s(input),
                s(image),
                s(back)
            ),
            Self::Collision {
                first,
                second,
                image,
            } => write!(f, "{} and {} both map to {}", s(first), s(second), s(image)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Everything checked for one length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquidistributionReport {
    pub n: usize,
    pub ascent: JointDistribution,
    pub perm: JointDistribution,
    pub difference: Vec<DistributionDelta>,
    pub catalan: u128,
    pub counterexample: Option<Counterexample>,
    pub verdict: Verdict,
}

/// A forward map and its claimed inverse, so the harness can be pointed at
/// alternative implementations.
pub struct MapPair<'a> {
    pub forward: &'a (dyn Fn(&AscentSequence) -> Result<Permutation> + Sync),
    pub inverse: &'a (dyn Fn(&Permutation) -> Result<AscentSequence> + Sync),
}

impl Default for MapPair<'_> {
    fn default() -> Self {
        Self {
            forward: &phi,
            inverse: &phi_inv,
        }
    }
}

/// Runs the full check at length `n` for `φ`.
pub fn verify_equidistribution(n: usize) -> Result<EquidistributionReport> {
    verify_equidistribution_with(n, &MapPair::default(), None)
}

pub fn verify_equidistribution_with(
    n: usize,
    maps: &MapPair<'_>,
    threads: Option<usize>,
) -> Result<EquidistributionReport> {
    let catalan = catalan(n)?;
    let avoid_021 = [pattern_021()];
    let avoid_132 = [pattern_132()];
    let ascents = AscentSequences::new(n, &avoid_021, ASCENT_CAP)?;
    let perms = AvoidingPermutations::new(n, &avoid_132, PERM_CAP)?;

    let ascent = ascents.par_distribution(threads);
    let perm = perms.par_distribution(threads);
    let difference = ascent.difference(&perm);
    let counterexample = first_counterexample(ascents, maps);

    let passed = difference.is_empty()
        && ascent.total() == catalan
        && perm.total() == catalan
        && counterexample.is_none();
    Ok(EquidistributionReport {
        n,
        ascent,
        perm,
        difference,
        catalan,
        counterexample,
        verdict: if passed { Verdict::Pass } else { Verdict::Fail },
    })
}

fn first_counterexample(ascents: AscentSequences, maps: &MapPair<'_>) -> Option<Counterexample> {
    let p132 = pattern_132();
    let mut seen: HashMap<Permutation, AscentSequence> = HashMap::new();
    for x in ascents {
        let input = x.to_vec();
        let image = match (maps.forward)(&x) {
            Ok(image) => image,
            Err(e) => {
                return Some(Counterexample::Rejected {
                    input,
                    reason: e.to_string(),
                })
            }
        };
        if image.len() != x.len() {
            return Some(Counterexample::WrongLength {
                input,
                image: image.into_vec(),
            });
        }
        if !avoids_perm(&image, &p132) {
            return Some(Counterexample::ImageContains132 {
                input,
                image: image.into_vec(),
            });
        }
        let input_stats = (asc(&x), rlm(&x));
        let image_stats = (asc(&image), rlm(&image));
        if input_stats != image_stats {
            return Some(Counterexample::StatisticsDiffer {
                input,
                image: image.into_vec(),
                input_stats,
                image_stats,
            });
        }
        match (maps.inverse)(&image) {
            Ok(back) if back == x => {}
            Ok(back) => {
                return Some(Counterexample::RoundTrip {
                    input,
                    image: image.into_vec(),
                    back: back.into_vec(),
                })
            }
            Err(e) => {
                return Some(Counterexample::Rejected {
                    input: image.into_vec(),
                    reason: format!("inverse: {e}"),
                })
            }
        }
        if let Some(first) = seen.insert(image.clone(), x) {
            return Some(Counterexample::Collision {
                first: first.into_vec(),
                second: input,
                image: image.into_vec(),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings<I: Iterator<Item = T>, T: fmt::Display>(it: I) -> Vec<String> {
        it.map(|x| x.to_string()).collect()
    }

    #[test]
    fn small_ascent_streams() {
        assert_eq!(strings(gen_ascent_sequences(0).unwrap()), vec!["ε"]);
        assert_eq!(
            strings(gen_ascent_sequences(3).unwrap()),
            vec!["0 0 0", "0 0 1", "0 1 0", "0 1 1", "0 1 2"]
        );
        assert_eq!(gen_ascent_sequences(5).unwrap().exact_count(), 53);
        assert_eq!(gen_avoiding_ascent(3, &[pattern_021()]).unwrap().count(), 5);
    }

    #[test]
    fn small_perm_streams() {
        assert_eq!(
            strings(gen_perms_avoiding(3, &[pattern_132()]).unwrap()),
            vec!["1 2 3", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]
        );
        assert_eq!(strings(gen_perms_avoiding(0, &[]).unwrap()), vec!["ε"]);
        assert_eq!(gen_perms_avoiding(5, &[]).unwrap().count(), 120);
    }

    #[test]
    fn caps() {
        assert!(gen_ascent_sequences(20).is_ok());
        assert_eq!(
            gen_ascent_sequences(21).err(),
            Some(Error::CapExceeded { n: 21, cap: 20 })
        );
        assert_eq!(
            gen_perms_avoiding(14, &[]).err(),
            Some(Error::CapExceeded { n: 14, cap: 13 })
        );
        assert!(AscentSequences::new(25, &[], Caps::unlimited().ascent).is_ok());
    }

    #[test]
    fn empty_pattern_excludes_everything() {
        let empty = WordPattern::new(vec![]).unwrap();
        assert_eq!(gen_avoiding_ascent(0, &[empty.clone()]).unwrap().count(), 0);
        assert_eq!(gen_avoiding_ascent(3, &[empty]).unwrap().count(), 0);
    }

    #[test]
    fn catalan_values() {
        let got: Vec<u128> = (0..=5).map(|n| catalan(n).unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(catalan(10).unwrap(), 16796);
        assert_eq!(catalan(30).unwrap(), 3814986502092304);
        assert!(catalan(31).is_err());
    }

    #[test]
    fn distributions_at_3() {
        let a = joint_distribution(gen_avoiding_ascent(3, &[pattern_021()]).unwrap());
        let p = joint_distribution(gen_perms_avoiding(3, &[pattern_132()]).unwrap());
        assert_eq!(
            a.triples(),
            vec![(0, 1, 1), (1, 1, 1), (1, 2, 2), (2, 3, 1)]
        );
        assert_eq!(a.total(), 5);
        assert_eq!(a, p);
        assert!(a.difference(&p).is_empty());

        let none = joint_distribution(Vec::<Vec<u32>>::new());
        assert!(none.is_empty());
        assert_eq!(none.total(), 0);
    }

    #[test]
    fn difference_lists_both_sides() {
        let a = joint_distribution([vec![0u32, 1]]);
        let b = joint_distribution([vec![1u32, 0]]);
        assert_eq!(
            a.difference(&b),
            vec![
                DistributionDelta {
                    asc: 0,
                    rlm: 1,
                    left: 0,
                    right: 1
                },
                DistributionDelta {
                    asc: 1,
                    rlm: 2,
                    left: 1,
                    right: 0
                },
            ]
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let w = AscentSequences::new(10, &[pattern_021()], ASCENT_CAP).unwrap();
        assert_eq!(w.par_count(Some(4)), w.clone().exact_count());
        assert_eq!(w.par_distribution(Some(3)), joint_distribution(w.clone()));
        let p = AvoidingPermutations::new(9, &[pattern_132()], PERM_CAP).unwrap();
        assert_eq!(p.par_distribution(None), joint_distribution(p.clone()));
    }

    #[test]
    fn verify_small() {
        for n in [1, 3, 8] {
            let r = verify_equidistribution(n).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "n = {n}");
            assert_eq!(r.ascent.total(), catalan(n).unwrap());
        }
        assert_eq!(verify_equidistribution(8).unwrap().perm.total(), 1430);
    }

    #[test]
    fn verify_flags_broken_map() {
        let reverse = |x: &AscentSequence| {
            let mut pi = phi(x)?.into_vec();
            pi.reverse();
            Permutation::new(pi)
        };
        let maps = MapPair {
            forward: &reverse,
            inverse: &phi_inv,
        };
        let r = verify_equidistribution_with(3, &maps, None).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.counterexample.is_some());
    }
}
