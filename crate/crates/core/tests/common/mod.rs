//! Brute-force references that share no code with the library.

#![allow(dead_code)]

/// Number of ascent sequences of each length `0..=max_n`, by dynamic
/// programming over (length, ascent count, last value).
pub fn fishburn_dp(max_n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    if max_n == 0 {
        return out;
    }
    // ways[a][l]: sequences of the current length with `a` ascents ending in `l`.
    let mut ways = vec![vec![0u128; max_n + 1]; max_n + 1];
    ways[0][0] = 1;
    out.push(1);
    for _len in 2..=max_n {
        let mut next = vec![vec![0u128; max_n + 1]; max_n + 1];
        for a in 0..=max_n {
            for l in 0..=max_n {
                let w = ways[a][l];
                if w == 0 {
                    continue;
                }
                for v in 0..=a + 1 {
                    let a2 = if v > l { a + 1 } else { a };
                    next[a2][v] += w;
                }
            }
        }
        ways = next;
        out.push(ways.iter().flatten().sum());
    }
    out
}

/// Every word of length `n` whose `i`-th entry (0-based) is at most `i`.
/// Ascent sequences are a subset of these.
pub fn staircase_words(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::with_capacity(out.len() * (i + 1));
        for w in &out {
            for v in 0..=i as u32 {
                let mut w2 = w.clone();
                w2.push(v);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

pub fn is_ascent_sequence_naive(x: &[u32]) -> bool {
    if x.is_empty() {
        return true;
    }
    if x[0] != 0 {
        return false;
    }
    (1..x.len()).all(|i| {
        let ascents = (0..i.saturating_sub(1))
            .filter(|&j| x[j] < x[j + 1])
            .count();
        x[i] as usize <= ascents + 1
    })
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Counts occurrences by testing every `k`-subset of positions.
pub fn brute_occurrences(seq: &[u32], pattern: &[u32]) -> Vec<Vec<usize>> {
    let n = seq.len();
    let k = pattern.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let ok = (0..k)
            .all(|a| (0..k).all(|b| seq[idx[a]].cmp(&seq[idx[b]]) == pattern[a].cmp(&pattern[b])));
        if ok {
            out.push(idx.iter().map(|i| i + 1).collect());
        }
    }
    out.sort();
    out
}

pub fn brute_contains(seq: &[u32], pattern: &[u32]) -> bool {
    !brute_occurrences(seq, pattern).is_empty()
}

pub fn asc_naive(x: &[u32]) -> usize {
    let mut c = 0;
    for i in 1..x.len() {
        if x[i - 1] < x[i] {
            c += 1;
        }
    }
    c
}

pub fn rlm_naive(x: &[u32]) -> usize {
    (0..x.len())
        .filter(|&i| x[i + 1..].iter().all(|&v| x[i] < v))
        .count()
}

/// Positions (1-based) where `x_i = asc(x_1 … x_{i-1}) + 1`, each paired
/// with its value.
pub fn equality_positions(x: &[u32]) -> Vec<(usize, u32)> {
    (1..x.len())
        .filter(|&i| x[i] as usize == asc_naive(&x[..i]) + 1)
        .map(|i| (i + 1, x[i]))
        .collect()
}

pub fn catalan_closed(n: u64) -> u128 {
    // binomial(2n, n) / (n + 1)
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (2 * n as u128 - i) / (i + 1);
    }
    c / (n as u128 + 1)
}
