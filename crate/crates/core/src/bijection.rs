//! The bijection `φ` from 021-avoiding ascent sequences to 132-avoiding
//! permutations that preserves the pair `(asc, rlm)`.
//!
//! `φ(ε) = ε`; otherwise `x` is split by `f` into `(y, z)`, both halves are
//! mapped recursively, and the images are joined by the inverse of `g`.
//! Recursion depth is at most the length of the input.

use crate::decompose::{
    f_compose_raw, f_decompose_unchecked, g_compose_raw, g_decompose_unchecked,
    require_021_avoiding, require_132_avoiding,
};
use crate::error::Result;
use crate::seq::{AscentSequence, Permutation};

pub fn phi(x: &AscentSequence) -> Result<Permutation> {
    require_021_avoiding(x)?;
    Ok(Permutation::from_vec_unchecked(phi_raw(x)))
}

pub fn phi_inv(pi: &Permutation) -> Result<AscentSequence> {
    require_132_avoiding(pi)?;
    Ok(AscentSequence::from_vec_unchecked(phi_inv_raw(pi)))
}

fn phi_raw(x: &[u32]) -> Vec<u32> {
    if x.is_empty() {
        return Vec::new();
    }
    let d = f_decompose_unchecked(x);
    g_compose_raw(&phi_raw(d.left()), &phi_raw(d.right()))
}

fn phi_inv_raw(pi: &[u32]) -> Vec<u32> {
    if pi.is_empty() {
        return Vec::new();
    }
    let d = g_decompose_unchecked(pi);
    f_compose_raw(&phi_inv_raw(d.left()), &phi_inv_raw(d.right()))
}
