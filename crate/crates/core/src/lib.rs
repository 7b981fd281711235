//! Ascent sequences avoiding `021`, permutations avoiding `132`, and a
//! recursive bijection between them preserving the number of ascents and
//! the number of right-to-left minima.
//!
//! ```
//! use ascseq::{phi, phi_inv, asc, rlm, AscentSequence};
//!
//! let x: AscentSequence = "0 1 0".parse().unwrap();
//! let pi = phi(&x).unwrap();
//! assert_eq!(pi.to_string(), "2 3 1");
//! assert_eq!((asc(&x), rlm(&x)), (asc(&pi), rlm(&pi)));
//! assert_eq!(phi_inv(&pi).unwrap(), x);
//! ```

pub mod bijection;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod patterns;
pub mod seq;
pub mod stats;

pub use bijection::{phi, phi_inv};
pub use decompose::{
    f_compose, f_decompose, g_compose, g_decompose, AscCase, AscDecomp, PermDecomp,
};
pub use enumerate::{
    catalan, gen_ascent_sequences, gen_avoiding_ascent, gen_perms_avoiding, joint_distribution,
    verify_equidistribution, AscentSequences, AvoidingPermutations, Caps, EquidistributionReport,
    JointDistribution, Verdict,
};
pub use error::{Error, Result};
pub use patterns::{
    avoids_perm, avoids_word, nonzero_weakly_increasing, occurrences_perm, occurrences_word,
    pattern_021, pattern_132, Occurrence,
};
pub use seq::{
    standardize, validate_ascent_sequence, validate_permutation, AscentSequence, PermPattern,
    Permutation, WordPattern,
};
pub use stats::{asc, rlm, special_max, SpecialMaxInfo};
