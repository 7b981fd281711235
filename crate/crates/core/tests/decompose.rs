mod common;

use ascseq::{
    asc, f_compose, f_decompose, g_compose, g_decompose, gen_avoiding_ascent, gen_perms_avoiding,
    pattern_021, pattern_132, rlm, special_max, validate_ascent_sequence, AscCase, AscDecomp,
    AscentSequence, PermDecomp, Permutation,
};

fn a021(n: usize) -> Vec<AscentSequence> {
    gen_avoiding_ascent(n, &[pattern_021()]).unwrap().collect()
}

fn s132(n: usize) -> Vec<Permutation> {
    gen_perms_avoiding(n, &[pattern_132()]).unwrap().collect()
}

#[test]
fn f_round_trips_and_bookkeeping() {
    let mut exceptions = Vec::new();
    for n in 1..=10 {
        for x in a021(n) {
            let d = f_decompose(&x).unwrap();
            assert_eq!(f_compose(&d), x);
            assert_eq!(d.composed_len(), n);
            validate_ascent_sequence(d.right()).unwrap();
            let (y, z) = (d.left(), d.right());
            let info = special_max(&x);
            match d.case() {
                AscCase::Repeated => {
                    assert!(y.is_empty());
                    assert!(info.repeated() || info.run.is_none());
                    assert_eq!(asc(&x), asc(z));
                    if rlm(&x) != rlm(z) {
                        exceptions.push(x.to_string());
                    }
                }
                AscCase::Unique => {
                    assert!(!y.is_empty());
                    let (i, _) = info.run.unwrap();
                    assert!(!info.repeated());
                    assert_eq!(asc(&x), asc(y) + asc(z) + 1);
                    if i < n {
                        assert_eq!(rlm(&x), rlm(z), "{x}");
                    } else {
                        assert_eq!(rlm(&x), rlm(y) + 1, "{x}");
                    }
                }
            }
        }
    }
    assert_eq!(exceptions, vec!["0".to_string()]);
}

#[test]
fn f_compose_inverts_every_pair() {
    for n in 1..=10 {
        let mut images = Vec::new();
        for i in 1..=n {
            for y in a021(i - 1) {
                for z in a021(n - i) {
                    let d = AscDecomp::new(y.clone(), z).unwrap();
                    let x = f_compose(&d);
                    assert_eq!(x.len(), n);
                    assert_eq!(f_decompose(&x).unwrap(), d);
                    images.push(x);
                }
            }
        }
        images.sort();
        assert_eq!(images, a021(n), "f must be a bijection at n = {n}");
    }
}

#[test]
fn g_round_trips_and_bookkeeping() {
    let mut exceptions = Vec::new();
    for n in 1..=9 {
        for pi in s132(n) {
            let d = g_decompose(&pi).unwrap();
            assert_eq!(g_compose(&d), pi);
            let (rho, sigma) = (d.left(), d.right());
            let at = pi.iter().position(|&v| v as usize == n).unwrap();
            assert!(pi[..at]
                .iter()
                .all(|&l| pi[at + 1..].iter().all(|&r| l > r)));
            if rho.is_empty() {
                assert_eq!(asc(&pi), asc(sigma));
                if rlm(&pi) != rlm(sigma) {
                    exceptions.push(pi.to_string());
                }
            } else {
                assert_eq!(asc(&pi), asc(rho) + asc(sigma) + 1);
                if sigma.is_empty() {
                    assert_eq!(rlm(&pi), rlm(rho) + 1);
                } else {
                    assert_eq!(rlm(&pi), rlm(sigma));
                }
            }
        }
        let mut images = Vec::new();
        for i in 1..=n {
            for rho in s132(i - 1) {
                for sigma in s132(n - i) {
                    let d = PermDecomp::new(rho.clone(), sigma).unwrap();
                    let pi = g_compose(&d);
                    assert_eq!(g_decompose(&pi).unwrap(), d);
                    images.push(pi);
                }
            }
        }
        images.sort();
        assert_eq!(images, s132(n));
    }
    assert_eq!(exceptions, vec!["1".to_string()]);
}
