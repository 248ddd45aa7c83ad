//! Elementary number theory on machine integers.
//!
//! Euclid's lemma (if a | bc and gcd(a, b) = 1 then a | c) has no
//! input/output contract of its own; it lives in this module's property
//! tests. [`lowest_terms`] is the lowest-terms lemma: if a/b = c/d with
//! gcd(a, b) = 1 then c = D·a and d = D·b with D = gcd(c, d).

use num_integer::{Integer, Roots};

use crate::{Error, Result};

/// Trial-division limit for [`squarefree_decompose`] unless overridden.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000_000_000;

/// Environment variable that overrides [`DEFAULT_FACTOR_BOUND`].
pub const FACTOR_BOUND_ENV: &str = "BISECT120_FACTOR_BOUND";

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdUndefined);
    }
    Ok(a.gcd(&b))
}

/// `c = scale·a`, `d = scale·b`, `gcd(a, b) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowestTerms {
    pub a: u64,
    pub b: u64,
    pub scale: u64,
}

pub fn lowest_terms(c: u64, d: u64) -> Result<LowestTerms> {
    if c == 0 || d == 0 {
        return Err(Error::Domain(format!("lowest_terms needs positive inputs, got ({c}, {d})")));
    }
    let g = c.gcd(&d);
    Ok(LowestTerms { a: c / g, b: d / g, scale: g })
}

/// `(⌊√n⌋, n is a perfect square)`.
pub fn isqrt(n: u64) -> (u64, bool) {
    let s = n.sqrt();
    (s, s * s == n)
}

/// Current factoring bound, honouring [`FACTOR_BOUND_ENV`].
pub fn factor_bound() -> u64 {
    std::env::var(FACTOR_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_FACTOR_BOUND)
}

/// Writes `n = s²·q` with `q` squarefree, using the configured bound.
pub fn squarefree_decompose(n: u64) -> Result<(u64, u64)> {
    squarefree_decompose_bounded(n, factor_bound())
}

pub fn squarefree_decompose_bounded(n: u64, bound: u64) -> Result<(u64, u64)> {
    if n == 0 {
        return Err(Error::Domain("squarefree_decompose needs n >= 1".into()));
    }
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    let mut rest = n;
    let mut square_root = 1u64;
    let mut kernel = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square_root *= p.pow(e / 2);
        if e % 2 == 1 {
            kernel *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever remains is a prime appearing once
    kernel *= rest;
    Ok((square_root, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(12, 20), Ok(4));
        assert_eq!(gcd(7, 1), Ok(1));
        assert_eq!(gcd(21, 24), Ok(3));
        assert_eq!(gcd(9, 0), Ok(9));
        assert_eq!(gcd(0, 0), Err(Error::GcdUndefined));
    }

    #[test]
    fn lowest_terms_examples() {
        assert_eq!(lowest_terms(12, 20), Ok(LowestTerms { a: 3, b: 5, scale: 4 }));
        assert_eq!(lowest_terms(21, 24), Ok(LowestTerms { a: 7, b: 8, scale: 3 }));
        assert_eq!(lowest_terms(5, 16), Ok(LowestTerms { a: 5, b: 16, scale: 1 }));
        assert!(matches!(lowest_terms(0, 3), Err(Error::Domain(_))));
        assert!(matches!(lowest_terms(3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn lowest_terms_exhaustive_to_1000() {
        for c in 1..=1000u64 {
            for d in 1..=1000u64 {
                let lt = lowest_terms(c, d).unwrap();
                assert_eq!(lt.scale * lt.a, c);
                assert_eq!(lt.scale * lt.b, d);
                assert_eq!(lt.a.gcd(&lt.b), 1);
                assert_eq!(lt.scale, gcd(c, d).unwrap());
            }
        }
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(49), (7, true));
        assert_eq!(isqrt(50), (7, false));
        assert_eq!(isqrt(0), (0, true));
        assert_eq!(isqrt(u64::MAX), (u32::MAX as u64, false));
        assert_eq!(isqrt((1u64 << 32) * (1u64 << 30)), (1u64 << 31, true));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_decompose(49), Ok((7, 1)));
        assert_eq!(squarefree_decompose(12), Ok((2, 3)));
        assert_eq!(squarefree_decompose(1), Ok((1, 1)));
        assert_eq!(squarefree_decompose_bounded(2 * 2 * 3 * 3 * 3 * 97, 1_000_000), Ok((6, 291)));
        assert_eq!(
            squarefree_decompose_bounded(1001, 1000),
            Err(Error::TooLarge { n: 1001, bound: 1000 })
        );
        assert!(squarefree_decompose(0).is_err());
    }

    fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while n > 1 {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        out
    }

    #[test]
    fn squarefree_kernel_has_no_repeated_prime() {
        for n in 1..=5000u64 {
            let (s, q) = squarefree_decompose(n).unwrap();
            assert_eq!(s * s * q, n);
            assert!(naive_factor(q).iter().all(|&(_, e)| e == 1), "n={n} q={q}");
        }
    }

    /// Euclid's lemma over every triple up to 80; the hypotheses hold for
    /// well over 10⁴ of them.
    #[test]
    fn euclid_lemma_exhaustive() {
        let mut hits = 0usize;
        for a in 1..=80u64 {
            for b in 1..=80u64 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                for c in 1..=80u64 {
                    if (b * c) % a == 0 {
                        hits += 1;
                        assert_eq!(c % a, 0, "a={a} b={b} c={c}");
                    }
                }
            }
        }
        assert!(hits >= 10_000, "only {hits} qualifying triples");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn euclid_lemma_random_triples(a in 1u64..200, b in 1u64..200, c in 1u64..200) {
            if (b * c) % a == 0 && a.gcd(&b) == 1 {
                prop_assert_eq!(c % a, 0);
            }
        }

        #[test]
        fn isqrt_is_floor_root(n in any::<u64>()) {
            let (s, exact) = isqrt(n);
            prop_assert!((s as u128) * (s as u128) <= n as u128);
            prop_assert!((s as u128 + 1) * (s as u128 + 1) > n as u128);
            prop_assert_eq!(exact, (s as u128) * (s as u128) == n as u128);
        }

        #[test]
        fn squarefree_reassembles(n in 1u64..10_000_000) {
            let (s, q) = squarefree_decompose(n).unwrap();
            prop_assert_eq!(s * s * q, n);
            let (_, q_is_square) = isqrt(q);
            prop_assert!(q == 1 || !q_is_square);
        }
    }
}
