//! Exact counts and main terms for the coprimality / squarefree lemmas and
//! the Perron-formula partial sum that drive the couple asymptotics.

use rayon::prelude::*;
use serde::Serialize;

use super::constants::{Constants, ZETA2};
use super::sieve::{FactorSieve, SquarefreeSieve};
use super::{gcd, phi, prime_divisors};
use crate::error::{invalid, Result};

fn check_residue_args(a: u64, a_prime: u64, n: u64, x: f64) -> Result<u64> {
    if a == 0 || n == 0 {
        return invalid("a and n must be positive");
    }
    if !x.is_finite() || x < 0.0 {
        return invalid(format!("x must be finite and nonnegative, got {x}"));
    }
    if gcd(a, n) != 1 {
        return invalid(format!("gcd(a, n) = gcd({a}, {n}) is not 1"));
    }
    let r = a_prime % n;
    if gcd(r, n) != 1 {
        return invalid(format!("residue {a_prime} is not a unit mod {n}"));
    }
    Ok(r)
}

/// Iterates `b <= x` with `b ≡ r (mod n)`.
fn progression(r: u64, n: u64, x: f64) -> impl Iterator<Item = u64> {
    let top = x.floor() as u64;
    let first = if r == 0 { n } else { r };
    (first..=top).step_by(n as usize)
}

/// `#{b <= x : gcd(a, b) = 1, b ≡ a' (mod n)}` by enumeration.
pub fn count_t(a: u64, a_prime: u64, n: u64, x: f64) -> Result<u64> {
    let r = check_residue_args(a, a_prime, n, x)?;
    Ok(progression(r, n, x).filter(|&b| gcd(a, b) == 1).count() as u64)
}

/// Main term `phi(a) x / (a n)`; independent of the residue.
pub fn formula_t(a: u64, n: u64, x: f64) -> f64 {
    phi(a) as f64 * x / (a as f64 * n as f64)
}

/// Like [`count_t`] but only squarefree `b` are counted.
pub fn count_s(a: u64, a_prime: u64, n: u64, x: f64) -> Result<u64> {
    check_residue_args(a, a_prime, n, x)?;
    let sieve = SquarefreeSieve::new((x.floor() as u64).max(1))?;
    count_s_with(&sieve, a, a_prime, n, x)
}

/// [`count_s`] against a prebuilt sieve covering `[1, x]`.
pub fn count_s_with(
    sieve: &SquarefreeSieve,
    a: u64,
    a_prime: u64,
    n: u64,
    x: f64,
) -> Result<u64> {
    let r = check_residue_args(a, a_prime, n, x)?;
    if (x.floor() as u64) > sieve.limit() {
        return invalid(format!("x = {x} exceeds sieve limit {}", sieve.limit()));
    }
    Ok(progression(r, n, x)
        .filter(|&b| sieve.is_squarefree(b) && gcd(a, b) == 1)
        .count() as u64)
}

/// Main term `phi(a) x / (a n) / zeta(2) * prod_{p | a n} p^2 / (p^2 - 1)`.
pub fn formula_s(a: u64, n: u64, x: f64) -> f64 {
    let local: f64 = prime_divisors(a * n)
        .into_iter()
        .map(|p| {
            let p2 = (p * p) as f64;
            p2 / (p2 - 1.0)
        })
        .product();
    formula_t(a, n, x) / ZETA2 * local
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerronSum {
    pub exact_sum: f64,
    pub main_term: f64,
}

const PERRON_CHUNK: u64 = 1 << 16;

/// `sum_{a <= x, gcd(a, n) = 1} mu^2(a) prod_{p | a} p^k / (p + 1)` by sieve,
/// next to its asymptotic main term.
///
/// Partial sums are formed over fixed chunks and added in order, so the
/// result is the same for every thread count.
pub fn perron_sum(k: u32, n: u64, x: f64, constants: &Constants) -> Result<PerronSum> {
    if n == 0 {
        return invalid("n must be positive");
    }
    if !x.is_finite() || x < 2.0 {
        return invalid(format!("x must be at least 2, got {x}"));
    }
    let top = x.floor() as u64;
    let sieve = FactorSieve::new(top)?;
    let chunks = top.div_ceil(PERRON_CHUNK);
    let partial: Vec<f64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * PERRON_CHUNK + 1;
            let hi = ((c + 1) * PERRON_CHUNK).min(top);
            let mut s = 0.0;
            for a in lo..=hi {
                if gcd(a, n) != 1 {
                    continue;
                }
                if let Some(primes) = sieve.squarefree_primes(a) {
                    s += primes
                        .iter()
                        .map(|&p| (p as f64).powi(k as i32) / (p as f64 + 1.0))
                        .product::<f64>();
                }
            }
            s
        })
        .collect();
    let exact_sum = partial.iter().sum();

    let n_primes = prime_divisors(n);
    let local: f64 = n_primes
        .iter()
        .map(|&p| 1.0 / (1.0 + 1.0 / (p as f64 + 1.0)))
        .product();
    let h0 = ZETA2 * constants.c.value * local;
    let main_term = if k == 0 {
        let shift: f64 = n_primes
            .iter()
            .map(|&p| (p as f64).ln() / (p as f64 + 2.0))
            .sum();
        h0 * (x.ln() + constants.gamma.value + 3.0 * constants.kappa.value + shift)
    } else {
        h0 * x.powi(k as i32) / k as f64
    };
    Ok(PerronSum {
        exact_sum,
        main_term,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_examples() {
        assert_eq!(count_t(1, 1, 1, 10.0).unwrap(), 10);
        assert_eq!(formula_t(1, 1, 10.0), 10.0);
        assert_eq!(count_t(6, 1, 1, 30.0).unwrap(), 10);
        assert!((formula_t(6, 1, 30.0) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn s_examples() {
        assert_eq!(count_s(1, 1, 1, 10.0).unwrap(), 7);
        assert_eq!(count_s(2, 1, 1, 10.0).unwrap(), 4);
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(count_t(3, 1, 9, 10.0).is_err());
        assert!(count_t(2, 3, 9, 10.0).is_err());
        assert!(count_s(2, 6, 9, 10.0).is_err());
        assert!(count_t(2, 1, 9, -1.0).is_err());
    }

    #[test]
    fn residue_is_reduced_mod_n() {
        assert_eq!(
            count_t(5, 2, 9, 500.0).unwrap(),
            count_t(5, 11, 9, 500.0).unwrap()
        );
    }

    #[test]
    fn perron_small_x() {
        let c = Constants::compute(1000).unwrap();
        let s0 = perron_sum(0, 1, 2.0, &c).unwrap();
        assert!((s0.exact_sum - (1.0 + 1.0 / 3.0)).abs() < 1e-15);
        let s1 = perron_sum(1, 1, 2.0, &c).unwrap();
        assert!((s1.exact_sum - (1.0 + 2.0 / 3.0)).abs() < 1e-15);
        assert!(perron_sum(0, 1, 1.5, &c).is_err());
        assert!(perron_sum(0, 0, 10.0, &c).is_err());
    }

    #[test]
    fn perron_linear_main_term() {
        let c = Constants::compute(1_000_000).unwrap();
        let s = perron_sum(1, 1, 1e6, &c).unwrap();
        assert!((s.exact_sum - s.main_term).abs() / s.main_term < 0.01, "{s:?}");
    }

    #[test]
    fn perron_log_main_term_moderate_x() {
        let c = Constants::compute(1_000_000).unwrap();
        for n in [1, 2, 9, 15] {
            let s = perron_sum(0, n, 1e6, &c).unwrap();
            assert!((s.exact_sum - s.main_term).abs() / s.main_term < 0.01, "n={n} {s:?}");
        }
    }
}
