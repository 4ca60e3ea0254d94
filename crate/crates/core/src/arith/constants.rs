use serde::Serialize;

use super::sieve::primes_up_to;
use crate::error::{invalid, Result};

pub const ZETA2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// A truncated constant together with a rigorous bound on what truncation
/// left out. For prime products and sums `prime_bound` is the largest prime
/// cutoff used; for the Euler–Mascheroni constant it is the number of
/// harmonic terms summed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantEstimate {
    pub value: f64,
    pub prime_bound: u64,
    pub tail_bound: f64,
}

impl ConstantEstimate {
    /// Interval `[value - tail_bound, value + tail_bound]` contains `other`?
    pub fn contains(&self, other: f64) -> bool {
        (other - self.value).abs() <= self.tail_bound
    }
}

fn check_bound(prime_bound: u64) -> Result<()> {
    if prime_bound < 2 {
        return invalid(format!("prime bound must be at least 2, got {prime_bound}"));
    }
    Ok(())
}

fn carefree_factor(p: f64) -> f64 {
    1.0 - 3.0 / (p * p) + 2.0 / (p * p * p)
}

/// Strongly-carefree density `C = prod_p (1 - 3/p^2 + 2/p^3)`.
///
/// Each omitted factor satisfies `-log(factor) <= 4/p^2`, and
/// `sum_{p > P} 1/p^2 <= 1/(P-1)`, so the true product lies in
/// `[value * exp(-4/(P-1)), value]`.
pub fn euler_product_c(prime_bound: u64) -> Result<ConstantEstimate> {
    check_bound(prime_bound)?;
    let primes = primes_up_to(prime_bound);
    Ok(euler_product_c_from(&primes, prime_bound))
}

fn euler_product_c_from(primes: &[u64], prime_bound: u64) -> ConstantEstimate {
    let value = primes
        .iter()
        .fold(1.0f64, |acc, &p| acc * carefree_factor(p as f64));
    let tail = 4.0 / (prime_bound as f64 - 1.0);
    ConstantEstimate {
        value,
        prime_bound,
        tail_bound: value * -(-tail).exp_m1(),
    }
}

/// `kappa = sum_p log(p) / (p^2 + p - 2)`.
///
/// Tail: `log p/(p^2+p-2) <= log p/p^2`, and for `P >= 2` the integral
/// comparison gives `sum_{n > P} log n / n^2 <= (log P + 1) / P`.
pub fn kappa(prime_bound: u64) -> Result<ConstantEstimate> {
    check_bound(prime_bound)?;
    let primes = primes_up_to(prime_bound);
    Ok(kappa_from(&primes, prime_bound))
}

fn kappa_from(primes: &[u64], prime_bound: u64) -> ConstantEstimate {
    // Summed from the small end of the tail upward to keep rounding low.
    let value = primes
        .iter()
        .rev()
        .map(|&p| {
            let p = p as f64;
            p.ln() / (p * p + p - 2.0)
        })
        .sum();
    let pb = prime_bound as f64;
    ConstantEstimate {
        value,
        prime_bound,
        tail_bound: (pb.ln() + 1.0) / pb,
    }
}

const GAMMA_TERMS: u64 = 10_000;

/// Euler–Mascheroni constant from `H_n - log n` with Euler–Maclaurin
/// corrections through `n^-6`; the next term is below `1e-33` at `n = 10^4`,
/// so the reported bound is the floating-point budget.
pub fn euler_gamma() -> ConstantEstimate {
    let n = GAMMA_TERMS as f64;
    let harmonic: f64 = (1..=GAMMA_TERMS).rev().map(|k| 1.0 / k as f64).sum();
    let n2 = n * n;
    let correction = -1.0 / (2.0 * n) + 1.0 / (12.0 * n2) - 1.0 / (120.0 * n2 * n2)
        + 1.0 / (252.0 * n2 * n2 * n2);
    ConstantEstimate {
        value: harmonic - n.ln() + correction,
        prime_bound: GAMMA_TERMS,
        tail_bound: 1e-14,
    }
}

/// The analytic constants needed by the counting layer, computed once.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub c: ConstantEstimate,
    pub kappa: ConstantEstimate,
    pub gamma: ConstantEstimate,
}

impl Constants {
    pub fn compute(prime_bound: u64) -> Result<Self> {
        check_bound(prime_bound)?;
        let primes = primes_up_to(prime_bound);
        Ok(Constants {
            c: euler_product_c_from(&primes, prime_bound),
            kappa: kappa_from(&primes, prime_bound),
            gamma: euler_gamma(),
        })
    }
}
