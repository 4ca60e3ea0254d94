//! Integer sieves, multiplicative-function helpers, analytic constants and
//! the lemma-level counting functions used to validate the asymptotics.

mod constants;
mod lemmas;
mod sieve;

pub use constants::{euler_gamma, euler_product_c, kappa, ConstantEstimate, Constants, ZETA2};
pub use lemmas::{
    count_s, count_s_with, count_t, formula_s, formula_t, perron_sum, PerronSum,
};
pub use sieve::{primes_up_to, FactorSieve, MobiusSieve, SquarefreeSieve};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// Distinct prime divisors of `n`, by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Trial-division squarefree test; fine for the sizes the field layer sees.
pub fn is_squarefree(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// `(a, b)` coprime and both squarefree.
pub fn is_strongly_carefree(a: u64, b: u64) -> bool {
    a >= 1 && b >= 1 && gcd(a, b) == 1 && is_squarefree(a) && is_squarefree(b)
}

/// Number of distinct prime factors.
pub fn omega(n: u64) -> u32 {
    prime_divisors(n).len() as u32
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strongly_carefree_examples() {
        assert!(is_strongly_carefree(2, 1));
        assert!(!is_strongly_carefree(4, 3));
        assert!(!is_strongly_carefree(6, 3));
        assert!(is_strongly_carefree(1, 1));
        assert!(!is_strongly_carefree(0, 1));
    }

    #[test]
    fn gcd_matches_euclid() {
        fn euclid(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                euclid(b, a % b)
            }
        }
        for a in 0..200 {
            for b in 0..200 {
                assert_eq!(gcd(a, b), euclid(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn phi_and_omega() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(6), 2);
        assert_eq!(phi(9), 6);
        assert_eq!(omega(1), 0);
        assert_eq!(omega(30), 3);
        assert_eq!(omega(1024), 1);
    }

    #[test]
    fn mobius_convolution_gives_totient() {
        let mu = MobiusSieve::new(10_000).unwrap();
        for m in 1..=10_000u64 {
            let mut s: i64 = 0;
            let mut d = 1;
            while d * d <= m {
                if m % d == 0 {
                    s += mu.mu(d) as i64 * (m / d) as i64;
                    let e = m / d;
                    if e != d {
                        s += mu.mu(e) as i64 * (m / e) as i64;
                    }
                }
                d += 1;
            }
            assert_eq!(s, phi(m) as i64, "m = {m}");
        }
    }
}
