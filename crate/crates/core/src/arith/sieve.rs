use rayon::prelude::*;

use crate::error::{invalid, Result};

const WORD: usize = 64;
/// Words per parallel block (256 KiB of flags, 2M integers).
const BLOCK_WORDS: usize = 1 << 15;

/// Primes `p <= n` by a plain sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for j in (i * i..=n).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

/// Bit table of squarefree integers in `[1, limit]`.
#[derive(Debug, Clone)]
pub struct SquarefreeSieve {
    limit: u64,
    bits: Vec<u64>,
}

impl SquarefreeSieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return invalid("squarefree sieve limit must be at least 1");
        }
        let words = (limit as usize + 1).div_ceil(WORD);
        let mut bits = vec![u64::MAX; words];
        let primes = primes_up_to(limit.isqrt());
        let squares: Vec<u64> = primes.iter().map(|p| p * p).collect();

        // Blocks cover disjoint index ranges, so the result does not depend on
        // how rayon schedules them.
        bits.par_chunks_mut(BLOCK_WORDS)
            .enumerate()
            .for_each(|(blk, chunk)| {
                let lo = (blk * BLOCK_WORDS * WORD) as u64;
                let hi = lo + (chunk.len() * WORD) as u64;
                for &q in &squares {
                    if q >= hi {
                        break;
                    }
                    let mut j = lo.div_ceil(q) * q;
                    while j < hi {
                        let off = (j - lo) as usize;
                        chunk[off / WORD] &= !(1u64 << (off % WORD));
                        j += q;
                    }
                }
            });

        bits[0] &= !1; // zero is not squarefree
        let tail = (limit as usize + 1) % WORD;
        if tail != 0 {
            *bits.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        Ok(SquarefreeSieve { limit, bits })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn is_squarefree(&self, n: u64) -> bool {
        assert!(n <= self.limit, "{n} beyond sieve limit {}", self.limit);
        self.bits[n as usize / WORD] >> (n as usize % WORD) & 1 == 1
    }

    /// Number of squarefree integers in `[1, limit]`.
    pub fn count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }
}

/// Table of the Möbius function on `[1, limit]` (linear sieve).
#[derive(Debug, Clone)]
pub struct MobiusSieve {
    values: Vec<i8>,
}

impl MobiusSieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return invalid("Möbius sieve limit must be at least 1");
        }
        let n = limit as usize;
        let mut values = vec![0i8; n + 1];
        let mut composite = vec![false; n + 1];
        let mut primes: Vec<usize> = Vec::new();
        values[1] = 1;
        for i in 2..=n {
            if !composite[i] {
                primes.push(i);
                values[i] = -1;
            }
            for &p in &primes {
                let ip = i * p;
                if ip > n {
                    break;
                }
                composite[ip] = true;
                if i % p == 0 {
                    values[ip] = 0;
                    break;
                }
                values[ip] = -values[i];
            }
        }
        Ok(MobiusSieve { values })
    }

    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    #[inline]
    pub fn mu(&self, n: u64) -> i8 {
        self.values[n as usize]
    }
}

/// Smallest-prime-factor table, for fast factorisation of every `n <= limit`.
#[derive(Debug, Clone)]
pub struct FactorSieve {
    spf: Vec<u32>,
}

impl FactorSieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 || limit > u32::MAX as u64 {
            return invalid(format!("factor sieve limit {limit} out of range"));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let ip = i * p as usize;
                if p > si || ip > n {
                    break;
                }
                spf[ip] = p;
            }
        }
        Ok(FactorSieve { spf })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Prime factorisation of `n` as `(p, e)` pairs in increasing order.
    pub fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }

    /// Distinct primes of `n` if `n` is squarefree, `None` otherwise.
    pub fn squarefree_primes(&self, mut n: u64) -> Option<Vec<u64>> {
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            n /= p;
            if n % p == 0 {
                return None;
            }
            out.push(p);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_squarefree;

    #[test]
    fn squarefree_small() {
        let s = SquarefreeSieve::new(10).unwrap();
        let got: Vec<u64> = (1..=10).filter(|&n| s.is_squarefree(n)).collect();
        assert_eq!(got, vec![1, 2, 3, 5, 6, 7, 10]);
        assert_eq!(s.count(), 7);
        let one = SquarefreeSieve::new(1).unwrap();
        assert!(one.is_squarefree(1));
        assert_eq!(one.count(), 1);
        assert!(SquarefreeSieve::new(0).is_err());
    }

    #[test]
    fn squarefree_matches_trial_division_across_blocks() {
        // Crosses several parallel blocks.
        let limit = 3 * (BLOCK_WORDS * WORD) as u64 + 17;
        let s = SquarefreeSieve::new(limit).unwrap();
        for n in (1..=limit).step_by(97).chain(limit - 200..=limit) {
            assert_eq!(s.is_squarefree(n), is_squarefree(n), "n = {n}");
        }
        let direct = (1..=limit).filter(|&n| s.is_squarefree(n)).count() as u64;
        assert_eq!(direct, s.count());
    }

    #[test]
    fn mobius_basic() {
        let m = MobiusSieve::new(100_000).unwrap();
        assert_eq!(m.mu(1), 1);
        for p in primes_up_to(1000) {
            assert_eq!(m.mu(p), -1);
        }
        assert_eq!(m.mu(4), 0);
        assert_eq!(m.mu(6), 1);
        assert_eq!(m.mu(30), -1);
        let sq = SquarefreeSieve::new(100_000).unwrap();
        for n in 1..=100_000 {
            assert_eq!(m.mu(n) == 0, !sq.is_squarefree(n));
        }
    }

    #[test]
    fn mobius_divisor_sum_is_indicator() {
        let limit = 100_000usize;
        let m = MobiusSieve::new(limit as u64).unwrap();
        let mut sums = vec![0i32; limit + 1];
        for d in 1..=limit {
            let v = m.mu(d as u64) as i32;
            if v != 0 {
                for k in (d..=limit).step_by(d) {
                    sums[k] += v;
                }
            }
        }
        assert_eq!(sums[1], 1);
        assert!(sums[2..].iter().all(|&s| s == 0));
    }

    #[test]
    fn factor_sieve() {
        let f = FactorSieve::new(1000).unwrap();
        assert_eq!(f.factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f.factor(997), vec![(997, 1)]);
        assert_eq!(f.squarefree_primes(30), Some(vec![2, 3, 5]));
        assert_eq!(f.squarefree_primes(12), None);
        assert_eq!(f.squarefree_primes(1), Some(vec![]));
    }
}
