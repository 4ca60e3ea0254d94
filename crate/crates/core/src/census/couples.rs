use std::ops::{Add, Sub};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, SquarefreeSieve};
use crate::error::{invalid, Result};
use crate::field::{classify, FieldType};
use crate::threshold::Threshold;

/// Couples counted, and how many of them satisfy the Type II congruence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub total: u64,
    pub type_ii: u64,
}

impl Tally {
    pub fn type_i(&self) -> u64 {
        self.total - self.type_ii
    }

    pub fn of(&self, field_type: FieldType) -> u64 {
        match field_type {
            FieldType::TypeI => self.type_i(),
            FieldType::TypeII => self.type_ii,
        }
    }
}

impl Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            total: self.total + o.total,
            type_ii: self.type_ii + o.type_ii,
        }
    }
}

impl Sub for Tally {
    type Output = Tally;
    fn sub(self, o: Tally) -> Tally {
        Tally {
            total: self.total - o.total,
            type_ii: self.type_ii - o.type_ii,
        }
    }
}

impl std::iter::Sum for Tally {
    fn sum<I: Iterator<Item = Tally>>(iter: I) -> Tally {
        iter.fold(Tally::default(), Add::add)
    }
}

/// `S(N, R)`, `S_I(N, R)`, `S_II(N, R)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoupleCount {
    pub n: u64,
    pub r: f64,
    pub total: u64,
    pub type_i: u64,
    pub type_ii: u64,
}

impl CoupleCount {
    fn new(n: u64, r: f64, t: Tally) -> Self {
        CoupleCount {
            n,
            r,
            total: t.total,
            type_i: t.type_i(),
            type_ii: t.type_ii,
        }
    }

    pub fn of(&self, field_type: FieldType) -> u64 {
        match field_type {
            FieldType::TypeI => self.type_i,
            FieldType::TypeII => self.type_ii,
        }
    }
}

fn check(n: u64, r: f64) -> Result<Threshold> {
    if n == 0 {
        return invalid("hyperbola bound N must be at least 1");
    }
    if !(r >= 1.0) {
        return invalid(format!("cone parameter R must be at least 1, got {r}"));
    }
    Threshold::from_f64(r)
}

/// Strongly carefree `b` in `[lo, hi]` coprime to squarefree `a`.
#[inline]
fn tally_column(sieve: &SquarefreeSieve, a: u64, lo: u64, hi: u64) -> Tally {
    let mut t = Tally::default();
    let a_tame = a % 3 != 0;
    for b in lo..=hi {
        if sieve.is_squarefree(b) && gcd(a, b) == 1 {
            t.total += 1;
            if a_tame && classify(a, b) == FieldType::TypeII {
                t.type_ii += 1;
            }
        }
    }
    t
}

/// Sums `column(a)` over squarefree `a` in `[1, a_max]`, sharded over `a`.
fn sum_columns<F>(sieve: &SquarefreeSieve, a_max: u64, column: F) -> Tally
where
    F: Fn(u64) -> Option<(u64, u64)> + Sync,
{
    const SHARD: u64 = 1024;
    (0..a_max.div_ceil(SHARD))
        .into_par_iter()
        .map(|s| {
            let lo = s * SHARD + 1;
            let hi = ((s + 1) * SHARD).min(a_max);
            (lo..=hi)
                .filter(|&a| sieve.is_squarefree(a))
                .filter_map(|a| {
                    let (blo, bhi) = column(a)?;
                    (blo <= bhi).then(|| tally_column(sieve, a, blo, bhi))
                })
                .sum::<Tally>()
        })
        .sum()
}

/// Largest `a` with `a^2 <= R N`, capped at `N`.
fn a_max_wide(t: &Threshold, n: u64) -> u64 {
    t.floor_mul(n).isqrt().min(n)
}

/// Largest `a` with `a^2 R <= N`.
fn a_max_narrow(t: &Threshold, n: u64) -> u64 {
    t.floor_div(n).isqrt()
}

/// Couples with `ab <= N` and `1/R <= a/b <= R` (both closed).
pub fn count_couples(n: u64, r: f64) -> Result<CoupleCount> {
    let t = check(n, r)?;
    let sieve = SquarefreeSieve::new(n)?;
    Ok(CoupleCount::new(n, r, count_with(&sieve, n, &t)))
}

pub(crate) fn count_with(sieve: &SquarefreeSieve, n: u64, t: &Threshold) -> Tally {
    sum_columns(sieve, a_max_wide(t, n), |a| {
        let lo = t.ceil_div(a).max(1);
        let hi = (n / a).min(t.floor_mul(a));
        Some((lo, hi))
    })
}

/// Counts in the four regions covering the hyperbolic sector:
///
/// * (i)   `a <= √(RN)`, `b <= N/a`
/// * (ii)  `a <= √(N/R)`, `b <= N/a`
/// * (iii) `a <= √(N/R)`, `b <= Ra`
/// * (iv)  `a <= √(RN)`, `b < a/R`
///
/// Region (iv) is strict so that `(i) - (ii) + (iii) - (iv)` reproduces the
/// closed cone of [`count_couples`] exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionCounts {
    pub i: Tally,
    pub ii: Tally,
    pub iii: Tally,
    pub iv: Tally,
}

impl RegionCounts {
    pub fn alternating_sum(&self) -> Tally {
        self.i - self.ii + self.iii - self.iv
    }
}

pub fn count_couples_by_regions(n: u64, r: f64) -> Result<RegionCounts> {
    let t = check(n, r)?;
    let wide = a_max_wide(&t, n);
    let narrow = a_max_narrow(&t, n);
    let limit = n.max(t.floor_mul(narrow)).max(wide);
    let sieve = SquarefreeSieve::new(limit)?;
    Ok(RegionCounts {
        i: sum_columns(&sieve, wide, |a| Some((1, n / a))),
        ii: sum_columns(&sieve, narrow, |a| Some((1, n / a))),
        iii: sum_columns(&sieve, narrow, |a| Some((1, t.floor_mul(a)))),
        iv: sum_columns(&sieve, wide, |a| Some((1, t.ceil_div(a).checked_sub(1)?))),
    })
}
