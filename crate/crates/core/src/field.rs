//! Canonical data for pure cubic fields `Q(m^(1/3))`.
//!
//! Every such field has exactly one pair `(m, m') = (a b^2, a^2 b)` with
//! `a > b` coprime and squarefree; the couple `(a, b)` is the canonical key.

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::arith::{gcd, is_squarefree, FactorSieve};
use crate::error::{invalid, Error, Result};
use crate::threshold::Threshold;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldType {
    /// 3 wildly ramified, `27 | disc`.
    #[serde(rename = "I")]
    TypeI,
    /// 3 tamely ramified, `3 || disc`.
    #[serde(rename = "II")]
    TypeII,
}

impl fmt::Display for FieldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldType::TypeI => "I",
            FieldType::TypeII => "II",
        })
    }
}

impl std::str::FromStr for FieldType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" | "1" => Ok(FieldType::TypeI),
            "II" | "ii" | "2" => Ok(FieldType::TypeII),
            _ => invalid(format!("unknown field type {s:?}, expected I or II")),
        }
    }
}

/// Coprime squarefree `a > b >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CarefreeCouple {
    a: u64,
    b: u64,
}

impl CarefreeCouple {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if b == 0 || a <= b {
            return invalid(format!("couple ({a}, {b}) must satisfy a > b >= 1"));
        }
        if gcd(a, b) != 1 {
            return invalid(format!("couple ({a}, {b}) is not coprime"));
        }
        if !is_squarefree(a) || !is_squarefree(b) {
            return invalid(format!("couple ({a}, {b}) is not squarefree"));
        }
        Ok(CarefreeCouple { a, b })
    }

    pub(crate) fn new_unchecked(a: u64, b: u64) -> Self {
        debug_assert!(a > b && b >= 1 && gcd(a, b) == 1);
        CarefreeCouple { a, b }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn product(&self) -> u64 {
        self.a * self.b
    }
}

/// Type II iff `3 ∤ ab` and `a^2 ≡ b^2 (mod 9)`.
pub fn classify(a: u64, b: u64) -> FieldType {
    let (ra, rb) = (a % 9, b % 9);
    if ra % 3 != 0 && rb % 3 != 0 && (ra * ra) % 9 == (rb * rb) % 9 {
        FieldType::TypeII
    } else {
        FieldType::TypeI
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PureCubicField {
    pub couple: CarefreeCouple,
    /// `a b^2`
    pub m: u64,
    /// `a^2 b`
    pub m_prime: u64,
    pub field_type: FieldType,
    /// `-27 a^2 b^2` (Type I) or `-3 a^2 b^2` (Type II).
    pub discriminant: i128,
    /// `a / b`, always `> 1`.
    pub ratio: Rational64,
}

impl PureCubicField {
    pub fn from_couple(couple: CarefreeCouple) -> Result<Self> {
        let (a, b) = (couple.a, couple.b);
        let overflow = || Error::InvalidInput(format!("couple ({a}, {b}) too large"));
        let m = a.checked_mul(b * b).ok_or_else(overflow)?;
        let m_prime = (a.checked_mul(a).ok_or_else(overflow)?)
            .checked_mul(b)
            .ok_or_else(overflow)?;
        if m > i64::MAX as u64 || m_prime > i64::MAX as u64 {
            return Err(overflow());
        }
        let field_type = classify(a, b);
        let ab2 = (a as i128 * b as i128).pow(2);
        let discriminant = match field_type {
            FieldType::TypeI => -27 * ab2,
            FieldType::TypeII => -3 * ab2,
        };
        Ok(PureCubicField {
            couple,
            m,
            m_prime,
            field_type,
            discriminant,
            ratio: Rational64::new(a as i64, b as i64),
        })
    }

    pub fn a(&self) -> u64 {
        self.couple.a
    }

    pub fn b(&self) -> u64 {
        self.couple.b
    }

    pub fn abs_discriminant(&self) -> u128 {
        self.discriminant.unsigned_abs()
    }

    /// `a/b` as a float.
    pub fn ratio_f64(&self) -> f64 {
        self.couple.a as f64 / self.couple.b as f64
    }
}

#[cfg(test)]
fn icbrt(n: u64) -> u64 {
    let mut r = (n as f64).cbrt().round() as u64;
    while r > 0 && r.checked_pow(3).is_none_or(|c| c > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(3).is_some_and(|c| c <= n) {
        r += 1;
    }
    r
}

/// Canonical field for `Q(m_raw^(1/3))`.
///
/// Strips cubes by trial division: once `p^3` exceeds the unfactored part,
/// that part is `1`, a prime, a product of two primes, or a prime square.
pub fn canonicalize(m_raw: u64) -> Result<PureCubicField> {
    if m_raw <= 1 {
        return invalid(format!("m must be at least 2, got {m_raw}"));
    }
    if m_raw > i64::MAX as u64 {
        return invalid(format!("m = {m_raw} exceeds 2^63 - 1"));
    }
    let (mut a, mut b) = (1u64, 1u64);
    let mut n = m_raw;
    let mut p = 2u64;
    while p * p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            match e % 3 {
                1 => a *= p,
                2 => b *= p,
                _ => {}
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let s = n.isqrt();
        if s * s == n {
            b *= s;
        } else {
            a *= n;
        }
    }
    if a == 1 && b == 1 {
        return Err(Error::Degenerate(format!("perfect cube ({m_raw})")));
    }
    // m' = a^2 b generates the same field with the roles of a and b swapped.
    let couple = CarefreeCouple::new_unchecked(a.max(b), a.min(b));
    PureCubicField::from_couple(couple)
}

/// An element `c0 + c1 α + c2 α^2` of the field, `α = m^(1/3)`.
pub type FieldElement = [Rational64; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralBasis {
    pub elements: [FieldElement; 3],
    /// `ε ≡ m (mod 9)` for Type II, where the middle element is `(1 + εα + α^2)/3`.
    pub epsilon: Option<i8>,
}

pub fn integral_basis(field: &PureCubicField) -> IntegralBasis {
    let r = |n: i64, d: i64| Rational64::new(n, d);
    let one = [r(1, 1), r(0, 1), r(0, 1)];
    let beta = [r(0, 1), r(0, 1), r(1, field.b() as i64)];
    match field.field_type {
        FieldType::TypeI => IntegralBasis {
            elements: [one, [r(0, 1), r(1, 1), r(0, 1)], beta],
            epsilon: None,
        },
        FieldType::TypeII => {
            let eps: i8 = if field.m % 9 == 1 { 1 } else { -1 };
            let nu = [r(1, 3), r(eps as i64, 3), r(1, 3)];
            IntegralBasis {
                elements: [one, nu, beta],
                epsilon: Some(eps),
            }
        }
    }
}

/// Open ratio window `(lower, upper)`; `upper = None` is unbounded.
#[derive(Debug, Clone)]
pub struct RatioWindow {
    pub lower: Threshold,
    pub upper: Option<Threshold>,
}

impl RatioWindow {
    pub fn new(r1: f64, r2: f64) -> Result<Self> {
        if !(r1 >= 1.0 && r2 > r1) || r1.is_infinite() || r2.is_nan() {
            return invalid(format!("ratio window needs 1 <= R1 < R2, got ({r1}, {r2})"));
        }
        Ok(RatioWindow {
            lower: Threshold::from_f64(r1)?,
            upper: if r2.is_infinite() {
                None
            } else {
                Some(Threshold::from_f64(r2)?)
            },
        })
    }

    pub fn contains(&self, a: u64, b: u64) -> bool {
        self.lower.cmp_ratio(a, b).is_gt()
            && self.upper.as_ref().is_none_or(|u| u.cmp_ratio(a, b).is_lt())
    }
}

/// Canonical couples `a > b` with `a b <= max_product`, ordered by `ab`, then `a`.
pub struct CoupleIter {
    sieve: FactorSieve,
    max_product: u64,
    product: u64,
    pending: Vec<u64>,
}

impl CoupleIter {
    pub fn new(max_product: u64) -> Result<Self> {
        Ok(CoupleIter {
            sieve: FactorSieve::new(max_product.max(1))?,
            max_product,
            product: 1,
            pending: Vec::new(),
        })
    }

    fn refill(&mut self) -> bool {
        while self.product < self.max_product {
            self.product += 1;
            let Some(primes) = self.sieve.squarefree_primes(self.product) else {
                continue;
            };
            // Each split of the prime set is one couple; keep the a > b half.
            let mut divisors = vec![1u64];
            for p in primes {
                let len = divisors.len();
                for i in 0..len {
                    divisors.push(divisors[i] * p);
                }
            }
            let prod = self.product;
            divisors.retain(|&a| a * a > prod);
            divisors.sort_unstable_by(|x, y| y.cmp(x));
            self.pending = divisors;
            return true;
        }
        false
    }
}

impl Iterator for CoupleIter {
    type Item = CarefreeCouple;

    fn next(&mut self) -> Option<CarefreeCouple> {
        loop {
            if let Some(a) = self.pending.pop() {
                return Some(CarefreeCouple::new_unchecked(a, self.product / a));
            }
            if !self.refill() {
                return None;
            }
        }
    }
}

/// Largest `ab` with `k (ab)^2 <= x`.
pub(crate) fn product_bound(x: u64, k: u64) -> u64 {
    (x / k).isqrt()
}

/// Each pure cubic field with `|disc| <= x` (and ratio inside `window`) once,
/// ordered by `ab` then `a`.
pub fn enumerate_fields(
    x: u64,
    window: Option<(f64, f64)>,
) -> Result<impl Iterator<Item = PureCubicField>> {
    if x == 0 {
        return invalid("discriminant bound must be positive");
    }
    let window = window.map(|(r1, r2)| RatioWindow::new(r1, r2)).transpose()?;
    let type_i_bound = product_bound(x, 27);
    Ok(CoupleIter::new(product_bound(x, 3))?.filter_map(move |couple| {
        if let Some(w) = &window {
            if !w.contains(couple.a, couple.b) {
                return None;
            }
        }
        let field = PureCubicField::from_couple(couple).ok()?;
        match field.field_type {
            FieldType::TypeI if couple.product() > type_i_bound => None,
            _ => Some(field),
        }
    }))
}
