//! Exact comparisons of integer ratios against real parameters.
//!
//! Cone parameters, ratio windows and bin edges arrive as `f64`. Every finite
//! `f64` is a dyadic rational, so a [`Threshold`] keeps that rational exactly
//! and answers `a/b <=> t` without rounding. Cubing is exact as well, which is
//! what shape bins need: `r^(1/3)` in `[R1, R2)` is `r` in `[R1^3, R2^3)`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// A positive rational threshold `num / den` with a float shadow for fast paths.
#[derive(Debug, Clone, PartialEq)]
pub struct Threshold {
    num: BigUint,
    den: BigUint,
    approx: f64,
}

impl Threshold {
    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() || x <= 0.0 {
            return invalid(format!("threshold must be finite and positive, got {x}"));
        }
        let bits = x.to_bits();
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mantissa, exp) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        let (num, den) = if exp >= 0 {
            (BigUint::from(mantissa) << (exp as usize), BigUint::one())
        } else {
            (BigUint::from(mantissa), BigUint::one() << ((-exp) as usize))
        };
        Ok(Self::reduced(num, den, x))
    }

    pub fn from_ratio(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return invalid("threshold ratio must have positive numerator and denominator");
        }
        Ok(Self::reduced(
            BigUint::from(num),
            BigUint::from(den),
            num as f64 / den as f64,
        ))
    }

    fn reduced(num: BigUint, den: BigUint, approx: f64) -> Self {
        let g = num.gcd(&den);
        Threshold {
            num: num / &g,
            den: den / &g,
            approx,
        }
    }

    /// The exact cube of this threshold.
    pub fn cubed(&self) -> Self {
        Threshold {
            num: self.num.pow(3),
            den: self.den.pow(3),
            approx: self.approx.powi(3),
        }
    }

    pub fn value(&self) -> f64 {
        self.approx
    }

    /// The threshold as a fraction of machine integers, if it fits.
    pub fn as_u64_ratio(&self) -> Option<(u64, u64)> {
        Some((self.num.to_u64()?, self.den.to_u64()?))
    }

    /// Compares `p / q` with the threshold (`q > 0`).
    pub fn cmp_ratio(&self, p: u64, q: u64) -> Ordering {
        debug_assert!(q > 0);
        let lhs = p as f64;
        let rhs = self.approx * q as f64;
        if p < (1 << 53) && q < (1 << 53) && (lhs - rhs).abs() > 1e-12 * lhs.max(rhs) {
            return lhs.partial_cmp(&rhs).unwrap_or(Ordering::Equal);
        }
        (BigUint::from(p) * &self.den).cmp(&(BigUint::from(q) * &self.num))
    }

    /// `floor(t * k)`.
    pub fn floor_mul(&self, k: u64) -> u64 {
        let v = (BigUint::from(k) * &self.num) / &self.den;
        v.to_u64().unwrap_or(u64::MAX)
    }

    /// `ceil(t * k)`.
    pub fn ceil_mul(&self, k: u64) -> u64 {
        let (q, r) = (BigUint::from(k) * &self.num).div_rem(&self.den);
        let q = if r.is_zero() { q } else { q + 1u32 };
        q.to_u64().unwrap_or(u64::MAX)
    }

    /// `floor(k / t)`.
    pub fn floor_div(&self, k: u64) -> u64 {
        let v = (BigUint::from(k) * &self.den) / &self.num;
        v.to_u64().unwrap_or(u64::MAX)
    }

    /// `ceil(k / t)`.
    pub fn ceil_div(&self, k: u64) -> u64 {
        let n = BigUint::from(k) * &self.den;
        let (q, r) = n.div_rem(&self.num);
        let q = if r.is_zero() { q } else { q + 1u32 };
        q.to_u64().unwrap_or(u64::MAX)
    }
}
