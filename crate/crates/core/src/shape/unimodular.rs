use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{invalid, Result};

/// An element of `GL(2, Z)` acting on the upper half-plane.
///
/// Determinant `+1` acts by `z -> (az + b)/(cz + d)`. A determinant `-1`
/// element `g` is written `W (W g)` with `W g` in `SL(2, Z)`, and `W` acts by
/// `z -> 1/conj(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UnimodularMatrix([[i64; 2]; 2]);

impl UnimodularMatrix {
    pub const IDENTITY: Self = UnimodularMatrix([[1, 0], [0, 1]]);
    pub const W: Self = UnimodularMatrix([[0, 1], [1, 0]]);
    pub const S: Self = UnimodularMatrix([[0, -1], [1, 0]]);
    pub const U: Self = UnimodularMatrix([[1, -1], [0, 1]]);

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = UnimodularMatrix([[a, b], [c, d]]);
        match a.checked_mul(d).zip(b.checked_mul(c)) {
            Some((ad, bc)) if (ad - bc).abs() == 1 => Ok(m),
            _ => invalid(format!("[[{a}, {b}], [{c}, {d}]] is not unimodular")),
        }
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.0
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        let det = self.det();
        UnimodularMatrix([[det * d, -det * b], [-det * c, det * a]])
    }

    fn mobius(&self, z: Complex64) -> Complex64 {
        let [[a, b], [c, d]] = self.0;
        (z * a as f64 + b as f64) / (z * c as f64 + d as f64)
    }

    pub fn act(&self, z: Complex64) -> Complex64 {
        if self.det() == 1 {
            self.mobius(z)
        } else {
            let w = (Self::W * *self).mobius(z);
            w.conj().inv()
        }
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = rhs.0;
        UnimodularMatrix([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}
