//! Moving shapes into `F = {0 <= x <= 1/2, |z| >= 1}`.
//!
//! Type I shapes `i r^(1/3)` are already in `F`. A Type II shape
//! `(1 + i t)/3`, `t = r^(1/3)`, lies in one of four translates of `F`
//! depending on `t^2` against `8, 5, 2`:
//!
//! | `t` in           | translate       | image in `F`                     |
//! |------------------|-----------------|----------------------------------|
//! | `(√8, ∞)`        | `F`             | line `Re z = 1/3`                |
//! | `(√5, √8)`       | `W F`           | circle `|z - 3/2| = 3/2`         |
//! | `(√2, √5)`       | `SU F`          | circle `|z + 1/2| = 3/2`         |
//! | `(1, √2)`        | `SUSW F`        | circle `|z - 1/2| = 3/2`         |
//!
//! The circle column was derived by applying the inverse matrices to the
//! line segment; the tests check every Type II field against it.

use std::cmp::Ordering;

use num_complex::Complex64;
use serde::Serialize;

use super::unimodular::UnimodularMatrix;
use super::{point_from_gram, ShapePoint};
use crate::error::{Error, Result};
use crate::field::FieldType;

/// Curve of the reduced shapes a given field lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    ImaginaryAxis,
    Line,
    CircleAtThreeHalves,
    CircleAtMinusHalf,
    CircleAtHalf,
}

impl Locus {
    /// Centre of the radius-3/2 circle, if the locus is one.
    pub fn centre(&self) -> Option<f64> {
        match self {
            Locus::CircleAtThreeHalves => Some(1.5),
            Locus::CircleAtMinusHalf => Some(-0.5),
            Locus::CircleAtHalf => Some(0.5),
            _ => None,
        }
    }
}

/// Distance from `z` to the curve underlying `locus`.
pub fn locus_distance(z: Complex64, locus: Locus) -> f64 {
    match locus {
        Locus::ImaginaryAxis => z.re.abs(),
        Locus::Line => (z.re - 1.0 / 3.0).abs(),
        _ => ((z - locus.centre().unwrap()).norm() - 1.5).abs(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Reduced {
    #[serde(skip)]
    pub z: Complex64,
    pub reducer: UnimodularMatrix,
    pub locus: Locus,
}

pub fn in_fundamental_domain(z: Complex64, tol: f64) -> bool {
    z.im > 0.0 && z.re >= -tol && z.re <= 0.5 + tol && z.norm_sqr() >= 1.0 - tol
}

const BOUNDARY_TOL: f64 = 1e-12;

fn type_ii_piece(p: &ShapePoint) -> Result<(UnimodularMatrix, Locus)> {
    use UnimodularMatrix as M;
    let (a, b) = (*p.ratio.numer() as u128, *p.ratio.denom() as u128);
    // t^2 against k  <=>  r^2 against k^3.
    let against = |k: u128| (a * a).cmp(&(k * k * k * b * b));
    let t = p.locus_coordinate();
    for k in [8.0f64, 5.0, 2.0] {
        if (t - k.sqrt()).abs() < BOUNDARY_TOL * k.sqrt() {
            return Err(Error::Degenerate(format!(
                "shape coordinate {t} is within {BOUNDARY_TOL} of √{k}"
            )));
        }
    }
    let su = M::S * M::U;
    let piece = match (against(8), against(5), against(2)) {
        (Ordering::Greater, _, _) => (M::IDENTITY, Locus::Line),
        (Ordering::Less, Ordering::Greater, _) => (M::W.inverse(), Locus::CircleAtThreeHalves),
        (Ordering::Less, Ordering::Less, Ordering::Greater) => {
            (su.inverse(), Locus::CircleAtMinusHalf)
        }
        (Ordering::Less, Ordering::Less, Ordering::Less) => {
            ((su * M::S * M::W).inverse(), Locus::CircleAtHalf)
        }
        _ => {
            return Err(Error::Degenerate(format!(
                "ratio {} puts the shape on an interval boundary",
                p.ratio
            )))
        }
    };
    Ok(piece)
}

/// Fills in the reduced point and the matrix taking `z` there.
pub fn reduce_to_fundamental_domain(p: &ShapePoint) -> Result<ShapePoint> {
    let (reducer, locus) = match p.field_type {
        FieldType::TypeI => (UnimodularMatrix::IDENTITY, Locus::ImaginaryAxis),
        FieldType::TypeII => type_ii_piece(p)?,
    };
    let z = reducer.act(p.z);
    if !in_fundamental_domain(z, BOUNDARY_TOL) {
        return Err(Error::Consistency(format!(
            "reducer {reducer} sends {} to {z}, outside the fundamental domain",
            p.z
        )));
    }
    Ok(ShapePoint {
        reduced: Some(Reduced { z, reducer, locus }),
        ..*p
    })
}

/// Classical reduction of a point of `H` into `F` under `GL(2, Z)`.
pub fn reduce_point(mut z: Complex64) -> (Complex64, UnimodularMatrix) {
    let mut acc = UnimodularMatrix::IDENTITY;
    for _ in 0..10_000 {
        let n = z.re.round() as i64;
        if n != 0 {
            let t = UnimodularMatrix::new(1, -n, 0, 1).unwrap();
            z = t.act(z);
            acc = t * acc;
        }
        if z.norm_sqr() < 1.0 - 1e-15 {
            z = UnimodularMatrix::S.act(z);
            acc = UnimodularMatrix::S * acc;
        } else {
            break;
        }
    }
    if z.re < 0.0 {
        let reflect = UnimodularMatrix::new(-1, 0, 0, 1).unwrap();
        z = reflect.act(z);
        acc = reflect * acc;
    }
    (z, acc)
}

/// Lagrange–Gauss reduction of a Gram matrix, then `x` folded into `[0, 1/2]`.
///
/// Works on the lattice directly, independent of the piecewise matrices above.
pub fn gauss_reduce_gram(g: [[f64; 2]; 2]) -> Result<Complex64> {
    let [[mut g00, mut g01], [_, mut g11]] = g;
    point_from_gram(g)?;
    for _ in 0..10_000 {
        if g11 < g00 {
            std::mem::swap(&mut g00, &mut g11);
        }
        let mu = (g01 / g00).round();
        if mu == 0.0 {
            break;
        }
        // b2 <- b2 - mu b1
        g11 += mu * mu * g00 - 2.0 * mu * g01;
        g01 -= mu * g00;
    }
    let z = point_from_gram([[g00, g01], [g01, g11]])?;
    Ok(Complex64::new(z.re.abs(), z.im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::canonicalize;
    use crate::shape::{gram_perp, shape};

    fn reduced(m: u64) -> Reduced {
        reduce_to_fundamental_domain(&shape(&canonicalize(m).unwrap()))
            .unwrap()
            .reduced
            .unwrap()
    }

    #[test]
    fn examples() {
        let r10 = reduced(10);
        assert_eq!(r10.locus, Locus::CircleAtMinusHalf);
        assert_eq!(
            r10.reducer,
            (UnimodularMatrix::S * UnimodularMatrix::U).inverse()
        );
        assert!(locus_distance(r10.z, Locus::CircleAtMinusHalf) < 1e-12);

        let r17 = reduced(17);
        assert_eq!(r17.reducer, UnimodularMatrix::W);
        assert_eq!(r17.locus, Locus::CircleAtThreeHalves);
        assert!(in_fundamental_domain(r17.z, 1e-12));

        let r6 = reduced(6);
        assert_eq!(r6.reducer, UnimodularMatrix::IDENTITY);
        assert!((r6.z - Complex64::new(0.0, 6f64.cbrt())).norm() < 1e-15);
    }

    #[test]
    fn every_piece_occurs() {
        let mut seen = std::collections::HashSet::new();
        for f in crate::field::enumerate_fields(10_000_000, None).unwrap() {
            if f.field_type == FieldType::TypeII {
                seen.insert(reduced(f.m).locus);
            }
        }
        assert_eq!(seen.len(), 4, "{seen:?}");
    }

    #[test]
    fn gauss_oracle_agrees() {
        for m in [10u64, 17, 19, 26, 28, 35, 37, SMALL_T] {
            let f = canonicalize(m).unwrap();
            let r = reduced(m);
            let g = gauss_reduce_gram(gram_perp(&f).evaluate()).unwrap();
            assert!((g - r.z).norm() < 1e-9, "m={m} {g} {}", r.z);
        }
    }

    /// `(a, b) = (19, 17)`: Type II with `t ≈ 1.04`, in `(1, √2)`.
    const SMALL_T: u64 = 19 * 17 * 17;

    #[test]
    fn reduce_point_is_idempotent() {
        for m in [10u64, 17, 26, SMALL_T] {
            let r = reduced(m);
            let (z, g) = reduce_point(r.z);
            assert_eq!(g, UnimodularMatrix::IDENTITY);
            assert_eq!(z, r.z);
        }
    }

    #[test]
    fn reduce_point_lands_in_domain() {
        for (x, y) in [(0.37, 0.01), (-3.2, 0.5), (0.1, 0.2), (7.9, 3.0)] {
            let z0 = Complex64::new(x, y);
            let (z, g) = reduce_point(z0);
            assert!(in_fundamental_domain(z, 1e-12), "{z}");
            assert!((g.act(z0) - z).norm() < 1e-9);
        }
    }
}
