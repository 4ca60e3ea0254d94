//! Shapes of pure cubic fields as points of the upper half-plane.
//!
//! The lattice `O_K^⊥` (ring of integers projected orthogonally to `1` in
//! Minkowski space) has a Gram matrix whose entries, divided by `α^2`, are
//! exact elements `q0 + q1 r^(2/3)` of a two-dimensional `Q`-space. Shapes
//! are therefore carried exactly as `x` and `y^3` in `Q`, and only turned
//! into floats for output and reduction.

mod embedding;
mod reduce;
mod unimodular;

use std::collections::HashMap;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::field::{FieldType, PureCubicField};

pub use embedding::{
    embed, inner_product, numeric_embedding_gram, numeric_perp_gram, perp_basis, project_perp,
};
pub use reduce::{
    gauss_reduce_gram, in_fundamental_domain, locus_distance, reduce_point,
    reduce_to_fundamental_domain, Locus, Reduced,
};
pub use unimodular::UnimodularMatrix;

/// `rational + surd * r^(2/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurdEntry {
    pub rational: Rational64,
    pub surd: Rational64,
}

impl SurdEntry {
    fn new(rational: (i64, i64), surd: (i64, i64)) -> Self {
        SurdEntry {
            rational: Rational64::new(rational.0, rational.1),
            surd: Rational64::new(surd.0, surd.1),
        }
    }

    pub fn eval(&self, r_two_thirds: f64) -> f64 {
        to_f64(self.rational) + to_f64(self.surd) * r_two_thirds
    }
}

pub(crate) fn to_f64(q: Rational64) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Gram matrix of `O_K^⊥` divided by `α^2`, for a field of ratio `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactGram {
    pub ratio: Rational64,
    pub entries: [[SurdEntry; 2]; 2],
}

impl ExactGram {
    /// `r^(2/3)`.
    pub fn r_two_thirds(&self) -> f64 {
        to_f64(self.ratio).cbrt().powi(2)
    }

    pub fn evaluate(&self) -> [[f64; 2]; 2] {
        let s = self.r_two_thirds();
        self.entries.map(|row| row.map(|e| e.eval(s)))
    }

    /// Coefficients `[d0, d1, d2]` of the determinant `d0 + d1 s + d2 s^2`, `s = r^(2/3)`.
    pub fn det_coefficients(&self) -> [Rational64; 3] {
        let [[e00, e01], [_, e11]] = self.entries;
        [
            e00.rational * e11.rational - e01.rational * e01.rational,
            e00.rational * e11.surd + e00.surd * e11.rational
                - Rational64::from_integer(2) * e01.rational * e01.surd,
            e00.surd * e11.surd - e01.surd * e01.surd,
        ]
    }

    /// Symmetric, positive `(0,0)` entry free of `s`, and determinant positive for every `s > 1`.
    pub fn is_well_formed(&self) -> bool {
        let e = &self.entries;
        if e[0][1] != e[1][0] || !e[0][0].surd.is_zero() || !e[0][0].rational.is_positive() {
            return false;
        }
        let [d0, d1, d2] = self.det_coefficients();
        let one = Rational64::from_integer(1);
        let at_one = d0 + d1 + d2;
        if d2.is_negative() {
            false
        } else if d2.is_zero() {
            d1.is_positive() && !at_one.is_negative() || d1.is_zero() && d0.is_positive()
        } else {
            let vertex = -d1 / (d2 * 2);
            if vertex <= one {
                !at_one.is_negative()
            } else {
                (d0 + d1 * vertex + d2 * vertex * vertex).is_positive()
            }
        }
    }
}

/// Normalised Gram matrix of `O_K^⊥`.
///
/// Type I uses `{α^⊥, β^⊥}`: `diag(3, 3 s)`. Type II uses the basis
/// `{3ν^⊥ - bβ^⊥, ν^⊥ - kβ^⊥}` (`b = 3k ± 1`): `[[3, 1], [1, (1 + s)/3]]`.
pub fn gram_perp(field: &PureCubicField) -> ExactGram {
    let zero = (0, 1);
    let entries = match field.field_type {
        FieldType::TypeI => [
            [SurdEntry::new((3, 1), zero), SurdEntry::new(zero, zero)],
            [SurdEntry::new(zero, zero), SurdEntry::new(zero, (3, 1))],
        ],
        FieldType::TypeII => [
            [SurdEntry::new((3, 1), zero), SurdEntry::new((1, 1), zero)],
            [SurdEntry::new((1, 1), zero), SurdEntry::new((1, 3), (1, 3))],
        ],
    };
    ExactGram {
        ratio: field.ratio,
        entries,
    }
}

/// The point `x + iy` of a rank-2 lattice with Gram matrix `g`.
pub fn point_from_gram(g: [[f64; 2]; 2]) -> Result<Complex64> {
    let [[g00, g01], [g10, g11]] = g;
    let scale = g00.abs().max(g11.abs()).max(g01.abs());
    if !(g00 > 0.0) || (g01 - g10).abs() > 1e-12 * scale || !(g00 * g11 - g01 * g10 > 0.0) {
        return invalid(format!("Gram matrix {g:?} is not positive definite"));
    }
    let x = g01 / g00;
    let y = (g11 / g00 - x * x).sqrt();
    Ok(Complex64::new(x, y))
}

/// Exact shape of a field plus its float image in the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapePoint {
    pub field_type: FieldType,
    pub ratio: Rational64,
    /// `0` (Type I) or `1/3` (Type II).
    pub x: Rational64,
    /// `r` (Type I) or `r/27` (Type II).
    pub y_cubed: Rational64,
    pub z: Complex64,
    /// Filled in by [`reduce_to_fundamental_domain`].
    pub reduced: Option<Reduced>,
}

impl ShapePoint {
    /// Exact identity of the shape: `(type, x, y^3)`.
    pub fn key(&self) -> (FieldType, Rational64, Rational64) {
        (self.field_type, self.x, self.y_cubed)
    }

    /// `r^(1/3)`, the coordinate along the shape locus for either type.
    pub fn locus_coordinate(&self) -> f64 {
        to_f64(self.ratio).cbrt()
    }
}

/// `i r^(1/3)` for Type I, `(1 + i r^(1/3))/3` for Type II.
pub fn shape(field: &PureCubicField) -> ShapePoint {
    let t = to_f64(field.ratio).cbrt();
    let (x, y_cubed, z) = match field.field_type {
        FieldType::TypeI => (Rational64::zero(), field.ratio, Complex64::new(0.0, t)),
        FieldType::TypeII => (
            Rational64::new(1, 3),
            field.ratio / 27,
            Complex64::new(1.0 / 3.0, t / 3.0),
        ),
    };
    ShapePoint {
        field_type: field.field_type,
        ratio: field.ratio,
        x,
        y_cubed,
        z,
        reduced: None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InjectivityReport {
    pub fields: usize,
    pub distinct_shapes: usize,
    /// Pairs of distinct fields with the same exact shape.
    pub collisions: Vec<(PureCubicField, PureCubicField)>,
    /// Discriminants shared by more than one field in the list.
    pub shared_discriminants: usize,
}

/// Groups fields by exact shape key and reports any collisions.
pub fn verify_injectivity<'a, I>(fields: I) -> InjectivityReport
where
    I: IntoIterator<Item = &'a PureCubicField>,
{
    let mut by_shape: HashMap<(FieldType, Rational64, Rational64), PureCubicField> =
        HashMap::new();
    let mut by_disc: HashMap<i128, usize> = HashMap::new();
    let mut collisions = Vec::new();
    let mut count = 0;
    for f in fields {
        count += 1;
        *by_disc.entry(f.discriminant).or_default() += 1;
        let key = shape(f).key();
        match by_shape.get(&key) {
            Some(prev) if prev != f => collisions.push((*prev, *f)),
            Some(_) => {}
            None => {
                by_shape.insert(key, *f);
            }
        }
    }
    InjectivityReport {
        fields: count,
        distinct_shapes: by_shape.len(),
        collisions,
        shared_discriminants: by_disc.values().filter(|&&n| n > 1).count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::canonicalize;

    #[test]
    fn gram_examples() {
        let g6 = gram_perp(&canonicalize(6).unwrap());
        assert_eq!(g6.ratio, Rational64::from_integer(6));
        assert_eq!(g6.entries[0][0], SurdEntry::new((3, 1), (0, 1)));
        assert_eq!(g6.entries[1][1], SurdEntry::new((0, 1), (3, 1)));
        assert_eq!(g6.entries[0][1], SurdEntry::new((0, 1), (0, 1)));
        let g10 = gram_perp(&canonicalize(10).unwrap());
        assert_eq!(g10.entries[0][1], SurdEntry::new((1, 1), (0, 1)));
        assert_eq!(g10.entries[1][1], SurdEntry::new((1, 3), (1, 3)));
        assert!(g6.is_well_formed() && g10.is_well_formed());
        assert_eq!(g6.det_coefficients(), [0, 9, 0].map(Rational64::from_integer));
    }

    #[test]
    fn point_from_gram_examples() {
        let z = point_from_gram(gram_perp(&canonicalize(6).unwrap()).evaluate()).unwrap();
        assert!(z.re.abs() < 1e-15);
        assert!((z.im - 6f64.cbrt()).abs() < 1e-12);
        let z = point_from_gram(gram_perp(&canonicalize(10).unwrap()).evaluate()).unwrap();
        assert!((z.re - 1.0 / 3.0).abs() < 1e-15);
        assert!((z.im - 10f64.cbrt() / 3.0).abs() < 1e-12);
        let z = point_from_gram([[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(z, Complex64::new(0.0, 1.0));
        assert!(point_from_gram([[1.0, 2.0], [2.0, 1.0]]).is_err());
        assert!(point_from_gram([[-1.0, 0.0], [0.0, 1.0]]).is_err());
    }

    #[test]
    fn shape_examples() {
        let s6 = shape(&canonicalize(6).unwrap());
        assert_eq!(s6.key(), (FieldType::TypeI, Rational64::zero(), Rational64::from_integer(6)));
        assert!((s6.z.im - 1.817_120_593).abs() < 1e-9);
        let s12 = shape(&canonicalize(12).unwrap());
        assert_eq!(s12.y_cubed, Rational64::new(3, 2));
        assert!((s12.z.im - 1.5f64.cbrt()).abs() < 1e-15);
        let s10 = shape(&canonicalize(10).unwrap());
        assert_eq!(s10.x, Rational64::new(1, 3));
        assert_eq!(s10.y_cubed, Rational64::new(10, 27));
        assert!((s10.z.im - 0.718_144).abs() < 1e-6);
    }

    #[test]
    fn injectivity_small() {
        let f6 = canonicalize(6).unwrap();
        let f12 = canonicalize(12).unwrap();
        let r = verify_injectivity([&f6, &f12]);
        assert!(r.collisions.is_empty());
        assert_eq!(r.distinct_shapes, 2);
        assert_eq!(r.shared_discriminants, 1);
        let single = verify_injectivity([&f6]);
        assert!(single.collisions.is_empty());
        assert_eq!(single.fields, 1);
    }
}
