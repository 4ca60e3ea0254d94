//! Numeric Minkowski embedding `j_R(x) = (σ(x), Re τ(x), Im τ(x))` with the
//! pairing `diag(1, 2, 2)`, where `σ(α) = m^(1/3)` and `τ(α) = ω m^(1/3)`.
//!
//! Used only as an independent float route for checking the exact Gram data.

use num_rational::Rational64;

use super::to_f64;
use crate::field::{integral_basis, FieldElement, FieldType, PureCubicField};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

pub fn embed(e: &FieldElement, alpha: f64) -> [f64; 3] {
    let [c0, c1, c2] = e.map(to_f64);
    let (lin, quad) = (c1 * alpha, c2 * alpha * alpha);
    [c0 + lin + quad, c0 - 0.5 * (lin + quad), SQRT3_2 * (lin - quad)]
}

pub fn inner_product(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    u[0] * v[0] + 2.0 * u[1] * v[1] + 2.0 * u[2] * v[2]
}

/// `v - <v, j(1)>/3 · j(1)`.
pub fn project_perp(v: &[f64; 3]) -> [f64; 3] {
    let one = [1.0, 1.0, 0.0];
    let c = inner_product(v, &one) / 3.0;
    [v[0] - c, v[1] - c, v[2]]
}

fn real_cube_root(field: &PureCubicField) -> f64 {
    (field.m as f64).cbrt()
}

fn gram<const N: usize>(vs: &[[f64; 3]; N]) -> [[f64; N]; N] {
    std::array::from_fn(|i| std::array::from_fn(|j| inner_product(&vs[i], &vs[j])))
}

/// Gram matrix of the integral basis under `j_R`.
pub fn numeric_embedding_gram(field: &PureCubicField) -> [[f64; 3]; 3] {
    let alpha = real_cube_root(field);
    let basis = integral_basis(field);
    gram(&basis.elements.map(|e| embed(&e, alpha)))
}

/// Field elements whose projections form the basis used by [`super::gram_perp`].
pub fn perp_basis(field: &PureCubicField) -> [FieldElement; 2] {
    let r = |n: i64, d: i64| Rational64::new(n, d);
    let b = field.b() as i64;
    let beta = [r(0, 1), r(0, 1), r(1, b)];
    match field.field_type {
        FieldType::TypeI => [[r(0, 1), r(1, 1), r(0, 1)], beta],
        FieldType::TypeII => {
            let nu = integral_basis(field).elements[1];
            // b = 3k + ε with ε = ±1
            let k = if b % 3 == 1 { (b - 1) / 3 } else { (b + 1) / 3 };
            let three = Rational64::from_integer(3);
            let bq = Rational64::from_integer(b);
            let kq = Rational64::from_integer(k);
            let v1 = std::array::from_fn(|i| three * nu[i] - bq * beta[i]);
            let v2 = std::array::from_fn(|i| nu[i] - kq * beta[i]);
            [v1, v2]
        }
    }
}

/// Gram matrix of the projected basis, un-normalised (carries the `α^2`).
pub fn numeric_perp_gram(field: &PureCubicField) -> [[f64; 2]; 2] {
    let alpha = real_cube_root(field);
    gram(&perp_basis(field).map(|e| project_perp(&embed(&e, alpha))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::canonicalize;
    use crate::shape::gram_perp;

    fn det3(g: &[[f64; 3]; 3]) -> f64 {
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn m6_is_orthogonal() {
        let g = numeric_embedding_gram(&canonicalize(6).unwrap());
        let expect = [3.0, 3.0 * 6f64.powf(2.0 / 3.0), 3.0 * 36f64.powf(2.0 / 3.0)];
        for i in 0..3 {
            assert!(rel(g[i][i], expect[i]) < 1e-12);
            for j in 0..3 {
                if i != j {
                    assert!(g[i][j].abs() < 1e-12 * expect[2]);
                }
            }
        }
    }

    #[test]
    fn m2_alpha_entry() {
        let g = numeric_embedding_gram(&canonicalize(2).unwrap());
        assert!((g[1][1] - 4.7622).abs() < 1e-4);
    }

    #[test]
    fn determinants_match_discriminant() {
        for m in [2u64, 6, 10, 12, 17, 28, 30, 5491, 100] {
            let f = canonicalize(m).unwrap();
            let g = numeric_embedding_gram(&f);
            let d = f.abs_discriminant() as f64;
            assert!(rel(det3(&g), d) < 1e-9, "m={m}");
            let p = numeric_perp_gram(&f);
            assert!(rel(3.0 * (p[0][0] * p[1][1] - p[0][1] * p[1][0]), d) < 1e-9);
            for i in 0..3 {
                for j in 0..3 {
                    assert!((g[i][j] - g[j][i]).abs() < 1e-9 * g[i][i].max(1.0));
                }
            }
        }
    }

    #[test]
    fn perp_gram_matches_exact_gram() {
        for m in [2u64, 10, 12, 17, 28, 5491] {
            let f = canonicalize(m).unwrap();
            let alpha2 = (f.m as f64).cbrt().powi(2);
            let exact = gram_perp(&f).evaluate();
            let num = numeric_perp_gram(&f);
            for i in 0..2 {
                for j in 0..2 {
                    let e = exact[i][j] * alpha2;
                    assert!((e - num[i][j]).abs() <= 1e-9 * e.abs().max(num[0][0]), "m={m}");
                }
            }
        }
    }
}
