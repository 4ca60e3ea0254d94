use rayon::prelude::*;
use serde::Serialize;

use super::fields::hyperbola_bound;
use super::shape_normalizer;
use crate::arith::{gcd, SquarefreeSieve};
use crate::error::{invalid, Result};
use crate::field::{classify, FieldType};
use crate::threshold::Threshold;

/// Bin edges on the shape coordinate `t = r^(1/3)` turned into ratio
/// thresholds `t^3`. This is the only place the cube is taken.
pub fn shape_bin_thresholds(edges: &[f64]) -> Result<Vec<Threshold>> {
    if edges.len() < 2 {
        return invalid("need at least two bin edges");
    }
    if edges.iter().any(|e| !e.is_finite() || *e < 1.0) {
        return invalid(format!("bin edges must be finite and >= 1, got {edges:?}"));
    }
    if edges.windows(2).any(|w| w[0] >= w[1]) {
        return invalid(format!("bin edges must be strictly increasing, got {edges:?}"));
    }
    edges
        .iter()
        .map(|&e| Threshold::from_f64(e).map(|t| t.cubed()))
        .collect()
}

/// Binned masses of the shapes of one type with `|disc| <= X`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalMeasure {
    pub field_type: FieldType,
    pub x: u64,
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub masses: Vec<f64>,
    /// `C_I` or `C_II`.
    pub normalizer_c: f64,
}

/// One line of the CSV tables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureRow {
    #[serde(rename = "X")]
    pub x: u64,
    #[serde(rename = "type")]
    pub field_type: FieldType,
    #[serde(rename = "R1")]
    pub r1: f64,
    #[serde(rename = "R2")]
    pub r2: f64,
    pub count: u64,
    pub normalized_mass: f64,
    /// `log(R2/R1)`, the limiting mass.
    pub target: f64,
    pub deviation: f64,
}

impl EmpiricalMeasure {
    pub fn rows(&self) -> Vec<MeasureRow> {
        (0..self.counts.len())
            .map(|i| {
                let (r1, r2) = (self.edges[i], self.edges[i + 1]);
                let target = (r2 / r1).ln();
                MeasureRow {
                    x: self.x,
                    field_type: self.field_type,
                    r1,
                    r2,
                    count: self.counts[i],
                    normalized_mass: self.masses[i],
                    target,
                    deviation: (self.masses[i] - target).abs(),
                }
            })
            .collect()
    }

    fn scale(&self) -> f64 {
        self.normalizer_c * (self.x as f64).sqrt()
    }

    /// Mass of the union of bins `first..last` (exclusive), from the summed count.
    pub fn mass_of_bins(&self, first: usize, last: usize) -> f64 {
        self.counts[first..last].iter().sum::<u64>() as f64 / self.scale()
    }
}

/// Counts fields of `field_type` with `|disc| <= X` and shape coordinate in
/// each half-open bin `[e_j, e_{j+1})`, divided by `C_? √X`.
pub fn empirical_measure(
    field_type: FieldType,
    x: u64,
    edges: &[f64],
    c: f64,
) -> Result<EmpiricalMeasure> {
    let cubes = shape_bin_thresholds(edges)?;
    if x == 0 {
        return invalid("discriminant bound must be positive");
    }
    let n = hyperbola_bound(x, field_type);
    let bins = edges.len() - 1;
    let counts = if n < 2 {
        vec![0; bins]
    } else {
        bin_counts(field_type, n, &cubes)?
    };
    let normalizer_c = shape_normalizer(field_type, c);
    let scale = normalizer_c * (x as f64).sqrt();
    Ok(EmpiricalMeasure {
        field_type,
        x,
        edges: edges.to_vec(),
        masses: counts.iter().map(|&k| k as f64 / scale).collect(),
        counts,
        normalizer_c,
    })
}

/// For each `b`, the `a` in bin `j` form the run `[ceil(c_j b), ceil(c_{j+1} b))`.
fn bin_counts(field_type: FieldType, n: u64, cubes: &[Threshold]) -> Result<Vec<u64>> {
    let sieve = SquarefreeSieve::new(n)?;
    let lowest = &cubes[0];
    // a >= c_0 b and ab <= N imply b^2 <= N / c_0.
    let b_max = lowest.floor_div(n).isqrt();
    let bins = cubes.len() - 1;
    let per_b: Vec<Vec<u64>> = (1..=b_max)
        .into_par_iter()
        .filter(|&b| sieve.is_squarefree(b))
        .map(|b| {
            let a_cap = n / b;
            let starts: Vec<u64> = cubes.iter().map(|c| c.ceil_mul(b)).collect();
            (0..bins)
                .map(|j| {
                    let lo = starts[j].max(b + 1);
                    let hi = starts[j + 1].saturating_sub(1).min(a_cap);
                    (lo..=hi)
                        .filter(|&a| {
                            sieve.is_squarefree(a)
                                && gcd(a, b) == 1
                                && classify(a, b) == field_type
                        })
                        .count() as u64
                })
                .collect()
        })
        .collect();
    Ok((0..bins).map(|j| per_b.iter().map(|v| v[j]).sum()).collect())
}

/// Mass of one shape interval `[R1, R2)` across increasing `X`.
pub fn convergence_table(
    field_type: FieldType,
    interval: (f64, f64),
    xs: &[u64],
    c: f64,
) -> Result<Vec<MeasureRow>> {
    let (r1, r2) = interval;
    if !(r2 > r1) {
        return invalid(format!("interval [{r1}, {r2}) has no length"));
    }
    if xs.is_empty() || xs.windows(2).any(|w| w[0] >= w[1]) {
        return invalid(format!("X values must be strictly increasing, got {xs:?}"));
    }
    xs.iter()
        .map(|&x| Ok(empirical_measure(field_type, x, &[r1, r2], c)?.rows()[0]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::enumerate_fields;

    #[test]
    fn empty_when_no_fields() {
        for ty in [FieldType::TypeI, FieldType::TypeII] {
            let m = empirical_measure(ty, 100, &[1.0, 2.0, 4.0], 0.28).unwrap();
            assert_eq!(m.counts, vec![0, 0]);
            assert!(m.masses.iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn bins_match_enumeration() {
        let x = 50_000_000u64;
        let edges = [1.0, 1.2, 2.0, 3.0, 5.5];
        for ty in [FieldType::TypeI, FieldType::TypeII] {
            let m = empirical_measure(ty, x, &edges, 0.28).unwrap();
            let mut want = vec![0u64; edges.len() - 1];
            for f in enumerate_fields(x, None).unwrap().filter(|f| f.field_type == ty) {
                let t = f.ratio_f64().cbrt();
                if let Some(j) = (0..want.len()).find(|&j| edges[j] <= t && t < edges[j + 1]) {
                    want[j] += 1;
                }
            }
            assert_eq!(m.counts, want, "{ty}");
        }
    }

    #[test]
    fn unit_bin_in_t_is_ratio_window_up_to_eight() {
        // No squarefree a has a/b = 8, so [1, 2) in t agrees with the open window (1, 8).
        let m = empirical_measure(FieldType::TypeI, 10_000, &[1.0, 2.0], 0.28).unwrap();
        let want = enumerate_fields(10_000, Some((1.0, 8.0)))
            .unwrap()
            .filter(|f| f.field_type == FieldType::TypeI)
            .count() as u64;
        assert_eq!(m.counts[0], want);
    }

    #[test]
    fn bad_edges() {
        assert!(empirical_measure(FieldType::TypeI, 100, &[1.0], 0.3).is_err());
        assert!(empirical_measure(FieldType::TypeI, 100, &[2.0, 1.0], 0.3).is_err());
        assert!(empirical_measure(FieldType::TypeI, 100, &[0.5, 1.0], 0.3).is_err());
        assert!(convergence_table(FieldType::TypeI, (2.0, 2.0), &[10, 100], 0.3).is_err());
        assert!(convergence_table(FieldType::TypeI, (1.0, 2.0), &[100, 10], 0.3).is_err());
    }
}
