//! Counts of strongly carefree couples and pure cubic fields, and the
//! empirical shape measures normalised by `C_? √X`.

mod couples;
mod fields;
mod measure;

use num_rational::Rational64;

use crate::field::FieldType;

pub use couples::{count_couples, count_couples_by_regions, CoupleCount, RegionCounts, Tally};
pub use fields::{count_fields, count_fields_via_couples, FieldCount};
pub use measure::{
    convergence_table, empirical_measure, shape_bin_thresholds, EmpiricalMeasure, MeasureRow,
};

/// `C_? = coefficient · C · √3`: `2/15` for Type I, `1/10` for Type II.
pub fn normalizer_coefficient(field_type: FieldType) -> Rational64 {
    match field_type {
        FieldType::TypeI => Rational64::new(2, 15),
        FieldType::TypeII => Rational64::new(1, 10),
    }
}

/// `C_I = 2C√3/15`, `C_II = C√3/10`.
pub fn shape_normalizer(field_type: FieldType, c: f64) -> f64 {
    let k = normalizer_coefficient(field_type);
    *k.numer() as f64 / *k.denom() as f64 * c * 3f64.sqrt()
}

/// Leading constant of `N_?(X, R1, R2) / (√X log(R2/R1))`:
/// `2C/(15√3)` and `C/(10√3)`, i.e. `C_?/3`.
pub fn field_count_constant(field_type: FieldType, c: f64) -> f64 {
    shape_normalizer(field_type, c) / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizer_ratio_is_four_thirds() {
        assert_eq!(
            normalizer_coefficient(FieldType::TypeI) / normalizer_coefficient(FieldType::TypeII),
            Rational64::new(4, 3)
        );
        let c = 0.3;
        assert!((field_count_constant(FieldType::TypeI, c) - 2.0 * c / (15.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!((field_count_constant(FieldType::TypeII, c) - c / (10.0 * 3f64.sqrt())).abs() < 1e-15);
    }
}
