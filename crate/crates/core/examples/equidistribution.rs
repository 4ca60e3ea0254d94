//! Empirical shape measures on bins of `r^(1/3)`, normalised by `C_? √X`,
//! approaching `log(R2/R1)` as `X` grows. Prints CSV.
//!
//!     cargo run --release --example equidistribution -- 1 2 4 8

use cubeshape::arith::Constants;
use cubeshape::census::empirical_measure;
use cubeshape::output::measure_csv;
use cubeshape::FieldType;

fn main() -> cubeshape::Result<()> {
    let mut edges: Vec<f64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if edges.len() < 2 {
        edges = vec![1.0, 2.0, 4.0, 8.0];
    }
    let c = Constants::compute(1_000_000)?.c.value;
    let mut rows = Vec::new();
    for ty in [FieldType::TypeI, FieldType::TypeII] {
        for x in [100_000_000u64, 10_000_000_000, 1_000_000_000_000] {
            rows.extend(empirical_measure(ty, x, &edges, c)?.rows());
        }
    }
    print!("{}", measure_csv(&rows));
    Ok(())
}
