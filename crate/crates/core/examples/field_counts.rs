//! Fields with `|disc| <= X` and ratio in `(R1, R2)`, normalised by
//! `√X log(R2/R1)` and compared with the leading constants.
//!
//!     cargo run --release --example field_counts -- 1 8

use cubeshape::arith::Constants;
use cubeshape::census::{count_fields, field_count_constant};
use cubeshape::FieldType;

fn main() -> cubeshape::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|s| s.parse::<f64>().ok());
    let (r1, r2) = (args.next().unwrap_or(1.0), args.next().unwrap_or(8.0));
    let c = Constants::compute(1_000_000)?.c.value;
    let (k1, k2) = (field_count_constant(FieldType::TypeI, c), field_count_constant(FieldType::TypeII, c));
    println!("{:>14} {:>8} {:>8} {:>10} {:>10}", "X", "N_I", "N_II", "N_I/norm", "N_II/norm");
    for e in (6..=12).step_by(2) {
        let x = 10u64.pow(e);
        let n = count_fields(x, r1, r2)?;
        let norm = (x as f64).sqrt() * (r2 / r1).ln();
        println!(
            "{x:>14} {:>8} {:>8} {:>10.6} {:>10.6}",
            n.n_i,
            n.n_ii,
            n.n_i as f64 / norm,
            n.n_ii as f64 / norm
        );
    }
    println!("limits: {k1:.6} (Type I), {k2:.6} (Type II)");
    Ok(())
}
