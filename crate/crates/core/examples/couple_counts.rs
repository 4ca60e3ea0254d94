//! Strongly carefree couples in the cone `1/R <= a/b <= R` under `ab <= N`,
//! against `C N log R` (and `4C/5`, `C/5` for the two types).
//!
//!     cargo run --release --example couple_counts -- 10

use cubeshape::arith::Constants;
use cubeshape::census::{count_couples, count_couples_by_regions};

fn main() -> cubeshape::Result<()> {
    let r: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10.0);
    let c = Constants::compute(1_000_000)?.c.value;
    println!("{:>10} {:>10} {:>9} {:>9} {:>9}", "N", "S", "S/NlogR", "S_I/S", "S_II/S");
    for n in [10_000u64, 100_000, 1_000_000, 10_000_000] {
        let s = count_couples(n, r)?;
        let t = s.total as f64;
        println!(
            "{n:>10} {:>10} {:>9.6} {:>9.5} {:>9.5}",
            s.total,
            t / (n as f64 * r.ln()),
            s.type_i as f64 / t,
            s.type_ii as f64 / t
        );
    }
    println!("C = {c:.9}; limits 1, 4/5, 1/5 for the ratios");
    let reg = count_couples_by_regions(1_000_000, r)?;
    println!(
        "regions at N = 10^6: (i) {} - (ii) {} + (iii) {} - (iv) {} = {}",
        reg.i.total, reg.ii.total, reg.iii.total, reg.iv.total, reg.alternating_sum().total
    );
    Ok(())
}
