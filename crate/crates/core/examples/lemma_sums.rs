//! Coprimality counts in progressions and the multiplicative partial sums
//! behind the couple asymptotics, next to their main terms.
//!
//!     cargo run --release --example lemma_sums

use cubeshape::arith::{count_s, count_t, formula_s, formula_t, omega, perron_sum, Constants};

fn main() -> cubeshape::Result<()> {
    println!("{:>6} {:>4} {:>4} {:>9} {:>9} {:>12} {:>9} {:>12}", "a", "a'", "n", "x", "T", "main", "S", "main");
    for (a, a_prime, n, x) in [(30u64, 1u64, 7u64, 1e5), (385, 4, 9, 1e5), (1, 2, 9, 1e6), (2_310, 13, 17, 1e6)] {
        let t = count_t(a, a_prime, n, x)?;
        let s = count_s(a, a_prime, n, x)?;
        println!(
            "{a:>6} {a_prime:>4} {n:>4} {x:>9.0} {t:>9} {:>12.2} {s:>9} {:>12.2}   (2^omega(a) = {})",
            formula_t(a, n, x),
            formula_s(a, n, x),
            1u64 << omega(a)
        );
    }
    let k = Constants::compute(1_000_000)?;
    println!("\n{:>2} {:>3} {:>10} {:>18} {:>18} {:>10}", "k", "n", "x", "sum", "main term", "rel");
    for (kk, n) in [(0u32, 1u64), (0, 9), (1, 1), (2, 3)] {
        for x in [1e5, 1e7] {
            let p = perron_sum(kk, n, x, &k)?;
            println!(
                "{kk:>2} {n:>3} {x:>10.0} {:>18.6} {:>18.6} {:>10.2e}",
                p.exact_sum,
                p.main_term,
                (p.exact_sum - p.main_term).abs() / p.main_term
            );
        }
    }
    Ok(())
}
