//! Reduces every Type II shape with `ab <= N` into the fundamental domain,
//! tallies which locus each lands on, and checks against lattice reduction.
//!
//!     cargo run --release --example reduce_shapes -- 10000

use std::collections::BTreeMap;

use cubeshape::field::{CoupleIter, FieldType, PureCubicField};
use cubeshape::shape::{gauss_reduce_gram, gram_perp, reduce_to_fundamental_domain, shape};

fn main() -> cubeshape::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let mut by_locus = BTreeMap::new();
    let mut worst = 0f64;
    for c in CoupleIter::new(n)? {
        let f = PureCubicField::from_couple(c)?;
        if f.field_type != FieldType::TypeII {
            continue;
        }
        let r = reduce_to_fundamental_domain(&shape(&f))?.reduced.expect("reduced");
        let entry = by_locus.entry(format!("{:?}", r.locus)).or_insert((0u64, r.reducer, f.m));
        entry.0 += 1;
        worst = worst.max((gauss_reduce_gram(gram_perp(&f).evaluate())? - r.z).norm());
    }
    println!("Type II fields with ab <= {n}:");
    for (locus, (count, reducer, m)) in &by_locus {
        println!("  {locus:<20} {count:>6} fields, reducer {reducer} (e.g. m = {m})");
    }
    println!("max distance to Gauss-reduced point: {worst:.2e}");
    Ok(())
}
