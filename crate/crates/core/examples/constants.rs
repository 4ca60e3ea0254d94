//! The carefree density `C`, `κ`, `γ` and the shape normalisers, with tail
//! bounds, for increasing prime cutoffs.
//!
//!     cargo run --release --example constants

use cubeshape::arith::Constants;
use cubeshape::census::{normalizer_coefficient, shape_normalizer};
use cubeshape::FieldType;

fn main() -> cubeshape::Result<()> {
    println!("{:>10} {:>16} {:>10} {:>16} {:>10}", "P", "C", "tail", "kappa", "tail");
    let mut last = None;
    for p in [1_000u64, 10_000, 100_000, 1_000_000, 10_000_000] {
        let k = Constants::compute(p)?;
        println!(
            "{p:>10} {:>16.12} {:>10.2e} {:>16.12} {:>10.2e}",
            k.c.value, k.c.tail_bound, k.kappa.value, k.kappa.tail_bound
        );
        last = Some(k);
    }
    let k = last.expect("at least one bound");
    println!("gamma = {:.15}", k.gamma.value);
    let (ci, cii) = (shape_normalizer(FieldType::TypeI, k.c.value), shape_normalizer(FieldType::TypeII, k.c.value));
    println!("C_I = {ci:.12}, C_II = {cii:.12}");
    println!(
        "C_I / C_II = {} exactly",
        normalizer_coefficient(FieldType::TypeI) / normalizer_coefficient(FieldType::TypeII)
    );
    Ok(())
}
