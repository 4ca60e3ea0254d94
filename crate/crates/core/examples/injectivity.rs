//! Distinct pure cubic fields have distinct shapes, even when they share a
//! discriminant.
//!
//!     cargo run --release --example injectivity -- 10000000000

use cubeshape::field::enumerate_fields;
use cubeshape::shape::verify_injectivity;

fn main() -> cubeshape::Result<()> {
    let x: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000_000_000);
    let fields: Vec<_> = enumerate_fields(x, None)?.collect();
    let report = verify_injectivity(&fields);
    println!("|disc| <= {x}: {} fields, {} distinct shapes", report.fields, report.distinct_shapes);
    println!("discriminants shared by several fields: {}", report.shared_discriminants);
    println!("shape collisions: {}", report.collisions.len());
    Ok(())
}
