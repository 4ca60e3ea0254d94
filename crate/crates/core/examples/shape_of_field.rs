//! Canonical data, integral basis and exact shape of `Q(m^(1/3))`.
//!
//!     cargo run --example shape_of_field -- 6 12 10

use cubeshape::field::{canonicalize, integral_basis};
use cubeshape::shape::{gram_perp, shape};

fn main() -> cubeshape::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let ms = if args.is_empty() { vec![6, 12, 10] } else { args };
    for m in ms {
        let f = canonicalize(m)?;
        println!("Q({m}^(1/3)): couple ({}, {}), type {}, disc {}", f.a(), f.b(), f.field_type, f.discriminant);
        for (i, e) in integral_basis(&f).elements.iter().enumerate() {
            println!("  basis[{i}] = {} + {} α + {} α^2", e[0], e[1], e[2]);
        }
        let g = gram_perp(&f);
        println!("  Gram / α^2, entries q0 + q1 r^(2/3) with r = {}:", g.ratio);
        for row in &g.entries {
            let cells: Vec<_> = row.iter().map(|e| format!("{} + {} s", e.rational, e.surd)).collect();
            println!("    [{}]", cells.join(", "));
        }
        let p = shape(&f);
        println!("  shape: x = {}, y^3 = {}  (z = {:.12})", p.x, p.y_cubed, p.z);
    }
    Ok(())
}
