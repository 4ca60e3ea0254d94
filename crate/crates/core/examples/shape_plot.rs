//! Writes an SVG scatter of all reduced shapes with `|disc| <= X` over the
//! fundamental domain.
//!
//!     cargo run --release --example shape_plot -- 1000000 shapes.svg

use cubeshape::field::enumerate_fields;
use cubeshape::output::svg_scatter;
use cubeshape::shape::{reduce_to_fundamental_domain, shape};

fn main() -> cubeshape::Result<()> {
    let mut args = std::env::args().skip(1);
    let x: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1_000_000);
    let path = args.next().unwrap_or_else(|| "shapes.svg".into());
    let points = enumerate_fields(x, None)?
        .map(|f| Ok(reduce_to_fundamental_domain(&shape(&f))?.reduced.expect("reduced").z))
        .collect::<cubeshape::Result<Vec<_>>>()?;
    std::fs::write(&path, svg_scatter(&points, 6.0)).expect("writable output path");
    println!("{} shapes written to {path}", points.len());
    Ok(())
}
