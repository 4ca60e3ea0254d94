//! Shapes of pure cubic fields.
//!
//! A pure cubic field `Q(m^(1/3))` is determined by a strongly carefree
//! couple `(a, b)` with `m = a b^2` and `a > b`. This crate computes, exactly,
//! the shape of such a field (the similarity class of the rank-2 lattice
//! obtained by projecting the ring of integers away from `1`), reduces it
//! into the standard fundamental domain for `GL(2, Z)`, and counts fields
//! and couples in the regions that govern how the shapes are distributed.
//!
//! Module map:
//!
//! * [`arith`]: squarefree and Möbius sieves, the carefree Euler product and
//!   friends, and the counting functions behind the asymptotics.
//! * [`field`]: canonical field data, classification into Type I / Type II,
//!   integral bases, enumeration by discriminant.
//! * [`shape`]: exact Gram matrices, shape points, fundamental-domain
//!   reduction, Minkowski-embedding cross-checks.
//! * [`census`]: couple and field counts, empirical shape measures.
//! * [`output`]: JSON-lines, CSV and SVG renderings used by the CLI.

pub mod arith;
pub mod census;
mod error;
pub mod field;
pub mod output;
pub mod shape;
pub mod threshold;

pub use error::{Error, Result};
pub use field::{CarefreeCouple, FieldType, PureCubicField};
pub use shape::ShapePoint;
pub use threshold::Threshold;
