//! Serialized forms used by the command-line front end: JSON lines for
//! fields and shapes, CSV for measure tables, a JSON constants summary, and
//! a static SVG scatter over the fundamental domain.

use std::fmt::Write as _;

use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use crate::arith::{ConstantEstimate, Constants};
use crate::census::{shape_normalizer, MeasureRow};
use crate::field::{integral_basis, FieldType, PureCubicField};
use crate::shape::{ShapePoint, UnimodularMatrix};

/// Round to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn pair(z: Complex64) -> [f64; 2] {
    [round12(z.re), round12(z.im)]
}

fn rational_str(q: Rational64) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldRecord {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub m_prime: u64,
    #[serde(rename = "type")]
    pub field_type: FieldType,
    pub discriminant: i128,
    pub ratio_num: i64,
    pub ratio_den: i64,
}

impl From<&PureCubicField> for FieldRecord {
    fn from(f: &PureCubicField) -> Self {
        FieldRecord {
            a: f.a(),
            b: f.b(),
            m: f.m,
            m_prime: f.m_prime,
            field_type: f.field_type,
            discriminant: f.discriminant,
            ratio_num: *f.ratio.numer(),
            ratio_den: *f.ratio.denom(),
        }
    }
}

/// A field record with its integral basis, each element written as the
/// coefficients of `1, α, α^2` in `num/den` form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldWithBasis {
    #[serde(flatten)]
    pub field: FieldRecord,
    pub basis: Vec<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i8>,
}

impl From<&PureCubicField> for FieldWithBasis {
    fn from(f: &PureCubicField) -> Self {
        let basis = integral_basis(f);
        FieldWithBasis {
            field: f.into(),
            basis: basis
                .elements
                .iter()
                .map(|e| e.map(rational_str))
                .collect(),
            epsilon: basis.epsilon,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeRecord {
    pub a: u64,
    pub b: u64,
    #[serde(rename = "type")]
    pub field_type: FieldType,
    pub x_num: i64,
    pub x_den: i64,
    pub y_cubed_num: i64,
    pub y_cubed_den: i64,
    pub z: [f64; 2],
    pub reduced_z: Option<[f64; 2]>,
    pub reducer: Option<UnimodularMatrix>,
}

impl ShapeRecord {
    pub fn new(field: &PureCubicField, p: &ShapePoint) -> Self {
        ShapeRecord {
            a: field.a(),
            b: field.b(),
            field_type: p.field_type,
            x_num: *p.x.numer(),
            x_den: *p.x.denom(),
            y_cubed_num: *p.y_cubed.numer(),
            y_cubed_den: *p.y_cubed.denom(),
            z: pair(p.z),
            reduced_z: p.reduced.map(|r| pair(r.z)),
            reducer: p.reduced.map(|r| r.reducer),
        }
    }
}

/// One JSON object per line.
pub fn json_lines<T: Serialize>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(&item).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: &str = "X,type,R1,R2,count,normalized_mass,target,deviation";

pub fn measure_csv(rows: &[MeasureRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.x,
            r.field_type,
            round12(r.r1),
            round12(r.r2),
            r.count,
            round12(r.normalized_mass),
            round12(r.target),
            round12(r.deviation)
        )
        .unwrap();
    }
    out
}

/// Rounded copy of a measure row for JSON output.
pub fn rounded_row(r: &MeasureRow) -> MeasureRow {
    MeasureRow {
        r1: round12(r.r1),
        r2: round12(r.r2),
        normalized_mass: round12(r.normalized_mass),
        target: round12(r.target),
        deviation: round12(r.deviation),
        ..*r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstimateRecord {
    pub value: f64,
    pub prime_bound: u64,
    pub tail_bound: f64,
}

impl From<ConstantEstimate> for EstimateRecord {
    fn from(e: ConstantEstimate) -> Self {
        EstimateRecord {
            value: round12(e.value),
            prime_bound: e.prime_bound,
            tail_bound: round12(e.tail_bound),
        }
    }
}

/// `C`, `κ`, `γ` and the shape normalizers, with their truncation bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantsSummary {
    #[serde(rename = "C")]
    pub c: EstimateRecord,
    pub kappa: EstimateRecord,
    pub gamma: EstimateRecord,
    #[serde(rename = "C_I")]
    pub c_i: EstimateRecord,
    #[serde(rename = "C_II")]
    pub c_ii: EstimateRecord,
}

impl From<&Constants> for ConstantsSummary {
    fn from(k: &Constants) -> Self {
        let scaled = |t: FieldType| {
            let s = shape_normalizer(t, 1.0);
            EstimateRecord::from(ConstantEstimate {
                value: s * k.c.value,
                prime_bound: k.c.prime_bound,
                tail_bound: s * k.c.tail_bound,
            })
        };
        ConstantsSummary {
            c: k.c.into(),
            kappa: k.kappa.into(),
            gamma: k.gamma.into(),
            c_i: scaled(FieldType::TypeI),
            c_ii: scaled(FieldType::TypeII),
        }
    }
}

/// Static scatter of reduced shapes over the outline of the fundamental
/// domain `0 <= x <= 1/2, |z| >= 1`. Points are clipped at `y_max`.
pub fn svg_scatter(points: &[Complex64], y_max: f64) -> String {
    const W: f64 = 360.0;
    const H: f64 = 720.0;
    const PAD: f64 = 40.0;
    let (x_lo, x_hi, y_lo) = (-0.1, 0.6, 0.8);
    let sx = |x: f64| PAD + (x - x_lo) / (x_hi - x_lo) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y.min(y_max) - y_lo) / (y_max - y_lo) * (H - 2.0 * PAD);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    // Outline: x = 0 from the top down to i, the unit arc to 1/2 + i√3/2, x = 1/2 up.
    let mut d = format!("M {:.3} {:.3} L {:.3} {:.3}", sx(0.0), sy(y_max), sx(0.0), sy(1.0));
    let steps = 32;
    for k in 1..=steps {
        let theta = std::f64::consts::FRAC_PI_2 - (k as f64 / steps as f64) * std::f64::consts::FRAC_PI_6;
        write!(d, " L {:.3} {:.3}", sx(theta.cos()), sy(theta.sin())).unwrap();
    }
    write!(d, " L {:.3} {:.3}", sx(0.5), sy(y_max)).unwrap();
    writeln!(out, r#"<path d="{d}" fill="none" stroke="black" stroke-width="1.5"/>"#).unwrap();

    writeln!(out, r#"<g fill="crimson">"#).unwrap();
    for z in points {
        writeln!(
            out,
            r#"<circle class="shape" cx="{:.3}" cy="{:.3}" r="2.5"/>"#,
            sx(z.re),
            sy(z.im)
        )
        .unwrap();
    }
    writeln!(out, "</g>\n</svg>").unwrap();
    out
}
