use serde::Serialize;

use super::couples::{count_with, Tally};
use crate::arith::{is_strongly_carefree, SquarefreeSieve};
use crate::error::{Error, Result};
use crate::field::{classify, enumerate_fields, product_bound, FieldType, RatioWindow};
use crate::threshold::Threshold;

/// `N_I`, `N_II`, `N` for `|disc| <= X` and ratio in the open window `(R1, R2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldCount {
    pub x: u64,
    pub r1: f64,
    pub r2: f64,
    pub n_i: u64,
    pub n_ii: u64,
    pub n_total: u64,
}

impl FieldCount {
    pub fn of(&self, field_type: FieldType) -> u64 {
        match field_type {
            FieldType::TypeI => self.n_i,
            FieldType::TypeII => self.n_ii,
        }
    }
}

/// Hyperbola bound `N` with `ab <= N  <=>  |disc| <= X` for the given type.
pub fn hyperbola_bound(x: u64, field_type: FieldType) -> u64 {
    match field_type {
        FieldType::TypeI => product_bound(x, 27),
        FieldType::TypeII => product_bound(x, 3),
    }
}

/// Direct count by enumerating fields, verified against the couple identity.
pub fn count_fields(x: u64, r1: f64, r2: f64) -> Result<FieldCount> {
    let mut n_i = 0;
    let mut n_ii = 0;
    for f in enumerate_fields(x, Some((r1, r2)))? {
        match f.field_type {
            FieldType::TypeI => n_i += 1,
            FieldType::TypeII => n_ii += 1,
        }
    }
    let direct = FieldCount {
        x,
        r1,
        r2,
        n_i,
        n_ii,
        n_total: n_i + n_ii,
    };
    let via = count_fields_via_couples(x, r1, r2)?;
    if via != direct {
        return Err(Error::Consistency(format!(
            "direct field count {direct:?} disagrees with couple identity {via:?}"
        )));
    }
    Ok(direct)
}

/// `N_?(X, R1, R2) = (S_?(N, R2) - S_?(N, R1)) / 2`, with `N` the type's
/// hyperbola bound.
///
/// The cone difference counts `R1 < a/b <= R2` and its mirror image, while
/// the field window is open at `R2`; the single couple with `a/b = R2` (if
/// any) is removed.
pub fn count_fields_via_couples(x: u64, r1: f64, r2: f64) -> Result<FieldCount> {
    let window = RatioWindow::new(r1, r2)?;
    if x == 0 {
        return Err(Error::InvalidInput("discriminant bound must be positive".into()));
    }
    let mut out = [0u64; 2];
    for (slot, ty) in [FieldType::TypeI, FieldType::TypeII].into_iter().enumerate() {
        let n = hyperbola_bound(x, ty);
        if n < 2 {
            continue;
        }
        let sieve = SquarefreeSieve::new(n)?;
        // Every couple under the hyperbola has a/b <= N.
        let cap = Threshold::from_ratio(n, 1)?;
        let (upper, clipped) = match &window.upper {
            Some(u) if u.cmp_ratio(n, 1).is_gt() => (u.clone(), false),
            _ => (cap.clone(), true),
        };
        let lower = if window.lower.cmp_ratio(n, 1).is_gt() {
            window.lower.clone()
        } else {
            cap
        };
        let hi: Tally = count_with(&sieve, n, &upper);
        let lo: Tally = count_with(&sieve, n, &lower);
        let diff = hi.of(ty) - lo.of(ty);
        if diff % 2 != 0 {
            return Err(Error::Consistency(format!(
                "cone difference {diff} is odd for type {ty}"
            )));
        }
        let mut count = diff / 2;
        if !clipped {
            if let Some((p, q)) = upper.as_u64_ratio() {
                if p > q
                    && p.checked_mul(q).is_some_and(|pq| pq <= n)
                    && is_strongly_carefree(p, q)
                    && classify(p, q) == ty
                    && window.lower.cmp_ratio(p, q).is_gt()
                {
                    count -= 1;
                }
            }
        }
        out[slot] = count;
    }
    Ok(FieldCount {
        x,
        r1,
        r2,
        n_i: out[0],
        n_ii: out[1],
        n_total: out[0] + out[1],
    })
}
