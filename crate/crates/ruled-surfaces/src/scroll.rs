//! Surfaces ruled by lines, viewed as images of `P(F)` under `|h + t f|`.

use crate::error::{Result, SurfaceError};
use crate::lattice::{adjunction_pairing, intersect, DivisorClass, RuledSurface};

/// Hyperplane class `h + t f` of a scroll of the given degree: `-e + 2t = degree`.
pub fn scroll_hyperplane(surface_degree: i64, s: &RuledSurface) -> Result<DivisorClass> {
    let twice = surface_degree + s.e();
    if twice % 2 != 0 {
        return Err(SurfaceError::Parity(s.e()));
    }
    Ok(DivisorClass::new(1, twice / 2))
}

/// The class `k h + b f` of degree `degree`, where `k` is the number of points on a ruling line.
pub fn curve_on_scroll(
    sheets: i64,
    degree: i64,
    surface_degree: i64,
    s: &RuledSurface,
) -> Result<DivisorClass> {
    let hcls = scroll_hyperplane(surface_degree, s)?;
    let partial = intersect(DivisorClass::new(sheets, 0), hcls, s);
    Ok(DivisorClass::new(sheets, degree - partial))
}

/// `2g - 2` of that curve.
pub fn scroll_curve_pairing(
    sheets: i64,
    degree: i64,
    surface_degree: i64,
    s: &RuledSurface,
) -> Result<i64> {
    Ok(adjunction_pairing(curve_on_scroll(sheets, degree, surface_degree, s)?, s))
}

/// Every `(e, q)` with `q <= q_max`, `-q <= e <= e_max` and `e + surface_degree` even.
pub fn scroll_parameters(q_range: (i64, i64), e_max: i64, surface_degree: i64) -> Vec<RuledSurface> {
    let mut out = Vec::new();
    for q in q_range.0..=q_range.1 {
        for e in -q..=e_max {
            if (e + surface_degree) % 2 != 0 {
                continue;
            }
            if let Ok(s) = RuledSurface::new(e, q) {
                out.push(s);
            }
        }
    }
    out
}
