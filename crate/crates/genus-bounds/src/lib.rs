//! Genus bounds for curves in projective space.

use chow_kernel::CicyContext;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("degenerate for this span: d={d} < r={r}")]
    Degenerate { d: i64, r: i64 },
    #[error("span r={0} is below 3; use plane_genus for plane curves")]
    SpanTooSmall(i64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("wrong codimension: {count} equations cut a curve in P^{n} only if count = {needed}")]
    WrongCodimension { count: usize, n: i64, needed: i64 },
    #[error("degrees must be positive")]
    NonPositiveDegree,
    #[error("no curve-degree cap for c1 = {0}")]
    UnsupportedC1(i64),
}

pub type Result<T> = std::result::Result<T, BoundsError>;

/// Castelnuovo's bound for an integral nondegenerate curve of degree `d` in `P^r`.
pub fn castelnuovo_pi(d: i64, r: i64) -> Result<i64> {
    if r < 3 {
        return Err(BoundsError::SpanTooSmall(r));
    }
    if d < r {
        return Err(BoundsError::Degenerate { d, r });
    }
    let m = (d - 1) / (r - 1);
    let eps = (d - 1) - m * (r - 1);
    Ok(m * (m - 1) * (r - 1) / 2 + m * eps)
}

/// Harris' refined bound for curves of degree `d` in `P^r` not lying on a surface of degree `r - 1`.
///
/// With `m1 = (d-1) div r`, `e1 = (d-1) - m1 r` and `mu1 = 1` exactly when `e1 = r - 1`,
/// `pi_1 = m1 (m1 - 1) r / 2 + m1 (e1 + 1) + mu1`. Valid for `d >= 2r + 1`.
pub fn pi_one(d: i64, r: i64) -> Result<i64> {
    if r < 3 {
        return Err(BoundsError::SpanTooSmall(r));
    }
    if d < r {
        return Err(BoundsError::Degenerate { d, r });
    }
    if d < 2 * r + 1 {
        return Err(BoundsError::Unsupported(format!(
            "pi_1({d},{r}) needs d >= 2r+1 = {}",
            2 * r + 1
        )));
    }
    let (m1, e1, mu1) = pi_one_parameters(d, r);
    Ok(m1 * (m1 - 1) * r / 2 + m1 * (e1 + 1) + mu1)
}

/// `(m1, e1, mu1)` for `pi_one`.
pub fn pi_one_parameters(d: i64, r: i64) -> (i64, i64, i64) {
    let m1 = (d - 1) / r;
    let e1 = (d - 1) - m1 * r;
    let mu1 = i64::from(e1 == r - 1);
    (m1, e1, mu1)
}

/// Genus of a smooth plane curve of degree `d`.
pub fn plane_genus(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

/// Genus bound for span `r`, routing plane curves to `plane_genus`.
pub fn genus_bound(d: i64, r: i64) -> Result<i64> {
    if r == 2 {
        if d < 1 {
            return Err(BoundsError::Degenerate { d, r });
        }
        return Ok(plane_genus(d));
    }
    castelnuovo_pi(d, r)
}

/// Degree, canonical twist and genus of a complete-intersection curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CiCurve {
    pub degree: i64,
    pub omega_twist: i64,
    pub genus: i64,
}

/// Invariants of the complete intersection of hypersurfaces of the given degrees in `P^n`.
pub fn ci_curve_invariants(degrees: &[i64], n: i64) -> Result<CiCurve> {
    if degrees.len() as i64 != n - 1 {
        return Err(BoundsError::WrongCodimension {
            count: degrees.len(),
            n,
            needed: n - 1,
        });
    }
    if degrees.iter().any(|&d| d < 1) {
        return Err(BoundsError::NonPositiveDegree);
    }
    let degree: i64 = degrees.iter().product();
    let omega_twist = degrees.iter().sum::<i64>() - n - 1;
    let twice = degree * omega_twist;
    assert!(twice % 2 == 0, "2g-2 = {twice} must be even");
    Ok(CiCurve {
        degree,
        omega_twist,
        genus: twice / 2 + 1,
    })
}

/// Cap on the degree of the curve attached to a globally generated bundle.
pub fn max_curve_degree(ctx: &CicyContext, c1: i64, rank: i64) -> Result<i64> {
    let u = ctx.u();
    match (c1, rank) {
        (1, _) => Ok(u),
        (2, 2) => Ok(4 * u - 3),
        (2, _) => Ok(4 * u),
        _ => Err(BoundsError::UnsupportedC1(c1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn castelnuovo_anchors() {
        let cases = [
            ((6, 3), 4),
            ((7, 3), 6),
            ((8, 3), 9),
            ((5, 4), 1),
            ((6, 4), 2),
            ((11, 4), 12),
            ((14, 5), 15),
            ((16, 7), 12),
            ((3, 3), 0),
            ((7, 4), 3),
        ];
        for ((d, r), g) in cases {
            assert_eq!(castelnuovo_pi(d, r).unwrap(), g, "pi({d},{r})");
        }
        assert!(castelnuovo_pi(2, 3).is_err());
        assert!(castelnuovo_pi(5, 2).is_err());
    }

    #[test]
    fn low_degree_ranges() {
        for x in 3..=5 {
            assert_eq!(castelnuovo_pi(x, 3).unwrap(), x - 3);
        }
        for x in 4..=7 {
            assert_eq!(castelnuovo_pi(x, 4).unwrap(), x - 4);
        }
    }

    #[test]
    fn refined_bound() {
        assert_eq!(pi_one(15, 5).unwrap(), 16);
        assert_eq!(pi_one_parameters(14, 5), (2, 3, 0));
        assert_eq!(pi_one(14, 5).unwrap(), 13);
        assert_eq!(pi_one(11, 4).unwrap(), 10);
        assert!(pi_one(14, 5).unwrap() < castelnuovo_pi(14, 5).unwrap());
        assert!(matches!(pi_one(9, 5), Err(BoundsError::Unsupported(_))));
    }

    #[test]
    fn plane() {
        assert_eq!(plane_genus(5), 6);
        assert_eq!(plane_genus(1), 0);
        assert_eq!(plane_genus(4), 3);
        assert_eq!(genus_bound(4, 2).unwrap(), 3);
    }

    #[test]
    fn complete_intersections() {
        let c = ci_curve_invariants(&[2, 2, 2, 2], 5).unwrap();
        assert_eq!((c.degree, c.omega_twist, c.genus), (16, 2, 17));
        let c = ci_curve_invariants(&[1, 1, 2, 4], 5).unwrap();
        assert_eq!((c.degree, c.omega_twist, c.genus), (8, 2, 9));
        let c = ci_curve_invariants(&[2, 2, 2, 3], 5).unwrap();
        assert_eq!((c.degree, c.omega_twist, c.genus), (24, 3, 37));
        assert!(ci_curve_invariants(&[1, 1], 2).is_err());
    }

    #[test]
    fn degree_caps() {
        assert_eq!(max_curve_degree(&CicyContext::quintic(), 2, 2).unwrap(), 17);
        assert_eq!(max_curve_degree(&CicyContext::x24(), 2, 3).unwrap(), 32);
        assert_eq!(max_curve_degree(&CicyContext::x33(), 1, 2).unwrap(), 9);
        assert!(max_curve_degree(&CicyContext::x33(), 3, 2).is_err());
    }
}
