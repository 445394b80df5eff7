use crate::error::{Result, SurfaceError};
use crate::lattice::{adjunction_genus, adjunction_pairing, embedding_degree, DivisorClass, RuledSurface};

/// Side conditions on a class `a h + b f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideConstraint {
    /// `k a + lo <= b <= k a + hi`, e.g. the cone condition `3a <= b <= 3a + 1` on F_3.
    SlopeBand { k: i64, lo: i64, hi: i64 },
    /// `a >= min`.
    AAtLeast(i64),
    /// `b >= min`.
    BAtLeast(i64),
}

impl SideConstraint {
    pub fn holds(&self, c: DivisorClass) -> bool {
        match *self {
            SideConstraint::SlopeBand { k, lo, hi } => c.b >= k * c.a + lo && c.b <= k * c.a + hi,
            SideConstraint::AAtLeast(m) => c.a >= m,
            SideConstraint::BAtLeast(m) => c.b >= m,
        }
    }
}

/// A degree target under the embedding `hcls`, an optional genus target, and side conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusConstraint {
    pub hcls: DivisorClass,
    pub degree: i64,
    pub genus: Option<i64>,
    pub extra: Vec<SideConstraint>,
}

impl GenusConstraint {
    pub fn new(hcls: DivisorClass, degree: i64) -> Self {
        GenusConstraint {
            hcls,
            degree,
            genus: None,
            extra: Vec::new(),
        }
    }

    pub fn with_genus(mut self, g: i64) -> Self {
        self.genus = Some(g);
        self
    }

    pub fn with(mut self, side: SideConstraint) -> Self {
        self.extra.push(side);
        self
    }

    /// Whether `c` satisfies every condition; the reference predicate for box scans.
    pub fn accepts(&self, c: DivisorClass, s: &RuledSurface) -> bool {
        if embedding_degree(c, self.hcls, s) != self.degree {
            return false;
        }
        if let Some(g) = self.genus {
            if adjunction_pairing(c, s) != 2 * g - 2 {
                return false;
            }
        }
        self.extra.iter().all(|x| x.holds(c))
    }
}

/// Finite range scanned for the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub a: (i64, i64),
    pub b: Option<(i64, i64)>,
}

impl Default for SearchBox {
    fn default() -> Self {
        SearchBox {
            a: (-1000, 1000),
            b: None,
        }
    }
}

impl SearchBox {
    pub fn new(a: (i64, i64), b: Option<(i64, i64)>) -> Self {
        SearchBox { a, b }
    }
}

/// All classes inside the box meeting the constraint, in increasing `(a, b)` order.
///
/// When the degree equation fixes `b` in terms of `a` only `a` is scanned;
/// otherwise the box must bound `b` as well.
pub fn eliminate_by_genus(
    constraint: &GenusConstraint,
    s: &RuledSurface,
    bx: &SearchBox,
) -> Result<Vec<DivisorClass>> {
    // degree = a * (hb - e ha) + b * ha
    let slope_a = constraint.hcls.b - s.e() * constraint.hcls.a;
    let coef_b = constraint.hcls.a;
    let mut out = Vec::new();
    for a in bx.a.0..=bx.a.1 {
        let candidates: Vec<i64> = if coef_b != 0 {
            let rest = constraint.degree - a * slope_a;
            if rest % coef_b != 0 {
                continue;
            }
            vec![rest / coef_b]
        } else {
            let (lo, hi) = bx.b.ok_or_else(|| {
                SurfaceError::SearchNotFinite(format!(
                    "degree against {} does not determine b and no b range was given",
                    constraint.hcls
                ))
            })?;
            (lo..=hi).collect()
        };
        for b in candidates {
            if let Some((lo, hi)) = bx.b {
                if b < lo || b > hi {
                    continue;
                }
            }
            let c = DivisorClass::new(a, b);
            if constraint.accepts(c, s) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// `2g - 2` as `[c0, c1, c2]` in `a` after solving the degree equation for `b`.
///
/// Available when the embedding class has `h`-coefficient 1.
pub fn genus_polynomial(hcls: DivisorClass, degree: i64, s: &RuledSurface) -> Option<[i64; 3]> {
    if hcls.a != 1 {
        return None;
    }
    // b = degree - m a with m = hb - e; the pairing is quadratic in a
    let m = hcls.b - s.e();
    let eval = |a: i64| adjunction_pairing(DivisorClass::new(a, degree - m * a), s);
    let (p0, p1, p2) = (eval(0), eval(1), eval(2));
    let q2 = (p2 - 2 * p1 + p0) / 2;
    let q1 = p1 - p0 - q2;
    Some([p0, q1, q2])
}

/// Genus of each solution, for reporting.
pub fn genera(classes: &[DivisorClass], s: &RuledSurface) -> Result<Vec<i64>> {
    classes.iter().map(|&c| adjunction_genus(c, s)).collect()
}

/// Integer roots of `c0 + c1 a + c2 a^2 = value` within `range`.
pub fn polynomial_roots(poly: [i64; 3], value: i64, range: (i64, i64)) -> Vec<i64> {
    (range.0..=range.1)
        .filter(|&a| poly[0] + poly[1] * a + poly[2] * a * a == value)
        .collect()
}
