use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Result, SurfaceError};

/// A P^1-bundle over a curve of genus `q` whose minimal section `h` has `h^2 = -e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuledSurface {
    e: i64,
    q: i64,
}

impl RuledSurface {
    /// Checks `q >= 0`, the Segre-Nagata bound `e >= -q`, and `e >= 0` over P^1.
    pub fn new(e: i64, q: i64) -> Result<Self> {
        let bad = |reason: &str| {
            Err(SurfaceError::InvalidSurface {
                e,
                q,
                reason: reason.to_string(),
            })
        };
        if q < 0 {
            return bad("base genus must be nonnegative");
        }
        if e < -q {
            return bad("Segre-Nagata bound e >= -q violated");
        }
        if q == 0 && e < 0 {
            return bad("Hirzebruch surfaces need e >= 0");
        }
        Ok(RuledSurface { e, q })
    }

    /// The Hirzebruch surface `F_e`.
    pub fn hirzebruch(e: i64) -> Result<Self> {
        Self::new(e, 0)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for RuledSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "F_{}", self.e)
        } else {
            write!(f, "P(F) over genus {} (e={})", self.q, self.e)
        }
    }
}

/// The class `a h + b f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }

    pub const fn fiber() -> Self {
        DivisorClass { a: 0, b: 1 }
    }

    pub const fn section() -> Self {
        DivisorClass { a: 1, b: 0 }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.a, -self.b)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, d: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * d.a, self * d.b)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}h{:+}f", self.a, self.b)
    }
}

/// `(a1 h + b1 f).(a2 h + b2 f) = -e a1 a2 + a1 b2 + a2 b1`.
pub fn intersect(d1: DivisorClass, d2: DivisorClass, s: &RuledSurface) -> i64 {
    -s.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b
}

/// `K = -2h + (2q - 2 - e) f`.
pub fn canonical_class(s: &RuledSurface) -> DivisorClass {
    DivisorClass::new(-2, 2 * s.q - 2 - s.e)
}

/// `C.(C+K)`, which equals `2g - 2` for an integral curve in class `C`.
pub fn adjunction_pairing(c: DivisorClass, s: &RuledSurface) -> i64 {
    intersect(c, c + canonical_class(s), s)
}

/// Arithmetic genus of a curve in class `c`.
pub fn adjunction_genus(c: DivisorClass, s: &RuledSurface) -> Result<i64> {
    let p = adjunction_pairing(c, s);
    if p % 2 != 0 {
        return Err(SurfaceError::OddPairing(p));
    }
    Ok(p / 2 + 1)
}

/// Degree of `c` under the embedding given by `hcls`.
pub fn embedding_degree(c: DivisorClass, hcls: DivisorClass, s: &RuledSurface) -> i64 {
    intersect(c, hcls, s)
}

/// True iff some pair of the classes meets positively, so they cannot be disjoint curves.
pub fn disjointness_obstruction(classes: &[DivisorClass], s: &RuledSurface) -> bool {
    classes.iter().enumerate().any(|(i, &x)| {
        classes[i + 1..]
            .iter()
            .any(|&y| intersect(x, y, s) > 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(e: i64) -> RuledSurface {
        RuledSurface::hirzebruch(e).unwrap()
    }

    #[test]
    fn surface_validation() {
        assert!(RuledSurface::new(-1, 0).is_err());
        assert!(RuledSurface::new(-3, 2).is_err());
        assert!(RuledSurface::new(-2, 2).is_ok());
        assert!(RuledSurface::new(0, -1).is_err());
    }

    #[test]
    fn intersection_values() {
        let (c, d) = (DivisorClass::new(4, 8), DivisorClass::new(2, 5));
        assert_eq!(intersect(c, d, &f(1)), 28);
        assert_eq!(intersect(DivisorClass::new(4, 12), DivisorClass::new(2, 7), &f(3)), 28);
        assert_eq!(intersect(DivisorClass::new(4, 8), DivisorClass::new(2, 6), &f(0)), 40);
        assert_eq!(intersect(DivisorClass::fiber(), DivisorClass::fiber(), &f(2)), 0);
        assert_eq!(intersect(DivisorClass::section(), DivisorClass::section(), &f(3)), -3);
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(canonical_class(&f(1)), DivisorClass::new(-2, -3));
        assert_eq!(canonical_class(&f(3)), DivisorClass::new(-2, -5));
        assert_eq!(
            canonical_class(&RuledSurface::new(0, 1).unwrap()),
            DivisorClass::new(-2, 0)
        );
    }

    #[test]
    fn genera() {
        assert_eq!(adjunction_genus(DivisorClass::new(5, 15), &f(3)).unwrap(), 26);
        assert_eq!(adjunction_genus(DivisorClass::new(4, 8), &f(1)).unwrap(), 15);
        for e in 0..6 {
            assert_eq!(adjunction_genus(DivisorClass::fiber(), &f(e)).unwrap(), 0);
        }
    }

    #[test]
    fn section_genus_is_base_genus() {
        for q in 0..=3 {
            for e in -2..=6 {
                let Ok(s) = RuledSurface::new(e, q) else { continue };
                assert_eq!(adjunction_pairing(DivisorClass::section(), &s), 2 * q - 2);
                assert_eq!(adjunction_genus(DivisorClass::section(), &s).unwrap(), q);
            }
        }
    }

    #[test]
    fn degrees() {
        let s = f(3);
        assert_eq!(embedding_degree(DivisorClass::new(5, 15), DivisorClass::new(1, 3), &s), 15);
        for (a, b) in [(1, 2), (3, 12), (0, 7)] {
            assert_eq!(
                embedding_degree(DivisorClass::new(a, b), DivisorClass::new(1, 2), &f(1)),
                a + b
            );
        }
        assert_eq!(embedding_degree(DivisorClass::fiber(), DivisorClass::new(1, 5), &s), 1);
    }

    #[test]
    fn disjointness() {
        let s = f(3);
        assert!(disjointness_obstruction(&[DivisorClass::new(1, 4), DivisorClass::new(1, 4)], &s));
        assert!(disjointness_obstruction(&[DivisorClass::new(1, 3), DivisorClass::new(2, 6)], &s));
        assert!(!disjointness_obstruction(&[DivisorClass::fiber(), DivisorClass::fiber()], &s));
        // h.(h+3f) = -3 + 3 = 0 on F_3
        assert!(!disjointness_obstruction(&[DivisorClass::section(), DivisorClass::new(1, 3)], &s));
    }
}
