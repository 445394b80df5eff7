use std::fmt;

use genus_bounds::{castelnuovo_pi, plane_genus};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("no such curve: parity (c1 * d = {0} is odd)")]
    Parity(i64),
    #[error("curve degree must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("no liaison solution: {0}")]
    NoLiaison(String),
}

/// A connected component: degree, arithmetic genus, dimension of its linear span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveComponent {
    pub d: i64,
    pub g: i64,
    pub span: i64,
}

impl CurveComponent {
    pub const fn new(d: i64, g: i64, span: i64) -> Self {
        CurveComponent { d, g, span }
    }

    /// Plane components have the plane-curve genus; others respect Castelnuovo's bound.
    pub fn satisfies_type_invariants(&self) -> bool {
        if self.d < 1 || self.span < 2 {
            return false;
        }
        if self.span == 2 {
            return self.g == plane_genus(self.d);
        }
        matches!(castelnuovo_pi(self.d, self.span), Ok(p) if self.g <= p && self.g >= 0)
    }
}

impl fmt::Display for CurveComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.d, self.g, self.span)
    }
}

/// A disjoint union of components, kept sorted. No components means the empty curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveCandidate {
    components: Vec<CurveComponent>,
}

impl CurveCandidate {
    pub fn new(mut components: Vec<CurveComponent>) -> Self {
        components.sort();
        CurveCandidate { components }
    }

    pub fn empty() -> Self {
        CurveCandidate { components: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[CurveComponent] {
        &self.components
    }

    pub fn total_d(&self) -> i64 {
        self.components.iter().map(|c| c.d).sum()
    }

    /// `p_a` of the disjoint union.
    pub fn arithmetic_genus(&self) -> i64 {
        let gs: Vec<i64> = self.components.iter().map(|c| c.g).collect();
        union_genus(&gs, 0)
    }

    /// Number of connected components.
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

impl fmt::Display for CurveCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

/// `g` with `2g - 2 = c1 d`, the genus forced by `omega_C = O_C(c1)`.
pub fn required_genus(c1: i64, d: i64) -> Result<i64, CurveError> {
    if d < 1 {
        return Err(CurveError::NonPositiveDegree(d));
    }
    let twice = c1 * d;
    if twice % 2 != 0 {
        return Err(CurveError::Parity(twice));
    }
    Ok(twice / 2 + 1)
}

/// `p_a` of a nodal union of parts meeting in `meets` points in total.
pub fn union_genus(genera: &[i64], meets: i64) -> i64 {
    if genera.is_empty() {
        return 0;
    }
    genera.iter().sum::<i64>() - genera.len() as i64 + 1 + meets
}

/// Degree `d` of a piece of a reducible complete-intersection curve, from
/// `(omega_total - omega_target) d = cut (total - d)`.
pub fn liaison_solve(
    total_degree: i64,
    omega_twist_total: i64,
    omega_twist_target: i64,
    cutting_degree: i64,
) -> Result<i64, CurveError> {
    if total_degree <= 0 || cutting_degree <= 0 {
        return Err(CurveError::NoLiaison("inputs must be positive".into()));
    }
    let coef = omega_twist_total - omega_twist_target;
    if coef == 0 {
        return Err(CurveError::NoLiaison(
            "zero coefficient: target twist equals total twist".into(),
        ));
    }
    let denom = coef + cutting_degree;
    let numer = cutting_degree * total_degree;
    if denom <= 0 || numer % denom != 0 {
        return Err(CurveError::NoLiaison(format!(
            "{coef} d = {cutting_degree} ({total_degree} - d) has no positive integer root"
        )));
    }
    let d = numer / denom;
    if d <= 0 || d > total_degree {
        return Err(CurveError::NoLiaison(format!("root d = {d} out of range")));
    }
    Ok(d)
}
