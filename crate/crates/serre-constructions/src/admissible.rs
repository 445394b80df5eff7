use chow_kernel::CicyContext;
use genus_bounds::{castelnuovo_pi, max_curve_degree, plane_genus};
use serde::{Deserialize, Serialize};

use crate::curve::{required_genus, CurveComponent};

/// What `X` cut by a linear space looks like when the equations in `cutting`
/// restrict to a regular sequence and the others vanish on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionShape {
    Curve { degree: i64, omega_twist: i64 },
    Surface { degree: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSection {
    pub cutting: Vec<i64>,
    pub shape: SectionShape,
}

/// Distinct ways `X` meets a `P^span` in a curve or a surface.
pub fn linear_sections(ctx: &CicyContext, span: i64) -> Vec<LinearSection> {
    let degs: Vec<i64> = ctx.multidegree().iter().map(|&d| d as i64).collect();
    let k = degs.len();
    let mut seen: Vec<Vec<i64>> = Vec::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let t: Vec<i64> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| degs[i]).collect();
        if seen.contains(&t) {
            continue;
        }
        seen.push(t.clone());
        let size = t.len() as i64;
        let prod: i64 = t.iter().product();
        let shape = if size == span - 1 {
            SectionShape::Curve {
                degree: prod,
                omega_twist: t.iter().sum::<i64>() - span - 1,
            }
        } else if size == span - 2 {
            SectionShape::Surface { degree: prod }
        } else {
            continue;
        };
        out.push(LinearSection { cutting: t, shape });
    }
    out
}

/// Whether a component of degree `d` spanning `P^span` fits in some linear section of `X`.
///
/// Spans `n - 1` and `n` are unconstrained. A curve section `Y` admits `C = Y`
/// when `omega_Y = c1`; for `c1 = 2` a proper piece needs `omega_Y > 2`.
/// A surface section must have degree divisible by `u` since `Pic X = Z H`.
pub fn linear_section_allows(ctx: &CicyContext, span: i64, d: i64, c1: i64) -> bool {
    let n = ctx.ambient_dim() as i64;
    if span >= n - 1 {
        return true;
    }
    linear_sections(ctx, span).iter().any(|sec| match sec.shape {
        SectionShape::Curve { degree, omega_twist } => match c1 {
            2 => (d == degree && omega_twist == 2) || (d < degree && omega_twist > 2),
            1 => d == degree && omega_twist == 1,
            _ => false,
        },
        SectionShape::Surface { degree } => c1 == 2 && degree % ctx.u() == 0,
    })
}

/// One step of a component check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckStep {
    pub check: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub trail: Vec<CheckStep>,
}

/// Every numeric condition a single component of the associated curve must meet.
pub fn component_admissible(
    comp: &CurveComponent,
    ctx: &CicyContext,
    c1: i64,
    rank: i64,
) -> Admissibility {
    let mut trail = Vec::new();
    let mut push = |check: &str, detail: String, pass: bool| {
        trail.push(CheckStep {
            check: check.to_string(),
            detail,
            pass,
        })
    };
    match required_genus(c1, comp.d) {
        Ok(g) => push(
            "genus-relation",
            format!("omega_C = O_C({c1}) needs g = {g}, have {}", comp.g),
            g == comp.g,
        ),
        Err(e) => push("genus-relation", e.to_string(), false),
    }
    if comp.span == 2 {
        let pg = plane_genus(comp.d);
        push(
            "plane-genus",
            format!("plane curve of degree {} has genus {pg}", comp.d),
            pg == comp.g,
        );
    } else {
        match castelnuovo_pi(comp.d, comp.span) {
            Ok(p) => push(
                "castelnuovo",
                format!("pi({},{}) = {p}, g = {}", comp.d, comp.span, comp.g),
                comp.g <= p,
            ),
            Err(e) => push("castelnuovo", e.to_string(), false),
        }
    }
    push(
        "linear-section",
        format!("degree {} in X cut by P^{}", comp.d, comp.span),
        linear_section_allows(ctx, comp.span, comp.d, c1),
    );
    match max_curve_degree(ctx, c1, rank) {
        Ok(cap) => push(
            "degree-cap",
            format!("d = {} <= {cap}", comp.d),
            comp.d <= cap,
        ),
        Err(e) => push("degree-cap", e.to_string(), false),
    }
    let admissible = trail.iter().all(|s| s.pass);
    Admissibility { admissible, trail }
}
