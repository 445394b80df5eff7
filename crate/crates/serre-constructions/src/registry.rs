use chow_kernel::{
    chern_from_resolution, chern_of_extension, max_rank_for_shape, CicyContext, Mode,
};
use genus_bounds::ci_curve_invariants;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::admissible::component_admissible;
use crate::curve::{liaison_solve, union_genus, CurveComponent};

/// Invariants of one connected component of the associated curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub degree: i64,
    pub genus: i64,
    pub span: i64,
    pub omega_twist: i64,
}

impl ComponentRecord {
    pub fn component(&self) -> CurveComponent {
        CurveComponent::new(self.degree, self.genus, self.span)
    }
}

/// A registered construction as stored and serialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub name: String,
    pub threefold: String,
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
    pub components: Vec<ComponentRecord>,
    pub paper_ref: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("registry entry '{entry}' on {threefold}: field '{field}': {message}")]
pub struct ValidationError {
    pub entry: String,
    pub threefold: String,
    pub field: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub name: String,
    pub threefold: String,
    pub checks: Vec<FieldCheck>,
}

#[derive(Debug, Clone)]
enum CurveRecipe {
    CompleteIntersection { degrees: Vec<i64>, ambient: i64 },
    /// A section by a hypersurface of degree `cut` of a surface with `omega_S = O_S(surface_omega)`.
    SurfaceSection { surface_degree: i64, surface_omega: i64, cut: i64, span: i64 },
    /// The residual piece of `S ∩ {cut}` with `S` a complete intersection.
    Linked { surface_equations: Vec<i64>, ambient: i64, cut: i64, omega_target: i64 },
}

#[derive(Debug, Clone)]
enum Recipe {
    Serre { c1: i64, curves: Vec<CurveRecipe> },
    Extension { a: i64, b: i64, z: CurveRecipe },
    Resolution { sub: Vec<i64>, trivial: usize, positive: Vec<i64> },
    /// `pi^* N(1)` for a null-correlation bundle `N` on `P^3` (`c1 = 0`, `c2 = 1`).
    NullCorrelationPullback,
}

fn entry(
    name: &str,
    threefold: &str,
    rank: i64,
    (c1, c2): (i64, i64),
    comps: &[(i64, i64, i64, i64)],
    paper_ref: &str,
) -> Construction {
    Construction {
        name: name.into(),
        threefold: threefold.into(),
        rank,
        c1,
        c2,
        components: comps
            .iter()
            .map(|&(degree, genus, span, omega_twist)| ComponentRecord {
                degree,
                genus,
                span,
                omega_twist,
            })
            .collect(),
        paper_ref: paper_ref.into(),
    }
}

/// The built-in corpus of constructions with their recorded invariants.
pub fn registry() -> Vec<Construction> {
    vec![
        entry(
            "quintic-two-plane-quintics",
            "5",
            2,
            (2, 10),
            &[(5, 6, 2, 2), (5, 6, 2, 2)],
            "Example 3.1, \"smooth plane curve of degree 5\"",
        ),
        entry(
            "pullback-null-correlation",
            "5",
            2,
            (2, 10),
            &[],
            "Remark 3.2, \"E ≅ π_P^*(N_{P³}(1))\"",
        ),
        entry(
            "quintic-resolution-r14",
            "5",
            14,
            (2, 20),
            &[],
            "Prop 3.7(1), \"0→O_X(−2)→O_X^{⊕(r+1)}→E→0 with 3 ≤ r ≤ 14\"",
        ),
        entry(
            "quintic-resolution-r8",
            "5",
            8,
            (2, 15),
            &[],
            "Prop 3.7(2), \"with 3 ≤ r ≤ 8\"",
        ),
        entry(
            "quintic-resolution-r5",
            "5",
            5,
            (2, 10),
            &[],
            "Prop 3.7(3), \"0→O_X(−1)→O_X^{⊕r}⊕O_X(1)→E→0\"",
        ),
        entry(
            "x24-plane-quartic",
            "2,4",
            2,
            (1, 4),
            &[(4, 3, 2, 1)],
            "Prop 4.1(2), \"C is a plane quartic\"",
        ),
        entry(
            "plane-cubic-extension",
            "2,4",
            2,
            (2, 11),
            &[(3, 1, 2, 0)],
            "Prop 4.5, \"Z is a plane cubic curve\"",
        ),
        entry(
            "plane-cubic-extension",
            "3,3",
            2,
            (2, 12),
            &[(3, 1, 2, 0)],
            "Prop 4.5, \"Z is a plane cubic curve\"",
        ),
        entry(
            "b1-two-linear-sections",
            "2,4",
            2,
            (2, 16),
            &[(8, 9, 3, 2), (8, 9, 3, 2)],
            "Example 4.6, \"two linear subspaces U_1,U_2 of codimension 2\"",
        ),
        entry(
            "b1-two-linear-sections",
            "3,3",
            2,
            (2, 18),
            &[(9, 10, 3, 2), (9, 10, 3, 2)],
            "Example 4.6, \"two linear subspaces U_1,U_2 of codimension 2\"",
        ),
        entry(
            "b2-four-quadrics",
            "2,4",
            2,
            (2, 16),
            &[(16, 17, 5, 2)],
            "Example 4.7, \"complete intersection C of 4 quadrics\", \"ω_C ≅ O_C(2)\"",
        ),
        entry(
            "b2-four-quadrics",
            "3,3",
            2,
            (2, 16),
            &[(16, 17, 5, 2)],
            "Example 4.7, \"complete intersection C of 4 quadrics\", \"ω_C ≅ O_C(2)\"",
        ),
        entry(
            "b3-delpezzo5-cubic",
            "3,3",
            2,
            (2, 15),
            &[(15, 16, 5, 2)],
            "Example 4.9, \"weak del pezzo surface of degree 5\"",
        ),
        entry(
            "inc-linked-18",
            "3,3",
            2,
            (2, 18),
            &[(18, 19, 5, 2)],
            "Example 4.10 / Lemma 6.2, \"d = 3(24−d) and so d=18\"",
        ),
        entry(
            "x223-delpezzo6-cubic",
            "2,2,3",
            2,
            (2, 18),
            &[(18, 19, 6, 2)],
            "Prop 7.2, \"(c1, c2)=(2,18)\"",
        ),
    ]
}

fn recipe(name: &str, threefold: &str) -> Option<Recipe> {
    use CurveRecipe::*;
    let plane = |d: i64| CompleteIntersection { degrees: vec![d], ambient: 2 };
    Some(match (name, threefold) {
        ("quintic-two-plane-quintics", "5") => Recipe::Serre {
            c1: 2,
            curves: vec![plane(5), plane(5)],
        },
        ("pullback-null-correlation", "5") => Recipe::NullCorrelationPullback,
        ("quintic-resolution-r14", "5") => Recipe::Resolution {
            sub: vec![-2],
            trivial: 15,
            positive: vec![],
        },
        ("quintic-resolution-r8", "5") => Recipe::Resolution {
            sub: vec![-1, -1],
            trivial: 10,
            positive: vec![],
        },
        ("quintic-resolution-r5", "5") => Recipe::Resolution {
            sub: vec![-1],
            trivial: 5,
            positive: vec![1],
        },
        ("x24-plane-quartic", "2,4") => Recipe::Serre {
            c1: 1,
            curves: vec![plane(4)],
        },
        ("plane-cubic-extension", "2,4" | "3,3") => Recipe::Extension {
            a: 1,
            b: 1,
            z: plane(3),
        },
        ("b1-two-linear-sections", "2,4") => {
            let c = CompleteIntersection { degrees: vec![1, 1, 2, 4], ambient: 5 };
            Recipe::Serre { c1: 2, curves: vec![c.clone(), c] }
        }
        ("b1-two-linear-sections", "3,3") => {
            let c = CompleteIntersection { degrees: vec![1, 1, 3, 3], ambient: 5 };
            Recipe::Serre { c1: 2, curves: vec![c.clone(), c] }
        }
        ("b2-four-quadrics", "2,4" | "3,3") => Recipe::Serre {
            c1: 2,
            curves: vec![CompleteIntersection { degrees: vec![2, 2, 2, 2], ambient: 5 }],
        },
        ("b3-delpezzo5-cubic", "3,3") => Recipe::Serre {
            c1: 2,
            curves: vec![SurfaceSection { surface_degree: 5, surface_omega: -1, cut: 3, span: 5 }],
        },
        ("inc-linked-18", "3,3") => Recipe::Serre {
            c1: 2,
            curves: vec![Linked {
                surface_equations: vec![2, 2, 2],
                ambient: 5,
                cut: 3,
                omega_target: 2,
            }],
        },
        ("x223-delpezzo6-cubic", "2,2,3") => Recipe::Serre {
            c1: 2,
            curves: vec![SurfaceSection { surface_degree: 6, surface_omega: -1, cut: 3, span: 6 }],
        },
        _ => return None,
    })
}

/// Final `c2` lists for the classified threefolds, all ranks and `c1 <= 2`.
pub fn published_c2_list(ctx: &CicyContext) -> Option<&'static [i64]> {
    match ctx.label().as_str() {
        "5" => Some(&[0, 5, 10, 15, 20]),
        "2,4" => Some(&[0, 4, 8, 11, 16]),
        "3,3" => Some(&[0, 9, 12, 15, 16, 18]),
        _ => None,
    }
}

/// Final `(c1, c2)` pairs for rank-2 bundles on the quintic.
pub const QUINTIC_RANK2_PAIRS: [(i64, i64); 4] = [(1, 0), (2, 0), (2, 5), (2, 10)];

struct Checker<'a> {
    c: &'a Construction,
    checks: Vec<FieldCheck>,
}

impl Checker<'_> {
    fn fail(&self, field: &str, message: String) -> ValidationError {
        ValidationError {
            entry: self.c.name.clone(),
            threefold: self.c.threefold.clone(),
            field: field.to_string(),
            message,
        }
    }

    fn eq(&mut self, field: &str, expected: i64, found: i64) -> Result<(), ValidationError> {
        if expected != found {
            return Err(self.fail(field, format!("expected {expected}, found {found}")));
        }
        self.checks.push(FieldCheck {
            field: field.to_string(),
            expected: expected.to_string(),
            found: found.to_string(),
        });
        Ok(())
    }

    fn holds(&mut self, field: &str, what: String, ok: bool) -> Result<(), ValidationError> {
        if !ok {
            return Err(self.fail(field, format!("check failed: {what}")));
        }
        self.checks.push(FieldCheck {
            field: field.to_string(),
            expected: what,
            found: "ok".into(),
        });
        Ok(())
    }
}

fn curve_from_recipe(r: &CurveRecipe) -> Result<ComponentRecord, String> {
    match r {
        CurveRecipe::CompleteIntersection { degrees, ambient } => {
            let ci = ci_curve_invariants(degrees, *ambient).map_err(|e| e.to_string())?;
            let linear = degrees.iter().filter(|&&d| d == 1).count() as i64;
            Ok(ComponentRecord {
                degree: ci.degree,
                genus: ci.genus,
                span: ambient - linear,
                omega_twist: ci.omega_twist,
            })
        }
        CurveRecipe::SurfaceSection { surface_degree, surface_omega, cut, span } => {
            let degree = surface_degree * cut;
            let omega_twist = surface_omega + cut;
            Ok(ComponentRecord {
                degree,
                genus: degree * omega_twist / 2 + 1,
                span: *span,
                omega_twist,
            })
        }
        CurveRecipe::Linked { surface_equations, ambient, cut, omega_target } => {
            // as a complete-intersection curve
            let mut all = surface_equations.clone();
            all.push(*cut);
            let ci = ci_curve_invariants(&all, *ambient).map_err(|e| e.to_string())?;
            // as a section of the complete-intersection surface
            let s_deg: i64 = surface_equations.iter().product();
            let s_omega = surface_equations.iter().sum::<i64>() - ambient - 1;
            let (total, omega) = (s_deg * cut, s_omega + cut);
            if (total, omega) != (ci.degree, ci.omega_twist) {
                return Err(format!(
                    "surface section gives ({total}, {omega}) but complete intersection gives ({}, {})",
                    ci.degree, ci.omega_twist
                ));
            }
            let d1 = liaison_solve(ci.degree, ci.omega_twist, *omega_target, *cut)
                .map_err(|e| e.to_string())?;
            let d2 = liaison_solve(total, omega, *omega_target, *cut).map_err(|e| e.to_string())?;
            if d1 != d2 {
                return Err(format!("liaison derivations disagree: {d1} vs {d2}"));
            }
            Ok(ComponentRecord {
                degree: d1,
                genus: d1 * omega_target / 2 + 1,
                span: *ambient,
                omega_twist: *omega_target,
            })
        }
    }
}

fn check_components(
    ck: &mut Checker<'_>,
    recipes: &[CurveRecipe],
) -> Result<Vec<ComponentRecord>, ValidationError> {
    let mut computed = Vec::new();
    for r in recipes {
        computed.push(curve_from_recipe(r).map_err(|m| ck.fail("components", m))?);
    }
    ck.eq("components.len", computed.len() as i64, ck.c.components.len() as i64)?;
    let mut want = computed.clone();
    let mut have = ck.c.components.clone();
    let key = |r: &ComponentRecord| (r.degree, r.genus, r.span, r.omega_twist);
    want.sort_by_key(key);
    have.sort_by_key(key);
    for (i, (w, h)) in want.iter().zip(&have).enumerate() {
        ck.eq(&format!("components[{i}].degree"), w.degree, h.degree)?;
        ck.eq(&format!("components[{i}].genus"), w.genus, h.genus)?;
        ck.eq(&format!("components[{i}].span"), w.span, h.span)?;
        ck.eq(&format!("components[{i}].omega_twist"), w.omega_twist, h.omega_twist)?;
    }
    Ok(computed)
}

/// Recomputes every recorded invariant of `c` from its recipe.
pub fn validate(c: &Construction) -> Result<ValidationReport, ValidationError> {
    let mut ck = Checker { c, checks: Vec::new() };
    let ctx = CicyContext::parse(&c.threefold, Mode::Strict)
        .map_err(|e| ck.fail("threefold", e.to_string()))?;
    let recipe = recipe(&c.name, &ctx.label())
        .ok_or_else(|| ck.fail("name", "no construction registered under this name".into()))?;
    ck.holds("paper_ref", "anchor is nonempty".into(), !c.paper_ref.trim().is_empty())?;
    match &recipe {
        Recipe::Serre { c1, curves } => {
            let comps = check_components(&mut ck, curves)?;
            for (i, r) in comps.iter().enumerate() {
                ck.eq(&format!("components[{i}].omega_twist vs c1"), *c1, r.omega_twist)?;
                let adm = component_admissible(&r.component(), &ctx, *c1, 2);
                let failed: Vec<String> = adm
                    .trail
                    .iter()
                    .filter(|s| !s.pass)
                    .map(|s| format!("{}: {}", s.check, s.detail))
                    .collect();
                ck.holds(
                    &format!("components[{i}].admissible"),
                    format!("component {} admissible ({})", r.component(), failed.join("; ")),
                    adm.admissible,
                )?;
            }
            let total: i64 = comps.iter().map(|r| r.degree).sum();
            let b = chern_of_extension(0, *c1, total as u64, &ctx);
            ck.eq("rank", 2, c.rank)?;
            ck.eq("c1", b.c1, c.c1)?;
            ck.eq("c2", b.c2, c.c2)?;
            let pa = union_genus(&comps.iter().map(|r| r.genus).collect::<Vec<_>>(), 0);
            ck.eq("union_genus", c1 * total / 2 + 1, pa)?;
        }
        Recipe::Extension { a, b, z } => {
            let comps = check_components(&mut ck, std::slice::from_ref(z))?;
            ck.eq("components[0].omega_twist vs trivial", 0, comps[0].omega_twist)?;
            let bi = chern_of_extension(*a, *b, comps[0].degree as u64, &ctx);
            ck.eq("rank", 2, c.rank)?;
            ck.eq("c1", bi.c1, c.c1)?;
            ck.eq("c2", bi.c2, c.c2)?;
        }
        Recipe::Resolution { sub, trivial, positive } => {
            ck.eq("components.len", 0, c.components.len() as i64)?;
            let mut quot = vec![0; *trivial];
            quot.extend(positive);
            let bi = chern_from_resolution(sub, &quot, &ctx).map_err(|e| ck.fail("rank", e.to_string()))?;
            ck.eq("rank", bi.rank as i64, c.rank)?;
            ck.eq("c1", bi.c1, c.c1)?;
            ck.eq("c2", bi.c2, c.c2)?;
            let cap = max_rank_for_shape(sub, positive, &ctx).map_err(|e| ck.fail("rank", e.to_string()))?;
            ck.holds("rank window", format!("3 <= {} <= {cap}", c.rank), c.rank >= 3 && c.rank <= cap)?;
        }
        Recipe::NullCorrelationPullback => {
            ck.eq("components.len", 0, c.components.len() as i64)?;
            // c(N) = 1 + H^2 on P^3, twisted by t = 1, then pulled back by a finite map of degree u
            let (n1, n2, t) = (0, 1, 1);
            let (c1, c2) = (n1 + 2 * t, n2 + t * n1 + t * t);
            ck.eq("rank", 2, c.rank)?;
            ck.eq("c1", c1, c.c1)?;
            ck.eq("c2", c2 * ctx.u(), c.c2)?;
        }
    }
    if let Some(list) = published_c2_list(&ctx) {
        ck.holds("c2", format!("c2 = {} in {:?}", c.c2, list), list.contains(&c.c2))?;
    }
    if ctx.label() == "5" && c.rank == 2 {
        ck.holds(
            "c1",
            format!("({}, {}) in {:?}", c.c1, c.c2, QUINTIC_RANK2_PAIRS),
            QUINTIC_RANK2_PAIRS.contains(&(c.c1, c.c2)),
        )?;
    }
    Ok(ValidationReport {
        name: c.name.clone(),
        threefold: c.threefold.clone(),
        checks: ck.checks,
    })
}

/// Validates every built-in entry with this name.
pub fn validate_construction(name: &str) -> Result<Vec<ValidationReport>, ValidationError> {
    let entries: Vec<Construction> = registry().into_iter().filter(|c| c.name == name).collect();
    if entries.is_empty() {
        return Err(ValidationError {
            entry: name.to_string(),
            threefold: "-".into(),
            field: "name".into(),
            message: "no construction registered under this name".into(),
        });
    }
    entries.iter().map(validate).collect()
}

/// Built-in entries on the given threefold.
pub fn entries_for(ctx: &CicyContext) -> Vec<Construction> {
    registry()
        .into_iter()
        .filter(|c| c.threefold == ctx.label())
        .collect()
}

pub fn registry_to_json(entries: &[Construction]) -> String {
    serde_json::to_string_pretty(entries).expect("registry serializes")
}

pub fn registry_from_json(s: &str) -> Result<Vec<Construction>, serde_json::Error> {
    serde_json::from_str(s)
}
