use std::fmt;

use chow_kernel::{chern_from_resolution, chern_of_extension, CicyContext};
use genus_bounds::plane_genus;
use serde::{Deserialize, Serialize};
use serre_constructions::{CurveCandidate, CurveComponent};

use crate::rules::Check;

/// An object whose Chern classes the pipeline decides on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Candidate {
    /// Rank 2 with a section vanishing on `curve`, `omega_C = O_C(c1)`.
    Curve { c1: i64, curve: CurveCandidate },
    /// `0 -> O(1) -> E -> I_Z(1) -> 0` with `Z` an elliptic curve.
    Extension { z: CurveComponent },
    /// `O^t (+) O(a_1) (+) ...`; only the nonzero twists are listed.
    Split { twists: Vec<i64> },
    /// `0 -> (+) O(sub) -> O^m (+) O(positive) -> E -> 0` without trivial factors.
    Resolution { sub: Vec<i64>, positive: Vec<i64> },
    /// Pullback of a bundle on `P^3` by a linear projection, given by its resolution.
    Pullback { name: String, sub: Vec<i64>, quot: Vec<i64> },
}

impl Candidate {
    pub fn kind(&self) -> &'static str {
        match self {
            Candidate::Curve { .. } => "curve",
            Candidate::Extension { .. } => "extension",
            Candidate::Split { .. } => "split",
            Candidate::Resolution { .. } => "resolution",
            Candidate::Pullback { .. } => "pullback",
        }
    }

    pub fn c1(&self) -> i64 {
        match self {
            Candidate::Curve { c1, .. } => *c1,
            Candidate::Extension { .. } => 2,
            Candidate::Split { twists } => twists.iter().sum(),
            Candidate::Resolution { sub, positive } => {
                positive.iter().sum::<i64>() - sub.iter().sum::<i64>()
            }
            Candidate::Pullback { sub, quot, .. } => quot.iter().sum::<i64>() - sub.iter().sum::<i64>(),
        }
    }

    pub fn c2(&self, ctx: &CicyContext) -> i64 {
        let u = ctx.u();
        match self {
            Candidate::Curve { curve, .. } => curve.total_d(),
            Candidate::Extension { z } => chern_of_extension(1, 1, z.d as u64, ctx).c2,
            Candidate::Split { twists } => {
                let mut e2 = 0;
                for i in 0..twists.len() {
                    for j in i + 1..twists.len() {
                        e2 += twists[i] * twists[j];
                    }
                }
                e2 * u
            }
            Candidate::Resolution { sub, positive } => {
                let mut quot = vec![0; sub.len() + 1];
                quot.extend(positive);
                chern_from_resolution(sub, &quot, ctx).map(|b| b.c2).unwrap_or(i64::MIN)
            }
            Candidate::Pullback { sub, quot, .. } => {
                chern_from_resolution(sub, quot, ctx).map(|b| b.c2).unwrap_or(i64::MIN)
            }
        }
    }

    /// Short name used for witnesses.
    pub fn witness_name(&self) -> String {
        match self {
            Candidate::Curve { curve, .. } => format!("curve:{curve}"),
            Candidate::Extension { z } => format!("extension:O(1)->E->I_Z(1), Z={z}"),
            Candidate::Split { twists } => {
                let parts: Vec<String> = twists.iter().map(|t| format!("O({t})")).collect();
                if parts.is_empty() {
                    "split:O+O".to_string()
                } else if twists.len() == 1 {
                    format!("split:O+{}", parts[0])
                } else {
                    format!("split:{}", parts.join("+"))
                }
            }
            Candidate::Resolution { sub, positive } => {
                let s: Vec<String> = sub.iter().map(|t| format!("O({t})")).collect();
                let mut q = vec!["O^m".to_string()];
                q.extend(positive.iter().map(|t| format!("O({t})")));
                format!("resolution:{}->{}", s.join("+"), q.join("+"))
            }
            Candidate::Pullback { name, .. } => format!("pullback:{name}"),
        }
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.witness_name())
    }
}

/// A rule application to be evaluated; `premise` names an axiom it relies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: String,
    pub check: Check,
    pub premise: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPlan {
    pub label: String,
    pub steps: Vec<Step>,
    /// An open branch here is a case the analysis leaves undecided.
    pub open_question: bool,
}

fn st(rule: &str, check: Check) -> Step {
    Step { rule: rule.to_string(), check, premise: None }
}

fn pre(rule: &str, check: Check, premise: &str) -> Step {
    Step { rule: rule.to_string(), check, premise: Some(premise.to_string()) }
}

fn ax(claim: &str, eliminates: bool, sub: Option<Check>) -> Check {
    Check::Axiom { claim: claim.to_string(), eliminates, sub_check: sub.map(Box::new) }
}

fn branch(label: impl Into<String>, steps: Vec<Step>) -> BranchPlan {
    BranchPlan { label: label.into(), steps, open_question: false }
}

fn md(ctx: &CicyContext) -> Vec<i64> {
    ctx.multidegree().iter().map(|&d| d as i64).collect()
}

/// `d <= cut * delta` for a surface of degree `delta` spanning `P^surface_span`.
fn section(d: i64, cut: i64, delta: i64, span: i64, surface_span: i64) -> Check {
    Check::SurfaceSection {
        d,
        cut,
        surface_degree: Some(delta),
        exact: false,
        degree_range: None,
        span,
        surface_span: Some(surface_span),
    }
}

/// Branches of the case analysis for one candidate; each branch lists its steps in order.
pub fn plan(ctx: &CicyContext, cand: &Candidate) -> Vec<BranchPlan> {
    match cand {
        Candidate::Curve { c1, curve } => plan_curve(ctx, *c1, curve),
        Candidate::Extension { z } => plan_extension(ctx, z),
        Candidate::Split { .. } | Candidate::Pullback { .. } => vec![branch("direct", Vec::new())],
        Candidate::Resolution { sub, positive } => vec![branch(
            "rank window",
            vec![st(
                "R-rank-window",
                Check::RankWindow { sub: sub.clone(), positive: positive.clone(), min_rank: 3 },
            )],
        )],
    }
}

fn prelude(ctx: &CicyContext, c1: i64, curve: &CurveCandidate) -> Vec<Step> {
    let mut out = Vec::new();
    let no_plane = matches!(md(ctx).as_slice(), [5] | [3, 3]);
    if no_plane {
        out.push(st("A-no-plane", ax("X contains no plane", false, None)));
    }
    out.push(st("R-degree-cap", Check::DegreeCap { d: curve.total_d(), c1, rank: 2 }));
    for c in curve.components() {
        let check = Check::LinearSection { d: c.d, span: c.span, c1 };
        out.push(if no_plane { pre("R-linear-section", check, "A-no-plane") } else { st("R-linear-section", check) });
    }
    out
}

fn plan_curve(ctx: &CicyContext, c1: i64, curve: &CurveCandidate) -> Vec<BranchPlan> {
    if curve.is_empty() {
        return vec![branch("empty curve", Vec::new())];
    }
    let mut branches = match (c1, md(ctx).as_slice()) {
        (1, _) => plan_c1_one(ctx, curve),
        (2, [5]) => plan_quintic(curve),
        (2, [2, 4]) if curve.count() == 1 => plan_x24_single(curve.components()[0]),
        (2, [2, 4]) => plan_x24_multi(curve),
        (2, [3, 3]) if curve.count() == 1 => plan_x33_single(curve.components()[0]),
        (2, [3, 3]) => plan_x33_multi(curve),
        _ => vec![branch("no case analysis", Vec::new())],
    };
    let head = prelude(ctx, c1, curve);
    for b in &mut branches {
        let mut steps = head.clone();
        steps.append(&mut b.steps);
        b.steps = steps;
    }
    branches
}

fn plan_c1_one(ctx: &CicyContext, curve: &CurveCandidate) -> Vec<BranchPlan> {
    let n = ctx.ambient_dim() as i64;
    let c = curve.components()[0];
    let mut steps = vec![st(
        "A-linear-span",
        ax(
            "C lies in a complete intersection of two hyperplane sections",
            false,
            Some(Check::SpanRange { span: c.span, lo: 2, hi: n - 2 }),
        ),
    )];
    if c.d == ctx.u() {
        steps.push(pre(
            "R-ci-omega",
            Check::CiOmega { degrees: md(ctx), ambient: n - 2, c1: 1, d: Some(c.d) },
            "A-linear-span",
        ));
    }
    vec![branch("C in a codimension-two linear section", steps)]
}

fn plan_quintic(curve: &CurveCandidate) -> Vec<BranchPlan> {
    let comps = curve.components().to_vec();
    let (mu, d) = (comps.len() as i64, comps[0].d);
    let g = comps[0].g;
    let k = comps.len() as i64;
    vec![
        branch(
            "(a) three quadrics meet in a curve",
            vec![st(
                "R-quadric-ci-bound",
                Check::QuadricBound { d: curve.total_d(), quadrics: 3, ambient: 4, c1: 2 },
            )],
        ),
        branch(
            "(b) two planes",
            vec![st("R-surface-section", Check::PlaneUnion { planes: 2, found: comps.clone() })],
        ),
        branch(
            "(b1) three planes",
            vec![
                st("R-surface-section", Check::PlaneUnion { planes: 3, found: comps.clone() }),
                st("A-spannedness-h0", ax("h0(I_C(2)) = 1", true, None)),
            ],
        ),
        branch(
            "(b2) quadric surface and plane",
            vec![
                st("R-surface-section", Check::QuadricPlane { found: comps.clone() }),
                st(
                    "R-ci-omega",
                    Check::CiOmega { degrees: vec![2, 5], ambient: 3, c1: 2, d: Some(10) },
                ),
                st("A-spannedness-h0", ax("I_C(2) is not spanned along the plane", true, None)),
            ],
        ),
        branch(
            "(b3.1) smooth cubic scroll",
            vec![
                st("R-mu-d", Check::MuD { mu, d, product: 15 }),
                st("R-hirzebruch-F1", Check::Hirzebruch { e: 1, d: curve.total_d(), g, components: k }),
            ],
        ),
        branch(
            "(b3.2) cone over a twisted cubic",
            vec![
                st("R-mu-d", Check::MuD { mu, d, product: 15 }),
                st("R-hirzebruch-F3", Check::Hirzebruch { e: 3, d: curve.total_d(), g, components: k }),
            ],
        ),
    ]
}

/// Steps for a degree-`delta` surface section of degree `d` on `X_{2,4}`.
fn x24_surface_steps(c: CurveComponent, delta: i64) -> Vec<Step> {
    match delta {
        2 => vec![st(
            "R-ci-omega",
            Check::CiOmega { degrees: vec![2, 4], ambient: 3, c1: 2, d: Some(c.d) },
        )],
        3 => vec![st("R-adjunction-28-40", Check::ScrollAdjunction { surface_degree: 3, g: c.g })],
        4 if c.span == 4 => vec![st(
            "R-ci-omega",
            Check::CiOmega { degrees: vec![2, 2, 4], ambient: 4, c1: 2, d: Some(c.d) },
        )],
        4 => vec![st("R-adjunction-28-40", Check::ScrollAdjunction { surface_degree: 4, g: c.g })],
        5 | 7 => vec![st(
            "A-base-locus-surface-degree",
            ax(&format!("deg(S) != {delta}"), true, None),
        )],
        6 => vec![st(
            "A-berzolari",
            ax(
                "a hyperplane section of S has genus 2",
                true,
                Some(Check::GenusBound { d: 6, g: 2, span: 4 }),
            ),
        )],
        8 => vec![st(
            "R-ci-omega",
            Check::CiOmega { degrees: vec![2, 2, 2, 4], ambient: 5, c1: 2, d: Some(c.d) },
        )],
        _ => Vec::new(),
    }
}

fn plan_x24_single(c: CurveComponent) -> Vec<BranchPlan> {
    let mut curve_steps = vec![st(
        "R-quadric-ci-bound",
        Check::QuadricBound { d: c.d, quadrics: 4, ambient: 5, c1: 2 },
    )];
    let mut open_question = false;
    if c.d < 16 {
        curve_steps.push(st("A-connected-linkage", ax("the linked curve meets C", true, None)));
    } else if c.d == 16 {
        curve_steps.push(st(
            "R-ci-omega",
            Check::CiOmega { degrees: vec![2, 2, 2, 2], ambient: 5, c1: 2, d: Some(16) },
        ));
        open_question = true;
    }
    let mut surface_steps = vec![st(
        "R-surface-section",
        Check::SurfaceSection {
            d: c.d,
            cut: 4,
            surface_degree: None,
            exact: true,
            degree_range: Some((4, 8)),
            span: c.span,
            surface_span: Some(5),
        },
    )];
    if c.d % 4 == 0 {
        surface_steps.extend(x24_surface_steps(c, c.d / 4));
    }
    vec![
        BranchPlan { label: "base locus of |I_C(2)| is a curve".into(), steps: curve_steps, open_question },
        branch("base locus of |I_C(2)| is a surface", surface_steps),
    ]
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tag {
    LinearSpace,
    Quadric,
    Curve,
    Other,
}

struct Opt {
    label: String,
    steps: Vec<Step>,
    tag: Tag,
}

fn product(options: Vec<Vec<Opt>>) -> Vec<(Vec<String>, Vec<Step>, Vec<Tag>)> {
    let mut acc: Vec<(Vec<String>, Vec<Step>, Vec<Tag>)> = vec![(Vec::new(), Vec::new(), Vec::new())];
    for opts in options {
        let mut next = Vec::new();
        for (labels, steps, tags) in &acc {
            for o in &opts {
                let mut l = labels.clone();
                l.push(o.label.clone());
                let mut s = steps.clone();
                s.extend(o.steps.iter().cloned());
                let mut t = tags.clone();
                t.push(o.tag);
                next.push((l, s, t));
            }
        }
        acc = next;
    }
    acc
}

fn plan_x24_multi(curve: &CurveCandidate) -> Vec<BranchPlan> {
    let d = curve.total_d();
    if d <= 16 {
        let steps = curve
            .components()
            .iter()
            .map(|c| st("R-genus-bound", Check::GenusBound { d: c.d, g: c.g, span: c.span }))
            .collect();
        return vec![branch("space curves of extremal genus", steps)];
    }
    let options = curve
        .components()
        .iter()
        .map(|&c| {
            let mut surface = vec![st(
                "R-surface-section",
                Check::SurfaceSection {
                    d: c.d,
                    cut: 4,
                    surface_degree: None,
                    exact: true,
                    degree_range: Some((2, 7)),
                    span: c.span,
                    surface_span: None,
                },
            )];
            if c.d % 4 == 0 {
                surface.extend(x24_surface_steps(c, c.d / 4));
            }
            let tag = if c.d == 8 { Tag::Quadric } else { Tag::Other };
            vec![
                Opt { label: format!("{c}: surface"), steps: surface, tag },
                Opt {
                    label: format!("{c}: curve"),
                    steps: vec![
                        st(
                            "A-linear-span",
                            ax("<C_i> has neither dimension 3 nor 4", false, Some(Check::SpanRange { span: c.span, lo: 5, hi: 5 })),
                        ),
                        st(
                            "R-residual-degree",
                            Check::ResidualDegree { d: c.d, complete_degree: 8, min_surface: 2 },
                        ),
                    ],
                    tag: Tag::Curve,
                },
            ]
        })
        .collect();
    product(options)
        .into_iter()
        .map(|(labels, mut steps, tags)| {
            if tags.iter().all(|t| *t == Tag::Curve) {
                steps.push(st(
                    "R-quadric-ci-bound",
                    Check::QuadricBound { d, quadrics: 4, ambient: 5, c1: 2 },
                ));
            }
            if tags.len() >= 3 && tags.iter().all(|t| *t == Tag::Quadric) {
                steps.push(st("A-spannedness-h0", ax("h0(I_C(2)) = 1", true, None)));
            }
            branch(labels.join("; "), steps)
        })
        .collect()
}

fn refined(c: CurveComponent) -> Step {
    st("R-genus-bound", Check::RefinedGenusBound { d: c.d, g: c.g, span: c.span, cut: 3 })
}

/// Follow-up steps for a component on a surface of degree `delta` spanning `P^5` in `X_{3,3}`.
fn x33_surface_steps(c: CurveComponent, delta: i64, single: bool) -> Vec<Vec<Step>> {
    let base_locus = |claim: String| vec![st("A-base-locus-surface-degree", ax(&claim, true, None))];
    match delta {
        8 if single => vec![vec![st(
            "R-liaison-18",
            Check::Liaison { d: c.d, total: 24, omega_total: 3, omega_target: 2, cut: 3 },
        )]],
        8 => vec![base_locus("S is not a complete intersection of three quadrics".into())],
        7 => vec![base_locus("deg(S) != 7".into())],
        6 => {
            let berzolari = st(
                "A-berzolari",
                ax(
                    "a hyperplane section of S has genus 2",
                    false,
                    Some(Check::GenusBound { d: 6, g: 2, span: 4 }),
                ),
            );
            let secant = st("A-secant-dim", ax("dim Sec(C_i) = 3", false, None));
            match (c.d, single) {
                (17, _) => vec![vec![
                    berzolari,
                    pre("R-ruled-38", Check::Ruled38 { d: 17, g: c.g }, "A-berzolari"),
                ]],
                (15 | 16 | 18, true) => vec![Vec::new()],
                (15, false) => vec![base_locus("deg(S_i) = 6 with d_i = 15 does not occur".into())],
                (16, false) => vec![
                    vec![secant.clone(), pre("R-ruled-58", Check::Ruled58 { d: 16, g: c.g }, "A-secant-dim")],
                    vec![
                        secant,
                        pre("R-clifford", Check::Clifford { d: 16, g: c.g, cliff: 2 }, "A-secant-dim"),
                    ],
                ],
                (18, false) => vec![vec![
                    secant,
                    pre("R-ruled-e2q20", Check::RuledE2q20 { d: 18, g: c.g }, "A-secant-dim"),
                ]],
                _ => vec![Vec::new()],
            }
        }
        5 => match (c.d, single) {
            (14, _) => vec![vec![st(
                "R-union-genus",
                Check::UnionGenus { g: c.g, meets: Some(3), target: 16, twist: 2 },
            )]],
            (15, false) => vec![vec![st(
                "A-connected-linkage",
                ax("C_i is linked to a curve meeting it", true, None),
            )]],
            _ => vec![Vec::new()],
        },
        _ => vec![Vec::new()],
    }
}

fn plan_x33_single(c: CurveComponent) -> Vec<BranchPlan> {
    let mut out = Vec::new();
    let mut curve_steps = vec![st(
        "R-quadric-ci-bound",
        Check::QuadricBound { d: c.d, quadrics: 4, ambient: 5, c1: 2 },
    )];
    let mut open_question = false;
    if c.d < 16 {
        curve_steps.push(st("A-connected-linkage", ax("the linked curve meets C", true, None)));
    } else if c.d == 16 {
        curve_steps.push(st(
            "R-ci-omega",
            Check::CiOmega { degrees: vec![2, 2, 2, 2], ambient: 5, c1: 2, d: Some(16) },
        ));
        open_question = true;
    }
    out.push(BranchPlan { label: "dim S = 1".into(), steps: curve_steps, open_question });

    let mut three = vec![st(
        "R-surface-section",
        Check::SurfaceSection {
            d: c.d,
            cut: 9,
            surface_degree: None,
            exact: true,
            degree_range: Some((3, 4)),
            span: c.span,
            surface_span: Some(5),
        },
    )];
    match (c.d % 9 == 0, c.d / 9) {
        (true, 4) => three.push(st(
            "R-ci-omega",
            Check::CiOmega { degrees: vec![2, 2, 3, 3], ambient: 5, c1: 2, d: Some(c.d) },
        )),
        (true, 3) => three.push(st(
            "A-base-locus-surface-degree",
            ax("a cubic threefold section would give a non-spanned I_C(2)", true, None),
        )),
        _ => {}
    }
    out.push(branch("dim S = 3", three));

    for delta in 4..=8 {
        let head = vec![refined(c), st("R-surface-section", section(c.d, 3, delta, c.span, 5))];
        for (i, tail) in x33_surface_steps(c, delta, true).into_iter().enumerate() {
            let mut steps = head.clone();
            steps.extend(tail);
            let label = if i == 0 {
                format!("dim S = 2, deg S = {delta}")
            } else {
                format!("dim S = 2, deg S = {delta} ({})", i + 1)
            };
            out.push(branch(label, steps));
        }
    }
    out
}

fn x33_options(c: CurveComponent) -> Vec<Opt> {
    let mut out = vec![
        Opt {
            label: format!("{c}: linear threefold"),
            steps: vec![st(
                "R-surface-section",
                Check::SurfaceSection {
                    d: c.d,
                    cut: 9,
                    surface_degree: Some(1),
                    exact: true,
                    degree_range: None,
                    span: c.span,
                    surface_span: Some(3),
                },
            )],
            tag: Tag::LinearSpace,
        },
        Opt {
            label: format!("{c}: quadric threefold"),
            steps: vec![
                st(
                    "R-surface-section",
                    Check::SurfaceSection {
                        d: c.d,
                        cut: 9,
                        surface_degree: Some(2),
                        exact: true,
                        degree_range: None,
                        span: c.span,
                        surface_span: Some(4),
                    },
                ),
                st(
                    "R-ci-omega",
                    Check::CiOmega { degrees: vec![2, 3, 3], ambient: 4, c1: 2, d: Some(c.d) },
                ),
            ],
            tag: Tag::Other,
        },
    ];
    // surfaces: two quadrics in P^4, or a surface of degree 5..8 in P^5
    if c.span == 4 {
        let mut steps = vec![refined(c), st("R-surface-section", section(c.d, 3, 4, c.span, 4))];
        match c.d {
            11 => steps.push(st(
                "R-union-genus",
                Check::UnionGenus { g: c.g, meets: None, target: 13, twist: 2 },
            )),
            12 => steps.push(st(
                "A-base-locus-surface-degree",
                ax("a quadric section of the del Pezzo surface gives a tacnode", true, None),
            )),
            _ => {}
        }
        out.push(Opt { label: format!("{c}: surface in P^4"), steps, tag: Tag::Other });
    } else if c.span == 5 {
        for delta in 5..=8 {
            let head = vec![refined(c), st("R-surface-section", section(c.d, 3, delta, c.span, 5))];
            for (i, tail) in x33_surface_steps(c, delta, false).into_iter().enumerate() {
                let mut steps = head.clone();
                steps.extend(tail);
                out.push(Opt {
                    label: format!("{c}: surface of degree {delta}{}", if i > 0 { " (c = 2)" } else { "" }),
                    steps,
                    tag: Tag::Other,
                });
            }
        }
    }
    let mut curve = vec![st(
        "R-quadric-ci-bound",
        Check::QuadricBound { d: c.d, quadrics: (c.span - 1) as u32, ambient: c.span, c1: 2 },
    )];
    if c.span == 5 {
        curve.push(if c.d == 16 {
            st("A-spannedness-h0", ax("the other components are not cut out by quadrics", true, None))
        } else {
            st("A-connected-linkage", ax("the linked curve meets C_i", true, None))
        });
    }
    out.push(Opt { label: format!("{c}: curve"), steps: curve, tag: Tag::Curve });
    out
}

fn plan_x33_multi(curve: &CurveCandidate) -> Vec<BranchPlan> {
    let options = curve.components().iter().map(|&c| x33_options(c)).collect();
    product(options)
        .into_iter()
        .map(|(labels, mut steps, tags)| {
            if tags.len() >= 3 && tags.iter().all(|t| *t == Tag::LinearSpace) {
                steps.push(st("A-spannedness-h0", ax("h0(I_C(2)) = 1", true, None)));
            }
            branch(labels.join("; "), steps)
        })
        .collect()
}

fn plan_extension(ctx: &CicyContext, z: &CurveComponent) -> Vec<BranchPlan> {
    let n = ctx.ambient_dim() as i64;
    let mut steps = vec![st("R-genus-bound", Check::GenusBound { d: z.d, g: z.g, span: z.span })];
    if z.span == n - 2 {
        steps.push(st(
            "R-ci-omega",
            Check::CiOmega { degrees: md(ctx), ambient: n - 2, c1: 0, d: Some(z.d) },
        ));
    } else {
        steps.push(st("R-linear-section", Check::PlaneSectionContains { z: z.d }));
    }
    vec![branch("Z cut out by hyperplanes", steps)]
}

/// Elliptic curves `Z` that could be the zero locus of a section of `E(-1)`.
pub fn extension_loci(ctx: &CicyContext) -> Vec<CurveComponent> {
    let n = ctx.ambient_dim() as i64;
    let mut out = Vec::new();
    for span in 2..=n - 2 {
        for z in 1..=3 * ctx.u() {
            let c = CurveComponent::new(z, 1, span);
            if c.satisfies_type_invariants() && (span > 2 || plane_genus(z) == 1) {
                out.push(c);
            }
        }
    }
    out
}

/// Resolution shapes `0 -> (+) O(sub) -> O^m (+) O(positive) -> E -> 0` with `c1 <= c1_max`.
pub fn resolution_shapes(c1_max: i64) -> Vec<Candidate> {
    let subs: [&[i64]; 5] = [&[-1], &[-2], &[-1, -1], &[-2, -1], &[-2, -2]];
    let positives: [&[i64]; 3] = [&[], &[1], &[2]];
    let mut out = Vec::new();
    for sub in subs {
        for pos in positives {
            let cand = Candidate::Resolution { sub: sub.to_vec(), positive: pos.to_vec() };
            let c1 = cand.c1();
            if c1 >= 1 && c1 <= c1_max.min(2) {
                out.push(cand);
            }
        }
    }
    out
}

/// Split bundles with `0 <= c1 <= c1_max`, trivial summands omitted.
pub fn split_candidates(c1_max: i64) -> Vec<Candidate> {
    let mut out = vec![Candidate::Split { twists: Vec::new() }];
    if c1_max >= 1 {
        out.push(Candidate::Split { twists: vec![1] });
    }
    if c1_max >= 2 {
        out.push(Candidate::Split { twists: vec![2] });
        out.push(Candidate::Split { twists: vec![1, 1] });
    }
    out
}
