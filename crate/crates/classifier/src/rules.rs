use std::collections::BTreeMap;

use chow_kernel::{max_rank_for_shape, CicyContext};
use genus_bounds::{
    castelnuovo_pi, ci_curve_invariants, max_curve_degree, pi_one, pi_one_parameters, plane_genus,
};
use ruled_surfaces::{
    adjunction_pairing, disjointness_obstruction, eliminate_by_genus, genera, genus_polynomial,
    intersect, polynomial_roots, scroll_curve_pairing, DivisorClass, GenusConstraint,
    RuledSurface, SearchBox, SideConstraint,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use serre_constructions::{
    liaison_solve, linear_section_allows, linear_sections, union_genus, CurveComponent,
    SectionShape,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleKind {
    #[serde(rename = "ARITHMETIC")]
    Arithmetic,
    #[serde(rename = "AXIOM")]
    Axiom,
}

impl RuleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleKind::Arithmetic => "ARITHMETIC",
            RuleKind::Axiom => "AXIOM",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub kind: RuleKind,
    pub paper_ref: &'static str,
    pub summary: &'static str,
    /// Recorded discrepancies between printed and recomputed values.
    pub annotations: &'static [&'static str],
}

const fn arith(id: &'static str, paper_ref: &'static str, summary: &'static str) -> Rule {
    Rule { id, kind: RuleKind::Arithmetic, paper_ref, summary, annotations: &[] }
}

const fn axiom(id: &'static str, paper_ref: &'static str, summary: &'static str) -> Rule {
    Rule { id, kind: RuleKind::Axiom, paper_ref, summary, annotations: &[] }
}

/// The rule corpus in declaration order; trails and reports follow this order.
pub const CORPUS: &[Rule] = &[
    Rule {
        annotations: &[
            "printed pi_1(14,5) = 11; Harris' closed form gives 13, still < g = 15, so the elimination stands",
        ],
        ..arith(
            "R-genus-bound",
            "Castelnuovo / Harris bounds: \"π₁(14,5) = 11 < g−1\"; \"since π(14,5)=15\"; \"(d,r,m_1,ε_1,μ)=(11,4,2,2,0)\"",
            "g <= pi(d, span); above pi_1 the curve lies on a surface of degree <= span-1",
        )
    },
    arith(
        "R-degree-cap",
        "Lemma 2.8: \"d:=deg(C) ≤ 4 deg(X) since C is contained in the complete intersection of two quadric hypersurface of X\"",
        "total degree at most the curve-degree cap",
    ),
    Rule {
        annotations: &[
            "S a complete intersection of two quadrics in P^4 has omega_S = O_S(-1); the section by the quartic has omega = O(3), not the printed O(4); both differ from O(2)",
        ],
        ..arith(
            "R-ci-omega",
            "Prop 3.4: \"it would give ω_C ≅ O_C(4) by adjunction\"; Prop 4.5: \"from the minimal free resolution\"",
            "a complete intersection has omega = O(sum of degrees - n - 1), which must equal O(c1)",
        )
    },
    arith(
        "R-linear-section",
        "Remark in §4: \"X contains the plane ⟨C_1⟩ since each equation of X has degree at most 3\"; Prop 4.5: \"Π∩U_4 = D∪Z with Z a plane cubic\"",
        "a component spanning P^k must sit in a linear section of X compatible with its degree and omega",
    ),
    arith(
        "R-quadric-ci-bound",
        "Prop 3.4(a): \"B_1∩B_2∩B_3 is a complete intersection curve of degree 8 containing C\"; Lemma 5.2: \"deg(Φ) ≤ 2^4\"; Lemma 6.8: \"we get d_i ≤ 8\"",
        "a curve cut out by k quadrics has degree <= 2^k, minus one when the complete intersection has the wrong omega",
    ),
    arith(
        "R-residual-degree",
        "§5 s≥2 (a): \"Since h>0 and deg(E)=8, we have deg(E_j) ≤ 6 and so d_i ≤ 12\"",
        "a curve component in a residual surface of E has degree <= 2 (8 - 2)",
    ),
    arith(
        "R-mu-d",
        "Prop 3.4 (b3.1): \"(μ, d)=(1,15) or (3,5)\"; \"π(5,4)=1\"",
        "mu d = 15 on a cubic scroll, and the (3,5) split violates Castelnuovo",
    ),
    arith(
        "R-surface-section",
        "§5: \"we get d ≡ 0 (mod 4)\"; §6: \"we have deg(C) ≤ 3deg(S)\"; Prop 3.4(b): \"C is the disjoint union of two quintic plane curves\"",
        "C = S ∩ (hypersurfaces) fixes the degrees and spans of its components",
    ),
    Rule {
        annotations: &[
            "printed 2g-2 = -30a^2+31a-30; recomputed from the lattice as -3a^2+31a-30 (no integer root of = 30 either way)",
            "printed rank>=3 inequality 30a^2-31a+60 <= 0 read as 3a^2-31a+60 <= 0, which holds for a in {3,...,7}; that step is not reproduced arithmetically",
        ],
        ..arith(
            "R-hirzebruch-F1",
            "Prop 3.4 (b3.1): \"= 2ab−a−2b−a^2\"; \"and it has no integral solution\"",
            "no class of degree 15 on the cubic scroll F_1 has 2g-2 = 30",
        )
    },
    arith(
        "R-hirzebruch-F3",
        "Prop 3.4 (b3.2): \"2g−2 = 50, i.e. g=26, a contradiction\"",
        "on the cone over the twisted cubic the only class of degree 15 is 5h+15f with g = 26",
    ),
    arith(
        "R-adjunction-28-40",
        "§5: \"(4h+8f)·(2h+5f)= -8+20+16=28\"; \"2p_a(A_i) −2 = 40 ≠ 32\"",
        "quartic sections of cubic and quartic scrolls have 2g-2 in {28, 40}",
    ),
    arith(
        "R-ruled-38",
        "§6 deg(S)=6, d=17: \"= −3e +30 +(3e/2) +8 +(3e/2), which is absurd\"",
        "a 3-secant curve of degree 17 on a sextic scroll over a genus-2 curve has 2g-2 = 38, not 34",
    ),
    Rule {
        annotations: &[
            "printed b = 16+3e/2; the degree equation gives b = 7+3e/2 and 2g-2 = 22+6q, never 32",
            "printed identity -3e+6q+58 = 32 has no integer solution since 26+6q is not divisible by 3",
        ],
        ..arith(
            "R-ruled-58",
            "§6 (a1): \"= −3e + 16+3e/2 +6q−6 +48−3e/2\"",
            "the c=3 case of a degree-16 component on a sextic scroll is impossible",
        )
    },
    Rule {
        annotations: &[
            "printed 2q+16-e = 36 forces e = 2q-20, infeasible; the lattice recomputation gives 30+6q = 36, solvable at q = 1, so the contradiction is not reproduced by the lattice",
        ],
        ..arith(
            "R-ruled-e2q20",
            "§6 (b): \"=2q+16−e. Since e ≥ −q and q ≤ 2, we get a contradiction\"",
            "the printed identity 2q+16-e = 36 forces e = 2q-20 < -q",
        )
    },
    Rule {
        annotations: &[
            "degree equation gives b = 10+e (printed 16+e) and 2g-2 = 16+4q; printed \"2g2+2\" read as 2g2-2",
        ],
        ..arith(
            "R-clifford",
            "§6 (a2): \"Clifford index 2 or g−3 = 14\"; \"since π(16,7) = 12\"",
            "Clifford index 2 gives h0(O_C(1)) = 8 and g = 17 > pi(16,7) = 12",
        )
    },
    arith(
        "R-union-genus",
        "§6: \"Since p_a(C∪L) = 16, we get g ≤ 14\"; \"p_a(C_i∪L) = 13\"",
        "arithmetic genus of C ∪ L against the complete-intersection value",
    ),
    arith(
        "R-liaison-18",
        "Lemma 6.2 / Example 4.10: \"we get d= 3(24−d) and so d=18\"",
        "residual of C in S ∩ U for S a complete intersection of three quadrics",
    ),
    arith(
        "R-rank-window",
        "Prop 3.7: \"with 3≤ r≤ 14\", \"with 3≤ r≤ 8\", \"with 3≤ r≤ 5\"",
        "maximal rank without trivial factors from h0 counting",
    ),
    axiom(
        "A-base-locus-surface-degree",
        "Lemma 5.3: \"We have deg(S) ≠ 5\"; Lemma 5.5: \"We have deg(S) ≠ 7\"; Lemma 6.3: \"We have deg(S) ≠ 7\"; Prop 6.1(a); Lemma 6.10",
        "surfaces of these degrees in the base locus of |I_C(2)| do not occur",
    ),
    axiom(
        "A-berzolari",
        "Lemma 5.4: \"Since π(6,4) =2, we have g(D) ≤ 2\"; \"The Berzolari formula in [ho] for the number of trisecant lines to D gives g(D)=2\"",
        "a general hyperplane section of a sextic surface cut out by quadrics has genus 2",
    ),
    axiom(
        "A-secant-dim",
        "§6 (a): \"we have dim(Sec(T)) = 3\"",
        "the secant variety argument makes S_2 ruled by lines meeting C_2 in c in {2,3} points",
    ),
    axiom(
        "A-no-plane",
        "Prop 4.1: \"a smooth X_{3,3} contains no plane\"; Prop 3.6: \"X_5 contains no plane\"",
        "X contains no plane",
    ),
    axiom(
        "A-spannedness-h0",
        "Prop 3.4 (b1); §5 (b); §6: \"we get h^0(I_C(2)) = 1 and so I_C(2) is not globally generated\"",
        "the unions of three linear or quadric pieces are not cut out by quadrics",
    ),
    axiom(
        "A-linear-span",
        "Prop 4.1: \"C is contained in a complete intersection of two hyperplane sections of X\"; §5: \"⟨C_i⟩ has neither dimension 3 nor dimension 4\"; Lemma 6.8: \"then we have S_i = ⟨C_i⟩\"",
        "restrictions on the linear span of a component forced by spannedness",
    ),
    axiom(
        "A-connected-linkage",
        "Lemma 5.2 / Prop 6.1(b): \"Therefore F∩C ≠ ∅ and so ω_C ≠ ω_E|_C ≅ O_C(2)\"",
        "the residual of C in a complete intersection of four quadrics meets C",
    ),
];

pub fn rule(id: &str) -> Option<&'static Rule> {
    CORPUS.iter().find(|r| r.id == id)
}

/// Position of a rule in the corpus.
pub fn rule_index(id: &str) -> usize {
    CORPUS.iter().position(|r| r.id == id).unwrap_or(usize::MAX)
}

/// A computation behind a rule firing. Every variant is recomputed by [`evaluate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Check {
    DegreeCap { d: i64, c1: i64, rank: i64 },
    GenusBound { d: i64, g: i64, span: i64 },
    /// Harris' bound; above it the curve lies on a surface of degree `<= span - 1`
    /// and, being cut out by forms of degree `cut`, has `d <= cut (span - 1)`.
    RefinedGenusBound { d: i64, g: i64, span: i64, cut: i64 },
    CiOmega { degrees: Vec<i64>, ambient: i64, c1: i64, d: Option<i64> },
    LinearSection { d: i64, span: i64, c1: i64 },
    /// A plane curve of degree `z` inside a plane section of X.
    PlaneSectionContains { z: i64 },
    QuadricBound { d: i64, quadrics: u32, ambient: i64, c1: i64 },
    ResidualDegree { d: i64, complete_degree: i64, min_surface: i64 },
    /// `mu` components of degree `d` with `mu d = product`.
    MuD { mu: i64, d: i64, product: i64 },
    PlaneUnion { planes: i64, found: Vec<CurveComponent> },
    QuadricPlane { found: Vec<CurveComponent> },
    /// `C = S ∩ F` with `deg F = cut`: `d = cut * deg S` when `exact`, else `d <= cut * deg S`.
    SurfaceSection {
        d: i64,
        cut: i64,
        surface_degree: Option<i64>,
        exact: bool,
        degree_range: Option<(i64, i64)>,
        span: i64,
        surface_span: Option<i64>,
    },
    Hirzebruch { e: i64, d: i64, g: i64, components: i64 },
    ScrollAdjunction { surface_degree: i64, g: i64 },
    Ruled38 { d: i64, g: i64 },
    Ruled58 { d: i64, g: i64 },
    RuledE2q20 { d: i64, g: i64 },
    Clifford { d: i64, g: i64, cliff: i64 },
    /// `C ∪ L` with `L` a line; with `meets` given, `p_a` must equal `target`;
    /// otherwise `meets` is solved from `target` and `omega|_L` must have degree `twist`.
    UnionGenus { g: i64, meets: Option<i64>, target: i64, twist: i64 },
    Liaison { d: i64, total: i64, omega_total: i64, omega_target: i64, cut: i64 },
    RankWindow { sub: Vec<i64>, positive: Vec<i64>, min_rank: i64 },
    SpanRange { span: i64, lo: i64, hi: i64 },
    Axiom { claim: String, eliminates: bool, sub_check: Option<Box<Check>> },
}

/// Recomputed values and whether the candidate passes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub values: BTreeMap<String, Value>,
    pub pass: bool,
}

fn outcome(pass: bool, values: Value) -> Outcome {
    let values = match values {
        Value::Object(m) => m.into_iter().collect(),
        other => BTreeMap::from([("value".to_string(), other)]),
    };
    Outcome { values, pass }
}

fn failure(msg: impl ToString) -> Outcome {
    outcome(false, json!({ "error": msg.to_string() }))
}

fn hirzebruch(e: i64) -> RuledSurface {
    RuledSurface::hirzebruch(e).expect("Hirzebruch surfaces exist for e >= 0")
}

/// Recomputes a check with the kernel crates.
pub fn evaluate(check: &Check, ctx: &CicyContext) -> Outcome {
    match check {
        Check::DegreeCap { d, c1, rank } => match max_curve_degree(ctx, *c1, *rank) {
            Ok(cap) => outcome(*d <= cap, json!({ "d": d, "cap": cap })),
            Err(e) => failure(e),
        },
        Check::GenusBound { d, g, span } => {
            let bound = if *span == 2 {
                Ok(plane_genus(*d))
            } else {
                castelnuovo_pi(*d, *span)
            };
            match bound {
                Ok(p) => outcome(*g <= p, json!({ "pi": p, "g": g })),
                Err(e) => failure(e),
            }
        }
        Check::RefinedGenusBound { d, g, span, cut } => match pi_one(*d, *span) {
            Ok(p1) => {
                let (m1, e1, mu1) = pi_one_parameters(*d, *span);
                let surface_cap = cut * (span - 1);
                let pass = *g <= p1 || *d <= surface_cap;
                outcome(
                    pass,
                    json!({ "pi_one": p1, "m1_e1_mu1": [m1, e1, mu1], "g": g, "d_bound_on_surface": surface_cap }),
                )
            }
            Err(e) => failure(e),
        },
        Check::CiOmega { degrees, ambient, c1, d } => match ci_curve_invariants(degrees, *ambient) {
            Ok(ci) => {
                let degree_ok = d.is_none_or(|d| d == ci.degree);
                outcome(
                    ci.omega_twist == *c1 && degree_ok,
                    json!({ "degree": ci.degree, "omega_twist": ci.omega_twist, "genus": ci.genus, "required_twist": c1 }),
                )
            }
            Err(e) => failure(e),
        },
        Check::LinearSection { d, span, c1 } => outcome(
            linear_section_allows(ctx, *span, *d, *c1),
            json!({ "d": d, "span": span }),
        ),
        Check::PlaneSectionContains { z } => {
            let degrees: Vec<i64> = linear_sections(ctx, 2)
                .iter()
                .filter_map(|s| match s.shape {
                    SectionShape::Curve { degree, .. } => Some(degree),
                    SectionShape::Surface { .. } => None,
                })
                .collect();
            outcome(
                degrees.iter().any(|&deg| deg >= *z),
                json!({ "plane_section_degrees": degrees, "z": z }),
            )
        }
        Check::QuadricBound { d, quadrics, ambient, c1 } => {
            let bound = 1i64 << quadrics;
            let k = *quadrics as i64;
            let twist = 2 * k - ambient - 1;
            let effective = if k == ambient - 1 && twist != *c1 { bound - 1 } else { bound };
            outcome(
                *d <= effective,
                json!({ "bound": bound, "ci_omega_twist": twist, "effective_bound": effective, "d": d }),
            )
        }
        Check::ResidualDegree { d, complete_degree, min_surface } => {
            let cap = 2 * (complete_degree - min_surface);
            outcome(*d <= cap, json!({ "d": d, "cap": cap }))
        }
        Check::MuD { mu, d, product } => {
            let pairs: Vec<(i64, i64)> = (1..=*product)
                .filter(|m| product % m == 0 && product / m >= 5)
                .map(|m| (m, product / m))
                .collect();
            // each curve has omega = O(2), so g = d + 1 must respect pi(d, 4)
            let allowed: Vec<i64> = pairs
                .iter()
                .map(|&(_, dd)| dd)
                .filter(|&dd| castelnuovo_pi(dd, 4).is_ok_and(|p| dd < p))
                .collect();
            outcome(
                mu * d == *product && allowed.contains(d),
                json!({ "mu": mu, "d": d, "mu_d_pairs": pairs, "pi_5_4": castelnuovo_pi(5, 4).ok(), "allowed_d": allowed }),
            )
        }
        Check::PlaneUnion { planes, found } => {
            let u = ctx.u();
            let expected: Vec<CurveComponent> =
                (0..*planes).map(|_| CurveComponent::new(u, plane_genus(u), 2)).collect();
            outcome(
                &expected == found,
                json!({ "expected": render(&expected), "found": render(found) }),
            )
        }
        Check::QuadricPlane { found } => {
            let u = ctx.u();
            let mut expected = vec![(u, 2), (2 * u, 3)];
            expected.sort();
            let mut have: Vec<(i64, i64)> = found.iter().map(|c| (c.d, c.span)).collect();
            have.sort();
            outcome(
                expected == have,
                json!({ "expected_degree_span": expected, "found_degree_span": have }),
            )
        }
        Check::SurfaceSection { d, cut, surface_degree, exact, degree_range, span, surface_span } => {
            let (delta, ok) = match surface_degree {
                Some(s) if *exact => (Some(*s), *d == cut * s),
                Some(s) => (Some(*s), *d <= cut * s),
                None => {
                    if d % cut == 0 {
                        (Some(d / cut), true)
                    } else {
                        (None, false)
                    }
                }
            };
            let in_range = match (delta, degree_range) {
                (Some(s), Some((lo, hi))) => s >= *lo && s <= *hi,
                _ => true,
            };
            let span_ok = surface_span.is_none_or(|m| m == *span);
            outcome(
                ok && in_range && span_ok,
                json!({ "d": d, "cut": cut, "surface_degree": delta, "range": degree_range, "span": span, "surface_span": surface_span }),
            )
        }
        Check::Hirzebruch { e, d, g, components } => eval_hirzebruch(*e, *d, *g, *components),
        Check::ScrollAdjunction { surface_degree, g } => {
            let scrolls: &[(i64, i64)] = match surface_degree {
                3 => &[(1, 2), (3, 3)],
                4 => &[(0, 2), (2, 3), (4, 4)],
                _ => &[],
            };
            let values: Vec<i64> = scrolls
                .iter()
                .map(|&(e, t)| adjunction_pairing(4 * DivisorClass::new(1, t), &hirzebruch(e)))
                .collect();
            let required = 2 * g - 2;
            outcome(
                !values.is_empty() && values.contains(&required),
                json!({ "pairings": values, "required": required }),
            )
        }
        Check::Ruled38 { d, g } => {
            let required = 2 * g - 2;
            let values = scroll_values(3, *d, &[2]);
            outcome(
                values.iter().any(|v| v[2] == required),
                json!({ "required": required, "e_q_pairing": values }),
            )
        }
        Check::Ruled58 { d, g } => {
            let required = 2 * g - 2;
            let mut printed = Vec::new();
            for q in 0..=2 {
                for e in (-q..=6).filter(|e| e % 2 == 0) {
                    if -3 * e + 6 * q + 58 == required {
                        printed.push((e, q));
                    }
                }
            }
            let lattice = scroll_values(3, *d, &[1, 2]);
            outcome(
                !printed.is_empty(),
                json!({ "required": required, "printed_solutions": printed, "lattice_e_q_pairing": lattice }),
            )
        }
        Check::RuledE2q20 { d, g } => {
            let required = 2 * g - 2;
            let mut feasible = Vec::new();
            for q in 0..=2 {
                let e = 2 * q + 16 - required;
                if e >= -q && e % 2 == 0 {
                    feasible.push((e, q));
                }
            }
            let lattice = scroll_values(3, *d, &[1, 2]);
            outcome(
                !feasible.is_empty(),
                json!({ "required": required, "forced_e": "2q - 20", "feasible": feasible, "lattice_e_q_pairing": lattice }),
            )
        }
        Check::Clifford { d, g, cliff } => {
            let h0 = (d + 2 - cliff) / 2;
            match castelnuovo_pi(*d, h0 - 1) {
                Ok(p) => outcome(*g <= p, json!({ "h0": h0, "span": h0 - 1, "pi": p, "g": g })),
                Err(e) => failure(e),
            }
        }
        Check::UnionGenus { g, meets, target, twist } => match meets {
            Some(m) => {
                let pa = union_genus(&[*g, 0], *m);
                outcome(pa == *target, json!({ "p_a_union": pa, "target": target }))
            }
            None => {
                let m = target - g + 1;
                let restricted = -2 + m;
                outcome(
                    restricted == *twist && union_genus(&[*g, 0], m) == *target,
                    json!({ "meets": m, "omega_on_line": restricted, "required": twist }),
                )
            }
        },
        Check::Liaison { d, total, omega_total, omega_target, cut } => {
            match liaison_solve(*total, *omega_total, *omega_target, *cut) {
                Ok(sol) => outcome(*d == sol, json!({ "liaison_d": sol, "d": d })),
                Err(e) => failure(e),
            }
        }
        Check::RankWindow { sub, positive, min_rank } => match max_rank_for_shape(sub, positive, ctx) {
            Ok(max) => outcome(max >= *min_rank, json!({ "window": [min_rank, max] })),
            Err(e) => failure(e),
        },
        Check::SpanRange { span, lo, hi } => outcome(
            span >= lo && span <= hi,
            json!({ "span": span, "allowed": [lo, hi] }),
        ),
        Check::Axiom { claim, eliminates, sub_check } => {
            let mut values = BTreeMap::from([("claim".to_string(), json!(claim))]);
            let mut pass = !eliminates;
            if let Some(sub) = sub_check {
                let o = evaluate(sub, ctx);
                values.insert("sub_check".to_string(), json!(o.values));
                if !eliminates {
                    pass = o.pass;
                }
            }
            Outcome { values, pass }
        }
    }
}

fn render(comps: &[CurveComponent]) -> Vec<String> {
    comps.iter().map(|c| c.to_string()).collect()
}

/// `[e, q, 2g-2]` for a `sheets`-secant curve of degree `d` on sextic scrolls.
fn scroll_values(sheets: i64, d: i64, qs: &[i64]) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for &q in qs {
        for e in (-q..=6).filter(|e| e % 2 == 0) {
            if let Ok(s) = RuledSurface::new(e, q) {
                if let Ok(p) = scroll_curve_pairing(sheets, d, 6, &s) {
                    out.push([e, q, p]);
                }
            }
        }
    }
    out
}

fn eval_hirzebruch(e: i64, d: i64, g: i64, components: i64) -> Outcome {
    let s = hirzebruch(e);
    let hcls = DivisorClass::new(1, if e == 1 { 2 } else { e });
    // the cone condition already leaves finitely many classes; on F_1 the genus is the filter
    let constraint = if e == 3 {
        GenusConstraint::new(hcls, d).with(SideConstraint::SlopeBand { k: 3, lo: 0, hi: 1 })
    } else {
        GenusConstraint::new(hcls, d).with_genus(g)
    };
    let classes = match eliminate_by_genus(&constraint, &s, &SearchBox::default()) {
        Ok(c) => c,
        Err(err) => return failure(err),
    };
    let gs = genera(&classes, &s).unwrap_or_default();
    let poly = genus_polynomial(hcls, d, &s);
    let roots = poly
        .map(|p| polynomial_roots(p, 2 * g - 2, (-1000, 1000)))
        .unwrap_or_default();
    let matching = classes.iter().zip(&gs).filter(|(_, &gg)| gg == g).count();
    let connectedness = if components <= 1 {
        Value::Null
    } else if e == 3 {
        let band = [DivisorClass::new(1, 3), DivisorClass::new(1, 4)];
        json!({
            "band_classes_meet": disjointness_obstruction(&band, &s),
            "self_intersection": intersect(band[0], band[0], &s),
        })
    } else {
        json!("smooth curves other than lines are connected")
    };
    outcome(
        components == 1 && matching > 0,
        json!({
            "surface": format!("F_{e}"),
            "hyperplane": hcls.to_string(),
            "genus_polynomial": poly,
            "roots": roots,
            "classes": classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "genera": gs,
            "required_genus": g,
            "components": components,
            "connectedness": connectedness,
        }),
    )
}

/// The cited instance of a rule: threefold, check, and the outcome it must reproduce.
pub fn anchor(id: &str) -> Option<(CicyContext, Check, bool)> {
    let x5 = CicyContext::quintic();
    let x24 = CicyContext::x24();
    let x33 = CicyContext::x33();
    let ax = |claim: &str, eliminates: bool, sub: Option<Check>| Check::Axiom {
        claim: claim.to_string(),
        eliminates,
        sub_check: sub.map(Box::new),
    };
    Some(match id {
        "R-genus-bound" => (x33, Check::RefinedGenusBound { d: 14, g: 15, span: 5, cut: 3 }, false),
        "R-degree-cap" => (x5, Check::DegreeCap { d: 20, c1: 2, rank: 3 }, true),
        "R-ci-omega" => (x5, Check::CiOmega { degrees: vec![2, 2, 5], ambient: 4, c1: 2, d: None }, false),
        "R-linear-section" => (x5, Check::LinearSection { d: 5, span: 2, c1: 2 }, true),
        "R-quadric-ci-bound" => (x5, Check::QuadricBound { d: 8, quadrics: 3, ambient: 4, c1: 2 }, false),
        "R-residual-degree" => (x24, Check::ResidualDegree { d: 14, complete_degree: 8, min_surface: 2 }, false),
        "R-mu-d" => (x5, Check::MuD { mu: 3, d: 5, product: 15 }, false),
        "R-surface-section" => (
            x24,
            Check::SurfaceSection {
                d: 18,
                cut: 4,
                surface_degree: None,
                exact: true,
                degree_range: None,
                span: 5,
                surface_span: None,
            },
            false,
        ),
        "R-hirzebruch-F1" => (x5, Check::Hirzebruch { e: 1, d: 15, g: 16, components: 1 }, false),
        "R-hirzebruch-F3" => (x5, Check::Hirzebruch { e: 3, d: 15, g: 16, components: 1 }, false),
        "R-adjunction-28-40" => (x24, Check::ScrollAdjunction { surface_degree: 3, g: 13 }, false),
        "R-ruled-38" => (x33, Check::Ruled38 { d: 17, g: 18 }, false),
        "R-ruled-58" => (x33, Check::Ruled58 { d: 16, g: 17 }, false),
        "R-ruled-e2q20" => (x33, Check::RuledE2q20 { d: 18, g: 19 }, false),
        "R-clifford" => (x33, Check::Clifford { d: 16, g: 17, cliff: 2 }, false),
        "R-union-genus" => (x33, Check::UnionGenus { g: 15, meets: Some(3), target: 16, twist: 2 }, false),
        "R-liaison-18" => (
            x33,
            Check::Liaison { d: 18, total: 24, omega_total: 3, omega_target: 2, cut: 3 },
            true,
        ),
        "R-rank-window" => (x5, Check::RankWindow { sub: vec![-2], positive: vec![], min_rank: 3 }, true),
        "A-base-locus-surface-degree" => (x24, ax("deg(S) != 5", true, None), false),
        "A-berzolari" => (
            x24,
            ax("g(D) = 2 for the hyperplane section D", true, Some(Check::GenusBound { d: 6, g: 2, span: 4 })),
            false,
        ),
        "A-secant-dim" => (x33, ax("dim Sec(C_2) = 3", false, None), true),
        "A-no-plane" => (x33, ax("X contains no plane", false, None), true),
        "A-spannedness-h0" => (x33, ax("h0(I_C(2)) = 1, so I_C(2) is not spanned", true, None), false),
        "A-linear-span" => (
            x24,
            ax("span <= n - 2", false, Some(Check::SpanRange { span: 4, lo: 2, hi: 3 })),
            false,
        ),
        "A-connected-linkage" => (x24, ax("F meets C", true, None), false),
        _ => return None,
    })
}
