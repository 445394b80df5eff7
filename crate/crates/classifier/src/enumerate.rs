use chow_kernel::CicyContext;
use genus_bounds::max_curve_degree;
use serde::{Deserialize, Serialize};
use serre_constructions::{component_admissible, CurveCandidate, CurveComponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RankRegime {
    #[serde(rename = "rank2")]
    Rank2,
    #[serde(rename = "higher-rank")]
    HigherRank,
}

impl RankRegime {
    pub fn as_str(&self) -> &'static str {
        match self {
            RankRegime::Rank2 => "rank2",
            RankRegime::HigherRank => "higher-rank",
        }
    }

    pub fn rank_for_bounds(&self) -> i64 {
        match self {
            RankRegime::Rank2 => 2,
            RankRegime::HigherRank => 3,
        }
    }
}

/// Single components allowed for the given `c1`, sorted.
pub fn admissible_components(ctx: &CicyContext, c1: i64, regime: RankRegime) -> Vec<CurveComponent> {
    let Ok(cap) = max_curve_degree(ctx, c1, regime.rank_for_bounds()) else {
        return Vec::new();
    };
    let n = ctx.ambient_dim() as i64;
    let mut out = Vec::new();
    for span in 2..=n {
        for d in 1..=cap {
            let twice = c1 * d;
            if twice % 2 != 0 {
                continue;
            }
            let comp = CurveComponent::new(d, twice / 2 + 1, span);
            if component_admissible(&comp, ctx, c1, regime.rank_for_bounds()).admissible {
                out.push(comp);
            }
        }
    }
    out.sort();
    out
}

/// Candidate associated curves for `(ctx, c1, regime)`, in lex order.
///
/// `c1 = 0` gives only the empty curve. For `c1 = 2` the candidates are the
/// disjoint unions whose spans together fill `P^n` and whose degree is within the cap;
/// for `c1 = 1` they are single components.
pub fn enumerate_candidates(ctx: &CicyContext, c1: i64, regime: RankRegime) -> Vec<CurveCandidate> {
    match c1 {
        0 => return vec![CurveCandidate::empty()],
        1 | 2 => {}
        _ => return Vec::new(),
    }
    let comps = admissible_components(ctx, c1, regime);
    if c1 == 1 {
        return comps.into_iter().map(|c| CurveCandidate::new(vec![c])).collect();
    }
    let cap = max_curve_degree(ctx, c1, regime.rank_for_bounds()).unwrap_or(0);
    let n = ctx.ambient_dim() as i64;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(&comps, 0, cap, n, &mut stack, &mut out);
    out.sort();
    out
}

fn extend(
    comps: &[CurveComponent],
    start: usize,
    budget: i64,
    n: i64,
    stack: &mut Vec<CurveComponent>,
    out: &mut Vec<CurveCandidate>,
) {
    if !stack.is_empty() && spans_ambient(stack, n) {
        out.push(CurveCandidate::new(stack.clone()));
    }
    for i in start..comps.len() {
        if comps[i].d > budget {
            continue;
        }
        stack.push(comps[i]);
        extend(comps, i, budget - comps[i].d, n, stack, out);
        stack.pop();
    }
}

/// Whether linear spans of these dimensions can together span `P^n`.
pub fn spans_ambient(comps: &[CurveComponent], n: i64) -> bool {
    comps.iter().map(|c| c.span + 1).sum::<i64>() > n
}
