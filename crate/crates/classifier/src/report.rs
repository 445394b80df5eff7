use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::enumerate::RankRegime;
use crate::pipeline::{ClassificationResult, Status};
use crate::rules::{anchor, evaluate, RuleKind, CORPUS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleEntry {
    pub id: String,
    pub kind: RuleKind,
    pub paper_ref: String,
    /// Recomputation of the cited instance.
    pub values: BTreeMap<String, Value>,
    pub annotations: Vec<String>,
    pub fired: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub candidate: String,
    pub kind: String,
    pub c1: i64,
    pub c2: i64,
    pub status: Status,
    pub closed_by: Vec<String>,
    pub unresolved: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleReport {
    pub threefold: String,
    pub c1: i64,
    pub rank_regime: RankRegime,
    pub admissible_c2: Vec<i64>,
    pub pairs: Vec<(i64, i64)>,
    pub witnesses: BTreeMap<i64, Vec<String>>,
    pub unresolved: Vec<i64>,
    pub rank_windows: BTreeMap<String, (i64, i64)>,
    pub disabled: Vec<String>,
    pub rules: Vec<RuleEntry>,
    pub verdicts: Vec<VerdictSummary>,
}

/// Every rule that fired, in corpus order, with counts and its recomputed anchor.
pub fn rule_report(result: &ClassificationResult) -> RuleReport {
    let mut counts: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for v in &result.verdicts {
        for b in &v.branches {
            for f in &b.firings {
                let e = counts.entry(f.rule.as_str()).or_default();
                e.0 += 1;
                if f.fails() {
                    e.1 += 1;
                }
                if f.skipped {
                    e.2 += 1;
                }
            }
        }
    }
    let rules = CORPUS
        .iter()
        .filter_map(|r| {
            let &(fired, failed, skipped) = counts.get(r.id)?;
            let values = anchor(r.id)
                .map(|(ctx, check, _)| evaluate(&check, &ctx).values)
                .unwrap_or_default();
            Some(RuleEntry {
                id: r.id.to_string(),
                kind: r.kind,
                paper_ref: r.paper_ref.to_string(),
                values,
                annotations: r.annotations.iter().map(|s| s.to_string()).collect(),
                fired,
                failed,
                skipped,
            })
        })
        .collect();
    let verdicts = result
        .verdicts
        .iter()
        .map(|v| VerdictSummary {
            candidate: v.candidate.witness_name(),
            kind: v.candidate.kind().to_string(),
            c1: v.c1,
            c2: v.c2,
            status: v.status,
            closed_by: v.closing_rules().into_iter().collect(),
            unresolved: v.unresolved,
        })
        .collect();
    RuleReport {
        threefold: result.threefold.clone(),
        c1: result.c1_max,
        rank_regime: result.rank_regime,
        admissible_c2: result.admissible_c2.clone(),
        pairs: result.pairs.clone(),
        witnesses: result.witnesses.clone(),
        unresolved: result.unresolved.clone(),
        rank_windows: result.rank_windows.clone(),
        disabled: result.disabled.clone(),
        rules,
        verdicts,
    }
}

impl RuleReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
