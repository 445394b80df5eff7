use std::collections::{BTreeMap, BTreeSet};

use chow_kernel::{max_rank_for_shape, CicyContext};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use serre_constructions::entries_for;
use thiserror::Error;

use crate::cases::{extension_loci, plan, resolution_shapes, split_candidates, Candidate};
use crate::enumerate::{enumerate_candidates, RankRegime};
use crate::rules::{anchor, evaluate, rule, RuleKind, CORPUS};

/// Ids of disabled rules.
pub type Toggles = BTreeSet<String>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("unsupported: {threefold} with {what}; supported are X_5, X_{{2,4}}, X_{{3,3}} in rank 2 and X_5 in higher rank, for c1 <= 2")]
    Unsupported { threefold: String, what: String },
    #[error("c1 must be in 0..=2, got {0}")]
    C1OutOfRange(i64),
    #[error("unknown rule id '{0}'")]
    UnknownRule(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Firing {
    pub rule: String,
    pub kind: RuleKind,
    pub check: crate::rules::Check,
    pub premise: Option<String>,
    pub values: BTreeMap<String, Value>,
    pub pass: bool,
    /// The premise axiom was disabled, so the firing does not count.
    pub skipped: bool,
}

impl Firing {
    pub fn fails(&self) -> bool {
        !self.skipped && !self.pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "SURVIVES")]
    Survives,
    #[serde(rename = "ELIMINATED")]
    Eliminated,
    #[serde(rename = "AXIOM-ELIMINATED")]
    AxiomEliminated,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Survives => "SURVIVES",
            Status::Eliminated => "ELIMINATED",
            Status::AxiomEliminated => "AXIOM-ELIMINATED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Branch {
    pub label: String,
    pub firings: Vec<Firing>,
    pub open_question: bool,
    /// `None` when open, otherwise the kind of the closing rules.
    pub closed: Option<RuleKind>,
}

impl Branch {
    fn close(firings: &[Firing]) -> Option<RuleKind> {
        let failing: Vec<&Firing> = firings.iter().filter(|f| f.fails()).collect();
        if failing.is_empty() {
            None
        } else if failing.iter().any(|f| f.kind == RuleKind::Arithmetic) {
            Some(RuleKind::Arithmetic)
        } else {
            Some(RuleKind::Axiom)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub candidate: Candidate,
    pub c1: i64,
    pub c2: i64,
    pub status: Status,
    pub branches: Vec<Branch>,
    /// Survives through a branch the analysis leaves open.
    pub unresolved: bool,
}

impl Verdict {
    /// Rules with a failing firing somewhere in the trail.
    pub fn closing_rules(&self) -> BTreeSet<String> {
        self.branches
            .iter()
            .flat_map(|b| b.firings.iter().filter(|f| f.fails()).map(|f| f.rule.clone()))
            .collect()
    }

    /// Every rule appearing in the trail.
    pub fn trail_rules(&self) -> BTreeSet<String> {
        self.branches
            .iter()
            .flat_map(|b| b.firings.iter().map(|f| f.rule.clone()))
            .collect()
    }
}

fn status_of(branches: &[Branch]) -> Status {
    if branches.iter().any(|b| b.closed.is_none()) {
        Status::Survives
    } else if branches.iter().all(|b| b.closed == Some(RuleKind::Arithmetic)) {
        Status::Eliminated
    } else {
        Status::AxiomEliminated
    }
}

/// Runs the case analysis for one candidate with the given rules disabled.
pub fn apply_rules(ctx: &CicyContext, cand: &Candidate, toggles: &Toggles) -> Verdict {
    let mut branches = Vec::new();
    for bp in plan(ctx, cand) {
        let mut firings = Vec::new();
        for step in bp.steps {
            if toggles.contains(&step.rule) {
                continue;
            }
            let r = rule(&step.rule).expect("planned rules are in the corpus");
            let o = evaluate(&step.check, ctx);
            let skipped = step.premise.as_ref().is_some_and(|p| toggles.contains(p));
            firings.push(Firing {
                rule: step.rule,
                kind: r.kind,
                check: step.check,
                premise: step.premise,
                values: o.values,
                pass: o.pass,
                skipped,
            });
        }
        let closed = Branch::close(&firings);
        branches.push(Branch { label: bp.label, firings, open_question: bp.open_question, closed });
    }
    let status = status_of(&branches);
    let unresolved = branches.iter().any(|b| b.closed.is_none() && b.open_question);
    Verdict { c1: cand.c1(), c2: cand.c2(ctx), candidate: cand.clone(), status, branches, unresolved }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub threefold: String,
    pub c1_max: i64,
    pub rank_regime: RankRegime,
    pub admissible_c2: Vec<i64>,
    /// `(c1, c2)` of surviving bundles with `c1 >= 1`; `c1 = 0` only adds `c2 = 0`.
    pub pairs: Vec<(i64, i64)>,
    pub witnesses: BTreeMap<i64, Vec<String>>,
    pub unresolved: Vec<i64>,
    /// `[3, max]` rank windows of the surviving higher-rank shapes.
    pub rank_windows: BTreeMap<String, (i64, i64)>,
    pub disabled: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

fn check_supported(ctx: &CicyContext, c1_max: i64, regime: RankRegime) -> Result<(), ClassifyError> {
    if !(0..=2).contains(&c1_max) {
        return Err(ClassifyError::C1OutOfRange(c1_max));
    }
    if c1_max == 0 {
        return Ok(());
    }
    let md = ctx.multidegree();
    let ok = match regime {
        RankRegime::Rank2 => matches!(md, [5] | [2, 4] | [3, 3]),
        RankRegime::HigherRank => md == [5],
    };
    if ok {
        Ok(())
    } else {
        Err(ClassifyError::Unsupported {
            threefold: ctx.display_name(),
            what: format!("{} and c1 = {c1_max}", regime.as_str()),
        })
    }
}

/// Every candidate examined for `c1 <= c1_max`.
pub fn candidates(ctx: &CicyContext, c1_max: i64, regime: RankRegime) -> Vec<Candidate> {
    let mut out = Vec::new();
    match regime {
        RankRegime::Rank2 => {
            for c1 in 0..=c1_max {
                for curve in enumerate_candidates(ctx, c1, regime) {
                    out.push(Candidate::Curve { c1, curve });
                }
            }
            if c1_max >= 2 {
                out.extend(extension_loci(ctx).into_iter().map(|z| Candidate::Extension { z }));
            }
            out.extend(split_candidates(c1_max));
        }
        RankRegime::HigherRank => {
            out.extend(split_candidates(c1_max));
            out.extend(resolution_shapes(c1_max));
            if c1_max >= 2 {
                out.push(Candidate::Pullback {
                    name: "Omega_P3(2)".into(),
                    sub: vec![2],
                    quot: vec![1, 1, 1, 1],
                });
            }
        }
    }
    out
}

pub fn classify(ctx: &CicyContext, c1_max: i64, regime: RankRegime) -> Result<ClassificationResult, ClassifyError> {
    classify_with(ctx, c1_max, regime, &Toggles::new())
}

/// As [`classify`] with the rules in `toggles` disabled.
pub fn classify_with(
    ctx: &CicyContext,
    c1_max: i64,
    regime: RankRegime,
    toggles: &Toggles,
) -> Result<ClassificationResult, ClassifyError> {
    check_supported(ctx, c1_max, regime)?;
    if let Some(bad) = toggles.iter().find(|t| rule(t).is_none()) {
        return Err(ClassifyError::UnknownRule(bad.clone()));
    }
    let verdicts: Vec<Verdict> = candidates(ctx, c1_max, regime)
        .iter()
        .map(|c| apply_rules(ctx, c, toggles))
        .collect();
    Ok(summarize(ctx, c1_max, regime, toggles, verdicts))
}

fn summarize(
    ctx: &CicyContext,
    c1_max: i64,
    regime: RankRegime,
    toggles: &Toggles,
    verdicts: Vec<Verdict>,
) -> ClassificationResult {
    let survivors: Vec<&Verdict> = verdicts.iter().filter(|v| v.status == Status::Survives).collect();
    let admissible: BTreeSet<i64> = survivors.iter().map(|v| v.c2).collect();
    let pairs: BTreeSet<(i64, i64)> = survivors.iter().filter(|v| v.c1 >= 1).map(|v| (v.c1, v.c2)).collect();
    let mut witnesses: BTreeMap<i64, BTreeSet<String>> =
        admissible.iter().map(|&c2| (c2, BTreeSet::new())).collect();
    for v in &survivors {
        if !matches!(v.candidate, Candidate::Curve { .. }) {
            witnesses.entry(v.c2).or_default().insert(v.candidate.witness_name());
        }
    }
    for e in entries_for(ctx) {
        let rank_ok = match regime {
            RankRegime::Rank2 => e.rank == 2,
            RankRegime::HigherRank => e.rank >= 3,
        };
        if rank_ok && e.c1 >= 1 && e.c1 <= c1_max && pairs.contains(&(e.c1, e.c2)) {
            witnesses.entry(e.c2).or_default().insert(e.name.clone());
        }
    }
    let unresolved: BTreeSet<i64> = survivors.iter().filter(|v| v.unresolved).map(|v| v.c2).collect();
    let mut rank_windows = BTreeMap::new();
    for v in &survivors {
        match &v.candidate {
            Candidate::Resolution { sub, positive } => {
                if let Ok(max) = max_rank_for_shape(sub, positive, ctx) {
                    rank_windows.insert(v.candidate.witness_name(), (3, max));
                }
            }
            Candidate::Pullback { sub, quot, .. } => {
                let r = quot.len() as i64 - sub.len() as i64;
                rank_windows.insert(v.candidate.witness_name(), (r, r));
            }
            _ => {}
        }
    }
    ClassificationResult {
        threefold: ctx.label(),
        c1_max,
        rank_regime: regime,
        admissible_c2: admissible.into_iter().collect(),
        pairs: pairs.into_iter().collect(),
        witnesses: witnesses.into_iter().map(|(k, v)| (k, v.into_iter().collect())).collect(),
        unresolved: unresolved.into_iter().collect(),
        rank_windows,
        disabled: toggles.iter().cloned().collect(),
        verdicts,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub firings_checked: usize,
    pub anchors_checked: usize,
    pub mismatches: Vec<String>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes every firing, branch closure, status and the summary from scratch.
pub fn audit(ctx: &CicyContext, result: &ClassificationResult) -> AuditReport {
    let mut mismatches = Vec::new();
    let mut firings_checked = 0;
    let toggles: Toggles = result.disabled.iter().cloned().collect();
    for v in &result.verdicts {
        for b in &v.branches {
            for f in &b.firings {
                firings_checked += 1;
                let o = evaluate(&f.check, ctx);
                if o.pass != f.pass || o.values != f.values {
                    mismatches.push(format!("{}: {} in '{}' does not reproduce", v.candidate, f.rule, b.label));
                }
                if rule(&f.rule).map(|r| r.kind) != Some(f.kind) {
                    mismatches.push(format!("{}: {} has the wrong kind", v.candidate, f.rule));
                }
                if toggles.contains(&f.rule) {
                    mismatches.push(format!("{}: disabled rule {} fired", v.candidate, f.rule));
                }
            }
            if Branch::close(&b.firings) != b.closed {
                mismatches.push(format!("{}: branch '{}' closure differs", v.candidate, b.label));
            }
        }
        if status_of(&v.branches) != v.status {
            mismatches.push(format!("{}: status differs", v.candidate));
        }
        let fresh = apply_rules(ctx, &v.candidate, &toggles);
        if &fresh != v {
            mismatches.push(format!("{}: re-running the pipeline gives a different verdict", v.candidate));
        }
    }
    let again = summarize(ctx, result.c1_max, result.rank_regime, &toggles, result.verdicts.clone());
    if again.admissible_c2 != result.admissible_c2 || again.pairs != result.pairs {
        mismatches.push("summary does not match the verdicts".to_string());
    }
    let mut anchors_checked = 0;
    for r in CORPUS {
        if let Some((actx, check, expected)) = anchor(r.id) {
            anchors_checked += 1;
            if evaluate(&check, &actx).pass != expected {
                mismatches.push(format!("anchor of {} does not reproduce", r.id));
            }
        } else {
            mismatches.push(format!("{} has no anchor", r.id));
        }
    }
    AuditReport { firings_checked, anchors_checked, mismatches }
}
