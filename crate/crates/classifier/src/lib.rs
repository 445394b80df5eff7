//! Rule pipeline deciding which Chern classes of globally generated bundles
//! occur on the CICY threefolds with `c1 <= 2`.
//!
//! Every elimination is a failing rule firing recorded in a verdict trail.

pub mod cases;
pub mod enumerate;
pub mod pipeline;
pub mod report;
pub mod rules;

pub use cases::{extension_loci, plan, resolution_shapes, split_candidates, BranchPlan, Candidate, Step};
pub use enumerate::{admissible_components, enumerate_candidates, spans_ambient, RankRegime};
pub use pipeline::{
    apply_rules, audit, candidates, classify, classify_with, AuditReport, Branch,
    ClassificationResult, ClassifyError, Firing, Status, Toggles, Verdict,
};
pub use report::{rule_report, RuleEntry, RuleReport, VerdictSummary};
pub use rules::{anchor, evaluate, rule, Check, Outcome, Rule, RuleKind, CORPUS};
