//! Numeric side of the Hartshorne-Serre correspondence on CICY threefolds.
//!
//! Curves are recorded by `(degree, genus, span)` only, and every explicit
//! construction in the registry is recomputed from a recipe on validation.

pub mod admissible;
pub mod curve;
pub mod incidence;
pub mod registry;

pub use admissible::{
    component_admissible, linear_section_allows, linear_sections, Admissibility, CheckStep,
    LinearSection, SectionShape,
};
pub use curve::{
    liaison_solve, required_genus, union_genus, CurveCandidate, CurveComponent, CurveError,
};
pub use incidence::{incidence_dimension_check, IncidenceReport};
pub use registry::{
    entries_for, published_c2_list, registry, registry_from_json, registry_to_json, validate,
    validate_construction, ComponentRecord, Construction, FieldCheck, ValidationError,
    ValidationReport, QUINTIC_RANK2_PAIRS,
};
