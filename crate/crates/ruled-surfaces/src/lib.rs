//! Intersection theory on Hirzebruch surfaces `F_e` and ruled surfaces `P(F)` over curves.
//!
//! The Picard lattice modulo numerical equivalence is `Z h + Z f` with
//! `h^2 = -e`, `h.f = 1`, `f^2 = 0`.

pub mod error;
pub mod lattice;
pub mod scroll;
pub mod search;

pub use error::{Result, SurfaceError};
pub use lattice::{
    adjunction_genus, adjunction_pairing, canonical_class, disjointness_obstruction,
    embedding_degree, intersect, DivisorClass, RuledSurface,
};
pub use scroll::{curve_on_scroll, scroll_curve_pairing, scroll_hyperplane, scroll_parameters};
pub use search::{
    eliminate_by_genus, genera, genus_polynomial, polynomial_roots, GenusConstraint, SearchBox,
    SideConstraint,
};
