//! Exact Chern-class arithmetic on complete-intersection Calabi-Yau threefolds.
//!
//! Classes live in `Q[H]/(H^4)`; degrees are obtained by multiplying by `u = H^3`.

pub mod bundle;
pub mod context;
pub mod error;
pub mod ring;

pub use bundle::{
    binomial, chern_from_resolution, chern_of_extension, chi_rank2, h0_line_bundle,
    invariants_from_class, max_rank_for_shape, max_rank_no_trivial, twist_rank2,
    BundleInvariants,
};
pub use context::{CicyContext, Mode, FIVE_CICYS};
pub use error::{ChowError, Result};
pub use ring::{format_rational, product_of_lines, ring_invert, ring_mul, TruncatedClass};
