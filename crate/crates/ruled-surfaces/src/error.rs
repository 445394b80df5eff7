use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("invalid ruled surface (e={e}, q={q}): {reason}")]
    InvalidSurface { e: i64, q: i64, reason: String },
    #[error("lattice violation: C.(C+K) = {0} is odd")]
    OddPairing(i64),
    #[error("search not finite: {0}")]
    SearchNotFinite(String),
    #[error("excluded: parity (e = {0} must be even)")]
    Parity(i64),
}

pub type Result<T> = std::result::Result<T, SurfaceError>;
