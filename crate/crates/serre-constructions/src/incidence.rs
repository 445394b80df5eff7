use chow_kernel::binomial;
use serde::{Deserialize, Serialize};

/// Dimension count for complete intersections of four quadrics lying on a cubic of `P^5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceReport {
    pub quadrics_h0: i64,
    pub family_dim: i64,
    pub ideal_cubics_h0: i64,
    pub fiber_dim: i64,
    pub total_dim: i64,
    pub cubics_h0: i64,
    pub cubics_dim: i64,
    pub curves_on_cubic_dim: i64,
}

fn h0_p5(t: i64) -> i64 {
    binomial(5 + t, 5)
}

pub fn incidence_dimension_check() -> IncidenceReport {
    let quadrics_h0 = h0_p5(2);
    // Grassmannian of 4-dimensional subspaces of quadrics
    let family_dim = 4 * (quadrics_h0 - 4);
    // Koszul: 4 O(-2) <- 6 O(-4) <- ... twisted by 3
    let ideal_cubics_h0 = 4 * h0_p5(1) - 6 * h0_p5(-1) + 4 * h0_p5(-3) - h0_p5(-5);
    let fiber_dim = ideal_cubics_h0 - 1;
    let total_dim = family_dim + fiber_dim;
    let cubics_h0 = h0_p5(3);
    let cubics_dim = cubics_h0 - 1;
    IncidenceReport {
        quadrics_h0,
        family_dim,
        ideal_cubics_h0,
        fiber_dim,
        total_dim,
        cubics_h0,
        cubics_dim,
        curves_on_cubic_dim: total_dim - cubics_dim,
    }
}
