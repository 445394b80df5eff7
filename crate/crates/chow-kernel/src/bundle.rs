use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::context::CicyContext;
use crate::error::{ChowError, Result};
use crate::ring::{product_of_lines, ring_invert, ring_mul, TruncatedClass};

/// Numerical invariants of a bundle on X.
///
/// `c2` and `c3` are degrees: the H^2 (resp. H^3) coefficient times `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleInvariants {
    pub rank: u32,
    pub c1: i64,
    pub c2: i64,
    pub c3: Option<i64>,
}

impl BundleInvariants {
    pub fn pair(&self) -> (i64, i64) {
        (self.c1, self.c2)
    }

    /// Whether `c2` respects the cap `c2 <= c1^2 u`.
    pub fn within_cap(&self, ctx: &CicyContext) -> bool {
        self.c2 <= self.c1 * self.c1 * ctx.u()
    }
}

/// Reads rank, c1 and the degree-normalised c2, c3 off a total Chern class.
pub fn invariants_from_class(
    rank: i64,
    c: &TruncatedClass,
    ctx: &CicyContext,
) -> Result<BundleInvariants> {
    if rank <= 0 {
        return Err(ChowError::NonPositiveRank(rank));
    }
    let to_i64 = |b: BigInt| {
        b.to_i64()
            .ok_or_else(|| ChowError::Precondition("Chern class out of range".into()))
    };
    let u = BigInt::from(ctx.u());
    Ok(BundleInvariants {
        rank: rank as u32,
        c1: to_i64(c.integer_coeff(1)?)?,
        c2: to_i64(c.integer_coeff(2)? * &u)?,
        c3: Some(to_i64(c.integer_coeff(3)? * &u)?),
    })
}

/// Chern classes of `E` in `0 -> (+) O(s_i) -> (+) O(q_j) -> E -> 0`.
pub fn chern_from_resolution(
    sub_twists: &[i64],
    quot_twists: &[i64],
    ctx: &CicyContext,
) -> Result<BundleInvariants> {
    let rank = quot_twists.len() as i64 - sub_twists.len() as i64;
    if rank <= 0 {
        return Err(ChowError::NonPositiveRank(rank));
    }
    let top = product_of_lines(quot_twists);
    let bottom = ring_invert(&product_of_lines(sub_twists))?;
    invariants_from_class(rank, &ring_mul(&top, &bottom), ctx)
}

/// Rank-2 bundle in `0 -> O(a) -> E -> I_Z(b) -> 0` with `deg Z = z_degree`.
pub fn chern_of_extension(a: i64, b: i64, z_degree: u64, ctx: &CicyContext) -> BundleInvariants {
    BundleInvariants {
        rank: 2,
        c1: a + b,
        c2: a * b * ctx.u() + z_degree as i64,
        c3: None,
    }
}

/// Euler characteristic of a rank-2 bundle with the given c1 and c2 (c2 as a degree).
pub fn chi_rank2(ctx: &CicyContext, c1: i64, c2: i64) -> BigRational {
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let u = q(ctx.u());
    let c1q = q(c1);
    let c2q = q(c2);
    let first = &u / q(6) * &c1q * &c1q * &c1q;
    let second = &c1q * &c2q / q(2);
    let third = &c1q / q(12) * (q(12) * q(ctx.v() + 4) - q(2) * &u);
    first - second + third
}

/// Chern classes of `E(t)` for a rank-2 bundle `E`.
pub fn twist_rank2(c1: i64, c2: i64, t: i64, ctx: &CicyContext) -> (i64, i64) {
    let u = ctx.u();
    (c1 + 2 * t, c2 + u * t * c1 + u * t * t)
}

/// `C(m, k)` with the convention that a negative top argument gives 0.
pub fn binomial(m: i64, k: u32) -> i64 {
    if m < 0 || (k as i64) > m {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 1..=k as i128 {
        acc = acc * (m as i128 - k as i128 + i) / i;
    }
    i64::try_from(acc).expect("binomial coefficient exceeds i64")
}

/// `h^0(O_X(t))` by Koszul inclusion-exclusion over the defining equations.
///
/// Panics if the count exceeds `i64`.
pub fn h0_line_bundle(ctx: &CicyContext, t: i64) -> i64 {
    if t < 0 {
        return 0;
    }
    let n = ctx.ambient_dim();
    let degs = ctx.multidegree();
    let k = degs.len();
    let mut total = 0i64;
    for mask in 0u32..(1u32 << k) {
        let shift: i64 = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| degs[i] as i64)
            .sum();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * binomial(n as i64 + t - shift, n);
    }
    total
}

/// Largest rank of a globally generated quotient without trivial factors in
/// `0 -> (+) O(s_i) -> O^m -> E -> 0`, i.e. `sum h0(O(-s_i)) - #sub`.
pub fn max_rank_no_trivial(sub_twists: &[i64], ctx: &CicyContext) -> Result<i64> {
    if let Some(s) = sub_twists.iter().find(|&&s| s >= 0) {
        return Err(ChowError::Precondition(format!(
            "sub twists must be negative, got {s}"
        )));
    }
    Ok(sub_twists.iter().map(|&s| h0_line_bundle(ctx, -s)).sum::<i64>() - sub_twists.len() as i64)
}

/// Maximal rank for `0 -> (+) O(s_i) -> O^m (+) (+) O(q_j) -> E -> 0` with every `q_j > 0`.
///
/// The trivial part contributes `max_rank_no_trivial(sub)`, each positive
/// summand one more.
pub fn max_rank_for_shape(sub_twists: &[i64], positive_quot: &[i64], ctx: &CicyContext) -> Result<i64> {
    if let Some(q) = positive_quot.iter().find(|&&q| q <= 0) {
        return Err(ChowError::Precondition(format!(
            "extra quotient twists must be positive, got {q}"
        )));
    }
    Ok(max_rank_no_trivial(sub_twists, ctx)? + positive_quot.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn resolution_examples() {
        let x5 = CicyContext::quintic();
        let r = chern_from_resolution(&[-2], &[0, 0, 0, 0], &x5).unwrap();
        assert_eq!((r.rank, r.c1, r.c2), (3, 2, 20));
        let r = chern_from_resolution(&[-1], &[0; 5], &x5).unwrap();
        assert_eq!((r.rank, r.c1, r.c2), (4, 1, 5));
        let r = chern_from_resolution(&[], &[0, 0], &CicyContext::x33()).unwrap();
        assert_eq!((r.rank, r.c1, r.c2), (2, 0, 0));
        let r = chern_from_resolution(&[-1], &[0, 0, 0, 1], &x5).unwrap();
        assert_eq!((r.rank, r.c1, r.c2), (3, 2, 10));
        let r = chern_from_resolution(&[-1, -1], &[0; 5], &x5).unwrap();
        assert_eq!((r.rank, r.c1, r.c2), (3, 2, 15));
    }

    #[test]
    fn resolution_rank_error() {
        let x5 = CicyContext::quintic();
        assert!(matches!(
            chern_from_resolution(&[-1, -1], &[0, 0], &x5),
            Err(ChowError::NonPositiveRank(0))
        ));
    }

    #[test]
    fn extension_examples() {
        assert_eq!(chern_of_extension(1, 1, 3, &CicyContext::x24()).pair(), (2, 11));
        assert_eq!(chern_of_extension(0, 2, 16, &CicyContext::x33()).pair(), (2, 16));
        assert_eq!(chern_of_extension(1, 1, 0, &CicyContext::quintic()).pair(), (2, 5));
    }

    #[test]
    fn chi_examples() {
        let x5 = CicyContext::quintic();
        assert_eq!(chi_rank2(&x5, 0, 0), q(0));
        assert_eq!(chi_rank2(&x5, 1, 0), q(5));
        assert_eq!(chi_rank2(&x5, 2, 5), q(10));
        let expected = [5, 6, 6, 7, 8];
        for (ctx, e) in CicyContext::all_five().iter().zip(expected) {
            assert_eq!(chi_rank2(ctx, 1, 0), q(e));
        }
    }

    #[test]
    fn chi_can_be_fractional() {
        // arbitrary (c1, c2) need not give an integer
        let x5 = CicyContext::quintic();
        let chi = chi_rank2(&x5, 1, 1);
        assert_eq!(chi, BigRational::new(BigInt::from(9), BigInt::from(2)));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist_rank2(2, 10, -1, &CicyContext::quintic()), (0, 5));
        assert_eq!(twist_rank2(0, 0, 1, &CicyContext::x24()), (2, 8));
        assert_eq!(twist_rank2(2, 10, 0, &CicyContext::x24()), (2, 10));
    }

    #[test]
    fn h0_examples() {
        let x5 = CicyContext::quintic();
        assert_eq!(h0_line_bundle(&x5, 2), 15);
        assert_eq!(h0_line_bundle(&CicyContext::x24(), 1), 6);
        assert_eq!(h0_line_bundle(&x5, -3), 0);
        for ctx in CicyContext::all_five() {
            assert_eq!(h0_line_bundle(&ctx, 0), 1);
            assert_eq!(h0_line_bundle(&ctx, 1), ctx.ambient_dim() as i64 + 1);
        }
        // quintics in P^4 minus the quintic itself
        assert_eq!(h0_line_bundle(&x5, 5), 126 - 1);
    }

    #[test]
    fn max_rank_examples() {
        let x5 = CicyContext::quintic();
        assert_eq!(max_rank_no_trivial(&[-2], &x5).unwrap(), 14);
        assert_eq!(max_rank_no_trivial(&[-1, -1], &x5).unwrap(), 8);
        assert_eq!(max_rank_no_trivial(&[-1], &x5).unwrap(), 4);
        assert_eq!(max_rank_for_shape(&[-1], &[1], &x5).unwrap(), 5);
        assert!(max_rank_no_trivial(&[0], &x5).is_err());
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(-1, 4), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(4, 0), 1);
    }
}
