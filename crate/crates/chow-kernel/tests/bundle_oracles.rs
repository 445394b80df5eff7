use chow_kernel::{
    chern_from_resolution, chi_rank2, h0_line_bundle, twist_rank2, CicyContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Sections of O(t) on P^n restricted to X, counted by brute force over monomials
/// and then corrected for the ideal, for t small enough that only degree-one
/// syzygies matter.
fn monomials(n: u32, t: i64) -> i64 {
    if t < 0 {
        return 0;
    }
    fn count(vars: u32, deg: i64) -> i64 {
        if vars == 1 {
            return 1;
        }
        (0..=deg).map(|k| count(vars - 1, deg - k)).sum()
    }
    count(n + 1, t)
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn h0_small_twists_match_monomial_count() {
    for ctx in CicyContext::all_five() {
        let dmin = *ctx.multidegree().iter().min().unwrap() as i64;
        for t in 0..dmin {
            assert_eq!(h0_line_bundle(&ctx, t), monomials(ctx.ambient_dim(), t));
        }
        // degree dmin loses exactly one section per equation of that degree
        let lost = ctx.multidegree().iter().filter(|&&d| d as i64 == dmin).count() as i64;
        assert_eq!(
            h0_line_bundle(&ctx, dmin),
            monomials(ctx.ambient_dim(), dmin) - lost
        );
    }
}

#[test]
fn chi_zero_and_hyperplane() {
    for ctx in CicyContext::all_five() {
        assert_eq!(chi_rank2(&ctx, 0, 0), q(0));
        assert_eq!(chi_rank2(&ctx, 1, 0), q(ctx.ambient_dim() as i64 + 1));
        assert_eq!(h0_line_bundle(&ctx, 1), ctx.ambient_dim() as i64 + 1);
    }
}

#[test]
fn trivial_resolutions() {
    for ctx in CicyContext::all_five() {
        for r in 1..6usize {
            let b = chern_from_resolution(&[], &vec![0; r], &ctx).unwrap();
            assert_eq!((b.rank as usize, b.c1, b.c2), (r, 0, 0));
        }
    }
}

proptest! {
    // For a, b >= 1, chi(O(a)+O(b)) = h0(O(a)) + h0(O(b)) since higher cohomology vanishes.
    #[test]
    fn chi_of_split_matches_sections(idx in 0usize..5, a in 1i64..8, b in 1i64..8) {
        let ctx = &CicyContext::all_five()[idx];
        let split = chern_from_resolution(&[], &[a, b], ctx).unwrap();
        prop_assert_eq!(split.c2, a * b * ctx.u());
        let expected = h0_line_bundle(ctx, a) + h0_line_bundle(ctx, b);
        prop_assert_eq!(chi_rank2(ctx, split.c1, split.c2), q(expected));
    }

    #[test]
    fn resolution_c1_is_additive(
        idx in 0usize..5,
        sub in prop::collection::vec(-3i64..0, 0..3),
        quot in prop::collection::vec(0i64..3, 3..7),
    ) {
        let ctx = &CicyContext::all_five()[idx];
        let b = chern_from_resolution(&sub, &quot, ctx).unwrap();
        prop_assert_eq!(b.c1, quot.iter().sum::<i64>() - sub.iter().sum::<i64>());
        prop_assert_eq!(b.rank as usize, quot.len() - sub.len());
    }

    #[test]
    fn twist_round_trip(idx in 0usize..5, c1 in -4i64..5, c2 in -50i64..100, t in -6i64..7) {
        let ctx = &CicyContext::all_five()[idx];
        let (a, b) = twist_rank2(c1, c2, t, ctx);
        prop_assert_eq!(twist_rank2(a, b, -t, ctx), (c1, c2));
    }

    // Twisting a split bundle agrees with splitting the twisted summands.
    #[test]
    fn twist_matches_split(idx in 0usize..5, a in -3i64..4, b in -3i64..4, t in -3i64..4) {
        let ctx = &CicyContext::all_five()[idx];
        let (c1, c2) = (a + b, a * b * ctx.u());
        prop_assert_eq!(twist_rank2(c1, c2, t, ctx), (a + b + 2 * t, (a + t) * (b + t) * ctx.u()));
    }
}
