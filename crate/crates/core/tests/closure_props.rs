//! Property tests for the bounded midpoint-closure engine.

use std::collections::BTreeSet;

use dytri_core::{closure, AffineMap2, Dyadic, Vec2};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_dyadic() -> impl Strategy<Value = Dyadic> {
    (-64i64..=64, -3i64..=3).prop_map(|(n, e)| Dyadic::new(BigInt::from(n), e))
}

fn arb_vec2() -> impl Strategy<Value = Vec2> {
    (arb_dyadic(), arb_dyadic()).prop_map(|(x, y)| Vec2::new(x, y))
}

fn arb_elementary() -> impl Strategy<Value = AffineMap2> {
    prop_oneof![
        (arb_dyadic(), arb_dyadic()).prop_map(|(x, y)| AffineMap2::translation(Vec2::new(x, y))),
        (-2i64..=2, -2i64..=2).prop_map(|(k, l)| AffineMap2::scale_pow2(k, l)),
        arb_dyadic().prop_map(AffineMap2::shear),
        Just(AffineMap2::reflect_x_axis()),
        Just(AffineMap2::reflect_diagonal()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_grows_monotonically(
        gens in proptest::collection::vec(arb_dyadic(), 1..4), steps in 0u32..5
    ) {
        let small = closure(&gens, steps);
        let large = closure(&gens, steps + 1);
        prop_assert!(small.points.is_subset(&large.points));
    }

    #[test]
    fn saturation_flag_is_correct(
        gens in proptest::collection::vec(arb_dyadic(), 1..3), steps in 1u32..5
    ) {
        let result = closure(&gens, steps);
        if result.saturated {
            let rerun = closure(&gens, result.steps_used + 1);
            prop_assert_eq!(&rerun.points, &result.points);
        }
    }

    #[test]
    fn closure_is_equivariant(
        gens in proptest::collection::vec(arb_vec2(), 1..4),
        f in proptest::collection::vec(arb_elementary(), 1..4),
        steps in 0u32..4,
    ) {
        let f = f.iter().fold(AffineMap2::identity(), |acc, m| acc.compose(m));
        let mapped_gens: Vec<Vec2> = gens.iter().map(|p| f.apply(p)).collect();
        let lhs = closure(&mapped_gens, steps).points;
        let rhs: BTreeSet<Vec2> = closure(&gens, steps)
            .points
            .iter()
            .map(|p| f.apply(p))
            .collect();
        prop_assert_eq!(lhs, rhs);
    }
}

/// The closure of `{0, 1}` after `s` steps is exactly the grid `{k/2^s}`.
#[test]
fn unit_interval_closure_is_the_grid() {
    let gens = [Dyadic::from(0), Dyadic::from(1)];
    for s in 0..=8 {
        let result = closure(&gens, s);
        let grid: BTreeSet<Dyadic> = (0..=(1u64 << s))
            .map(|k| Dyadic::new(BigInt::from(k), -(s as i64)))
            .collect();
        assert_eq!(result.points, grid, "step bound {s}");
    }
}

/// `[0, k]` for odd `k` generates `k` times the unit pattern, so its
/// shape never depends on `k`; in particular `1` is never reached from
/// `{0, 3}`.
#[test]
fn scaled_interval_closures_match() {
    let unit_gens = [Dyadic::from(0), Dyadic::from(1)];
    for k in [1i64, 3, 5] {
        let gens = [Dyadic::from(0), Dyadic::from(k)];
        for s in 0..=6 {
            let scaled: BTreeSet<Dyadic> = closure(&unit_gens, s)
                .points
                .iter()
                .map(|p| p * &Dyadic::from(k))
                .collect();
            assert_eq!(closure(&gens, s).points, scaled, "k={k} s={s}");
        }
    }
    let ten = closure(&[Dyadic::from(0), Dyadic::from(3)], 10);
    assert!(!ten.points.contains(&Dyadic::one()));
}
