mod common;

use convex_dispersion::oracle::diameter_scan;
use convex_dispersion::{diameter, orientation, validate_convex, DistanceLadder, Orientation, Point};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![-1e6..1e6f64, (-20i32..20).prop_map(f64::from)]
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn orientation_flips_under_swap(a in point(), b in point(), c in point()) {
        let o = orientation(a, b, c);
        prop_assert_eq!(orientation(b, a, c), o.reversed());
        prop_assert_eq!(orientation(b, c, a), o);
        prop_assert_eq!(orientation(a, c, b), o.reversed());
        if a == b {
            prop_assert_eq!(o, Orientation::Collinear);
        }
    }

    #[test]
    fn validation_is_idempotent(seed in any::<u64>(), n in 3usize..80) {
        let poly = common::valtr(n, &mut common::rng(seed));
        let again = validate_convex(poly.vertices().to_vec()).unwrap();
        prop_assert_eq!(again.vertices(), poly.vertices());
    }

    #[test]
    fn reversed_input_gives_the_same_cycle(seed in any::<u64>(), n in 3usize..80) {
        let poly = common::valtr(n, &mut common::rng(seed));
        let mut ccw = poly.vertices().to_vec();
        ccw[1..].reverse();
        let back = validate_convex(ccw).unwrap();
        prop_assert_eq!(back.vertices(), poly.vertices());
    }

    #[test]
    fn calipers_match_pair_scan(seed in any::<u64>(), n in 3usize..=500) {
        let poly = common::valtr(n, &mut common::rng(seed));
        prop_assert_eq!(diameter(&poly), diameter_scan(&poly));
    }

    #[test]
    fn ladder_holds_exactly_the_pairwise_distances(seed in any::<u64>(), n in 3usize..40) {
        let poly = common::valtr(n, &mut common::rng(seed));
        let ladder = DistanceLadder::build(&poly);
        let values: Vec<f64> = ladder.values().collect();
        prop_assert!(values.windows(2).all(|w| w[0] < w[1]));
        for i in 0..n {
            for j in i + 1..n {
                prop_assert!(ladder.position(poly.dist_sq(i, j)).is_some());
            }
        }
        for idx in 0..ladder.len() {
            let (i, j) = ladder.witness(idx);
            prop_assert_eq!(poly.dist_sq(i, j), ladder.value(idx));
        }
    }
}

#[test]
fn circle_instances_validate_at_scale() {
    let poly = common::circle(1 << 16, &mut common::rng(1));
    assert_eq!(poly.len(), 1 << 16);
}
