//! Property-based invariants.

mod common;

use proptest::prelude::*;
use qnchroma::{
    min_geodesic_cc, min_path_cc, s_value, Colouring, CubeDim, FcTable, Scope, BLUE, RED,
};

fn arb_colouring() -> impl Strategy<Value = Colouring> {
    (1u32..=6, 2u8..=16, any::<u64>()).prop_map(|(n, r, seed)| {
        Colouring::random(CubeDim::new(n).unwrap(), r, seed).unwrap()
    })
}

proptest! {
    #[test]
    fn file_round_trip(c in arb_colouring()) {
        let text = c.to_file_string();
        let back = Colouring::from_file_str(&text).unwrap();
        prop_assert_eq!(&back, &c);
        // serialise . parse is the identity on serialised output too.
        prop_assert_eq!(back.to_file_string(), text);
    }

    #[test]
    fn fc_values_within_one(n in 2u32..=6, seed in any::<u64>(), x in 0u32..64) {
        let q = CubeDim::new(n).unwrap();
        let c = Colouring::random(q, 2, seed).unwrap();
        let x = x & q.full_mask();
        let table = FcTable::build(&c, x, Scope::WholeCube);
        for y in q.vertices() {
            let fr = i32::from(table.value(y, RED));
            let fb = i32::from(table.value(y, BLUE));
            prop_assert!((fr - fb).abs() <= 1);
        }
    }

    #[test]
    fn paths_never_beat_geodesics(n in 2u32..=5, seed in any::<u64>(), x in 0u32..32, y in 0u32..32) {
        let q = CubeDim::new(n).unwrap();
        let c = Colouring::random(q, 2, seed).unwrap();
        let (x, y) = (x & q.full_mask(), y & q.full_mask());
        prop_assert!(min_path_cc(&c, x, y).cost <= min_geodesic_cc(&c, x, y).cost);
    }

    #[test]
    fn deviation_statistic_is_colour_symmetric(n in 2u32..=7, seed in any::<u64>(), x in 0u32..128, y in 0u32..128) {
        let q = CubeDim::new(n).unwrap();
        let (x, y) = (x & q.full_mask(), y & q.full_mask());
        let d = q.distance(x, y);
        prop_assume!(d >= 1 && d < n);
        let c = Colouring::random(q, 2, seed).unwrap();
        // Swapping the two colours leaves S unchanged.
        let swapped = Colouring::from_edge_fn(q, 2, |e| 1 - c.colour_of(e).unwrap()).unwrap();
        prop_assert_eq!(s_value(&c, x, y).unwrap(), s_value(&swapped, x, y).unwrap());
    }

    #[test]
    fn neighbourhood_and_interval_counts(n in 1u32..=7, x in 0u32..128, y in 0u32..128) {
        let q = CubeDim::new(n).unwrap();
        let (x, y) = (x & q.full_mask(), y & q.full_mask());
        let total: usize = (0..=n).map(|k| q.neighbourhood(x, k).unwrap().count()).sum();
        prop_assert_eq!(total as u64, q.vertex_count());
        let d = q.distance(x, y);
        prop_assert_eq!(q.interval(x, y).count() as u64, 1u64 << d);
    }
}
