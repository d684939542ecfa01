//! Randomized structural properties of rotation maps: involutive
//! constructions and JSON round trips.

use mapforge::RotationMap;
use proptest::prelude::*;

/// Random connected map on `n` edges: alpha is the fixed pairing
/// (0 1)(2 3)..., sigma a random permutation of the darts.
fn arb_map(max_edges: usize) -> impl Strategy<Value = RotationMap> {
    (1..=max_edges)
        .prop_flat_map(|n| Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_filter_map("disconnected", |sigma| {
            let n = sigma.len();
            let alpha: Vec<usize> = (0..n).map(|d| d ^ 1).collect();
            RotationMap::new(alpha, sigma, 0).ok()
        })
}

proptest! {
    #[test]
    fn json_round_trip(m in arb_map(5)) {
        let j = m.to_json_value();
        let back = RotationMap::from_json_value(&j).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn dual_is_involutive(m in arb_map(5)) {
        let d = m.dual();
        prop_assert_eq!(d.genus(), m.genus());
        prop_assert_eq!(d.n_vertices(), m.n_faces());
        prop_assert_eq!(d.dual(), m.clone());
    }

    #[test]
    fn reflect_is_involutive(m in arb_map(5)) {
        let r = m.reflect();
        prop_assert_eq!(r.genus(), m.genus());
        prop_assert_eq!(r.reflect(), m.clone());
    }

    #[test]
    fn radial_is_bicolorable_and_quadrangulates(m in arb_map(4)) {
        let r = m.radial();
        prop_assert_eq!(r.genus(), m.genus());
        prop_assert_eq!(r.n_vertices(), m.n_edges());
        prop_assert!(r.vertex_degrees().iter().all(|&d| d == 4));
        prop_assert!(r.is_bicolorable().is_some());
    }
}
