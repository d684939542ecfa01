//! Explores the lattice of bicolorable orientations of a map: face flips,
//! the unique counterclockwise minimum, and its dual-geodesic description.
//!
//! ```sh
//! cargo run --example orientation_lattice
//! ```

use mapforge::map::perm_from_cycles;
use mapforge::orient::{
    clockwise_faces, dual_geodesic_orientation, is_bicolorable_orientation, minimize_by_flips,
    Orientation,
};
use mapforge::RotationMap;

fn main() {
    let torus = RotationMap::new(
        perm_from_cycles(4, &[&[1, 3], &[2, 4]]),
        perm_from_cycles(4, &[&[1, 2, 3, 4]]),
        0,
    )
    .unwrap();
    let m = torus.radial();
    let root_face = m.root_face();
    println!(
        "radial torus map: {} edges, {} faces, root face {}",
        m.n_edges(),
        m.n_faces(),
        root_face
    );

    // Enumerate all 2^edges orientations and keep the bicolorable ones
    // (every vertex balanced: in-degree equals out-degree).
    let mut bicolorable = Vec::new();
    for mask in 0u32..(1 << m.n_edges()) {
        let heads = (0..m.n_edges())
            .map(|e| {
                let (d, a) = m.edge_darts(e);
                if mask >> e & 1 == 1 {
                    a
                } else {
                    d
                }
            })
            .collect();
        let o = Orientation::new(&m, heads);
        if is_bicolorable_orientation(&m, &o) {
            bicolorable.push(o);
        }
    }
    println!("bicolorable orientations: {}", bicolorable.len());

    // The lattice minimum is the unique one whose only clockwise face (if
    // any) is the root face; flipping clockwise faces counterclockwise
    // reaches it from anywhere.
    let dual_geo = dual_geodesic_orientation(&m).unwrap();
    for o in &bicolorable {
        let cw = clockwise_faces(&m, o);
        let minimal = cw.iter().all(|&f| f == root_face);
        if minimal {
            assert_eq!(o, &dual_geo);
        }
        let reached = minimize_by_flips(&m, o).unwrap();
        assert_eq!(reached, dual_geo);
        println!(
            "heads {:?}  clockwise faces {:?}  minimal: {}",
            o.heads(),
            cw,
            minimal
        );
    }
    println!("every orientation flips down to the dual-geodesic minimum");
}
