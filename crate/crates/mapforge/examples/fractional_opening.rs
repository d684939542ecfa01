//! Runs the fractional opening, which extends the opening bijection to maps
//! that are not bicolorable by biorienting some edges.
//!
//! ```sh
//! cargo run --example fractional_opening
//! ```

use mapforge::blossom::{fractional_open, open};
use mapforge::map::perm_from_cycles;
use mapforge::orient::{dual_geodesic_half_orientation, dual_geodesic_orientation};
use mapforge::RotationMap;

fn main() {
    // A planar map with an odd face: a loop with a pendant edge hanging
    // inside it.  Odd faces rule out any fully bicolorable orientation.
    let alpha = perm_from_cycles(4, &[&[1, 2], &[3, 4]]);
    let sigma = perm_from_cycles(4, &[&[1, 3, 2], &[4]]);
    let m = RotationMap::new(alpha, sigma, 0).unwrap();
    println!(
        "map: genus {}, {} vertices, {} edges, {} faces, bicolorable: {}",
        m.genus(),
        m.n_vertices(),
        m.n_edges(),
        m.n_faces(),
        m.is_bicolorable().is_some()
    );

    // The dual-geodesic half-orientation biorients the edges that sit at
    // equal distance from the root face on both sides.
    let half = dual_geodesic_half_orientation(&m);
    let bi = half.bioriented_edges();
    println!("bioriented edges: {bi:?}");

    let blossom = fractional_open(&m, &half).unwrap();
    println!(
        "opened: {} interior edges, contour {}",
        blossom.n_interior_edges(),
        blossom.contour_word().unwrap()
    );

    let (m2, h2) = blossom.close().unwrap();
    assert_eq!(m2, m);
    assert_eq!(h2, half);
    println!("round trip exact");

    // On a bicolorable map no edge is bioriented and the fractional
    // opening coincides with the plain one.
    let torus = RotationMap::new(
        perm_from_cycles(4, &[&[1, 3], &[2, 4]]),
        perm_from_cycles(4, &[&[1, 2, 3, 4]]),
        0,
    )
    .unwrap();
    let torus_radial = torus.radial();
    let h = dual_geodesic_half_orientation(&torus_radial);
    assert!(h.bioriented_edges().is_empty());
    let o = dual_geodesic_orientation(&torus_radial).unwrap();
    assert_eq!(
        fractional_open(&torus_radial, &h).unwrap(),
        open(&torus_radial, &o).unwrap()
    );
    println!("on a bicolorable map the two openings agree");
}
