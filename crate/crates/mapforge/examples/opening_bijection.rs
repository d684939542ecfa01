//! Opens a bicolorable map into a unicellular blossoming map and closes it
//! back, starting from the radial map of the square torus grid.
//!
//! ```sh
//! cargo run --example opening_bijection
//! ```

use mapforge::blossom::open;
use mapforge::map::perm_from_cycles;
use mapforge::orient::dual_geodesic_orientation;
use mapforge::RotationMap;

fn main() {
    // The one-vertex torus map: two loops crossing on the torus.  Its
    // radial map is 4-valent and bicolorable, the natural input for the
    // opening algorithm.
    let torus = RotationMap::new(
        perm_from_cycles(4, &[&[1, 3], &[2, 4]]),
        perm_from_cycles(4, &[&[1, 2, 3, 4]]),
        0,
    )
    .unwrap();
    let radial = torus.radial();
    println!(
        "radial of the torus: genus {}, {} vertices, {} edges, {} faces",
        radial.genus(),
        radial.n_vertices(),
        radial.n_edges(),
        radial.n_faces()
    );
    assert!(radial.is_bicolorable().is_some());

    // The dual-geodesic orientation is the canonical bicolorable
    // orientation with no clockwise face besides the root face.
    let orient = dual_geodesic_orientation(&radial).unwrap();
    println!("orientation heads: {:?}", orient.heads());

    // Opening cuts every edge whose tail corner is reached first along the
    // leftmost-walk tour, leaving a single face.
    let blossom = open(&radial, &orient).unwrap();
    println!(
        "opened: {} interior edges, {} buds, {} leaves, unicellular: {}",
        blossom.n_interior_edges(),
        blossom.buds().len(),
        blossom.leaves().len(),
        blossom.is_unicellular()
    );
    println!("contour word: {}", blossom.contour_word().unwrap());
    println!("well rooted: {}", blossom.is_well_rooted().unwrap());

    // Closing matches buds to leaves along the tour and recovers the map
    // and its orientation exactly.
    let (closed, half) = blossom.close().unwrap();
    assert_eq!(closed, radial);
    assert_eq!(half.to_full().unwrap(), orient);
    println!("closed back to the radial map: round trip exact");
}
