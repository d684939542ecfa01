//! Enumerates the complete census of rooted schemes for a given genus and
//! checks the symmetry of every scheme's generating series under D -> 1/D.
//!
//! ```sh
//! cargo run --release --example scheme_census           # genus 1
//! cargo run --release --example scheme_census -- 2      # genus 2 (slower)
//! ```

use std::collections::BTreeMap;

use mapforge::oracle::group_by_unrooted;
use mapforge::scheme::{enumerate_rooted_schemes, scheme_record};
use mapforge::series::{r_b_s, scheme_shape};

fn main() {
    let genus: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("genus must be a number"))
        .unwrap_or(1);

    let census = enumerate_rooted_schemes(genus).unwrap();
    let classes = group_by_unrooted(&census);
    println!(
        "genus {genus}: {} rooted schemes in {} unrooted classes",
        census.len(),
        classes.len()
    );

    // Tally by the degree-3 / degree-4 vertex split.
    let mut by_degrees: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for s in &census {
        let r = scheme_record(s).unwrap();
        *by_degrees.entry((r.v_s3, r.v_s4)).or_default() += 1;
    }
    for ((v3, v4), count) in &by_degrees {
        println!("  {v3} trivalent + {v4} quadrivalent vertices: {count} rooted schemes");
    }

    // Every scheme's series is a symmetric rational function of D, even
    // though the individual surjection terms are not.
    let mut shapes = BTreeMap::new();
    for s in &census {
        let shape = scheme_shape(s).unwrap();
        shapes.entry(shape).or_insert_with(|| r_b_s(s).unwrap());
    }
    println!("distinct offset shapes: {}", shapes.len());
    for (shape, series) in shapes.iter().take(3) {
        assert!(series.is_symmetric());
        println!(
            "shape with edges {:?}, arcs {:?}:\n  R = {}",
            shape.edges,
            shape.offset_arcs,
            series.display("D")
        );
    }
    assert!(shapes.values().all(|f| f.is_symmetric()));
    println!("all {} scheme series symmetric under D -> 1/D", shapes.len());
}
