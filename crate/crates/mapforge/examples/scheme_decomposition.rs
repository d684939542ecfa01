//! Decomposes a genus-1 unicellular blossoming map into its scheme: prune
//! the branches, merge them into weighted Motzkin paths, and read off the
//! offset graph.
//!
//! ```sh
//! cargo run --example scheme_decomposition
//! ```

use mapforge::oracle::enumerate_u4;
use mapforge::scheme::{merge_branches, prune, reroot_on_scheme};

fn main() {
    // A genus-1 unicellular 4-valent blossoming map with 3 leaves
    // (4 vertices), large enough to have real branches to prune.
    let u = enumerate_u4(1, 3).unwrap();
    println!("genus-1 U maps with 3 leaves: {}", u.len());
    // Pick one whose pruning keeps a degree-2 chain, so the merge has a
    // genuine Motzkin path to record.
    let b = u
        .iter()
        .find(|b| prune(b).is_ok_and(|p| p.v_s2 > 0))
        .expect("some map keeps a branch vertex after pruning");
    println!(
        "picked one: {} vertices, {} interior edges, contour {}",
        b.n_vertices(),
        b.n_interior_edges(),
        b.contour_word().unwrap()
    );

    // Pruning strips planar branches until every interior degree is 2..=4,
    // then reroots on the scheme.
    let mut pruned = prune(b).unwrap();
    println!(
        "pruned: {} vertices, scheme-rooted: {}",
        pruned.map().n_vertices(),
        pruned.is_scheme_rooted()
    );

    // The root may sit on a stem left by a removed branch; move it onto a
    // scheme vertex before merging.
    if !pruned.is_scheme_rooted() {
        let mark = pruned.rootable_scheme_stems()[0];
        let (rerooted, _) = reroot_on_scheme(&pruned, mark).unwrap();
        pruned = rerooted;
        println!("rerooted onto scheme stem {mark}");
    }

    // Merging contracts each chain of degree-2 vertices into a single
    // scheme edge, recording the chain as a weighted Motzkin path.
    let (scheme, paths) = merge_branches(&pruned).unwrap();
    let s = scheme.map();
    println!(
        "scheme: {} vertices of interior degrees {:?}, {} edges",
        s.n_vertices(),
        s.interior_degrees(),
        s.n_interior_edges()
    );
    for (edge, path) in &paths {
        println!(
            "edge {edge}: Motzkin path {:?} from height {} to {}",
            path.steps, path.start, path.end
        );
        assert!(path.is_consistent());
    }

    // Offsets around each scheme vertex follow the 0101 / 0121 pattern, and
    // orienting each edge toward its 12 side gives an acyclic graph.
    println!("dart offsets: {:?}", scheme.offsets());
    let g = scheme.offset_graph().unwrap();
    println!(
        "offset graph: {} vertices, arcs {:?}, topological order {:?}",
        g.n_vertices, g.arcs, g.topo_order
    );
}
