//! Tabulates the brute-force enumerations and exhibits the cardinality
//! chain |maps| = |bicolorable 4-valent| = |well-rooted blossoming|.
//!
//! ```sh
//! cargo run --release --example enumeration_oracles
//! ```

use mapforge::oracle::{
    enumerate_bc4valent, enumerate_o4, enumerate_rooted_maps, enumerate_u4, leaves_for_vertices,
};

fn main() {
    println!("rooted maps by edges and genus:");
    println!("{:>6} {:>8} {:>8} {:>8}", "edges", "g=0", "g=1", "g=2");
    for n in 1..=4usize {
        let by_genus: Vec<usize> = (0..=2)
            .map(|g| enumerate_rooted_maps(n, Some(g)).unwrap().len())
            .collect();
        println!(
            "{:>6} {:>8} {:>8} {:>8}",
            n, by_genus[0], by_genus[1], by_genus[2]
        );
    }

    // The radial construction sends rooted maps with n edges to bicolorable
    // 4-valent maps with n vertices; the opening sends those to well-rooted
    // unicellular blossoming maps.  All three counts agree.
    println!("\ncardinality chain (genus 1):");
    println!("{:>9} {:>7} {:>7} {:>7}", "vertices", "maps", "bc4v", "O");
    for n in 2..=4usize {
        let maps = enumerate_rooted_maps(n, Some(1)).unwrap().len();
        let bc = enumerate_bc4valent(n, Some(1)).unwrap().len();
        let leaves = leaves_for_vertices(1, n).unwrap();
        let o = enumerate_o4(1, leaves).unwrap().len();
        assert_eq!(maps, bc);
        assert_eq!(maps, o);
        println!("{n:>9} {maps:>7} {bc:>7} {o:>7}");
    }

    // Dropping well-rootedness gives the larger family U, tied to O by the
    // rerooting relation 2|U| = (#rootable stems) |O| within each unrooted
    // class.
    println!("\ngenus-1 blossoming maps by leaves:");
    println!("{:>7} {:>7} {:>7}", "leaves", "O", "U");
    for leaves in 1..=3usize {
        let o = enumerate_o4(1, leaves).unwrap().len();
        let u = enumerate_u4(1, leaves).unwrap().len();
        println!("{leaves:>7} {o:>7} {u:>7}");
    }
}
