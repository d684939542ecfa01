//! Assembles the generating series of rooted genus-1 maps as an explicit
//! rational function of the tree series T, and checks its coefficients
//! against direct enumeration.
//!
//! ```sh
//! cargo run --release --example series_rationality
//! ```

use mapforge::oracle::enumerate_rooted_maps;
use mapforge::series::{assemble_mg, rational_in_z, series_b, series_d, series_t, LaurentRational, Poly};

fn main() {
    // The three base series, exact to any order.
    let order = 8;
    println!("T (rooted 3-valent trees):  {:?}", int_prefix(&series_t(order)));
    println!("D (lattice-path kernel):    {:?}", int_prefix(&series_d(order)));
    println!("B (bilateral paths):        {:?}", int_prefix(&series_b(order)));

    // A symmetric rational function of D is a rational function of
    // 1/z = 1/D + 4 + D; here for B = (1 + 4D + D^2) / (1 - D^2).
    let b = LaurentRational::new(Poly::from_ints(&[1, 4, 1]), Poly::from_ints(&[1, 0, -1]));
    assert!(b.is_antisymmetric());
    let b2 = b.mul(&b);
    assert!(b2.is_symmetric());
    let in_z = rational_in_z(&b2).unwrap();
    println!("B^2 as a function of z: {}", in_z.display("z"));

    // The full pipeline: scheme census -> symmetric scheme series ->
    // substitution D -> D(z) -> rational function of T.
    let report = assemble_mg(1, 6).unwrap();
    println!(
        "genus 1: {} rooted schemes, {} unrooted classes",
        report.rooted_schemes, report.unrooted_classes
    );
    println!("M_1 = {}", report.expression);
    println!("coefficients by edges: {:?}", report.coefficients);

    // Cross-check against brute force.
    for n in 1..=4usize {
        let direct = enumerate_rooted_maps(n, Some(1)).unwrap().len();
        assert_eq!(report.coefficients[n], direct.into());
        println!("  {n} edges: {direct} rooted genus-1 maps (matches)");
    }
}

fn int_prefix(s: &mapforge::series::TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().take(6).map(|c| c.to_string()).collect()
}
