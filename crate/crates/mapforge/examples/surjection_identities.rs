//! Demonstrates the inversion identity on surjection monomials that powers
//! the symmetrization of scheme series.
//!
//! ```sh
//! cargo run --example surjection_identities
//! ```

use mapforge::series::surjection::{
    enumerate_surjections, refinement_sum, refines, reverse, verify_d_specialization,
    verify_sum_identity, x_monomial, XPoly,
};
use num::BigInt;
use num::One;

fn main() {
    // Surjections onto initial segments are counted by the Fubini numbers.
    for n in 1..=5 {
        println!("ordered set partitions of {n} elements: {}", enumerate_surjections(n).len());
    }

    // The monomial X(o) records, per pair, whether o inverts it.  The
    // identity expands the inverse monomial of p as an alternating sum over
    // the refinements of the reversed surjection.
    let p = vec![1, 2, 1];
    let all = enumerate_surjections(3);
    println!("\np = {p:?}, reverse = {:?}", reverse(&p));
    println!(
        "refinements of reverse(p): {:?}",
        all.iter().filter(|o| refines(o, &reverse(&p))).collect::<Vec<_>>()
    );
    let lhs = XPoly::monomial(x_monomial(&p).iter().map(|&e| -e).collect(), BigInt::one());
    let rhs = refinement_sum(&p, &all);
    assert_eq!(lhs, rhs);
    println!("alternating refinement sum collapses to X(p)^-1: {:?}", rhs.terms());

    // Verified symbolically for all surjections on up to 4 elements, and in
    // the D-specialization for every arc set on 3 ordered vertices.
    for n in 1..=4 {
        verify_sum_identity(n).unwrap();
    }
    verify_d_specialization(3, &[(0, 1), (1, 2)]).unwrap();
    println!("\nsymbolic identity holds for n <= 4; D-specialization holds on the 3-chain");
}
