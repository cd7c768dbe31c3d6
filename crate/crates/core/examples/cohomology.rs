//! Cohomology of the total complex: adjoint coefficients for every fixture,
//! then coefficients in the regular representation.
//!
//! cargo run --example cohomology

use copre::algebra::{fixtures, CompatibleRep};
use copre::cohomology::TotalComplex;

fn main() {
    println!("{:<12} {:>4} {:>4} {:>4}", "adjoint", "H1", "H2", "H3");
    for (name, a) in fixtures::all() {
        let c = TotalComplex::adjoint(&a);
        let dims: Vec<_> = (1..=3).map(|n| c.cohomology(n).dim_h).collect();
        println!("{name:<12} {:>4} {:>4} {:>4}", dims[0], dims[1], dims[2]);
    }

    let a = fixtures::a2_with_zero();
    let c = TotalComplex::with_coefficients(&a, &CompatibleRep::regular(&a)).unwrap();
    let h2 = c.cohomology(2);
    println!(
        "\n(a2, 0) regular: Z2 = {}, B2 = {}, H2 = {}",
        h2.dim_cocycles, h2.dim_coboundaries, h2.dim_h
    );
    for (i, rep) in h2.representatives.iter().enumerate() {
        let nonzero: Vec<_> = rep.parts().iter().map(|c| c.entries().count()).collect();
        println!("  class {i}: nonzero values per component {nonzero:?}");
    }

    // D∘D = 0 on a random-looking 1-cochain pair.
    let d1 = c.differential_matrix(1);
    let d2 = c.differential_matrix(2);
    println!("D2·D1 = 0: {}", d2.mul(&d1).is_zero());
}
