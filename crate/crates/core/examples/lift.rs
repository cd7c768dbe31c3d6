//! Lifting module data to cochains on g ⊕ V and reading off bidegrees.
//!
//! cargo run --example lift

use copre::algebra::{fixtures, CompatibleRep};
use copre::cochain::mn_bracket;
use copre::lift::{bidegree, lift_cochain, lift_structure, restrict_to_base};

fn main() {
    let a = fixtures::a2_with_zero();
    let r = CompatibleRep::regular(&a);
    let (d, m) = (a.dim(), r.rep_dim());

    let hat = lift_structure(&a.p1, &r.rho, &r.mu);
    println!("lift of (·, ρ, μ) lives on dim {} with bidegree {:?}", d + m, bidegree(&hat, d));
    // g-arguments of the lifted structure never land in V.
    println!("V-part on g-arguments is zero: {}", restrict_to_base(&hat, d).is_zero());
    // A cochain g ⊗ g → V (here the product read with V = g) lifts to bidegree 2|-1.
    println!("lift of a V-valued 2-cochain has bidegree {:?}", bidegree(&lift_cochain(&a.p1.to_cochain()), d));

    // The lifted structure squares to zero exactly when ρ, μ form a representation.
    let sq = mn_bracket(&hat, &hat).unwrap();
    println!("[lift, lift] = 0: {}", sq.is_zero());

    let broken = CompatibleRep::new(r.mu.clone(), r.rho.clone(), r.rho_t.clone(), r.mu_t.clone()).unwrap();
    let hat = lift_structure(&a.p1, &broken.rho, &broken.mu);
    println!("with ρ and μ exchanged: [lift, lift] = 0: {}", mn_bracket(&hat, &hat).unwrap().is_zero());
}
