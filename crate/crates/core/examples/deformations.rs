//! Infinitesimal deformations and the equivalence equations of `Id + tN`.
//!
//! cargo run --example deformations

use copre::algebra::{fixtures, Product};
use copre::deformation::{equivalence_check, generates_at_probe_values, infinitesimal_check, trivial_from_nijenhuis};
use copre::linalg::{rat, Matrix};

fn main() {
    let a = fixtures::a2_with_zero();

    // Scaling the first product is always an infinitesimal deformation.
    let (w1, w2) = (a.p1.clone(), Product::zero(2));
    let r = infinitesimal_check(&a, &w1, &w2).unwrap();
    println!("ω = (π₁, 0): cocycle {}, self-compatible {}, generates {}", r.is_cocycle, r.is_self_compatible, r.generates);
    println!("  compatible at t = 1, 2, -1: {}", generates_at_probe_values(&a, &w1, &w2));

    let junk = Product::zero(2).with(0, 0, 1, rat(1));
    let r = infinitesimal_check(&a, &junk, &Product::zero(2)).unwrap();
    println!("ω = (e1·e1 = e2, 0): cocycle {}", r.is_cocycle);

    // The zero deformation and the trivial one from N = diag(1,0) are equivalent via Id + tN.
    let n = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
    let triv = trivial_from_nijenhuis(&a, &n).unwrap();
    let zero = Product::zero(2);
    let eq = equivalence_check(&a, (&zero, &zero), (&triv.omega1, &triv.omega2), &n).unwrap();
    for e in &eq.equations {
        println!("  {}: {}", e.identity, e.passed());
    }
}
