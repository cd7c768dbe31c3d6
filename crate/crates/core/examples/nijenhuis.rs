//! Nijenhuis operators, the deformed pair, and the trivial deformation they
//! generate.
//!
//! cargo run --example nijenhuis

use copre::algebra::{fixtures, validate_compatible};
use copre::deformation::{
    deformed_structure, identity_plus_tn_check, infinitesimal_check, nijenhuis_check, nijenhuis_is_homomorphism,
    trivial_from_nijenhuis,
};
use copre::linalg::Matrix;

fn main() {
    let a = fixtures::a2_with_zero();
    let candidates = [
        ("3·Id", Matrix::from_i64(&[&[3, 0], &[0, 3]])),
        ("diag(1,0)", Matrix::from_i64(&[&[1, 0], &[0, 0]])),
        ("diag(0,1)", Matrix::from_i64(&[&[0, 0], &[0, 1]])),
        ("swap", Matrix::from_i64(&[&[0, 1], &[1, 0]])),
    ];
    for (name, n) in &candidates {
        let r = nijenhuis_check(&a, n).unwrap();
        if !r.passed() {
            println!("{name:<10} not Nijenhuis, fails at {:?}", r.first.witness());
            continue;
        }
        let def = deformed_structure(&a, n).unwrap();
        let triv = trivial_from_nijenhuis(&a, n).unwrap();
        let inf = infinitesimal_check(&a, &triv.omega1, &triv.omega2).unwrap();
        println!(
            "{name:<10} Nijenhuis; deformed pair compatible {}, N homomorphism {}, trivial deformation generates {}, Id+tN {}",
            validate_compatible(&def).passed(),
            nijenhuis_is_homomorphism(&a, n).unwrap(),
            inf.generates,
            identity_plus_tn_check(&triv, n).unwrap().passed(),
        );
    }
}
