//! Truncated formal deformations: order-by-order checks, gauge maps, and the
//! trivialization probe. Pass `--emit` to print the order-4 deformation used
//! here as JSON (the format read by `copre rigidity`).
//!
//! cargo run --example rigidity [-- --emit]

use copre::algebra::{fixtures, CompatiblePreLie, Product};
use copre::deformation::{formal_check, gauge_transform, rigidity_probe, FormalDeformation};
use copre::io::formal_to_json;
use copre::linalg::{format_rational, Matrix};

fn coboundary_deformation() -> FormalDeformation {
    let zero = FormalDeformation::zero(fixtures::a2_with_zero(), 4);
    let fd = gauge_transform(&zero, &Matrix::from_i64(&[&[1, 2], &[0, -1]]), 1).unwrap();
    gauge_transform(&fd, &Matrix::from_i64(&[&[0, 1], &[3, 0]]), 2).unwrap()
}

fn main() {
    let fd = coboundary_deformation();
    if std::env::args().any(|a| a == "--emit") {
        println!("{}", serde_json::to_string_pretty(&formal_to_json(&fd, true)).unwrap());
        return;
    }
    let formal = formal_check(&fd);
    println!("formal equations hold through order {}: {}", fd.order(), formal.passed());
    let r = rigidity_probe(&fd).unwrap();
    println!("trivialized to order {}", r.trivialized_to_order);
    for (n, phi) in &r.gauges {
        println!("  gauge at order {n}: {:?}", show(phi));
    }

    // Over the abelian plane every 2-cochain is a cocycle and none is a
    // coboundary, so any nonzero first-order term is an obstruction.
    let base = CompatiblePreLie::abelian(2);
    let fd = FormalDeformation::new(base, vec![fixtures::a2(), Product::zero(2)], vec![Product::zero(2); 2]).unwrap();
    let r = rigidity_probe(&fd).unwrap();
    let ob = r.obstruction.unwrap();
    println!("abelian base: obstruction at order {}, class {:?}", ob.order, ob.class.iter().map(ToString::to_string).collect::<Vec<_>>());
}

fn show(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}
