//! Reading and writing the JSON formats: algebras, representations and
//! cochains, with one-based indices and rational strings.
//!
//! cargo run --example json_io

use copre::algebra::{fixtures, validate_compatible, CompatibleRep};
use copre::io::{algebra_from_json, algebra_to_json, cochain_from_json, cochain_to_json, rep_to_json, AlgebraJson, CochainJson};
use copre::cohomology::TotalComplex;

fn main() {
    let text = include_str!("data/a2_swapped_pair.json");
    let doc: AlgebraJson = serde_json::from_str(text).unwrap();
    let a = algebra_from_json(&doc).unwrap();
    println!("read dim {} pair, compatible: {}", a.dim(), validate_compatible(&a).passed());
    println!("{}", serde_json::to_string(&algebra_to_json(&a)).unwrap());

    let r = CompatibleRep::regular(&fixtures::a2_with_zero());
    println!("{}", serde_json::to_string(&rep_to_json(&r)).unwrap());

    let h2 = TotalComplex::adjoint(&fixtures::a2_with_zero()).cohomology(2);
    let first = &h2.representatives[0].parts()[0];
    let json = serde_json::to_string(&cochain_to_json(first)).unwrap();
    println!("{json}");
    let back: CochainJson = serde_json::from_str(&json).unwrap();
    println!("round trip exact: {}", &cochain_from_json(&back, 2, 2, "c").unwrap() == first);
}
