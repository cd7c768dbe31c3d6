//! Checks the pre-Lie and compatibility identities on the built-in fixtures,
//! then shows a failing table with its witness.
//!
//! cargo run --example validate

use copre::algebra::{fixtures, pencil, validate_compatible, validate_pre_lie, CompatiblePreLie, Product};
use copre::linalg::rat;

fn main() {
    for (name, a) in fixtures::all() {
        let r = validate_compatible(&a);
        println!("{name:<12} dim {}  {}", a.dim(), if r.passed() { "compatible" } else { "not compatible" });
    }

    let bad = fixtures::non_pre_lie();
    let r = validate_pre_lie(&bad);
    // witness indices are zero-based here; the CLI reports them one-based
    println!("\nnon-pre-Lie table: {} failing triples, first {:?}", r.failures.len(), r.witness().unwrap());

    // Two pre-Lie products that are not compatible with each other.
    let p = fixtures::a2();
    let q = Product::zero(2).with(0, 1, 0, rat(1)).with(1, 1, 1, rat(1));
    let pair = CompatiblePreLie::candidate(p, q).unwrap();
    let r = validate_compatible(&pair);
    println!("a2 with e2*e1 = e1, e2*e2 = e2: {}", r.summary());

    // Every pencil of a compatible pair is pre-Lie.
    let a = fixtures::a2_with_swapped();
    for (k1, k2) in [(1, 0), (0, 1), (1, 1), (2, 3), (-1, 5)] {
        let ok = validate_pre_lie(&pencil(&a, &rat(k1), &rat(k2))).passed();
        println!("  {k1:>2}·(a2) + {k2}·(a2 swapped) pre-Lie: {ok}");
    }
}
