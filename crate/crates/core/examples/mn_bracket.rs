//! Cochains, the circle product and the graded bracket, and the
//! Maurer–Cartan reading of a compatible pair.
//!
//! cargo run --example mn_bracket

use copre::algebra::{fixtures, mc_equations};
use copre::cochain::{mn_bracket, mn_compose, space_dim, unshuffles, Cochain};
use copre::linalg::rat;

fn main() {
    println!("dim C^n(g;g) for d = 2: {:?}", (1..=4).map(|n| space_dim(n, 2, 2)).collect::<Vec<_>>());
    for u in unshuffles(&[1, 2]) {
        println!("  unshuffle {:?} sign {}", u.perm, u.sign);
    }

    let pi = fixtures::a2().to_cochain();
    let sq = mn_bracket(&pi, &pi).unwrap();
    println!("[a2, a2] = 0: {}", sq.is_zero());

    let bad = fixtures::non_pre_lie().to_cochain();
    let sq = mn_bracket(&bad, &bad).unwrap();
    println!("[non-pre-Lie, same] has {} nonzero basis values", sq.entries().count());

    // For a product π: π∘Id = 2π, Id∘π = π, so [π, Id] = π.
    let id = Cochain::from_fn(1, 2, 2, |k| {
        let mut v = vec![rat(0); 2];
        v[k.last] = rat(1);
        v
    });
    println!("pi o Id == 2 pi: {}", mn_compose(&pi, &id).unwrap() == pi.scale(&rat(2)));
    println!("Id o pi == pi: {}", mn_compose(&id, &pi).unwrap() == pi);
    println!("[pi, Id] == pi: {}", mn_bracket(&pi, &id).unwrap() == pi);

    for (name, a) in fixtures::all() {
        println!("{name:<12} Maurer-Cartan: {}", mc_equations(&a).passed());
    }
}
