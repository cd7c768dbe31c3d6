//! Abelian extensions: build from a cocycle, read the data back through a
//! section, compare two cohomologous cocycles, and count classes.
//!
//! cargo run --example extensions

use copre::algebra::{fixtures, validate_compatible, CompatibleRep};
use copre::cochain::Cochain;
use copre::extension::{build_extension, build_isomorphism, classify, cohomologous_check, extract_from_section, Section, TwoCocyclePair};
use copre::linalg::{format_rational, Matrix};
use copre::cohomology::TotalComplex;

fn main() {
    let a = fixtures::a2_with_zero();
    let r = CompatibleRep::regular(&a);
    let (d, m) = (a.dim(), r.rep_dim());

    let h2 = classify(&a, &r).unwrap();
    println!("extensions of (a2, 0) by its regular module: H2 has dimension {}", h2.dim_h);

    let c1 = TwoCocyclePair::from_tuple(&h2.representatives[0]).unwrap();
    let ext = build_extension(&a, &r, &c1).unwrap();
    println!("total algebra dim {} compatible: {}", ext.total().dim(), validate_compatible(ext.total()).passed());

    let (r_back, c_back) = extract_from_section(&ext, &Section::canonical(d, m)).unwrap();
    println!("canonical section recovers module {} and cocycle {}", r_back == r, c_back == c1);

    // Shift the cocycle by a coboundary and recover the comparison map.
    let phi = Matrix::from_i64(&[&[1, 0], &[2, -1]]);
    let complex = TotalComplex::with_coefficients(&a, &r).unwrap();
    let shift = complex.differential(&copre::cohomology::CochainTuple::new(vec![Cochain::from_linear_map(&phi)]).unwrap()).unwrap();
    let c2 = TwoCocyclePair::from_tuple(&c1.as_tuple().sub(&shift).unwrap()).unwrap();
    let found = cohomologous_check(&a, &r, &c1, &c2).unwrap().expect("cohomologous");
    let iso = build_isomorphism(&a, &r, &c1, &c2, &found).unwrap();
    println!("comparison map {:?}, isomorphism of extensions: {}", show(&found), iso.passed());

    let c3 = TwoCocyclePair::from_tuple(&h2.representatives[1]).unwrap();
    println!("distinct classes cohomologous: {}", cohomologous_check(&a, &r, &c1, &c3).unwrap().is_some());
}

fn show(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}
