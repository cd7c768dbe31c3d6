//! One line per acceptance criterion; every check is exact.

mod oracle;
mod support;

use std::io::Write;

use copre::algebra::{
    fixtures, induced_lie_rep, is_compatible_homomorphism, mc_equations, pencil, pre_lie_failures_via_bracket, semidirect,
    sub_adjacent, validate_compatible, validate_compatible_lie_rep, validate_pre_lie, validate_rep, CompatiblePreLie,
    CompatibleRep, Product,
};
use copre::cochain::{mn_bracket, Cochain};
use copre::cohomology::{delta_total, CochainTuple, TotalComplex};
use copre::deformation::{
    deformed_structure, equivalence_check, formal_check, gauge_transform, identity_plus_tn_check, infinitesimal_check,
    nijenhuis_check, nijenhuis_is_homomorphism, probe_pairs, rigidity_probe, trivial_from_nijenhuis, FormalDeformation,
    InfinitesimalDeformation,
};
use copre::extension::{
    build_extension, build_isomorphism, classify, cohomologous_check, extract_from_section, Section, TwoCocyclePair,
};
use copre::lift::{has_bidegree, lift_structure};
use copre::linalg::{rat, ratio, Matrix};
use num_traits::Zero;
use rand::Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn axioms() -> Outcome {
    check!(validate_pre_lie(&fixtures::a2()).passed(), "A2 is not pre-Lie");
    for (name, a) in [("(A2,0)", fixtures::a2_with_zero()), ("(A2,A2)", fixtures::a2_pair())] {
        check!(validate_compatible(&a).passed(), "{name} rejected");
        check!(oracle::compatible_verdict(&a) == (true, true, true), "oracle rejects {name}");
    }
    let bad = fixtures::non_pre_lie();
    let w = oracle::pre_lie_witness(&oracle::table(&bad));
    check!(w.is_some() && validate_pre_lie(&bad).witness() == w.as_ref().map(|w| &w[..]), "non-example witness");
    let mut rng = support::rng(7);
    let mut passing = 0;
    for i in 0..50 {
        let p = support::product(&mut rng, 2, 25);
        let explicit = validate_pre_lie(&p).passed();
        check!(explicit == pre_lie_failures_via_bracket(&p).is_empty(), "table {i}: bracket disagrees");
        check!(explicit == oracle::pre_lie_witness(&oracle::table(&p)).is_none(), "table {i}: oracle disagrees");
        passing += explicit as usize;
    }
    check!(passing > 0 && passing < 50, "degenerate sample ({passing}/50 pre-Lie)");
    Ok(())
}

fn graded_lie() -> Outcome {
    let mut rng = support::rng(5);
    let sgn = |a: usize, b: usize| if (a * b).is_multiple_of(2) { rat(1) } else { rat(-1) };
    let mut checked = 0;
    while checked < 25 {
        let d = 2 + checked % 2;
        let ar: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
        if ar.iter().sum::<usize>() - 2 > d + 1 {
            continue;
        }
        let [p, q, r] = [0, 1, 2].map(|i| support::cochain(&mut rng, ar[i], d, d));
        let (dp, dq, dr) = (ar[0] - 1, ar[1] - 1, ar[2] - 1);
        let pq = mn_bracket(&p, &q).unwrap();
        let qp = mn_bracket(&q, &p).unwrap();
        check!(pq == qp.scale(&-sgn(dp, dq)), "antisymmetry fails for arities {ar:?}");
        let t1 = mn_bracket(&p, &mn_bracket(&q, &r).unwrap()).unwrap().scale(&sgn(dp, dr));
        let t2 = mn_bracket(&q, &mn_bracket(&r, &p).unwrap()).unwrap().scale(&sgn(dq, dp));
        let t3 = mn_bracket(&r, &pq).unwrap().scale(&sgn(dr, dq));
        check!(t1.add(&t2).unwrap().add(&t3).unwrap().is_zero(), "Jacobi fails for arities {ar:?}");
        checked += 1;
    }
    Ok(())
}

fn complexes() -> Outcome {
    let mut rng = support::rng(21);
    for (name, a) in [
        ("(A2,0)", fixtures::a2_with_zero()),
        ("(A2,A2)", fixtures::a2_pair()),
        ("abelian-3", CompatiblePreLie::abelian(3)),
    ] {
        let d = a.dim();
        let cs = [("g", TotalComplex::adjoint(&a)), ("V", TotalComplex::with_coefficients(&a, &CompatibleRep::regular(&a)).unwrap())];
        for (which, c) in &cs {
            for n in 1..=d + 1 {
                for _ in 0..20 {
                    let parts = (0..n).map(|_| support::cochain(&mut rng, n, d, c.target_dim())).collect();
                    let t = CochainTuple::new(parts).unwrap();
                    check!(c.differential(&c.differential(&t).unwrap()).unwrap().is_zero(), "{name} {which} n={n}");
                }
            }
        }
    }
    Ok(())
}

fn dimensions() -> Outcome {
    let c = TotalComplex::adjoint(&CompatiblePreLie::abelian(2));
    let dims: Vec<usize> = (1..=3).map(|n| c.cohomology(n).dim_h).collect();
    check!(dims == [4, 16, 12], "abelian plane gives {dims:?}");
    let c = TotalComplex::with_coefficients(&CompatiblePreLie::abelian(1), &CompatibleRep::zero(1, 1)).unwrap();
    let h2 = c.cohomology(2).dim_h;
    check!(h2 == 2, "abelian line with trivial coefficients gives {h2}");
    Ok(())
}

fn oracle_equality() -> Outcome {
    for (name, a) in fixtures::all() {
        let d = a.dim();
        let adj = TotalComplex::adjoint(&a);
        for n in 1..=4 {
            check!(adj.differential_matrix(n).to_rows() == oracle::brute_differential(&a, None, n), "{name} g n={n}");
        }
        for r in [CompatibleRep::regular(&a), CompatibleRep::zero(d, 1)] {
            let c = TotalComplex::with_coefficients(&a, &r).unwrap();
            for n in 1..=4 {
                check!(
                    c.differential_matrix(n).to_rows() == oracle::brute_differential(&a, Some(&r), n),
                    "{name} V (m={}) n={n}",
                    r.rep_dim()
                );
            }
        }
    }
    Ok(())
}

fn propositions() -> Outcome {
    for (name, a) in fixtures::all() {
        for (k1, k2) in probe_pairs() {
            check!(validate_pre_lie(&pencil(&a, &k1, &k2)).passed(), "{name}: pencil ({k1}, {k2})");
        }
        let lie = sub_adjacent(&a);
        check!(lie.validate().passed(), "{name}: sub-adjacent");
        check!(oracle::compatible_lie_holds(&oracle::table(&lie.b1), &oracle::table(&lie.b2)), "{name}: oracle sub-adjacent");
        let r = CompatibleRep::regular(&a);
        check!(validate_rep(&a, &r).unwrap().passed(), "{name}: regular representation");
        check!(oracle::compatible_rep_holds(&a, &r), "{name}: oracle regular representation");
        check!(validate_compatible(&semidirect(&a, &r).unwrap()).passed(), "{name}: semidirect");
        let (rho, mu) = induced_lie_rep(&a, &r).unwrap();
        check!(validate_compatible_lie_rep(&lie, &rho, &mu).passed(), "{name}: induced representation");
        check!(mc_equations(&a).passed(), "{name}: Maurer-Cartan");
        let (h1, h2) = (lift_structure(&a.p1, &r.rho, &r.mu), lift_structure(&a.p2, &r.rho_t, &r.mu_t));
        for (x, y, label) in [(&h1, &h1, "11"), (&h2, &h2, "22"), (&h1, &h2, "12")] {
            check!(mn_bracket(x, y).unwrap().is_zero(), "{name}: lifted bracket {label}");
        }
    }
    Ok(())
}

fn bidegrees() -> Outcome {
    let (d, m) = (2, 2);
    let mut rng = support::rng(17);
    let mut nonzero = 0;
    for _ in 0..20 {
        let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
            let n: i64 = rng.gen_range(1..=3);
            let k: i64 = rng.gen_range(-1..n);
            (k, n - 1 - k)
        };
        let (mut x, mut y) = (pick(&mut rng), pick(&mut rng));
        while x.0 + x.1 + y.0 + y.1 + 1 > (d + m) as i64 {
            x = pick(&mut rng);
            y = pick(&mut rng);
        }
        let f = support::homogeneous(&mut rng, d, m, x.0, x.1);
        let g = support::homogeneous(&mut rng, d, m, y.0, y.1);
        let br = mn_bracket(&f, &g).unwrap();
        check!(has_bidegree(&br, d, x.0 + y.0, x.1 + y.1), "{x:?} with {y:?}");
        nonzero += !br.is_zero() as usize;
    }
    check!(nonzero > 0, "every bracket vanished");
    Ok(())
}

fn nijenhuis() -> Outcome {
    let a = fixtures::a2_with_zero();
    let zero = Product::zero(2);
    let ops = [
        ("3Id", Matrix::identity(2).scale(&rat(3))),
        ("-Id/2", Matrix::identity(2).scale(&ratio(-1, 2))),
        ("diag(1,0)", Matrix::from_i64(&[&[1, 0], &[0, 0]])),
    ];
    for (name, n) in &ops {
        check!(nijenhuis_check(&a, n).unwrap().passed(), "{name} not Nijenhuis");
        check!(validate_compatible(&deformed_structure(&a, n).unwrap()).passed(), "{name}: deformed structure");
        check!(nijenhuis_is_homomorphism(&a, n).unwrap(), "{name}: not a homomorphism");
        let triv = trivial_from_nijenhuis(&a, n).unwrap();
        let r = infinitesimal_check(&a, &triv.omega1, &triv.omega2).unwrap();
        check!(r.is_cocycle && r.is_self_compatible && r.generates, "{name}: trivial deformation");
        check!(identity_plus_tn_check(&triv, n).unwrap().passed(), "{name}: Id+tN");
        check!(equivalence_check(&a, (&zero, &zero), (&triv.omega1, &triv.omega2), n).unwrap().passed(), "{name}: equivalence");
        let diff = CochainTuple::new(vec![triv.omega1.to_cochain(), triv.omega2.to_cochain()]).unwrap();
        let dn = delta_total(&a, &CochainTuple::new(vec![Cochain::from_linear_map(n)]).unwrap()).unwrap();
        check!(diff == dn, "{name}: difference is not the coboundary of N");
        let source = InfinitesimalDeformation { base: a.clone(), omega1: triv.omega1.clone(), omega2: triv.omega2.clone() };
        let target = InfinitesimalDeformation { base: a.clone(), omega1: zero.clone(), omega2: zero.clone() };
        for (k1, _) in probe_pairs() {
            let phi = Matrix::identity(2).add(&n.scale(&k1));
            check!(is_compatible_homomorphism(&phi, &source.at(&k1), &target.at(&k1)), "{name}: t = {k1}");
        }
    }
    Ok(())
}

fn rigidity() -> Outcome {
    let zero = FormalDeformation::zero(fixtures::a2_with_zero(), 4);
    let fd = gauge_transform(&zero, &Matrix::from_i64(&[&[1, 2], &[0, -1]]), 1).unwrap();
    let fd = gauge_transform(&fd, &Matrix::from_i64(&[&[0, 1], &[3, 0]]), 2).unwrap();
    check!(formal_check(&fd).passed(), "coboundary series is not a deformation");
    let r = rigidity_probe(&fd).unwrap();
    check!(r.trivialized_to_order == 4 && r.obstruction.is_none(), "trivialized only to {}", r.trivialized_to_order);

    let base = CompatiblePreLie::abelian(2);
    let fd = FormalDeformation::new(base.clone(), vec![fixtures::a2(), Product::zero(2)], vec![Product::zero(2); 2]).unwrap();
    let r = rigidity_probe(&fd).unwrap();
    let ob = r.obstruction.ok_or("no obstruction over the abelian base")?;
    check!(ob.order == 1, "obstruction at order {}", ob.order);
    check!(ob.class.iter().any(|c| !c.is_zero()), "zero class");
    check!(!TotalComplex::adjoint(&base).cohomology(2).is_coboundary(&ob.cocycle), "obstruction is a coboundary");
    Ok(())
}

fn extensions() -> Outcome {
    let mut rng = support::rng(41);
    let cases = [
        ("(A2,0)", fixtures::a2_with_zero(), CompatibleRep::regular(&fixtures::a2_with_zero())),
        ("(A2,A2)", fixtures::a2_pair(), CompatibleRep::regular(&fixtures::a2_pair())),
        ("abelian-2", CompatiblePreLie::abelian(2), CompatibleRep::zero(2, 1)),
    ];
    for (name, a, r) in &cases {
        let (d, m) = (a.dim(), r.rep_dim());
        let c = support::cocycle(&mut rng, a, r);
        let ext = build_extension(a, r, &c).unwrap();
        let (r0, c0) = extract_from_section(&ext, &Section::canonical(d, m)).unwrap();
        check!(&r0 == r && c0 == c, "{name}: round trip");

        let s1 = Section::canonical(d, m).shifted(&support::matrix(&mut rng, m, d)).unwrap();
        let s2 = Section::canonical(d, m).shifted(&support::matrix(&mut rng, m, d)).unwrap();
        let (r1, c1) = extract_from_section(&ext, &s1).unwrap();
        let (r2, c2) = extract_from_section(&ext, &s2).unwrap();
        check!(r1 == r2, "{name}: sections give different modules");
        let phi = cohomologous_check(a, r, &c1, &c2).unwrap().ok_or(format!("{name}: sections not cohomologous"))?;
        let iso = build_isomorphism(a, r, &c1, &c2, &phi).unwrap();
        check!(iso.passed() && iso.identity_on_fiber && iso.commutes_with_projection, "{name}: isomorphism");
        let (e1, e2) = (build_extension(a, r, &c1).unwrap(), build_extension(a, r, &c2).unwrap());
        check!(iso.zeta.mul(&e1.injection()) == e2.injection(), "{name}: zeta on V");
        check!(e2.projection().mul(&iso.zeta) == e1.projection(), "{name}: projection");
        check!(is_compatible_homomorphism(&iso.zeta, e1.total(), e2.total()), "{name}: zeta not a homomorphism");
    }

    let (a, r) = (CompatiblePreLie::abelian(1), CompatibleRep::zero(1, 1));
    let h = classify(&a, &r).unwrap();
    check!(h.dim_h == 2, "abelian line has {} classes", h.dim_h);
    let pairs: Vec<TwoCocyclePair> = h.representatives.iter().map(|t| TwoCocyclePair::from_tuple(t).unwrap()).collect();
    let mut all = pairs.clone();
    all.push(TwoCocyclePair::zero(1, 1));
    for (i, x) in all.iter().enumerate() {
        check!(validate_compatible(build_extension(&a, &r, x).unwrap().total()).passed(), "class {i}: extension");
        for y in &all[i + 1..] {
            check!(cohomologous_check(&a, &r, x, y).unwrap().is_none(), "classes are cohomologous");
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("axiom validators", axioms),
        ("graded Lie structure", graded_lie),
        ("complexes square to zero", complexes),
        ("exact cohomology dimensions", dimensions),
        ("differentials equal brute force", oracle_equality),
        ("structure propositions", propositions),
        ("bidegree additivity", bidegrees),
        ("Nijenhuis and deformations", nijenhuis),
        ("rigidity probe", rigidity),
        ("abelian extensions", extensions),
    ];
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => writeln!(out, "criterion {:>2} PASS  {name}", i + 1).unwrap(),
            Err(e) => {
                writeln!(out, "criterion {:>2} FAIL  {name}: {e}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
