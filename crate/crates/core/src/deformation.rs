//! Infinitesimal and truncated formal deformations, Nijenhuis operators, and
//! an order-by-order trivialization probe.

use num_traits::One;

use crate::algebra::{
    is_homomorphism, pencil, validate_compatible, CompatiblePreLie, IdentityReport, Product,
};
use crate::cochain::{mn_bracket, Cochain};
use crate::cohomology::{delta_single, CochainTuple, TotalComplex};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, rat, unit_vec, Matrix, Rational};

/// Scalar pairs `(k₁, k₂)` at which pencil identities are probed. The
/// identities involved are polynomial of degree at most two in `(k₁, k₂)`.
pub fn probe_pairs() -> [(Rational, Rational); 5] {
    [(rat(1), rat(0)), (rat(0), rat(1)), (rat(1), rat(1)), (rat(2), rat(3)), (rat(-1), rat(5))]
}

/// Basis-pair check of `lhs(i, j) == rhs(i, j)` for product-valued sides.
fn pairs(name: &'static str, d: usize, mut holds: impl FnMut(usize, usize) -> bool) -> IdentityReport {
    let mut failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if !holds(i, j) {
                failures.push(vec![i, j]);
            }
        }
    }
    IdentityReport { identity: name, failures }
}

fn same(name: &'static str, a: &Product, b: &Product) -> IdentityReport {
    pairs(name, a.dim(), |i, j| a.basis(i, j) == b.basis(i, j))
}

fn check_square(a: &CompatiblePreLie, n: &Matrix) -> Result<()> {
    if n.rows() != a.dim() || n.cols() != a.dim() {
        return Err(Error::Dimension(format!("operator is {}x{} on a {}-dimensional algebra", n.rows(), n.cols(), a.dim())));
    }
    Ok(())
}

fn check_product(a: &CompatiblePreLie, p: &Product) -> Result<()> {
    if p.dim() != a.dim() {
        return Err(Error::Dimension(format!("2-cochain on dimension {} for an algebra of dimension {}", p.dim(), a.dim())));
    }
    Ok(())
}

/// `x ∘_N y = N(x)∘y + x∘N(y) − N(x∘y)`.
pub fn deformed_product(p: &Product, n: &Matrix) -> Product {
    let id = Matrix::identity(p.dim());
    p.transform(&id, n, &id).add(&p.transform(&id, &id, n)).sub(&p.transform(n, &id, &id))
}

/// `N(x)∘N(y) = N(x ∘_N y)` on all basis pairs.
pub fn nijenhuis_on(name: &'static str, p: &Product, n: &Matrix) -> IdentityReport {
    let id = Matrix::identity(p.dim());
    same(name, &p.transform(&id, n, n), &deformed_product(p, n).transform(n, &id, &id))
}

#[derive(Clone, Debug)]
pub struct NijenhuisReport {
    pub first: IdentityReport,
    pub second: IdentityReport,
}

impl NijenhuisReport {
    pub fn passed(&self) -> bool {
        self.first.passed() && self.second.passed()
    }
}

pub fn nijenhuis_check(a: &CompatiblePreLie, n: &Matrix) -> Result<NijenhuisReport> {
    check_square(a, n)?;
    Ok(NijenhuisReport { first: nijenhuis_on("Nijenhuis 1", &a.p1, n), second: nijenhuis_on("Nijenhuis 2", &a.p2, n) })
}

/// Nijenhuis verdicts for the pencil products at every probe pair.
pub fn nijenhuis_on_pencils(a: &CompatiblePreLie, n: &Matrix) -> Vec<bool> {
    probe_pairs().iter().map(|(k1, k2)| nijenhuis_on("pencil", &pencil(a, k1, k2), n).passed()).collect()
}

fn require_nijenhuis(a: &CompatiblePreLie, n: &Matrix) -> Result<()> {
    let r = nijenhuis_check(a, n)?;
    match r.first.witness().or(r.second.witness()) {
        None => Ok(()),
        Some(w) => Err(Error::NotNijenhuis(format!("identity fails at basis pair {w:?}"))),
    }
}

/// `(g, ·_N, ∗_N)`.
pub fn deformed_structure(a: &CompatiblePreLie, n: &Matrix) -> Result<CompatiblePreLie> {
    require_nijenhuis(a, n)?;
    Ok(CompatiblePreLie { p1: deformed_product(&a.p1, n), p2: deformed_product(&a.p2, n) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitesimalReport {
    pub is_cocycle: bool,
    pub is_self_compatible: bool,
    pub generates: bool,
}

/// First-order deformation `x·_t y = x·y + tω₁(x,y)`, `x∗_t y = x∗y + tω₂(x,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitesimalDeformation {
    pub base: CompatiblePreLie,
    pub omega1: Product,
    pub omega2: Product,
}

impl InfinitesimalDeformation {
    pub fn at(&self, t: &Rational) -> CompatiblePreLie {
        CompatiblePreLie { p1: self.base.p1.add(&self.omega1.scale(t)), p2: self.base.p2.add(&self.omega2.scale(t)) }
    }

    pub fn as_tuple(&self) -> CochainTuple {
        CochainTuple::new(vec![self.omega1.to_cochain(), self.omega2.to_cochain()]).expect("two arity-2 parts")
    }
}

pub fn infinitesimal_check(a: &CompatiblePreLie, w1: &Product, w2: &Product) -> Result<InfinitesimalReport> {
    check_product(a, w1)?;
    check_product(a, w2)?;
    let t = CochainTuple::new(vec![w1.to_cochain(), w2.to_cochain()])?;
    let is_cocycle = TotalComplex::adjoint(a).differential(&t)?.is_zero();
    let is_self_compatible = validate_compatible(&CompatiblePreLie { p1: w1.clone(), p2: w2.clone() }).passed();
    Ok(InfinitesimalReport { is_cocycle, is_self_compatible, generates: is_cocycle && is_self_compatible })
}

/// The deformed algebra is compatible at `t = 1, 2, −1`.
pub fn generates_at_probe_values(a: &CompatiblePreLie, w1: &Product, w2: &Product) -> bool {
    let d = InfinitesimalDeformation { base: a.clone(), omega1: w1.clone(), omega2: w2.clone() };
    [rat(1), rat(2), rat(-1)].iter().all(|t| validate_compatible(&d.at(t)).passed())
}

/// The six coefficient identities of `Id + tN` mapping the deformation by
/// `(ω′₁, ω′₂)` to the one by `(ω₁, ω₂)`, three per product.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub equations: Vec<IdentityReport>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.equations.iter().all(IdentityReport::passed)
    }
}

/// For one product `∘` with deformations `ω` (target) and `ω′` (source):
/// `ω′ − ω = N(x)∘y + x∘N(y) − N(x∘y)`,
/// `N(ω′(x,y)) = ω(x,N(y)) + ω(N(x),y) + N(x)∘N(y)`,
/// `ω(N(x),N(y)) = 0`.
fn equivalence_equations(
    names: [&'static str; 3],
    p: &Product,
    w: &Product,
    w_prime: &Product,
    n: &Matrix,
) -> [IdentityReport; 3] {
    let id = Matrix::identity(p.dim());
    let first = same(names[0], &w_prime.sub(w), &deformed_product(p, n));
    let lhs = w_prime.transform(n, &id, &id);
    let rhs = w.transform(&id, &id, n).add(&w.transform(&id, n, &id)).add(&p.transform(&id, n, n));
    let second = same(names[1], &lhs, &rhs);
    let third = same(names[2], &w.transform(&id, n, n), &Product::zero(p.dim()));
    [first, second, third]
}

pub fn equivalence_check(
    a: &CompatiblePreLie,
    def1: (&Product, &Product),
    def2: (&Product, &Product),
    n: &Matrix,
) -> Result<EquivalenceReport> {
    check_square(a, n)?;
    for w in [def1.0, def1.1, def2.0, def2.1] {
        check_product(a, w)?;
    }
    let [e1, e2, e3] = equivalence_equations(["equivalence 1", "equivalence 2", "equivalence 3"], &a.p1, def1.0, def2.0, n);
    let [e4, e5, e6] = equivalence_equations(["equivalence 4", "equivalence 5", "equivalence 6"], &a.p2, def1.1, def2.1, n);
    Ok(EquivalenceReport { equations: vec![e1, e2, e3, e4, e5, e6] })
}

/// `(ω₁, ω₂) = (δ_{π₁}N, δ_{π₂}N)`.
pub fn trivial_from_nijenhuis(a: &CompatiblePreLie, n: &Matrix) -> Result<InfinitesimalDeformation> {
    require_nijenhuis(a, n)?;
    let nc = Cochain::from_linear_map(n);
    Ok(InfinitesimalDeformation {
        base: a.clone(),
        omega1: Product::from_cochain(&delta_single(&a.p1, &nc)?)?,
        omega2: Product::from_cochain(&delta_single(&a.p2, &nc)?)?,
    })
}

/// Coefficients of `t⁰, t¹, t²` in `(Id+tN)(x∘_t y) − (Id+tN)(x) ∘ (Id+tN)(y)`
/// for each product; the map is a homomorphism for every `t` exactly when
/// all of them vanish.
#[derive(Clone, Debug)]
pub struct PolynomialHomReport {
    pub coefficients: Vec<IdentityReport>,
}

impl PolynomialHomReport {
    pub fn passed(&self) -> bool {
        self.coefficients.iter().all(IdentityReport::passed)
    }
}

pub fn identity_plus_tn_check(def: &InfinitesimalDeformation, n: &Matrix) -> Result<PolynomialHomReport> {
    check_square(&def.base, n)?;
    let id = Matrix::identity(def.base.dim());
    let mut coefficients = Vec::new();
    for (p, w) in [(&def.base.p1, &def.omega1), (&def.base.p2, &def.omega2)] {
        // (Id+tN)(p + tω) = p + t(Np + ω) + t²Nω ; (x+tNx)∘(y+tNy) = p + t(p(N,·)+p(·,N)) + t²p(N,N)
        let c0 = p.sub(p);
        let c1 = p.transform(n, &id, &id).add(w).sub(&p.transform(&id, n, &id)).sub(&p.transform(&id, &id, n));
        let c2 = w.transform(n, &id, &id).sub(&p.transform(&id, n, n));
        for (name, c) in [("t^0", c0), ("t^1", c1), ("t^2", c2)] {
            coefficients.push(same(name, &c, &Product::zero(p.dim())));
        }
    }
    Ok(PolynomialHomReport { coefficients })
}

/// `πᵢᵗ = πᵢ + Σ_{k=1}^{K} πᵢᵏ tᵏ`, truncated at order `K = terms.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalDeformation {
    pub base: CompatiblePreLie,
    pub terms1: Vec<Product>,
    pub terms2: Vec<Product>,
}

impl FormalDeformation {
    pub fn new(base: CompatiblePreLie, terms1: Vec<Product>, terms2: Vec<Product>) -> Result<Self> {
        if terms1.len() != terms2.len() || terms1.is_empty() {
            return Err(Error::Dimension("both series need the same positive number of terms".into()));
        }
        if terms1.iter().chain(&terms2).any(|p| p.dim() != base.dim()) {
            return Err(Error::Dimension("deformation terms live on a different space".into()));
        }
        Ok(FormalDeformation { base, terms1, terms2 })
    }

    pub fn zero(base: CompatiblePreLie, order: usize) -> Self {
        let z = vec![Product::zero(base.dim()); order];
        FormalDeformation { base, terms1: z.clone(), terms2: z }
    }

    pub fn order(&self) -> usize {
        self.terms1.len()
    }

    /// `πᵢᵏ` with `πᵢ⁰` the base product.
    pub fn coefficient(&self, which: usize, k: usize) -> &Product {
        match (which, k) {
            (1, 0) => &self.base.p1,
            (2, 0) => &self.base.p2,
            (1, k) => &self.terms1[k - 1],
            (2, k) => &self.terms2[k - 1],
            _ => panic!("series index must be 1 or 2"),
        }
    }

    /// `(π₁ⁿ, π₂ⁿ)` as an element of `𝔠²`.
    pub fn term_tuple(&self, n: usize) -> CochainTuple {
        CochainTuple::new(vec![self.terms1[n - 1].to_cochain(), self.terms2[n - 1].to_cochain()]).expect("arity 2")
    }
}

/// `P(Q(x,y),z) − P(x,Q(y,z)) − P(Q(y,x),z) + P(y,Q(x,z))` at a basis triple.
fn circle(p: &Product, q: &Product, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let d = p.dim();
    let (ez, ex, ey) = (unit_vec(d, z), unit_vec(d, x), unit_vec(d, y));
    let mut out = p.apply(q.basis(x, y), &ez);
    for (s, v) in [
        (-1, p.apply(&ex, q.basis(y, z))),
        (-1, p.apply(q.basis(y, x), &ez)),
        (1, p.apply(&ey, q.basis(x, z))),
    ] {
        crate::linalg::add_assign_scaled(&mut out, &rat(s), &v);
    }
    out
}

fn triples(d: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..d).flat_map(move |x| (0..d).flat_map(move |y| (0..d).map(move |z| (x, y, z))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub order: usize,
    pub first: bool,
    pub second: bool,
    pub mixed: bool,
    /// Present when all lower orders hold: the quadratic part of the order-`n`
    /// sums (both indices positive) equals the negated bracket with the base.
    pub remainder_consistent: Option<bool>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.first && self.second && self.mixed
    }
}

#[derive(Clone, Debug)]
pub struct FormalReport {
    pub orders: Vec<OrderReport>,
}

impl FormalReport {
    pub fn passed(&self) -> bool {
        self.orders.iter().all(OrderReport::passed)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.orders.iter().find(|o| !o.passed()).map(|o| o.order)
    }
}

/// Sum over `i + j = n` (with `lo ≤ i, j`) of the given bilinear term,
/// evaluated at every basis triple; `true` when identically zero.
fn sum_vanishes(
    fd: &FormalDeformation,
    n: usize,
    lo: usize,
    term: impl Fn(usize, usize, usize, usize, usize) -> Vec<Rational>,
) -> Vec<Vec<Rational>> {
    let d = fd.base.dim();
    triples(d)
        .map(|(x, y, z)| {
            let mut acc = crate::linalg::zero_vec(d);
            for i in lo..=n - lo {
                crate::linalg::add_assign_scaled(&mut acc, &Rational::one(), &term(i, n - i, x, y, z));
            }
            acc
        })
        .collect()
}

pub fn formal_check(fd: &FormalDeformation) -> FormalReport {
    let c = |w, k| fd.coefficient(w, k);
    let single = |w: usize| move |i, j, x, y, z| circle(c(w, i), c(w, j), x, y, z);
    let mixed = |i, j, x, y, z| {
        let mut v = circle(c(1, i), c(2, j), x, y, z);
        crate::linalg::add_assign_scaled(&mut v, &Rational::one(), &circle(c(2, j), c(1, i), x, y, z));
        v
    };
    let all_zero = |vals: Vec<Vec<Rational>>| vals.iter().all(|v| is_zero_vec(v));
    let mut orders = Vec::new();
    let mut lower_ok = true;
    for n in 1..=fd.order() {
        let first = all_zero(sum_vanishes(fd, n, 0, single(1)));
        let second = all_zero(sum_vanishes(fd, n, 0, single(2)));
        let mix = all_zero(sum_vanishes(fd, n, 0, mixed));
        let remainder_consistent = lower_ok.then(|| {
            let quad = |f: &dyn Fn(usize, usize, usize, usize, usize) -> Vec<Rational>| {
                if n < 2 {
                    triples(fd.base.dim()).map(|_| crate::linalg::zero_vec(fd.base.dim())).collect()
                } else {
                    sum_vanishes(fd, n, 1, f)
                }
            };
            let b = |p: &Product, q: &Product| mn_bracket(&p.to_cochain(), &q.to_cochain()).expect("same space");
            let targets = [
                b(&fd.base.p1, c(1, n)),
                b(&fd.base.p2, c(2, n)),
                b(&fd.base.p1, c(2, n)).add(&b(&fd.base.p2, c(1, n))).expect("same space"),
            ];
            let quads = [quad(&single(1)), quad(&single(2)), quad(&mixed)];
            quads.iter().zip(&targets).all(|(q, t)| {
                triples(fd.base.dim()).zip(q).all(|((x, y, z), v)| {
                    let neg: Vec<Rational> = t.eval_basis(&[x, y, z]).into_iter().map(|a| -a).collect();
                    &neg == v
                })
            })
        });
        let report = OrderReport { order: n, first, second, mixed: mix, remainder_consistent };
        lower_ok &= report.passed();
        orders.push(report);
    }
    FormalReport { orders }
}

/// `φᵏ` as a matrix power.
fn power(m: &Matrix, k: usize) -> Matrix {
    (0..k).fold(Matrix::identity(m.rows()), |acc, _| acc.mul(m))
}

/// `π′ᵗ(x,y) = Φₜ⁻¹ πᵗ(Φₜx, Φₜy)` with `Φₜ = Id + φ tⁿ` and
/// `Φₜ⁻¹ = Σ_k (−φ)ᵏ t^{kn}`, everything truncated at the order of `fd`.
pub fn gauge_transform(fd: &FormalDeformation, phi: &Matrix, n: usize) -> Result<FormalDeformation> {
    check_square(&fd.base, phi)?;
    if n == 0 {
        return Err(Error::Dimension("gauge order starts at 1".into()));
    }
    let k_max = fd.order();
    let d = fd.base.dim();
    let id = Matrix::identity(d);
    let neg_phi = phi.scale(&-Rational::one());
    let series = |w: usize| -> Vec<Product> {
        let mut inner = vec![Product::zero(d); k_max + 1];
        for i in 0..=k_max {
            let p = fd.coefficient(w, i);
            let parts = [p.clone(), p.transform(&id, phi, &id).add(&p.transform(&id, &id, phi)), p.transform(&id, phi, phi)];
            for (e, part) in parts.into_iter().enumerate() {
                if i + e * n <= k_max {
                    inner[i + e * n] = inner[i + e * n].add(&part);
                }
            }
        }
        let mut out = vec![Product::zero(d); k_max + 1];
        for (o, slot) in out.iter_mut().enumerate() {
            for k in 0..=o / n {
                *slot = slot.add(&inner[o - k * n].transform(&power(&neg_phi, k), &id, &id));
            }
        }
        out
    };
    let (s1, s2) = (series(1), series(2));
    debug_assert!(s1[0] == fd.base.p1 && s2[0] == fd.base.p2);
    FormalDeformation::new(fd.base.clone(), s1[1..].to_vec(), s2[1..].to_vec())
}

/// Order at which trivialization stopped, with the offending cocycle.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub order: usize,
    pub cocycle: CochainTuple,
    /// Coordinates of the class in `𝓗²` with respect to the representatives
    /// of [`TotalComplex::cohomology`]`(2)`.
    pub class: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub trivialized_to_order: usize,
    pub obstruction: Option<Obstruction>,
    /// Gauge maps `φₙ` applied, by order.
    pub gauges: Vec<(usize, Matrix)>,
    /// The deformation after all gauge steps.
    pub result: FormalDeformation,
}

pub fn rigidity_probe(fd: &FormalDeformation) -> Result<RigidityReport> {
    if let Some(n) = formal_check(fd).first_failure() {
        return Err(Error::FormalCheckFailed(n));
    }
    let complex = TotalComplex::adjoint(&fd.base);
    let k_max = fd.order();
    let mut cur = fd.clone();
    let mut gauges = Vec::new();
    let mut n = 1;
    while n <= k_max {
        if cur.terms1[n - 1].is_zero() && cur.terms2[n - 1].is_zero() {
            n += 1;
            continue;
        }
        let term = cur.term_tuple(n);
        match complex.solve_primitive(&term.scale(&-Rational::one())) {
            Some(phi) => {
                let phi = phi.to_matrix();
                cur = gauge_transform(&cur, &phi, n)?;
                debug_assert!(cur.terms1[n - 1].is_zero() && cur.terms2[n - 1].is_zero());
                gauges.push((n, phi));
                n += 1;
            }
            None => {
                let report = complex.cohomology(2);
                let class = report.class_coordinates(&term).unwrap_or_default();
                return Ok(RigidityReport {
                    trivialized_to_order: n - 1,
                    obstruction: Some(Obstruction { order: n, cocycle: term, class }),
                    gauges,
                    result: cur,
                });
            }
        }
    }
    Ok(RigidityReport { trivialized_to_order: k_max, obstruction: None, gauges, result: cur })
}

/// `N` is a homomorphism `(g,·_N,∗_N) → (g,·,∗)`.
pub fn nijenhuis_is_homomorphism(a: &CompatiblePreLie, n: &Matrix) -> Result<bool> {
    let deformed = deformed_structure(a, n)?;
    Ok(is_homomorphism(n, &deformed.p1, &a.p1) && is_homomorphism(n, &deformed.p2, &a.p2))
}
