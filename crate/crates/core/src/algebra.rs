//! Structure-constant algebras: pre-Lie and compatible pre-Lie products,
//! their sub-adjacent (compatible) Lie brackets, representations and
//! semidirect products.
//!
//! Every identity is checked on basis tuples only; multilinearity makes that
//! complete. Validators return the failing tuples so a property-test failure
//! points at a concrete witness.

use num_traits::{One, Zero};

use crate::cochain::{mn_bracket, Cochain};
use crate::error::{Error, Result};
use crate::linalg::{add_assign_scaled, is_zero_vec, unit_vec, zero_vec, Matrix, Rational};

/// Bilinear product `eᵢ∘eⱼ = Σₖ c_{ij}^k e_k` on a `dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    dim: usize,
    c: Vec<Rational>,
}

impl Product {
    pub fn zero(dim: usize) -> Self {
        Product { dim, c: zero_vec(dim * dim * dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn at(&self, i: usize, j: usize) -> usize {
        (i * self.dim + j) * self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.at(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let at = self.at(i, j) + k;
        self.c[at] = value;
    }

    /// Builder-style `eᵢ∘eⱼ += c·e_k`.
    pub fn with(mut self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let at = self.at(i, j) + k;
        self.c[at] += value;
        self
    }

    /// `eᵢ∘eⱼ` as a coordinate vector.
    pub fn basis(&self, i: usize, j: usize) -> &[Rational] {
        let at = self.at(i, j);
        &self.c[at..at + self.dim]
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                add_assign_scaled(&mut out, &(xi * yj), self.basis(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.c)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let d = self.dim;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| (at / (d * d), (at / d) % d, at % d, v))
    }

    pub fn add(&self, other: &Product) -> Product {
        assert_eq!(self.dim, other.dim);
        Product { dim: self.dim, c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Product {
        Product { dim: self.dim, c: self.c.iter().map(|a| a * k).collect() }
    }

    pub fn sub(&self, other: &Product) -> Product {
        self.add(&other.scale(&-Rational::one()))
    }

    /// `[x,y] = x∘y − y∘x`.
    pub fn commutator(&self) -> Product {
        let d = self.dim;
        let mut out = Product::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    out.set(i, j, k, self.get(i, j, k) - self.get(j, i, k));
                }
            }
        }
        out
    }

    /// Left multiplication `L_{eᵢ}: y ↦ eᵢ∘y`.
    pub fn left(&self, i: usize) -> Matrix {
        let cols: Vec<_> = (0..self.dim).map(|j| self.basis(i, j).to_vec()).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Right multiplication `R_{eᵢ}: y ↦ y∘eᵢ`.
    pub fn right(&self, i: usize) -> Matrix {
        let cols: Vec<_> = (0..self.dim).map(|j| self.basis(j, i).to_vec()).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// `(x,y) ↦ post(self(a·x, b·y))`, all maps square of size `dim`.
    pub fn transform(&self, post: &Matrix, a: &Matrix, b: &Matrix) -> Product {
        let d = self.dim;
        let mut out = Product::zero(d);
        for i in 0..d {
            let ax = a.column(i);
            for j in 0..d {
                let v = post.mul_vec(&self.apply(&ax, &b.column(j)));
                for (k, x) in v.into_iter().enumerate() {
                    out.set(i, j, k, x);
                }
            }
        }
        out
    }

    /// Arity-2 cochain `π ∈ C²(g;g)`.
    pub fn to_cochain(&self) -> Cochain {
        Cochain::from_fn(2, self.dim, self.dim, |k| self.basis(k.subset[0], k.last).to_vec())
    }

    pub fn from_cochain(c: &Cochain) -> Result<Product> {
        if c.arity() != 2 || c.source_dim() != c.target_dim() {
            return Err(Error::Dimension(format!(
                "expected an End-valued arity-2 cochain, got arity {} ({}→{})",
                c.arity(),
                c.source_dim(),
                c.target_dim()
            )));
        }
        let d = c.source_dim();
        let mut p = Product::zero(d);
        for (key, v) in c.entries() {
            for (k, x) in v.iter().enumerate() {
                p.set(key.subset[0], key.last, k, x.clone());
            }
        }
        Ok(p)
    }
}

/// Outcome of an exhaustive basis check of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    /// Basis index tuples (zero-based) where the identity fails.
    pub failures: Vec<Vec<usize>>,
}

impl IdentityReport {
    fn check(identity: &'static str, arity: usize, dim: usize, mut holds: impl FnMut(&[usize]) -> bool) -> Self {
        let mut failures = Vec::new();
        let mut idx = vec![0; arity];
        if dim > 0 || arity == 0 {
            loop {
                if !holds(&idx) {
                    failures.push(idx.clone());
                }
                let mut pos = arity;
                loop {
                    if pos == 0 {
                        return IdentityReport { identity, failures };
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < dim {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        IdentityReport { identity, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn witness(&self) -> Option<&[usize]> {
        self.failures.first().map(Vec::as_slice)
    }
}

fn combine(terms: &[(i64, Vec<Rational>)], dim: usize) -> Vec<Rational> {
    let mut out = zero_vec(dim);
    for (s, v) in terms {
        add_assign_scaled(&mut out, &Rational::from_integer((*s).into()), v);
    }
    out
}

/// `(x·y)·z − x·(y·z) = (y·x)·z − y·(x·z)` on all basis triples.
pub fn validate_pre_lie(p: &Product) -> IdentityReport {
    let d = p.dim;
    IdentityReport::check("pre-Lie", 3, d, |t| {
        let (x, y, z) = (unit_vec(d, t[0]), unit_vec(d, t[1]), unit_vec(d, t[2]));
        let lhs = combine(
            &[
                (1, p.apply(&p.apply(&x, &y), &z)),
                (-1, p.apply(&x, &p.apply(&y, &z))),
                (-1, p.apply(&p.apply(&y, &x), &z)),
                (1, p.apply(&y, &p.apply(&x, &z))),
            ],
            d,
        );
        is_zero_vec(&lhs)
    })
}

/// Triples on which the cochain `c` (arity 3) does not vanish.
fn nonvanishing_triples(c: &Cochain) -> Vec<Vec<usize>> {
    let d = c.source_dim();
    IdentityReport::check("", 3, d, |t| is_zero_vec(&c.eval_basis(t))).failures
}

/// Failure set of the pre-Lie identity read off `[π,π]^{MN}`.
pub fn pre_lie_failures_via_bracket(p: &Product) -> Vec<Vec<usize>> {
    let pi = p.to_cochain();
    nonvanishing_triples(&mn_bracket(&pi, &pi).expect("same space"))
}

/// A pair of products, with or without the compatible pre-Lie axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePreLie {
    pub p1: Product,
    pub p2: Product,
}

impl CompatiblePreLie {
    /// Validated constructor.
    pub fn new(p1: Product, p2: Product) -> Result<Self> {
        let a = Self::candidate(p1, p2)?;
        let report = validate_compatible(&a);
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report.summary()));
        }
        Ok(a)
    }

    /// Pair of products of equal dimension, axioms unchecked.
    pub fn candidate(p1: Product, p2: Product) -> Result<Self> {
        if p1.dim != p2.dim {
            return Err(Error::Dimension(format!("products of dimension {} and {}", p1.dim, p2.dim)));
        }
        Ok(CompatiblePreLie { p1, p2 })
    }

    pub fn dim(&self) -> usize {
        self.p1.dim
    }

    pub fn abelian(dim: usize) -> Self {
        CompatiblePreLie { p1: Product::zero(dim), p2: Product::zero(dim) }
    }

    pub fn product(&self, which: Which) -> &Product {
        match which {
            Which::First => &self.p1,
            Which::Second => &self.p2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    First,
    Second,
}

#[derive(Clone, Debug)]
pub struct CompatibleReport {
    pub pre_lie_1: IdentityReport,
    pub pre_lie_2: IdentityReport,
    pub compatibility: IdentityReport,
}

impl CompatibleReport {
    pub fn passed(&self) -> bool {
        self.pre_lie_1.passed() && self.pre_lie_2.passed() && self.compatibility.passed()
    }

    pub fn summary(&self) -> String {
        [&self.pre_lie_1, &self.pre_lie_2, &self.compatibility]
            .iter()
            .filter_map(|r| r.witness().map(|w| format!("{} fails at {w:?}", r.identity)))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// The 8-term mixed identity
/// `(x∗y)·z + (x·y)∗z − x·(y∗z) − x∗(y·z) − (y∗x)·z − (y·x)∗z + y·(x∗z) + y∗(x·z) = 0`.
pub fn validate_compatibility_identity(p1: &Product, p2: &Product) -> IdentityReport {
    let d = p1.dim;
    IdentityReport::check("compatibility", 3, d, |t| {
        let (x, y, z) = (unit_vec(d, t[0]), unit_vec(d, t[1]), unit_vec(d, t[2]));
        let (dot, star) = (|a: &[Rational], b: &[Rational]| p1.apply(a, b), |a: &[Rational], b: &[Rational]| p2.apply(a, b));
        let v = combine(
            &[
                (1, dot(&star(&x, &y), &z)),
                (1, star(&dot(&x, &y), &z)),
                (-1, dot(&x, &star(&y, &z))),
                (-1, star(&x, &dot(&y, &z))),
                (-1, dot(&star(&y, &x), &z)),
                (-1, star(&dot(&y, &x), &z)),
                (1, dot(&y, &star(&x, &z))),
                (1, star(&y, &dot(&x, &z))),
            ],
            d,
        );
        is_zero_vec(&v)
    })
}

pub fn validate_compatible(a: &CompatiblePreLie) -> CompatibleReport {
    CompatibleReport {
        pre_lie_1: validate_pre_lie(&a.p1),
        pre_lie_2: validate_pre_lie(&a.p2),
        compatibility: validate_compatibility_identity(&a.p1, &a.p2),
    }
}

/// Failure sets of the three Maurer–Cartan equations
/// `[π₁,π₁] = [π₂,π₂] = [π₁,π₂] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McReport {
    pub bracket_11: Vec<Vec<usize>>,
    pub bracket_22: Vec<Vec<usize>>,
    pub bracket_12: Vec<Vec<usize>>,
}

impl McReport {
    pub fn passed(&self) -> bool {
        self.bracket_11.is_empty() && self.bracket_22.is_empty() && self.bracket_12.is_empty()
    }
}

pub fn mc_equations(a: &CompatiblePreLie) -> McReport {
    let (c1, c2) = (a.p1.to_cochain(), a.p2.to_cochain());
    let br = |x: &Cochain, y: &Cochain| nonvanishing_triples(&mn_bracket(x, y).expect("same space"));
    McReport { bracket_11: br(&c1, &c1), bracket_22: br(&c2, &c2), bracket_12: br(&c1, &c2) }
}

/// `x ⋄ y = k₁ x·y + k₂ x∗y`.
pub fn pencil(a: &CompatiblePreLie, k1: &Rational, k2: &Rational) -> Product {
    a.p1.scale(k1).add(&a.p2.scale(k2))
}

/// `φ(eᵢ∘eⱼ) = φ(eᵢ)∘′φ(eⱼ)` for all basis pairs; `phi` is `to.dim × from.dim`.
pub fn is_homomorphism(phi: &Matrix, from: &Product, to: &Product) -> bool {
    assert_eq!((phi.rows(), phi.cols()), (to.dim, from.dim), "homomorphism shape");
    (0..from.dim).all(|i| {
        (0..from.dim).all(|j| phi.mul_vec(from.basis(i, j)) == to.apply(&phi.column(i), &phi.column(j)))
    })
}

pub fn is_compatible_homomorphism(phi: &Matrix, from: &CompatiblePreLie, to: &CompatiblePreLie) -> bool {
    is_homomorphism(phi, &from.p1, &to.p1) && is_homomorphism(phi, &from.p2, &to.p2)
}

/// Two brackets, intended antisymmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleLie {
    pub b1: Product,
    pub b2: Product,
}

#[derive(Clone, Debug)]
pub struct CompatibleLieReport {
    pub checks: Vec<IdentityReport>,
}

impl CompatibleLieReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityReport::passed)
    }
}

fn antisymmetry(name: &'static str, b: &Product) -> IdentityReport {
    IdentityReport::check(name, 2, b.dim, |t| {
        (0..b.dim).all(|k| (b.get(t[0], t[1], k) + b.get(t[1], t[0], k)).is_zero())
    })
}

fn jacobi(name: &'static str, b: &Product) -> IdentityReport {
    let d = b.dim;
    IdentityReport::check(name, 3, d, |t| {
        let (x, y, z) = (unit_vec(d, t[0]), unit_vec(d, t[1]), unit_vec(d, t[2]));
        let v = combine(
            &[
                (1, b.apply(&b.apply(&x, &y), &z)),
                (1, b.apply(&b.apply(&y, &z), &x)),
                (1, b.apply(&b.apply(&z, &x), &y)),
            ],
            d,
        );
        is_zero_vec(&v)
    })
}

impl CompatibleLie {
    pub fn validate(&self) -> CompatibleLieReport {
        let (b1, b2) = (&self.b1, &self.b2);
        let d = b1.dim;
        let mixed = IdentityReport::check("mixed Jacobi", 3, d, |t| {
            let (x, y, z) = (unit_vec(d, t[0]), unit_vec(d, t[1]), unit_vec(d, t[2]));
            let (sq, br) = (|a: &[Rational], c: &[Rational]| b1.apply(a, c), |a: &[Rational], c: &[Rational]| b2.apply(a, c));
            let v = combine(
                &[
                    (1, sq(&br(&x, &y), &z)),
                    (1, sq(&br(&y, &z), &x)),
                    (1, sq(&br(&z, &x), &y)),
                    (1, br(&sq(&x, &y), &z)),
                    (1, br(&sq(&y, &z), &x)),
                    (1, br(&sq(&z, &x), &y)),
                ],
                d,
            );
            is_zero_vec(&v)
        });
        CompatibleLieReport {
            checks: vec![
                antisymmetry("antisymmetry 1", b1),
                antisymmetry("antisymmetry 2", b2),
                jacobi("Jacobi 1", b1),
                jacobi("Jacobi 2", b2),
                mixed,
            ],
        }
    }
}

/// Commutator brackets `[x,y] = x·y − y·x`, `{x,y} = x∗y − y∗x`.
pub fn sub_adjacent(a: &CompatiblePreLie) -> CompatibleLie {
    CompatibleLie { b1: a.p1.commutator(), b2: a.p2.commutator() }
}

/// Linear map `g → gl(V)`: one `m × m` matrix per basis vector of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMaps {
    algebra_dim: usize,
    rep_dim: usize,
    mats: Vec<Matrix>,
}

impl RepMaps {
    pub fn zero(algebra_dim: usize, rep_dim: usize) -> Self {
        RepMaps { algebra_dim, rep_dim, mats: vec![Matrix::zeros(rep_dim, rep_dim); algebra_dim] }
    }

    pub fn from_matrices(rep_dim: usize, mats: Vec<Matrix>) -> Result<Self> {
        if mats.iter().any(|m| m.rows() != rep_dim || m.cols() != rep_dim) {
            return Err(Error::Dimension(format!("expected {rep_dim}x{rep_dim} matrices")));
        }
        Ok(RepMaps { algebra_dim: mats.len(), rep_dim, mats })
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn rep_dim(&self) -> usize {
        self.rep_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn of(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// Image of an arbitrary vector of `g`.
    pub fn at(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.rep_dim, self.rep_dim);
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = out.add(&self.mats[i].scale(c));
        }
        out
    }

    pub fn sub(&self, other: &RepMaps) -> RepMaps {
        RepMaps {
            algebra_dim: self.algebra_dim,
            rep_dim: self.rep_dim,
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }
}

/// `(ρ, μ, ρ̃, μ̃)` on a common `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleRep {
    pub rho: RepMaps,
    pub mu: RepMaps,
    pub rho_t: RepMaps,
    pub mu_t: RepMaps,
}

impl CompatibleRep {
    pub fn new(rho: RepMaps, mu: RepMaps, rho_t: RepMaps, mu_t: RepMaps) -> Result<Self> {
        let shape = (rho.algebra_dim, rho.rep_dim);
        if [&mu, &rho_t, &mu_t].iter().any(|r| (r.algebra_dim, r.rep_dim) != shape) {
            return Err(Error::Dimension("representation maps have different shapes".into()));
        }
        Ok(CompatibleRep { rho, mu, rho_t, mu_t })
    }

    pub fn zero(algebra_dim: usize, rep_dim: usize) -> Self {
        let z = RepMaps::zero(algebra_dim, rep_dim);
        CompatibleRep { rho: z.clone(), mu: z.clone(), rho_t: z.clone(), mu_t: z }
    }

    /// `(L, R, L̃, R̃)` on `g` itself.
    pub fn regular(a: &CompatiblePreLie) -> Self {
        let d = a.dim();
        let maps = |f: &dyn Fn(usize) -> Matrix| RepMaps { algebra_dim: d, rep_dim: d, mats: (0..d).map(f).collect() };
        CompatibleRep {
            rho: maps(&|i| a.p1.left(i)),
            mu: maps(&|i| a.p1.right(i)),
            rho_t: maps(&|i| a.p2.left(i)),
            mu_t: maps(&|i| a.p2.right(i)),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.rho.algebra_dim
    }

    pub fn rep_dim(&self) -> usize {
        self.rho.rep_dim
    }

    pub fn pair(&self, which: Which) -> (&RepMaps, &RepMaps) {
        match which {
            Which::First => (&self.rho, &self.mu),
            Which::Second => (&self.rho_t, &self.mu_t),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RepReport {
    pub checks: Vec<IdentityReport>,
}

impl RepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityReport::passed)
    }

    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .filter_map(|r| r.witness().map(|w| format!("{} fails at {w:?}", r.identity)))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).sub(&b.mul(a))
}

/// `ρ` is a representation of the commutator Lie algebra and
/// `μ(y)μ(x) − μ(x·y) = μ(y)ρ(x) − ρ(x)μ(y)`.
fn pre_lie_rep_checks(
    names: (&'static str, &'static str),
    p: &Product,
    rho: &RepMaps,
    mu: &RepMaps,
) -> [IdentityReport; 2] {
    let d = p.dim;
    let lie = IdentityReport::check(names.0, 2, d, |t| {
        let (x, y) = (t[0], t[1]);
        let bracket: Vec<Rational> = p.basis(x, y).iter().zip(p.basis(y, x)).map(|(a, b)| a - b).collect();
        rho.at(&bracket) == commutator(rho.of(x), rho.of(y))
    });
    let axiom = IdentityReport::check(names.1, 2, d, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = mu.of(y).mul(mu.of(x)).sub(&mu.at(p.basis(x, y)));
        let rhs = mu.of(y).mul(rho.of(x)).sub(&rho.of(x).mul(mu.of(y)));
        lhs == rhs
    });
    [lie, axiom]
}

pub fn validate_rep(a: &CompatiblePreLie, r: &CompatibleRep) -> Result<RepReport> {
    if r.algebra_dim() != a.dim() {
        return Err(Error::Dimension(format!(
            "representation of a {}-dimensional algebra used with dimension {}",
            r.algebra_dim(),
            a.dim()
        )));
    }
    let d = a.dim();
    let (dot, star) = (&a.p1, &a.p2);
    let (rho, mu, rt, mt) = (&r.rho, &r.mu, &r.rho_t, &r.mu_t);
    let [lie1, axiom1] = pre_lie_rep_checks(("rho Lie rep 1", "pre-Lie rep 1"), dot, rho, mu);
    let [lie2, axiom2] = pre_lie_rep_checks(("rho Lie rep 2", "pre-Lie rep 2"), star, rt, mt);
    let side1 = |x: usize, y: usize| {
        rho.at(star.basis(x, y))
            .add(&rt.at(dot.basis(x, y)))
            .sub(&rho.of(x).mul(rt.of(y)))
            .sub(&rt.of(x).mul(rho.of(y)))
    };
    let rep1 = IdentityReport::check("rep-1", 2, d, |t| side1(t[0], t[1]) == side1(t[1], t[0]));
    let rep2 = IdentityReport::check("rep-2", 2, d, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = mu
            .of(y)
            .mul(rt.of(x))
            .sub(&rho.of(x).mul(mt.of(y)))
            .sub(&mu.of(y).mul(mt.of(x)))
            .add(&mu.at(star.basis(x, y)));
        let rhs = rt
            .of(x)
            .mul(mu.of(y))
            .add(&mt.of(y).mul(mu.of(x)))
            .sub(&mt.of(y).mul(rho.of(x)))
            .sub(&mt.at(dot.basis(x, y)));
        lhs == rhs
    });
    Ok(RepReport { checks: vec![lie1, axiom1, lie2, axiom2, rep1, rep2] })
}

/// Product on `g ⊕ V`: `(x+u)∘(y+v) = x∘y + θ(x,y) + ρ(x)v + μ(y)u`.
/// Indices `0..d` are `g`, `d..d+m` are `V`.
pub fn extended_product(p: &Product, rho: &RepMaps, mu: &RepMaps, theta: Option<&Cochain>) -> Product {
    let (d, m) = (p.dim, rho.rep_dim);
    let mut out = Product::zero(d + m);
    for (i, j, k, c) in p.entries() {
        out.set(i, j, k, c.clone());
    }
    if let Some(theta) = theta {
        for i in 0..d {
            for j in 0..d {
                for (b, c) in theta.eval_basis(&[i, j]).into_iter().enumerate() {
                    out.set(i, j, d + b, c);
                }
            }
        }
    }
    for i in 0..d {
        for a in 0..m {
            for b in 0..m {
                // ρ(eᵢ) f_a and μ(eᵢ) f_a, read as columns
                out.set(i, d + a, d + b, rho.of(i)[(b, a)].clone());
                out.set(d + a, i, d + b, mu.of(i)[(b, a)].clone());
            }
        }
    }
    out
}

/// Semidirect product `g ⋉ V`.
pub fn semidirect(a: &CompatiblePreLie, r: &CompatibleRep) -> Result<CompatiblePreLie> {
    let report = validate_rep(a, r)?;
    if !report.passed() {
        return Err(Error::InvalidRepresentation(report.summary()));
    }
    Ok(CompatiblePreLie {
        p1: extended_product(&a.p1, &r.rho, &r.mu, None),
        p2: extended_product(&a.p2, &r.rho_t, &r.mu_t, None),
    })
}

/// `(ρ − μ, ρ̃ − μ̃)`, a representation of the sub-adjacent compatible Lie algebra.
pub fn induced_lie_rep(a: &CompatiblePreLie, r: &CompatibleRep) -> Result<(RepMaps, RepMaps)> {
    let report = validate_rep(a, r)?;
    if !report.passed() {
        return Err(Error::InvalidRepresentation(report.summary()));
    }
    Ok((r.rho.sub(&r.mu), r.rho_t.sub(&r.mu_t)))
}

/// `(V, ρ, μ)` represents the compatible Lie algebra `(g, [,], {,})`:
/// each map is a Lie representation of its bracket, and
/// `ρ({x,y}) + μ([x,y]) = [ρ(x),μ(y)] − [ρ(y),μ(x)]`.
pub fn validate_compatible_lie_rep(lie: &CompatibleLie, rho: &RepMaps, mu: &RepMaps) -> CompatibleLieReport {
    let d = lie.b1.dim;
    let lie_rep = |name, b: &Product, r: &RepMaps| {
        IdentityReport::check(name, 2, d, |t| r.at(b.basis(t[0], t[1])) == commutator(r.of(t[0]), r.of(t[1])))
    };
    let mixed = IdentityReport::check("compatible Lie rep", 2, d, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = rho.at(lie.b2.basis(x, y)).add(&mu.at(lie.b1.basis(x, y)));
        let rhs = commutator(rho.of(x), mu.of(y)).sub(&commutator(rho.of(y), mu.of(x)));
        lhs == rhs
    });
    CompatibleLieReport {
        checks: vec![lie_rep("Lie rep 1", &lie.b1, rho), lie_rep("Lie rep 2", &lie.b2, mu), mixed],
    }
}

/// Small algebras used throughout tests and examples.
pub mod fixtures {
    use super::*;
    use crate::linalg::rat;

    /// `e₂·e₁ = e₁`, `e₂·e₂ = e₂` (zero-based indices 1·0 = 0, 1·1 = 1).
    pub fn a2() -> Product {
        Product::zero(2).with(1, 0, 0, rat(1)).with(1, 1, 1, rat(1))
    }

    /// `a2` with the roles of the two basis vectors exchanged:
    /// `e₁·e₁ = e₁`, `e₁·e₂ = e₂`.
    pub fn a2_swapped() -> Product {
        Product::zero(2).with(0, 0, 0, rat(1)).with(0, 1, 1, rat(1))
    }

    /// `e₁·e₁ = e₂`, `e₂·e₂ = e₁`; not pre-Lie.
    pub fn non_pre_lie() -> Product {
        Product::zero(2).with(0, 0, 1, rat(1)).with(1, 1, 0, rat(1))
    }

    pub fn a2_with_zero() -> CompatiblePreLie {
        CompatiblePreLie { p1: a2(), p2: Product::zero(2) }
    }

    pub fn a2_pair() -> CompatiblePreLie {
        CompatiblePreLie { p1: a2(), p2: a2() }
    }

    pub fn a2_with_swapped() -> CompatiblePreLie {
        CompatiblePreLie { p1: a2(), p2: a2_swapped() }
    }

    /// `a2 ⊕ ⟨e₃⟩` with `e₃·e₃ = e₃`, paired with the zero product.
    pub fn a2_plus_idempotent() -> CompatiblePreLie {
        let mut p = Product::zero(3).with(1, 0, 0, rat(1)).with(1, 1, 1, rat(1));
        p.set(2, 2, 2, rat(1));
        CompatiblePreLie { p1: p, p2: Product::zero(3) }
    }

    /// All fixtures with their names, dimension at most three.
    pub fn all() -> Vec<(&'static str, CompatiblePreLie)> {
        vec![
            ("abelian-1", CompatiblePreLie::abelian(1)),
            ("abelian-2", CompatiblePreLie::abelian(2)),
            ("abelian-3", CompatiblePreLie::abelian(3)),
            ("a2+0", a2_with_zero()),
            ("a2+a2", a2_pair()),
            ("a2+a2swap", a2_with_swapped()),
            ("a2+idem", a2_plus_idempotent()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn pre_lie_examples() {
        assert!(validate_pre_lie(&Product::zero(2)).passed());
        assert!(validate_pre_lie(&a2()).passed());
        let bad = validate_pre_lie(&non_pre_lie());
        assert!(!bad.passed());
        assert!(bad.failures.contains(&vec![0, 1, 1]));
        assert!(!bad.failures.contains(&vec![0, 0, 0]));
        assert_eq!(bad.failures, pre_lie_failures_via_bracket(&non_pre_lie()));
    }

    #[test]
    fn compatible_examples() {
        let pi = a2();
        assert!(validate_compatible(&CompatiblePreLie { p1: pi.clone(), p2: Product::zero(2) }).passed());
        assert!(validate_compatible(&a2_pair()).passed());
        // exhaustive check decides the swapped pair: it is compatible
        assert!(validate_compatible(&a2_with_swapped()).passed());
        assert!(mc_equations(&a2_with_swapped()).passed());
        let bad = CompatiblePreLie { p1: a2(), p2: non_pre_lie() };
        assert!(!validate_compatible(&bad).passed());
        assert!(CompatiblePreLie::new(a2(), non_pre_lie()).is_err());
    }

    #[test]
    fn pencil_examples() {
        let a = a2_pair();
        assert_eq!(pencil(&a, &rat(1), &rat(0)), a.p1);
        assert_eq!(pencil(&a, &rat(0), &rat(1)), a.p2);
        let p = pencil(&a, &rat(2), &rat(3));
        assert_eq!(p, a2().scale(&rat(5)));
        assert!(validate_pre_lie(&p).passed());
    }

    #[test]
    fn sub_adjacent_examples() {
        let lie = sub_adjacent(&CompatiblePreLie::abelian(2));
        assert!(lie.b1.is_zero() && lie.b2.is_zero());
        let lie = sub_adjacent(&a2_with_zero());
        assert_eq!(lie.b1.basis(1, 0), &[rat(1), rat(0)]);
        assert_eq!(lie.b1.basis(0, 1), &[rat(-1), rat(0)]);
        assert!(lie.b2.is_zero());
        assert!(lie.validate().passed());
        let lie = sub_adjacent(&a2_pair());
        assert_eq!(lie.b1, lie.b2);
        assert!(lie.validate().passed());
    }

    #[test]
    fn representation_examples() {
        let a = a2_with_zero();
        assert!(validate_rep(&a, &CompatibleRep::zero(2, 3)).unwrap().passed());
        let reg = CompatibleRep::regular(&a);
        assert!(reg.rho_t.is_zero() && reg.mu_t.is_zero());
        assert!(validate_rep(&a, &reg).unwrap().passed());
        for (_, f) in all() {
            assert!(validate_rep(&f, &CompatibleRep::regular(&f)).unwrap().passed());
        }
        assert!(validate_rep(&a, &CompatibleRep::zero(3, 1)).is_err());
    }

    #[test]
    fn broken_representation_is_reported() {
        let a = a2_with_zero();
        let mut r = CompatibleRep::regular(&a);
        r.mu = RepMaps::from_matrices(2, vec![Matrix::identity(2), Matrix::zeros(2, 2)]).unwrap();
        let report = validate_rep(&a, &r).unwrap();
        assert!(!report.passed());
        assert!(semidirect(&a, &r).is_err());
    }

    #[test]
    fn semidirect_examples() {
        let s = semidirect(&CompatiblePreLie::abelian(2), &CompatibleRep::zero(2, 1)).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.p1.is_zero() && s.p2.is_zero());
        let a = a2_pair();
        let s = semidirect(&a, &CompatibleRep::regular(&a)).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(validate_compatible(&s).passed());
        let proj = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(is_compatible_homomorphism(&proj, &s, &a));
        let lie = sub_adjacent(&s);
        for u in 2..4 {
            for v in 2..4 {
                assert!(is_zero_vec(lie.b1.basis(u, v)) && is_zero_vec(lie.b2.basis(u, v)));
            }
        }
    }

    #[test]
    fn induced_lie_rep_examples() {
        let a = a2_with_zero();
        let (r1, r2) = induced_lie_rep(&a, &CompatibleRep::zero(2, 2)).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
        let reg = CompatibleRep::regular(&a);
        let (r1, r2) = induced_lie_rep(&a, &reg).unwrap();
        assert_eq!(r1, reg.rho.sub(&reg.mu));
        assert!(r2.is_zero());
        assert!(validate_compatible_lie_rep(&sub_adjacent(&a), &r1, &r2).passed());
    }

    #[test]
    fn product_cochain_round_trip() {
        let p = a2_swapped();
        assert_eq!(Product::from_cochain(&p.to_cochain()).unwrap(), p);
    }
}
