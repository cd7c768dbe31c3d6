//! Abelian extensions `0 → V → ĝ → g → 0` of a compatible pre-Lie algebra,
//! materialized on `g ⊕ V` (basis of `g` first).

use num_traits::Zero;

use crate::algebra::{
    extended_product, is_compatible_homomorphism, validate_compatible, validate_rep, CompatiblePreLie,
    CompatibleRep, Product, RepMaps,
};
use crate::cochain::Cochain;
use crate::cohomology::{CochainTuple, CohomologyReport, TotalComplex};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, unit_vec, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    base: CompatiblePreLie,
    fiber_dim: usize,
    total: CompatiblePreLie,
}

/// `(θ, θ̃) ∈ 𝔠²(g;V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocyclePair {
    pub theta: Cochain,
    pub theta_t: Cochain,
}

impl TwoCocyclePair {
    pub fn zero(base_dim: usize, fiber_dim: usize) -> Self {
        let z = Cochain::zero(2, base_dim, fiber_dim);
        TwoCocyclePair { theta: z.clone(), theta_t: z }
    }

    pub fn as_tuple(&self) -> CochainTuple {
        CochainTuple::new(vec![self.theta.clone(), self.theta_t.clone()]).expect("two arity-2 cochains")
    }

    pub fn from_tuple(t: &CochainTuple) -> Result<Self> {
        match t.parts() {
            [a, b] if a.arity() == 2 => Ok(TwoCocyclePair { theta: a.clone(), theta_t: b.clone() }),
            _ => Err(Error::Dimension("a 2-cocycle pair is a degree-2 tuple".into())),
        }
    }
}

/// Linear map `s: g → ĝ` given as a `(d+m) × d` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    matrix: Matrix,
}

impl Section {
    /// Checks `p∘s = Id`, i.e. the top `d × d` block is the identity.
    pub fn new(matrix: Matrix, base_dim: usize, fiber_dim: usize) -> Result<Self> {
        if matrix.rows() != base_dim + fiber_dim || matrix.cols() != base_dim {
            return Err(Error::Dimension(format!(
                "section must be {}x{}, got {}x{}",
                base_dim + fiber_dim,
                base_dim,
                matrix.rows(),
                matrix.cols()
            )));
        }
        for i in 0..base_dim {
            for j in 0..base_dim {
                let want = if i == j { 1 } else { 0 };
                if matrix[(i, j)] != Rational::from_integer(want.into()) {
                    return Err(Error::NotSection(format!("p∘s differs from the identity at ({i}, {j})")));
                }
            }
        }
        Ok(Section { matrix })
    }

    /// `s(x) = x`.
    pub fn canonical(base_dim: usize, fiber_dim: usize) -> Self {
        Section { matrix: Matrix::identity(base_dim).vstack(&Matrix::zeros(fiber_dim, base_dim)) }
    }

    /// `s + φ` for a linear `φ: g → V` (`m × d`).
    pub fn shifted(&self, phi: &Matrix) -> Result<Self> {
        let d = self.matrix.cols();
        let shift = Matrix::zeros(d, d).vstack(phi);
        if shift.rows() != self.matrix.rows() {
            return Err(Error::Dimension("shift has the wrong fiber dimension".into()));
        }
        Ok(Section { matrix: self.matrix.add(&shift) })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

impl AbelianExtension {
    /// Extension with the base read off the `g`-block of `total`. Checks that
    /// `total` is compatible pre-Lie, that `V` is an ideal with `V·V = V∗V = 0`,
    /// and hence that the projection onto `g` is a homomorphism.
    pub fn from_total(total: CompatiblePreLie, base_dim: usize, fiber_dim: usize) -> Result<Self> {
        let (d, m) = (base_dim, fiber_dim);
        if total.dim() != d + m {
            return Err(Error::Dimension(format!("total dimension {} is not {d} + {m}", total.dim())));
        }
        let report = validate_compatible(&total);
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report.summary()));
        }
        for (name, p) in [("first", &total.p1), ("second", &total.p2)] {
            for i in 0..d + m {
                for j in 0..d + m {
                    let v = p.basis(i, j);
                    let touches_v = i >= d || j >= d;
                    if (i >= d && j >= d && !is_zero_vec(v)) || (touches_v && !is_zero_vec(&v[..d])) {
                        return Err(Error::InvalidAlgebra(format!(
                            "{name} product: V is not an abelian ideal (basis pair {i}, {j})"
                        )));
                    }
                }
            }
        }
        let restrict = |p: &Product| {
            let mut b = Product::zero(d);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        b.set(i, j, k, p.get(i, j, k).clone());
                    }
                }
            }
            b
        };
        let base = CompatiblePreLie { p1: restrict(&total.p1), p2: restrict(&total.p2) };
        Ok(AbelianExtension { base, fiber_dim, total })
    }

    pub fn base(&self) -> &CompatiblePreLie {
        &self.base
    }

    pub fn total(&self) -> &CompatiblePreLie {
        &self.total
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    /// `ι: V → ĝ`.
    pub fn injection(&self) -> Matrix {
        let (d, m) = (self.base_dim(), self.fiber_dim);
        Matrix::zeros(d, m).vstack(&Matrix::identity(m))
    }

    /// `p: ĝ → g`.
    pub fn projection(&self) -> Matrix {
        let (d, m) = (self.base_dim(), self.fiber_dim);
        Matrix::identity(d).hstack(&Matrix::zeros(d, m))
    }
}

fn require_rep(a: &CompatiblePreLie, r: &CompatibleRep) -> Result<()> {
    let report = validate_rep(a, r)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidRepresentation(report.summary()))
    }
}

fn require_cocycle(a: &CompatiblePreLie, r: &CompatibleRep, c: &TwoCocyclePair) -> Result<TotalComplex> {
    let complex = TotalComplex::with_coefficients(a, r)?;
    let image = complex.differential(&c.as_tuple())?;
    if !image.is_zero() {
        return Err(Error::NotCocycle("∂(θ, θ̃) ≠ 0".into()));
    }
    Ok(complex)
}

/// `(x+u)·(y+v) = x·y + θ(x,y) + ρ(x)v + μ(y)u`, likewise for `∗`.
pub fn build_extension(a: &CompatiblePreLie, r: &CompatibleRep, c: &TwoCocyclePair) -> Result<AbelianExtension> {
    require_rep(a, r)?;
    require_cocycle(a, r, c)?;
    let total = CompatiblePreLie {
        p1: extended_product(&a.p1, &r.rho, &r.mu, Some(&c.theta)),
        p2: extended_product(&a.p2, &r.rho_t, &r.mu_t, Some(&c.theta_t)),
    };
    Ok(AbelianExtension { base: a.clone(), fiber_dim: r.rep_dim(), total })
}

/// `ρ(x)u = s(x)·u`, `μ(x)u = u·s(x)`, `θ(x,y) = s(x)·s(y) − s(x·y)`, and
/// the same for `∗`.
pub fn extract_from_section(ext: &AbelianExtension, s: &Section) -> Result<(CompatibleRep, TwoCocyclePair)> {
    let (d, m) = (ext.base_dim(), ext.fiber_dim);
    let s = Section::new(s.matrix.clone(), d, m)?;
    let sx: Vec<Vec<Rational>> = (0..d).map(|i| s.matrix.column(i)).collect();
    let fiber = |v: Vec<Rational>| v[d..].to_vec();
    let actions = |p: &Product| -> Result<(RepMaps, RepMaps)> {
        let mut rho = Vec::with_capacity(d);
        let mut mu = Vec::with_capacity(d);
        for x in &sx {
            let left: Vec<Vec<Rational>> = (0..m).map(|a| fiber(p.apply(x, &unit_vec(d + m, d + a)))).collect();
            let right: Vec<Vec<Rational>> = (0..m).map(|a| fiber(p.apply(&unit_vec(d + m, d + a), x))).collect();
            rho.push(Matrix::from_columns(m, &left));
            mu.push(Matrix::from_columns(m, &right));
        }
        Ok((RepMaps::from_matrices(m, rho)?, RepMaps::from_matrices(m, mu)?))
    };
    let cocycle = |big: &Product, small: &Product| {
        Cochain::from_fn(2, d, m, |k| {
            let (x, y) = (k.subset[0], k.last);
            let mut v = big.apply(&sx[x], &sx[y]);
            let image = s.matrix.mul_vec(small.basis(x, y));
            for (a, b) in v.iter_mut().zip(image) {
                *a -= b;
            }
            debug_assert!(is_zero_vec(&v[..d]), "θ takes values in V");
            fiber(v)
        })
    };
    let (rho, mu) = actions(&ext.total.p1)?;
    let (rho_t, mu_t) = actions(&ext.total.p2)?;
    let rep = CompatibleRep::new(rho, mu, rho_t, mu_t)?;
    let pair = TwoCocyclePair { theta: cocycle(&ext.total.p1, &ext.base.p1), theta_t: cocycle(&ext.total.p2, &ext.base.p2) };
    Ok((rep, pair))
}

/// Cocycle of `ext` for the fixed representation `r`; an extension inducing
/// a different representation is rejected.
pub fn extension_class(ext: &AbelianExtension, s: &Section, r: &CompatibleRep) -> Result<TwoCocyclePair> {
    let (induced, pair) = extract_from_section(ext, s)?;
    if &induced != r {
        return Err(Error::InvalidRepresentation("the extension induces a different representation".into()));
    }
    Ok(pair)
}

/// `φ: g → V` with `θ₁ = θ₂ + ∂φ` and `θ̃₁ = θ̃₂ + ∂̃φ`, solved as one linear
/// system; the canonical solution has free variables zero.
pub fn cohomologous_check(
    a: &CompatiblePreLie,
    r: &CompatibleRep,
    c1: &TwoCocyclePair,
    c2: &TwoCocyclePair,
) -> Result<Option<Matrix>> {
    require_rep(a, r)?;
    let complex = require_cocycle(a, r, c1)?;
    require_cocycle(a, r, c2)?;
    let diff = c1.as_tuple().sub(&c2.as_tuple())?;
    Ok(complex.solve_primitive(&diff).map(|phi| phi.to_matrix()))
}

#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    /// `ζ(x+u) = x + u + φ(x)` on `g ⊕ V`.
    pub zeta: Matrix,
    pub is_homomorphism: bool,
    pub identity_on_fiber: bool,
    pub commutes_with_projection: bool,
    pub determinant: Rational,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.is_homomorphism && self.identity_on_fiber && self.commutes_with_projection && !self.determinant.is_zero()
    }
}

/// `ζ` from the extension built on `c1` to the one built on `c2`.
pub fn build_isomorphism(
    a: &CompatiblePreLie,
    r: &CompatibleRep,
    c1: &TwoCocyclePair,
    c2: &TwoCocyclePair,
    phi: &Matrix,
) -> Result<IsomorphismReport> {
    let (d, m) = (a.dim(), r.rep_dim());
    if phi.rows() != m || phi.cols() != d {
        return Err(Error::Dimension(format!("φ must be {m}x{d}")));
    }
    let complex = TotalComplex::with_coefficients(a, r)?;
    let boundary = complex.differential(&CochainTuple::new(vec![Cochain::from_linear_map(phi)])?)?;
    if boundary != c1.as_tuple().sub(&c2.as_tuple())? {
        return Err(Error::NotWitness("θ₁ − θ₂ is not ∂φ".into()));
    }
    let e1 = build_extension(a, r, c1)?;
    let e2 = build_extension(a, r, c2)?;
    let top = Matrix::identity(d).hstack(&Matrix::zeros(d, m));
    let bottom = phi.hstack(&Matrix::identity(m));
    let zeta = top.vstack(&bottom);
    let is_homomorphism = is_compatible_homomorphism(&zeta, &e1.total, &e2.total);
    let identity_on_fiber = zeta.mul(&e1.injection()) == e2.injection();
    let commutes_with_projection = e2.projection().mul(&zeta) == e1.projection();
    let determinant = zeta.determinant();
    Ok(IsomorphismReport { zeta, is_homomorphism, identity_on_fiber, commutes_with_projection, determinant })
}

/// `𝓗²(g;V)`, whose classes label the extensions inducing `r`.
pub fn classify(a: &CompatiblePreLie, r: &CompatibleRep) -> Result<CohomologyReport> {
    Ok(TotalComplex::with_coefficients(a, r)?.cohomology(2))
}
