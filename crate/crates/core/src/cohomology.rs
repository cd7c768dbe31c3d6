//! Coboundary operators and the total complexes `𝔠ⁿ = Cⁿ ⊕ ⋯ ⊕ Cⁿ`
//! (`n` copies) with coefficients in the algebra itself or in a
//! representation, and their cohomology computed by exact rank.

use num_traits::{One, Zero};

use crate::algebra::{validate_rep, CompatiblePreLie, CompatibleRep, Product, RepMaps, Which};
use crate::cochain::{mn_bracket, space_dim, Cochain};
use crate::error::{Error, Result};
use crate::lift::{lift_cochain, lift_structure, restrict_to_base};
use crate::linalg::{add_assign_scaled, zero_vec, Matrix, Rational};

fn sign_of(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn check_module(p: &Product, rho: &RepMaps, mu: &RepMaps, f: &Cochain) -> Result<()> {
    let d = p.dim();
    if rho.algebra_dim() != d || mu.algebra_dim() != d || rho.rep_dim() != mu.rep_dim() {
        return Err(Error::Dimension("representation maps do not match the algebra".into()));
    }
    if f.source_dim() != d || f.target_dim() != rho.rep_dim() {
        return Err(Error::Dimension(format!(
            "cochain {}→{} on an algebra of dimension {} with a {}-dimensional module",
            f.source_dim(),
            f.target_dim(),
            d,
            rho.rep_dim()
        )));
    }
    Ok(())
}

/// `∂f` by the explicit four-sum formula, on arguments `x₀ … xₙ`:
///
/// ```text
///   Σᵢ (−1)ⁱ ρ(xᵢ) f(x₀…x̂ᵢ…xₙ)
/// + Σᵢ (−1)ⁱ μ(xₙ) f(x₀…x̂ᵢ…xₙ₋₁, xᵢ)
/// − Σᵢ (−1)ⁱ f(x₀…x̂ᵢ…xₙ₋₁, xᵢ·xₙ)
/// + Σ_{i<j<n} (−1)^{i+j} f([xᵢ,xⱼ], x₀…x̂ᵢ…x̂ⱼ…xₙ)
/// ```
pub fn partial_single(p: &Product, rho: &RepMaps, mu: &RepMaps, f: &Cochain) -> Result<Cochain> {
    check_module(p, rho, mu, f)?;
    let n = f.arity();
    let (d, m) = (p.dim(), rho.rep_dim());
    let bracket = p.commutator();
    Ok(Cochain::from_fn(n + 1, d, m, |key| {
        let x: Vec<usize> = key.subset.iter().copied().chain([key.last]).collect();
        let mut out = zero_vec(m);
        let mut args = Vec::with_capacity(n);
        for i in 0..n {
            let s = sign_of(i);
            args.clear();
            args.extend(x.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v));
            let val = f.eval_basis(&args);
            add_assign_scaled(&mut out, &s, &rho.of(x[i]).mul_vec(&val));

            args.clear();
            args.extend(x[..n].iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v));
            args.push(x[i]);
            let val = f.eval_basis(&args);
            add_assign_scaled(&mut out, &s, &mu.of(x[n]).mul_vec(&val));

            let prod = p.basis(x[i], x[n]);
            for (c, w) in prod.iter().enumerate().filter(|(_, w)| !w.is_zero()) {
                *args.last_mut().expect("n ≥ 1") = c;
                add_assign_scaled(&mut out, &-(&s * w), &f.eval_basis(&args));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let s = sign_of(i + j);
                let br = bracket.basis(x[i], x[j]);
                for (c, w) in br.iter().enumerate().filter(|(_, w)| !w.is_zero()) {
                    args.clear();
                    args.push(c);
                    args.extend(x.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &v)| v));
                    add_assign_scaled(&mut out, &(&s * w), &f.eval_basis(&args));
                }
            }
        }
        out
    }))
}

/// `∂f = (−1)ⁿ⁻¹ [π+ρ+μ, f̂]^{MN}` computed on `g ⊕ V` and restricted back
/// to `g`-arguments.
pub fn partial_single_via_lift(p: &Product, rho: &RepMaps, mu: &RepMaps, f: &Cochain) -> Result<Cochain> {
    check_module(p, rho, mu, f)?;
    let big = mn_bracket(&lift_structure(p, rho, mu), &lift_cochain(f))?;
    Ok(restrict_to_base(&big, p.dim()).scale(&sign_of(f.arity() - 1)))
}

fn check_end(p: &Product, f: &Cochain) -> Result<()> {
    if f.source_dim() != p.dim() || f.target_dim() != p.dim() {
        return Err(Error::Dimension(format!(
            "cochain {}→{} is not End-valued on an algebra of dimension {}",
            f.source_dim(),
            f.target_dim(),
            p.dim()
        )));
    }
    Ok(())
}

/// `δ_π f = (−1)ⁿ⁻¹ [π, f]^{MN}`.
pub fn delta_single(p: &Product, f: &Cochain) -> Result<Cochain> {
    check_end(p, f)?;
    Ok(mn_bracket(&p.to_cochain(), f)?.scale(&sign_of(f.arity() - 1)))
}

/// `δ_π` by the explicit formula, i.e. `∂` for the regular representation.
pub fn delta_single_explicit(p: &Product, f: &Cochain) -> Result<Cochain> {
    check_end(p, f)?;
    let d = p.dim();
    let l = RepMaps::from_matrices(d, (0..d).map(|i| p.left(i)).collect())?;
    let r = RepMaps::from_matrices(d, (0..d).map(|i| p.right(i)).collect())?;
    partial_single(p, &l, &r, f)
}

/// Element `(f₁, …, fₙ)` of `𝔠ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTuple {
    parts: Vec<Cochain>,
}

impl CochainTuple {
    pub fn new(parts: Vec<Cochain>) -> Result<Self> {
        let n = parts.len();
        let Some(first) = parts.first() else {
            return Err(Error::Dimension("a cochain tuple has at least one part".into()));
        };
        let shape = (first.source_dim(), first.target_dim());
        if parts.iter().any(|c| c.arity() != n || (c.source_dim(), c.target_dim()) != shape) {
            return Err(Error::Dimension(format!("a degree-{n} tuple needs {n} cochains of arity {n} on one space")));
        }
        Ok(CochainTuple { parts })
    }

    pub fn zero(n: usize, source_dim: usize, target_dim: usize) -> Self {
        CochainTuple { parts: vec![Cochain::zero(n, source_dim, target_dim); n] }
    }

    pub fn degree(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Cochain] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Cochain> {
        self.parts
    }

    pub fn source_dim(&self) -> usize {
        self.parts[0].source_dim()
    }

    pub fn target_dim(&self) -> usize {
        self.parts[0].target_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Cochain::is_zero)
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.parts.iter().flat_map(Cochain::flatten).collect()
    }

    pub fn from_flat(n: usize, source_dim: usize, target_dim: usize, flat: &[Rational]) -> Self {
        let s = space_dim(n, source_dim, target_dim);
        assert_eq!(flat.len(), n * s, "flat length");
        let parts = (0..n)
            .map(|i| Cochain::from_flat(n, source_dim, target_dim, &flat[i * s..(i + 1) * s]))
            .collect();
        CochainTuple { parts }
    }

    pub fn add(&self, other: &CochainTuple) -> Result<CochainTuple> {
        if self.degree() != other.degree() {
            return Err(Error::Dimension("tuples of different degree".into()));
        }
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(CochainTuple { parts })
    }

    pub fn sub(&self, other: &CochainTuple) -> Result<CochainTuple> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> CochainTuple {
        CochainTuple { parts: self.parts.iter().map(|p| p.scale(c)).collect() }
    }
}

/// `(D₁, D₂)` on single cochains → `Dⁿ(f₁…fₙ) = (D₁f₁, …, D₂f_{i−1} + D₁fᵢ, …, D₂fₙ)`.
fn total(
    t: &CochainTuple,
    mut d1: impl FnMut(&Cochain) -> Result<Cochain>,
    mut d2: impl FnMut(&Cochain) -> Result<Cochain>,
) -> Result<CochainTuple> {
    let n = t.degree();
    let first: Vec<Cochain> = t.parts.iter().map(&mut d1).collect::<Result<_>>()?;
    let second: Vec<Cochain> = t.parts.iter().map(&mut d2).collect::<Result<_>>()?;
    let mut parts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let part = match (first.get(i), i.checked_sub(1).map(|j| &second[j])) {
            (Some(a), Some(b)) => a.add(b)?,
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => unreachable!("n ≥ 1"),
        };
        parts.push(part);
    }
    Ok(CochainTuple { parts })
}

pub fn delta_total(a: &CompatiblePreLie, t: &CochainTuple) -> Result<CochainTuple> {
    total(t, |f| delta_single(&a.p1, f), |f| delta_single(&a.p2, f))
}

pub fn partial_total(a: &CompatiblePreLie, r: &CompatibleRep, t: &CochainTuple) -> Result<CochainTuple> {
    total(
        t,
        |f| partial_single(&a.p1, &r.rho, &r.mu, f),
        |f| partial_single(&a.p2, &r.rho_t, &r.mu_t, f),
    )
}

#[derive(Clone, Debug)]
enum Coefficients {
    Adjoint,
    Module(CompatibleRep),
}

/// The total complex of a compatible pre-Lie algebra, with coefficients in
/// itself (`δ`) or in a representation (`∂`).
#[derive(Clone, Debug)]
pub struct TotalComplex {
    algebra: CompatiblePreLie,
    coefficients: Coefficients,
}

/// Dimensions and bases of `Zⁿ`, `Bⁿ` and `𝓗ⁿ = Zⁿ/Bⁿ`.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
    pub cocycle_basis: Vec<CochainTuple>,
    pub coboundary_basis: Vec<CochainTuple>,
    /// Cocycles whose classes form a basis of `𝓗ⁿ`.
    pub representatives: Vec<CochainTuple>,
}

impl CohomologyReport {
    /// Coordinates of the class of a cocycle `z` with respect to the
    /// representatives; `None` when `z` is not a cocycle of this degree.
    pub fn class_coordinates(&self, z: &CochainTuple) -> Option<Vec<Rational>> {
        if z.degree() != self.degree || self.dim_cochains == 0 {
            return if z.is_zero() { Some(vec![]) } else { None };
        }
        let cols: Vec<Vec<Rational>> =
            self.coboundary_basis.iter().chain(&self.representatives).map(CochainTuple::flatten).collect();
        let x = Matrix::from_columns(self.dim_cochains, &cols).solve(&z.flatten())?;
        Some(x[self.coboundary_basis.len()..].to_vec())
    }

    /// True when `z` is a coboundary.
    pub fn is_coboundary(&self, z: &CochainTuple) -> bool {
        self.class_coordinates(z).is_some_and(|c| c.iter().all(Zero::is_zero))
    }
}

impl TotalComplex {
    pub fn adjoint(a: &CompatiblePreLie) -> Self {
        TotalComplex { algebra: a.clone(), coefficients: Coefficients::Adjoint }
    }

    pub fn with_coefficients(a: &CompatiblePreLie, r: &CompatibleRep) -> Result<Self> {
        let report = validate_rep(a, r)?;
        if !report.passed() {
            return Err(Error::InvalidRepresentation(report.summary()));
        }
        Ok(TotalComplex { algebra: a.clone(), coefficients: Coefficients::Module(r.clone()) })
    }

    pub fn algebra(&self) -> &CompatiblePreLie {
        &self.algebra
    }

    pub fn source_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn target_dim(&self) -> usize {
        match &self.coefficients {
            Coefficients::Adjoint => self.algebra.dim(),
            Coefficients::Module(r) => r.rep_dim(),
        }
    }

    /// `δ_{πᵢ}` or `∂_{πᵢ+ρ+μ}` on a single cochain.
    pub fn single(&self, which: Which, f: &Cochain) -> Result<Cochain> {
        let p = self.algebra.product(which);
        match &self.coefficients {
            Coefficients::Adjoint => delta_single(p, f),
            Coefficients::Module(r) => {
                let (rho, mu) = r.pair(which);
                partial_single(p, rho, mu, f)
            }
        }
    }

    pub fn differential(&self, t: &CochainTuple) -> Result<CochainTuple> {
        if (t.source_dim(), t.target_dim()) != (self.source_dim(), self.target_dim()) {
            return Err(Error::Dimension("cochain tuple does not live on this complex".into()));
        }
        total(t, |f| self.single(Which::First, f), |f| self.single(Which::Second, f))
    }

    /// Single-cochain space dimension `dim Cⁿ`.
    pub fn single_dim(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            space_dim(n, self.source_dim(), self.target_dim())
        }
    }

    /// `dim 𝔠ⁿ = n · dim Cⁿ`.
    pub fn cochain_dim(&self, n: usize) -> usize {
        n * self.single_dim(n)
    }

    /// Matrix of `Dⁿ: 𝔠ⁿ → 𝔠ⁿ⁺¹` in the flattened tuple coordinates.
    pub fn differential_matrix(&self, n: usize) -> Matrix {
        let (src, tgt) = (self.cochain_dim(n), self.cochain_dim(n + 1));
        let mut out = Matrix::zeros(tgt, src);
        if n == 0 {
            return out;
        }
        let (s, s1) = (self.single_dim(n), self.single_dim(n + 1));
        let (d, m) = (self.source_dim(), self.target_dim());
        for b in 0..s {
            let mut e = zero_vec(s);
            e[b] = Rational::one();
            let f = Cochain::from_flat(n, d, m, &e);
            let images = [Which::First, Which::Second].map(|w| self.single(w, &f).expect("shapes agree").flatten());
            for part in 0..n {
                let col = part * s + b;
                for (offset, img) in [(part, &images[0]), (part + 1, &images[1])] {
                    for (r, v) in img.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[(offset * s1 + r, col)] = v.clone();
                    }
                }
            }
        }
        out
    }

    pub fn cohomology(&self, n: usize) -> CohomologyReport {
        let (d, m) = (self.source_dim(), self.target_dim());
        let dim = self.cochain_dim(n);
        if dim == 0 {
            return CohomologyReport {
                degree: n,
                dim_cochains: 0,
                dim_cocycles: 0,
                dim_coboundaries: 0,
                dim_h: 0,
                cocycle_basis: vec![],
                coboundary_basis: vec![],
                representatives: vec![],
            };
        }
        let tuple = |v: &[Rational]| CochainTuple::from_flat(n, d, m, v);
        let cocycles = self.differential_matrix(n).kernel_basis();
        // 𝔠⁰ = 0, so B¹ = 0
        let incoming = self.differential_matrix(n - 1);
        let image: Vec<Vec<Rational>> =
            incoming.pivot_columns().into_iter().map(|c| incoming.column(c)).collect();
        let mut stacked = image.clone();
        stacked.extend(cocycles.iter().cloned());
        let reps: Vec<usize> = Matrix::from_columns(dim, &stacked)
            .pivot_columns()
            .into_iter()
            .filter(|&c| c >= image.len())
            .map(|c| c - image.len())
            .collect();
        CohomologyReport {
            degree: n,
            dim_cochains: dim,
            dim_cocycles: cocycles.len(),
            dim_coboundaries: image.len(),
            dim_h: cocycles.len() - image.len(),
            representatives: reps.iter().map(|&i| tuple(&cocycles[i])).collect(),
            cocycle_basis: cocycles.iter().map(|v| tuple(v)).collect(),
            coboundary_basis: image.iter().map(|v| tuple(v)).collect(),
        }
    }

    /// Solves `D¹φ = t` for `φ ∈ 𝔠¹ = C¹`; canonical solution with free
    /// variables zero.
    pub fn solve_primitive(&self, t: &CochainTuple) -> Option<Cochain> {
        if t.degree() != 2 {
            return None;
        }
        let (d, m) = (self.source_dim(), self.target_dim());
        let x = self.differential_matrix(1).solve(&t.flatten())?;
        Some(Cochain::from_flat(1, d, m, &x))
    }
}
