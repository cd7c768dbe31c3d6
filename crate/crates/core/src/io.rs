//! JSON documents. Indices in files are one-based; rationals are written as
//! strings such as `"3"` or `"-2/5"` (plain integers are accepted on input).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{CompatiblePreLie, CompatibleRep, Product, RepMaps};
use crate::cochain::{BasisKey, Cochain};
use crate::cohomology::{CochainTuple, CohomologyReport};
use crate::deformation::FormalDeformation;
use crate::error::{Error, Result};
use crate::extension::{AbelianExtension, TwoCocyclePair};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

impl Scalar {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Scalar::Text(s) => parse_rational(s),
            Scalar::Int(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

impl From<&Rational> for Scalar {
    fn from(r: &Rational) -> Self {
        Scalar::Text(format_rational(r))
    }
}

fn rationals(values: &[Scalar], what: &str) -> Result<Vec<Rational>> {
    values
        .iter()
        .map(|s| s.to_rational().map_err(|e| Error::Parse(format!("{what}: {e}"))))
        .collect()
}

fn scalars(values: &[Rational]) -> Vec<Scalar> {
    values.iter().map(Scalar::from).collect()
}

/// One-based index check.
fn index(i: usize, dim: usize, what: &str) -> Result<usize> {
    if i == 0 || i > dim {
        return Err(Error::Parse(format!("{what} = {i} is outside 1..={dim}")));
    }
    Ok(i - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub product1: Vec<ProductEntry>,
    #[serde(default)]
    pub product2: Vec<ProductEntry>,
}

pub type MatrixJson = Vec<Vec<Scalar>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub dim_v: usize,
    pub rho: Vec<MatrixJson>,
    pub mu: Vec<MatrixJson>,
    pub rho_tilde: Vec<MatrixJson>,
    pub mu_tilde: Vec<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainEntry {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub j: usize,
    pub value: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub arity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_dim: Option<usize>,
    pub entries: Vec<CochainEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalJson {
    pub order: usize,
    pub terms1: Vec<CochainJson>,
    pub terms2: Vec<CochainJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<AlgebraJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub theta: CochainJson,
    pub theta_tilde: CochainJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    #[serde(flatten)]
    pub total: AlgebraJson,
    pub base_dim: usize,
    pub fiber_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
    pub representatives: Vec<Vec<CochainJson>>,
}

pub fn product_from_json(entries: &[ProductEntry], dim: usize, field: &str) -> Result<Product> {
    let mut p = Product::zero(dim);
    let mut seen = BTreeSet::new();
    for (n, e) in entries.iter().enumerate() {
        let at = format!("{field}[{n}]");
        let i = index(e.i, dim, &format!("{at}.i"))?;
        let j = index(e.j, dim, &format!("{at}.j"))?;
        let k = index(e.k, dim, &format!("{at}.k"))?;
        if !seen.insert((i, j, k)) {
            return Err(Error::Parse(format!("{at}: repeated coefficient ({}, {}, {})", e.i, e.j, e.k)));
        }
        let c = e.c.to_rational().map_err(|err| Error::Parse(format!("{at}.c: {err}")))?;
        p.set(i, j, k, c);
    }
    Ok(p)
}

pub fn product_to_json(p: &Product) -> Vec<ProductEntry> {
    p.entries()
        .map(|(i, j, k, c)| ProductEntry { i: i + 1, j: j + 1, k: k + 1, c: c.into() })
        .collect()
}

/// The pair of products, axioms unchecked.
pub fn algebra_from_json(a: &AlgebraJson) -> Result<CompatiblePreLie> {
    let p1 = product_from_json(&a.product1, a.dim, "product1")?;
    let p2 = product_from_json(&a.product2, a.dim, "product2")?;
    CompatiblePreLie::candidate(p1, p2)
}

pub fn algebra_to_json(a: &CompatiblePreLie) -> AlgebraJson {
    AlgebraJson { dim: a.dim(), product1: product_to_json(&a.p1), product2: product_to_json(&a.p2) }
}

pub fn matrix_from_json(m: &MatrixJson, what: &str) -> Result<Matrix> {
    let rows = m
        .iter()
        .enumerate()
        .map(|(r, row)| rationals(row, &format!("{what}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    m.to_rows().iter().map(|r| scalars(r)).collect()
}

fn square(m: &MatrixJson, size: usize, what: &str) -> Result<Matrix> {
    let mat = matrix_from_json(m, what)?;
    if mat.rows() != size || mat.cols() != size {
        return Err(Error::Dimension(format!("{what} is {}x{}, expected {size}x{size}", mat.rows(), mat.cols())));
    }
    Ok(mat)
}

pub fn rep_from_json(r: &RepJson, algebra_dim: usize) -> Result<CompatibleRep> {
    let maps = |mats: &[MatrixJson], field: &str| -> Result<RepMaps> {
        if mats.len() != algebra_dim {
            return Err(Error::Dimension(format!("{field} has {} matrices, expected {algebra_dim}", mats.len())));
        }
        let ms = mats
            .iter()
            .enumerate()
            .map(|(i, m)| square(m, r.dim_v, &format!("{field}[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        RepMaps::from_matrices(r.dim_v, ms)
    };
    CompatibleRep::new(maps(&r.rho, "rho")?, maps(&r.mu, "mu")?, maps(&r.rho_tilde, "rho_tilde")?, maps(&r.mu_tilde, "mu_tilde")?)
}

pub fn rep_to_json(r: &CompatibleRep) -> RepJson {
    let maps = |m: &RepMaps| m.matrices().iter().map(matrix_to_json).collect();
    RepJson { dim_v: r.rep_dim(), rho: maps(&r.rho), mu: maps(&r.mu), rho_tilde: maps(&r.rho_t), mu_tilde: maps(&r.mu_t) }
}

/// Dimensions stored in the document win over the ones implied by context;
/// a mismatch is an error.
pub fn cochain_from_json(c: &CochainJson, source_dim: usize, target_dim: usize, what: &str) -> Result<Cochain> {
    for (stored, expected, name) in [(c.source_dim, source_dim, "source_dim"), (c.target_dim, target_dim, "target_dim")] {
        if let Some(s) = stored {
            if s != expected {
                return Err(Error::Dimension(format!("{what}.{name} = {s}, expected {expected}")));
            }
        }
    }
    if c.arity == 0 {
        return Err(Error::Parse(format!("{what}.arity must be at least 1")));
    }
    let mut out = Cochain::zero(c.arity, source_dim, target_dim);
    let mut seen = BTreeSet::new();
    for (n, e) in c.entries.iter().enumerate() {
        let at = format!("{what}.entries[{n}]");
        if e.s.len() + 1 != c.arity {
            return Err(Error::Parse(format!("{at}.S has {} indices, arity {} needs {}", e.s.len(), c.arity, c.arity - 1)));
        }
        let subset = e.s.iter().map(|&i| index(i, source_dim, &format!("{at}.S"))).collect::<Result<Vec<_>>>()?;
        if !subset.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{at}.S must be strictly increasing")));
        }
        let last = index(e.j, source_dim, &format!("{at}.j"))?;
        let value = rationals(&e.value, &format!("{at}.value"))?;
        if value.len() != target_dim {
            return Err(Error::Dimension(format!("{at}.value has length {}, expected {target_dim}", value.len())));
        }
        let key = BasisKey::new(subset, last);
        if !seen.insert(key.clone()) {
            return Err(Error::Parse(format!("{at}: repeated basis key")));
        }
        out.set(key, value)?;
    }
    Ok(out)
}

pub fn cochain_to_json(c: &Cochain) -> CochainJson {
    CochainJson {
        arity: c.arity(),
        source_dim: Some(c.source_dim()),
        target_dim: Some(c.target_dim()),
        entries: c
            .entries()
            .map(|(k, v)| CochainEntry { s: k.subset.iter().map(|i| i + 1).collect(), j: k.last + 1, value: scalars(v) })
            .collect(),
    }
}

pub fn tuple_to_json(t: &CochainTuple) -> Vec<CochainJson> {
    t.parts().iter().map(cochain_to_json).collect()
}

pub fn tuple_from_json(parts: &[CochainJson], source_dim: usize, target_dim: usize, what: &str) -> Result<CochainTuple> {
    let cs = parts
        .iter()
        .enumerate()
        .map(|(i, c)| cochain_from_json(c, source_dim, target_dim, &format!("{what}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    CochainTuple::new(cs)
}

fn product_cochain(c: &CochainJson, dim: usize, what: &str) -> Result<Product> {
    if c.arity != 2 {
        return Err(Error::Parse(format!("{what}.arity must be 2")));
    }
    Product::from_cochain(&cochain_from_json(c, dim, dim, what)?)
}

pub fn product_from_cochain_json(c: &CochainJson, dim: usize, what: &str) -> Result<Product> {
    product_cochain(c, dim, what)
}

pub fn formal_from_json(f: &FormalJson, base: CompatiblePreLie) -> Result<FormalDeformation> {
    if f.terms1.len() != f.order || f.terms2.len() != f.order {
        return Err(Error::Parse(format!(
            "order {} but {} and {} terms",
            f.order,
            f.terms1.len(),
            f.terms2.len()
        )));
    }
    let d = base.dim();
    let t1 = f.terms1.iter().enumerate().map(|(i, c)| product_cochain(c, d, &format!("terms1[{i}]"))).collect::<Result<_>>()?;
    let t2 = f.terms2.iter().enumerate().map(|(i, c)| product_cochain(c, d, &format!("terms2[{i}]"))).collect::<Result<_>>()?;
    FormalDeformation::new(base, t1, t2)
}

pub fn formal_to_json(fd: &FormalDeformation, with_base: bool) -> FormalJson {
    FormalJson {
        order: fd.order(),
        terms1: fd.terms1.iter().map(|p| cochain_to_json(&p.to_cochain())).collect(),
        terms2: fd.terms2.iter().map(|p| cochain_to_json(&p.to_cochain())).collect(),
        base: with_base.then(|| algebra_to_json(&fd.base)),
    }
}

pub fn cocycle_from_json(c: &CocycleJson, base_dim: usize, fiber_dim: usize) -> Result<TwoCocyclePair> {
    let theta = cochain_from_json(&c.theta, base_dim, fiber_dim, "theta")?;
    let theta_t = cochain_from_json(&c.theta_tilde, base_dim, fiber_dim, "theta_tilde")?;
    if theta.arity() != 2 || theta_t.arity() != 2 {
        return Err(Error::Parse("cocycle components have arity 2".into()));
    }
    Ok(TwoCocyclePair { theta, theta_t })
}

pub fn cocycle_to_json(c: &TwoCocyclePair) -> CocycleJson {
    CocycleJson { theta: cochain_to_json(&c.theta), theta_tilde: cochain_to_json(&c.theta_t) }
}

pub fn extension_from_json(e: &ExtensionJson) -> Result<AbelianExtension> {
    let total = algebra_from_json(&e.total)?;
    AbelianExtension::from_total(total, e.base_dim, e.fiber_dim)
}

pub fn extension_to_json(e: &AbelianExtension) -> ExtensionJson {
    ExtensionJson { total: algebra_to_json(e.total()), base_dim: e.base_dim(), fiber_dim: e.fiber_dim() }
}

pub fn cohomology_to_json(r: &CohomologyReport) -> CohomologyJson {
    CohomologyJson {
        degree: r.degree,
        dim_cochains: r.dim_cochains,
        dim_cocycles: r.dim_cocycles,
        dim_coboundaries: r.dim_coboundaries,
        dim_h: r.dim_h,
        representatives: r.representatives.iter().map(tuple_to_json).collect(),
    }
}
