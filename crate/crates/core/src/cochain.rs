//! Cochains `Cⁿ(g;W) = Hom(∧ⁿ⁻¹g ⊗ g, W)` stored on a canonical basis, the
//! unshuffle enumeration and the Matsushima–Nijenhuis circle product and
//! bracket.
//!
//! Indices are zero-based. A basis key is a strictly increasing tuple `S` of
//! `n−1` source indices (the alternating slots) plus one index `j` for the
//! last slot. Keys are ordered colexicographically on `S`, then by `j`; this
//! is also the order used when a cochain is flattened into a coefficient
//! vector (key-major, target component minor).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{add_assign_scaled, is_zero_vec, zero_vec, Matrix, Rational};

/// Basis element `e_{S₁} ∧ … ∧ e_{S_{n−1}} ⊗ e_j` of `∧ⁿ⁻¹g ⊗ g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisKey {
    pub subset: Vec<usize>,
    pub last: usize,
}

impl BasisKey {
    pub fn new(subset: Vec<usize>, last: usize) -> Self {
        BasisKey { subset, last }
    }
}

fn colex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        colex(&self.subset, &other.subset).then(self.last.cmp(&other.last))
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n`, in colexicographic order.
pub fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        // Colex order: all subsets with maximum < m come before those with max m.
        let mut out = Vec::new();
        for max in k - 1..n {
            for mut s in go(max, k - 1) {
                s.push(max);
                out.push(s);
            }
        }
        out
    }
    if k > n {
        return Vec::new();
    }
    go(n, k)
}

/// Canonical basis keys of `Cⁿ` on a `source_dim`-dimensional space.
pub fn basis_keys(arity: usize, source_dim: usize) -> Vec<BasisKey> {
    assert!(arity >= 1, "cochain arity starts at 1");
    subsets_colex(source_dim, arity - 1)
        .into_iter()
        .flat_map(|s| (0..source_dim).map(move |j| BasisKey::new(s.clone(), j)))
        .collect()
}

/// `dim Cⁿ(g;W) = C(d, n−1) · d · m`.
pub fn space_dim(arity: usize, source_dim: usize, target_dim: usize) -> usize {
    binomial(source_dim, arity - 1) * source_dim * target_dim
}

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    Some(sign)
}

/// A permutation that is increasing on each block of a declared split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unshuffle {
    /// `perm[k]` is the (zero-based) image `σ(k+1) − 1`.
    pub perm: Vec<usize>,
    pub sign: i32,
}

pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every `(i₁,…,i_k)`-unshuffle of `{1..Σiₖ}`. Blocks of length zero
/// contribute nothing, so `(0, n)` yields only the identity.
pub fn unshuffles(parts: &[usize]) -> Vec<Unshuffle> {
    fn fill(parts: &[usize], remaining: Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&len, rest)) = parts.split_first() else {
            out.push(prefix.clone());
            return;
        };
        for chosen in subsets_colex(remaining.len(), len) {
            let block: Vec<usize> = chosen.iter().map(|&c| remaining[c]).collect();
            let left: Vec<usize> =
                remaining.iter().copied().filter(|x| !block.contains(x)).collect();
            let mark = prefix.len();
            prefix.extend(&block);
            fill(rest, left, prefix, out);
            prefix.truncate(mark);
        }
    }
    let n: usize = parts.iter().sum();
    let mut perms = Vec::new();
    fill(parts, (0..n).collect(), &mut Vec::with_capacity(n), &mut perms);
    perms
        .into_iter()
        .map(|perm| {
            let sign = permutation_sign(&perm);
            Unshuffle { perm, sign }
        })
        .collect()
}

/// Element of `Cⁿ(g;W)`; zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    arity: usize,
    source_dim: usize,
    target_dim: usize,
    coeffs: BTreeMap<BasisKey, Vec<Rational>>,
}

impl Cochain {
    pub fn zero(arity: usize, source_dim: usize, target_dim: usize) -> Self {
        assert!(arity >= 1, "cochain arity starts at 1");
        Cochain { arity, source_dim, target_dim, coeffs: BTreeMap::new() }
    }

    /// Builds a cochain from its values on the canonical basis keys.
    pub fn from_fn(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        mut f: impl FnMut(&BasisKey) -> Vec<Rational>,
    ) -> Self {
        let mut c = Self::zero(arity, source_dim, target_dim);
        for key in basis_keys(arity, source_dim) {
            let v = f(&key);
            assert_eq!(v.len(), target_dim, "value length must equal the target dimension");
            if !is_zero_vec(&v) {
                c.coeffs.insert(key, v);
            }
        }
        c
    }

    /// Arity-1 cochain of a linear map given as a `target × source` matrix.
    pub fn from_linear_map(m: &Matrix) -> Self {
        Self::from_fn(1, m.cols(), m.rows(), |k| m.column(k.last))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Degree in the graded Lie algebra, `arity − 1`.
    pub fn degree(&self) -> usize {
        self.arity - 1
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored (nonzero) entries in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&BasisKey, &Vec<Rational>)> {
        self.coeffs.iter()
    }

    fn check_key(&self, key: &BasisKey) -> Result<()> {
        let ok = key.subset.len() + 1 == self.arity
            && key.subset.windows(2).all(|w| w[0] < w[1])
            && key.subset.iter().chain([&key.last]).all(|&i| i < self.source_dim);
        if ok {
            Ok(())
        } else {
            Err(Error::Dimension(format!("invalid basis key {key:?} for arity {}", self.arity)))
        }
    }

    pub fn set(&mut self, key: BasisKey, value: Vec<Rational>) -> Result<()> {
        self.check_key(&key)?;
        if value.len() != self.target_dim {
            return Err(Error::Dimension(format!(
                "value of length {} for target dimension {}",
                value.len(),
                self.target_dim
            )));
        }
        if is_zero_vec(&value) {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
        Ok(())
    }

    pub fn get(&self, key: &BasisKey) -> Vec<Rational> {
        self.coeffs.get(key).cloned().unwrap_or_else(|| zero_vec(self.target_dim))
    }

    /// Value on basis vectors given by (possibly unsorted) indices.
    pub fn eval_basis(&self, indices: &[usize]) -> Vec<Rational> {
        let mut out = zero_vec(self.target_dim);
        self.add_eval_basis(&mut out, &Rational::one(), indices);
        out
    }

    fn add_eval_basis(&self, acc: &mut [Rational], c: &Rational, indices: &[usize]) {
        debug_assert_eq!(indices.len(), self.arity);
        let (head, last) = indices.split_at(self.arity - 1);
        let mut head = head.to_vec();
        let Some(sign) = sort_with_sign(&mut head) else { return };
        if let Some(v) = self.coeffs.get(&BasisKey { subset: head, last: last[0] }) {
            if sign > 0 {
                add_assign_scaled(acc, c, v);
            } else {
                add_assign_scaled(acc, &-c, v);
            }
        }
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
        self.eval_refs(&refs)
    }

    pub fn eval_refs(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        if args.len() != self.arity {
            return Err(Error::Dimension(format!(
                "{} arguments for a cochain of arity {}",
                args.len(),
                self.arity
            )));
        }
        if let Some(a) = args.iter().find(|a| a.len() != self.source_dim) {
            return Err(Error::Dimension(format!(
                "argument of length {} for source dimension {}",
                a.len(),
                self.source_dim
            )));
        }
        let mut out = zero_vec(self.target_dim);
        let mut idx = Vec::with_capacity(self.arity);
        self.expand(args, &mut idx, Rational::one(), &mut out);
        Ok(out)
    }

    fn expand(&self, args: &[&[Rational]], idx: &mut Vec<usize>, coef: Rational, out: &mut [Rational]) {
        let k = idx.len();
        if k == args.len() {
            self.add_eval_basis(out, &coef, idx);
            return;
        }
        for (i, x) in args[k].iter().enumerate() {
            // repeated alternating index contributes nothing
            if x.is_zero() || (k + 1 < self.arity && idx.contains(&i)) {
                continue;
            }
            idx.push(i);
            self.expand(args, idx, &coef * x, out);
            idx.pop();
        }
    }

    /// Matrix (`target × source`) of an arity-1 cochain.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.arity, 1, "only arity-1 cochains are linear maps");
        let cols: Vec<Vec<Rational>> =
            (0..self.source_dim).map(|j| self.eval_basis(&[j])).collect();
        Matrix::from_columns(self.target_dim, &cols)
    }

    pub fn space_dim(&self) -> usize {
        space_dim(self.arity, self.source_dim, self.target_dim)
    }

    /// Coefficient vector in canonical order.
    pub fn flatten(&self) -> Vec<Rational> {
        basis_keys(self.arity, self.source_dim)
            .iter()
            .flat_map(|k| self.get(k))
            .collect()
    }

    pub fn from_flat(arity: usize, source_dim: usize, target_dim: usize, flat: &[Rational]) -> Self {
        assert_eq!(flat.len(), space_dim(arity, source_dim, target_dim), "flat length");
        let mut chunks = flat.chunks(target_dim.max(1));
        Self::from_fn(arity, source_dim, target_dim, |_| {
            if target_dim == 0 {
                Vec::new()
            } else {
                chunks.next().expect("length checked").to_vec()
            }
        })
    }

    fn same_space(&self, other: &Cochain) -> Result<()> {
        if (self.arity, self.source_dim, self.target_dim)
            != (other.arity, other.source_dim, other.target_dim)
        {
            return Err(Error::Dimension(format!(
                "cochain spaces differ: ({}, {}, {}) vs ({}, {}, {})",
                self.arity, self.source_dim, self.target_dim, other.arity, other.source_dim, other.target_dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let mut acc = out.get(k);
            add_assign_scaled(&mut acc, &Rational::one(), v);
            out.set(k.clone(), acc).expect("same space");
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        if c.is_zero() {
            return Self::zero(self.arity, self.source_dim, self.target_dim);
        }
        Cochain {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(|x| x * c).collect()))
                .collect(),
            ..*self
        }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&-Rational::one())
    }
}

fn end_valued(p: &Cochain, q: &Cochain) -> Result<usize> {
    let d = p.source_dim;
    if p.target_dim != d || q.source_dim != d || q.target_dim != d {
        return Err(Error::Dimension(format!(
            "circle product needs End-valued cochains on one space, got {}→{} and {}→{}",
            p.source_dim, p.target_dim, q.source_dim, q.target_dim
        )));
    }
    Ok(d)
}

/// Circle product `P∘Q ∈ C^{p+q+1}` for `P ∈ C^{p+1}`, `Q ∈ C^{q+1}`:
///
/// ```text
/// Σ_{σ∈S(q,1,p−1)} sgn σ · P(Q(x_σ(1..q+1)), x_σ(q+2..p+q), x_{p+q+1})
///   + (−1)^{pq} Σ_{σ∈S(p,q)} sgn σ · P(x_σ(1..p), Q(x_σ(p+1..p+q), x_{p+q+1}))
/// ```
///
/// The first sum is empty when `p = 0`.
pub fn mn_compose(p_co: &Cochain, q_co: &Cochain) -> Result<Cochain> {
    let d = end_valued(p_co, q_co)?;
    let (p, q) = (p_co.degree(), q_co.degree());
    let n = p + q + 1;
    let first = if p >= 1 { unshuffles(&[q, 1, p - 1]) } else { Vec::new() };
    let second = unshuffles(&[p, q]);
    let second_sign = if (p * q) % 2 == 0 { 1 } else { -1 };

    let mut args = Vec::with_capacity(n);
    let mut inner_args = Vec::with_capacity(q + 1);
    Ok(Cochain::from_fn(n, d, d, |key| {
        let x: Vec<usize> = key.subset.iter().copied().chain([key.last]).collect();
        let mut out = zero_vec(d);
        for s in &first {
            inner_args.clear();
            inner_args.extend(s.perm[..=q].iter().map(|&i| x[i]));
            let inner = q_co.eval_basis(&inner_args);
            let sign = Rational::from_integer(s.sign.into());
            for (c, val) in inner.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                args.clear();
                args.push(c);
                args.extend(s.perm[q + 1..p + q].iter().map(|&i| x[i]));
                args.push(x[n - 1]);
                p_co.add_eval_basis(&mut out, &(&sign * val), &args);
            }
        }
        for s in &second {
            inner_args.clear();
            inner_args.extend(s.perm[p..p + q].iter().map(|&i| x[i]));
            inner_args.push(x[n - 1]);
            let inner = q_co.eval_basis(&inner_args);
            let sign = Rational::from_integer((s.sign * second_sign).into());
            for (c, val) in inner.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                args.clear();
                args.extend(s.perm[..p].iter().map(|&i| x[i]));
                args.push(c);
                p_co.add_eval_basis(&mut out, &(&sign * val), &args);
            }
        }
        out
    }))
}

/// `[P,Q]^{MN} = P∘Q − (−1)^{pq} Q∘P`.
pub fn mn_bracket(p_co: &Cochain, q_co: &Cochain) -> Result<Cochain> {
    let pq = mn_compose(p_co, q_co)?;
    let qp = mn_compose(q_co, p_co)?;
    if (p_co.degree() * q_co.degree()).is_multiple_of(2) {
        pq.sub(&qp)
    } else {
        pq.add(&qp)
    }
}
