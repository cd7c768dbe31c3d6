//! Block maps on `g ⊕ V`, their horizontal lifts to cochains on the direct
//! sum, and bidegrees.
//!
//! The direct sum is always laid out with the `d` basis vectors of `g` first
//! and the `m` basis vectors of `V` after them.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{extended_product, Product, RepMaps};
use crate::cochain::{basis_keys, unshuffles, BasisKey, Cochain};
use crate::error::{Error, Result};
use crate::linalg::{add_assign_scaled, is_zero_vec, zero_vec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Block {
    G,
    V,
}

/// Index of one basis vector of a block map argument list: the alternating
/// `g` slots, the alternating `V` slots and the last slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockKey {
    pub g: Vec<usize>,
    pub v: Vec<usize>,
    pub last: usize,
}

/// `f: ∧^a g ⊗ ∧^b V ⊗ X → Y` with `X` the `last` block and `Y` the target.
///
/// With `last = G` this is `∧^{k−1}g ⊗ ∧^l V ⊗ g` (`a = k−1`, `b = l`);
/// with `last = V` it is `∧^k g ⊗ ∧^{l−1} V ⊗ V` (`a = k`, `b = l−1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMap {
    g_dim: usize,
    v_dim: usize,
    g_args: usize,
    v_args: usize,
    last: Block,
    target: Block,
    values: BTreeMap<BlockKey, Vec<Rational>>,
}

fn strictly_increasing(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[0] < w[1])
}

/// Sorts `idx` in place; `None` on a repeated entry, otherwise the sign.
fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut positive = true;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            positive = !positive;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(positive)
}

impl BlockMap {
    pub fn zero(g_dim: usize, v_dim: usize, g_args: usize, v_args: usize, last: Block, target: Block) -> Self {
        BlockMap { g_dim, v_dim, g_args, v_args, last, target, values: BTreeMap::new() }
    }

    /// The arity-`n` lift `(k, l)` this block map lives in.
    pub fn kl(&self) -> (usize, usize) {
        match self.last {
            Block::G => (self.g_args + 1, self.v_args),
            Block::V => (self.g_args, self.v_args + 1),
        }
    }

    pub fn arity(&self) -> usize {
        self.g_args + self.v_args + 1
    }

    fn block_dim(&self, b: Block) -> usize {
        match b {
            Block::G => self.g_dim,
            Block::V => self.v_dim,
        }
    }

    pub fn set(&mut self, key: BlockKey, value: Vec<Rational>) -> Result<()> {
        let ok = key.g.len() == self.g_args
            && key.v.len() == self.v_args
            && strictly_increasing(&key.g)
            && strictly_increasing(&key.v)
            && key.g.iter().all(|&i| i < self.g_dim)
            && key.v.iter().all(|&i| i < self.v_dim)
            && key.last < self.block_dim(self.last);
        if !ok {
            return Err(Error::BlockSignature(format!(
                "key {key:?} does not fit ∧^{} g ⊗ ∧^{} V ⊗ {:?}",
                self.g_args, self.v_args, self.last
            )));
        }
        if value.len() != self.block_dim(self.target) {
            return Err(Error::BlockSignature(format!(
                "value of length {} for target block {:?} of dimension {}",
                value.len(),
                self.target,
                self.block_dim(self.target)
            )));
        }
        if is_zero_vec(&value) {
            self.values.remove(&key);
        } else {
            self.values.insert(key, value);
        }
        Ok(())
    }

    /// `f ∈ Cⁿ(g;V)` viewed as `∧ⁿ⁻¹g ⊗ g → V`.
    pub fn from_g_cochain(f: &Cochain) -> Self {
        let mut b = BlockMap::zero(f.source_dim(), f.target_dim(), f.arity() - 1, 0, Block::G, Block::V);
        for (k, v) in f.entries() {
            b.values.insert(BlockKey { g: k.subset.clone(), v: vec![], last: k.last }, v.clone());
        }
        b
    }

    /// `ρ` as `g ⊗ V → V`, `(x, v) ↦ ρ(x)v`.
    pub fn from_left_action(rho: &RepMaps) -> Self {
        let (d, m) = (rho.algebra_dim(), rho.rep_dim());
        let mut b = BlockMap::zero(d, m, 1, 0, Block::V, Block::V);
        for i in 0..d {
            for a in 0..m {
                let col = rho.of(i).column(a);
                b.set(BlockKey { g: vec![i], v: vec![], last: a }, col).expect("shape");
            }
        }
        b
    }

    /// `μ` as `V ⊗ g → V`, `(u, y) ↦ μ(y)u`.
    pub fn from_right_action(mu: &RepMaps) -> Self {
        let (d, m) = (mu.algebra_dim(), mu.rep_dim());
        let mut b = BlockMap::zero(d, m, 0, 1, Block::G, Block::V);
        for j in 0..d {
            for a in 0..m {
                let col = mu.of(j).column(a);
                b.set(BlockKey { g: vec![], v: vec![a], last: j }, col).expect("shape");
            }
        }
        b
    }

    /// A product on `g` as `g ⊗ g → g`.
    pub fn from_product(p: &Product, v_dim: usize) -> Self {
        let d = p.dim();
        let mut b = BlockMap::zero(d, v_dim, 1, 0, Block::G, Block::G);
        for i in 0..d {
            for j in 0..d {
                b.set(BlockKey { g: vec![i], v: vec![], last: j }, p.basis(i, j).to_vec()).expect("shape");
            }
        }
        b
    }

    fn value(&self, g: &[usize], v: &[usize], last: usize) -> Option<(bool, &Vec<Rational>)> {
        let (mut g, mut v) = (g.to_vec(), v.to_vec());
        let sg = sort_sign(&mut g)?;
        let sv = sort_sign(&mut v)?;
        self.values.get(&BlockKey { g, v, last }).map(|val| (sg == sv, val))
    }

    fn embed(&self, value: &[Rational], sign: &Rational, out: &mut [Rational]) {
        let off = match self.target {
            Block::G => 0,
            Block::V => self.g_dim,
        };
        add_assign_scaled(&mut out[off..off + value.len()], sign, value);
    }

    /// Horizontal lift, read off on the canonical basis of `g ⊕ V`: a sorted
    /// key has its `g` indices before its `V` indices, so the only
    /// contributing unshuffle is the identity.
    pub fn lift(&self) -> Cochain {
        let (d, m) = (self.g_dim, self.v_dim);
        Cochain::from_fn(self.arity(), d + m, d + m, |key| {
            let mut out = zero_vec(d + m);
            let (gs, vs): (Vec<usize>, Vec<usize>) = key.subset.iter().partition(|&&i| i < d);
            let last_block = if key.last < d { Block::G } else { Block::V };
            if gs.len() == self.g_args && vs.len() == self.v_args && last_block == self.last {
                let vs: Vec<usize> = vs.iter().map(|i| i - d).collect();
                let last = if key.last < d { key.last } else { key.last - d };
                if let Some(val) = self.values.get(&BlockKey { g: gs, v: vs, last }) {
                    self.embed(val, &Rational::one(), &mut out);
                }
            }
            out
        })
    }

    /// The lift evaluated on arbitrary vectors of `g ⊕ V` through the signed
    /// unshuffle sum over `S(a, b)`, independent of [`BlockMap::lift`].
    pub fn eval_lift(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        let (d, m) = (self.g_dim, self.v_dim);
        if args.len() != self.arity() || args.iter().any(|a| a.len() != d + m) {
            return Err(Error::Dimension("lift arguments must be vectors of g ⊕ V".into()));
        }
        let n = self.arity();
        let (a, b) = (self.g_args, self.v_args);
        let g_part = |x: &Vec<Rational>| x[..d].to_vec();
        let v_part = |x: &Vec<Rational>| x[d..].to_vec();
        let mut out = zero_vec(d + m);
        for s in unshuffles(&[a, b]) {
            let mut slots: Vec<(Block, Vec<Rational>)> = Vec::with_capacity(n);
            slots.extend(s.perm[..a].iter().map(|&i| (Block::G, g_part(&args[i]))));
            slots.extend(s.perm[a..].iter().map(|&i| (Block::V, v_part(&args[i]))));
            slots.push(match self.last {
                Block::G => (Block::G, g_part(&args[n - 1])),
                Block::V => (Block::V, v_part(&args[n - 1])),
            });
            let sign = Rational::from_integer(s.sign.into());
            self.expand(&slots, &mut Vec::new(), sign, &mut out);
        }
        Ok(out)
    }

    fn expand(&self, slots: &[(Block, Vec<Rational>)], idx: &mut Vec<usize>, coef: Rational, out: &mut [Rational]) {
        let k = idx.len();
        if k == slots.len() {
            let (a, b) = (self.g_args, self.v_args);
            if let Some((positive, val)) = self.value(&idx[..a], &idx[a..a + b], idx[a + b]) {
                let c = if positive { coef } else { -coef };
                self.embed(&val.clone(), &c, out);
            }
            return;
        }
        for (i, x) in slots[k].1.iter().enumerate() {
            if !x.is_zero() {
                idx.push(i);
                self.expand(slots, idx, &coef * x, out);
                idx.pop();
            }
        }
    }
}

/// Lifted `π + ρ + μ`: the product of the semidirect product `g ⋉ V`.
pub fn lift_structure(p: &Product, rho: &RepMaps, mu: &RepMaps) -> Cochain {
    extended_product(p, rho, mu, None).to_cochain()
}

/// Lift of `f ∈ Cⁿ(g;V)` to `g ⊕ V`.
pub fn lift_cochain(f: &Cochain) -> Cochain {
    BlockMap::from_g_cochain(f).lift()
}

/// Restriction of a cochain on `g ⊕ V` to `g`-arguments, keeping the
/// `V`-component of its values.
pub fn restrict_to_base(f: &Cochain, g_dim: usize) -> Cochain {
    let m = f.target_dim() - g_dim;
    Cochain::from_fn(f.arity(), g_dim, m, |k| f.get(k)[g_dim..].to_vec())
}

/// Bidegree `k|l` of a cochain on `g ⊕ V` with `dim g = g_dim`.
///
/// A basis key with `a` arguments in `g` and `b` in `V` (counting the last
/// slot) lies in `𝓖^{a,b}`: a `g`-valued output there forces `k|l = a−1|b`, a
/// `V`-valued one forces `a|b−1`. Returns `None` when two entries disagree,
/// and also for the zero cochain, which is homogeneous of every bidegree.
pub fn bidegree(f: &Cochain, g_dim: usize) -> Option<(i64, i64)> {
    let mut found: Option<(i64, i64)> = None;
    for (key, val) in f.entries() {
        let a = key.subset.iter().chain([&key.last]).filter(|&&i| i < g_dim).count() as i64;
        let b = f.arity() as i64 - a;
        let in_g = !is_zero_vec(&val[..g_dim]);
        let in_v = !is_zero_vec(&val[g_dim..]);
        for (present, kl) in [(in_g, (a - 1, b)), (in_v, (a, b - 1))] {
            if present {
                match found {
                    None => found = Some(kl),
                    Some(prev) if prev != kl => return None,
                    _ => {}
                }
            }
        }
    }
    found
}

/// True when `f` has bidegree `k|l` (the zero cochain has every bidegree of
/// its arity).
pub fn has_bidegree(f: &Cochain, g_dim: usize, k: i64, l: i64) -> bool {
    if k + l + 1 != f.arity() as i64 {
        return false;
    }
    f.is_zero() || bidegree(f, g_dim) == Some((k, l))
}

/// All canonical basis keys of `g ⊕ V` in `𝓖^{a,b}`.
pub fn keys_in(a: usize, b: usize, g_dim: usize, v_dim: usize) -> Vec<BasisKey> {
    basis_keys(a + b, g_dim + v_dim)
        .into_iter()
        .filter(|k| k.subset.iter().chain([&k.last]).filter(|&&i| i < g_dim).count() == a)
        .collect()
}
