//! Brute-force reference implementations for the integration tests.
//!
//! Nothing here calls the library's cochain engine, differentials, bracket or
//! identity checkers. Structures are read out of the library types as plain
//! coefficient arrays and every formula is evaluated by direct loops:
//! identities term by term, the circle product as a sum over all
//! permutations filtered for monotone blocks, and the differentials from the
//! explicit four-sum formula.
#![allow(dead_code)]

use std::collections::HashMap;

use copre::algebra::{CompatiblePreLie, CompatibleRep, Product, RepMaps};
use copre::cochain::{BasisKey, Cochain};
use copre::Rational as Q;
use num_traits::{One, Zero};

pub type Table = Vec<Vec<Vec<Q>>>;
/// `mats[i]` is the matrix of the action of `eᵢ`, indexed `[row][col]`.
pub type Mats = Vec<Vec<Vec<Q>>>;
pub type Dense = Vec<Vec<Q>>;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn table(p: &Product) -> Table {
    let d = p.dim();
    (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| p.get(i, j, k).clone()).collect()).collect()).collect()
}

pub fn mats(r: &RepMaps) -> Mats {
    let m = r.rep_dim();
    (0..r.algebra_dim()).map(|i| (0..m).map(|a| (0..m).map(|b| r.of(i)[(a, b)].clone()).collect()).collect()).collect()
}

pub fn left(c: &Table) -> Mats {
    let d = c.len();
    (0..d).map(|i| (0..d).map(|k| (0..d).map(|j| c[i][j][k].clone()).collect()).collect()).collect()
}

pub fn right(c: &Table) -> Mats {
    let d = c.len();
    (0..d).map(|i| (0..d).map(|k| (0..d).map(|j| c[j][i][k].clone()).collect()).collect()).collect()
}

pub fn unit(d: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v
}

pub fn mul(c: &Table, x: &[Q], y: &[Q]) -> Vec<Q> {
    let d = c.len();
    let mut out = vec![Q::zero(); d];
    for i in 0..d {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..d {
            if y[j].is_zero() {
                continue;
            }
            for k in 0..d {
                out[k] += &x[i] * &y[j] * &c[i][j][k];
            }
        }
    }
    out
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn sum(vs: &[Vec<Q>], signs: &[i64]) -> Vec<Q> {
    let mut out = vec![Q::zero(); vs[0].len()];
    for (v, s) in vs.iter().zip(signs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x * q(*s);
        }
    }
    out
}

fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn triples(d: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                out.push([x, y, z]);
            }
        }
    }
    out
}

fn pairs(d: usize) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            out.push([x, y]);
        }
    }
    out
}

/// First basis triple violating `(x·y)·z − x·(y·z) = (y·x)·z − y·(x·z)`.
pub fn pre_lie_witness(c: &Table) -> Option<[usize; 3]> {
    let d = c.len();
    triples(d).into_iter().find(|&[x, y, z]| {
        let (x, y, z) = (unit(d, x), unit(d, y), unit(d, z));
        let lhs = sub(&mul(c, &mul(c, &x, &y), &z), &mul(c, &x, &mul(c, &y, &z)));
        let rhs = sub(&mul(c, &mul(c, &y, &x), &z), &mul(c, &y, &mul(c, &x, &z)));
        lhs != rhs
    })
}

/// The eight-term compatibility identity, `c1 = ·`, `c2 = ∗`.
pub fn compatibility_witness(c1: &Table, c2: &Table) -> Option<[usize; 3]> {
    let d = c1.len();
    triples(d).into_iter().find(|&[x, y, z]| {
        let (x, y, z) = (unit(d, x), unit(d, y), unit(d, z));
        let terms = [
            mul(c1, &mul(c2, &x, &y), &z),
            mul(c2, &mul(c1, &x, &y), &z),
            mul(c1, &x, &mul(c2, &y, &z)),
            mul(c2, &x, &mul(c1, &y, &z)),
            mul(c1, &mul(c2, &y, &x), &z),
            mul(c2, &mul(c1, &y, &x), &z),
            mul(c1, &y, &mul(c2, &x, &z)),
            mul(c2, &y, &mul(c1, &x, &z)),
        ];
        !is_zero(&sum(&terms, &[1, 1, -1, -1, -1, -1, 1, 1]))
    })
}

pub fn compatible_verdict(a: &CompatiblePreLie) -> (bool, bool, bool) {
    let (c1, c2) = (table(&a.p1), table(&a.p2));
    let p1 = pre_lie_witness(&c1).is_none();
    let p2 = pre_lie_witness(&c2).is_none();
    (p1, p2, p1 && p2 && compatibility_witness(&c1, &c2).is_none())
}

pub fn commutator_table(c: &Table) -> Table {
    let d = c.len();
    (0..d).map(|i| (0..d).map(|j| sub(&c[i][j], &c[j][i])).collect()).collect()
}

pub fn lie_holds(b: &Table) -> bool {
    let d = b.len();
    let anti = pairs(d).into_iter().all(|[x, y]| is_zero(&add(&b[x][y], &b[y][x])));
    let jacobi = triples(d).into_iter().all(|[x, y, z]| {
        let (ex, ey, ez) = (unit(d, x), unit(d, y), unit(d, z));
        let t = [
            mul(b, &mul(b, &ex, &ey), &ez),
            mul(b, &mul(b, &ey, &ez), &ex),
            mul(b, &mul(b, &ez, &ex), &ey),
        ];
        is_zero(&sum(&t, &[1, 1, 1]))
    });
    anti && jacobi
}

/// `[{x,y},z] + [{y,z},x] + [{z,x},y] + {[x,y],z} + {[y,z],x} + {[z,x],y} = 0`.
pub fn compatible_lie_holds(b1: &Table, b2: &Table) -> bool {
    let d = b1.len();
    lie_holds(b1)
        && lie_holds(b2)
        && triples(d).into_iter().all(|[x, y, z]| {
            let (ex, ey, ez) = (unit(d, x), unit(d, y), unit(d, z));
            let cyc = [(&ex, &ey, &ez), (&ey, &ez, &ex), (&ez, &ex, &ey)];
            let mut t = Vec::new();
            for (a, b, c) in cyc {
                t.push(mul(b1, &mul(b2, a, b), c));
                t.push(mul(b2, &mul(b1, a, b), c));
            }
            is_zero(&sum(&t, &[1; 6]))
        })
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n).map(|i| (0..m).map(|j| (0..k).fold(Q::zero(), |acc, l| acc + &a[i][l] * &b[l][j])).collect()).collect()
}

fn mat_lin(terms: &[(&[Vec<Q>], i64)]) -> Vec<Vec<Q>> {
    let n = terms[0].0.len();
    let m = terms[0].0.first().map_or(0, Vec::len);
    let mut out = vec![vec![Q::zero(); m]; n];
    for (t, s) in terms {
        for i in 0..n {
            for j in 0..m {
                out[i][j] += &t[i][j] * q(*s);
            }
        }
    }
    out
}

/// The action of a vector `x` through per-basis matrices.
fn act(ms: &Mats, x: &[Q]) -> Vec<Vec<Q>> {
    let m = ms[0].len();
    let mut out = vec![vec![Q::zero(); m]; m];
    for (i, xi) in x.iter().enumerate() {
        for a in 0..m {
            for b in 0..m {
                out[a][b] += xi * &ms[i][a][b];
            }
        }
    }
    out
}

fn is_zero_mat(a: &[Vec<Q>]) -> bool {
    a.iter().all(|r| is_zero(r))
}

/// `(V, ρ, μ)` represents the pre-Lie algebra `c`.
pub fn pre_lie_rep_holds(c: &Table, rho: &Mats, mu: &Mats) -> bool {
    let d = c.len();
    pairs(d).into_iter().all(|[x, y]| {
        let (ex, ey) = (unit(d, x), unit(d, y));
        let br = sub(&mul(c, &ex, &ey), &mul(c, &ey, &ex));
        let lie = mat_lin(&[
            (&act(rho, &br), 1),
            (&mat_mul(&rho[x], &rho[y]), -1),
            (&mat_mul(&rho[y], &rho[x]), 1),
        ]);
        let axiom = mat_lin(&[
            (&mat_mul(&mu[y], &mu[x]), 1),
            (&act(mu, &mul(c, &ex, &ey)), -1),
            (&mat_mul(&mu[y], &rho[x]), -1),
            (&mat_mul(&rho[x], &mu[y]), 1),
        ]);
        is_zero_mat(&lie) && is_zero_mat(&axiom)
    })
}

/// Both pre-Lie representation conditions and the two cross identities.
pub fn compatible_rep_holds(a: &CompatiblePreLie, r: &CompatibleRep) -> bool {
    let (c1, c2) = (table(&a.p1), table(&a.p2));
    let (rho, mu, rt, mt) = (mats(&r.rho), mats(&r.mu), mats(&r.rho_t), mats(&r.mu_t));
    if !pre_lie_rep_holds(&c1, &rho, &mu) || !pre_lie_rep_holds(&c2, &rt, &mt) {
        return false;
    }
    let d = a.dim();
    pairs(d).into_iter().all(|[x, y]| {
        let (ex, ey) = (unit(d, x), unit(d, y));
        let side1 = |x: usize, y: usize, ex: &[Q], ey: &[Q]| {
            mat_lin(&[
                (&act(&rho, &mul(&c2, ex, ey)), 1),
                (&act(&rt, &mul(&c1, ex, ey)), 1),
                (&mat_mul(&rho[x], &rt[y]), -1),
                (&mat_mul(&rt[x], &rho[y]), -1),
            ])
        };
        let rep1 = mat_lin(&[(&side1(x, y, &ex, &ey), 1), (&side1(y, x, &ey, &ex), -1)]);
        let rep2 = mat_lin(&[
            (&mat_mul(&mu[y], &rt[x]), 1),
            (&mat_mul(&rho[x], &mt[y]), -1),
            (&mat_mul(&mu[y], &mt[x]), -1),
            (&act(&mu, &mul(&c2, &ex, &ey)), 1),
            (&mat_mul(&mt[y], &rho[x]), 1),
            (&mat_mul(&rt[x], &mu[y]), -1),
            (&mat_mul(&mt[y], &mu[x]), -1),
            (&act(&mt, &mul(&c1, &ex, &ey)), 1),
        ]);
        is_zero_mat(&rep1) && is_zero_mat(&rep2)
    })
}

/// Representation `(ρ, μ)` of the compatible Lie algebra `(b1, b2)`.
pub fn compatible_lie_rep_holds(b1: &Table, b2: &Table, rho: &Mats, mu: &Mats) -> bool {
    let d = b1.len();
    let lie_rep = |b: &Table, r: &Mats| {
        pairs(d).into_iter().all(|[x, y]| {
            let br = mul(b, &unit(d, x), &unit(d, y));
            is_zero_mat(&mat_lin(&[(&act(r, &br), 1), (&mat_mul(&r[x], &r[y]), -1), (&mat_mul(&r[y], &r[x]), 1)]))
        })
    };
    lie_rep(b1, rho)
        && lie_rep(b2, mu)
        && pairs(d).into_iter().all(|[x, y]| {
            let (ex, ey) = (unit(d, x), unit(d, y));
            let t = mat_lin(&[
                (&act(rho, &mul(b2, &ex, &ey)), 1),
                (&act(mu, &mul(b1, &ex, &ey)), 1),
                (&mat_mul(&rho[x], &mu[y]), -1),
                (&mat_mul(&mu[y], &rho[x]), 1),
                (&mat_mul(&rho[y], &mu[x]), 1),
                (&mat_mul(&mu[x], &rho[y]), -1),
            ]);
            is_zero_mat(&t)
        })
}

// ---------------------------------------------------------------------------
// Cochains as dense value lists over canonical keys.

/// Increasing `k`-subsets of `0..d` in colex order, followed by every last
/// index: the coordinate order of the flattened cochain spaces.
pub fn keys(arity: usize, d: usize) -> Vec<(Vec<usize>, usize)> {
    let k = arity - 1;
    let mut subsets = Vec::new();
    let mut all = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &all {
            let start = s.last().map_or(0, |&l: &usize| l + 1);
            for i in start..d {
                let mut t = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        all = next;
    }
    subsets.extend(all);
    subsets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    subsets.into_iter().flat_map(|s| (0..d).map(move |j| (s.clone(), j))).collect()
}

/// Sign of the sorting permutation, zero on repeats.
fn sort_sign(xs: &[usize]) -> (i64, Vec<usize>) {
    let mut inversions = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] == xs[j] {
                return (0, Vec::new());
            }
            if xs[i] > xs[j] {
                inversions += 1;
            }
        }
    }
    let mut s = xs.to_vec();
    s.sort_unstable();
    (if inversions % 2 == 0 { 1 } else { -1 }, s)
}

/// A cochain `∧ⁿ⁻¹g ⊗ g → W` stored as values on canonical keys.
#[derive(Clone, Debug, PartialEq)]
pub struct OCochain {
    pub arity: usize,
    pub d: usize,
    pub w: usize,
    pub values: HashMap<(Vec<usize>, usize), Vec<Q>>,
}

impl OCochain {
    pub fn zero(arity: usize, d: usize, w: usize) -> Self {
        OCochain { arity, d, w, values: HashMap::new() }
    }

    pub fn from_lib(c: &Cochain) -> Self {
        let mut o = OCochain::zero(c.arity(), c.source_dim(), c.target_dim());
        for (s, j) in keys(c.arity(), c.source_dim()) {
            let v = c.get(&BasisKey::new(s.clone(), j));
            if !is_zero(&v) {
                o.values.insert((s, j), v);
            }
        }
        o
    }

    pub fn from_flat(arity: usize, d: usize, w: usize, flat: &[Q]) -> Self {
        let mut o = OCochain::zero(arity, d, w);
        for (n, key) in keys(arity, d).into_iter().enumerate() {
            let v = flat[n * w..(n + 1) * w].to_vec();
            if !is_zero(&v) {
                o.values.insert(key, v);
            }
        }
        o
    }

    pub fn flat(&self) -> Vec<Q> {
        keys(self.arity, self.d).into_iter().flat_map(|k| self.values.get(&k).cloned().unwrap_or_else(|| vec![Q::zero(); self.w])).collect()
    }

    /// Value on basis vectors, any order of the antisymmetric arguments.
    pub fn at(&self, args: &[usize]) -> Vec<Q> {
        let (head, last) = args.split_at(self.arity - 1);
        let (sign, sorted) = sort_sign(head);
        if sign == 0 {
            return vec![Q::zero(); self.w];
        }
        match self.values.get(&(sorted, last[0])) {
            Some(v) => v.iter().map(|x| x * q(sign)).collect(),
            None => vec![Q::zero(); self.w],
        }
    }

    /// Value with one slot holding a general vector.
    pub fn at_vec(&self, args: &[usize], slot: usize, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.w];
        let mut a = args.to_vec();
        for (c, coef) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            a[slot] = c;
            for (o, x) in out.iter_mut().zip(self.at(&a)) {
                *o += coef * x;
            }
        }
        out
    }

    pub fn agrees_with(&self, c: &Cochain) -> bool {
        self.arity == c.arity() && self.d == c.source_dim() && self.w == c.target_dim() && *self == OCochain::from_lib(c)
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut t = p.clone();
            t.insert(pos, n - 1);
            out.push(t);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn increasing_blocks(p: &[usize], blocks: &[usize]) -> bool {
    let mut start = 0;
    for &len in blocks {
        if !p[start..start + len].windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        start += len;
    }
    true
}

/// Circle product from its defining double sum, over all permutations of
/// the first `p+q` arguments filtered for monotone blocks.
pub fn circle(pc: &OCochain, qc: &OCochain) -> OCochain {
    let (p, qd) = (pc.arity - 1, qc.arity - 1);
    let (d, n) = (pc.d, p + qd + 1);
    let mut out = OCochain::zero(n, d, d);
    let perms = all_perms(p + qd);
    for (s, j) in keys(n, d) {
        let x: Vec<usize> = s.iter().copied().chain([j]).collect();
        let mut acc = vec![Q::zero(); d];
        if p >= 1 {
            for sigma in perms.iter().filter(|sg| increasing_blocks(sg, &[qd, 1, p - 1])) {
                let inner_args: Vec<usize> = sigma[..=qd].iter().map(|&i| x[i]).collect();
                let inner = qc.at(&inner_args);
                let mut outer: Vec<usize> = vec![0];
                outer.extend(sigma[qd + 1..].iter().map(|&i| x[i]));
                outer.push(x[n - 1]);
                let v = pc.at_vec(&outer, 0, &inner);
                let sg = q(perm_sign(sigma));
                for (a, b) in acc.iter_mut().zip(v) {
                    *a += &sg * b;
                }
            }
        }
        let sign2 = if (p * qd) % 2 == 0 { 1 } else { -1 };
        for sigma in perms.iter().filter(|sg| increasing_blocks(sg, &[p, qd])) {
            let mut inner_args: Vec<usize> = sigma[p..].iter().map(|&i| x[i]).collect();
            inner_args.push(x[n - 1]);
            let inner = qc.at(&inner_args);
            let mut outer: Vec<usize> = sigma[..p].iter().map(|&i| x[i]).collect();
            outer.push(0);
            let v = pc.at_vec(&outer, p, &inner);
            let sg = q(perm_sign(sigma) * sign2);
            for (a, b) in acc.iter_mut().zip(v) {
                *a += &sg * b;
            }
        }
        if !is_zero(&acc) {
            out.values.insert((s, j), acc);
        }
    }
    out
}

pub fn bracket(pc: &OCochain, qc: &OCochain) -> OCochain {
    let (p, qd) = (pc.arity - 1, qc.arity - 1);
    let a = circle(pc, qc);
    let b = circle(qc, pc);
    let s = if (p * qd) % 2 == 0 { -1 } else { 1 };
    let mut out = OCochain::zero(a.arity, a.d, a.w);
    for key in keys(a.arity, a.d) {
        let va = a.values.get(&key).cloned().unwrap_or_else(|| vec![Q::zero(); a.w]);
        let vb = b.values.get(&key).cloned().unwrap_or_else(|| vec![Q::zero(); a.w]);
        let v: Vec<Q> = va.iter().zip(&vb).map(|(x, y)| x + y * q(s)).collect();
        if !is_zero(&v) {
            out.values.insert(key, v);
        }
    }
    out
}

/// The explicit coboundary
/// `Σ(−1)^{i+1} ρ(xᵢ) f(…x̂ᵢ…) + Σ(−1)^{i+1} μ(x_{n+1}) f(…x̂ᵢ…, xᵢ)
///  − Σ(−1)^{i+1} f(…x̂ᵢ…, xᵢ·x_{n+1}) + Σ_{i<j}(−1)^{i+j} f([xᵢ,xⱼ]_C, …x̂ᵢ…x̂ⱼ…)`
/// evaluated on basis vectors.
pub fn coboundary(c: &Table, rho: &Mats, mu: &Mats, f: &OCochain) -> OCochain {
    let (d, w, n) = (f.d, f.w, f.arity);
    let mut out = OCochain::zero(n + 1, d, w);
    for (s, j) in keys(n + 1, d) {
        let x: Vec<usize> = s.iter().copied().chain([j]).collect();
        let mut acc = vec![Q::zero(); w];
        let mut push = |v: Vec<Q>, sign: i64| {
            for (a, b) in acc.iter_mut().zip(v) {
                *a += b * q(sign);
            }
        };
        for i in 0..n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let without: Vec<usize> = (0..=n).filter(|&k| k != i).map(|k| x[k]).collect();
            let fv = f.at(&without);
            push((0..w).map(|a| (0..w).fold(Q::zero(), |acc, b| acc + &rho[x[i]][a][b] * &fv[b])).collect(), sign);

            let mut moved: Vec<usize> = (0..n).filter(|&k| k != i).map(|k| x[k]).collect();
            moved.push(x[i]);
            let fv = f.at(&moved);
            push((0..w).map(|a| (0..w).fold(Q::zero(), |acc, b| acc + &mu[x[n]][a][b] * &fv[b])).collect(), sign);

            let mut args: Vec<usize> = (0..n).filter(|&k| k != i).map(|k| x[k]).collect();
            args.push(0);
            let prod = mul(c, &unit(d, x[i]), &unit(d, x[n]));
            push(f.at_vec(&args, n - 1, &prod), -sign);
        }
        for i in 0..n {
            for k in i + 1..n {
                let sign = if (i + k) % 2 == 0 { 1 } else { -1 };
                let br = sub(&c[x[i]][x[k]], &c[x[k]][x[i]]);
                let mut args = vec![0];
                args.extend((0..=n).filter(|&t| t != i && t != k).map(|t| x[t]));
                push(f.at_vec(&args, 0, &br), sign);
            }
        }
        if !is_zero(&acc) {
            out.values.insert((s, j), acc);
        }
    }
    out
}

/// Dense matrix of the single coboundary `Cⁿ → Cⁿ⁺¹`, built column by
/// column from unit cochains.
pub fn single_matrix(c: &Table, rho: &Mats, mu: &Mats, n: usize, w: usize) -> Dense {
    let d = c.len();
    let cols = keys(n, d).len() * w;
    let rows = keys(n + 1, d).len() * w;
    let mut m = vec![vec![Q::zero(); cols]; rows];
    for col in 0..cols {
        let mut e = vec![Q::zero(); cols];
        e[col] = Q::one();
        let img = coboundary(c, rho, mu, &OCochain::from_flat(n, d, w, &e)).flat();
        for (r, v) in img.into_iter().enumerate() {
            m[r][col] = v;
        }
    }
    m
}

/// Matrix of the total differential `𝔠ⁿ → 𝔠ⁿ⁺¹`: output slot `i` receives
/// the first coboundary of input `i` and the second of input `i−1`.
pub fn brute_differential(a: &CompatiblePreLie, r: Option<&CompatibleRep>, n: usize) -> Dense {
    let (c1, c2) = (table(&a.p1), table(&a.p2));
    let (rho, mu, rt, mt, w) = match r {
        Some(r) => (mats(&r.rho), mats(&r.mu), mats(&r.rho_t), mats(&r.mu_t), r.rep_dim()),
        None => (left(&c1), right(&c1), left(&c2), right(&c2), a.dim()),
    };
    let d1 = single_matrix(&c1, &rho, &mu, n, w);
    let d2 = single_matrix(&c2, &rt, &mt, n, w);
    let s = keys(n, a.dim()).len() * w;
    let s1 = keys(n + 1, a.dim()).len() * w;
    let mut m = vec![vec![Q::zero(); n * s]; (n + 1) * s1];
    for part in 0..n {
        for (block, single) in [(part, &d1), (part + 1, &d2)] {
            for r in 0..s1 {
                for col in 0..s {
                    m[block * s1 + r][part * s + col] += &single[r][col];
                }
            }
        }
    }
    m
}

pub fn rank(m: &Dense) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = &a[i][col] / &pivot;
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= y * &f;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `dim 𝓗ⁿ = dim 𝔠ⁿ − rank Dⁿ − rank Dⁿ⁻¹`.
pub fn cohomology_dim(a: &CompatiblePreLie, r: Option<&CompatibleRep>, n: usize) -> usize {
    let w = r.map_or(a.dim(), CompatibleRep::rep_dim);
    let dim = n * keys(n, a.dim()).len() * w;
    let out_rank = rank(&brute_differential(a, r, n));
    let in_rank = if n >= 2 { rank(&brute_differential(a, r, n - 1)) } else { 0 };
    dim - out_rank - in_rank
}
