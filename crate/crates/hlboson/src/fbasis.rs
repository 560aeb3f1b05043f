//! Factorizing `F` matrices for the six-vertex `𝓡` matrix, and the twisted
//! column-to-column transfer matrices they produce.
//!
//! Operators act on `k` two-dimensional legs. Basis index bit for leg `p` is
//! `1 << (k-1-p)`, so leg 0 is the most significant; 0 is a hole and 1 a
//! particle. Rows are left edge states, columns right edge states, so the
//! matrix product follows the lattice from left to right.

use crate::algebra::{LaurentPoly, RatFn};
use crate::hl_an::HlError;
use crate::partitions::Partition;
use crate::tboson::transfer::k_prefactor;
use crate::tboson::{BoundaryParams, Tile, HOLE, PARTICLE};
use std::collections::HashMap;
use thiserror::Error;

/// Largest number of `x` variables accepted by the checks.
pub const MAX_N: usize = 3;
/// Largest `n` for the `BC` checks, which use `2n` legs.
pub const MAX_BC_N: usize = 2;

#[derive(Debug, Error)]
pub enum FbasisError {
    #[error("size {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("column index m = {m} exceeds the number of legs {legs}")]
    BadColumn { m: usize, legs: usize },
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Hl(#[from] HlError),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinOperator {
    pub legs: Vec<String>,
    pub entries: Vec<Vec<RatFn>>,
}

fn bit(idx: usize, leg: usize, k: usize) -> u8 {
    ((idx >> (k - 1 - leg)) & 1) as u8
}

impl SpinOperator {
    pub fn from_fn(legs: Vec<String>, mut f: impl FnMut(usize, usize) -> RatFn) -> Self {
        let d = 1 << legs.len();
        let entries = (0..d).map(|i| (0..d).map(|j| f(i, j)).collect()).collect();
        SpinOperator { legs, entries }
    }

    pub fn identity(legs: Vec<String>) -> Self {
        SpinOperator::from_fn(legs, |i, j| if i == j { RatFn::one() } else { RatFn::zero() })
    }

    pub fn dim(&self) -> usize {
        1 << self.legs.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFn {
        &self.entries[i][j]
    }

    pub fn mul(&self, o: &SpinOperator) -> SpinOperator {
        assert_eq!(self.legs, o.legs, "operators act on different legs");
        let d = self.dim();
        let mut entries = vec![vec![RatFn::zero(); d]; d];
        for (i, row) in entries.iter_mut().enumerate() {
            for k in 0..d {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    let b = &o.entries[k][j];
                    if !b.is_zero() {
                        *cell += &(a * b);
                    }
                }
            }
        }
        SpinOperator { legs: self.legs.clone(), entries }
    }

    /// Row vector times operator.
    pub fn apply_left(&self, v: &[RatFn]) -> Vec<RatFn> {
        let d = self.dim();
        let mut out = vec![RatFn::zero(); d];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let e = &self.entries[i][j];
                if !e.is_zero() {
                    *o += &(vi * e);
                }
            }
        }
        out
    }

    /// Embeds a two-leg operator on legs `(a, b)`, in that order.
    fn embed_pair(small: &SpinOperator, a: usize, b: usize, legs: &[String]) -> SpinOperator {
        let k = legs.len();
        let rest: usize = (0..k).filter(|&l| l != a && l != b).map(|l| 1 << (k - 1 - l)).sum();
        let sub = |idx: usize| 2 * bit(idx, a, k) as usize + bit(idx, b, k) as usize;
        SpinOperator::from_fn(legs.to_vec(), |i, j| {
            if i & rest != j & rest {
                RatFn::zero()
            } else {
                small.entries[sub(i)][sub(j)].clone()
            }
        })
    }

    /// Sends leg `p` of `self` to leg `perm[p]`.
    pub fn relabel(&self, perm: &[usize]) -> SpinOperator {
        let k = self.legs.len();
        let map = |idx: usize| {
            (0..k).fold(0usize, |acc, p| acc | ((bit(idx, p, k) as usize) << (k - 1 - perm[p])))
        };
        let d = self.dim();
        let mut entries = vec![vec![RatFn::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                entries[map(i)][map(j)] = self.entries[i][j].clone();
            }
        }
        SpinOperator { legs: self.legs.clone(), entries }
    }
}

pub fn a_legs(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Legs `1, 1̄, …, n, n̄`.
pub fn bc_legs(n: usize) -> Vec<String> {
    (1..=n).flat_map(|i| [i.to_string(), format!("{i}\u{304}")]).collect()
}

pub fn a_vars(n: usize) -> Vec<LaurentPoly> {
    (1..=n).map(LaurentPoly::x).collect()
}

/// `x_1, x̄_1, …, x_n, x̄_n`.
pub fn bc_vars(n: usize) -> Vec<LaurentPoly> {
    (1..=n).flat_map(|i| [LaurentPoly::x(i), LaurentPoly::x(i).pow_signed(-1)]).collect()
}

fn rf(p: LaurentPoly) -> RatFn {
    RatFn::from_poly(p)
}

/// `𝓡(z)`, normalized so that `𝓡_ab(z) 𝓡_ba(1/z) = 1`.
pub fn r_cal(z: &RatFn) -> SpinOperator {
    let one = RatFn::one();
    let t = rf(LaurentPoly::t());
    let den = (&one - &(&t * z)).inv().expect("R matrix at t z = 1");
    let mut m = SpinOperator::identity(vec!["a".into(), "b".into()]);
    m.entries[1][1] = &(&t * &(&one - z)) * &den;
    m.entries[1][2] = &(&(&one - &t) * z) * &den;
    m.entries[2][1] = &(&one - &t) * &den;
    m.entries[2][2] = &(&one - z) * &den;
    m
}

fn r_pair(a: usize, b: usize, xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let z = rf(&xs[a] * &xs[b].pow_signed(-1));
    SpinOperator::embed_pair(&r_cal(&z), a, b, legs)
}

/// Product of `𝓡` matrices along a word of adjacent swaps, starting from the
/// left arrangement `start` (position to leg). Each swap of positions
/// `(p, p+1)` holding legs `(a, b)` contributes `𝓡_ab(x_a/x_b)`.
pub fn r_word(start: &[usize], word: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let mut arr = start.to_vec();
    let mut acc = SpinOperator::identity(legs.to_vec());
    for &p in word {
        acc = acc.mul(&r_pair(arr[p], arr[p + 1], xs, legs));
        arr.swap(p, p + 1);
    }
    acc
}

/// The bubble-sort word taking `left` to `right`.
fn bubble_word(left: &[usize], right: &[usize]) -> Vec<usize> {
    let rank: HashMap<usize, usize> = right.iter().enumerate().map(|(p, &l)| (l, p)).collect();
    let mut arr = left.to_vec();
    let mut word = Vec::new();
    while let Some(p) = (0..arr.len().saturating_sub(1)).find(|&p| rank[&arr[p]] > rank[&arr[p + 1]]) {
        word.push(p);
        arr.swap(p, p + 1);
    }
    word
}

/// Every reduced word taking `left` to `right`.
pub fn reduced_words(left: &[usize], right: &[usize]) -> Vec<Vec<usize>> {
    let rank: HashMap<usize, usize> = right.iter().enumerate().map(|(p, &l)| (l, p)).collect();
    fn rec(arr: &mut Vec<usize>, rank: &HashMap<usize, usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut done = true;
        for p in 0..arr.len().saturating_sub(1) {
            if rank[&arr[p]] > rank[&arr[p + 1]] {
                done = false;
                arr.swap(p, p + 1);
                cur.push(p);
                rec(arr, rank, cur, out);
                cur.pop();
                arr.swap(p, p + 1);
            }
        }
        if done {
            out.push(cur.clone());
        }
    }
    let mut out = Vec::new();
    rec(&mut left.to_vec(), &rank, &mut Vec::new(), &mut out);
    out
}

/// The wiring from arrangement `left` to arrangement `right`.
pub fn r_wiring(left: &[usize], right: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    r_word(left, &bubble_word(left, right), xs, legs)
}

/// `𝓡_σ^{1…n}`: lines enter in the order `σ(1)…σ(n)` (0-based) and leave
/// sorted.
pub fn r_sigma(sigma: &[usize], xs: &[LaurentPoly]) -> SpinOperator {
    let id: Vec<usize> = (0..sigma.len()).collect();
    r_wiring(sigma, &id, xs, &a_legs(sigma.len()))
}

/// Positions of `bits` sorted stably, particles first when `desc`.
fn stable_sort(bits: &[u8], desc: bool) -> Vec<usize> {
    let mut rho: Vec<usize> = (0..bits.len()).collect();
    rho.sort_by_key(|&p| if desc { 1 - bits[p] } else { bits[p] });
    rho
}

fn positional_bits(idx: usize, order: &[usize], k: usize) -> Vec<u8> {
    order.iter().map(|&l| bit(idx, l, k)).collect()
}

/// `F_{order}`: row `i` is row `i` of the wiring that sorts the positional
/// occupations of `i` with particles first.
pub fn f_matrix(order: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let k = legs.len();
    let mut cache: HashMap<Vec<usize>, SpinOperator> = HashMap::new();
    let mut out = SpinOperator::identity(legs.to_vec());
    for i in 0..out.dim() {
        let rho = stable_sort(&positional_bits(i, order, k), true);
        let left: Vec<usize> = rho.iter().map(|&p| order[p]).collect();
        let w = cache.entry(left.clone()).or_insert_with(|| r_wiring(&left, order, xs, legs));
        out.entries[i] = w.entries[i].clone();
    }
    out
}

/// `F*_{order}`: column `j` is column `j` of the wiring that sorts the
/// positional occupations of `j` with holes first.
pub fn f_star(order: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let k = legs.len();
    let mut cache: HashMap<Vec<usize>, SpinOperator> = HashMap::new();
    let mut out = SpinOperator::identity(legs.to_vec());
    for j in 0..out.dim() {
        let rho = stable_sort(&positional_bits(j, order, k), false);
        let right: Vec<usize> = rho.iter().map(|&p| order[p]).collect();
        let w = cache.entry(right.clone()).or_insert_with(|| r_wiring(order, &right, xs, legs));
        for i in 0..out.dim() {
            out.entries[i][j] = w.entries[i][j].clone();
        }
    }
    out
}

/// Diagonal entry of `∏_{k<l} Δ_kl` at basis state `j`, pairs taken in
/// positional order.
pub fn delta_entry(j: usize, order: &[usize], xs: &[LaurentPoly], k: usize) -> RatFn {
    let t = LaurentPoly::t();
    let mut d = RatFn::one();
    for a in 0..order.len() {
        for b in (a + 1)..order.len() {
            let (la, lb) = (order[a], order[b]);
            let (ja, jb) = (bit(j, la, k), bit(j, lb, k));
            let (xa, xb) = (&xs[la], &xs[lb]);
            let f = match ja.cmp(&jb) {
                std::cmp::Ordering::Equal => continue,
                std::cmp::Ordering::Greater => &rf(xb - xa) / &rf(xb - &(&t * xa)),
                std::cmp::Ordering::Less => &rf(xa - xb) / &rf(xa - &(&t * xb)),
            };
            d = &d * &f;
        }
    }
    d
}

pub fn delta_product(order: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let k = legs.len();
    SpinOperator::from_fn(legs.to_vec(), |i, j| {
        if i == j {
            delta_entry(j, order, xs, k)
        } else {
            RatFn::zero()
        }
    })
}

/// `F⁻¹ = F* ∏Δ⁻¹`.
pub fn f_inverse(order: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let k = legs.len();
    let mut fs = f_star(order, xs, legs);
    for j in 0..fs.dim() {
        let inv = delta_entry(j, order, xs, k).inv().expect("Δ is invertible");
        for i in 0..fs.dim() {
            if !fs.entries[i][j].is_zero() {
                fs.entries[i][j] = &fs.entries[i][j] * &inv;
            }
        }
    }
    fs
}

fn identity_order(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// A column of tiles applied leg by leg in `order`, the boson entering with
/// occupation 0 and leaving with `m`.
fn tile_column(m: i32, order: &[usize], legs: &[String], tile: impl Fn(usize) -> Tile) -> SpinOperator {
    let k = legs.len();
    SpinOperator::from_fn(legs.to_vec(), |i, j| {
        let mut occ = 0;
        let mut w = LaurentPoly::one();
        for &l in order {
            match tile(l).weight(bit(i, l, k), bit(j, l, k), occ) {
                Some((o, tw)) => {
                    occ = o;
                    w = &w * &tw;
                }
                None => return RatFn::zero(),
            }
        }
        if occ == m {
            rf(w)
        } else {
            RatFn::zero()
        }
    })
}

/// `S^{[m,0]} = ⟨m| L(x_{order_k}) … L(x_{order_1}) |0⟩`.
pub fn column_s(m: usize, order: &[usize], xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    tile_column(m as i32, order, legs, |l| Tile::dark(&xs[l]))
}

/// `B^{[0,0]}(c)`: boundary tiles with parameter `c`, occupation 0 at both ends.
pub fn column_b(c: &LaurentPoly, xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    tile_column(0, &identity_order(legs.len()), legs, |l| Tile::boundary(c, &xs[l]))
}

/// `F S F⁻¹` with everything built in the arrangement `order`.
pub fn conjugate(op: &SpinOperator, order: &[usize], xs: &[LaurentPoly]) -> SpinOperator {
    let f = f_matrix(order, xs, &op.legs);
    let fi = f_inverse(order, xs, &op.legs);
    f.mul(op).mul(&fi)
}

/// The subset-sum form of the twisted column `S̃^{[m,0]}`.
pub fn twisted_column_explicit(m: usize, xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let k = legs.len();
    let t = LaurentPoly::t();
    SpinOperator::from_fn(legs.to_vec(), |i, j| {
        let set: Vec<usize> = (0..k).filter(|&l| bit(i, l, k) == HOLE && bit(j, l, k) == PARTICLE).collect();
        if set.len() != m {
            return RatFn::zero();
        }
        let mut w = RatFn::one();
        for l in 0..k {
            let (a, b) = (bit(i, l, k), bit(j, l, k));
            if set.contains(&l) {
                w = &w * &rf(xs[l].clone());
            } else if a != b {
                return RatFn::zero();
            } else if a == HOLE {
                w = &w * &rf(xs[l].clone());
                for &s in &set {
                    w = &w * &(&rf(&xs[l] - &(&t * &xs[s])) / &rf(&xs[l] - &xs[s]));
                }
            }
        }
        w
    })
}

fn check_size(n: usize, max: usize) -> Result<(), FbasisError> {
    if n > max {
        return Err(FbasisError::TooLarge { n, max });
    }
    Ok(())
}

/// `S̃^{[m,0]}(x_1..x_n)` by conjugation, checked against the subset-sum form.
pub fn twisted_column(m: usize, n: usize) -> Result<SpinOperator, FbasisError> {
    check_size(n, MAX_N)?;
    if m > n {
        return Err(FbasisError::BadColumn { m, legs: n });
    }
    twisted_column_in(m, &a_vars(n), &a_legs(n))
}

fn twisted_column_in(m: usize, xs: &[LaurentPoly], legs: &[String]) -> Result<SpinOperator, FbasisError> {
    let order = identity_order(legs.len());
    let conj = conjugate(&column_s(m, &order, xs, legs), &order, xs);
    if conj != twisted_column_explicit(m, xs, legs) {
        return Err(FbasisError::Mismatch(format!("twisted column m={m} on {} legs", legs.len())));
    }
    Ok(conj)
}

/// `S̃^{[m,0]}` on the `2n` legs `1, 1̄, …` with `x_k̄ = x̄_k`, checked.
pub fn twisted_bold_column(m: usize, n: usize) -> Result<SpinOperator, FbasisError> {
    check_size(n, MAX_BC_N)?;
    if m > 2 * n {
        return Err(FbasisError::BadColumn { m, legs: 2 * n });
    }
    twisted_column_in(m, &bc_vars(n), &bc_legs(n))
}

/// `diag(1, 1 - c x_i)` on each leg.
pub fn twisted_b_explicit(c: &LaurentPoly, xs: &[LaurentPoly], legs: &[String]) -> SpinOperator {
    let k = legs.len();
    SpinOperator::from_fn(legs.to_vec(), |i, j| {
        if i != j {
            return RatFn::zero();
        }
        let mut w = LaurentPoly::one();
        for (l, x) in xs.iter().enumerate() {
            if bit(i, l, k) == PARTICLE {
                w = &w * &(&LaurentPoly::one() - &(c * x));
            }
        }
        rf(w)
    })
}

/// `B̃^{[0,0]}(c)` by conjugation, checked against the diagonal form.
pub fn twisted_b_column(c: &LaurentPoly, n: usize) -> Result<SpinOperator, FbasisError> {
    check_size(n, MAX_BC_N)?;
    let (xs, legs) = (bc_vars(n), bc_legs(n));
    let conj = conjugate(&column_b(c, &xs, &legs), &identity_order(2 * n), &xs);
    if conj != twisted_b_explicit(c, &xs, &legs) {
        return Err(FbasisError::Mismatch(format!("twisted boundary column at n={n}")));
    }
    Ok(conj)
}

/// `⟨𝕂| = ⊗_k ⟨K|_{k k̄}` on the legs `1, 1̄, …, n, n̄`.
pub fn k_covector(n: usize) -> Vec<RatFn> {
    let k = 2 * n;
    (0..1usize << k)
        .map(|idx| {
            let mut w = RatFn::one();
            for p in 0..n {
                let (a, b) = (bit(idx, 2 * p, k), bit(idx, 2 * p + 1, k));
                w = match (a, b) {
                    (HOLE, PARTICLE) => w,
                    (PARTICLE, HOLE) => &w * &rf(-LaurentPoly::t()),
                    _ => return RatFn::zero(),
                };
            }
            w
        })
        .collect()
}

/// Sign-vector sum for `⟨𝕂̃|`, including the factor `∏(x_i - t x̄_i)`.
pub fn twisted_boundary_explicit(n: usize) -> Vec<RatFn> {
    let k = 2 * n;
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let pre = rf(k_prefactor(&a_vars(n)));
    let mut out = vec![RatFn::zero(); 1 << k];
    for eps in crate::perm::sign_vectors(n) {
        let mut idx = 0usize;
        let mut w = pre.clone();
        for p in 0..n {
            let xe = LaurentPoly::x(p + 1).pow_signed(eps[p]);
            w = &w * &(&rf(xe.clone()) / &rf(&one - &xe.pow(2)));
            let (a, b) = if eps[p] > 0 { (PARTICLE, HOLE) } else { (HOLE, PARTICLE) };
            idx |= (a as usize) << (k - 1 - 2 * p);
            idx |= (b as usize) << (k - 2 - 2 * p);
            for q in (p + 1)..n {
                let prod = &xe * &LaurentPoly::x(q + 1).pow_signed(eps[q]);
                w = &w * &(&rf(&one - &(&t * &prod)) / &rf(&one - &prod));
            }
        }
        out[idx] = w;
    }
    out
}

/// `⟨𝕂̃| = ⟨𝕂| 𝔽⁻¹`, checked against the sign-vector sum.
pub fn twisted_boundary(n: usize) -> Result<Vec<RatFn>, FbasisError> {
    check_size(n, MAX_BC_N)?;
    let (xs, legs) = (bc_vars(n), bc_legs(n));
    let fi = f_inverse(&identity_order(2 * n), &xs, &legs);
    let v = fi.apply_left(&k_covector(n));
    if v != twisted_boundary_explicit(n) {
        return Err(FbasisError::Mismatch(format!("twisted boundary covector at n={n}")));
    }
    Ok(v)
}

fn all_particles(k: usize) -> usize {
    (1 << k) - 1
}

fn columns_value(start: Vec<RatFn>, ops: &[SpinOperator], k: usize) -> Result<LaurentPoly, FbasisError> {
    let v = ops.iter().fold(start, |v, op| op.apply_left(&v));
    v[all_particles(k)]
        .to_poly()
        .ok_or_else(|| FbasisError::Mismatch("column product is not a polynomial".into()))
}

fn multiplicities(l: &Partition) -> Vec<usize> {
    (0..=l.largest()).map(|i| l.multiplicity(i)).collect()
}

/// `∏x_i P_λ` assembled from the twisted columns between `⟨hole…|` and
/// `|particle…⟩`.
pub fn p_from_columns(l: &Partition) -> Result<LaurentPoly, FbasisError> {
    let n = l.len();
    check_size(n, MAX_N)?;
    let (xs, legs) = (a_vars(n), a_legs(n));
    let ops: Vec<SpinOperator> = multiplicities(l).into_iter().map(|m| twisted_column_explicit(m, &xs, &legs)).collect();
    let mut start = vec![RatFn::zero(); 1 << n];
    start[0] = RatFn::one();
    columns_value(start, &ops, n)
}

/// `∏(x_i - t x̄_i) K_λ` assembled from the twisted boundary, two twisted
/// boundary columns and the twisted columns.
pub fn k_from_columns(l: &Partition, bp: &BoundaryParams) -> Result<LaurentPoly, FbasisError> {
    let n = l.len();
    check_size(n, MAX_BC_N)?;
    let (xs, legs) = (bc_vars(n), bc_legs(n));
    let mut ops = vec![twisted_b_explicit(&bp.gamma, &xs, &legs), twisted_b_explicit(&bp.delta, &xs, &legs)];
    ops.extend(multiplicities(l).into_iter().map(|m| twisted_column_explicit(m, &xs, &legs)));
    columns_value(twisted_boundary_explicit(n), &ops, 2 * n)
}

/// The same product with untwisted columns and `⟨𝕂|`.
pub fn k_from_plain_columns(l: &Partition, bp: &BoundaryParams) -> Result<LaurentPoly, FbasisError> {
    let n = l.len();
    check_size(n, MAX_BC_N)?;
    let (xs, legs) = (bc_vars(n), bc_legs(n));
    let order = identity_order(2 * n);
    let mut ops = vec![column_b(&bp.gamma, &xs, &legs), column_b(&bp.delta, &xs, &legs)];
    ops.extend(multiplicities(l).into_iter().map(|m| column_s(m, &order, &xs, &legs)));
    columns_value(k_covector(n), &ops, 2 * n)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FbasisCheck {
    pub name: String,
    pub passed: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    crate::perm::permutations_with_sign(n).into_iter().map(|(p, _)| p).collect()
}

/// Runs every `F` basis check on `n` legs and `n` variables.
pub fn fbasis_check(n: usize) -> Result<Vec<FbasisCheck>, FbasisError> {
    check_size(n, MAX_N)?;
    let (xs, legs) = (a_vars(n), a_legs(n));
    let id = identity_order(n);
    let mut out = Vec::new();
    let mut push = |name: String, passed: bool| out.push(FbasisCheck { name, passed });

    let f = f_matrix(&id, &xs, &legs);
    let fs = f_star(&id, &xs, &legs);
    let fi = f_inverse(&id, &xs, &legs);
    push("F F* = product of Δ".into(), f.mul(&fs) == delta_product(&id, &xs, &legs));
    push("F F⁻¹ = 1".into(), f.mul(&fi) == SpinOperator::identity(legs.clone()));
    let top = f.entries[0].iter().enumerate().all(|(j, e)| *e == if j == 0 { RatFn::one() } else { RatFn::zero() });
    let last = all_particles(n);
    let bottom = (0..f.dim()).all(|i| fi.entries[i][last] == if i == last { RatFn::one() } else { RatFn::zero() });
    push("⟨hole…|F = ⟨hole…|".into(), top);
    push("F⁻¹|particle…⟩ = |particle…⟩".into(), bottom);

    for sigma in permutations(n) {
        let lhs = f_matrix(&sigma, &xs, &legs).mul(&r_sigma(&sigma, &xs));
        push(format!("factorizing equation σ={sigma:?}"), lhs == f);
        let words = reduced_words(&sigma, &id);
        let first = r_word(&sigma, &words[0], &xs, &legs);
        push(
            format!("reduced words agree σ={sigma:?}"),
            words.iter().all(|w| r_word(&sigma, w, &xs, &legs) == first),
        );
    }

    for m in 0..=n {
        let s = twisted_column_in(m, &xs, &legs);
        push(format!("twisted column m={m}"), s.is_ok());
        let Ok(s) = s else { continue };
        for sigma in permutations(n) {
            let other = conjugate(&column_s(m, &sigma, &xs, &legs), &sigma, &xs);
            push(format!("twisted column symmetry m={m} σ={sigma:?}"), other == s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RatFn {
        rf(&LaurentPoly::x(1) * &LaurentPoly::x(2).pow_signed(-1))
    }

    #[test]
    fn r_cal_entries_and_unitarity() {
        let r = r_cal(&z());
        assert_eq!(*r.get(0, 0), RatFn::one());
        let t = rf(LaurentPoly::t());
        let want = &(&(&RatFn::one() - &t) * &z()) / &(&RatFn::one() - &(&t * &z()));
        assert_eq!(*r.get(1, 2), want);
        let legs = a_legs(2);
        let xs = a_vars(2);
        let u = r_pair(0, 1, &xs, &legs).mul(&r_pair(1, 0, &xs, &legs));
        assert_eq!(u, SpinOperator::identity(legs));
    }

    #[test]
    fn n1_f_is_identity() {
        let f = f_matrix(&[0], &a_vars(1), &a_legs(1));
        assert_eq!(f, SpinOperator::identity(a_legs(1)));
    }

    #[test]
    fn single_transposition() {
        let xs = a_vars(2);
        let r = r_sigma(&[1, 0], &xs);
        assert_eq!(r, r_pair(1, 0, &xs, &a_legs(2)));
    }

    #[test]
    fn n1_columns() {
        let x = rf(LaurentPoly::x(1));
        let s0 = twisted_column(0, 1).unwrap();
        assert_eq!(s0.entries, vec![vec![x.clone(), RatFn::zero()], vec![RatFn::zero(), RatFn::one()]]);
        let s1 = twisted_column(1, 1).unwrap();
        assert_eq!(s1.entries, vec![vec![RatFn::zero(), x], vec![RatFn::zero(), RatFn::zero()]]);
    }

    #[test]
    fn relabel_round_trip() {
        let xs = a_vars(2);
        let r = r_pair(0, 1, &xs, &a_legs(2));
        assert_eq!(r.relabel(&[1, 0]).relabel(&[1, 0]), r);
    }
}
