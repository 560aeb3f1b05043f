//! Partitions with explicit zero parts, and the t-coefficients built from
//! their multiplicities.
//!
//! The length of a partition counts its zero parts, so `(5,4,2,0,0)` has
//! length 5 and `m_0 = 2`.

use crate::algebra::{LaurentPoly, Mono, RatFn, Var};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("odd multiplicity of part {0}")]
    OddMultiplicity(u32),
    #[error("partitions do not interlace")]
    NotInterlacing,
    #[error("cannot parse partition `{0}`")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing);
        }
        Ok(Partition(parts))
    }

    /// `n` zero parts.
    pub fn zeros(n: usize) -> Self {
        Partition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, j: u32) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// All multiplicities `m_j`, `j >= 0`, even.
    pub fn is_even(&self) -> bool {
        (0..=self.largest()).all(|j| self.multiplicity(j).is_multiple_of(2))
    }

    /// Conjugate partition (positive parts only).
    pub fn conjugate(&self) -> Vec<u32> {
        (1..=self.largest())
            .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[5,4,2,0,0]`, with or without brackets; `[]` is empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition(vec![]));
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// `1 - t^k`.
pub fn one_minus_t(k: u32) -> LaurentPoly {
    one_minus_t_times(k, &LaurentPoly::one())
}

/// `1 - c*t^k`.
pub fn one_minus_t_times(k: u32, c: &LaurentPoly) -> LaurentPoly {
    &LaurentPoly::one() - &c.mul_mono(&Mono::var(Var::T, k as i32))
}

fn prod(it: impl Iterator<Item = LaurentPoly>) -> LaurentPoly {
    it.fold(LaurentPoly::one(), |a, b| &a * &b)
}

/// `b_λ(t) = ∏_{j≥1} ∏_{i≤m_j} (1-t^i)`.
pub fn b_coeff(l: &Partition) -> LaurentPoly {
    prod((1..=l.largest()).flat_map(|j| (1..=l.multiplicity(j) as u32).map(one_minus_t)))
}

/// `b^ev_λ(t) = ∏_{j≥1} ∏_{i≤m_j/2} (1-t^{2i-1})`.
pub fn b_even_coeff(l: &Partition) -> Result<LaurentPoly, PartitionError> {
    for j in 1..=l.largest() {
        if l.multiplicity(j) % 2 == 1 {
            return Err(PartitionError::OddMultiplicity(j));
        }
    }
    Ok(prod((1..=l.largest()).flat_map(|j| {
        (1..=(l.multiplicity(j) / 2) as u32).map(|i| one_minus_t(2 * i - 1))
    })))
}

/// `v_λ(t) = ∏_{i≥0} ∏_{j≤m_i} (1-t^j)/(1-t)`, zero parts included.
pub fn v_coeff(l: &Partition) -> RatFn {
    let num = prod((0..=l.largest()).flat_map(|i| (1..=l.multiplicity(i) as u32).map(one_minus_t)));
    let mut v = RatFn::from_poly(num);
    let k = l.len() as i32;
    if k > 0 {
        v = &v * &RatFn::from_poly(one_minus_t(1)).pow(-k).unwrap();
    }
    v.cancelled()
}

/// `λ_i ≥ μ_i ≥ λ_{i+1}` with `ℓ(μ) ∈ {ℓ(λ), ℓ(λ)-1}`.
pub fn interlaces(l: &Partition, m: &Partition) -> bool {
    let (lp, mp) = (l.parts(), m.parts());
    if !(mp.len() == lp.len() || mp.len() + 1 == lp.len()) {
        return false;
    }
    (0..mp.len()).all(|i| lp[i] >= mp[i] && lp.get(i + 1).is_none_or(|&n| mp[i] >= n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Phi,
    Psi,
    Phi0,
    Psi0,
}

/// Branching coefficients: `φ` collects `1-t^{m_i(λ)}` where `m_i(μ)+1 = m_i(λ)`,
/// `ψ` collects `1-t^{m_i(μ)}` where `m_i(μ) = m_i(λ)+1`. The plain kinds
/// range over `i ≥ 1`, the `0` kinds over `i ≥ 0`.
pub fn phi_psi(l: &Partition, m: &Partition, kind: Branch) -> Result<LaurentPoly, PartitionError> {
    if !interlaces(l, m) {
        return Err(PartitionError::NotInterlacing);
    }
    let start = match kind {
        Branch::Phi | Branch::Psi => 1,
        Branch::Phi0 | Branch::Psi0 => 0,
    };
    let top = l.largest().max(m.largest());
    let mut acc = LaurentPoly::one();
    for i in start..=top {
        let (ml, mm) = (l.multiplicity(i), m.multiplicity(i));
        match kind {
            Branch::Phi | Branch::Phi0 if mm + 1 == ml => acc = &acc * &one_minus_t(ml as u32),
            Branch::Psi | Branch::Psi0 if mm == ml + 1 => acc = &acc * &one_minus_t(mm as u32),
            _ => {}
        }
    }
    Ok(acc)
}

/// Every partition with exactly `length` stored parts and weight at most
/// `max_weight`, ordered by weight and then lexicographically.
pub fn enumerate(length: usize, max_weight: u32, even_only: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let mut cur = Vec::with_capacity(length);
        fill(length, w, w, &mut cur, &mut out);
    }
    let mut out: Vec<Partition> = out.into_iter().map(Partition).collect();
    if even_only {
        out.retain(|p| p.is_even());
    }
    for chunk in out.chunk_by_mut(|a, b| a.weight() == b.weight()) {
        chunk.sort();
    }
    out
}

fn fill(left: usize, weight: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if left == 0 {
        if weight == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if weight > cap * left as u32 {
        return;
    }
    for p in (0..=cap.min(weight)).rev() {
        cur.push(p);
        fill(left - 1, weight - p, p, cur, out);
        cur.pop();
    }
}

/// All `μ` of the given length with `λ ≽ μ`.
pub fn interlacing_below(l: &Partition, len: usize) -> Vec<Partition> {
    let lp = l.parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(lp: &[u32], len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == len {
            out.push(Partition(cur.clone()));
            return;
        }
        let hi = lp[i];
        let lo = lp.get(i + 1).copied().unwrap_or(0);
        for v in lo..=hi {
            cur.push(v);
            go(lp, len, cur, out);
            cur.pop();
        }
    }
    if len == lp.len() || len + 1 == lp.len() {
        go(lp, len, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn multiplicities() {
        let l = part("[5,4,2,0,0]");
        assert_eq!(l.len(), 5);
        assert_eq!(l.multiplicity(0), 2);
        assert_eq!(part("[3,3,3]").multiplicity(3), 3);
        assert_eq!(part("[]").multiplicity(7), 0);
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(b_coeff(&part("[1,1,0]")), &one_minus_t(1) * &one_minus_t(2));
        assert_eq!(b_coeff(&part("[0,0,0]")), LaurentPoly::one());
        assert_eq!(b_even_coeff(&part("[2,2,2,2]")).unwrap(), &one_minus_t(1) * &one_minus_t(3));
        assert_eq!(b_even_coeff(&part("[2,1,1]")), Err(PartitionError::OddMultiplicity(2)));
        assert_eq!(v_coeff(&part("[0,0]")).to_poly().unwrap(), "1 + t".parse().unwrap());
        assert_eq!(v_coeff(&part("[2,1]")), RatFn::one());
    }

    #[test]
    fn branching_examples() {
        assert_eq!(phi_psi(&part("[2,1]"), &part("[1]"), Branch::Phi).unwrap(), one_minus_t(1));
        assert_eq!(phi_psi(&part("[1]"), &part("[1]"), Branch::Psi).unwrap(), LaurentPoly::one());
        assert_eq!(phi_psi(&part("[1,0]"), &part("[0,0]"), Branch::Psi0).unwrap(), one_minus_t(2));
        assert!(interlaces(&part("[2,2]"), &part("[2]")));
        assert!(!interlaces(&part("[3,1]"), &part("[4]")));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(1, 2, false), vec![part("[0]"), part("[1]"), part("[2]")]);
        assert_eq!(enumerate(2, 2, true), vec![part("[0,0]"), part("[1,1]")]);
        assert_eq!(enumerate(0, 5, false), vec![part("[]")]);
        assert_eq!(enumerate(3, 5, false).len(), 16);
    }
}
