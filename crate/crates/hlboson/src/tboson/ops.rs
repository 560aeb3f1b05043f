//! Matrices over auxiliary legs whose entries are operators on one bosonic
//! site, and the six-vertex `R` matrix.
//!
//! A site operator is stored as a map from occupation shift to a weight that
//! is a rational function of `u`, where `u` stands for `t^m` with `m` the
//! input occupation. This covers every occupation at once; `at_occupation`
//! recovers the concrete matrix element.

use super::tiles::Tile;
use crate::algebra::{LaurentPoly, Mono, RatFn, Rational, Var};
use num_traits::One;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SiteOp(BTreeMap<i32, RatFn>);

impl SiteOp {
    pub fn zero() -> Self {
        SiteOp::default()
    }

    pub fn scalar(c: RatFn) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(0, c);
        }
        SiteOp(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &RatFn)> {
        self.0.iter().map(|(&s, w)| (s, w))
    }

    fn add_term(&mut self, s: i32, w: RatFn) {
        if w.is_zero() {
            return;
        }
        let e = self.0.entry(s).or_default();
        *e += &w;
        if e.is_zero() {
            self.0.remove(&s);
        }
    }

    pub fn add(&self, o: &SiteOp) -> SiteOp {
        let mut r = self.clone();
        for (&s, w) in &o.0 {
            r.add_term(s, w.clone());
        }
        r
    }

    /// Operator product `self · o`: `o` acts first.
    pub fn mul(&self, o: &SiteOp) -> SiteOp {
        let mut r = SiteOp::zero();
        for (&s2, w2) in &o.0 {
            for (&s1, w1) in &self.0 {
                let w1s = if s2 == 0 || !w1.contains_var(Var::U) {
                    w1.clone()
                } else {
                    let shifted = LaurentPoly::term(
                        Mono::var(Var::U, 1).mul(&Mono::var(Var::T, s2)),
                        Rational::one(),
                    );
                    w1.substitute(&[(Var::U, RatFn::from_poly(shifted))]).expect("shift substitution")
                };
                r.add_term(s1 + s2, w2 * &w1s);
            }
        }
        r
    }

    /// `⟨m+s| op |m⟩` for every shift `s`, with `u = t^m`.
    pub fn at_occupation(&self, m: i32) -> BTreeMap<i32, RatFn> {
        let tm = RatFn::from_poly(LaurentPoly::var_pow(Var::T, m));
        self.0
            .iter()
            .map(|(&s, w)| (s, w.substitute(&[(Var::U, tm.clone())]).expect("occupation substitution")))
            .filter(|(_, w)| !w.is_zero())
            .collect()
    }

    /// Equality of the concrete matrix elements at occupation `m`.
    pub fn eq_at(&self, o: &SiteOp, m: i32) -> bool {
        let (a, b) = (self.at_occupation(m), o.at_occupation(m));
        let keys: std::collections::BTreeSet<i32> = a.keys().chain(b.keys()).copied().collect();
        keys.into_iter()
            .filter(|s| m + s >= 0)
            .all(|s| a.get(&s).cloned().unwrap_or_default() == b.get(&s).cloned().unwrap_or_default())
    }
}

/// Dense matrix over `k` two-dimensional legs; basis index bit for leg `i`
/// is `1 << (k-1-i)`, so leg 0 is the most significant.
#[derive(Clone, Debug, PartialEq)]
pub struct LegMatrix {
    pub legs: usize,
    pub entries: Vec<Vec<SiteOp>>,
}

impl LegMatrix {
    pub fn dim(&self) -> usize {
        1 << self.legs
    }

    pub fn identity(legs: usize) -> Self {
        let d = 1 << legs;
        let entries = (0..d)
            .map(|i| (0..d).map(|j| if i == j { SiteOp::scalar(RatFn::one()) } else { SiteOp::zero() }).collect())
            .collect();
        LegMatrix { legs, entries }
    }

    pub fn scalar_identity(legs: usize, c: &RatFn) -> Self {
        let mut m = LegMatrix::identity(legs);
        for i in 0..m.dim() {
            m.entries[i][i] = SiteOp::scalar(c.clone());
        }
        m
    }

    /// Embeds a matrix acting on `small.legs` legs at positions `at` (in the
    /// small matrix's leg order) into `legs` legs.
    pub fn embed(small: &LegMatrix, at: &[usize], legs: usize) -> Self {
        assert_eq!(small.legs, at.len());
        let d = 1 << legs;
        let mut entries = vec![vec![SiteOp::zero(); d]; d];
        let bit = |idx: usize, leg: usize| (idx >> (legs - 1 - leg)) & 1;
        let sub = |idx: usize| {
            at.iter().fold(0usize, |acc, &leg| (acc << 1) | bit(idx, leg))
        };
        let rest_mask: usize = (0..legs)
            .filter(|l| !at.contains(l))
            .map(|l| 1 << (legs - 1 - l))
            .sum();
        for i in 0..d {
            for j in 0..d {
                if i & rest_mask != j & rest_mask {
                    continue;
                }
                entries[i][j] = small.entries[sub(i)][sub(j)].clone();
            }
        }
        LegMatrix { legs, entries }
    }

    pub fn mul(&self, o: &LegMatrix) -> LegMatrix {
        assert_eq!(self.legs, o.legs);
        let d = self.dim();
        let mut entries = vec![vec![SiteOp::zero(); d]; d];
        for i in 0..d {
            for k in 0..d {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..d {
                    if o.entries[k][j].is_zero() {
                        continue;
                    }
                    let p = self.entries[i][k].mul(&o.entries[k][j]);
                    entries[i][j] = entries[i][j].add(&p);
                }
            }
        }
        LegMatrix { legs: self.legs, entries }
    }

    /// First entry `(i, j)` where the two matrices differ at some occupation
    /// `0..=max_occ` or symbolically in `u`.
    pub fn first_difference(&self, o: &LegMatrix, max_occ: i32) -> Option<(usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (&self.entries[i][j], &o.entries[i][j]);
                if a != b || (0..=max_occ).any(|m| !a.eq_at(b, m)) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// One-leg matrix of a tile, read off `Tile::weight` with the site shifted
/// so that `t^m` appears as `u`.
pub fn tile_matrix(tile: &Tile) -> LegMatrix {
    let t = tile.clone().with_shift(true);
    let mut entries = vec![vec![SiteOp::zero(); 2]; 2];
    for l in 0..2u8 {
        for r in 0..2u8 {
            if let Some((s, w)) = t.weight(l, r, 0) {
                let mut m = BTreeMap::new();
                m.insert(s, RatFn::from_poly(w));
                entries[l as usize][r as usize] = SiteOp(m);
            }
        }
    }
    LegMatrix { legs: 1, entries }
}

/// Entries of `R(z)` indexed `[(a_in, b_in)][(a_out, b_out)]` with index `2a + b`.
pub fn r_entries(z: &RatFn) -> [[RatFn; 4]; 4] {
    let one = RatFn::one();
    let t = RatFn::var(Var::T);
    let den = (&one - z).inv().expect("R matrix at z = 1");
    let diag = &(&one - &(&t * z)) * &den;
    let zero = RatFn::zero();
    [
        [diag.clone(), zero.clone(), zero.clone(), zero.clone()],
        [zero.clone(), t.clone(), &(&(&one - &t) * z) * &den, zero.clone()],
        [zero.clone(), &(&one - &t) * &den, one.clone(), zero.clone()],
        [zero.clone(), zero.clone(), zero, diag],
    ]
}

/// `(1 - z) R(z)`, polynomial in `z`.
pub fn r_entries_poly(z: &LaurentPoly) -> [[LaurentPoly; 4]; 4] {
    let one = LaurentPoly::one();
    let t = LaurentPoly::t();
    let zero = LaurentPoly::zero();
    let diag = &one - &(&t * z);
    [
        [diag.clone(), zero.clone(), zero.clone(), zero.clone()],
        [zero.clone(), &t * &(&one - z), &(&one - &t) * z, zero.clone()],
        [zero.clone(), &one - &t, &one - z, zero.clone()],
        [zero.clone(), zero.clone(), zero, diag],
    ]
}

pub fn r_matrix(z: &RatFn) -> LegMatrix {
    let e = r_entries(z);
    LegMatrix {
        legs: 2,
        entries: e.iter().map(|row| row.iter().map(|c| SiteOp::scalar(c.clone())).collect()).collect(),
    }
}
