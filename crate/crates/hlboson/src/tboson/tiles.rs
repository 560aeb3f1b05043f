//! Tiles of the t-boson model and single-row application over occupation
//! vectors.
//!
//! A tile has a left and right horizontal edge (0 = hole, 1 = particle) and
//! acts on one bosonic site. The input occupation `m` is the ket side; the
//! output is `m + right - left`.

use crate::algebra::{LaurentPoly, Mono, Rational, Var};
use num_traits::One;
use std::collections::HashMap;

pub const HOLE: u8 = 0;
pub const PARTICLE: u8 = 1;

#[derive(Clone, Debug, PartialEq)]
pub enum TileKind {
    /// `L(x) = [[x, x φ†], [φ, 1]]`
    Dark,
    /// `L*(x) = [[1, φ†], [x φ, x]]`
    Light,
    /// `B(x) = [[t^N, c x φ† t^N], [φ, 1 - c x t^N]]` with boundary parameter `c`
    Boundary(LaurentPoly),
    /// `B*(x) = [[x t^N, c φ† t^N], [x φ, x - c t^N]]`
    BoundaryStar(LaurentPoly),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tile {
    pub kind: TileKind,
    pub x: LaurentPoly,
    /// Site carries the formal shift: `t^m` reads `u t^m` and `m` may be negative.
    pub shifted: bool,
}

impl Tile {
    pub fn dark(x: &LaurentPoly) -> Tile {
        Tile { kind: TileKind::Dark, x: x.clone(), shifted: false }
    }

    pub fn light(x: &LaurentPoly) -> Tile {
        Tile { kind: TileKind::Light, x: x.clone(), shifted: false }
    }

    pub fn boundary(c: &LaurentPoly, x: &LaurentPoly) -> Tile {
        Tile { kind: TileKind::Boundary(c.clone()), x: x.clone(), shifted: false }
    }

    pub fn boundary_star(c: &LaurentPoly, x: &LaurentPoly) -> Tile {
        Tile { kind: TileKind::BoundaryStar(c.clone()), x: x.clone(), shifted: false }
    }

    pub fn with_shift(mut self, shifted: bool) -> Tile {
        self.shifted = shifted;
        self
    }

    fn t_pow(&self, m: i32) -> LaurentPoly {
        let mut mono = Mono::var(Var::T, m);
        if self.shifted {
            mono = mono.mul(&Mono::var(Var::U, 1));
        }
        LaurentPoly::term(mono, Rational::one())
    }

    /// Output occupation and weight, or `None` when the weight vanishes.
    pub fn weight(&self, left: u8, right: u8, m: i32) -> Option<(i32, LaurentPoly)> {
        let out = m + right as i32 - left as i32;
        if !self.shifted && (m < 0 || out < 0) {
            return None;
        }
        let one = LaurentPoly::one();
        let x = &self.x;
        let w = match (&self.kind, left, right) {
            (TileKind::Dark, 0, 0) | (TileKind::Dark, 0, 1) => x.clone(),
            (TileKind::Dark, 1, 0) => &one - &self.t_pow(m),
            (TileKind::Dark, 1, 1) => one,
            (TileKind::Light, 0, 0) | (TileKind::Light, 0, 1) => one,
            (TileKind::Light, 1, 0) => x * &(&one - &self.t_pow(m)),
            (TileKind::Light, 1, 1) => x.clone(),
            (TileKind::Boundary(_), 0, 0) => self.t_pow(m),
            (TileKind::Boundary(c), 0, 1) => &(c * x) * &self.t_pow(m),
            (TileKind::Boundary(_), 1, 0) => &one - &self.t_pow(m),
            (TileKind::Boundary(c), 1, 1) => &one - &(&(c * x) * &self.t_pow(m)),
            (TileKind::BoundaryStar(_), 0, 0) => x * &self.t_pow(m),
            (TileKind::BoundaryStar(c), 0, 1) => c * &self.t_pow(m),
            (TileKind::BoundaryStar(_), 1, 0) => x * &(&one - &self.t_pow(m)),
            (TileKind::BoundaryStar(c), 1, 1) => x - &(c * &self.t_pow(m)),
            _ => unreachable!("edges are 0 or 1"),
        };
        if w.is_zero() {
            None
        } else {
            Some((out, w))
        }
    }
}

/// Applies a row of tiles (one per site, left to right) to an input state.
/// Returns every output state with its summed weight for the given edges.
pub fn apply_row(tiles: &[Tile], left: u8, right: u8, input: &[i32]) -> Vec<(Vec<i32>, LaurentPoly)> {
    assert_eq!(tiles.len(), input.len());
    let mut acc: HashMap<Vec<i32>, LaurentPoly> = HashMap::new();
    let mut cur = Vec::with_capacity(input.len());
    row_dfs(tiles, input, left, right, 0, &mut cur, LaurentPoly::one(), &mut acc);
    let mut out: Vec<_> = acc.into_iter().filter(|(_, w)| !w.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[allow(clippy::too_many_arguments)]
fn row_dfs(
    tiles: &[Tile],
    input: &[i32],
    edge: u8,
    right: u8,
    i: usize,
    cur: &mut Vec<i32>,
    w: LaurentPoly,
    acc: &mut HashMap<Vec<i32>, LaurentPoly>,
) {
    if i == tiles.len() {
        if edge == right {
            *acc.entry(cur.clone()).or_default() += &w;
        }
        return;
    }
    for r in [HOLE, PARTICLE] {
        if let Some((m, tw)) = tiles[i].weight(edge, r, input[i]) {
            cur.push(m);
            row_dfs(tiles, input, r, right, i + 1, cur, &w * &tw, acc);
            cur.pop();
        }
    }
}

/// Propagates a weighted set of states through one row.
pub fn step_row(
    states: &HashMap<Vec<i32>, LaurentPoly>,
    tiles: &[Tile],
    left: u8,
    right: u8,
) -> HashMap<Vec<i32>, LaurentPoly> {
    let mut next: HashMap<Vec<i32>, LaurentPoly> = HashMap::new();
    for (s, w) in states {
        for (o, rw) in apply_row(tiles, left, right, s) {
            *next.entry(o).or_default() += &(w * &rw);
        }
    }
    next.retain(|_, w| !w.is_zero());
    next
}

/// Nonzero components of the boundary covector `<K|` on the pair `(a, ā)`
/// of left edges: `(hole, particle) -> 1`, `(particle, hole) -> -t`.
pub fn k_components() -> [((u8, u8), LaurentPoly); 2] {
    [
        ((HOLE, PARTICLE), LaurentPoly::one()),
        ((PARTICLE, HOLE), -LaurentPoly::t()),
    ]
}
