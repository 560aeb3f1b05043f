//! Six-vertex partition functions on the five domains: domain wall with a
//! bosonic zeroth column, off-diagonally symmetric, U-turn, doubly U-turn and
//! U-turn with off-diagonal symmetry.
//!
//! Every domain is a network of spectral lines. Lines meet at crossings
//! carrying `R(ℓ_a/ℓ_b)`, start either at a fixed edge or at a U-turn
//! (the boundary covector `K`), may pass a spin flip which exchanges hole and
//! particle and inverts the label, and end either at fixed edges or by
//! entering the rows of one bosonic column. The sum over configurations is
//! a dynamic program over the line states between events.

pub mod closed;
pub mod props;

pub use closed::{classical_dwpf, closed_form, uniqueness_check, ClosedKind, UniquenessReport};
pub use props::{property_report, property_suite, PropertyReport, PropertyResult};

use crate::algebra::{AlgebraError, LaurentPoly, RatFn, Var};
use crate::tboson::{even_coefficient, BosonState, Tile, HOLE, PARTICLE};
use crate::tboson::ops::r_entries_poly;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    DwHybrid,
    Os,
    U,
    Uu,
    Uo,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::DwHybrid, Kind::Os, Kind::U, Kind::Uu, Kind::Uo];

    pub fn name(self) -> &'static str {
        match self {
            Kind::DwHybrid => "DW",
            Kind::Os => "OS",
            Kind::U => "U",
            Kind::Uu => "UU",
            Kind::Uo => "UO",
        }
    }

    /// OS and UO are sized by their number of variables, which must be even.
    pub fn even_sized(self) -> bool {
        matches!(self, Kind::Os | Kind::Uo)
    }

    pub fn max_size(self) -> usize {
        match self {
            Kind::DwHybrid | Kind::U => 3,
            Kind::Uu => 2,
            Kind::Os | Kind::Uo => 4,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = PfError;
    fn from_str(s: &str) -> Result<Self, PfError> {
        match s.to_ascii_uppercase().as_str() {
            "DW" | "DW_HYBRID" => Ok(Kind::DwHybrid),
            "OS" => Ok(Kind::Os),
            "U" => Ok(Kind::U),
            "UU" => Ok(Kind::Uu),
            "UO" => Ok(Kind::Uo),
            _ => Err(PfError::UnknownKind(s.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum PfError {
    #[error("{kind} of size {n} is beyond the enumeration range (max {max})")]
    SizeTooLarge { kind: Kind, n: usize, max: usize },
    #[error("{kind} needs an even positive size, got {n}")]
    BadSize { kind: Kind, n: usize },
    #[error("unknown domain kind {0:?}")]
    UnknownKind(String),
    #[error("renormalized {0} partition function is not a Laurent polynomial")]
    NotPolynomial(Kind),
    #[error("{kind}: property {index} ({name}) fails")]
    PropertyViolated { kind: Kind, index: usize, name: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub label: LaurentPoly,
    /// Fixed starting edge, or `None` for a line leaving a U-turn.
    pub start: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    /// `a` is the line travelling downward through the crossing.
    Cross { a: usize, b: usize },
    Flip(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnRow {
    pub line: usize,
    pub dark: bool,
    pub right: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bra {
    Vacuum,
    Even,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Exit {
    Fixed(Vec<u8>),
    /// Rows of the shifted zeroth column from top to bottom; the top state
    /// is the vacuum.
    Column { rows: Vec<ColumnRow>, bra: Bra },
}

#[derive(Clone, Debug, PartialEq)]
pub struct DomainSpec {
    pub kind: Kind,
    pub n: usize,
    pub lines: Vec<Line>,
    /// U-turns as `(a, ā)`.
    pub pairs: Vec<(usize, usize)>,
    pub events: Vec<Event>,
    pub exit: Exit,
}

fn xv(i: usize) -> LaurentPoly {
    LaurentPoly::x(i)
}

fn xb(i: usize) -> LaurentPoly {
    LaurentPoly::x(i).pow_signed(-1)
}

fn yv(i: usize) -> LaurentPoly {
    LaurentPoly::y(i)
}

fn yb(i: usize) -> LaurentPoly {
    LaurentPoly::y(i).pow_signed(-1)
}

fn check_size(kind: Kind, n: usize) -> Result<(), PfError> {
    if n == 0 || (kind.even_sized() && n % 2 == 1) {
        return Err(PfError::BadSize { kind, n });
    }
    if n > kind.max_size() {
        return Err(PfError::SizeTooLarge { kind, n, max: kind.max_size() });
    }
    Ok(())
}

fn sorted_events(mut keyed: Vec<(i64, Event)>) -> Vec<Event> {
    keyed.sort_by_key(|(k, _)| *k);
    keyed.into_iter().map(|(_, e)| e).collect()
}

/// Crossings and corners of a bundle whose lines bend once: line `k`
/// (1-based) turns at position `3 - 2k` and meets every later line's second
/// leg at `3 - j - k`.
fn folded_events(lines: usize) -> Vec<Event> {
    let mut keyed = Vec::new();
    for k in 1..=lines {
        keyed.push((3 - 2 * k as i64, Event::Flip(k - 1)));
        for j in (k + 1)..=lines {
            keyed.push((3 - (j + k) as i64, Event::Cross { a: k - 1, b: j - 1 }));
        }
    }
    sorted_events(keyed)
}

impl DomainSpec {
    pub fn new(kind: Kind, n: usize) -> Result<Self, PfError> {
        check_size(kind, n)?;
        Ok(match kind {
            Kind::DwHybrid => Self::dw(n),
            Kind::Os => Self::os(n),
            Kind::U => Self::u(n),
            Kind::Uu => Self::uu(n),
            Kind::Uo => Self::uo(n),
        })
    }

    fn dw(n: usize) -> Self {
        let mut lines: Vec<Line> = (1..=n).map(|k| Line { label: xv(n + 1 - k), start: Some(HOLE) }).collect();
        lines.extend((1..=n).map(|m| Line { label: yb(m), start: Some(PARTICLE) }));
        let mut keyed = Vec::new();
        for k in 1..=n {
            for m in 1..=n {
                keyed.push((k as i64 - m as i64, Event::Cross { a: k - 1, b: n + m - 1 }));
            }
        }
        let mut rows: Vec<ColumnRow> =
            (1..=n).rev().map(|m| ColumnRow { line: n + m - 1, dark: false, right: HOLE }).collect();
        rows.extend((1..=n).rev().map(|k| ColumnRow { line: k - 1, dark: true, right: PARTICLE }));
        DomainSpec {
            kind: Kind::DwHybrid,
            n,
            lines,
            pairs: vec![],
            events: sorted_events(keyed),
            exit: Exit::Column { rows, bra: Bra::Vacuum },
        }
    }

    fn os(n: usize) -> Self {
        let lines = (1..=n).map(|k| Line { label: xv(k), start: Some(HOLE) }).collect();
        let rows = (0..n).rev().map(|k| ColumnRow { line: k, dark: false, right: HOLE }).collect();
        DomainSpec {
            kind: Kind::Os,
            n,
            lines,
            pairs: vec![],
            events: folded_events(n),
            exit: Exit::Column { rows, bra: Bra::Even },
        }
    }

    fn u(n: usize) -> Self {
        let mut lines = Vec::new();
        let mut pairs = Vec::new();
        for i in 1..=n {
            lines.push(Line { label: xb(n + 1 - i), start: None });
            lines.push(Line { label: xv(n + 1 - i), start: None });
            pairs.push((2 * i - 1, 2 * i - 2));
        }
        lines.extend((1..=n).map(|m| Line { label: yb(m), start: Some(PARTICLE) }));
        let mut keyed = Vec::new();
        for k in 1..=2 * n {
            for m in 1..=n {
                keyed.push((k as i64 - m as i64, Event::Cross { a: k - 1, b: 2 * n + m - 1 }));
            }
        }
        let mut end = vec![PARTICLE; 2 * n];
        end.extend(vec![HOLE; n]);
        DomainSpec { kind: Kind::U, n, lines, pairs, events: sorted_events(keyed), exit: Exit::Fixed(end) }
    }

    fn uu(n: usize) -> Self {
        let z = LaurentPoly::var(Var::Z);
        let mut lines = Vec::new();
        let mut pairs = Vec::new();
        for i in 1..=n {
            lines.push(Line { label: &z * &xb(n + 1 - i), start: None });
            lines.push(Line { label: &z * &xv(n + 1 - i), start: None });
            pairs.push((2 * i - 1, 2 * i - 2));
        }
        for i in 1..=n {
            lines.push(Line { label: yb(n + 1 - i), start: None });
            lines.push(Line { label: yv(n + 1 - i), start: None });
            pairs.push((2 * n + 2 * i - 2, 2 * n + 2 * i - 1));
        }
        let mut keyed = Vec::new();
        for k in 1..=2 * n {
            for m in 1..=2 * n {
                keyed.push(((k + m) as i64, Event::Cross { a: k - 1, b: 2 * n + m - 1 }));
            }
        }
        let mut end = vec![PARTICLE; 2 * n];
        end.extend(vec![HOLE; 2 * n]);
        DomainSpec { kind: Kind::Uu, n, lines, pairs, events: sorted_events(keyed), exit: Exit::Fixed(end) }
    }

    fn uo(n: usize) -> Self {
        let w = LaurentPoly::var(Var::W);
        let mut lines = Vec::new();
        let mut pairs = Vec::new();
        for i in 1..=n {
            lines.push(Line { label: &w * &xv(i), start: None });
            lines.push(Line { label: &w * &xb(i), start: None });
            pairs.push((2 * i - 2, 2 * i - 1));
        }
        DomainSpec {
            kind: Kind::Uo,
            n,
            lines,
            pairs,
            events: folded_events(2 * n),
            exit: Exit::Fixed(vec![HOLE; 2 * n]),
        }
    }
}

type Frontier = HashMap<Vec<u8>, LaurentPoly>;

fn merge(mut a: Frontier, b: Frontier) -> Frontier {
    for (k, v) in b {
        let e = a.entry(k).or_insert_with(LaurentPoly::zero);
        *e += &v;
    }
    a.retain(|_, v| !v.is_zero());
    a
}

fn initial_frontier(spec: &DomainSpec) -> Frontier {
    let t = LaurentPoly::t();
    let mut init: Frontier = HashMap::new();
    init.insert(spec.lines.iter().map(|l| l.start.unwrap_or(HOLE)).collect(), LaurentPoly::one());
    for &(a, ab) in &spec.pairs {
        let mut next = HashMap::new();
        for (bits, w) in init {
            for (ea, eab, k) in [(HOLE, PARTICLE, LaurentPoly::one()), (PARTICLE, HOLE, -&t)] {
                let mut b = bits.clone();
                b[a] = ea;
                b[ab] = eab;
                next.insert(b, &w * &k);
            }
        }
        init = next;
    }
    init
}

fn cross(frontier: Frontier, a: usize, b: usize, r: &[[LaurentPoly; 4]; 4]) -> Frontier {
    frontier
        .into_par_iter()
        .fold(HashMap::new, |mut acc: Frontier, (bits, w)| {
            let row = 2 * bits[a] as usize + bits[b] as usize;
            for (col, rw) in r[row].iter().enumerate() {
                if rw.is_zero() {
                    continue;
                }
                let mut nb = bits.clone();
                nb[a] = (col >> 1) as u8;
                nb[b] = (col & 1) as u8;
                let e = acc.entry(nb).or_insert_with(LaurentPoly::zero);
                *e += &(&w * rw);
            }
            acc
        })
        .reduce(HashMap::new, merge)
}

/// Propagates through every event. Returns the frontier at the line ends,
/// the final labels and the crossing parameters `z_c`; each crossing
/// contributes `(1 - z_c) R(z_c)`, so the true weight carries `∏ 1/(1 - z_c)`.
fn propagate(spec: &DomainSpec) -> (Frontier, Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let mut labels: Vec<LaurentPoly> = spec.lines.iter().map(|l| l.label.clone()).collect();
    let mut frontier = initial_frontier(spec);
    let mut params = Vec::new();
    let mut last = vec![usize::MAX; spec.lines.len()];
    for (i, ev) in spec.events.iter().enumerate() {
        match *ev {
            Event::Cross { a, b } => {
                last[a] = i;
                last[b] = i;
            }
            Event::Flip(k) => last[k] = i,
        }
    }
    for (i, ev) in spec.events.iter().enumerate() {
        match *ev {
            Event::Cross { a, b } => {
                let z = &labels[a] * &labels[b].pow_signed(-1);
                frontier = cross(frontier, a, b, &r_entries_poly(&z));
                params.push(z);
            }
            Event::Flip(k) => {
                labels[k] = labels[k].pow_signed(-1);
                frontier = frontier
                    .into_iter()
                    .map(|(mut bits, w)| {
                        bits[k] ^= 1;
                        (bits, w)
                    })
                    .collect();
            }
        }
        if let Exit::Fixed(end) = &spec.exit {
            let done: Vec<usize> = (0..last.len()).filter(|&l| last[l] == i).collect();
            frontier.retain(|bits, _| done.iter().all(|&l| bits[l] == end[l]));
        }
    }
    (frontier, labels, params)
}

fn column_weight(bits: &[u8], labels: &[LaurentPoly], rows: &[ColumnRow]) -> Option<(i32, LaurentPoly)> {
    let mut m = 0;
    let mut w = LaurentPoly::one();
    for row in rows {
        let tile = if row.dark {
            Tile::dark(&labels[row.line])
        } else {
            Tile::light(&labels[row.line].pow_signed(-1))
        };
        let (out, tw) = tile.with_shift(true).weight(bits[row.line], row.right, m)?;
        m = out;
        w = &w * &tw;
    }
    Some((m, w))
}

/// The partition function split as `body / ∏(1 - z_c)`.
fn enumerate_parts(spec: &DomainSpec) -> Result<(RatFn, Vec<LaurentPoly>), PfError> {
    check_size(spec.kind, spec.n)?;
    let (frontier, labels, params) = propagate(spec);
    let body = match &spec.exit {
        Exit::Fixed(end) => RatFn::from_poly(frontier.get(end).cloned().unwrap_or_default()),
        Exit::Column { rows, bra } => {
            let mut acc = RatFn::zero();
            for (bits, w) in &frontier {
                let Some((m, cw)) = column_weight(bits, &labels, rows) else { continue };
                let coeff = match bra {
                    Bra::Vacuum if m == 0 => RatFn::one(),
                    Bra::Vacuum => continue,
                    Bra::Even => match even_coefficient(&BosonState { occ: vec![m], shifted0: true }) {
                        Some(c) => c,
                        None => continue,
                    },
                };
                acc += &(&coeff * &RatFn::from_poly(w * &cw));
            }
            acc
        }
    };
    Ok((body, params))
}

/// Exact partition function of the domain as a rational function.
pub fn enumerate_pf(spec: &DomainSpec) -> Result<RatFn, PfError> {
    let (mut total, params) = enumerate_parts(spec)?;
    for z in &params {
        total = &total / &RatFn::from_poly(&LaurentPoly::one() - z);
    }
    Ok(total)
}

/// A renormalization factor `mono · ∏(1 - m_k) / ∏ den_j` with every `m_k` a
/// monomial.
struct Renorm {
    mono: LaurentPoly,
    one_minus: Vec<LaurentPoly>,
    den: Vec<LaurentPoly>,
}

fn renorm_parts(kind: Kind, n: usize) -> Renorm {
    let t = LaurentPoly::t();
    let z = LaurentPoly::var(Var::Z);
    let mut mono = LaurentPoly::one();
    let mut one_minus = Vec::new();
    let mut den = Vec::new();
    match kind {
        Kind::DwHybrid => {
            for i in 1..=n {
                one_minus.extend((1..=n).map(|j| &xv(i) * &yv(j)));
                mono = &mono * &(&xb(i) * &yb(i));
            }
        }
        Kind::Os => {
            for i in 1..=n {
                one_minus.extend(((i + 1)..=n).map(|j| &xv(i) * &xv(j)));
                mono = &mono * &xb(i);
            }
        }
        Kind::U => {
            for i in 1..=n {
                for j in 1..=n {
                    one_minus.push(&xv(i) * &yv(j));
                    one_minus.push(&xb(i) * &yv(j));
                }
                mono = &mono * &yb(i);
                den.push(&xv(i) - &(&t * &xb(i)));
            }
        }
        Kind::Uu => {
            for i in 1..=n {
                for j in 1..=n {
                    for (a, b) in [(xv(i), yv(j)), (xb(i), yv(j)), (xv(i), yb(j)), (xb(i), yb(j))] {
                        one_minus.push(&(&z * &a) * &b);
                    }
                }
                den.push(&xv(i) - &(&t * &xb(i)));
                den.push(&yb(i) - &(&t * &yv(i)));
            }
            mono = z.pow_signed(-(n as i32));
        }
        Kind::Uo => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    for (a, b) in [(xv(i), xv(j)), (xv(i), xb(j)), (xb(i), xv(j)), (xb(i), xb(j))] {
                        one_minus.push(&(&z * &a) * &b);
                    }
                }
                den.push(&xv(i) - &(&t * &xb(i)));
            }
            mono = z.pow_signed(-(n as i32 / 2));
        }
    }
    Renorm { mono, one_minus, den }
}

/// The factor that turns the raw partition function into the renormalized
/// `Z` whose properties are listed for each domain.
pub fn renormalization(kind: Kind, n: usize) -> Result<RatFn, PfError> {
    let r = renorm_parts(kind, n);
    let num = r.one_minus.iter().fold(r.mono, |a, m| &a * &(&LaurentPoly::one() - m));
    let den = r.den.iter().fold(LaurentPoly::one(), |a, d| &a * d);
    Ok(RatFn::new(num, &den)?)
}

/// Renormalized partition function as a Laurent polynomial.
pub fn renormalize(kind: Kind, n: usize, raw: &RatFn) -> Result<LaurentPoly, PfError> {
    let v = (raw * &renormalization(kind, n)?).cancelled();
    v.to_poly().ok_or(PfError::NotPolynomial(kind))
}

/// `enumerate_pf` followed by `renormalize`, with the crossing denominators
/// matched against the renormalization factors before any division.
/// Results are cached for the life of the process.
pub fn renormalized_pf(kind: Kind, n: usize) -> Result<LaurentPoly, PfError> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, usize), LaurentPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(z) = cache.lock().expect("cache lock").get(&(kind, n)) {
        return Ok(z.clone());
    }
    let z = compute_renormalized(kind, n)?;
    cache.lock().expect("cache lock").insert((kind, n), z.clone());
    Ok(z)
}

fn compute_renormalized(kind: Kind, n: usize) -> Result<LaurentPoly, PfError> {
    let spec = DomainSpec::new(kind, n)?;
    let (body, mut params) = enumerate_parts(&spec)?;
    let r = renorm_parts(kind, n);
    let mut num = body.num() * &r.mono;
    for m in r.one_minus {
        match params.iter().position(|p| *p == m) {
            Some(i) => {
                params.swap_remove(i);
            }
            None => num = &num * &(&LaurentPoly::one() - &m),
        }
    }
    let one = LaurentPoly::one();
    for d in params.iter().map(|p| &one - p).chain(r.den) {
        num = num.exact_divide(&d).map_err(|_| PfError::NotPolynomial(kind))?;
    }
    if body.is_poly() {
        return Ok(num);
    }
    let v = RatFn::new(num, &body.den_poly())?.cancelled();
    v.to_poly().ok_or(PfError::NotPolynomial(kind))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn smallest_values() {
        assert_eq!(renormalized_pf(Kind::DwHybrid, 1).unwrap(), p("1 - u*t + u*t*x1*y1 - t*x1*y1"));
        assert_eq!(renormalized_pf(Kind::Os, 2).unwrap(), p("1 - u*t + u*t*x1*x2 - t*x1*x2"));
        assert_eq!(renormalized_pf(Kind::U, 1).unwrap(), p("1 - t"));
        assert_eq!(renormalized_pf(Kind::Uu, 1).unwrap(), p("1 - t - z^2 + t*z^2"));
        let uo = &(&p("1 - t") * &p("1 - t*z")) * &p("1 + z");
        assert_eq!(renormalized_pf(Kind::Uo, 2).unwrap(), uo);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(DomainSpec::new(Kind::Uu, 3), Err(PfError::SizeTooLarge { .. })));
        assert!(matches!(DomainSpec::new(Kind::Os, 3), Err(PfError::BadSize { .. })));
    }
}
