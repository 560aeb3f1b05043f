//! Graded verification of the five Cauchy and Littlewood identities.
//!
//! Each left side is a truncated sum over partitions of Hall-Littlewood
//! polynomials. Each right side is written as displayed, a rational function
//! built from a closed form or an enumerated partition function, and expanded
//! as a series in the grading variable. The two series are compared
//! coefficient by coefficient.
//!
//! Grading: identities 1 and 2 substitute `x -> s x` (and `y -> s y`),
//! identity 3 substitutes `y -> s y` only, identities 4 and 5 are graded by
//! `z`. For identities 2 and 5 `n` is the number of `x` variables.

use crate::algebra::{truncate_graded, AlgebraError, LaurentPoly, RatFn, Var};
use crate::hl_an::{hl_p_branching_in, HlError};
use crate::hl_bcn::k_branching;
use crate::partitions::{b_coeff, b_even_coeff, enumerate, one_minus_t_times, Partition};
use crate::sixv::{classical_dwpf, closed_form, renormalized_pf, ClosedKind, Kind, PfError};
use crate::tboson::transfer::k_prefactor;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown identity {0}; expected 1 to 5")]
    UnknownIdentity(u8),
    #[error("identity {identity} does not accept n = {n}")]
    BadSize { identity: u8, n: usize },
    #[error("identity {identity} does not accept order {order}")]
    BadOrder { identity: u8, order: u32 },
    #[error("summand for {0} is not homogeneous of the expected grade")]
    Unsound(String),
    #[error(transparent)]
    Hl(#[from] HlError),
    #[error(transparent)]
    Pf(#[from] PfError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("HL_WORKERS must be a positive integer, got `{0}`")]
    BadWorkers(String),
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub grade: i32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: u8,
    pub n: usize,
    pub order: u32,
    pub verdict: bool,
    pub seconds: f64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub lhs: LaurentPoly,
    #[serde(skip)]
    pub rhs: LaurentPoly,
}

/// Largest size and order accepted for each identity.
pub fn limits(identity: u8) -> Result<(usize, u32), HarnessError> {
    Ok(match identity {
        1 => (3, 8),
        2 => (4, 8),
        3 => (2, 6),
        4 => (1, 4),
        5 => (2, 4),
        _ => return Err(HarnessError::UnknownIdentity(identity)),
    })
}

fn check(identity: u8, n: usize, order: u32) -> Result<(), HarnessError> {
    let (max_n, max_order) = limits(identity)?;
    let even = matches!(identity, 2 | 5);
    if n == 0 || n > max_n || (even && n % 2 == 1) {
        return Err(HarnessError::BadSize { identity, n });
    }
    if order > max_order {
        return Err(HarnessError::BadOrder { identity, order });
    }
    Ok(())
}

/// Worker count from `HL_WORKERS`, if set to a positive integer.
/// `HL_WORKERS` as a positive count; unset gives `None`.
pub fn workers_from_env() -> Result<Option<usize>, HarnessError> {
    let Ok(raw) = std::env::var("HL_WORKERS") else { return Ok(None) };
    match raw.trim().parse::<usize>() {
        Ok(w) if w > 0 => Ok(Some(w)),
        _ => Err(HarnessError::BadWorkers(raw)),
    }
}

/// Runs `f` on a pool sized by `HL_WORKERS`, or on the global pool.
pub fn with_workers<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    match workers_from_env()? {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| HarnessError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

fn s() -> LaurentPoly {
    LaurentPoly::var(Var::S)
}

fn scaled(vars: impl Fn(usize) -> LaurentPoly, n: usize, by: &LaurentPoly) -> Vec<LaurentPoly> {
    (1..=n).map(|i| &vars(i) * by).collect()
}

fn grade(p: &LaurentPoly, v: Var, from: &[Var]) -> LaurentPoly {
    let map: Vec<(Var, LaurentPoly)> = from.iter().map(|&x| (x, &LaurentPoly::var(v) * &LaurentPoly::var(x))).collect();
    p.subs_many(&map).expect("monomial substitution")
}

fn xs(n: usize) -> Vec<Var> {
    (1..=n).map(Var::x).collect()
}

fn ys(n: usize) -> Vec<Var> {
    (1..=n).map(Var::y).collect()
}

/// `∏_{i≤k} (1 - c t^{step i - (step-1)})`: `step = 1` gives `∏(1 - c t^i)`,
/// `step = 2` gives `∏(1 - c t^{2i-1})`.
fn refinement(k: usize, c: &LaurentPoly, step: u32) -> LaurentPoly {
    (1..=k as u32).fold(LaurentPoly::one(), |a, i| &a * &one_minus_t_times(step * i - (step - 1), c))
}

/// Sums the summands in parallel after checking that each one sits in its
/// expected grade and above.
fn graded_sum(
    parts: Vec<Partition>,
    v: Var,
    lowest: impl Fn(&Partition) -> i32 + Sync,
    term: impl Fn(&Partition) -> Result<LaurentPoly, HarnessError> + Sync,
    order: i32,
) -> Result<LaurentPoly, HarnessError> {
    parts
        .par_iter()
        .map(|l| {
            let p = term(l)?;
            if let Some((lo, _)) = p.degree_range(v) {
                if !p.is_zero() && lo < lowest(l) {
                    return Err(HarnessError::Unsound(l.to_string()));
                }
            }
            Ok(p.truncate_above(v, order))
        })
        .try_reduce(LaurentPoly::zero, |a, b| Ok(&a + &b))
}

fn compare(identity: u8, n: usize, order: u32, v: Var, lhs: LaurentPoly, rhs: LaurentPoly, start: Instant) -> IdentityReport {
    let (a, b) = (lhs.coefficients_in(v), rhs.coefficients_in(v));
    let grades: std::collections::BTreeSet<i32> = a.keys().chain(b.keys()).copied().collect();
    let mut mismatches = Vec::new();
    for g in grades {
        let (l, r) = (a.get(&g).cloned().unwrap_or_default(), b.get(&g).cloned().unwrap_or_default());
        if l != r {
            mismatches.push(Mismatch { grade: g, lhs: l.to_string(), rhs: r.to_string() });
        }
    }
    IdentityReport {
        identity,
        n,
        order,
        verdict: mismatches.is_empty(),
        seconds: start.elapsed().as_secs_f64(),
        mismatches,
        lhs,
        rhs,
    }
}

fn prod(it: impl IntoIterator<Item = LaurentPoly>) -> LaurentPoly {
    it.into_iter().fold(LaurentPoly::one(), |a, b| &a * &b)
}

fn om(p: &LaurentPoly) -> LaurentPoly {
    &LaurentPoly::one() - p
}

/// `∏_{i,j} (1 - a_i b_j)`.
fn cross_product(a: &[LaurentPoly], b: &[LaurentPoly]) -> LaurentPoly {
    prod(a.iter().flat_map(|ai| b.iter().map(move |bj| om(&(ai * bj)))))
}

/// Identity 1, graded by `x -> s x`, `y -> s y` and compared through `s^{2D}`.
pub fn verify_refined_cauchy(n: usize, order: u32) -> Result<IdentityReport, HarnessError> {
    check(1, n, order)?;
    let start = Instant::now();
    let top = 2 * order as i32;
    let (sx, sy) = (scaled(LaurentPoly::x, n, &s()), scaled(LaurentPoly::y, n, &s()));
    let u = LaurentPoly::var(Var::U);
    let lhs = graded_sum(
        enumerate(n, order, false),
        Var::S,
        |l| 2 * l.weight() as i32,
        |l| {
            let c = &refinement(l.multiplicity(0), &u, 1) * &b_coeff(l);
            Ok(&(&c * &hl_p_branching_in(l, &sx)) * &hl_p_branching_in(l, &sy))
        },
        top,
    )?;
    let num = grade(&closed_form(ClosedKind::Dw, n)?, Var::S, &[xs(n), ys(n)].concat());
    let den = cross_product(&sx, &sy);
    let rhs = truncate_graded(&RatFn::new(num, &den)?, Var::S, top)?;
    Ok(compare(1, n, order, Var::S, lhs, rhs, start))
}

/// Identity 2 in `n` (even) variables, graded by `x -> s x` through `s^D`.
pub fn verify_refined_littlewood(n: usize, order: u32) -> Result<IdentityReport, HarnessError> {
    check(2, n, order)?;
    let start = Instant::now();
    let top = order as i32;
    let sx = scaled(LaurentPoly::x, n, &s());
    let u = LaurentPoly::var(Var::U);
    let lhs = graded_sum(
        enumerate(n, order, true),
        Var::S,
        |l| l.weight() as i32,
        |l| {
            let c = &refinement(l.multiplicity(0) / 2, &u, 2) * &b_even_coeff(l).expect("even partition");
            Ok(&c * &hl_p_branching_in(l, &sx))
        },
        top,
    )?;
    let num = grade(&closed_form(ClosedKind::Os, n)?, Var::S, &xs(n));
    let den = prod((0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).map(|(i, j)| om(&(&sx[i] * &sx[j]))));
    let rhs = truncate_graded(&RatFn::new(num, &den)?, Var::S, top)?;
    Ok(compare(2, n, order, Var::S, lhs, rhs, start))
}

/// Identity 3 with `γ = δ = 0`, graded by `y -> s y` only, through `s^D`.
pub fn verify_reflecting_cauchy(n: usize, order: u32) -> Result<IdentityReport, HarnessError> {
    check(3, n, order)?;
    let start = Instant::now();
    let top = order as i32;
    let sy = scaled(LaurentPoly::y, n, &s());
    let one = LaurentPoly::one();
    let lhs = graded_sum(
        enumerate(n, order, false),
        Var::S,
        |l| l.weight() as i32,
        |l| {
            let c = &refinement(l.multiplicity(0), &one, 1) * &b_coeff(l);
            Ok(&(&c * &k_branching(l, n)?) * &hl_p_branching_in(l, &sy))
        },
        top,
    )?;
    let num = grade(&closed_form(ClosedKind::U, n)?, Var::S, &ys(n));
    let xx: Vec<LaurentPoly> = (1..=n).flat_map(|i| [LaurentPoly::x(i), LaurentPoly::x(i).pow_signed(-1)]).collect();
    let den = cross_product(&xx, &sy);
    let rhs = truncate_graded(&RatFn::new(num, &den)?, Var::S, top)?;
    Ok(compare(3, n, order, Var::S, lhs, rhs, start))
}

/// The displayed right side of identities 4 and 5: the enumerated
/// partition function recovered from its renormalized form.
fn raw_partition_function(kind: Kind, n: usize) -> Result<RatFn, HarnessError> {
    let z = renormalized_pf(kind, n)?;
    let r = crate::sixv::renormalization(kind, n)?;
    Ok(&RatFn::from_poly(z) / &r)
}

/// Identity 4 at `γ = δ = 0`, both sides multiplied by
/// `∏(x_j - t x̄_j)(ȳ_j - t y_j)` and `z^n`, compared through `z^{n+D}`.
pub fn verify_doubly_reflecting(n: usize, order: u32) -> Result<IdentityReport, HarnessError> {
    check(4, n, order)?;
    let start = Instant::now();
    let top = (n as u32 + order) as i32;
    let z = LaurentPoly::var(Var::Z);
    let t = LaurentPoly::t();
    let ys: Vec<LaurentPoly> = (1..=n).map(LaurentPoly::y).collect();
    let pre = &k_prefactor(&(1..=n).map(LaurentPoly::x).collect::<Vec<_>>())
        * &prod(ys.iter().map(|y| &y.pow_signed(-1) - &(&t * y)));
    let one = LaurentPoly::one();
    let lhs = graded_sum(
        enumerate(n, order, false),
        Var::Z,
        |l| (n as u32 + l.weight()) as i32,
        |l| {
            let c = &refinement(l.multiplicity(0), &one, 1) * &b_coeff(l);
            let kx = k_branching(l, n)?;
            let ky = kx.rename(&(1..=n).map(|i| (Var::x(i), Var::y(i))).collect::<Vec<_>>());
            Ok(&(&(&(&c * &kx) * &ky) * &z.pow(n as u32 + l.weight())) * &pre)
        },
        top,
    )?;
    let rhs = truncate_graded(&raw_partition_function(Kind::Uu, n)?, Var::Z, top)?;
    Ok(compare(4, n, order, Var::Z, lhs, rhs, start))
}

/// Identity 5 in `n` (even) variables at `γ = δ = 0`, both sides multiplied
/// by `∏(x_j - t x̄_j)` and `z^{n/2}`, compared through `z^{n/2+D}`.
pub fn verify_reflecting_littlewood(n: usize, order: u32) -> Result<IdentityReport, HarnessError> {
    check(5, n, order)?;
    let start = Instant::now();
    let half = n as u32 / 2;
    let top = (half + order) as i32;
    let z = LaurentPoly::var(Var::Z);
    let pre = k_prefactor(&(1..=n).map(LaurentPoly::x).collect::<Vec<_>>());
    let one = LaurentPoly::one();
    let lhs = graded_sum(
        enumerate(n, 2 * order, true),
        Var::Z,
        |l| (half + l.weight() / 2) as i32,
        |l| {
            let c = &refinement(l.multiplicity(0) / 2, &one, 2) * &b_even_coeff(l).expect("even partition");
            Ok(&(&(&c * &k_branching(l, n)?) * &z.pow(half + l.weight() / 2)) * &pre)
        },
        top,
    )?;
    let rhs = truncate_graded(&raw_partition_function(Kind::Uo, n)?, Var::Z, top)?;
    Ok(compare(5, n, order, Var::Z, lhs, rhs, start))
}

/// Dispatches on the identity number, on the pool sized by `HL_WORKERS`.
pub fn verify(identity: u8, n: usize, order: u32) -> Result<IdentityReport, HarnessError> {
    check(identity, n, order)?;
    with_workers(|| match identity {
        1 => verify_refined_cauchy(n, order),
        2 => verify_refined_littlewood(n, order),
        3 => verify_reflecting_cauchy(n, order),
        4 => verify_doubly_reflecting(n, order),
        _ => verify_reflecting_littlewood(n, order),
    })?
}

/// The right side of identity 1 at `u = 1` against the Izergin-Korepin
/// determinant.
pub fn classical_limit(n: usize) -> Result<bool, HarnessError> {
    let z = closed_form(ClosedKind::Dw, n)?.subs(Var::U, &LaurentPoly::one())?;
    Ok(z == classical_dwpf(n)?)
}

/// `∏_{i=1}^{n} (1 - u t^i)`, the constant term of identity 1.
pub fn refined_constant_term(n: usize) -> LaurentPoly {
    refinement(n, &LaurentPoly::var(Var::U), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_runs_pass() {
        for (id, n) in [(1, 1), (2, 2), (3, 1), (4, 1), (5, 2)] {
            let r = verify(id, n, 2).unwrap();
            assert!(r.verdict, "identity {id}: {:?}", r.mismatches);
        }
    }

    #[test]
    fn bad_config() {
        assert!(matches!(verify(6, 1, 1), Err(HarnessError::UnknownIdentity(6))));
        assert!(matches!(verify(2, 3, 1), Err(HarnessError::BadSize { .. })));
        assert!(matches!(verify(1, 1, 99), Err(HarnessError::BadOrder { .. })));
    }
}
