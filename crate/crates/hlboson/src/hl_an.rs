//! Type-A Hall-Littlewood polynomials `P_λ` and `Q_λ`.
//!
//! # Key Operations
//! - `hl_p_branching` / `hl_q_branching`: one variable at a time through
//!   interlacing chains
//! - `hl_p_group_sum`: symmetrization over coset representatives or the full
//!   symmetric group, with polynomiality certified by exact division
//! - `hl_skew_p` / `hl_skew_q`: one-variable skew polynomials

use crate::algebra::{AlgebraError, LaurentPoly, Mono, Rational};
use num_traits::One;
use crate::partitions::{interlacing_below, phi_psi, v_coeff, Branch, Partition};
use crate::perm::{distinct_permutations, permutations_with_sign};
use crate::tboson::{hl_p_lattice, LatticeError};
use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HlError {
    #[error("partition has length {got}, expected {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("symmetrized numerator not divisible")]
    NotDivisible,
}

impl From<AlgebraError> for HlError {
    fn from(_: AlgebraError) -> Self {
        HlError::NotDivisible
    }
}

impl From<LatticeError> for HlError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::LengthMismatch { got, want } => HlError::LengthMismatch { got, want },
            _ => HlError::NotDivisible,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Branching,
    Sum,
    Lattice,
}

fn check_len(l: &Partition, n: usize) -> Result<(), HlError> {
    if l.len() != n {
        return Err(HlError::LengthMismatch { got: l.len(), want: n });
    }
    Ok(())
}

fn skew(l: &Partition, m: &Partition, x: &LaurentPoly, kind: Branch) -> LaurentPoly {
    match phi_psi(l, m, kind) {
        Ok(c) => &x.pow(l.weight() - m.weight()) * &c,
        Err(_) => LaurentPoly::zero(),
    }
}

/// `P_{λ/μ}(x) = x^{|λ|-|μ|} ψ_{λ/μ}`, zero unless `λ ≽ μ`.
pub fn hl_skew_p(l: &Partition, m: &Partition, x: &LaurentPoly) -> LaurentPoly {
    skew(l, m, x, Branch::Psi)
}

/// `Q_{λ/μ}(x) = x^{|λ|-|μ|} φ_{λ/μ}`, zero unless `λ ≽ μ`.
pub fn hl_skew_q(l: &Partition, m: &Partition, x: &LaurentPoly) -> LaurentPoly {
    skew(l, m, x, Branch::Phi)
}

fn branching(l: &Partition, xs: &[LaurentPoly], kind: Branch, memo: &mut HashMap<Partition, LaurentPoly>) -> LaurentPoly {
    let k = l.len();
    if k == 0 {
        return LaurentPoly::one();
    }
    if let Some(v) = memo.get(l) {
        return v.clone();
    }
    let mut acc = LaurentPoly::zero();
    for m in interlacing_below(l, k - 1) {
        let head = skew(l, &m, &xs[k - 1], kind);
        if head.is_zero() {
            continue;
        }
        let tail = branching(&m, xs, kind, memo);
        acc += &(&head * &tail);
    }
    memo.insert(l.clone(), acc.clone());
    acc
}

/// `P_λ(x_1..x_n)` by the branching rule. Each step removes one variable and
/// one stored part.
pub fn hl_p_branching(l: &Partition, n: usize) -> Result<LaurentPoly, HlError> {
    check_len(l, n)?;
    Ok(hl_p_branching_in(l, &x_vars(n)))
}

/// As `hl_p_branching` in arbitrary variables `xs` (one per stored part).
pub fn hl_p_branching_in(l: &Partition, xs: &[LaurentPoly]) -> LaurentPoly {
    branching(l, xs, Branch::Psi, &mut HashMap::new())
}

/// `Q_λ(x_1..x_n)` by the branching rule.
pub fn hl_q_branching(l: &Partition, n: usize) -> Result<LaurentPoly, HlError> {
    check_len(l, n)?;
    Ok(branching(l, &x_vars(n), Branch::Phi, &mut HashMap::new()))
}

fn x_vars(n: usize) -> Vec<LaurentPoly> {
    (1..=n).map(LaurentPoly::x).collect()
}

fn vandermonde(n: usize) -> LaurentPoly {
    let mut v = LaurentPoly::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            v = &v * &(&LaurentPoly::x(i) - &LaurentPoly::x(j));
        }
    }
    v
}

fn monomial(exps: &[u32]) -> LaurentPoly {
    let mut m = Mono::one();
    for (i, &e) in exps.iter().enumerate() {
        m.0[i] = e as i32;
    }
    LaurentPoly::term(m, Rational::one())
}

/// `x_i - t x_j`.
fn xt(i: usize, j: usize) -> LaurentPoly {
    &LaurentPoly::x(i) - &(&LaurentPoly::t() * &LaurentPoly::x(j))
}

/// Symmetrization of `∏x^λ ∏_{λ_i>λ_j}(x_i - t x_j)/(x_i - x_j)` over
/// distinct rearrangements, or of `∏x^λ ∏_{i<j}(x_i - t x_j)/(x_i - x_j)`
/// over all of `S_n` divided by `v_λ`. The sum is brought over the
/// Vandermonde `∏_{i<j}(x_i - x_j)` and divided back exactly.
pub fn hl_p_group_sum(l: &Partition, n: usize, full_group: bool) -> Result<LaurentPoly, HlError> {
    check_len(l, n)?;
    let num = if full_group {
        permutations_with_sign(n)
            .into_par_iter()
            .map(|(sigma, sign)| {
                let mut exps = vec![0u32; n];
                for i in 0..n {
                    exps[sigma[i]] = l.parts()[i];
                }
                let mut term = monomial(&exps);
                for i in 0..n {
                    for j in (i + 1)..n {
                        term = &term * &xt(sigma[i] + 1, sigma[j] + 1);
                    }
                }
                if sign < 0 {
                    -term
                } else {
                    term
                }
            })
            .reduce(LaurentPoly::zero, |a, b| &a + &b)
    } else {
        distinct_permutations(l.parts())
            .into_par_iter()
            .map(|w| {
                let mut term = monomial(&w);
                for i in 0..n {
                    for j in (i + 1)..n {
                        let f = if w[i] > w[j] {
                            xt(i + 1, j + 1)
                        } else if w[j] > w[i] {
                            -xt(j + 1, i + 1)
                        } else {
                            &LaurentPoly::x(i + 1) - &LaurentPoly::x(j + 1)
                        };
                        term = &term * &f;
                    }
                }
                term
            })
            .reduce(LaurentPoly::zero, |a, b| &a + &b)
    };
    let p = num.exact_divide(&vandermonde(n))?;
    if full_group {
        let v = v_coeff(l).to_poly().ok_or(HlError::NotDivisible)?;
        return Ok(p.exact_divide(&v)?);
    }
    Ok(p)
}

/// `P_λ` by the chosen route.
pub fn hl_p(l: &Partition, n: usize, route: Route) -> Result<LaurentPoly, HlError> {
    match route {
        Route::Branching => hl_p_branching(l, n),
        Route::Sum => hl_p_group_sum(l, n, false),
        Route::Lattice => Ok(hl_p_lattice(l, n)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(hl_p_branching(&part("[0]"), 1).unwrap(), LaurentPoly::one());
        assert_eq!(hl_p_branching(&part("[1,0]"), 2).unwrap(), p("x1 + x2"));
        assert_eq!(hl_p_branching(&part("[2,0]"), 2).unwrap(), p("x1^2 + x2^2 + x1*x2 - t*x1*x2"));
        assert_eq!(hl_q_branching(&part("[1]"), 1).unwrap(), p("x1 - t*x1"));
        assert_eq!(hl_p_group_sum(&part("[1,0]"), 2, false).unwrap(), p("x1 + x2"));
        assert_eq!(hl_p_group_sum(&part("[0,0,0]"), 3, true).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn skew_examples() {
        let x = LaurentPoly::x(1);
        assert_eq!(hl_skew_p(&part("[2,1]"), &part("[1]"), &x), p("x1^2"));
        assert_eq!(hl_skew_p(&part("[2,1]"), &part("[2,1]"), &x), LaurentPoly::one());
        assert_eq!(hl_skew_p(&part("[1]"), &part("[3]"), &x), LaurentPoly::zero());
    }

    #[test]
    fn length_checked() {
        assert!(matches!(hl_p_branching(&part("[1]"), 2), Err(HlError::LengthMismatch { .. })));
    }
}
