//! `BC_n` Hall-Littlewood polynomials `K_λ` and their duals `L_λ`.
//!
//! Variables are `x_1..x_n` with `x̄_i = x_i^{-1}` as negative exponents.
//! The branching route exists only at `γ = δ = 0`; the hyperoctahedral sums
//! take general boundary parameters.

use crate::algebra::{LaurentPoly, RatFn};
use crate::hl_an::HlError;
use crate::partitions::{b_coeff, interlacing_below, one_minus_t, phi_psi, v_coeff, Branch, Partition};
use crate::perm::{distinct_permutations, permutations_with_sign, sign_vectors};
use crate::tboson::BoundaryParams;
use rayon::prelude::*;
use std::collections::HashMap;

fn check_len(l: &Partition, n: usize) -> Result<(), HlError> {
    if l.len() != n {
        return Err(HlError::LengthMismatch { got: l.len(), want: n });
    }
    Ok(())
}

/// `K_{λ/ν}(x^{±1}; t)` at `γ = δ = 0`, summed over `ν ≼ μ ≼ λ` with
/// `ℓ(μ) ∈ {ℓ(λ), ℓ(λ)-1}`. Zero when no chain exists.
pub fn k_skew_one_var(l: &Partition, nu: &Partition, x: &LaurentPoly) -> Result<LaurentPoly, HlError> {
    let n = l.len();
    if n == 0 {
        return Ok(if nu.is_empty() { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    let mut bracket = LaurentPoly::zero();
    let t = LaurentPoly::t();
    let xbar = x.pow_signed(-1);
    for len in [n, n - 1] {
        let lead = if len == n { x.clone() } else { -(&t * &xbar) };
        for mu in interlacing_below(l, len) {
            let (Ok(a), Ok(b)) = (phi_psi(l, &mu, Branch::Psi0), phi_psi(&mu, nu, Branch::Psi0)) else {
                continue;
            };
            let e = 2 * mu.weight() as i32 - l.weight() as i32 - nu.weight() as i32;
            bracket += &(&(&(&lead * &x.pow_signed(e)) * &a) * &b);
        }
    }
    if bracket.is_zero() {
        return Ok(bracket);
    }
    Ok(bracket.exact_divide(&(x - &(&t * &xbar)))?)
}

fn branching(l: &Partition, xs: &[LaurentPoly], memo: &mut HashMap<Partition, LaurentPoly>) -> Result<LaurentPoly, HlError> {
    let n = l.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    if let Some(v) = memo.get(l) {
        return Ok(v.clone());
    }
    let mut nus: Vec<Partition> = Vec::new();
    for len in [n, n - 1] {
        for mu in interlacing_below(l, len) {
            nus.extend(interlacing_below(&mu, n - 1));
        }
    }
    nus.sort();
    nus.dedup();
    let mut acc = LaurentPoly::zero();
    for nu in nus {
        let head = k_skew_one_var(l, &nu, &xs[n - 1])?;
        if head.is_zero() {
            continue;
        }
        acc += &(&head * &branching(&nu, xs, memo)?);
    }
    memo.insert(l.clone(), acc.clone());
    Ok(acc)
}

/// `K_λ(x_1^{±1}..x_n^{±1}; t)` at `γ = δ = 0` by branching in `x_n`.
pub fn k_branching(l: &Partition, n: usize) -> Result<LaurentPoly, HlError> {
    check_len(l, n)?;
    let xs: Vec<LaurentPoly> = (1..=n).map(LaurentPoly::x).collect();
    branching(l, &xs, &mut HashMap::new())
}

fn rx(i: usize, sign: i32) -> RatFn {
    RatFn::from_poly(LaurentPoly::x(i).pow_signed(sign))
}

/// `∏_i (x_i - x̄_i) ∏_{i<j} ((x_i + x̄_i) - (x_j + x̄_j))`, which changes
/// sign under every generator of the hyperoctahedral group and so clears
/// every denominator in the sums below.
fn bc_discriminant(n: usize) -> LaurentPoly {
    let s = |i: usize| &LaurentPoly::x(i) + &LaurentPoly::x(i).pow_signed(-1);
    let mut d = LaurentPoly::one();
    for i in 1..=n {
        d = &d * &(&LaurentPoly::x(i) - &LaurentPoly::x(i).pow_signed(-1));
        for j in (i + 1)..=n {
            d = &d * &(&s(i) - &s(j));
        }
    }
    d
}

/// One summand in the variables `y_k = x_k^{ε_k}`: exponent `w[k]` on `y_k`,
/// and the pair factor `(y_i - t y_j)/(y_i - y_j)` for each ordered pair in
/// `ordered`.
fn summand(w: &[u32], eps: &[i32], ordered: &[(usize, usize)], bp: &BoundaryParams) -> RatFn {
    let n = w.len();
    let one = RatFn::one();
    let t = RatFn::from_poly(LaurentPoly::t());
    let (g, d) = (RatFn::from_poly(bp.gamma.clone()), RatFn::from_poly(bp.delta.clone()));
    let y = |k: usize| rx(k + 1, eps[k]);
    let yb = |k: usize| rx(k + 1, -eps[k]);
    let mut num = RatFn::one();
    let mut den = RatFn::one();
    for k in 0..n {
        num = &num * &rx(k + 1, eps[k] * w[k] as i32);
        num = &num * &(&(&one - &(&g * &yb(k))) * &(&one - &(&d * &yb(k))));
        den = &den * &(&one - &(&yb(k) * &yb(k)));
        for j in (k + 1)..n {
            let p = &yb(k) * &yb(j);
            num = &num * &(&one - &(&t * &p));
            den = &den * &(&one - &p);
        }
    }
    for &(i, j) in ordered {
        num = &num * &(&y(i) - &(&t * &y(j)));
        den = &den * &(&y(i) - &y(j));
    }
    &num / &den
}

fn clear(term: &RatFn, disc: &LaurentPoly) -> Result<LaurentPoly, HlError> {
    let v = (term * &RatFn::from_poly(disc.clone())).cancelled();
    v.to_poly().ok_or(HlError::NotDivisible)
}

/// `K_λ(x^{±1}; t; γ, δ)` as a sum over signed permutations: over distinct
/// rearrangements of `λ` with all sign vectors, or over all of `S_n` with all
/// sign vectors divided by `v_λ(t)`.
pub fn k_hyperoctahedral(
    l: &Partition,
    n: usize,
    bp: &BoundaryParams,
    use_full_group: bool,
) -> Result<LaurentPoly, HlError> {
    check_len(l, n)?;
    let disc = bc_discriminant(n);
    let mut jobs: Vec<(Vec<u32>, Vec<(usize, usize)>)> = Vec::new();
    if use_full_group {
        for (sigma, _) in permutations_with_sign(n) {
            let mut w = vec![0u32; n];
            for i in 0..n {
                w[sigma[i]] = l.parts()[i];
            }
            let ordered = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .map(|(i, j)| (sigma[i], sigma[j]))
                .collect();
            jobs.push((w, ordered));
        }
    } else {
        for w in distinct_permutations(l.parts()) {
            let ordered = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i] > w[j])
                .collect();
            jobs.push((w, ordered));
        }
    }
    let signs = sign_vectors(n);
    let num = jobs
        .par_iter()
        .flat_map_iter(|job| signs.iter().map(move |eps| (job, eps)))
        .map(|((w, ordered), eps)| clear(&summand(w, eps, ordered, bp), &disc))
        .try_reduce(LaurentPoly::zero, |a, b| Ok(&a + &b))?;
    let k = num.exact_divide(&disc)?;
    if use_full_group {
        let v = v_coeff(l).to_poly().ok_or(HlError::NotDivisible)?;
        return Ok(k.exact_divide(&v)?);
    }
    Ok(k)
}

/// `∏_{j=1}^{m_0(λ)} (1 - t^j) b_λ(t)`.
pub fn l_over_k(l: &Partition) -> LaurentPoly {
    let m0 = l.multiplicity(0) as u32;
    (1..=m0).fold(b_coeff(l), |a, j| &a * &one_minus_t(j))
}

/// `L_λ = ∏_{j≤m_0(λ)} (1 - t^j) b_λ(t) K_λ` at `γ = δ = 0`.
pub fn l_from_k(l: &Partition, k: &LaurentPoly) -> LaurentPoly {
    &l_over_k(l) * k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn skew_small() {
        let x = LaurentPoly::x(1);
        assert_eq!(k_skew_one_var(&part("[0]"), &part("[]"), &x).unwrap(), LaurentPoly::one());
        assert_eq!(k_skew_one_var(&part("[1]"), &part("[]"), &x).unwrap(), p("x1 + x1^-1"));
        assert_eq!(k_skew_one_var(&part("[1,0]"), &part("[3]"), &x).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn n1_values() {
        let z = BoundaryParams::zero();
        assert_eq!(k_branching(&part("[0]"), 1).unwrap(), LaurentPoly::one());
        assert_eq!(k_branching(&part("[1]"), 1).unwrap(), p("x1 + x1^-1"));
        assert_eq!(k_hyperoctahedral(&part("[1]"), 1, &z, false).unwrap(), p("x1 + x1^-1"));
        let f = BoundaryParams::formal();
        assert_eq!(k_hyperoctahedral(&part("[0]"), 1, &f, false).unwrap(), p("1 - g*d"));
    }

    #[test]
    fn routes_agree() {
        let z = BoundaryParams::zero();
        let f = BoundaryParams::formal();
        for l in enumerate(2, 3, false) {
            let b = k_branching(&l, 2).unwrap();
            assert_eq!(b, k_hyperoctahedral(&l, 2, &z, false).unwrap(), "{l}");
            assert_eq!(
                k_hyperoctahedral(&l, 2, &f, false).unwrap(),
                k_hyperoctahedral(&l, 2, &f, true).unwrap(),
                "{l}"
            );
        }
    }

    #[test]
    fn l_factor() {
        assert_eq!(l_over_k(&part("[0]")), p("1 - t"));
        assert_eq!(l_over_k(&part("[1]")), p("1 - t"));
        assert_eq!(l_over_k(&part("[1,1]")), &one_minus_t(1) * &one_minus_t(2));
    }

    #[test]
    fn lattice_agrees() {
        use crate::tboson::{k_lattice, l_lattice};
        let z = BoundaryParams::zero();
        let f = BoundaryParams::formal();
        for n in 1..=2 {
            for l in enumerate(n, 3, false) {
                let k = k_hyperoctahedral(&l, n, &f, false).unwrap();
                assert_eq!(k_lattice(&l, n, &f).unwrap(), k, "K {l}");
                let k0 = k_branching(&l, n).unwrap();
                assert_eq!(l_lattice(&l, n, &z).unwrap(), l_from_k(&l, &k0), "L {l}");
            }
        }
    }
}
