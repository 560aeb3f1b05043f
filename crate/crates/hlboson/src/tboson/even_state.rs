//! The even-state covector `⟨e;α|` and its exchange property between dark
//! and light transfer rows.

use super::tiles::{apply_row, Tile, HOLE, PARTICLE};
use super::transfer::BosonState;
use crate::algebra::{LaurentPoly, RatFn, Var};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvenStateError {
    #[error("even-state exchange fails for {pair} at input {input:?}")]
    IdentityViolated { pair: &'static str, input: Vec<i32> },
}

/// Coefficient `c_λ(α, t)` of `⟨λ;α|` in `⟨e;α|`, or `None` when some
/// multiplicity is odd. On a shifted site 0, `t^α` is the formal `u` and the
/// stored occupation may be negative.
pub fn even_coefficient(state: &BosonState) -> Option<RatFn> {
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let mut c = RatFn::one();
    for (i, &m) in state.occ.iter().enumerate() {
        if m % 2 != 0 {
            return None;
        }
        let shifted = i == 0 && state.shifted0;
        if m < 0 && !shifted {
            return None;
        }
        let base = if shifted { LaurentPoly::var(Var::U) } else { one.clone() };
        if m >= 0 {
            for j in 1..=m / 2 {
                c = &c * &RatFn::from_poly(&one - &(&base * &t.pow_signed(2 * j - 1)));
            }
        } else {
            for j in 1..=(-m) / 2 {
                let f = RatFn::from_poly(&one - &(&base * &t.pow_signed(-2 * j + 1)));
                c = &c / &f;
            }
        }
    }
    Some(c)
}

/// `⟨e;α| T(x) |μ⟩` for one row: sums `c_λ ⟨λ|T|μ⟩` over even output states.
pub fn even_projection(dark: bool, left: u8, right: u8, x: &LaurentPoly, mu: &BosonState) -> RatFn {
    let tiles: Vec<Tile> = (0..mu.occ.len())
        .map(|i| {
            let t = if dark { Tile::dark(x) } else { Tile::light(x) };
            t.with_shift(mu.shifted0 && i == 0)
        })
        .collect();
    let mut acc = RatFn::zero();
    for (out, w) in apply_row(&tiles, left, right, &mu.occ) {
        let s = BosonState { occ: out, shifted0: mu.shifted0 };
        if let Some(c) = even_coefficient(&s) {
            acc += &(&c * &RatFn::from_poly(w));
        }
    }
    acc
}

/// Checks `⟨e|T_-(x)|μ⟩ = ⟨e|T*_+(x)|μ⟩` and `⟨e|T_+(x)|μ⟩ = ⟨e|T*_-(x)|μ⟩`.
pub fn check_even_state_exchange(mu: &BosonState) -> Result<(), EvenStateError> {
    let x = LaurentPoly::x(1);
    let pairs = [
        ("T_- / T*_+", (PARTICLE, PARTICLE), (HOLE, HOLE)),
        ("T_+ / T*_-", (HOLE, PARTICLE), (PARTICLE, HOLE)),
    ];
    for (name, (dl, dr), (ll, lr)) in pairs {
        let lhs = even_projection(true, dl, dr, &x, mu);
        let rhs = even_projection(false, ll, lr, &x, mu);
        if lhs != rhs {
            return Err(EvenStateError::IdentityViolated { pair: name, input: mu.occ.clone() });
        }
    }
    Ok(())
}

/// Every state on sites `0..width` with occupations in `lo..=hi` (site 0)
/// and `0..=hi` elsewhere.
pub fn states_up_to(width: usize, lo0: i32, hi: i32, shifted0: bool) -> Vec<BosonState> {
    let mut out = vec![Vec::new()];
    for i in 0..width {
        let lo = if i == 0 { lo0 } else { 0 };
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
                (lo..=hi).map(move |m| {
                    let mut w = v.clone();
                    w.push(m);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|occ| BosonState { occ, shifted0 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_exchange() {
        assert!(check_even_state_exchange(&BosonState::vacuum(3, false)).is_ok());
        assert!(check_even_state_exchange(&BosonState::vacuum(3, true)).is_ok());
    }

    #[test]
    fn coefficient_of_odd_state_is_absent() {
        let s = BosonState { occ: vec![0, 1, 2], shifted0: false };
        assert!(even_coefficient(&s).is_none());
        let s = BosonState { occ: vec![0, 2], shifted0: false };
        assert_eq!(even_coefficient(&s).unwrap(), RatFn::from_poly("1 - t".parse().unwrap()));
    }

    #[test]
    fn exchange_on_small_states() {
        for shifted in [false, true] {
            let lo = if shifted { -2 } else { 0 };
            for mu in states_up_to(3, lo, 3, shifted) {
                assert!(check_even_state_exchange(&mu).is_ok(), "{:?}", mu);
            }
        }
    }
}
