//! The property lists that determine each renormalized partition function,
//! checked on the enumerated functions.

use super::{renormalized_pf, Kind, PfError};
use crate::algebra::{LaurentPoly, Var};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyResult {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub kind: String,
    pub n: usize,
    pub results: Vec<PropertyResult>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

fn om(p: &LaurentPoly) -> LaurentPoly {
    &LaurentPoly::one() - p
}

fn prod(it: impl IntoIterator<Item = LaurentPoly>) -> LaurentPoly {
    it.into_iter().fold(LaurentPoly::one(), |a, b| &a * &b)
}

fn x(i: usize) -> LaurentPoly {
    LaurentPoly::x(i)
}

fn xb(i: usize) -> LaurentPoly {
    LaurentPoly::x(i).pow_signed(-1)
}

fn y(i: usize) -> LaurentPoly {
    LaurentPoly::y(i)
}

fn yb(i: usize) -> LaurentPoly {
    LaurentPoly::y(i).pow_signed(-1)
}

fn invert(p: &LaurentPoly, v: Var) -> LaurentPoly {
    p.subs(v, &LaurentPoly::var(v).pow_signed(-1)).expect("monomial substitution")
}

/// Invariance under every adjacent swap within each family, and under
/// inverting the first variable of each family listed in `inv`.
fn symmetric(z: &LaurentPoly, families: &[fn(usize) -> Var], n: usize, inv: &[fn(usize) -> Var]) -> bool {
    let swaps = families.iter().flat_map(|f| (1..n).map(move |i| [(f(i), f(i + 1)), (f(i + 1), f(i))]));
    for s in swaps {
        if &z.rename(&s) != z {
            return false;
        }
    }
    inv.iter().all(|f| &invert(z, f(1)) == z)
}

fn zero_all(z: &LaurentPoly, n: usize) -> LaurentPoly {
    let zs: Vec<(Var, LaurentPoly)> = (1..=n).map(|i| (Var::x(i), LaurentPoly::zero())).collect();
    z.subs_many(&zs).expect("polynomial substitution")
}

fn smaller(kind: Kind, n: usize) -> Result<LaurentPoly, PfError> {
    if n == 0 {
        Ok(LaurentPoly::one())
    } else {
        renormalized_pf(kind, n)
    }
}

fn base_value(kind: Kind) -> LaurentPoly {
    let t = LaurentPoly::t();
    let u = LaurentPoly::var(Var::U);
    let z = LaurentPoly::var(Var::Z);
    let one = LaurentPoly::one();
    match kind {
        Kind::DwHybrid => &om(&(&u * &t)) + &(&(&(&u - &one) * &t) * &(&x(1) * &y(1))),
        Kind::Os => &om(&(&u * &t)) + &(&(&(&u - &one) * &t) * &(&x(1) * &x(2))),
        Kind::U => om(&t),
        Kind::Uu => &om(&t) * &om(&z.pow(2)),
        Kind::Uo => prod([om(&t), om(&(&t * &z)), &one + &z]),
    }
}

/// Right-hand side of the recursion: the prefactor times `Z` one size down.
fn recursion(kind: Kind, n: usize) -> Result<(Var, LaurentPoly, LaurentPoly), PfError> {
    let t = LaurentPoly::t();
    let z = LaurentPoly::var(Var::Z);
    let tz = &t * &z;
    let z2 = z.pow(2);
    Ok(match kind {
        Kind::DwHybrid => {
            let f = prod((1..n).map(|i| &om(&(&t * &(&x(i) * &y(n)))) * &om(&(&t * &(&y(i) * &yb(n))))));
            (Var::x(n), yb(n), &(&om(&t) * &f) * &smaller(kind, n - 1)?)
        }
        Kind::Os => {
            let a = n - 1;
            let f = prod((1..a).map(|i| &om(&(&t * &(&x(i) * &xb(a)))) * &om(&(&t * &(&x(i) * &x(a))))));
            (Var::x(n), xb(a), &(&om(&t) * &f) * &smaller(kind, n - 2)?)
        }
        Kind::U => {
            let f = prod((1..n).map(|j| {
                prod([
                    om(&(&t * &(&y(j) * &yb(n)))),
                    om(&(&y(j) * &y(n))),
                    om(&(&t * &(&x(j) * &y(n)))),
                    om(&(&t * &(&xb(j) * &y(n)))),
                ])
            }));
            (Var::x(n), yb(n), &(&om(&t) * &f) * &smaller(kind, n - 1)?)
        }
        Kind::Uu => {
            let f = prod((1..n).map(|i| {
                prod([
                    om(&(&tz * &(&x(i) * &y(n)))),
                    om(&(&tz * &(&xb(i) * &y(n)))),
                    om(&(&z * &(&x(i) * &yb(n)))),
                    om(&(&z * &(&xb(i) * &yb(n)))),
                    om(&(&t * &(&y(i) * &yb(n)))),
                    om(&(&t * &(&yb(i) * &yb(n)))),
                    om(&(&z2 * &(&y(i) * &y(n)))),
                    om(&(&z2 * &(&yb(i) * &y(n)))),
                ])
            }));
            let val = &z.pow_signed(-1) * &yb(n);
            (Var::x(n), val, &(&base_value(kind) * &f) * &smaller(kind, n - 1)?)
        }
        Kind::Uo => {
            let a = n - 1;
            let f = prod((1..a).map(|i| {
                prod([
                    om(&(&t * &(&x(i) * &xb(a)))),
                    om(&(&t * &(&xb(i) * &xb(a)))),
                    om(&(&z2 * &(&x(i) * &x(a)))),
                    om(&(&z2 * &(&xb(i) * &x(a)))),
                    om(&(&tz * &(&x(i) * &x(a)))),
                    om(&(&tz * &(&xb(i) * &x(a)))),
                    om(&(&z * &(&x(i) * &xb(a)))),
                    om(&(&z * &(&xb(i) * &xb(a)))),
                ])
            }));
            let val = &z.pow_signed(-1) * &xb(a);
            (Var::x(n), val, &(&base_value(kind) * &f) * &smaller(kind, n - 2)?)
        }
    })
}

/// Evaluates every listed property on the enumerated renormalized function.
pub fn property_report(kind: Kind, n: usize) -> Result<PropertyReport, PfError> {
    let zf = renormalized_pf(kind, n)?;
    let last = Var::x(n);
    let range = zf.degree_range(last).unwrap_or((0, 0));
    let mut results = Vec::new();
    let mut push = |name: &'static str, passed: bool| {
        results.push(PropertyResult { index: results.len() + 1, name, passed });
    };
    let sym = match kind {
        Kind::DwHybrid => symmetric(&zf, &[Var::x, Var::y], n, &[]),
        Kind::Os => symmetric(&zf, &[Var::x], n, &[]),
        Kind::U => symmetric(&zf, &[Var::x, Var::y], n, &[Var::x]),
        Kind::Uu => symmetric(&zf, &[Var::x, Var::y], n, &[Var::x, Var::y]),
        Kind::Uo => symmetric(&zf, &[Var::x], n, &[Var::x]),
    };
    push("symmetry", sym);
    let deg = match kind {
        Kind::DwHybrid => range == (0, n as i32),
        Kind::Os => range == (0, n as i32 - 1),
        Kind::U => range.0 >= -(n as i32 - 1) && range.1 <= n as i32 - 1,
        Kind::Uu => range.0 >= -(2 * n as i32 - 1) && range.1 <= 2 * n as i32 - 1,
        Kind::Uo => range.0 >= -(2 * n as i32 - 3) && range.1 <= 2 * n as i32 - 3,
    };
    push("degree", deg);
    let (v, val, rhs) = recursion(kind, n)?;
    push("recursion", zf.subs(v, &val)? == rhs);
    let t = LaurentPoly::t();
    let u = LaurentPoly::var(Var::U);
    match kind {
        Kind::DwHybrid => {
            let want = prod((1..=n as u32).map(|i| om(&(&u * &t.pow(i)))));
            push("all variables zero", zero_all(&zf, n) == want);
        }
        Kind::Os => {
            let want = prod((1..=n as u32 / 2).map(|i| om(&(&u * &t.pow(2 * i - 1)))));
            push("all variables zero", zero_all(&zf, n) == want);
        }
        _ => {}
    }
    let base_n = if kind.even_sized() { 2 } else { 1 };
    push("smallest size", renormalized_pf(kind, base_n)? == base_value(kind));
    Ok(PropertyReport { kind: kind.name().to_string(), n, results })
}

/// As `property_report`, failing with the first violated property.
pub fn property_suite(kind: Kind, n: usize) -> Result<PropertyReport, PfError> {
    let rep = property_report(kind, n)?;
    if let Some(bad) = rep.results.iter().find(|r| !r.passed) {
        return Err(PfError::PropertyViolated { kind, index: bad.index, name: bad.name });
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_suites() {
        for (k, n) in [(Kind::DwHybrid, 1), (Kind::Os, 2), (Kind::U, 1), (Kind::Uu, 1), (Kind::Uo, 2)] {
            let rep = property_report(k, n).unwrap();
            assert!(rep.all_passed(), "{k}: {:?}", rep.results);
        }
    }
}
