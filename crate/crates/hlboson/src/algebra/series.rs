//! Truncated power series in a single grading variable.

use crate::algebra::{AlgebraError, LaurentPoly, Mono, RatFn, Var};

type Series = Vec<LaurentPoly>;

fn to_series(p: &LaurentPoly, v: Var, lo: i32, order: i32) -> Series {
    let mut s = vec![LaurentPoly::zero(); (order - lo + 1).max(0) as usize];
    for (e, c) in p.coefficients_in(v) {
        if e >= lo && e <= order {
            s[(e - lo) as usize] = c;
        }
    }
    s
}

/// Inverse of `d` as a series in `v` with `len` coefficients, where `d` has
/// no negative powers of `v` and an invertible constant term.
fn inverse_series(d: &LaurentPoly, v: Var, len: usize) -> Result<Series, AlgebraError> {
    let ds = to_series(d, v, 0, len as i32 - 1);
    let (m, c) = ds[0].as_monomial().ok_or(AlgebraError::NotExpandable)?;
    let inv0 = LaurentPoly::term(m.inv(), c.recip());
    let mut g: Series = Vec::with_capacity(len);
    g.push(inv0.clone());
    for k in 1..len {
        let mut acc = LaurentPoly::zero();
        for j in 1..=k {
            if j < ds.len() && !ds[j].is_zero() {
                acc += &(&ds[j] * &g[k - j]);
            }
        }
        g.push(-(&acc * &inv0));
    }
    Ok(g)
}

/// Expands `f` as a series in `v` and keeps every term of `v`-degree at most
/// `order`. Each denominator factor must have an invertible lowest-degree
/// coefficient in `v` that is its degree-zero part; otherwise the result is
/// `NotExpandable`.
pub fn truncate_graded(f: &RatFn, v: Var, order: i32) -> Result<LaurentPoly, AlgebraError> {
    let num = f.num();
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let (lo, _) = num.degree_range(v).unwrap();
    if lo > order {
        return Ok(LaurentPoly::zero());
    }
    let len = (order - lo + 1) as usize;
    let mut out = to_series(num, v, lo, order);
    for (fac, k) in f.den_factors() {
        let (flo, _) = fac.degree_range(v).unwrap();
        if flo != 0 {
            return Err(AlgebraError::NotExpandable);
        }
        let g = inverse_series(fac, v, len)?;
        for _ in 0..k {
            out = series_mul(&out, &g);
        }
    }
    let mut p = LaurentPoly::zero();
    for (i, c) in out.into_iter().enumerate() {
        if !c.is_zero() {
            p += &c.mul_mono(&Mono::var(v, lo + i as i32));
        }
    }
    Ok(p)
}

fn series_mul(a: &Series, b: &Series) -> Series {
    let n = a.len();
    let mut out = vec![LaurentPoly::zero(); n];
    for i in 0..n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..(n - i) {
            if !b[j].is_zero() {
                out[i + j] += &(&a[i] * &b[j]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_kernel() {
        let f = RatFn::new(p("1 - u*t + u*t*s^2*x1*y1 - t*s^2*x1*y1"), &p("1 - s^2*x1*y1")).unwrap();
        let got = truncate_graded(&f, Var::S, 4).unwrap();
        let want = p("1 - u*t + s^2*x1*y1 - t*s^2*x1*y1 + s^4*x1^2*y1^2 - t*s^4*x1^2*y1^2");
        assert_eq!(got, want);
    }

    #[test]
    fn not_expandable() {
        let f = RatFn::new(p("1"), &p("x1 + x2 + s")).unwrap();
        assert!(matches!(truncate_graded(&f, Var::S, 3), Err(AlgebraError::NotExpandable)));
    }
}
