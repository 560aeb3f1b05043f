//! Rational functions with a factored denominator.
//!
//! The denominator is a list of normalized factors with multiplicities. A
//! factor is normalized by shifting its exponents so each variable has
//! minimum exponent zero and scaling to leading coefficient one; the unit
//! that falls out is pushed into the numerator. Sums take the least common
//! multiple of the factor lists, which keeps repeated sums over a shared
//! set of denominators small.

use crate::algebra::poly::{check_subs_aux, owned_ops, LaurentPoly, Rational, Var};
use crate::algebra::AlgebraError;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, Debug, Default)]
pub struct RatFn {
    num: LaurentPoly,
    den: BTreeMap<LaurentPoly, u32>,
}

/// Splits `p` into `unit * normalized` where `unit` is a monomial times a
/// constant. Returns `None` for the normalized part when `p` is itself a unit.
fn normalize_factor(p: &LaurentPoly) -> (LaurentPoly, Option<LaurentPoly>) {
    let m = p.min_exponents();
    let shifted = p.mul_mono(&m.inv());
    let lc = shifted.leading_term().map(|(_, c)| c.clone()).unwrap();
    let normed = shifted.scale(&lc.recip());
    let unit = LaurentPoly::term(m, lc);
    if normed.is_one() {
        (p.clone(), None)
    } else {
        (unit, Some(normed))
    }
}

fn unit_inverse(u: &LaurentPoly) -> LaurentPoly {
    let (m, c) = u.as_monomial().expect("unit is a monomial");
    LaurentPoly::term(m.inv(), c.recip())
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn::default()
    }

    pub fn one() -> Self {
        RatFn::from_poly(LaurentPoly::one())
    }

    pub fn int(n: i64) -> Self {
        RatFn::from_poly(LaurentPoly::int(n))
    }

    pub fn constant(c: Rational) -> Self {
        RatFn::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        RatFn::from_poly(LaurentPoly::var(v))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFn { num: p, den: BTreeMap::new() }
    }

    /// `num / den`; fails on a zero denominator.
    pub fn new(num: LaurentPoly, den: &LaurentPoly) -> Result<Self, AlgebraError> {
        let d = RatFn::from_poly(den.clone()).inv()?;
        Ok(&RatFn::from_poly(num) * &d)
    }

    /// `1 / p` as a single normalized factor.
    pub fn inv_poly(p: &LaurentPoly) -> Result<Self, AlgebraError> {
        RatFn::from_poly(p.clone()).inv()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.den.iter().map(|(f, &k)| (f, k))
    }

    pub fn den_poly(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one();
        for (f, &k) in &self.den {
            d = &d * &f.pow(k);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let (unit, normed) = normalize_factor(&self.num);
        let mut num = unit_inverse(&unit);
        for (f, &k) in &self.den {
            num = &num * &f.pow(k);
        }
        let mut den = BTreeMap::new();
        if let Some(n) = normed {
            den.insert(n, 1);
        }
        Ok(RatFn { num, den })
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        let mut den = BTreeMap::new();
        for (f, &m) in &base.den {
            den.insert(f.clone(), m * k);
        }
        Ok(RatFn { num: base.num.pow(k), den })
    }

    fn product_of(factors: &BTreeMap<LaurentPoly, u32>, minus: &BTreeMap<LaurentPoly, u32>) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        for (f, &k) in factors {
            let sub = minus.get(f).copied().unwrap_or(0);
            if k > sub {
                p = &p * &f.pow(k - sub);
            }
        }
        p
    }

    fn lcm(a: &BTreeMap<LaurentPoly, u32>, b: &BTreeMap<LaurentPoly, u32>) -> BTreeMap<LaurentPoly, u32> {
        let mut l = a.clone();
        for (f, &k) in b {
            let e = l.entry(f.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        l
    }

    /// Divides out every denominator factor that exactly divides the numerator.
    pub fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<LaurentPoly> = self.den.keys().cloned().collect();
        for f in keys {
            if f.has_aux() {
                continue;
            }
            while let Some(&k) = self.den.get(&f) {
                match self.num.exact_divide(&f) {
                    Ok(q) => {
                        self.num = q;
                        if k == 1 {
                            self.den.remove(&f);
                        } else {
                            self.den.insert(f.clone(), k - 1);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }

    pub fn cancelled(mut self) -> Self {
        self.cancel();
        self
    }

    /// Divides the numerator by `p`, which must divide it exactly.
    pub fn div_num_exact(&self, p: &LaurentPoly) -> Result<Self, AlgebraError> {
        Ok(RatFn { num: self.num.exact_divide(p)?, den: self.den.clone() })
    }

    /// Polynomial value after cancellation, if the function is a Laurent polynomial.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_empty() {
            return Some(self.num.clone());
        }
        let c = self.clone().cancelled();
        c.den.is_empty().then_some(c.num)
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute(&self, bindings: &[(Var, RatFn)]) -> Result<RatFn, AlgebraError> {
        let n = subst_poly(&self.num, bindings)?;
        let mut out = n;
        for (f, &k) in &self.den {
            let d = subst_poly(f, bindings)?;
            if d.is_zero() {
                return Err(AlgebraError::ZeroDenominator);
            }
            out = &out / &d.pow(k as i32)?;
        }
        Ok(out)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.keys().any(|f| f.contains_var(v))
    }
}

/// Substitutes into a Laurent polynomial, grouping terms by their exponents
/// on the bound variables so each power product is formed once.
pub fn subst_poly(p: &LaurentPoly, bindings: &[(Var, RatFn)]) -> Result<RatFn, AlgebraError> {
    for (v, _) in bindings {
        check_subs_aux(p, *v)?;
    }
    let mut groups: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key: Vec<i32> = bindings.iter().map(|(v, _)| m.exp(*v)).collect();
        let mut free = m.clone();
        for (v, _) in bindings {
            free.0[v.index()] = 0;
        }
        groups.entry(key).or_default().add_term(free, c.clone());
    }
    let mut cache: BTreeMap<(usize, i32), RatFn> = BTreeMap::new();
    let mut out = RatFn::zero();
    for (key, free) in groups {
        let mut term = RatFn::from_poly(free);
        for (i, &e) in key.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !cache.contains_key(&(i, e)) {
                let v = &bindings[i].1;
                if e < 0 && v.is_zero() {
                    return Err(AlgebraError::ZeroDenominator);
                }
                cache.insert((i, e), v.pow(e)?);
            }
            term = &term * &cache[&(i, e)];
        }
        out += &term;
    }
    Ok(out)
}

impl PartialEq for RatFn {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        let l = RatFn::lcm(&self.den, &o.den);
        let a = &self.num * &RatFn::product_of(&l, &self.den);
        let b = &o.num * &RatFn::product_of(&l, &o.den);
        a == b
    }
}

impl Eq for RatFn {}

impl AddAssign<&RatFn> for RatFn {
    fn add_assign(&mut self, o: &RatFn) {
        if o.num.is_zero() {
            return;
        }
        if self.num.is_zero() {
            *self = o.clone();
            return;
        }
        if self.den == o.den {
            self.num += &o.num;
            if self.num.is_zero() {
                self.den.clear();
            }
            return;
        }
        let l = RatFn::lcm(&self.den, &o.den);
        let mut a = &self.num * &RatFn::product_of(&l, &self.den);
        a += &(&o.num * &RatFn::product_of(&l, &o.den));
        self.num = a;
        self.den = if self.num.is_zero() { BTreeMap::new() } else { l };
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, o: &RatFn) -> RatFn {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, o: &RatFn) -> RatFn {
        self + &(-o)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, o: &RatFn) -> RatFn {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFn::zero();
        }
        let mut den = self.den.clone();
        for (f, &k) in &o.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        RatFn { num: &self.num * &o.num, den }
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    /// Panics on division by zero; use `inv` for a checked version.
    fn div(self, o: &RatFn) -> RatFn {
        self * &o.inv().expect("division by zero rational function")
    }
}

owned_ops!(RatFn);

impl Div for RatFn {
    type Output = RatFn;
    fn div(self, o: RatFn) -> RatFn {
        &self / &o
    }
}

impl From<LaurentPoly> for RatFn {
    fn from(p: LaurentPoly) -> Self {
        RatFn::from_poly(p)
    }
}

impl From<i64> for RatFn {
    fn from(n: i64) -> Self {
        RatFn::int(n)
    }
}

impl From<Var> for RatFn {
    fn from(v: Var) -> Self {
        RatFn::var(v)
    }
}

impl fmt::Display for RatFn {
    /// `num` alone when the denominator is trivial, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den_poly())
        }
    }
}

impl FromStr for RatFn {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfn(s)
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn sum_over_shared_denominators() {
        let a = RatFn::new(p("1"), &p("1 - x1")).unwrap();
        let b = RatFn::new(p("x1"), &p("1 - x1")).unwrap();
        let s = (&a - &b).cancelled();
        assert_eq!(s.to_poly(), Some(LaurentPoly::one()));
    }

    #[test]
    fn normalization_moves_units() {
        let a = RatFn::new(p("1"), &p("2*x1 - 2*x1^2")).unwrap();
        let b = RatFn::new(p("1/2*x1^-1"), &p("1 - x1")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.num(), b.num());
    }

    #[test]
    fn substitute_rational() {
        let f = RatFn::new(p("1 - t*x1"), &p("1 - x1")).unwrap();
        let g = f.substitute(&[(Var::x(1), RatFn::new(p("1"), &p("y1")).unwrap())]).unwrap();
        let want = RatFn::new(p("y1 - t"), &p("y1 - 1")).unwrap();
        assert_eq!(g, want);
    }

    #[test]
    fn round_trip_display() {
        let f = RatFn::new(p("1 - t"), &p("1 - x1*y1")).unwrap();
        let g: RatFn = f.to_string().parse().unwrap();
        assert_eq!(f, g);
    }
}
