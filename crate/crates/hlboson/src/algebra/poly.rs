//! Laurent polynomials with rational coefficients over a fixed alphabet.
//!
//! The alphabet is `x1..x6, y1..y6, t, u, z, g, d, s` plus two auxiliary
//! square roots `w` (with `w^2 = z`) and `r` (with `r^2 = t`). Monomials are
//! kept in a normal form where `w` and `r` carry exponent 0 or 1.
//!
//! # Key Operations
//! - Ring arithmetic (`+`, `-`, `*`) on references and owned values
//! - `exact_divide` for divisibility-checked quotients
//! - `coefficients_in` to split by powers of one variable
//! - Canonical `Display` and a matching `FromStr`

use crate::algebra::AlgebraError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

pub type Rational = BigRational;

/// Number of `x` (and `y`) variables in the alphabet.
pub const NX: usize = 6;
/// Total number of variables, auxiliary roots included.
pub const NV: usize = 2 * NX + 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub const T: Var = Var(12);
    pub const U: Var = Var(13);
    pub const Z: Var = Var(14);
    pub const G: Var = Var(15);
    pub const D: Var = Var(16);
    pub const S: Var = Var(17);
    pub const W: Var = Var(18);
    pub const R: Var = Var(19);

    /// `x_i`, 1-based.
    pub fn x(i: usize) -> Var {
        assert!((1..=NX).contains(&i), "x index {i} out of range");
        Var((i - 1) as u8)
    }

    /// `y_i`, 1-based.
    pub fn y(i: usize) -> Var {
        assert!((1..=NX).contains(&i), "y index {i} out of range");
        Var((NX + i - 1) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Var {
        assert!(i < NV);
        Var(i as u8)
    }

    pub fn is_aux(self) -> bool {
        self == Var::W || self == Var::R
    }

    pub fn name(self) -> String {
        let i = self.index();
        if i < NX {
            format!("x{}", i + 1)
        } else if i < 2 * NX {
            format!("y{}", i - NX + 1)
        } else {
            ["t", "u", "z", "g", "d", "s", "w", "r"][i - 2 * NX].to_string()
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        let fixed = ["t", "u", "z", "g", "d", "s", "w", "r"];
        if let Some(k) = fixed.iter().position(|f| *f == s) {
            return Some(Var((2 * NX + k) as u8));
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let i: usize = tail.parse().ok()?;
        if !(1..=NX).contains(&i) {
            return None;
        }
        match head {
            "x" => Some(Var::x(i)),
            "y" => Some(Var::y(i)),
            _ => None,
        }
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NV).map(Var::from_index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector. Ordering is lexicographic in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [i32; NV]);

impl Default for Mono {
    fn default() -> Self {
        Mono([0; NV])
    }
}

impl Mono {
    pub fn one() -> Mono {
        Mono::default()
    }

    pub fn var(v: Var, e: i32) -> Mono {
        let mut m = Mono::default();
        m.0[v.index()] = e;
        m.reduce();
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn reduce(&mut self) {
        for (aux, base) in [(Var::W, Var::Z), (Var::R, Var::T)] {
            let e = self.0[aux.index()];
            if !(0..=1).contains(&e) {
                self.0[base.index()] += e.div_euclid(2);
                self.0[aux.index()] = e.rem_euclid(2);
            }
        }
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = Mono::default();
        for i in 0..NV {
            m.0[i] = self.0[i] + o.0[i];
        }
        m.reduce();
        m
    }

    pub fn inv(&self) -> Mono {
        let mut m = Mono::default();
        for i in 0..NV {
            m.0[i] = -self.0[i];
        }
        m.reduce();
        m
    }

    /// Componentwise `self >= o`.
    pub fn divisible_by(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a >= b)
    }

    fn sub_raw(&self, o: &Mono) -> Mono {
        let mut m = Mono::default();
        for i in 0..NV {
            m.0[i] = self.0[i] - o.0[i];
        }
        m
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, Rational>,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Mono::var(v, 1), Rational::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(Mono::var(v, e), Rational::one())
    }

    pub fn x(i: usize) -> Self {
        Self::var(Var::x(i))
    }

    pub fn y(i: usize) -> Self {
        Self::var(Var::y(i))
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn term(m: Mono, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            let mut m = m;
            m.reduce();
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mut m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        m.reduce();
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    /// Constant value, if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Single term, if the polynomial is a nonzero monomial times a constant.
    pub fn as_monomial(&self) -> Option<(Mono, Rational)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((m.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        if m.is_one() {
            return self.clone();
        }
        let mut out = LaurentPoly::zero();
        for (k, c) in &self.terms {
            out.add_term(k.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; a negative exponent requires a monomial.
    pub fn pow_signed(&self, e: i32) -> Self {
        if e >= 0 {
            return self.pow(e as u32);
        }
        let (m, c) = self.as_monomial().expect("negative power of a non-monomial");
        LaurentPoly::term(m.inv(), c.recip()).pow((-e) as u32)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    pub fn has_aux(&self) -> bool {
        self.contains_var(Var::W) || self.contains_var(Var::R)
    }

    /// Componentwise minimum exponent over all terms (zero for the zero polynomial).
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(k) => k.clone(),
            None => return Mono::one(),
        };
        for k in it {
            for i in 0..NV {
                m.0[i] = m.0[i].min(k.0[i]);
            }
        }
        m
    }

    /// `(min, max)` exponent of `v`, `None` for zero.
    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        let mut r: Option<(i32, i32)> = None;
        for m in self.terms.keys() {
            let e = m.exp(v);
            r = Some(match r {
                None => (e, e),
                Some((a, b)) => (a.min(e), b.max(e)),
            });
        }
        r
    }

    /// Splits into `sum_k v^k * c_k` with each `c_k` free of `v`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut k = m.clone();
            k.0[v.index()] = 0;
            out.entry(e).or_default().add_term(k, c.clone());
        }
        out
    }

    /// Drops every term whose `v`-exponent exceeds `order`.
    pub fn truncate_above(&self, v: Var, order: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) <= order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product keeping only terms with `v`-exponent at most `order`.
    pub fn mul_truncated(&self, o: &Self, v: Var, order: i32) -> Self {
        let mut acc: BTreeMap<Mono, Rational> = BTreeMap::new();
        let vi = v.index();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1.0[vi] + m2.0[vi] > order {
                    continue;
                }
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }

    /// Replaces `v` by a Laurent polynomial. Negative powers of `v` require a
    /// monomial replacement.
    pub fn subs(&self, v: Var, val: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        if !self.contains_var(v) {
            return Ok(self.clone());
        }
        check_subs_aux(self, v)?;
        let parts = self.coefficients_in(v);
        let mut out = LaurentPoly::zero();
        let inv = if parts.keys().next().copied().unwrap_or(0) < 0 {
            match val.as_monomial() {
                Some((m, c)) => Some(LaurentPoly::term(m.inv(), c.recip())),
                None => return Err(AlgebraError::ZeroDenominator),
            }
        } else {
            None
        };
        for (e, c) in parts {
            let p = if e >= 0 {
                val.pow(e as u32)
            } else {
                inv.as_ref().unwrap().pow((-e) as u32)
            };
            out += &(&c * &p);
        }
        Ok(out)
    }

    /// Simultaneous renaming of variables; each pair `(a, b)` moves the
    /// exponent of `a` onto `b`.
    pub fn rename(&self, map: &[(Var, Var)]) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(m, c)| {
            let mut out = m.clone();
            for (a, _) in map {
                out.0[a.index()] = 0;
            }
            for (a, b) in map {
                out.0[b.index()] += m.0[a.index()];
            }
            (out, c.clone())
        }))
    }

    /// Applies several monomial-or-polynomial substitutions in sequence.
    pub fn subs_many(&self, b: &[(Var, LaurentPoly)]) -> Result<LaurentPoly, AlgebraError> {
        // simultaneous: first rename to fresh placeholders is unnecessary as
        // long as no replacement mentions a later bound variable
        let mut p = self.clone();
        for (v, val) in b {
            p = p.subs(*v, val)?;
        }
        Ok(p)
    }

    /// Exact quotient `self / d`; fails with `NotDivisible` if `d` does not
    /// divide `self` in the Laurent ring.
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            return Ok(self.mul_mono(&m.inv()).scale(&c.recip()));
        }
        if d.has_aux() {
            return Err(AlgebraError::Unsupported(
                "division by a polynomial in an auxiliary root".into(),
            ));
        }
        if self.has_aux() {
            // split along the basis 1, w, r, wr over the aux-free subring
            let mut out = LaurentPoly::zero();
            let mut buckets: BTreeMap<(i32, i32), LaurentPoly> = BTreeMap::new();
            for (m, c) in &self.terms {
                let key = (m.exp(Var::W), m.exp(Var::R));
                let mut k = m.clone();
                k.0[Var::W.index()] = 0;
                k.0[Var::R.index()] = 0;
                buckets.entry(key).or_default().add_term(k, c.clone());
            }
            for ((ew, er), part) in buckets {
                let q = part.exact_divide(d)?;
                let mut shift = Mono::one();
                shift.0[Var::W.index()] = ew;
                shift.0[Var::R.index()] = er;
                out += &q.mul_mono(&shift);
            }
            return Ok(out);
        }
        let ms = self.min_exponents();
        let md = d.min_exponents();
        let p = self.mul_mono(&ms.inv());
        let q = d.mul_mono(&md.inv());
        let (lm, lc) = q.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = p;
        let mut quot = LaurentPoly::zero();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !m.divisible_by(&lm) {
                return Err(AlgebraError::NotDivisible);
            }
            let sm = m.sub_raw(&lm);
            let sc = c / &lc;
            for (k, e) in &q.terms {
                rem.add_term(k.mul(&sm), -(e * &sc));
            }
            quot.add_term(sm, sc);
        }
        Ok(quot.mul_mono(&ms.mul(&md.inv())))
    }
}

pub(crate) fn check_subs_aux(p: &LaurentPoly, v: Var) -> Result<(), AlgebraError> {
    if (v == Var::Z && p.contains_var(Var::W)) || (v == Var::T && p.contains_var(Var::R)) {
        return Err(AlgebraError::Unsupported(format!(
            "substituting {v} while its square root is present"
        )));
    }
    Ok(())
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, o: &LaurentPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut acc: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;
owned_ops!(LaurentPoly);

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for v in Var::all() {
        let e = m.exp(v);
        if e == 1 {
            parts.push(v.name());
        } else if e != 0 {
            parts.push(format!("{}^{}", v.name(), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending monomial order, `c*v^e*...`, unit coefficients
    /// omitted on non-constant terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            if m.is_one() {
                f.write_str(&fmt_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&fmt_mono(m))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_mono(m))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("bad number `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(AlgebraError::ZeroDenominator);
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for LaurentPoly {
    type Err = AlgebraError;

    /// Accepts sums, products, integer powers, parentheses and exact
    /// division, e.g. `(1 - t)*(1 - z^2)` or `x1^2 - 3/2*x1*x2*t`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn aux_roots_reduce() {
        let w = LaurentPoly::var(Var::W);
        assert_eq!(&w * &w, LaurentPoly::var(Var::Z));
        let r = LaurentPoly::var_pow(Var::R, -3);
        assert_eq!(r.to_string(), "t^-2*r");
    }

    #[test]
    fn print_parse_round_trip() {
        let a = p("x1^2 - 3/2*t*x1*x2 + x2^-1 - 5");
        assert_eq!(a.to_string(), "x1^2 - 3/2*x1*x2*t - 5 + x2^-1");
        assert_eq!(p(&a.to_string()), a);
        assert_eq!(p("0"), LaurentPoly::zero());
    }

    #[test]
    fn parse_factored() {
        assert_eq!(p("(1 - t)*(1 - z^2)"), p("1 - t - z^2 + t*z^2"));
        assert_eq!(p("(x1 + x2)^2/2"), p("1/2*x1^2 + x1*x2 + 1/2*x2^2"));
        assert_eq!(p("-(x1^-1 - t)"), p("t - x1^-1"));
        assert_eq!(p("(1 - x1^2)/(1 - x1)"), p("1 + x1"));
        for bad in ["", "(x1", "x1 +", "q1", "x1^", "1/0", "1/(1 - x1)"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn divide_exact() {
        let a = p("1 - x1*y1");
        let b = p("1 - t*x1*y1");
        let prod = &(&a * &b) * &p("x1^-2 + t");
        assert_eq!(prod.exact_divide(&a).unwrap(), &b * &p("x1^-2 + t"));
        assert!(matches!(
            p("1 + x1").exact_divide(&p("1 - x1")),
            Err(AlgebraError::NotDivisible)
        ));
    }

    #[test]
    fn divide_with_aux_dividend() {
        let a = p("1 - x1");
        let q = p("r*x2 + w - 2");
        assert_eq!((&a * &q).exact_divide(&a).unwrap(), q);
    }

    #[test]
    fn subs_monomial_negative_power() {
        let a = p("x1^-1 + x1^2");
        let got = a.subs(Var::x(1), &p("t*y1^-1")).unwrap();
        assert_eq!(got, p("t^-1*y1 + t^2*y1^-2"));
    }
}
