//! Square matrices over a commutative ring, with determinants and Pfaffians
//! by memoized expansion along the first row.

use crate::algebra::{LaurentPoly, RatFn};
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Ring: Clone + PartialEq
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Neg<Output = Self>,
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl Ring for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }
}

/// Determinant by Laplace expansion with the minors memoized on column sets.
pub fn det<T: Ring>(m: &Matrix<T>) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    let n = m.size();
    let mut memo: HashMap<u32, T> = HashMap::new();
    det_rec(m, 0, (1u32 << n) - 1, &mut memo)
}

fn det_rec<T: Ring>(m: &Matrix<T>, row: usize, cols: u32, memo: &mut HashMap<u32, T>) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    if cols == 0 {
        return T::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = T::zero();
    let mut sign_pos = true;
    for j in 0..m.size() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let a = m.get(row, j);
        if !a.is_zero() {
            let minor = det_rec(m, row + 1, cols & !(1 << j), memo);
            let term = a * &minor;
            acc = if sign_pos { &acc + &term } else { &acc - &term };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Pfaffian of an antisymmetric matrix of even size, by expansion along the
/// lowest remaining index. Only the upper triangle is read.
pub fn pfaffian<T: Ring>(m: &Matrix<T>) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    let n = m.size();
    if n % 2 == 1 {
        return T::zero();
    }
    let mut memo: HashMap<u32, T> = HashMap::new();
    pf_rec(m, (1u32 << n) - 1, &mut memo)
}

fn pf_rec<T: Ring>(m: &Matrix<T>, set: u32, memo: &mut HashMap<u32, T>) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    if set == 0 {
        return T::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1 << i);
    let mut acc = T::zero();
    let mut sign_pos = true;
    for j in (i + 1)..m.size() {
        if rest & (1 << j) == 0 {
            continue;
        }
        let a = m.get(i, j);
        if !a.is_zero() {
            let sub = pf_rec(m, rest & !(1 << j), memo);
            let term = a * &sub;
            acc = if sign_pos { &acc + &term } else { &acc - &term };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(set, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn vandermonde() {
        let m = Matrix::from_fn(3, |i, j| LaurentPoly::x(i + 1).pow(j as u32));
        let want = p("x2 - x1") * p("x3 - x1") * p("x3 - x2");
        assert_eq!(det(&m), want);
    }

    #[test]
    fn pfaffian_squares_to_det() {
        let vals = ["x1", "x2 + t", "x3", "y1", "y2 - 1", "u"];
        let mut k = 0;
        let mut upper = vec![vec![LaurentPoly::zero(); 4]; 4];
        for i in 0..4 {
            for j in (i + 1)..4 {
                upper[i][j] = p(vals[k]);
                upper[j][i] = -p(vals[k]);
                k += 1;
            }
        }
        let m = Matrix::from_fn(4, |i, j| upper[i][j].clone());
        let pf = pfaffian(&m);
        let want = &(&p("x1*u") - &(&p("x2 + t") * &p("y2 - 1"))) + &p("x3*y1");
        assert_eq!(pf, want);
        assert_eq!(&pf * &pf, det(&m));
    }
}
