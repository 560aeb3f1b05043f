//! Exact Laurent polynomials, rational functions, determinants and series.

use hlboson::algebra::{det, pfaffian, truncate_graded, LaurentPoly, Matrix, RatFn, Var};

fn main() {
    let a: LaurentPoly = "(1 - t)*(x1 + x1^-1)".parse().unwrap();
    let b: LaurentPoly = "1 - t*x1*x2".parse().unwrap();
    println!("a       = {a}");
    println!("a*b     = {}", &a * &b);
    println!("a(t=1/2) = {}", a.subs(Var::T, &"1/2".parse().unwrap()).unwrap());

    let r = RatFn::new(a.clone(), &b).unwrap();
    println!("a/b     = {r}");
    println!("a/b*b   = {}", (&r * &RatFn::from_poly(b.clone())).cancelled());

    // Vandermonde determinant and a 4x4 Pfaffian
    let v = Matrix::from_fn(3, |i, j| LaurentPoly::x(i + 1).pow(j as u32));
    println!("vandermonde = {}", det(&v));
    // upper triangle x_i - x_j + t, extended antisymmetrically
    let upper = |i: usize, j: usize| &(&LaurentPoly::x(i + 1) - &LaurentPoly::x(j + 1)) + &LaurentPoly::t();
    let m = Matrix::from_fn(4, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => upper(i, j),
        std::cmp::Ordering::Greater => -upper(j, i),
        std::cmp::Ordering::Equal => LaurentPoly::zero(),
    });
    let pf = pfaffian(&m);
    println!("pf          = {pf}");
    println!("pf^2 = det  : {}", &pf * &pf == det(&m));

    // 1/(1 - s x1) through s^4
    let f: RatFn = "1/(1 - s*x1)".parse().unwrap();
    println!("series      = {}", truncate_graded(&f, Var::S, 4).unwrap());
}
