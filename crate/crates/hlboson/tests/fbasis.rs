use hlboson::algebra::{LaurentPoly, RatFn};
use hlboson::fbasis::*;
use hlboson::hl_an::hl_p_branching;
use hlboson::hl_bcn::k_hyperoctahedral;
use hlboson::partitions::enumerate;
use hlboson::tboson::transfer::k_prefactor;
use hlboson::tboson::BoundaryParams;

#[test]
fn all_checks_pass_up_to_three_legs() {
    for n in 1..=3 {
        for c in fbasis_check(n).unwrap() {
            assert!(c.passed, "n={n}: {}", c.name);
        }
    }
}

#[test]
fn delta_weights_at_two_legs() {
    let xs = a_vars(2);
    let d = delta_product(&[0, 1], &xs, &a_legs(2));
    let (x1, x2) = (LaurentPoly::x(1), LaurentPoly::x(2));
    let t = LaurentPoly::t();
    // state (particle, hole) has index 2
    let want = &RatFn::from_poly(&x2 - &x1) / &RatFn::from_poly(&x2 - &(&t * &x1));
    assert_eq!(*d.get(2, 2), want);
    assert_eq!(*d.get(0, 0), RatFn::one());
}

#[test]
fn two_leg_column_carries_the_ratio() {
    let s = twisted_column(1, 2).unwrap();
    let (x1, x2) = (LaurentPoly::x(1), LaurentPoly::x(2));
    let t = LaurentPoly::t();
    // I = {1}: leg 1 goes hole -> particle, leg 2 stays a hole
    let ratio = &RatFn::from_poly(&x2 - &(&t * &x1)) / &RatFn::from_poly(&x2 - &x1);
    let want = &RatFn::from_poly(&x1 * &x2) * &ratio;
    assert_eq!(*s.get(0, 2), want);
}

#[test]
fn bold_columns_and_boundary() {
    for n in 1..=2 {
        for m in 0..=2 * n {
            twisted_bold_column(m, n).unwrap();
        }
        twisted_b_column(&LaurentPoly::var(hlboson::algebra::Var::G), n).unwrap();
        twisted_boundary(n).unwrap();
    }
}

#[test]
fn boundary_components_at_one_variable() {
    let v = twisted_boundary(1).unwrap();
    let x = LaurentPoly::x(1);
    let xb = x.pow_signed(-1);
    let one = LaurentPoly::one();
    let pre = RatFn::from_poly(k_prefactor(std::slice::from_ref(&x)));
    // ⟨particle, hole| and ⟨hole, particle|
    assert_eq!(v[2], &pre * &(&RatFn::from_poly(x.clone()) / &RatFn::from_poly(&one - &x.pow(2))));
    assert_eq!(v[1], &pre * &(&RatFn::from_poly(xb.clone()) / &RatFn::from_poly(&one - &xb.pow(2))));
    assert!(v[0].is_zero() && v[3].is_zero());
}

#[test]
fn p_reconstructed_from_columns() {
    for n in 1..=3 {
        let xs: LaurentPoly = (1..=n).fold(LaurentPoly::one(), |a, i| &a * &LaurentPoly::x(i));
        for l in enumerate(n, 4, false) {
            let want = &xs * &hl_p_branching(&l, n).unwrap();
            assert_eq!(p_from_columns(&l).unwrap(), want, "{l}");
        }
    }
}

#[test]
fn k_reconstructed_from_columns() {
    let bp = BoundaryParams::formal();
    for n in 1..=2 {
        let pre = k_prefactor(&a_vars(n));
        for l in enumerate(n, 3, false) {
            let want = &pre * &k_hyperoctahedral(&l, n, &bp, false).unwrap();
            assert_eq!(k_from_plain_columns(&l, &bp).unwrap(), want, "plain {l}");
            assert_eq!(k_from_columns(&l, &bp).unwrap(), want, "twisted {l}");
        }
    }
}
