use hlboson::algebra::{LaurentPoly, Var};
use hlboson::identities::*;

fn run(id: u8, n: usize, order: u32) -> IdentityReport {
    let r = verify(id, n, order).unwrap();
    assert!(r.verdict, "identity {id} n={n} order={order}: {:?}", r.mismatches);
    assert!(!r.lhs.is_zero());
    r
}

#[test]
fn refined_cauchy() {
    let r = run(1, 1, 8);
    // through s^16 there are nine grades 0, 2, ..., 16
    assert_eq!(r.lhs.coefficients_in(Var::S).len(), 9);
    let r = run(1, 2, 4);
    let c0 = r.lhs.coefficients_in(Var::S).remove(&0).unwrap();
    assert_eq!(c0, refined_constant_term(2));
    run(1, 3, 4);
    for n in 1..=3 {
        assert!(classical_limit(n).unwrap(), "n={n}");
    }
}

#[test]
fn refined_littlewood() {
    let r = run(2, 2, 4);
    let c0 = r.lhs.coefficients_in(Var::S).remove(&0).unwrap();
    assert_eq!(c0, "1 - u*t".parse::<LaurentPoly>().unwrap());
    run(2, 4, 3);
}

#[test]
fn reflecting_cauchy() {
    let r = run(3, 1, 4);
    let c0 = r.lhs.coefficients_in(Var::S).remove(&0).unwrap();
    assert_eq!(c0, "1 - t".parse::<LaurentPoly>().unwrap());
    run(3, 2, 3);
}

#[test]
fn doubly_reflecting_and_reflecting_littlewood() {
    run(4, 1, 3);
    run(5, 2, 3);
}

#[test]
fn raising_the_order_keeps_lower_grades() {
    for (id, n, d) in [(1, 2, 2), (3, 1, 3), (4, 1, 2)] {
        let lo = verify(id, n, d).unwrap();
        let hi = verify(id, n, d + 1).unwrap();
        let v = if id == 4 { Var::Z } else { Var::S };
        let (a, b) = (lo.lhs.coefficients_in(v), hi.lhs.coefficients_in(v));
        for (g, c) in a {
            assert_eq!(Some(&c), b.get(&g), "identity {id} grade {g}");
        }
    }
}

#[test]
fn worker_count_does_not_change_the_result() {
    let base = verify(1, 2, 3).unwrap();
    std::env::set_var("HL_WORKERS", "1");
    let single = verify(1, 2, 3).unwrap();
    std::env::remove_var("HL_WORKERS");
    assert_eq!(base.lhs, single.lhs);
    assert_eq!(base.rhs, single.rhs);
}
