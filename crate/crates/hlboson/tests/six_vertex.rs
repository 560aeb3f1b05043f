use hlboson::algebra::{LaurentPoly, Var};
use hlboson::sixv::*;

#[test]
fn closed_forms_match_enumeration() {
    for (ck, n) in [(ClosedKind::Dw, 2), (ClosedKind::Dw, 3), (ClosedKind::Os, 4), (ClosedKind::U, 2)] {
        let e = renormalized_pf(ck.domain(), n).unwrap();
        assert_eq!(closed_form(ck, n).unwrap(), e, "{ck} {n}");
    }
}

#[test]
fn special_points_match_enumeration() {
    for (ck, n) in [(ClosedKind::UuHalf, 2), (ClosedKind::UuT0, 2), (ClosedKind::UoHalf, 2), (ClosedKind::UoT0, 2)] {
        let e = ck.specialize(&renormalized_pf(ck.domain(), n).unwrap()).unwrap();
        assert_eq!(closed_form(ck, n).unwrap(), e, "{ck} {n}");
    }
}

#[test]
fn u_three_recursion() {
    property_suite(Kind::U, 3).unwrap();
}

#[test]
fn suites_at_largest_sizes() {
    for (k, n) in [(Kind::DwHybrid, 3), (Kind::Os, 4), (Kind::U, 2), (Kind::Uu, 2), (Kind::Uo, 2)] {
        let rep = property_report(k, n).unwrap();
        assert!(rep.all_passed(), "{k} {n}: {:?}", rep.results);
    }
}

#[test]
fn uu_vanishes_at_unit_z() {
    for n in 1..=2 {
        let z = renormalized_pf(Kind::Uu, n).unwrap();
        for v in [1, -1] {
            assert!(z.subs(Var::Z, &LaurentPoly::int(v)).unwrap().is_zero(), "n={n} z={v}");
        }
    }
}

#[test]
fn classical_limit() {
    for n in 1..=3 {
        let z = renormalized_pf(Kind::DwHybrid, n).unwrap();
        assert_eq!(z.subs(Var::U, &LaurentPoly::one()).unwrap(), classical_dwpf(n).unwrap());
    }
}

#[test]
fn interpolation_data_agree() {
    for (k, n) in [(Kind::DwHybrid, 1), (Kind::DwHybrid, 2), (Kind::Os, 4), (Kind::U, 2)] {
        assert!(uniqueness_check(k, n).unwrap().concluded);
    }
}
