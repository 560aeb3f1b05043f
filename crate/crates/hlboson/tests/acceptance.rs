//! Acceptance gate: seven criteria, one line each, exact equality throughout.
//! Runs without the libtest harness so the lines are always printed.

use hlboson::algebra::{LaurentPoly, RatFn, Var};
use hlboson::fbasis::{self, a_vars};
use hlboson::hl_an::{hl_p_branching, hl_p_group_sum, hl_q_branching};
use hlboson::hl_bcn::{k_branching, k_hyperoctahedral, l_from_k};
use hlboson::identities::{classical_limit, verify};
use hlboson::partitions::{b_coeff, enumerate, Partition};
use hlboson::sixv::{closed_form, property_report, renormalized_pf, ClosedKind, Kind};
use hlboson::tboson::even_state::states_up_to;
use hlboson::tboson::structural::{fish_scalar, unitarity_scalar};
use hlboson::tboson::transfer::k_prefactor;
use hlboson::tboson::{
    check_even_state_exchange, check_structural, hl_p_lattice, hl_q_lattice, k_lattice, l_lattice, BoundaryParams,
    Relation,
};
use std::time::Instant;

type Outcome = Result<String, String>;

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn ratio(num: &str, den: &str) -> RatFn {
    RatFn::new(lp(num), &lp(den)).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn subs_all(p: &LaurentPoly, vars: impl IntoIterator<Item = Var>, val: &LaurentPoly) -> LaurentPoly {
    vars.into_iter().fold(p.clone(), |a, v| a.subs(v, val).unwrap())
}

fn routes_a() -> Outcome {
    let ls = enumerate(3, 5, false);
    // 56 weak compositions of weight <= 5 into three parts; the partitions
    // are the non-increasing ones
    let comps: Vec<[u32; 3]> = (0..=5u32)
        .flat_map(|a| (0..=5 - a).flat_map(move |b| (0..=5 - a - b).map(move |c| [a, b, c])))
        .collect();
    ensure(comps.len() == 56, || format!("{} compositions", comps.len()))?;
    let sorted = comps.iter().filter(|c| c[0] >= c[1] && c[1] >= c[2]).count();
    ensure(ls.len() == sorted, || format!("{} partitions, expected {sorted}", ls.len()))?;
    for l in &ls {
        let p = hl_p_branching(l, 3).map_err(err)?;
        ensure(hl_p_group_sum(l, 3, false).map_err(err)? == p, || format!("coset sum {l}"))?;
        ensure(hl_p_group_sum(l, 3, true).map_err(err)? == p, || format!("full-group sum {l}"))?;
        ensure(hl_p_lattice(l, 3).map_err(err)? == p, || format!("lattice {l}"))?;
        let q = &b_coeff(l) * &p;
        ensure(hl_q_branching(l, 3).map_err(err)? == q, || format!("Q branching {l}"))?;
        ensure(hl_q_lattice(l, 3, false).map_err(err)? == q, || format!("Q lattice {l}"))?;
    }
    Ok(format!("{} partitions from {} compositions", ls.len(), comps.len()))
}

fn routes_bc() -> Outcome {
    let zero = BoundaryParams::zero();
    let ls = enumerate(2, 3, false);
    for l in &ls {
        let k = k_branching(l, 2).map_err(err)?;
        ensure(k_hyperoctahedral(l, 2, &zero, false).map_err(err)? == k, || format!("hyperoctahedral {l}"))?;
        ensure(k_lattice(l, 2, &zero).map_err(err)? == k, || format!("lattice {l}"))?;
        ensure(l_lattice(l, 2, &zero).map_err(err)? == l_from_k(l, &k), || format!("L {l}"))?;
    }
    let empty: Partition = "[0]".parse().unwrap();
    let k0 = k_hyperoctahedral(&empty, 1, &BoundaryParams::formal(), false).map_err(err)?;
    ensure(k0 == lp("1 - g*d"), || format!("K_0 = {k0}"))?;
    Ok(format!("{} partitions, K_0 = {k0}", ls.len()))
}

fn structural() -> Outcome {
    let mut total = 0;
    for rel in Relation::ALL {
        total += check_structural(rel).map_err(err)?.components;
    }
    let uni = ratio("(x2 - t*x1)*(x1 - t*x2)", "(x2 - x1)*(x1 - x2)");
    ensure(unitarity_scalar() == uni, || "unitarity scalar".into())?;
    let fish = ratio("x1^2 - t", "1 - x1^2");
    ensure(fish_scalar() == fish, || "fish scalar".into())?;
    Ok(format!("{} relations, {total} components", Relation::ALL.len()))
}

fn pf(kind: Kind, n: usize) -> Result<LaurentPoly, String> {
    renormalized_pf(kind, n).map_err(err)
}

fn partition_functions() -> Outcome {
    for (ck, sizes) in [(ClosedKind::Dw, &[1, 2, 3][..]), (ClosedKind::Os, &[2, 4]), (ClosedKind::U, &[1, 2])] {
        for &n in sizes {
            let want = pf(ck.domain(), n)?;
            ensure(closed_form(ck, n).map_err(err)? == want, || format!("{ck} {n}"))?;
        }
    }
    let suites = [(Kind::DwHybrid, 3), (Kind::Os, 4), (Kind::U, 2), (Kind::Uu, 2), (Kind::Uo, 2), (Kind::Uo, 4)];
    for (kind, n) in suites {
        let rep = property_report(kind, n).map_err(err)?;
        ensure(rep.all_passed(), || format!("{kind} {n} suite"))?;
    }
    for n in 1..=3usize {
        let xs = (1..=n).map(Var::x);
        let want = (1..=n as u32).fold(LaurentPoly::one(), |a, i| &a * &lp(&format!("1 - u*t^{i}")));
        ensure(subs_all(&pf(Kind::DwHybrid, n)?, xs, &LaurentPoly::zero()) == want, || format!("DW {n} at x = 0"))?;
    }
    for (kind, n, want) in [
        (Kind::Os, 2, "1 - u*t + (u - 1)*t*x1*x2"),
        (Kind::U, 1, "1 - t"),
        (Kind::Uu, 1, "(1 - t)*(1 - z^2)"),
        (Kind::Uo, 2, "(1 - t)*(1 - t*z)*(1 + z)"),
    ] {
        ensure(pf(kind, n)? == lp(want), || format!("{kind}({n})"))?;
    }
    for n in 1..=2 {
        let z = pf(Kind::Uu, n)?;
        for v in [1, -1] {
            ensure(z.subs(Var::Z, &LaurentPoly::int(v)).unwrap().is_zero(), || format!("UU {n} at z = {v}"))?;
        }
    }
    for (ck, n) in [
        (ClosedKind::UuHalf, 1),
        (ClosedKind::UuHalf, 2),
        (ClosedKind::UoHalf, 2),
        (ClosedKind::UuT0, 1),
        (ClosedKind::UuT0, 2),
        (ClosedKind::UoT0, 2),
    ] {
        let want = ck.specialize(&pf(ck.domain(), n)?).map_err(err)?;
        ensure(closed_form(ck, n).map_err(err)? == want, || format!("{ck} {n}"))?;
    }
    Ok("closed forms, suites, special values and points".into())
}

fn f_basis() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for c in fbasis::fbasis_check(n).map_err(err)? {
            ensure(c.passed, || format!("n={n}: {}", c.name))?;
            count += 1;
        }
    }
    for n in 1..=2 {
        for m in 0..=2 * n {
            fbasis::twisted_bold_column(m, n).map_err(err)?;
        }
        fbasis::twisted_b_column(&LaurentPoly::var(Var::G), n).map_err(err)?;
        fbasis::twisted_b_column(&LaurentPoly::var(Var::D), n).map_err(err)?;
        fbasis::twisted_boundary(n).map_err(err)?;
    }
    for l in enumerate(3, 5, false) {
        let px = (1..=3).fold(LaurentPoly::one(), |a, i| &a * &LaurentPoly::x(i));
        let want = &px * &hl_p_branching(&l, 3).map_err(err)?;
        ensure(fbasis::p_from_columns(&l).map_err(err)? == want, || format!("P {l}"))?;
    }
    let bp = BoundaryParams::formal();
    let pre = k_prefactor(&a_vars(2));
    for l in enumerate(2, 3, false) {
        let want = &pre * &k_hyperoctahedral(&l, 2, &bp, false).map_err(err)?;
        ensure(fbasis::k_from_columns(&l, &bp).map_err(err)? == want, || format!("K {l}"))?;
    }
    Ok(format!("{count} operator checks, reconstructions"))
}

fn identities() -> Outcome {
    let runs = [(1, 1, 8), (1, 2, 4), (1, 3, 4), (2, 2, 4), (2, 4, 3), (3, 1, 4), (3, 2, 3), (4, 1, 3), (5, 2, 3)];
    for (id, n, order) in runs {
        let r = verify(id, n, order).map_err(err)?;
        ensure(r.verdict, || format!("identity {id} n={n} order={order}: {:?}", r.mismatches))?;
    }
    for n in 1..=3 {
        ensure(classical_limit(n).map_err(err)?, || format!("u = 1 at n={n}"))?;
    }
    Ok(format!("{} runs", runs.len()))
}

fn even_state() -> Outcome {
    let mut count = 0;
    for (lo, shifted) in [(0, false), (-2, true)] {
        for mu in states_up_to(4, lo, 3, shifted) {
            check_even_state_exchange(&mu).map_err(|e| format!("{:?}: {e}", mu.occ))?;
            count += 1;
        }
    }
    Ok(format!("{count} states"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("A_n route agreement", routes_a),
        ("BC_n route agreement", routes_bc),
        ("structural identities", structural),
        ("partition functions", partition_functions),
        ("F basis", f_basis),
        ("Cauchy and Littlewood identities", identities),
        ("even-state lemma", even_state),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {e} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
