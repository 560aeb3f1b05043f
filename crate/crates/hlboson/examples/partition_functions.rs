//! Six-vertex partition functions: enumeration, closed forms, properties.
//!
//! `cargo run --release --example partition_functions -- UU 2`

use hlboson::sixv::{closed_form, property_report, renormalized_pf, ClosedKind, Kind};

fn main() {
    let mut args = std::env::args().skip(1);
    let kind: Kind = args.next().unwrap_or_else(|| "DW".into()).parse().expect("DW, OS, U, UU or UO");
    let n: usize = args.next().map(|s| s.parse().expect("size")).unwrap_or(2);

    let z = renormalized_pf(kind, n).unwrap();
    println!("Z_{kind}({n}) = {z}");

    let rep = property_report(kind, n).unwrap();
    for r in &rep.results {
        println!("  property {} {}: {}", r.index, r.name, if r.passed { "pass" } else { "FAIL" });
    }

    for ck in ClosedKind::ALL.into_iter().filter(|c| c.domain() == kind) {
        match closed_form(ck, n) {
            Ok(c) => {
                let agrees = ck.specialize(&z).map(|s| s == c).unwrap_or(false);
                println!("  closed form {ck}: agrees = {agrees}");
            }
            Err(e) => println!("  closed form {ck}: {e}"),
        }
    }
}
