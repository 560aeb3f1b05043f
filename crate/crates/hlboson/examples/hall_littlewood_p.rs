//! P and Q polynomials of type A by every available route.

use hlboson::hl_an::{hl_p, hl_q_branching, Route};
use hlboson::partitions::Partition;
use hlboson::tboson::{hl_p_lattice, hl_q_lattice};

fn main() {
    let l: Partition = std::env::args().nth(1).unwrap_or_else(|| "[2,1,0]".into()).parse().expect("partition like [2,1,0]");
    let n = l.len();
    let p = hl_p(&l, n, Route::Branching).unwrap();
    println!("P_{l} = {p}");
    for (name, route) in [("sum over S_n", Route::Sum), ("lattice", Route::Lattice)] {
        println!("  {name:<13} agrees: {}", hl_p(&l, n, route).unwrap() == p);
    }
    println!("  column transfer agrees: {}", hl_p_lattice(&l, n).unwrap() == p);
    let q = hl_q_branching(&l, n).unwrap();
    println!("Q_{l} = {q}");
    println!("  lattice agrees: {}", hl_q_lattice(&l, n, false).unwrap() == q);
}
