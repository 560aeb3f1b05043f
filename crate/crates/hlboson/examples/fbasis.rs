//! The F basis: factorization, twisted column operators, reconstructions.

use hlboson::fbasis::{fbasis_check, k_from_columns, p_from_columns, twisted_column};
use hlboson::partitions::Partition;
use hlboson::tboson::BoundaryParams;

fn main() {
    for n in 1..=3 {
        let checks = fbasis_check(n).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        println!("{n} legs: {} checks, failed {failed:?}", checks.len());
    }

    let s = twisted_column(1, 2).unwrap();
    println!("twisted column m=1 on two legs, row 0:");
    for j in 0..s.dim() {
        println!("  [{j}] {}", s.get(0, j));
    }

    let l: Partition = "[2,1,1]".parse().unwrap();
    println!("x1 x2 x3 P_{l} from columns = {}", p_from_columns(&l).unwrap());
    let l: Partition = "[1,0]".parse().unwrap();
    println!("K_{l} from columns (with prefactor) = {}", k_from_columns(&l, &BoundaryParams::formal()).unwrap());
}
