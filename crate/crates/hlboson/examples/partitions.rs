//! Enumerating partitions and the coefficients attached to them.

use hlboson::partitions::{b_coeff, enumerate, interlacing_below, v_coeff, Partition};

fn main() {
    let all = enumerate(3, 3, false);
    println!("{} partitions of length 3 and weight <= 3:", all.len());
    for l in &all {
        println!("  {l:<9} b = {:<30} v = {}", b_coeff(l).to_string(), v_coeff(l));
    }

    let even = enumerate(4, 6, true);
    println!("even multiplicities, length 4, weight <= 6: {}", even.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));

    let l: Partition = "[3,1,0]".parse().unwrap();
    let below: Vec<String> = interlacing_below(&l, 2).iter().map(|m| m.to_string()).collect();
    println!("mu interlacing {l}: {}", below.join(" "));
    println!("conjugate of {l}: {:?}", l.conjugate());
}
