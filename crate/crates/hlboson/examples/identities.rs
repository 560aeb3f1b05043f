//! Graded verification of the Cauchy and Littlewood identities.
//!
//! `HL_WORKERS=4 cargo run --release --example identities -- 1 2 4`

use hlboson::identities::verify;

fn main() {
    let a: Vec<String> = std::env::args().skip(1).collect();
    let get = |i: usize, d: u32| a.get(i).map(|s| s.parse().expect("integer")).unwrap_or(d);
    let (id, n, order) = (get(0, 1) as u8, get(1, 2) as usize, get(2, 3));

    let r = verify(id, n, order).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    if !r.verdict {
        std::process::exit(1);
    }
}
