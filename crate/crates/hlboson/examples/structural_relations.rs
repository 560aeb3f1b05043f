//! Yang-Baxter, unitarity, RLL, reflection, fish and vanishing checks.

use hlboson::tboson::structural::{fish_scalar, unitarity_scalar};
use hlboson::tboson::{check_structural, Relation};

fn main() {
    for rel in Relation::ALL {
        match check_structural(rel) {
            Ok(r) => println!("{:<22} holds ({} components)", r.relation, r.components),
            Err(e) => println!("{:<22} FAILS: {e}", rel.name()),
        }
    }
    println!("unitarity scalar: {}", unitarity_scalar());
    println!("fish scalar:      {}", fish_scalar());
}
