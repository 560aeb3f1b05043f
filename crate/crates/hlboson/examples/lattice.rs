//! Tiles and single-row transfer matrices of the t-boson lattice.

use hlboson::algebra::LaurentPoly;
use hlboson::partitions::Partition;
use hlboson::tboson::transfer::skew_row_element;
use hlboson::tboson::{transfer_element, BosonState, RowKind, Tile, HOLE, PARTICLE};

fn main() {
    let x = LaurentPoly::x(1);
    for (name, tile) in [("dark", Tile::dark(&x)), ("light", Tile::light(&x))] {
        println!("{name} tile, occupation m = 2:");
        for left in [HOLE, PARTICLE] {
            for right in [HOLE, PARTICLE] {
                if let Some((out, w)) = tile.weight(left, right, 2) {
                    println!("  left {left} right {right} -> out {out}, weight {w}");
                }
            }
        }
    }

    let inp = BosonState { occ: vec![1, 0, 1], shifted0: false };
    let out = BosonState { occ: vec![1, 1, 1], shifted0: false };
    println!("<1,1,1| T+(x1) |1,0,1> = {}", transfer_element(RowKind::TPlus, &x, &out, &inp));

    let l: Partition = "[2,1]".parse().unwrap();
    let m: Partition = "[1,0]".parse().unwrap();
    println!("one-row skew <{l}|T(x1)|{m}> = {}", skew_row_element(true, &x, &l, &m));
}
