//! K and L polynomials of type BC with boundary parameters.

use hlboson::algebra::{LaurentPoly, Var};
use hlboson::hl_bcn::{k_branching, k_hyperoctahedral, l_from_k};
use hlboson::partitions::Partition;
use hlboson::tboson::{k_lattice, l_lattice, BoundaryParams};

fn main() {
    let l: Partition = "[1,0]".parse().unwrap();
    let zero = BoundaryParams::zero();
    let k = k_branching(&l, 2).unwrap();
    println!("K_{l} (γ = δ = 0) = {k}");
    println!("  signed-permutation sum agrees: {}", k_hyperoctahedral(&l, 2, &zero, false).unwrap() == k);
    println!("  double-row lattice agrees:     {}", k_lattice(&l, 2, &zero).unwrap() == k);
    println!("L_{l} = {}", l_from_k(&l, &k));

    let formal = BoundaryParams::formal();
    let kf = k_lattice(&l, 2, &formal).unwrap();
    println!("K_{l}(γ, δ) = {kf}");
    println!("L_{l}(γ, δ) = {}", l_lattice(&l, 2, &formal).unwrap());

    let empty: Partition = "[0]".parse().unwrap();
    println!("K_[0] at one variable = {}", k_hyperoctahedral(&empty, 1, &formal, false).unwrap());

    let at_half = kf.subs(Var::G, &"1/2".parse::<LaurentPoly>().unwrap()).unwrap();
    println!("K_{l}(γ = 1/2) = {at_half}");
}
