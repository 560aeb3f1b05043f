//! Hall-Littlewood polynomials of types A and BC from t-boson lattice models.

pub mod algebra;
pub mod partitions;
pub mod hl_an;
pub mod perm;
pub mod tboson;
pub mod hl_bcn;
pub mod sixv;
pub mod fbasis;
pub mod identities;
