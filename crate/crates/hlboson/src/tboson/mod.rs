//! The t-boson lattice: tiles, row and double-row transfer matrices,
//! structural relations and the even-state exchange lemma.

pub mod even_state;
pub mod ops;
pub mod structural;
pub mod tiles;
pub mod transfer;

pub use tiles::{Tile, TileKind, HOLE, PARTICLE};
pub use transfer::{
    hl_p_lattice, hl_q_lattice, k_lattice, l_lattice, transfer_element, BosonState, BoundaryParams,
    LatticeError, RowKind,
};
pub use even_state::{check_even_state_exchange, even_coefficient, EvenStateError};
pub use structural::{check_structural, Relation, StructuralError, StructuralReport};
