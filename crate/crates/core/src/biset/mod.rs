//! Bisets: explicit finite bisets (the brute-force layer) and symbolic
//! elements of Burnside groups `B_k(H, G)`.

mod burnside;
mod concrete;
mod marks;
pub mod standard;

pub use burnside::BurnsideElement;
pub use concrete::ConcreteBiset;
pub use marks::{burnside_units, from_marks, marks, table_of_marks};
pub use standard::{
    contraction, deflate, identity_element, ind, inf, iso, left_arrow, one_point, res,
    right_arrow,
};
