//! Exact biset calculus over small finite groups.
//!
//! The crate is layered bottom-up:
//!
//! * [`group`]: finite groups as Cayley tables, subgroup classes, double
//!   cosets, quotients and the standard homomorphisms;
//! * [`biset`]: concrete bisets (the brute-force layer) and symbolic Burnside
//!   elements with Mackey composition, opposites, external products and marks;
//! * [`green`]: Green biset functors (Burnside, matrix and opposite
//!   instances) with cross and internal products;
//! * [`category`]: the associated category of a Green functor, the tilde
//!   embedding, double-algebra maps and the opposite-category isomorphism;
//! * [`star`]: anti-involutions, the bullet duality, real/imaginary parts,
//!   orthogonal units and automorphisms;
//! * [`verify`]: window-quantified property suites with deterministic reports.

pub mod error;
pub mod biset;
pub mod category;
pub mod green;
pub mod group;
pub mod linalg;
pub mod scalar;
pub mod star;
pub mod verify;

pub use error::{Error, Result};
