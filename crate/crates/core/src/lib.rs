//! Exact computations with central reductions of the elliptic Hall algebra,
//! its Fock representation on two copies of symmetric functions, and its
//! action on cocenters of cyclotomic Hecke algebras.

pub mod coeff;
pub mod eha;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod lattice;
pub mod par;
pub mod sym;
pub mod verify;

pub use coeff::{qint, RatFunc};
pub use error::{Error, Result};
