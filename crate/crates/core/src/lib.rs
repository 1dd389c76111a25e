//! Marked bumpless pipedreams (MBPDs), reverse compatible pairs (RCPs), and
//! β-Grothendieck polynomials.
//!
//! The centerpiece is a pair of mutually inverse, weight- and
//! permutation-preserving bijections [`phi`] and [`psi`] between `MBPD(n)`
//! and `RCP(n)`, built from local two-row moves (see [`moves`]). Grothendieck
//! polynomials can be computed four independent ways (see [`groth`]), which
//! lets the bijection be cross-checked against the divided-difference
//! recursion by exhaustive enumeration at small `n`.
//!
//! Coordinates are 1-based and matrix-style: `(row, col)` with row 1 on top.

pub mod asm;
pub mod bijection;
pub mod biword;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod groth;
pub mod moves;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod tile;
pub mod verify;

pub use bijection::{phi, psi, row_pop, row_push, PopResult};
pub use biword::{Biletter, Biword, Rcp};
pub use error::{Error, Result};
pub use grid::{Mbpd, WeightVec};
pub use perm::Permutation;
pub use pipedream::PipeDream;
pub use poly::Poly;
pub use tile::Tile;
