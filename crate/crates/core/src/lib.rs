//! Exact eigenfunctions of Star graphs on the symmetric group.
//!
//! The crate is organized bottom-up:
//!
//! * [`perm`]: permutations in one-line notation.
//! * [`graph`]: the Star graph `S_n` (pivot position 1) and its twin `S_n^JM`
//!   (pivot position n), exact eigenfunction checks and the floating spectrum.
//! * [`pi`]: the `{-1, 0, 1}`-valued PI-eigenfunctions and the basis of the
//!   `n - 2` eigenspace.
//! * [`specht`]: tableaux, tabloids, polytabloids, the Jucys-Murphy operator
//!   and the embedding of the permutation module into the group algebra.
//! * [`decomposition`]: polytabloid eigenfunctions written as sums of
//!   PI-eigenfunctions.
//! * [`reconstruction`]: the second-neighbourhood matrix, its determinant and
//!   reconstruction of `n - 2` eigenfunctions.
//! * [`io`] and [`checks`]: serialization and the verification suite.

pub mod checks;
pub mod config;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod perm;
pub mod pi;
pub mod rational;
pub mod reconstruction;
pub mod specht;

pub use config::Ceilings;
pub use error::{Error, Result};
pub use graph::{GraphVariant, SparseFunction, StarKind, VertexFunction};
pub use perm::Permutation;
pub use pi::PiSpec;
pub use rational::Rational;
