//! Prime coprime graphs of finite groups.
//!
//! Two elements `x`, `y` of a finite group are joined when `gcd(o(x), o(y))`
//! is 1 or a prime. This crate builds these graphs from element-order
//! profiles, decides their structural properties exactly, and compares the
//! closed-form signless Laplacian spectra of the cyclic and dihedral families
//! with a numerical Jacobi eigensolver.

pub mod cli;
pub mod error;
pub mod graph;
pub mod groups;
pub mod numtheory;
pub mod properties;
pub mod spectra;
pub mod verify;

pub use error::{Result, ThetaError};
pub use graph::{PrimeOrderSet, ThetaGraph};
pub use groups::{GroupFamily, GroupSpec, OrderProfile};
