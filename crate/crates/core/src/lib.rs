//! Exact computation of triply graded Khovanov-Rozansky link homology.
//!
//! The crate is organized bottom-up:
//!
//! - [`ring`]: sparse multivariate polynomials over exact rationals, with
//!   tri-graded variables and symmetric-function helpers.
//! - [`gradedlinalg`]: free graded modules, homogeneous matrices, chain
//!   complexes, Gaussian simplification and slice-wise homology.
//! - [`soergel`]: Soergel bimodules, Rouquier complexes and Koszul objects.
//! - [`aalg`]: the symbolic dg algebra carrying the tautological generators,
//!   its coproducts, twists and stabilization homomorphisms.
//! - [`action`]: realization of the twisted algebra action on complexes.
//! - [`hochschild`]: Hochschild homology, HHH tables, HOMFLY-PT.
//! - [`yify`]: y-ification, F_k operators, hard Lefschetz checks.
//! - [`basicobj`]: normal forms and closed-form models of Koszul products.

pub mod aalg;
pub mod action;
pub mod basicobj;
pub mod error;
pub mod gradedlinalg;
pub mod hochschild;
pub mod ring;
pub mod soergel;
pub mod yify;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
