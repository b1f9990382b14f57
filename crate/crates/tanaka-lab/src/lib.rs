//! Exact computer algebra for rank-3 distributions with six-dimensional square.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactla`]: rationals, dense matrices and canonical subspaces over ℚ.
//! - [`poly`]: multivariate polynomials, the Poisson bracket, and vanishing
//!   ideals of rational normal curves and their tangential and secant varieties.
//! - [`liecore`]: Lie algebras by structure constants, Heisenberg extensions,
//!   modified and Tanaka prolongations.
//! - [`flags`]: the symplectic model of the flat curve, the symbol algebras
//!   `s_{k,l}`, the Poisson model of `G_{k,l}`, and the B-matrix identities.
//! - [`dist`]: polynomial vector fields, growth vectors and left-invariant
//!   realizations of the flat models `m_{k,l}`.
//! - [`abnormal`]: quasi-impulses, the characteristic line field, the flag of
//!   an abnormal extremal at a covector and Young-diagram classification.
//! - [`cli`]: reports, JSON encoding and the acceptance driver behind the
//!   `tanaka-lab` binary.

pub mod exactla;
pub mod poly;
pub mod liecore;
pub mod flags;
pub mod dist;
pub mod abnormal;
pub mod cli;
