//! Polynomials over ℚ with a Poisson structure, and vanishing ideals of
//! rational normal curves and their tangential and secant varieties.

mod ideal;
mod mpoly;
mod poisson;

pub use ideal::{
    combinations, hankel_minors, poly_det, vanishing_ideal_piece, verify_vanishing, veronese_jet,
    GradedPiece, IdealError, JetFamily, Variety,
};
pub use mpoly::{MPoly, Monomial, PolyError};
pub use poisson::{pair_sign, poisson, z_element, POISSON_SIGN};
