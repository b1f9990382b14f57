//! The flat curve of symplectic flags and its symmetry algebras.
//!
//! [`build_model`] fixes V = V_e ⊕ V_f with its form and filtration. The
//! symbols 𝔰_{k,l} are built explicitly ([`build_symbol`]) and independently as
//! the stabilizer of the flat curve ([`flat_curve_symmetries`]). The Poisson
//! model [`build_poisson_g`] gives a second route to dim 𝔊_{k,l}.

mod bmatrix;
mod model;
mod poisson_model;
mod rank;
mod stabilizer;
mod symbol;

pub use bmatrix::{bmatrix_suite, bmatrix_sweep, c_kl, d_ksj, m_matrix, BMatrix, BSuiteReport};
pub use model::{
    build_model, distinguished_frame, exp_shift, is_quasisymplectic, FlagsError, QuasiVerdict,
    SymplecticModelV, Violation,
};
pub use poisson_model::{
    build_poisson_g, compare_degree_zero, poisson_h, poisson_x, poisson_y, DegreeZeroComparison,
    PoissonModel,
};
pub use rank::{rank_filter, MacaulayCertificate, RankFilterReport, RankVerdict};
pub use stabilizer::{flat_curve_symmetries, SymmetryReport};
pub use symbol::{
    build_symbol, build_symbol_nonrect, build_symbol_rect, matrix_lie_algebra, p_dim_formula,
    p_quadrics, quadric_matrix, quadric_operator, symbol_parts, symbol_parts_nonrect,
    symbol_parts_rect, SymbolParts,
};
