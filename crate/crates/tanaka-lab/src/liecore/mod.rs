//! Lie algebras by structure constants, Heisenberg extensions, and the
//! standard, modified and Tanaka prolongations of symbol algebras.

mod algebra;
mod linmap;
mod prolong;

pub use algebra::{build_flat_algebra, heisenberg_extend, standard_form, GradedLieAlg, LieAlg, LieError};
pub use linmap::{csp_algebra, csp_scalar, LinMapSpace};
pub use prolong::{
    default_anchor, modified_prolongation, modified_prolongation_anchored, modified_tower,
    prolongations_agree, standard_prolongation, tanaka_prolongation, validate_csp_subalgebra,
    AgreementReport, DegreeAgreement, ProlongError, TanakaLevel, TanakaProlongation,
};
