//! Symplectification of a rank-3 distribution: quasi-impulses, the
//! characteristic line field on D^⊥, the flag of an abnormal extremal at a
//! covector and its Young-diagram type.

mod classify;
mod flag;
mod impulse;

pub use classify::{characteristic_subdistribution, classify, sample_covectors, Classification, SAMPLE_HEIGHT};
pub use flag::{annihilator_basis, default_levels, flag_at, CotangentPoint, FlagReport, YoungType};
pub use impulse::{
    adjugate_frame, canonical_form, characteristic_field, choose_rows, hamiltonian_field, impulse, lift_function,
    quasi_impulses, vanishes_on_annihilator, AbnormalError, AdjugateFrame, QuasiImpulses,
};
