//! Intertwining operators of type `(K_{1,2}, ·)`: the primary-field recursion and its
//! descent to Kac quotients, the Fock-module intertwiner, and the four-point function
//! checks with the rigidity constants.

mod bpz;
mod constants;
mod descent;
mod fockop;
mod recursion;

pub use bpz::{hypergeometric_series, verify_bpz_hypergeometric};
pub use constants::{gamma_half, rigidity_constants, to_decimal, within, RigidityConstants};
pub use descent::{
    descends_to_kac_quotient, descent_expected, singular_vector_chain, PrimaryFieldOnDescendants,
};
pub use fockop::{fock_intertwiner_block, kac_image_graded_dims, FockIntertwinerBlock};
pub use recursion::{
    allowed_targets, allowed_targets_for_weight, build_primary_coefficients,
    verify_primary_condition, AllowedTarget, BranchChoice, PrimaryFieldCoefficients,
};
