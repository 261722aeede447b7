//! Exact complex and quaternionic arithmetic over the rationals, the standard
//! inner products on `F^n`, and the coordinate maps between `H^n`, `C^{2n}`
//! and `R^{4n}`.

mod identities;
mod maps;
mod scalar;
mod vector;

pub use identities::{
    lemma1_i, lemma1_ii, lemma1_iii, run_identity_trials, thm2_i, thm2_ii, thm2_iii, Identity,
    IdentityReport,
};
pub use maps::{c_h, c_h_inv, r_c, r_c_inv, r_h, r_h_inv};
pub use scalar::{random_rational, rational, Complex, Quaternion, Rational, Scalar};
pub use vector::{alpha, inner, FVector};
