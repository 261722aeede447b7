//! Linear vector fields on spheres in real coordinates: construction, lifting
//! between R, C and H, and exact certification.

mod certify;
mod construct;
mod family;
mod gram_schmidt;
mod matrix;
mod sphere;

pub use certify::{
    gram_matrix, hurwitz_radon_check, is_vector_field, orthogonal_design_check,
    sampled_independence, tangency, theorem10_check, CertificateLevel, FamilyReport,
    FieldCertificate, IndependenceOutcome, MemberCheck, Target, Witness,
};
pub use construct::{
    example4, lift, lift_h_to_r_with, real_expansion, structure_matrix, LiftDirection, Model, Unit,
};
pub use family::{FieldFamily, LinearField};
pub use gram_schmidt::{gram_schmidt, Orthogonalized};
pub use matrix::RatMatrix;
pub use sphere::{
    axis_points, default_points, random_points, sample_points, stereographic_point, SpherePoint,
};
