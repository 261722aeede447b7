//! Exact computation of the maximal number of linearly independent real,
//! complex and quaternionic vector fields on spheres, together with exact
//! constructions and certificates for linear vector fields.
//!
//! * [`exactmath`]: primes, valuations, factorization.
//! * [`james`]: prime valuations of the James numbers `c_m^F`.
//! * [`rho`]: `rho^F(F^n)` by closed form, direct formula and oracle.
//! * [`algebra`]: exact C and H arithmetic, inner products, coordinate maps.
//! * [`fields`]: linear fields, lifts, Hurwitz–Radon and Gram certificates.
//! * [`verify`]: range sweeps tying everything together.

pub mod algebra;
pub mod error;
pub mod exactmath;
pub mod fields;
pub mod james;
pub mod rho;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{factorize, factorize_int, FactoredInteger};
pub use james::{profile, FieldTag, JamesProfile};
pub use rho::{rho_oracle, rho_real_adams, rho_theorem8, Method, RhoResult};
