//! Executable forms of the composition identities between the coordinate maps
//! and right multiplications, and of the identities expressing the complex
//! and quaternionic inner products through real and complex ones.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::maps::{c_h, r_c, r_h};
use super::scalar::{Complex, Quaternion, Scalar};
use super::vector::{alpha, inner, FVector};
use crate::error::Result;

/// `c_H ∘ α_s = α_s ∘ c_H` for `s ∈ C`.
pub fn lemma1_i(s: &Complex, x: &FVector<Quaternion>) -> bool {
    c_h(&alpha(x, &Quaternion::from(s.clone()))) == alpha(&c_h(x), s)
}

/// `r_C ∘ α_s ∘ c_H = r_H ∘ α_s` for `s ∈ C`.
pub fn lemma1_ii(s: &Complex, x: &FVector<Quaternion>) -> bool {
    r_c(&alpha(&c_h(x), s)) == r_h(&alpha(x, &Quaternion::from(s.clone())))
}

/// `r_C ∘ α_s ∘ c_H ∘ α_t = r_H ∘ α_{ts}` for `s ∈ C`, `t ∈ H`.
pub fn lemma1_iii(s: &Complex, t: &Quaternion, x: &FVector<Quaternion>) -> bool {
    let ts = t.clone() * Quaternion::from(s.clone());
    r_c(&alpha(&c_h(&alpha(x, t)), s)) == r_h(&alpha(x, &ts))
}

/// `<x|y>_C = <r x|r y>_R - <r x|r(y·i)>_R · i`.
pub fn thm2_i(x: &FVector<Complex>, y: &FVector<Complex>) -> Result<bool> {
    let lhs = inner(x, y)?;
    let (rx, ry) = (r_c(x), r_c(y));
    let re = inner(&rx, &ry)?;
    let im = inner(&rx, &r_c(&alpha(y, &Complex::i())))?;
    let rhs = Complex::from_rational(re) - Complex::from_rational(im) * Complex::i();
    Ok(lhs == rhs)
}

/// `<v|w>_H = <c v|c w>_C - <c v|c(w·j)>_C · j`.
pub fn thm2_ii(v: &FVector<Quaternion>, w: &FVector<Quaternion>) -> Result<bool> {
    let lhs = inner(v, w)?;
    let (cv, cw) = (c_h(v), c_h(w));
    let first = Quaternion::from(inner(&cv, &cw)?);
    let second = Quaternion::from(inner(&cv, &c_h(&alpha(w, &Quaternion::j())))?);
    Ok(lhs == first - second * Quaternion::j())
}

/// `<v|w>_H = <r v|r w>_R - sum over t in {i, j, k} of <r v|r(w·t)>_R · t`.
pub fn thm2_iii(v: &FVector<Quaternion>, w: &FVector<Quaternion>) -> Result<bool> {
    let lhs = inner(v, w)?;
    let rv = r_h(v);
    let mut rhs = Quaternion::from_rational(inner(&rv, &r_h(w))?);
    for unit in [Quaternion::i(), Quaternion::j(), Quaternion::k()] {
        let coef = inner(&rv, &r_h(&alpha(w, &unit)))?;
        rhs = rhs - Quaternion::from_rational(coef) * unit;
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    Lemma1I,
    Lemma1Ii,
    Lemma1Iii,
    Thm2I,
    Thm2Ii,
    Thm2Iii,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Lemma1I,
        Identity::Lemma1Ii,
        Identity::Lemma1Iii,
        Identity::Thm2I,
        Identity::Thm2Ii,
        Identity::Thm2Iii,
    ];

    fn stream(self) -> u64 {
        self as u64
    }

    fn trial<R: Rng>(self, rng: &mut R, n: usize) -> Result<bool> {
        Ok(match self {
            Identity::Lemma1I => lemma1_i(&Complex::random(rng), &FVector::random(rng, n)?),
            Identity::Lemma1Ii => lemma1_ii(&Complex::random(rng), &FVector::random(rng, n)?),
            Identity::Lemma1Iii => lemma1_iii(
                &Complex::random(rng),
                &Quaternion::random(rng),
                &FVector::random(rng, n)?,
            ),
            Identity::Thm2I => thm2_i(&FVector::random(rng, n)?, &FVector::random(rng, n)?)?,
            Identity::Thm2Ii => thm2_ii(&FVector::random(rng, n)?, &FVector::random(rng, n)?)?,
            Identity::Thm2Iii => thm2_iii(&FVector::random(rng, n)?, &FVector::random(rng, n)?)?,
        })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Lemma1I => "lemma1_i",
            Identity::Lemma1Ii => "lemma1_ii",
            Identity::Lemma1Iii => "lemma1_iii",
            Identity::Thm2I => "thm2_i",
            Identity::Thm2Ii => "thm2_ii",
            Identity::Thm2Iii => "thm2_iii",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub trials: usize,
    /// Index of the first failing trial, if any.
    pub first_failure: Option<usize>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Seeded random exact trials; trial `t` uses dimension `dims[t % dims.len()]`.
///
/// Each identity draws from its own ChaCha stream so reports are reproducible
/// from `seed` regardless of which identities are run.
pub fn run_identity_trials(
    identity: Identity,
    trials: usize,
    seed: u64,
    dims: &[usize],
) -> Result<IdentityReport> {
    if dims.is_empty() {
        return Err(crate::error::Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(identity.stream());
    let mut first_failure = None;
    for t in 0..trials {
        if !identity.trial(&mut rng, dims[t % dims.len()])? && first_failure.is_none() {
            first_failure = Some(t);
        }
    }
    Ok(IdentityReport {
        identity,
        trials,
        first_failure,
    })
}
