//! Certificates for linear vector fields on spheres.
//!
//! A linear map `x ↦ A·x` is a vector field on `S(R^N)` exactly when `A` is
//! skew-symmetric (tangency) and nonsingular (no zeros on the sphere).
//! Independence of a family is certified at two strengths: the Hurwitz–Radon
//! relations prove orthonormality at every point, while exact Gram
//! determinants at sample points only give a necessary condition.

use std::fmt;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::construct::{lift, real_expansion, LiftDirection};
use super::family::{FieldFamily, LinearField};
use super::matrix::RatMatrix;
use super::sphere::SpherePoint;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::james::FieldTag;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCertificate {
    pub skew: bool,
    pub nonsingular: bool,
}

impl FieldCertificate {
    pub fn is_field(&self) -> bool {
        self.skew && self.nonsingular
    }
}

impl fmt::Display for FieldCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.skew, self.nonsingular) {
            (true, true) => f.write_str("vector field (skew, nonsingular)"),
            (false, true) => f.write_str("not tangent (matrix is not skew-symmetric)"),
            (true, false) => f.write_str("vanishes on the sphere (matrix is singular)"),
            (false, false) => f.write_str("not tangent and vanishes somewhere"),
        }
    }
}

pub fn is_vector_field(field: &LinearField) -> FieldCertificate {
    let skew = field.matrix.is_skew();
    FieldCertificate {
        skew,
        nonsingular: field.matrix.is_nonsingular(),
    }
}

fn pairwise_orthogonal(members: &[LinearField]) -> bool {
    let transposes: Vec<RatMatrix> = members.iter().map(|f| f.matrix.transpose()).collect();
    let mul = |a: &RatMatrix, b: &RatMatrix| a.mul(b).expect("family members share a dimension");
    for (l, a) in members.iter().enumerate() {
        if !mul(&transposes[l], &a.matrix).is_identity() {
            return false;
        }
        for (m, b) in members.iter().enumerate().skip(l + 1) {
            let cross = mul(&transposes[l], &b.matrix)
                .add(&mul(&transposes[m], &a.matrix))
                .expect("same dimension");
            if !cross.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Every member skew with `AᵀA = I`, and `A_lᵀA_m + A_mᵀA_l = 0` for `l ≠ m`.
///
/// When this holds the members are tangent and orthonormal at every point
/// of the sphere, hence independent everywhere.
pub fn hurwitz_radon_check(family: &FieldFamily) -> bool {
    family.members().iter().all(|f| f.matrix.is_skew()) && pairwise_orthogonal(family.members())
}

/// The classical Hurwitz matrix equations without the skewness requirement:
/// `AᵀA = I` and `A_lᵀA_m + A_mᵀA_l = 0`. Such a family sends every unit
/// vector to an orthonormal frame; it may include the identity.
pub fn orthogonal_design_check(family: &FieldFamily) -> bool {
    pairwise_orthogonal(family.members())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub point_index: usize,
    pub point: Vec<String>,
    pub gram_determinant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceOutcome {
    pub points_checked: usize,
    pub witness: Option<Witness>,
}

impl IndependenceOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Exact Gram matrix `G_lm = <A_l x | A_m x>` of the family at `x`.
pub fn gram_matrix(members: &[LinearField], x: &[Rational]) -> Result<RatMatrix> {
    let images = members
        .iter()
        .map(|f| f.apply(x))
        .collect::<Result<Vec<_>>>()?;
    let rows = images
        .iter()
        .map(|u| {
            images
                .iter()
                .map(|v| u.iter().zip(v).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows)
}

/// Checks `det G(x) > 0` at each point. Complex and quaternionic claims are
/// first expanded to their real families. Passing on finitely many points is
/// only a necessary condition for independence everywhere.
pub fn sampled_independence(
    family: &FieldFamily,
    points: &[SpherePoint],
) -> Result<IndependenceOutcome> {
    let real = real_expansion(family)?;
    if let Some(p) = points.iter().find(|p| p.dim() != real.dim()) {
        return Err(Error::DimensionMismatch {
            expected: real.dim(),
            found: p.dim(),
        });
    }
    let witness = points
        .par_iter()
        .enumerate()
        .map(|(idx, p)| -> Result<Option<Witness>> {
            let det = gram_matrix(real.members(), p.coords())?.determinant();
            Ok((!det.is_positive()).then(|| Witness {
                point_index: idx,
                point: p.coords().iter().map(ToString::to_string).collect(),
                gram_determinant: det.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(IndependenceOutcome {
        points_checked: points.len(),
        witness,
    })
}

/// What a family should become after adjoining structure-map composites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// No augmentation: certify the family as claimed.
    None,
    /// Real fields on `R^{2n}` as complex fields on `C^n`.
    C,
    /// Complex fields on `C^{2n}` as quaternionic fields on `H^n`.
    HViaC,
    /// Real fields on `R^{4n}` as quaternionic fields on `H^n`.
    HViaR,
}

impl Target {
    fn expected_claim(self) -> Option<FieldTag> {
        match self {
            Target::None => None,
            Target::C | Target::HViaR => Some(FieldTag::R),
            Target::HViaC => Some(FieldTag::C),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::None => "none",
            Target::C => "C",
            Target::HViaC => "H_via_c",
            Target::HViaR => "H_via_r",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateLevel {
    /// Hurwitz–Radon relations hold: independent at every sphere point.
    Sufficient,
    /// Independent at every sampled point; no global proof.
    SampledOnly,
    Fail,
}

impl fmt::Display for CertificateLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateLevel::Sufficient => "sufficient",
            CertificateLevel::SampledOnly => "sampled-only",
            CertificateLevel::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberCheck {
    pub name: String,
    pub certificate: FieldCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub target: Target,
    pub input_members: Vec<MemberCheck>,
    /// Real fields whose joint independence is being certified.
    pub augmented_size: usize,
    pub augmented_members: Vec<MemberCheck>,
    pub hurwitz_radon: bool,
    pub sampled: Option<IndependenceOutcome>,
    pub level: CertificateLevel,
    pub reason: Option<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.level != CertificateLevel::Fail
    }
}

fn check_members(family: &FieldFamily) -> Vec<MemberCheck> {
    family
        .members()
        .par_iter()
        .map(|f| MemberCheck {
            name: f.name.clone(),
            certificate: is_vector_field(f),
        })
        .collect()
}

fn first_bad(checks: &[MemberCheck]) -> Option<String> {
    checks
        .iter()
        .find(|c| !c.certificate.is_field())
        .map(|c| format!("{}: {}", c.name, c.certificate))
}

/// Augment the family for `target` and certify the augmented real family.
///
/// For `C` the augmentation is `{A_l, r_{C,i}·A_l}`; for `HViaR` it is
/// `{A_l, r_{H,i}·A_l, r_{H,j}·A_l, r_{H,k}·A_l}`; for `HViaC` it is the
/// complex family `{A_l, c_{H,j}·A_l}`, which is certified through its real
/// expansion. Each augmented member must itself be a vector field, then the
/// Hurwitz–Radon check (sufficient) and the sampled Gram test (necessary) run.
pub fn theorem10_check(
    family: &FieldFamily,
    target: Target,
    points: &[SpherePoint],
) -> Result<FamilyReport> {
    if let Some(expected) = target.expected_claim() {
        if family.claimed_field() != expected {
            return Err(Error::ClaimedField {
                expected,
                found: family.claimed_field(),
            });
        }
    }
    let input_members = check_members(family);
    let augmented = match target {
        Target::None => real_expansion(family)?,
        Target::C => {
            let as_complex = FieldFamily::new(FieldTag::C, family.members().to_vec())?;
            lift(&as_complex, LiftDirection::CToR)?
        }
        Target::HViaC => {
            let as_quaternionic = FieldFamily::new(FieldTag::H, family.members().to_vec())?;
            real_expansion(&lift(&as_quaternionic, LiftDirection::HToC)?)?
        }
        Target::HViaR => {
            let as_quaternionic = FieldFamily::new(FieldTag::H, family.members().to_vec())?;
            lift(&as_quaternionic, LiftDirection::HToR)?
        }
    };
    let augmented_members = check_members(&augmented);
    let mut report = FamilyReport {
        target,
        input_members,
        augmented_size: augmented.len(),
        augmented_members,
        hurwitz_radon: false,
        sampled: None,
        level: CertificateLevel::Fail,
        reason: None,
    };
    if let Some(bad) = first_bad(&report.input_members) {
        report.reason = Some(format!("input member is not a vector field: {bad}"));
        return Ok(report);
    }
    if let Some(bad) = first_bad(&report.augmented_members) {
        report.reason = Some(format!("augmented member is not a vector field: {bad}"));
        return Ok(report);
    }
    report.hurwitz_radon = hurwitz_radon_check(&augmented);
    let sampled = sampled_independence(&augmented, points)?;
    report.level = match (report.hurwitz_radon, sampled.passed()) {
        (_, false) => CertificateLevel::Fail,
        (true, true) => CertificateLevel::Sufficient,
        (false, true) => CertificateLevel::SampledOnly,
    };
    if let Some(w) = &sampled.witness {
        report.reason = Some(format!(
            "Gram determinant {} at sample point {}",
            w.gram_determinant, w.point_index
        ));
    }
    report.sampled = Some(sampled);
    Ok(report)
}

/// `<x|Ax>` in real coordinates.
pub fn tangency(field: &LinearField, x: &[Rational]) -> Result<Rational> {
    Ok(field
        .apply(x)?
        .iter()
        .zip(x)
        .map(|(a, b)| a * b)
        .fold(Rational::zero(), |acc, v| acc + v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::construct::{example4, structure_matrix, Model, Unit};
    use crate::fields::sphere::{default_points, random_points};

    fn fam(members: Vec<LinearField>) -> FieldFamily {
        FieldFamily::new(FieldTag::R, members).unwrap()
    }

    #[test]
    fn vector_field_examples() {
        let (m1, _) = example4(2).unwrap();
        assert!(is_vector_field(&m1).is_field());
        let id = is_vector_field(&LinearField::new("id", RatMatrix::identity(4)));
        assert_eq!(
            id,
            FieldCertificate {
                skew: false,
                nonsingular: true
            }
        );
        let zero = is_vector_field(&LinearField::new("0", RatMatrix::zeros(4)));
        assert_eq!(
            zero,
            FieldCertificate {
                skew: true,
                nonsingular: false
            }
        );
    }

    #[test]
    fn hurwitz_radon_examples() {
        let (m1, m2) = example4(2).unwrap();
        assert!(hurwitz_radon_check(&fam(vec![m1.clone(), m2])));
        assert!(!hurwitz_radon_check(&fam(vec![m1.clone(), m1])));
        let j = structure_matrix(Unit::I, Model::ComplexOnR2n, 6).unwrap();
        assert!(hurwitz_radon_check(&fam(vec![j])));
    }

    #[test]
    fn sampled_examples() {
        let (m1, m2) = example4(2).unwrap();
        let pts = random_points(4, 100, 1);
        assert!(sampled_independence(&fam(vec![m1.clone(), m2]), &pts)
            .unwrap()
            .passed());
        let neg = LinearField::new("-M1", m1.matrix.neg());
        let out = sampled_independence(&fam(vec![m1.clone(), neg]), &pts).unwrap();
        let w = out.witness.unwrap();
        assert_eq!(w.point_index, 0);
        assert_eq!(w.gram_determinant, "0");
        assert!(sampled_independence(&fam(vec![m1]), &pts[..3])
            .unwrap()
            .passed());
    }

    #[test]
    fn sampled_rejects_wrong_dimension() {
        let (m1, _) = example4(2).unwrap();
        let pts = random_points(5, 2, 0);
        assert!(sampled_independence(&fam(vec![m1]), &pts).is_err());
    }

    #[test]
    fn theorem10_examples() {
        let (m1, m2) = example4(2).unwrap();
        let pts = default_points(4, 0);

        let pair = theorem10_check(&fam(vec![m1.clone(), m2.clone()]), Target::C, &pts).unwrap();
        assert_eq!(pair.level, CertificateLevel::Fail);
        assert_eq!(pair.augmented_size, 4);

        let j = structure_matrix(Unit::I, Model::ComplexOnR2n, 4).unwrap();
        let single_j = theorem10_check(&fam(vec![j]), Target::C, &pts).unwrap();
        assert_eq!(single_j.level, CertificateLevel::Fail);
        assert!(single_j.reason.unwrap().contains("not tangent"));

        let hr = theorem10_check(&fam(vec![m1.clone()]), Target::C, &pts).unwrap();
        assert_eq!(hr.level, CertificateLevel::Sufficient);

        let plain = theorem10_check(&fam(vec![m1, m2]), Target::None, &pts).unwrap();
        assert_eq!(plain.level, CertificateLevel::Sufficient);
    }

    #[test]
    fn theorem10_claim_mismatch() {
        let (m1, _) = example4(2).unwrap();
        let c = FieldFamily::new(FieldTag::C, vec![m1]).unwrap();
        assert!(matches!(
            theorem10_check(&c, Target::C, &[]),
            Err(Error::ClaimedField { .. })
        ));
    }

    #[test]
    fn sampled_only_level() {
        // Skew, nonsingular, not orthogonal: a field but not Hurwitz–Radon.
        let a = RatMatrix::from_int_rows(&[&[0, -2], &[2, 0]]).unwrap();
        let report = theorem10_check(
            &fam(vec![LinearField::new("2J", a)]),
            Target::None,
            &default_points(2, 0),
        )
        .unwrap();
        assert_eq!(report.level, CertificateLevel::SampledOnly);
    }
}
