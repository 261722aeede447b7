//! Explicit constructions: structure matrices of right multiplication, the
//! complex field on `S(C^n)` pairing consecutive coordinates, and the lifts
//! that turn `m` complex (quaternionic) fields into `2m` real (complex) ones.

use std::fmt;
use std::str::FromStr;

use super::family::{FieldFamily, LinearField};
use super::matrix::RatMatrix;
use crate::algebra::{alpha, r_c, r_c_inv, r_h, r_h_inv, Complex, FVector, Quaternion, Rational};
use crate::error::{Error, Result};
use crate::james::FieldTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    I,
    J,
    K,
}

impl Unit {
    pub const ALL: [Unit; 3] = [Unit::I, Unit::J, Unit::K];

    fn quaternion(self) -> Quaternion {
        match self {
            Unit::I => Quaternion::i(),
            Unit::J => Quaternion::j(),
            Unit::K => Quaternion::k(),
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::I => "i",
            Unit::J => "j",
            Unit::K => "k",
        })
    }
}

/// Which realification the structure matrix is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// `C^n` realified by `r_C` onto `R^{2n}`.
    ComplexOnR2n,
    /// `H^n` realified by `r_H` onto `R^{4n}`.
    QuaternionOnR4n,
}

fn basis(dim: usize, index: usize) -> Vec<Rational> {
    let mut v = vec![num_traits::Zero::zero(); dim];
    v[index] = num_traits::One::one();
    v
}

fn matrix_from_columns(
    dim: usize,
    column: impl Fn(usize) -> Result<Vec<Rational>>,
) -> Result<RatMatrix> {
    let mut m = RatMatrix::zeros(dim);
    for c in 0..dim {
        for (r, v) in column(c)?.into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// Real-coordinate matrix of `x ↦ x·t` under the chosen realification,
/// i.e. `r_C ∘ α_i ∘ r_C⁻¹` or `r_H ∘ α_t ∘ r_H⁻¹`.
pub fn structure_matrix(unit: Unit, model: Model, dim: usize) -> Result<LinearField> {
    let matrix = match model {
        Model::ComplexOnR2n => {
            if unit != Unit::I {
                return Err(Error::InvalidArgument(format!(
                    "right multiplication by {unit} is not defined on C^n"
                )));
            }
            if dim == 0 || !dim.is_multiple_of(2) {
                return Err(Error::BadLength {
                    len: dim,
                    modulus: 2,
                });
            }
            matrix_from_columns(dim, |c| {
                let z = r_c_inv(&FVector::new(basis(dim, c))?)?;
                Ok(r_c(&alpha(&z, &Complex::i())).into_components())
            })?
        }
        Model::QuaternionOnR4n => {
            if dim == 0 || !dim.is_multiple_of(4) {
                return Err(Error::BadLength {
                    len: dim,
                    modulus: 4,
                });
            }
            let t = unit.quaternion();
            matrix_from_columns(dim, |c| {
                let q = r_h_inv(&FVector::new(basis(dim, c))?)?;
                Ok(r_h(&alpha(&q, &t)).into_components())
            })?
        }
    };
    let name = match model {
        Model::ComplexOnR2n => format!("r_C,{unit}"),
        Model::QuaternionOnR4n => format!("r_H,{unit}"),
    };
    Ok(LinearField::new(name, matrix))
}

/// The two real fields induced on `R^{2n}` by the complex field
/// `(z_1, z_2, ...) ↦ (-conj z_2, conj z_1, ...)` on `S(C^n)`:
/// `M1 = r_C ∘ v ∘ r_C⁻¹` and `M2 = r_C ∘ α_i ∘ v ∘ r_C⁻¹`.
///
/// The construction pairs consecutive complex coordinates, so `n` must be even.
pub fn example4(n: usize) -> Result<(LinearField, LinearField)> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "the paired construction needs an even complex dimension n >= 2, got {n}"
        )));
    }
    let dim = 2 * n;
    let mut m1 = RatMatrix::zeros(dim);
    let mut m2 = RatMatrix::zeros(dim);
    let one = || Rational::from_integer(1.into());
    let neg = || Rational::from_integer((-1).into());
    for b in (0..dim).step_by(4) {
        // (x1, x2, x3, x4) ↦ (-x3, x4, x1, -x2)
        m1.set(b, b + 2, neg());
        m1.set(b + 1, b + 3, one());
        m1.set(b + 2, b, one());
        m1.set(b + 3, b + 1, neg());
        // (x1, x2, x3, x4) ↦ (-x4, -x3, x2, x1)
        m2.set(b, b + 3, neg());
        m2.set(b + 1, b + 2, neg());
        m2.set(b + 2, b + 1, one());
        m2.set(b + 3, b, one());
    }
    Ok((LinearField::new("M1", m1), LinearField::new("M2", m2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftDirection {
    /// `m` complex fields on `C^n` ↦ `2m` real fields on `R^{2n}`.
    CToR,
    /// `m` quaternionic fields on `H^n` ↦ `2m` complex fields on `C^{2n}`.
    HToC,
    /// `m` quaternionic fields on `H^n` ↦ `4m` real fields on `R^{4n}`.
    HToR,
}

impl LiftDirection {
    pub fn source(self) -> FieldTag {
        match self {
            LiftDirection::CToR => FieldTag::C,
            LiftDirection::HToC | LiftDirection::HToR => FieldTag::H,
        }
    }

    pub fn target(self) -> FieldTag {
        match self {
            LiftDirection::CToR | LiftDirection::HToR => FieldTag::R,
            LiftDirection::HToC => FieldTag::C,
        }
    }
}

impl fmt::Display for LiftDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftDirection::CToR => "C_to_R",
            LiftDirection::HToC => "H_to_C",
            LiftDirection::HToR => "H_to_R",
        })
    }
}

impl FromStr for LiftDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "c_to_r" => Ok(LiftDirection::CToR),
            "h_to_c" => Ok(LiftDirection::HToC),
            "h_to_r" => Ok(LiftDirection::HToR),
            _ => Err(Error::InvalidArgument(format!(
                "unknown lift direction '{s}'"
            ))),
        }
    }
}

fn lift_with(
    family: &FieldFamily,
    structure: &[LinearField],
    target: FieldTag,
) -> Result<FieldFamily> {
    let mut members = Vec::with_capacity(family.len() * (structure.len() + 1));
    for f in family.members() {
        members.push(f.clone());
        for s in structure {
            members.push(f.compose_left(s)?);
        }
    }
    FieldFamily::new(target, members)
}

fn check_source(family: &FieldFamily, expected: FieldTag) -> Result<()> {
    if family.claimed_field() != expected {
        return Err(Error::ClaimedField {
            expected,
            found: family.claimed_field(),
        });
    }
    Ok(())
}

/// Adjoin the right-multiplication companions of every member.
///
/// `HToC` uses `c_H ∘ α_j ∘ c_H⁻¹`, which in `r_C` coordinates on `R^{4n}`
/// is the quaternionic structure matrix for `j`.
pub fn lift(family: &FieldFamily, direction: LiftDirection) -> Result<FieldFamily> {
    check_source(family, direction.source())?;
    let dim = family.dim();
    let structure = match direction {
        LiftDirection::CToR => vec![structure_matrix(Unit::I, Model::ComplexOnR2n, dim)?],
        LiftDirection::HToC => vec![structure_matrix(Unit::J, Model::QuaternionOnR4n, dim)?],
        LiftDirection::HToR => Unit::ALL
            .iter()
            .map(|&u| structure_matrix(u, Model::QuaternionOnR4n, dim))
            .collect::<Result<_>>()?,
    };
    lift_with(family, &structure, direction.target())
}

/// Quaternionic-to-real lift restricted to the given units.
pub fn lift_h_to_r_with(family: &FieldFamily, units: &[Unit]) -> Result<FieldFamily> {
    check_source(family, FieldTag::H)?;
    if units.is_empty() {
        return Err(Error::Empty);
    }
    let structure = units
        .iter()
        .map(|&u| structure_matrix(u, Model::QuaternionOnR4n, family.dim()))
        .collect::<Result<Vec<_>>>()?;
    lift_with(family, &structure, FieldTag::R)
}

/// Real expansion of a family: complex claims lift by `C_to_R`, quaternionic
/// by `H_to_R`, real families are returned unchanged.
pub fn real_expansion(family: &FieldFamily) -> Result<FieldFamily> {
    match family.claimed_field() {
        FieldTag::R => Ok(family.clone()),
        FieldTag::C => lift(family, LiftDirection::CToR),
        FieldTag::H => lift(family, LiftDirection::HToR),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn complex_structure_on_r2() {
        let j = structure_matrix(Unit::I, Model::ComplexOnR2n, 2).unwrap();
        assert_eq!(j.matrix, m(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn quaternion_structure_hand_expanded() {
        // (u1,u2,u3,u4) ↦ (-u2, u1, -u4, u3)
        let i = structure_matrix(Unit::I, Model::QuaternionOnR4n, 4).unwrap();
        assert_eq!(
            i.matrix,
            m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])
        );
        // (u1,u2,u3,u4) ↦ (-u4, -u3, u2, u1)
        let j = structure_matrix(Unit::J, Model::QuaternionOnR4n, 4).unwrap();
        assert_eq!(
            j.matrix,
            m(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]])
        );
        // (u1,u2,u3,u4) ↦ (-u3, u4, u1, -u2)
        let k = structure_matrix(Unit::K, Model::QuaternionOnR4n, 4).unwrap();
        assert_eq!(
            k.matrix,
            m(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]])
        );
    }

    #[test]
    fn quaternion_i_is_block_complex_i() {
        for dim in [4, 8, 12] {
            assert_eq!(
                structure_matrix(Unit::I, Model::QuaternionOnR4n, dim)
                    .unwrap()
                    .matrix,
                structure_matrix(Unit::I, Model::ComplexOnR2n, dim)
                    .unwrap()
                    .matrix
            );
        }
    }

    #[test]
    fn structure_divisibility() {
        assert!(structure_matrix(Unit::I, Model::ComplexOnR2n, 3).is_err());
        assert!(structure_matrix(Unit::J, Model::ComplexOnR2n, 4).is_err());
        assert!(structure_matrix(Unit::K, Model::QuaternionOnR4n, 6).is_err());
    }

    #[test]
    fn example4_displayed_maps() {
        let (m1, m2) = example4(2).unwrap();
        assert_eq!(
            m1.matrix,
            m(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]])
        );
        assert_eq!(
            m2.matrix,
            m(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]])
        );
        let j = structure_matrix(Unit::I, Model::ComplexOnR2n, 4).unwrap();
        assert_eq!(j.matrix.mul(&m1.matrix).unwrap(), m2.matrix);
        assert!(example4(3).is_err());
        assert!(example4(0).is_err());
    }

    #[test]
    fn lift_reproduces_example4_pair() {
        let (m1, m2) = example4(2).unwrap();
        let fam = FieldFamily::new(FieldTag::C, vec![m1.clone()]).unwrap();
        let lifted = lift(&fam, LiftDirection::CToR).unwrap();
        assert_eq!(lifted.claimed_field(), FieldTag::R);
        assert_eq!(lifted.members()[0].matrix, m1.matrix);
        assert_eq!(lifted.members()[1].matrix, m2.matrix);
    }

    #[test]
    fn lift_cardinalities_and_claims() {
        let id = LinearField::new("id", RatMatrix::identity(8));
        let h = FieldFamily::new(FieldTag::H, vec![id.clone(), id.clone(), id.clone()]).unwrap();
        assert_eq!(lift(&h, LiftDirection::HToR).unwrap().len(), 12);
        assert_eq!(lift(&h, LiftDirection::HToC).unwrap().len(), 6);
        assert_eq!(lift_h_to_r_with(&h, &[Unit::K]).unwrap().len(), 6);
        let c = FieldFamily::new(FieldTag::C, vec![id.clone(), id]).unwrap();
        assert_eq!(lift(&c, LiftDirection::CToR).unwrap().len(), 4);
        assert!(matches!(
            lift(&c, LiftDirection::HToR),
            Err(Error::ClaimedField { .. })
        ));
    }

    #[test]
    fn direction_parsing() {
        assert_eq!(
            "C_to_R".parse::<LiftDirection>().unwrap(),
            LiftDirection::CToR
        );
        assert_eq!(
            "h-to-c".parse::<LiftDirection>().unwrap(),
            LiftDirection::HToC
        );
        assert!("R_to_C".parse::<LiftDirection>().is_err());
    }
}
