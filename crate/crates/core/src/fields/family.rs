use serde::{Deserialize, Serialize};

use super::matrix::RatMatrix;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::james::FieldTag;

/// A linear vector-field candidate `x ↦ M·x` on `R^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearField {
    pub name: String,
    pub matrix: RatMatrix,
}

impl LinearField {
    pub fn new(name: impl Into<String>, matrix: RatMatrix) -> Self {
        Self {
            name: name.into(),
            matrix,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.matrix.apply(x)
    }

    /// `S ∘ self` for a structure map `S`, named `"{prefix}*{name}"`.
    pub fn compose_left(&self, left: &LinearField) -> Result<LinearField> {
        Ok(LinearField::new(
            format!("{}*{}", left.name, self.name),
            left.matrix.mul(&self.matrix)?,
        ))
    }
}

/// Linear fields on a common `R^N`, claimed to be `F`-fields in real coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldFamily {
    dim: usize,
    claimed_field: FieldTag,
    members: Vec<LinearField>,
}

impl FieldFamily {
    pub fn new(claimed_field: FieldTag, members: Vec<LinearField>) -> Result<Self> {
        let dim = members.first().ok_or(Error::Empty)?.dim();
        if let Some(bad) = members.iter().find(|f| f.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        let modulus = claimed_field.real_dim();
        if dim % modulus != 0 {
            return Err(Error::BadLength { len: dim, modulus });
        }
        Ok(Self {
            dim,
            claimed_field,
            members,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn claimed_field(&self) -> FieldTag {
        self.claimed_field
    }

    pub fn members(&self) -> &[LinearField] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_json(&self) -> String {
        let file = FamilyFile {
            space_dim: self.dim,
            claimed_field: self.claimed_field,
            fields: self
                .members
                .iter()
                .map(|f| FieldEntry {
                    name: f.name.clone(),
                    matrix: f.matrix.to_string_rows(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("family serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FamilyFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let mut members = Vec::with_capacity(file.fields.len());
        for entry in file.fields {
            let rows = entry
                .matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let matrix = RatMatrix::from_rows(rows)
                .map_err(|e| Error::Format(format!("field '{}': {e}", entry.name)))?;
            if matrix.dim() != file.space_dim {
                return Err(Error::Format(format!(
                    "field '{}' is {}x{} but space_dim is {}",
                    entry.name,
                    matrix.dim(),
                    matrix.dim(),
                    file.space_dim
                )));
            }
            members.push(LinearField::new(entry.name, matrix));
        }
        Self::new(file.claimed_field, members).map_err(|e| Error::Format(e.to_string()))
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((_, den)) = t.split_once('/') {
        if den
            .trim()
            .trim_start_matches(['+', '-'])
            .chars()
            .all(|c| c == '0')
        {
            return Err(Error::Format(format!("zero denominator in '{s}'")));
        }
    }
    t.parse::<Rational>()
        .map_err(|_| Error::Format(format!("not a rational: '{s}'")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    space_dim: usize,
    claimed_field: FieldTag,
    fields: Vec<FieldEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldEntry {
    name: String,
    matrix: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    const M1: &str = r#"{ "space_dim": 4, "claimed_field": "R", "fields": [ { "name": "M1", "matrix": [["0","0","-1","0"],["0","0","0","1"],["1","0","0","0"],["0","-1","0","0"]] } ] }"#;

    #[test]
    fn parses_documented_example() {
        let fam = FieldFamily::from_json(M1).unwrap();
        assert_eq!(fam.dim(), 4);
        assert_eq!(fam.claimed_field(), FieldTag::R);
        assert_eq!(fam.members()[0].name, "M1");
        assert_eq!(*fam.members()[0].matrix.get(0, 2), rational(-1, 1));
        let back = FieldFamily::from_json(&fam.to_json()).unwrap();
        assert_eq!(back, fam);
    }

    #[test]
    fn fractions_round_trip() {
        let m = RatMatrix::from_rows(vec![
            vec![rational(0, 1), rational(-3, 4)],
            vec![rational(3, 4), rational(0, 1)],
        ])
        .unwrap();
        let fam = FieldFamily::new(FieldTag::C, vec![LinearField::new("half", m)]).unwrap();
        let json = fam.to_json();
        assert!(json.contains("\"-3/4\""));
        assert_eq!(FieldFamily::from_json(&json).unwrap(), fam);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{ "space_dim": 2, "claimed_field": "R", "fields": [] }"#,
            r#"{ "space_dim": 2, "claimed_field": "Q", "fields": [] }"#,
            r#"{ "space_dim": 2, "claimed_field": "R", "fields": [ { "name": "a", "matrix": [["1","x"],["0","1"]] } ] }"#,
            r#"{ "space_dim": 2, "claimed_field": "R", "fields": [ { "name": "a", "matrix": [["1/0","0"],["0","1"]] } ] }"#,
            r#"{ "space_dim": 3, "claimed_field": "R", "fields": [ { "name": "a", "matrix": [["1","0"],["0","1"]] } ] }"#,
            r#"{ "space_dim": 2, "claimed_field": "H", "fields": [ { "name": "a", "matrix": [["1","0"],["0","1"]] } ] }"#,
            r#"{ "space_dim": 2, "claimed_field": "R", "fields": [ { "name": "a", "matrix": [["1","0"],["0"]] } ] }"#,
            "not json",
        ] {
            assert!(
                matches!(FieldFamily::from_json(bad), Err(Error::Format(_))),
                "{bad}"
            );
        }
    }
}
