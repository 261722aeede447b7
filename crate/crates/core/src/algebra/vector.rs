use std::fmt;

use rand::Rng;

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::james::FieldTag;

/// A vector in `F^n`, viewed as a right `F`-module.
#[derive(Clone, Debug, PartialEq)]
pub struct FVector<S> {
    components: Vec<S>,
}

impl<S: Scalar> FVector<S> {
    pub fn new(components: Vec<S>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { components })
    }

    pub fn field(&self) -> FieldTag {
        S::FIELD
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[S] {
        &self.components
    }

    pub fn into_components(self) -> Vec<S> {
        self.components
    }

    /// The `index`-th standard basis vector of `F^n`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if index >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: index,
            });
        }
        Self::new(
            (0..n)
                .map(|m| if m == index { S::one() } else { S::zero() })
                .collect(),
        )
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Self> {
        Self::new((0..n).map(|_| S::random(rng)).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_len(self, other)?;
        Ok(Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_len(self, other)?;
        Ok(Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

impl<S: Scalar> fmt::Display for FVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, c) in self.components.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

fn same_len<S>(x: &FVector<S>, y: &FVector<S>) -> Result<()> {
    if x.components.len() != y.components.len() {
        return Err(Error::DimensionMismatch {
            expected: x.components.len(),
            found: y.components.len(),
        });
    }
    Ok(())
}

/// `<x|y> = sum conj(x_m) y_m`, conjugate-linear in the first slot.
pub fn inner<S: Scalar>(x: &FVector<S>, y: &FVector<S>) -> Result<S> {
    same_len(x, y)?;
    Ok(x.components
        .iter()
        .zip(&y.components)
        .fold(S::zero(), |acc, (a, b)| acc + a.conj() * b.clone()))
}

/// Right multiplication `x ↦ x·t`.
pub fn alpha<S: Scalar>(x: &FVector<S>, t: &S) -> FVector<S> {
    FVector {
        components: x.components.iter().map(|c| c.clone() * t.clone()).collect(),
    }
}
