use num_traits::{ToPrimitive, Zero};

use crate::algebra::{inner, FVector, Rational, Scalar};
use crate::error::{Error, Result};

/// Exactly orthogonalized vectors with their squared norms.
///
/// Normalizing would need square roots, so the unit vectors are only
/// available as a floating-point rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Orthogonalized<S> {
    pub vectors: Vec<FVector<S>>,
    pub squared_norms: Vec<Rational>,
}

impl<S: Scalar> Orthogonalized<S> {
    /// Real coordinates of each `w_l / |w_l|`.
    pub fn orthonormal_f64(&self) -> Vec<Vec<f64>> {
        self.vectors
            .iter()
            .zip(&self.squared_norms)
            .map(|(w, n2)| {
                let scale = n2.to_f64().unwrap_or(f64::NAN).sqrt();
                w.components()
                    .iter()
                    .flat_map(Scalar::coords)
                    .map(|c| c.to_f64().unwrap_or(f64::NAN) / scale)
                    .collect()
            })
            .collect()
    }
}

/// Orthogonalize with respect to the `F`-inner product.
///
/// Scalars act on the right, so the projection of `v` onto `w` is
/// `w · (<w|v> / <w|w>)`.
pub fn gram_schmidt<S: Scalar>(vectors: &[FVector<S>]) -> Result<Orthogonalized<S>> {
    let first = vectors.first().ok_or(Error::Empty)?;
    let mut out: Vec<FVector<S>> = Vec::with_capacity(vectors.len());
    let mut norms: Vec<Rational> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        if v.len() != first.len() {
            return Err(Error::DimensionMismatch {
                expected: first.len(),
                found: v.len(),
            });
        }
        let mut w = v.clone();
        for (u, n2) in out.iter().zip(&norms) {
            let coef = inner(u, v)? * S::from_rational(n2.recip());
            w = w.sub(&crate::algebra::alpha(u, &coef))?;
        }
        let n2 = inner(&w, &w)?.coords().swap_remove(0);
        if n2.is_zero() {
            return Err(Error::LinearlyDependent { index });
        }
        out.push(w);
        norms.push(n2);
    }
    Ok(Orthogonalized {
        vectors: out,
        squared_norms: norms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, Complex, Quaternion};
    use num_traits::One;

    fn cv(parts: &[(i64, i64)]) -> FVector<Complex> {
        FVector::new(
            parts
                .iter()
                .map(|&(a, b)| Complex::from_ints(a, b))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn orthonormal_input_unchanged() {
        let input = vec![cv(&[(1, 0), (0, 0)]), cv(&[(0, 0), (0, 1)])];
        let out = gram_schmidt(&input).unwrap();
        assert_eq!(out.vectors, input);
        assert_eq!(out.squared_norms, vec![Rational::one(), Rational::one()]);
    }

    #[test]
    fn complex_examples() {
        let out = gram_schmidt(&[cv(&[(1, 0), (0, 0)]), cv(&[(1, 0), (1, 0)])]).unwrap();
        assert_eq!(out.vectors[1], cv(&[(0, 0), (1, 0)]));

        // <(1,i)|(0,2i)> = 2, |(1,i)|² = 2, so w2 = (0,2i) - (1,i) = (-1, i).
        let out = gram_schmidt(&[cv(&[(1, 0), (0, 1)]), cv(&[(0, 0), (0, 2)])]).unwrap();
        assert_eq!(out.vectors[1], cv(&[(-1, 0), (0, 1)]));
        assert!(inner(&out.vectors[0], &out.vectors[1]).unwrap().is_zero());
        assert_eq!(out.squared_norms, vec![rational(2, 1), rational(2, 1)]);
    }

    #[test]
    fn quaternionic_projection_is_on_the_right() {
        let v1 = FVector::new(vec![Quaternion::one(), Quaternion::i()]).unwrap();
        let v2 = FVector::new(vec![Quaternion::j(), Quaternion::from_ints(1, 1, 1, 1)]).unwrap();
        let out = gram_schmidt(&[v1, v2]).unwrap();
        assert!(inner(&out.vectors[0], &out.vectors[1]).unwrap().is_zero());
        assert!(inner(&out.vectors[1], &out.vectors[0]).unwrap().is_zero());
    }

    #[test]
    fn dependent_input_rejected() {
        // (i, -1) = (1, i)·i
        let err = gram_schmidt(&[cv(&[(1, 0), (0, 1)]), cv(&[(0, 1), (-1, 0)])]).unwrap_err();
        assert_eq!(err, Error::LinearlyDependent { index: 1 });
        assert_eq!(gram_schmidt::<Complex>(&[]).unwrap_err(), Error::Empty);
    }

    #[test]
    fn float_rendering_is_unit_length() {
        let out = gram_schmidt(&[cv(&[(3, 0), (0, 4)]), cv(&[(1, 1), (2, -1)])]).unwrap();
        for v in out.orthonormal_f64() {
            let n: f64 = v.iter().map(|x| x * x).sum();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }
}
