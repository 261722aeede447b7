//! Coordinate repackings between `H^n`, `C^{2n}`, `R^{2n}` and `R^{4n}`.
//!
//! Complexification sends `a + bi + cj + dk` to the pair `(a + bi, d + ci)`;
//! the third real slot after realification is therefore `d`, not `c`.

use super::scalar::{Complex, Quaternion, Rational};
use super::vector::FVector;
use crate::error::{Error, Result};

fn check_multiple(len: usize, modulus: usize) -> Result<()> {
    if !len.is_multiple_of(modulus) {
        return Err(Error::BadLength { len, modulus });
    }
    Ok(())
}

/// `(a_1 + b_1 i, ...) ↦ (a_1, b_1, ...)`
pub fn r_c(x: &FVector<Complex>) -> FVector<Rational> {
    let out = x
        .components()
        .iter()
        .flat_map(|z| [z.re.clone(), z.im.clone()])
        .collect();
    FVector::new(out).expect("nonempty input")
}

pub fn r_c_inv(x: &FVector<Rational>) -> Result<FVector<Complex>> {
    check_multiple(x.len(), 2)?;
    let out = x
        .components()
        .chunks_exact(2)
        .map(|p| Complex::new(p[0].clone(), p[1].clone()))
        .collect();
    FVector::new(out)
}

/// `(a + bi + cj + dk, ...) ↦ (a + bi, d + ci, ...)`
pub fn c_h(x: &FVector<Quaternion>) -> FVector<Complex> {
    let out = x
        .components()
        .iter()
        .flat_map(|q| {
            [
                Complex::new(q.a.clone(), q.b.clone()),
                Complex::new(q.d.clone(), q.c.clone()),
            ]
        })
        .collect();
    FVector::new(out).expect("nonempty input")
}

pub fn c_h_inv(x: &FVector<Complex>) -> Result<FVector<Quaternion>> {
    check_multiple(x.len(), 2)?;
    let out = x
        .components()
        .chunks_exact(2)
        .map(|p| {
            Quaternion::new(
                p[0].re.clone(),
                p[0].im.clone(),
                p[1].im.clone(),
                p[1].re.clone(),
            )
        })
        .collect();
    FVector::new(out)
}

/// `r_C ∘ c_H`: `a + bi + cj + dk ↦ (a, b, d, c)`.
pub fn r_h(x: &FVector<Quaternion>) -> FVector<Rational> {
    r_c(&c_h(x))
}

pub fn r_h_inv(x: &FVector<Rational>) -> Result<FVector<Quaternion>> {
    check_multiple(x.len(), 4)?;
    c_h_inv(&r_c_inv(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rational, Scalar};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> FVector<Rational> {
        FVector::new(v.iter().map(|&x| rational(x, 1)).collect()).unwrap()
    }

    #[test]
    fn slot_order() {
        let q = FVector::new(vec![Quaternion::from_ints(1, 2, 3, 4)]).unwrap();
        assert_eq!(
            c_h(&q).components(),
            &[Complex::from_ints(1, 2), Complex::from_ints(4, 3)]
        );
        assert_eq!(r_h(&q), ints(&[1, 2, 4, 3]));
    }

    #[test]
    fn inverses_compose_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 2, 3, 5] {
            let z = FVector::<Complex>::random(&mut rng, n).unwrap();
            assert_eq!(r_c_inv(&r_c(&z)).unwrap(), z);
            let q = FVector::<Quaternion>::random(&mut rng, n).unwrap();
            assert_eq!(c_h_inv(&c_h(&q)).unwrap(), q);
            assert_eq!(r_h_inv(&r_h(&q)).unwrap(), q);
            let x = FVector::<Rational>::random(&mut rng, 4 * n).unwrap();
            assert_eq!(r_c(&r_c_inv(&x).unwrap()), x);
            assert_eq!(r_h(&r_h_inv(&x).unwrap()), x);
            let w = FVector::<Complex>::random(&mut rng, 2 * n).unwrap();
            assert_eq!(c_h(&c_h_inv(&w).unwrap()), w);
        }
    }

    #[test]
    fn inverse_length_checks() {
        assert_eq!(
            r_c_inv(&ints(&[1, 2, 3])),
            Err(Error::BadLength { len: 3, modulus: 2 })
        );
        assert_eq!(
            r_h_inv(&ints(&[1, 2, 3, 4, 5, 6])),
            Err(Error::BadLength { len: 6, modulus: 4 })
        );
        let odd = FVector::new(vec![Complex::i()]).unwrap();
        assert!(c_h_inv(&odd).is_err());
        assert_eq!(Rational::FIELD, crate::james::FieldTag::R);
    }
}
