use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::james::FieldTag;

pub type Rational = BigRational;

/// Shorthand for the rational `num / den`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Random rational with numerator in `[-100, 100]` and denominator in `[1, 100]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rational(rng.gen_range(-100..=100), rng.gen_range(1..=100))
}

/// Elements of R, C or H with exact rational coordinates.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
{
    const FIELD: FieldTag;

    fn conj(&self) -> Self;

    fn from_rational(r: Rational) -> Self;

    /// Real coordinates `(a, b, c, d)` truncated to the algebra's dimension.
    fn coords(&self) -> Vec<Rational>;

    fn norm_sqr(&self) -> Rational {
        self.coords().iter().map(|c| c * c).sum()
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for Rational {
    const FIELD: FieldTag = FieldTag::R;

    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        random_rational(rng)
    }
}

/// `re + im·i`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rational(re, 1), rational(im, 1))
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }
}

/// `a + b·i + c·j + d·k`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            rational(a, 1),
            rational(b, 1),
            rational(c, 1),
            rational(d, 1),
        )
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }
}

impl From<Complex> for Quaternion {
    fn from(z: Complex) -> Self {
        Self::new(z.re, z.im, Rational::zero(), Rational::zero())
    }
}

impl Scalar for Complex {
    const FIELD: FieldTag = FieldTag::C;

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    fn coords(&self) -> Vec<Rational> {
        vec![self.re.clone(), self.im.clone()]
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(random_rational(rng), random_rational(rng))
    }
}

impl Scalar for Quaternion {
    const FIELD: FieldTag = FieldTag::H;

    fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    fn coords(&self) -> Vec<Rational> {
        vec![
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(
            random_rational(rng),
            random_rational(rng),
            random_rational(rng),
            random_rational(rng),
        )
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.a + &o.a,
            &self.b + &o.b,
            &self.c + &o.c,
            &self.d + &o.d,
        )
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.a - &o.a,
            &self.b - &o.b,
            &self.c - &o.c,
            &self.d - &o.d,
        )
    }
}

/// Hamilton product, `i² = j² = k² = ijk = -1`.
impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

macro_rules! forward_owned_binops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Zero for $t {
            fn zero() -> $t {
                <$t as Scalar>::from_rational(Rational::zero())
            }
            fn is_zero(&self) -> bool {
                self.coords().iter().all(Zero::is_zero)
            }
        }
        impl One for $t {
            fn one() -> $t {
                <$t as Scalar>::from_rational(Rational::one())
            }
        }
    };
}

forward_owned_binops!(Complex);
forward_owned_binops!(Quaternion);

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    coef: &Rational,
    unit: &str,
) -> fmt::Result {
    if coef.is_zero() {
        return Ok(());
    }
    let sign = if coef.is_negative() {
        "-"
    } else if *first {
        ""
    } else {
        "+"
    };
    let mag = coef.abs();
    if unit.is_empty() {
        write!(f, "{sign}{mag}")?;
    } else if mag.is_one() {
        write!(f, "{sign}{unit}")?;
    } else {
        write!(f, "{sign}{mag}{unit}")?;
    }
    *first = false;
    Ok(())
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[(&Rational, &str)]) -> fmt::Result {
    let mut first = true;
    for (coef, unit) in parts {
        write_term(f, &mut first, coef, unit)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &[(&self.re, ""), (&self.im, "i")])
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(
            f,
            &[
                (&self.a, ""),
                (&self.b, "i"),
                (&self.c, "j"),
                (&self.d, "k"),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(&(&i * &j) * &k, -Quaternion::one());
        for u in [&i, &j, &k] {
            assert_eq!(u * u, -Quaternion::one());
        }
        let lhs = &Quaternion::from_ints(1, 1, 0, 0) * &Quaternion::from_ints(1, 0, 1, 0);
        assert_eq!(lhs, Quaternion::from_ints(1, 1, 1, 1));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Complex::i().conj(), -Complex::i());
        assert_eq!(Quaternion::i().conj(), -Quaternion::i());
        assert_eq!(rational(3, 1).conj(), rational(3, 1));
        assert_eq!(
            Quaternion::from_ints(1, 2, 3, 4).conj(),
            Quaternion::from_ints(1, -2, -3, -4)
        );
    }

    #[test]
    fn display() {
        assert_eq!(Quaternion::from_ints(1, -2, 0, 1).to_string(), "1-2i+k");
        assert_eq!(
            Complex::new(rational(1, 2), rational(-3, 4)).to_string(),
            "1/2-3/4i"
        );
        assert_eq!(Complex::zero().to_string(), "0");
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Quaternion::from_ints(1, 2, 3, 4);
        let q = Quaternion::from_ints(-2, 0, 5, 1);
        assert_eq!((&p * &q).norm_sqr(), p.norm_sqr() * q.norm_sqr());
        assert_eq!(&p * &p.conj(), Quaternion::from_rational(p.norm_sqr()));
    }
}
