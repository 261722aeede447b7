use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rational, Rational};
use crate::error::{Error, Result};

/// A point of `S(R^N)` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpherePoint {
    coords: Vec<Rational>,
}

impl SpherePoint {
    /// Accepts `coords` only if their squares sum to exactly one.
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let norm: Rational = coords.iter().map(|c| c * c).sum();
        if !norm.is_one() {
            return Err(Error::InvalidArgument(format!(
                "squared norm is {norm}, not 1"
            )));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Inverse stereographic projection `a ↦ (2a, 1 - |a|²) / (1 + |a|²)`.
pub fn stereographic_point(a: &[Rational]) -> SpherePoint {
    let sq: Rational = a.iter().map(|x| x * x).sum();
    let denom = Rational::one() + &sq;
    let two = rational(2, 1);
    let mut coords: Vec<Rational> = a.iter().map(|x| &two * x / &denom).collect();
    coords.push((Rational::one() - sq) / denom);
    SpherePoint { coords }
}

/// The `2(N-1)` points `±e_m`, `m < N - 1`.
pub fn axis_points(dim: usize) -> Vec<SpherePoint> {
    let mut out = Vec::new();
    for m in 0..dim.saturating_sub(1) {
        for sign in [1, -1] {
            let mut a = vec![Rational::zero(); dim - 1];
            a[m] = rational(sign, 1);
            out.push(stereographic_point(&a));
        }
    }
    out
}

/// `count` seeded stereographic points with parameters `p/q`, `|p| <= 3`, `1 <= q <= 4`.
pub fn random_points(dim: usize, count: usize, seed: u64) -> Vec<SpherePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a: Vec<Rational> = (1..dim)
                .map(|_| rational(rng.gen_range(-3..=3), rng.gen_range(1..=4)))
                .collect();
            stereographic_point(&a)
        })
        .collect()
}

/// Axis points followed by `random` seeded points.
pub fn sample_points(dim: usize, random: usize, seed: u64) -> Vec<SpherePoint> {
    let mut pts = axis_points(dim);
    pts.extend(random_points(dim, random, seed));
    pts
}

/// The default certification set: axis points plus 48 random points.
pub fn default_points(dim: usize, seed: u64) -> Vec<SpherePoint> {
    sample_points(dim, 48, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stereographic_examples() {
        let origin = stereographic_point(&[Rational::zero(), Rational::zero()]);
        assert_eq!(
            origin.coords(),
            &[rational(0, 1), rational(0, 1), rational(1, 1)]
        );
        assert_eq!(
            stereographic_point(&[rational(1, 1)]).coords(),
            &[rational(1, 1), rational(0, 1)]
        );
        assert_eq!(
            stereographic_point(&[rational(1, 2)]).coords(),
            &[rational(4, 5), rational(3, 5)]
        );
    }

    #[test]
    fn generated_points_are_exactly_unit() {
        for p in default_points(7, 11) {
            assert!(SpherePoint::new(p.coords().to_vec()).is_ok());
            assert_eq!(p.dim(), 7);
        }
        assert_eq!(axis_points(4).len(), 6);
        assert_eq!(default_points(4, 0).len(), 54);
    }

    #[test]
    fn off_sphere_rejected() {
        assert!(SpherePoint::new(vec![rational(1, 1), rational(1, 1)]).is_err());
    }

    #[test]
    fn seeded_points_reproduce() {
        assert_eq!(random_points(5, 10, 3), random_points(5, 10, 3));
        assert_ne!(random_points(5, 10, 3), random_points(5, 10, 4));
    }
}
