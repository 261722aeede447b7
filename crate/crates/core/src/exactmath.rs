//! Exact integer primitives: primality, p-adic valuations, factorization and
//! floor logarithms of ratios. Nothing here touches floating point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes `p <= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// The infinite ascending sequence 2, 3, 5, 7, ...
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

/// The smallest prime strictly greater than `p`.
pub fn next_prime(p: u64) -> u64 {
    (p + 1..)
        .find(|&n| is_prime(n))
        .expect("primes are unbounded")
}

fn check_base(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Exponent of the prime `p` in `m`.
pub fn nu(p: u64, m: u64) -> Result<u64> {
    check_base(p)?;
    if m == 0 {
        return Err(Error::Zero);
    }
    Ok(valuation(p, m))
}

/// Exponent of the prime `p` in an arbitrary-precision `m`.
pub fn nu_big(p: u64, m: &BigUint) -> Result<u64> {
    check_base(p)?;
    if m.is_zero() {
        return Err(Error::Zero);
    }
    if p == 2 {
        return Ok(m.trailing_zeros().unwrap_or(0));
    }
    let p = BigUint::from(p);
    let mut m = m.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

/// Unchecked valuation for callers that already know `p >= 2` and `m >= 1`.
pub(crate) fn valuation(p: u64, mut m: u64) -> u64 {
    debug_assert!(p >= 2 && m >= 1);
    if p == 2 {
        return u64::from(m.trailing_zeros());
    }
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// Largest `e >= 0` with `p^e * den <= num`, by exact integer comparison.
pub fn floor_log_ratio(p: u64, num: u64, den: u64) -> Result<u64> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    if den == 0 {
        return Err(Error::Zero);
    }
    if num < den {
        return Err(Error::LogDomain { num, den });
    }
    let (num, p) = (u128::from(num), u128::from(p));
    let mut scaled = u128::from(den);
    let mut e = 0;
    while let Some(next) = scaled.checked_mul(p) {
        if next > num {
            break;
        }
        scaled = next;
        e += 1;
    }
    Ok(e)
}

/// A positive integer together with its complete prime factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigUint,
    factors: BTreeMap<u64, u64>,
}

impl FactoredInteger {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &BTreeMap<u64, u64> {
        &self.factors
    }

    /// Exponent of `p`; zero for primes absent from the factorization.
    pub fn exponent(&self, p: u64) -> u64 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn is_even(&self) -> bool {
        self.exponent(2) > 0
    }

    /// Build from a prime-to-exponent map, validating every key.
    pub fn from_factors(factors: BTreeMap<u64, u64>) -> Result<Self> {
        let mut value = BigUint::one();
        let mut clean = BTreeMap::new();
        for (&p, &e) in &factors {
            check_base(p)?;
            if e > 0 {
                value *= BigUint::from(p).pow(e as u32);
                clean.insert(p, e);
            }
        }
        Ok(Self {
            value,
            factors: clean,
        })
    }

    /// Product of two factored integers (exponents add).
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self {
            value: &self.value * &other.value,
            factors,
        }
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if !self.factors.is_empty() {
            let parts: Vec<String> = self
                .factors
                .iter()
                .map(|(p, e)| {
                    if *e == 1 {
                        p.to_string()
                    } else {
                        format!("{p}^{e}")
                    }
                })
                .collect();
            write!(f, " = {}", parts.join(" * "))?;
        }
        Ok(())
    }
}

fn factorize_u64(mut n: u64) -> BTreeMap<u64, u64> {
    let mut factors = BTreeMap::new();
    let tz = n.trailing_zeros();
    if tz > 0 {
        factors.insert(2, u64::from(tz));
        n >>= tz;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            factors.insert(d, e);
        }
        d += 2;
    }
    if n > 1 {
        factors.insert(n, 1);
    }
    factors
}

/// Complete factorization by trial division.
pub fn factorize(n: &BigUint) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let factors = match n.to_u64() {
        Some(small) => factorize_u64(small),
        None => {
            let mut rest = n.clone();
            let mut factors = BTreeMap::new();
            let mut d = 2u64;
            loop {
                if let Some(small) = rest.to_u64() {
                    for (p, e) in factorize_u64(small) {
                        *factors.entry(p).or_insert(0) += e;
                    }
                    break;
                }
                let divisor = BigUint::from(d);
                let mut e = 0;
                loop {
                    let (q, r) = rest.div_rem(&divisor);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    factors.insert(d, e);
                }
                d = if d == 2 { 3 } else { d + 2 };
            }
            factors
        }
    };
    Ok(FactoredInteger {
        value: n.clone(),
        factors,
    })
}

/// Convenience wrapper over [`factorize`] for machine integers.
pub fn factorize_int(n: u64) -> Result<FactoredInteger> {
    factorize(&BigUint::from(n))
}

/// Largest `r` such that the first `r` primes all divide `n`.
pub fn prime_prefix_length(n: &FactoredInteger) -> usize {
    primes().take_while(|&p| n.exponent(p) > 0).count()
}
