//! Prime valuations of the James numbers `c_m^F` for `F` in {R, C, H}.
//!
//! James numbers grow far too quickly to materialize (the 2-adic part of
//! `c_m^H` alone is at least `2m + 1`), so every number here is held as a
//! finite map from primes to exponents.
//!
//! Two evaluation routes exist for the complex and quaternionic cases: the
//! full maxima over `0 <= s <= floor(m / (p - 1))` and the refined maxima
//! over the short window returned by [`s_set`]. They must agree everywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{floor_log_ratio, primes_up_to, valuation, FactoredInteger};

/// One of the three associative real division algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    R,
    C,
    H,
}

impl FieldTag {
    pub const ALL: [FieldTag; 3] = [FieldTag::R, FieldTag::C, FieldTag::H];

    /// Real dimension of the algebra.
    pub fn real_dim(self) -> usize {
        match self {
            FieldTag::R => 1,
            FieldTag::C => 2,
            FieldTag::H => 4,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::R => "R",
            FieldTag::C => "C",
            FieldTag::H => "H",
        })
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(FieldTag::R),
            "C" | "c" => Ok(FieldTag::C),
            "H" | "h" => Ok(FieldTag::H),
            other => Err(Error::InvalidArgument(format!("unknown field '{other}'"))),
        }
    }
}

/// Count of `q` in `1..=m` with `q mod 8` in {0, 1, 2, 4}.
pub fn f_adams(m: u64) -> u64 {
    let tail = match m % 8 {
        0 => 0,
        1 => 1,
        2 | 3 => 2,
        _ => 3,
    };
    4 * (m / 8) + tail
}

/// `s + nu_p(s)`, with the `s = 0` term contributing 0.
fn term(p: u64, s: u64) -> u64 {
    if s == 0 {
        0
    } else {
        s + valuation(p, s)
    }
}

/// `2s + nu_2(s)`, with the `s = 0` term contributing 0.
fn term_h2(s: u64) -> u64 {
    if s == 0 {
        0
    } else {
        2 * s + valuation(2, s)
    }
}

fn max_term_over(p: u64, lo: u64, hi: u64) -> u64 {
    (lo..=hi).map(|s| term(p, s)).max().unwrap_or(0)
}

/// `nu_p(c_m^F)` from the full classical formulas.
///
/// `p` must be prime. Index 0 gives 0 for every field (`c_0^F = 1`).
pub fn nu_full(field: FieldTag, p: u64, m: u64) -> u64 {
    assert!(p >= 2, "nu_full requires a prime, got {p}");
    if m == 0 {
        return 0;
    }
    match field {
        FieldTag::R => {
            if p == 2 {
                f_adams(m)
            } else {
                0
            }
        }
        FieldTag::C => max_term_over(p, 0, m / (p - 1)),
        FieldTag::H if p == 2 => (0..=m).map(term_h2).max().unwrap_or(0).max(2 * m + 1),
        FieldTag::H => max_term_over(p, 0, 2 * m / (p - 1)),
    }
}

/// Inclusive integer window `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SRange {
    pub lo: u64,
    pub hi: u64,
}

impl SRange {
    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

/// The window of indices that can realize the maximum in the complex formula.
///
/// With `F = floor(m / (p-1))` and `L = floor(log_p(m / (p-1)))` this is
/// `[F + nu_p(F) - L, F]`, or `[0, 0]` when `p > m + 1`.
pub fn s_set(m: u64, p: u64) -> SRange {
    assert!(p >= 2, "s_set requires a prime, got {p}");
    if m == 0 || p > m + 1 {
        return SRange { lo: 0, hi: 0 };
    }
    let top = m / (p - 1);
    let log = floor_log_ratio(p, m, p - 1).expect("p <= m + 1 keeps the ratio >= 1");
    let lo = top + valuation(p, top) - log;
    SRange { lo, hi: top }
}

/// `nu_p(c_m^F)` for `F` in {C, H} evaluated only over [`s_set`].
pub fn nu_refined(field: FieldTag, p: u64, m: u64) -> Result<u64> {
    assert!(p >= 2, "nu_refined requires a prime, got {p}");
    if m == 0 {
        return Ok(0);
    }
    let value = match field {
        FieldTag::R => return Err(Error::UnsupportedField(FieldTag::R)),
        FieldTag::C => s_set(m, p).iter().map(|s| term(p, s)).max().unwrap_or(0),
        FieldTag::H if p == 2 => s_set(m, 2)
            .iter()
            .map(term_h2)
            .max()
            .unwrap_or(0)
            .max(2 * m + 1),
        FieldTag::H => s_set(2 * m, p)
            .iter()
            .map(|s| term(p, s))
            .max()
            .unwrap_or(0),
    };
    Ok(value)
}

/// Largest prime that can divide `c_m^F`.
pub fn support_bound(field: FieldTag, m: u64) -> u64 {
    match field {
        FieldTag::R => 2,
        FieldTag::C => m + 1,
        FieldTag::H => 2 * m + 1,
    }
}

/// The James number `c_m^F` as a prime-to-valuation map with zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JamesProfile {
    pub field: FieldTag,
    pub m: u64,
    pub valuations: BTreeMap<u64, u64>,
}

impl JamesProfile {
    pub fn valuation(&self, p: u64) -> u64 {
        self.valuations.get(&p).copied().unwrap_or(0)
    }

    /// The number itself, for small indices where that is still printable.
    pub fn value(&self) -> num_bigint::BigUint {
        self.valuations
            .iter()
            .map(|(&p, &e)| num_bigint::BigUint::from(p).pow(e as u32))
            .product()
    }
}

impl fmt::Display for JamesProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c_{}^{} = ", self.m, self.field)?;
        if self.valuations.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .valuations
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

pub fn profile(field: FieldTag, m: u64) -> JamesProfile {
    let valuations = if m == 0 {
        BTreeMap::new()
    } else {
        primes_up_to(support_bound(field, m))
            .into_iter()
            .map(|p| (p, nu_full(field, p, m)))
            .filter(|&(_, e)| e > 0)
            .collect()
    };
    JamesProfile {
        field,
        m,
        valuations,
    }
}

/// Whether `c` divides `n`.
pub fn divides(c: &JamesProfile, n: &FactoredInteger) -> bool {
    c.valuations.iter().all(|(&p, &e)| e <= n.exponent(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::factorize_int;

    fn f_adams_brute(m: u64) -> u64 {
        (1..=m).filter(|q| matches!(q % 8, 0 | 1 | 2 | 4)).count() as u64
    }

    #[test]
    fn f_adams_examples() {
        assert_eq!(f_adams(1), 1);
        assert_eq!(f_adams(4), 3);
        assert_eq!(f_adams(8), 4);
        for m in 0..500 {
            assert_eq!(f_adams(m), f_adams_brute(m), "m = {m}");
        }
    }

    #[test]
    fn nu_full_examples() {
        assert_eq!(nu_full(FieldTag::C, 2, 2), 3);
        assert_eq!(nu_full(FieldTag::H, 2, 1), 3);
        assert_eq!(nu_full(FieldTag::C, 5, 2), 0);
        assert_eq!(nu_full(FieldTag::H, 2, 2), 5);
        assert_eq!(nu_full(FieldTag::H, 3, 2), 2);
        assert_eq!(nu_full(FieldTag::H, 5, 2), 1);
        assert_eq!(nu_full(FieldTag::R, 3, 9), 0);
        assert_eq!(nu_full(FieldTag::R, 2, 9), 5);
    }

    #[test]
    fn s_set_examples() {
        assert_eq!(s_set(2, 5), SRange { lo: 0, hi: 0 });
        assert_eq!(s_set(4, 2), SRange { lo: 4, hi: 4 });
        assert_eq!(s_set(3, 2), SRange { lo: 2, hi: 3 });
    }

    #[test]
    fn nu_refined_examples() {
        assert_eq!(nu_refined(FieldTag::C, 2, 2).unwrap(), 3);
        assert_eq!(nu_refined(FieldTag::H, 2, 4).unwrap(), 10);
        assert_eq!(nu_full(FieldTag::H, 2, 4), 10);
        assert_eq!(nu_refined(FieldTag::C, 3, 2).unwrap(), 1);
        assert_eq!(nu_full(FieldTag::C, 3, 2), 1);
        assert_eq!(
            nu_refined(FieldTag::R, 2, 2),
            Err(Error::UnsupportedField(FieldTag::R))
        );
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            profile(FieldTag::C, 2).valuations,
            BTreeMap::from([(2, 3), (3, 1)])
        );
        assert!(profile(FieldTag::H, 0).valuations.is_empty());
        assert_eq!(profile(FieldTag::R, 9).valuations, BTreeMap::from([(2, 5)]));
        assert_eq!(profile(FieldTag::H, 1).value(), 24u32.into());
        assert_eq!(profile(FieldTag::H, 2).value(), 1440u32.into());
        assert_eq!(profile(FieldTag::C, 2).to_string(), "c_2^C = 2^3 * 3");
    }

    #[test]
    fn divides_examples() {
        let c1h = profile(FieldTag::H, 1);
        assert!(divides(&c1h, &factorize_int(24).unwrap()));
        assert!(!divides(&c1h, &factorize_int(12).unwrap()));
        let c0 = profile(FieldTag::C, 0);
        for n in [1, 7, 1440] {
            assert!(divides(&c0, &factorize_int(n).unwrap()));
        }
    }

    #[test]
    fn profile_json_shape() {
        let json = serde_json::to_string(&profile(FieldTag::C, 2)).unwrap();
        assert_eq!(json, r#"{"field":"C","m":2,"valuations":{"2":3,"3":1}}"#);
        let back: JamesProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, profile(FieldTag::C, 2));
    }

    #[test]
    fn field_tag_parsing() {
        assert_eq!("h".parse::<FieldTag>().unwrap(), FieldTag::H);
        assert_eq!("C".parse::<FieldTag>().unwrap(), FieldTag::C);
        assert!("q".parse::<FieldTag>().is_err());
    }
}
