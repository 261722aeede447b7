//! The maximal number `rho^F(F^n)` of linearly independent `F`-vector fields
//! on the unit sphere of `F^n`, computed three ways:
//!
//! * Adams' closed form `8d + 2^c - 1` (real case only),
//! * the direct minimum over `K_{n,i}` built from the leading primes of `n`
//!   (complex and quaternionic cases),
//! * the divisibility oracle: the largest `m` with `c_m^F | n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{factorize_int, primes, FactoredInteger};
use crate::james::{divides, nu_full, profile, FieldTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    AdamsClosedForm,
    Theorem8,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::AdamsClosedForm => "adams_closed_form",
            Method::Theorem8 => "theorem8",
            Method::Oracle => "oracle",
        })
    }
}

fn as_decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoResult {
    pub field: FieldTag,
    #[serde(serialize_with = "as_decimal")]
    pub n: BigUint,
    pub value: u64,
    pub method: Method,
}

/// `rho^R(R^n) = 8d + 2^c - 1` where `nu_2(n) = 4d + c`, `0 <= c <= 3`.
pub fn rho_real_adams(n: &FactoredInteger) -> u64 {
    let e = n.exponent(2);
    if e == 0 {
        return 0;
    }
    let (d, c) = (e / 4, e % 4);
    8 * d + (1 << c) - 1
}

/// Largest `m` such that `c_m^F` divides `n`.
pub fn rho_oracle(field: FieldTag, n: &FactoredInteger) -> u64 {
    // Valuations are nondecreasing in m and nu_2(c_m^F) is unbounded, so the
    // first failure ends the scan.
    let mut m = 0;
    while divides(&profile(field, m + 1), n) {
        m += 1;
    }
    m
}

/// Direct formula: minimum over the leading primes `p_i | n` of the largest
/// admissible index `K_{n,i}`, where the admissible range is capped by the
/// first prime `p_{r+1}` not dividing `n`.
pub fn rho_theorem8(field: FieldTag, n: &FactoredInteger) -> Result<u64> {
    if field == FieldTag::R {
        return Err(Error::UnsupportedField(field));
    }
    let leading: Vec<u64> = primes().take_while(|&p| n.exponent(p) > 0).collect();
    let Some(&last) = leading.last() else {
        return Ok(0);
    };
    let first_missing = crate::exactmath::next_prime(last);
    let cap = match field {
        FieldTag::C => first_missing - 2,
        _ => (first_missing - 3) / 2,
    };
    let k = leading
        .iter()
        .map(|&p| {
            let t = n.exponent(p);
            (0..=cap)
                .rev()
                .find(|&m| nu_full(field, p, m) <= t)
                .unwrap_or(0)
        })
        .min()
        .unwrap_or(0);
    Ok(k)
}

pub fn rho(field: FieldTag, n: &FactoredInteger, method: Method) -> Result<RhoResult> {
    let value = match method {
        Method::AdamsClosedForm if field == FieldTag::R => rho_real_adams(n),
        Method::AdamsClosedForm => return Err(Error::UnsupportedField(field)),
        Method::Theorem8 => rho_theorem8(field, n)?,
        Method::Oracle => rho_oracle(field, n),
    };
    Ok(RhoResult {
        field,
        n: n.value().clone(),
        value,
        method,
    })
}

/// The closed-form route for the field: Adams for R, the direct formula otherwise.
pub fn rho_direct(field: FieldTag, n: &FactoredInteger) -> u64 {
    match field {
        FieldTag::R => rho_real_adams(n),
        _ => rho_theorem8(field, n).expect("C and H are supported"),
    }
}

/// Every applicable route for the field, in a fixed order.
pub fn all_methods(field: FieldTag) -> &'static [Method] {
    match field {
        FieldTag::R => &[Method::AdamsClosedForm, Method::Oracle],
        _ => &[Method::Theorem8, Method::Oracle],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem9Record {
    #[serde(serialize_with = "as_decimal")]
    pub n: BigUint,
    pub rho_c_2n: u64,
    pub rho_h_n: u64,
    pub d: i64,
}

/// `rho^C(C^{2n}) - 2 rho^H(H^n)`, cross-checked against the oracle.
pub fn theorem9_delta(n: &FactoredInteger) -> Result<Theorem9Record> {
    let two_n = n.mul(&factorize_int(2)?);
    let rho_c_2n = rho_theorem8(FieldTag::C, &two_n)?;
    let rho_h_n = rho_theorem8(FieldTag::H, n)?;
    let oracle_c = rho_oracle(FieldTag::C, &two_n);
    let oracle_h = rho_oracle(FieldTag::H, n);
    if (rho_c_2n, rho_h_n) != (oracle_c, oracle_h) {
        return Err(Error::Invariant(format!(
            "n = {}: direct (C, H) = ({rho_c_2n}, {rho_h_n}) but oracle = ({oracle_c}, {oracle_h})",
            n.value()
        )));
    }
    let d = rho_c_2n as i64 - 2 * rho_h_n as i64;
    if d != 1 && d != 3 {
        return Err(Error::Invariant(format!("n = {}: d = {d}", n.value())));
    }
    Ok(Theorem9Record {
        n: n.value().clone(),
        rho_c_2n,
        rho_h_n,
        d,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `c_{m+1}^H` equals `c_{2m+3}^C` or half of it.
    Ss73,
    /// `c_{2k+1}^C = c_{2k}^C`.
    AwOddEven,
    /// `rho^R(R^{2n}) >= 2 rho^C(C^n)` and `rho^C(C^{2n}) >= 2 rho^H(H^n)`.
    Corollary6,
    /// Adams closed form against the oracle.
    AdamsConsistency,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Ss73 => "ss73",
            RelationKind::AwOddEven => "aw_odd_even",
            RelationKind::Corollary6 => "corollary6",
            RelationKind::AdamsConsistency => "adams_consistency",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub at: u64,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.at, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub kind: RelationKind,
    pub lo: u64,
    pub hi: u64,
    pub counterexample: Option<Counterexample>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Run `check` over `lo..=hi` in parallel; the lowest failing index wins.
pub(crate) fn first_failure<F>(lo: u64, hi: u64, check: F) -> Option<Counterexample>
where
    F: Fn(u64) -> Option<String> + Sync,
{
    (lo..=hi)
        .into_par_iter()
        .find_map_first(|i| check(i).map(|detail| Counterexample { at: i, detail }))
}

fn ss73_at(m: u64) -> Option<String> {
    let h = profile(FieldTag::H, m + 1);
    let c = profile(FieldTag::C, 2 * m + 3);
    let odd_primes = h
        .valuations
        .keys()
        .chain(c.valuations.keys())
        .filter(|&&p| p != 2);
    for &p in odd_primes {
        if h.valuation(p) != c.valuation(p) {
            return Some(format!(
                "nu_{p}(c_{}^H) = {} but nu_{p}(c_{}^C) = {}",
                m + 1,
                h.valuation(p),
                2 * m + 3,
                c.valuation(p)
            ));
        }
    }
    let gap = h.valuation(2) as i64 - c.valuation(2) as i64;
    if gap != 0 && gap != -1 {
        return Some(format!(
            "nu_2(c_{}^H) - nu_2(c_{}^C) = {gap}",
            m + 1,
            2 * m + 3
        ));
    }
    None
}

fn aw_odd_even_at(k: u64) -> Option<String> {
    let even = profile(FieldTag::C, 2 * k);
    let odd = profile(FieldTag::C, 2 * k + 1);
    (even.valuations != odd.valuations).then(|| format!("{even} but {odd}"))
}

fn corollary6_at(n: u64) -> Option<String> {
    let f = factorize_int(n).ok()?;
    let f2 = factorize_int(2 * n).ok()?;
    let (r2n, cn) = (rho_oracle(FieldTag::R, &f2), rho_oracle(FieldTag::C, &f));
    if r2n < 2 * cn {
        return Some(format!(
            "rho^R(R^{}) = {r2n} < 2 * rho^C(C^{n}) = {}",
            2 * n,
            2 * cn
        ));
    }
    let (c2n, hn) = (rho_oracle(FieldTag::C, &f2), rho_oracle(FieldTag::H, &f));
    if c2n < 2 * hn {
        return Some(format!(
            "rho^C(C^{}) = {c2n} < 2 * rho^H(H^{n}) = {}",
            2 * n,
            2 * hn
        ));
    }
    None
}

fn adams_at(n: u64) -> Option<String> {
    let f = factorize_int(n).ok()?;
    let (closed, oracle) = (rho_real_adams(&f), rho_oracle(FieldTag::R, &f));
    (closed != oracle).then(|| format!("adams = {closed}, oracle = {oracle}"))
}

/// Check one of the inter-field relations over the inclusive range `lo..=hi`.
///
/// The range indexes `m` for `Ss73`, `k >= 1` for `AwOddEven`, and `n >= 1`
/// otherwise.
pub fn relation_check(kind: RelationKind, lo: u64, hi: u64) -> Result<RelationReport> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}:{hi}")));
    }
    let needs_positive = !matches!(kind, RelationKind::Ss73);
    if needs_positive && lo == 0 {
        return Err(Error::InvalidArgument(format!("{kind} needs indices >= 1")));
    }
    let counterexample = match kind {
        RelationKind::Ss73 => first_failure(lo, hi, ss73_at),
        RelationKind::AwOddEven => first_failure(lo, hi, aw_odd_even_at),
        RelationKind::Corollary6 => first_failure(lo, hi, corollary6_at),
        RelationKind::AdamsConsistency => first_failure(lo, hi, adams_at),
    };
    Ok(RelationReport {
        kind,
        lo,
        hi,
        counterexample,
    })
}

/// Columns of the comparison table: the row for `n` holds
/// `rho^R(R^{4n})`, `rho^C(C^{2n})` and `rho^H(H^n)`.
pub const TABLE_COLUMNS: [u64; 7] = [1, 2, 4, 6, 12, 24, 1440];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(serialize_with = "as_decimal")]
    pub n: BigUint,
    #[serde(rename = "rho_R_4n")]
    pub rho_r_4n: u64,
    #[serde(rename = "rho_C_2n")]
    pub rho_c_2n: u64,
    #[serde(rename = "rho_H_n")]
    pub rho_h_n: u64,
}

pub fn table_row(n: &FactoredInteger) -> Result<TableRow> {
    if n.value().is_zero() {
        return Err(Error::Zero);
    }
    let two = FactoredInteger::from_factors([(2, 1)].into())?;
    let four = FactoredInteger::from_factors([(2, 2)].into())?;
    Ok(TableRow {
        n: n.value().clone(),
        rho_r_4n: rho_real_adams(&n.mul(&four)),
        rho_c_2n: rho_theorem8(FieldTag::C, &n.mul(&two))?,
        rho_h_n: rho_theorem8(FieldTag::H, n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64) -> FactoredInteger {
        factorize_int(n).unwrap()
    }

    #[test]
    fn adams_examples() {
        assert_eq!(rho_real_adams(&f(16)), 8);
        assert_eq!(rho_real_adams(&f(96)), 9);
        assert_eq!(rho_real_adams(&f(5760)), 15);
        assert_eq!(rho_real_adams(&f(7)), 0);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(rho_oracle(FieldTag::C, &f(24)), 3);
        assert_eq!(rho_oracle(FieldTag::H, &f(1440)), 2);
        assert_eq!(rho_oracle(FieldTag::R, &f(8)), 7);
    }

    #[test]
    fn theorem8_examples() {
        assert_eq!(rho_theorem8(FieldTag::C, &f(2880)).unwrap(), 5);
        assert_eq!(rho_theorem8(FieldTag::H, &f(24)).unwrap(), 1);
        assert_eq!(rho_theorem8(FieldTag::C, &f(2)).unwrap(), 1);
        assert_eq!(rho_theorem8(FieldTag::H, &f(15)).unwrap(), 0);
        assert_eq!(
            rho_theorem8(FieldTag::R, &f(4)),
            Err(Error::UnsupportedField(FieldTag::R))
        );
    }

    #[test]
    fn theorem9_examples() {
        assert_eq!(theorem9_delta(&f(24)).unwrap().d, 1);
        let r12 = theorem9_delta(&f(12)).unwrap();
        assert_eq!((r12.rho_c_2n, r12.rho_h_n, r12.d), (3, 0, 3));
        let r1440 = theorem9_delta(&f(1440)).unwrap();
        assert_eq!((r1440.rho_c_2n, r1440.rho_h_n, r1440.d), (5, 2, 1));
    }

    #[test]
    fn relation_examples() {
        assert!(relation_check(RelationKind::Ss73, 0, 0).unwrap().passed());
        assert!(relation_check(RelationKind::Ss73, 1, 1).unwrap().passed());
        assert!(relation_check(RelationKind::Corollary6, 1, 100)
            .unwrap()
            .passed());
        assert!(relation_check(RelationKind::AwOddEven, 1, 20)
            .unwrap()
            .passed());
        assert!(relation_check(RelationKind::AdamsConsistency, 1, 500)
            .unwrap()
            .passed());
        assert!(relation_check(RelationKind::Corollary6, 0, 3).is_err());
        assert!(relation_check(RelationKind::Ss73, 3, 2).is_err());
    }

    #[test]
    fn ss73_witness_values() {
        // c_1^H = 24 = c_3^C and c_2^H = 1440 = c_5^C / 2
        assert_eq!(
            profile(FieldTag::H, 1).value(),
            profile(FieldTag::C, 3).value()
        );
        assert_eq!(
            profile(FieldTag::H, 2).value() * 2u32,
            profile(FieldTag::C, 5).value()
        );
    }

    #[test]
    fn method_dispatch() {
        let r = rho(FieldTag::H, &f(1440), Method::Oracle).unwrap();
        assert_eq!(r.value, 2);
        assert!(rho(FieldTag::C, &f(4), Method::AdamsClosedForm).is_err());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"field":"H","n":"1440","value":2,"method":"oracle"}"#
        );
    }

    #[test]
    fn comparison_table() {
        let expected = [
            (1, 3, 1, 0),
            (2, 7, 1, 0),
            (4, 8, 1, 0),
            (6, 7, 1, 0),
            (12, 8, 3, 0),
            (24, 9, 3, 1),
            (1440, 15, 5, 2),
        ];
        for (n, r, c, h) in expected {
            let row = table_row(&factorize_int(n).unwrap()).unwrap();
            assert_eq!(
                (row.rho_r_4n, row.rho_c_2n, row.rho_h_n),
                (r, c, h),
                "n = {n}"
            );
        }
        assert_eq!(TABLE_COLUMNS.to_vec(), expected.map(|e| e.0).to_vec());
    }
}
