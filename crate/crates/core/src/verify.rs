//! Range sweeps and certification runs shared by the CLI and the test suites.
//! Each run reports the first counterexample in index order, independent of
//! how the work is split across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{run_identity_trials, Identity};
use crate::error::{Error, Result};
use crate::exactmath::{factorize_int, primes_up_to};
use crate::fields::{
    example4, hurwitz_radon_check, is_vector_field, lift, orthogonal_design_check, random_points,
    sampled_independence, FieldFamily, LiftDirection, LinearField, RatMatrix,
};
use crate::james::{nu_full, nu_refined, FieldTag};
use crate::rho::{
    first_failure, relation_check, rho_oracle, rho_theorem8, theorem9_delta, Counterexample,
    RelationKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Lemma7,
    Theorem8,
    Theorem9,
    Ss73,
    AwParity,
    Corollary6,
    Adams,
    Identities,
    Example4,
    Lift,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Lemma7,
        Check::Theorem8,
        Check::Theorem9,
        Check::Ss73,
        Check::AwParity,
        Check::Corollary6,
        Check::Adams,
        Check::Identities,
        Check::Example4,
        Check::Lift,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Lemma7 => "lemma7",
            Check::Theorem8 => "theorem8",
            Check::Theorem9 => "theorem9",
            Check::Ss73 => "ss73",
            Check::AwParity => "aw-parity",
            Check::Corollary6 => "corollary6",
            Check::Adams => "adams",
            Check::Identities => "identities",
            Check::Example4 => "example4",
            Check::Lift => "lift",
        })
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub passed: bool,
    pub summary: String,
    pub counterexample: Option<Counterexample>,
}

impl CheckOutcome {
    fn from_sweep(check: Check, summary: String, counterexample: Option<Counterexample>) -> Self {
        Self {
            check,
            passed: counterexample.is_none(),
            summary,
            counterexample,
        }
    }
}

/// Inclusive index ranges and trial counts for every check. The defaults are
/// the acceptance ranges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub n_range: (u64, u64),
    pub m_max: u64,
    pub ss73_range: (u64, u64),
    pub parity_range: (u64, u64),
    pub trials: usize,
    pub seed: u64,
    pub identity_dims: Vec<usize>,
    pub example4_real_dims: Vec<usize>,
    pub sample_points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_range: (1, 100_000),
            m_max: 200,
            ss73_range: (0, 100),
            parity_range: (1, 100),
            trials: 1000,
            seed: 42,
            identity_dims: vec![1, 2, 3, 5],
            example4_real_dims: vec![4, 8, 16, 32, 64],
            sample_points: 100,
        }
    }
}

fn lemma7_at(m: u64) -> Option<String> {
    for p in primes_up_to(2 * m + 1) {
        for field in [FieldTag::C, FieldTag::H] {
            let full = nu_full(field, p, m);
            let refined = nu_refined(field, p, m).expect("C and H are supported");
            if full != refined {
                return Some(format!(
                    "field {field}, p = {p}: full = {full}, refined = {refined}"
                ));
            }
        }
    }
    None
}

/// Refined valuations equal the full ones for all `1 <= m <= m_max`, all primes `p <= 2m + 1`.
pub fn lemma7(m_max: u64) -> CheckOutcome {
    let cx = if m_max == 0 {
        None
    } else {
        first_failure(1, m_max, lemma7_at)
    };
    CheckOutcome::from_sweep(
        Check::Lemma7,
        format!("nu_refined = nu_full for C and H, 1 <= m <= {m_max}, p <= 2m+1"),
        cx,
    )
}

fn theorem8_at(n: u64) -> Option<String> {
    let f = factorize_int(n).ok()?;
    for field in [FieldTag::C, FieldTag::H] {
        let direct = rho_theorem8(field, &f).expect("C and H are supported");
        let oracle = rho_oracle(field, &f);
        if direct != oracle {
            return Some(format!(
                "field {field}: direct = {direct}, oracle = {oracle}"
            ));
        }
    }
    None
}

/// Direct formula equals the divisibility oracle for C and H on every `n` in range.
pub fn theorem8(lo: u64, hi: u64) -> Result<CheckOutcome> {
    check_range(lo, hi)?;
    Ok(CheckOutcome::from_sweep(
        Check::Theorem8,
        format!("direct = oracle for C and H, {lo} <= n <= {hi}"),
        first_failure(lo, hi, theorem8_at),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem9Summary {
    pub outcome: CheckOutcome,
    pub histogram: BTreeMap<i64, u64>,
}

/// `d = rho^C(C^{2n}) - 2 rho^H(H^n)` lies in {1, 3} and `rho^C(C^{2n})` is odd.
pub fn theorem9(lo: u64, hi: u64) -> Result<Theorem9Summary> {
    check_range(lo, hi)?;
    let records: Vec<std::result::Result<i64, Counterexample>> = (lo..=hi)
        .into_par_iter()
        .map(|n| {
            let fail = |detail: String| Counterexample { at: n, detail };
            let f = factorize_int(n).map_err(|e| fail(e.to_string()))?;
            let rec = theorem9_delta(&f).map_err(|e| fail(e.to_string()))?;
            if rec.rho_c_2n % 2 == 0 {
                return Err(fail(format!(
                    "rho^C(C^{}) = {} is even",
                    2 * n,
                    rec.rho_c_2n
                )));
            }
            Ok(rec.d)
        })
        .collect();
    let mut histogram = BTreeMap::new();
    let mut counterexample = None;
    for r in records {
        match r {
            Ok(d) => *histogram.entry(d).or_insert(0) += 1,
            Err(cx) => {
                counterexample.get_or_insert(cx);
            }
        }
    }
    let hist: Vec<String> = histogram
        .iter()
        .map(|(d, c)| format!("d={d}: {c}"))
        .collect();
    Ok(Theorem9Summary {
        outcome: CheckOutcome::from_sweep(
            Check::Theorem9,
            format!("d in {{1, 3}} for {lo} <= n <= {hi} ({})", hist.join(", ")),
            counterexample,
        ),
        histogram,
    })
}

pub fn relation(check: Check, lo: u64, hi: u64) -> Result<CheckOutcome> {
    let kind = match check {
        Check::Ss73 => RelationKind::Ss73,
        Check::AwParity => RelationKind::AwOddEven,
        Check::Corollary6 => RelationKind::Corollary6,
        Check::Adams => RelationKind::AdamsConsistency,
        other => {
            return Err(Error::InvalidArgument(format!(
                "{other} is not a relation check"
            )))
        }
    };
    let report = relation_check(kind, lo, hi)?;
    Ok(CheckOutcome::from_sweep(
        check,
        format!("{kind} over {lo}..={hi}"),
        report.counterexample,
    ))
}

/// Seeded exact trials of all six identities.
pub fn identities(trials: usize, seed: u64, dims: &[usize]) -> Result<CheckOutcome> {
    let reports = Identity::ALL
        .par_iter()
        .map(|&id| run_identity_trials(id, trials, seed, dims))
        .collect::<Result<Vec<_>>>()?;
    let cx = reports
        .iter()
        .find(|r| !r.passed())
        .map(|r| Counterexample {
            at: r.first_failure.unwrap_or(0) as u64,
            detail: format!("{} failed at trial {:?}", r.identity, r.first_failure),
        });
    Ok(CheckOutcome::from_sweep(
        Check::Identities,
        format!(
            "{trials} seeded trials (seed {seed}) of each of {} identities, dims {dims:?}",
            reports.len()
        ),
        cx,
    ))
}

fn example4_at(real_dim: usize, points: usize, seed: u64) -> Result<Option<String>> {
    if !real_dim.is_multiple_of(2) {
        return Err(Error::BadLength {
            len: real_dim,
            modulus: 2,
        });
    }
    let (m1, m2) = example4(real_dim / 2)?;
    for m in [&m1, &m2] {
        let cert = is_vector_field(m);
        if !cert.is_field() {
            return Ok(Some(format!("{} on R^{real_dim}: {cert}", m.name)));
        }
    }
    let pair = FieldFamily::new(FieldTag::R, vec![m1, m2])?;
    if !hurwitz_radon_check(&pair) {
        return Ok(Some(format!("pair on R^{real_dim} fails Hurwitz-Radon")));
    }
    let sampled = sampled_independence(&pair, &random_points(real_dim, points, seed))?;
    Ok(sampled.witness.map(|w| {
        format!(
            "R^{real_dim}: Gram determinant {} at point {}",
            w.gram_determinant, w.point_index
        )
    }))
}

/// Both paired complex-field matrices are fields, Hurwitz–Radon, and independent at sample points.
pub fn example4_certification(
    real_dims: &[usize],
    points: usize,
    seed: u64,
) -> Result<CheckOutcome> {
    let results = real_dims
        .par_iter()
        .map(|&d| example4_at(d, points, seed).map(|r| (d, r)))
        .collect::<Result<Vec<_>>>()?;
    let cx = results.into_iter().find_map(|(d, r)| {
        r.map(|detail| Counterexample {
            at: d as u64,
            detail,
        })
    });
    Ok(CheckOutcome::from_sweep(
        Check::Example4,
        format!("paired complex field certified on R^N for N in {real_dims:?} at {points} points"),
        cx,
    ))
}

/// The quaternionic structure on `H^1` (the identity field) lifted to `R^4`.
pub fn quaternionic_structure_family() -> FieldFamily {
    FieldFamily::new(
        FieldTag::H,
        vec![LinearField::new("1", RatMatrix::identity(4))],
    )
    .expect("4 is divisible by 4")
}

/// Lifting the quaternionic structure on `H^1` gives `{1, i, j, k}` on `R^4`:
/// four members satisfying the Hurwitz matrix equations, the three
/// non-identity members forming a tangent Hurwitz–Radon family.
pub fn lift_contract() -> Result<CheckOutcome> {
    let lifted = lift(&quaternionic_structure_family(), LiftDirection::HToR)?;
    let tangent = FieldFamily::new(FieldTag::R, lifted.members()[1..].to_vec())?;
    let cx = if lifted.len() != 4 {
        Some(format!(
            "lift produced {} members, expected 4",
            lifted.len()
        ))
    } else if !orthogonal_design_check(&lifted) {
        Some("lifted family fails the Hurwitz matrix equations".to_string())
    } else if !hurwitz_radon_check(&tangent) {
        Some("i, j, k composites fail the tangent Hurwitz-Radon check".to_string())
    } else {
        None
    }
    .map(|detail| Counterexample { at: 1, detail });
    Ok(CheckOutcome::from_sweep(
        Check::Lift,
        "H^1 structure lifted to {1, i, j, k} on R^4: Hurwitz matrix equations hold, \
         i, j, k composites are a Hurwitz-Radon family"
            .to_string(),
        cx,
    ))
}

fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidArgument(format!("invalid range {lo}:{hi}")));
    }
    Ok(())
}

/// Run one check with the ranges from `config`.
pub fn run(check: Check, config: &VerifyConfig) -> Result<CheckOutcome> {
    let (lo, hi) = config.n_range;
    match check {
        Check::Lemma7 => Ok(lemma7(config.m_max)),
        Check::Theorem8 => theorem8(lo, hi),
        Check::Theorem9 => theorem9(lo, hi).map(|s| s.outcome),
        Check::Ss73 => relation(check, config.ss73_range.0, config.ss73_range.1),
        Check::AwParity => relation(check, config.parity_range.0, config.parity_range.1),
        Check::Corollary6 | Check::Adams => relation(check, lo, hi),
        Check::Identities => identities(config.trials, config.seed, &config.identity_dims),
        Check::Example4 => example4_certification(
            &config.example4_real_dims,
            config.sample_points,
            config.seed,
        ),
        Check::Lift => lift_contract(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        assert!(lemma7(30).passed);
        assert!(theorem8(1, 2000).unwrap().passed);
        let t9 = theorem9(1, 2000).unwrap();
        assert!(t9.outcome.passed);
        assert_eq!(t9.histogram.keys().copied().collect::<Vec<_>>(), vec![1, 3]);
        assert!(relation(Check::Ss73, 0, 20).unwrap().passed);
        assert!(identities(20, 1, &[1, 2]).unwrap().passed);
        assert!(example4_certification(&[4, 8], 10, 0).unwrap().passed);
        assert!(lift_contract().unwrap().passed);
    }

    #[test]
    fn bad_ranges() {
        assert!(theorem8(0, 10).is_err());
        assert!(theorem9(5, 4).is_err());
        assert!(relation(Check::Lemma7, 1, 2).is_err());
        assert!(example4_certification(&[6], 5, 0).is_err());
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.to_string().parse::<Check>().unwrap(), c);
        }
    }
}
