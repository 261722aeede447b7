use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use sphere_fields::fields::{LiftDirection, Target};
use sphere_fields::rho::Method;
use sphere_fields::verify::Check;
use sphere_fields::FieldTag;

/// Vector fields on spheres over R, C and H: exact counts, James numbers,
/// explicit constructions and certificates.
#[derive(Debug, Parser)]
#[command(name = "sphere-fields", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal number of independent F-vector fields on S(F^n).
    Rho(RhoArgs),
    /// Prime valuations of the James number c_m^F.
    James(JamesArgs),
    /// rho^R(R^4n), rho^C(C^2n) and rho^H(H^n) side by side.
    Table(TableArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Build a field family file.
    Construct(ConstructArgs),
    /// Certify a field family file.
    CheckFamily(CheckFamilyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(alias = "adams")]
    AdamsClosedForm,
    Theorem8,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::AdamsClosedForm => Method::AdamsClosedForm,
            MethodArg::Theorem8 => Method::Theorem8,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    None,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "H_via_c", alias = "h-via-c")]
    HViaC,
    #[value(name = "H_via_r", alias = "h-via-r")]
    HViaR,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::None => Target::None,
            TargetArg::C => Target::C,
            TargetArg::HViaC => Target::HViaC,
            TargetArg::HViaR => Target::HViaR,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Example4,
    Lift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

fn parse_field(s: &str) -> Result<FieldTag, String> {
    s.parse().map_err(|e: sphere_fields::Error| e.to_string())
}

fn parse_positive(s: &str) -> Result<BigUint, String> {
    let n: BigUint = s
        .parse()
        .map_err(|_| format!("not a non-negative integer: '{s}'"))?;
    if n == BigUint::from(0u8) {
        return Err("n must be at least 1".to_string());
    }
    Ok(n)
}

pub fn parse_range(s: &str) -> Result<Range, String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got '{s}'"))?;
    let lo: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start '{a}'"))?;
    let hi: u64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end '{b}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(Range { lo, hi })
}

/// A single check, or every check with the acceptance defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckArg {
    One(Check),
    All,
}

fn parse_check(s: &str) -> Result<CheckArg, String> {
    if s == "all" {
        return Ok(CheckArg::All);
    }
    s.parse()
        .map(CheckArg::One)
        .map_err(|e: sphere_fields::Error| e.to_string())
}

fn parse_direction(s: &str) -> Result<LiftDirection, String> {
    s.parse().map_err(|e: sphere_fields::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    #[arg(long, value_parser = parse_field)]
    pub field: FieldTag,
    #[arg(long, value_parser = parse_positive, conflicts_with = "range", required_unless_present = "range")]
    pub n: Option<BigUint>,
    /// Inclusive range A:B of n.
    #[arg(long, value_parser = parse_range)]
    pub range: Option<Range>,
    /// Defaults to the closed form (Adams for R, the direct formula for C and H).
    #[arg(long, value_enum, conflicts_with = "all_methods")]
    pub method: Option<MethodArg>,
    /// Compute every applicable route and require agreement.
    #[arg(long)]
    pub all_methods: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct JamesArgs {
    #[arg(long, value_parser = parse_field)]
    pub field: FieldTag,
    #[arg(long)]
    pub m: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Comma-separated values of n (defaults to 1,2,4,6,12,24,1440).
    #[arg(long, value_delimiter = ',', value_parser = parse_positive)]
    pub n_list: Vec<BigUint>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lemma7, theorem8, theorem9, ss73, aw-parity, corollary6, adams,
    /// identities, example4, lift or all.
    #[arg(value_parser = parse_check)]
    pub check: CheckArg,
    /// Inclusive range A:B (n, or m for ss73, k for aw-parity).
    #[arg(long, value_parser = parse_range)]
    pub range: Option<Range>,
    #[arg(long)]
    pub m_max: Option<u64>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random sample points for the example4 certification.
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub what: Construction,
    /// Complex dimension for example4.
    #[arg(long)]
    pub n: Option<usize>,
    /// Family file to lift.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// C_to_R, H_to_C or H_to_R.
    #[arg(long, value_parser = parse_direction)]
    pub direction: Option<LiftDirection>,
    /// Write the family here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckFamilyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "none")]
    pub target: TargetArg,
    /// Random stereographic points, sampled in addition to the axis points.
    #[arg(long, default_value_t = 48)]
    pub points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
