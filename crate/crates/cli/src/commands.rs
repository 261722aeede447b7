use std::fs;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigUint;
use sphere_fields::fields::{
    example4, hurwitz_radon_check, is_vector_field, lift, sample_points, theorem10_check,
    FamilyReport, FieldFamily,
};
use sphere_fields::rho::{all_methods, table_row, Method, RhoResult, TABLE_COLUMNS};
use sphere_fields::verify::{self, Check, CheckOutcome, VerifyConfig};
use sphere_fields::{factorize, profile, Error, FieldTag};

use crate::args::{
    CheckArg, CheckFamilyArgs, ConstructArgs, Construction, Format, JamesArgs, RhoArgs, TableArgs,
    VerifyArgs,
};
use crate::render;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input files; exit code 2.
    Usage(String),
    /// A mathematical check failed in a way that is not a normal report; exit code 1.
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(msg) => Failure::Counterexample(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn default_method(field: FieldTag) -> Method {
    match field {
        FieldTag::R => Method::AdamsClosedForm,
        _ => Method::Theorem8,
    }
}

pub fn rho(a: &RhoArgs, out: &mut dyn Write) -> CmdResult {
    let ns: Vec<BigUint> = match (&a.n, a.range) {
        (Some(n), _) => vec![n.clone()],
        (None, Some(r)) if r.lo >= 1 => (r.lo..=r.hi).map(BigUint::from).collect(),
        (None, Some(_)) => return Err(Failure::Usage("range must start at 1 or later".into())),
        (None, None) => return Err(Failure::Usage("one of --n or --range is required".into())),
    };
    let methods: Vec<Method> = if a.all_methods {
        all_methods(a.field).to_vec()
    } else {
        vec![a.method.map_or(default_method(a.field), Method::from)]
    };
    let mut rows: Vec<Vec<RhoResult>> = Vec::with_capacity(ns.len());
    for n in &ns {
        let f = factorize(n)?;
        rows.push(
            methods
                .iter()
                .map(|&m| sphere_fields::rho::rho(a.field, &f, m))
                .collect::<Result<_, _>>()?,
        );
    }
    let disagreement = rows
        .iter()
        .find(|r| r.iter().any(|x| x.value != r[0].value))
        .map(|r| {
            let parts: Vec<String> = r
                .iter()
                .map(|x| format!("{} = {}", x.method, x.value))
                .collect();
            format!("methods disagree at n = {}: {}", r[0].n, parts.join(", "))
        });

    let text = match a.format {
        Format::Text if rows.len() == 1 => {
            let r = &rows[0];
            if r.len() == 1 {
                format!("{}\n", r[0].value)
            } else if disagreement.is_none() {
                let names: Vec<String> = r.iter().map(|x| x.method.to_string()).collect();
                format!("{} ({})\n", r[0].value, names.join(" = "))
            } else {
                let parts: Vec<String> = r
                    .iter()
                    .map(|x| format!("{} = {}", x.method, x.value))
                    .collect();
                format!("{}\n", parts.join(", "))
            }
        }
        Format::Text => {
            let mut header = vec!["n".to_string()];
            header.extend(methods.iter().map(|m| m.to_string()));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut cells = vec![r[0].n.to_string()];
                    cells.extend(r.iter().map(|x| x.value.to_string()));
                    cells
                })
                .collect();
            render::aligned(&header, &body)
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .flatten()
                .map(|x| {
                    vec![
                        x.field.to_string(),
                        x.n.to_string(),
                        x.method.to_string(),
                        x.value.to_string(),
                    ]
                })
                .collect();
            render::csv(&["field", "n", "method", "value"], &body)
        }
        Format::Json => {
            let flat: Vec<&RhoResult> = rows.iter().flatten().collect();
            if flat.len() == 1 {
                render::json(flat[0])
            } else {
                render::json(&flat)
            }
        }
    };
    out.write_all(text.as_bytes())?;
    match disagreement {
        Some(msg) => {
            eprintln!("{msg}");
            Ok(1)
        }
        None => Ok(0),
    }
}

pub fn james(a: &JamesArgs, out: &mut dyn Write) -> CmdResult {
    let p = profile(a.field, a.m);
    let text = match a.format {
        Format::Text => format!("{p}\n"),
        Format::Csv => {
            let body: Vec<Vec<String>> = p
                .valuations
                .iter()
                .map(|(prime, v)| {
                    vec![
                        p.field.to_string(),
                        p.m.to_string(),
                        prime.to_string(),
                        v.to_string(),
                    ]
                })
                .collect();
            render::csv(&["field", "m", "p", "valuation"], &body)
        }
        Format::Json => render::json(&p),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

pub const TABLE_HEADER: [&str; 4] = ["n", "rho_R_4n", "rho_C_2n", "rho_H_n"];

pub fn table(a: &TableArgs, out: &mut dyn Write) -> CmdResult {
    let ns: Vec<BigUint> = if a.n_list.is_empty() {
        TABLE_COLUMNS.iter().map(|&n| BigUint::from(n)).collect()
    } else {
        a.n_list.clone()
    };
    let rows = ns
        .iter()
        .map(|n| table_row(&factorize(n)?))
        .collect::<Result<Vec<_>, _>>()?;
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.rho_r_4n.to_string(),
                r.rho_c_2n.to_string(),
                r.rho_h_n.to_string(),
            ]
        })
        .collect();
    let text = match a.format {
        Format::Text => render::aligned(&TABLE_HEADER, &body),
        Format::Csv => render::csv(&TABLE_HEADER, &body),
        Format::Json => render::json(&rows),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

fn verify_config(a: &VerifyArgs) -> VerifyConfig {
    let mut cfg = VerifyConfig::default();
    if let Some(r) = a.range {
        let range = (r.lo, r.hi);
        match a.check {
            CheckArg::One(Check::Ss73) => cfg.ss73_range = range,
            CheckArg::One(Check::AwParity) => cfg.parity_range = range,
            _ => cfg.n_range = range,
        }
    }
    if let Some(m) = a.m_max {
        cfg.m_max = m;
    }
    if let Some(t) = a.trials {
        cfg.trials = t;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(p) = a.points {
        cfg.sample_points = p;
    }
    cfg
}

fn outcome_line(o: &CheckOutcome) -> String {
    match &o.counterexample {
        None => format!("PASS {}: {}\n", o.check, o.summary),
        Some(cx) => format!(
            "FAIL {}: {}; first counterexample {cx}\n",
            o.check, o.summary
        ),
    }
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = verify_config(a);
    let checks: Vec<Check> = match a.check {
        CheckArg::One(c) => vec![c],
        CheckArg::All => Check::ALL.to_vec(),
    };
    let mut outcomes = Vec::with_capacity(checks.len());
    for c in checks {
        let o = verify::run(c, &cfg)?;
        if a.format == Format::Text {
            out.write_all(outcome_line(&o).as_bytes())?;
            out.flush()?;
        }
        outcomes.push(o);
    }
    match a.format {
        Format::Text => {}
        Format::Json => out.write_all(render::json(&outcomes).as_bytes())?,
        Format::Csv => {
            let body: Vec<Vec<String>> = outcomes
                .iter()
                .map(|o| {
                    vec![
                        o.check.to_string(),
                        if o.passed { "pass" } else { "fail" }.to_string(),
                        o.counterexample
                            .as_ref()
                            .map_or(String::new(), |c| c.at.to_string()),
                    ]
                })
                .collect();
            out.write_all(render::csv(&["check", "result", "counterexample"], &body).as_bytes())?;
        }
    }
    Ok(if outcomes.iter().all(|o| o.passed) {
        0
    } else {
        1
    })
}

fn read_family(path: &Path) -> Result<FieldFamily, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    FieldFamily::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn construct(a: &ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let (family, require_hr) = match a.what {
        Construction::Example4 => {
            let n =
                a.n.ok_or_else(|| Failure::Usage("example4 needs --n".into()))?;
            let (m1, m2) = example4(n)?;
            (FieldFamily::new(FieldTag::R, vec![m1, m2])?, true)
        }
        Construction::Lift => {
            let input = a
                .input
                .as_deref()
                .ok_or_else(|| Failure::Usage("lift needs --input".into()))?;
            let direction = a
                .direction
                .ok_or_else(|| Failure::Usage("lift needs --direction".into()))?;
            (lift(&read_family(input)?, direction)?, false)
        }
    };

    let mut summary = String::new();
    let mut ok = true;
    for m in family.members() {
        let cert = is_vector_field(m);
        ok &= cert.is_field();
        summary.push_str(&format!("{}: {cert}\n", m.name));
    }
    let hr = hurwitz_radon_check(&family);
    if require_hr {
        ok &= hr;
    }
    summary.push_str(&format!(
        "hurwitz-radon: {}\n",
        if hr { "pass" } else { "fail" }
    ));

    let json = family.to_json() + "\n";
    match &a.output {
        Some(path) => {
            fs::write(path, json)?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            out.write_all(json.as_bytes())?;
            eprint!("{summary}");
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn report_text(r: &FamilyReport) -> String {
    let mut s = format!("target: {}\n", r.target);
    for m in &r.input_members {
        s.push_str(&format!("member {}: {}\n", m.name, m.certificate));
    }
    s.push_str(&format!("augmented real fields: {}\n", r.augmented_size));
    s.push_str(&format!(
        "hurwitz-radon: {}\n",
        if r.hurwitz_radon { "pass" } else { "fail" }
    ));
    if let Some(sampled) = &r.sampled {
        match &sampled.witness {
            None => s.push_str(&format!(
                "sampled independence: pass at {} points\n",
                sampled.points_checked
            )),
            Some(w) => s.push_str(&format!(
                "sampled independence: fail at point {} ({}), Gram determinant {}\n",
                w.point_index,
                w.point.join(", "),
                w.gram_determinant
            )),
        }
    }
    s.push_str(&format!("level: {}\n", r.level));
    if let Some(reason) = &r.reason {
        s.push_str(&format!("reason: {reason}\n"));
    }
    s
}

pub fn check_family(a: &CheckFamilyArgs, out: &mut dyn Write) -> CmdResult {
    let family = read_family(&a.input)?;
    let points = sample_points(family.dim(), a.points, a.seed);
    let report = theorem10_check(&family, a.target.into(), &points)?;
    let text = match a.format {
        Format::Json => render::json(&report),
        Format::Text | Format::Csv => report_text(&report),
    };
    out.write_all(text.as_bytes())?;
    Ok(if report.passed() { 0 } else { 1 })
}
