//! Machine-readable reports shared by the command line and the Python module.
//!
//! Reports are `serde_json::Value` trees whose object keys are sorted, so the
//! rendered output is byte-stable for identical inputs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::casestudies::{run_case_study, Fixture};
use crate::criteria::{is_line_closed, is_p_independent_matroid};
use crate::error::{OsxError, Result};
use crate::ideal::{hilbert_series, is_quadratic, os_ideal};
use crate::matroid::Matroid;
use crate::presentation::{
    gamma_tree, nbc_prime, relations_first_kind, relations_second_kind, t_tree, verify_monomial_relations,
    verify_relation_basis,
};
use crate::zelements::{groebner_verify, z_basis, zp_basis_verify};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = OsxError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(OsxError::InvalidParameter(format!("unknown format `{s}`"))),
        }
    }
}

/// A report together with its verdict; a negative verdict maps to exit code 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub verdict: bool,
}

impl Outcome {
    fn affirmative(report: Value) -> Self {
        Outcome { report, verdict: true }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize to JSON")
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            flatten(v, "", &mut out);
            out
        }
    }
}

/// One `path: value` line per scalar or scalar array.
fn flatten(v: &Value, path: &str, out: &mut String) {
    let scalar = |x: &Value| !x.is_object() && !x.is_array();
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(x, &p, out);
            }
        }
        Value::Array(items) if !items.iter().all(scalar) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, &format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{path}: {s}");
        }
        _ => {
            let _ = writeln!(out, "{path}: {v}");
        }
    }
}

/// Hilbert series and the comparison of `I` with `J(2)` in every degree up to the rank.
pub fn analyze(m: &Matroid) -> Result<Outcome> {
    let os = os_ideal(m);
    let q = is_quadratic(m, &os)?;
    Ok(Outcome::affirmative(json!({
        "n": m.n(),
        "rank": m.rank_total(),
        "circuits": m.circuits().len(),
        "hilbert": hilbert_series(m),
        "nbc_bases": m.nbc_sets(m.rank_total()).len(),
        "dim_I": q.dim_i,
        "dim_J2": q.dim_j2,
        "quadratic": q.quadratic,
        "first_gap_degree": q.first_gap_degree,
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    LineClosed,
    PIndependent(usize),
    Quadratic,
}

impl FromStr for Criterion {
    type Err = OsxError;

    /// `lcl`, `pindep:<p>` or `quadratic`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lcl" => Ok(Criterion::LineClosed),
            "quadratic" => Ok(Criterion::Quadratic),
            _ => s
                .strip_prefix("pindep:")
                .and_then(|p| p.parse().ok())
                .map(Criterion::PIndependent)
                .ok_or_else(|| OsxError::InvalidParameter(format!("unknown criterion `{s}`"))),
        }
    }
}

pub fn check(m: &Matroid, criterion: Criterion, max_n: usize) -> Result<Outcome> {
    match criterion {
        Criterion::LineClosed => {
            let r = is_line_closed(m, max_n)?;
            Ok(Outcome { verdict: r.verdict, report: to_value(&r) })
        }
        Criterion::PIndependent(p) => {
            let r = is_p_independent_matroid(m, p, max_n)?;
            Ok(Outcome { verdict: r.verdict, report: to_value(&r) })
        }
        Criterion::Quadratic => {
            let q = is_quadratic(m, &os_ideal(m))?;
            Ok(Outcome {
                verdict: q.quadratic,
                report: json!({
                    "criterion": "quadratic",
                    "verdict": q.quadratic,
                    "first_gap_degree": q.first_gap_degree,
                    "dim_I": q.dim_i,
                    "dim_J2": q.dim_j2,
                }),
            })
        }
    }
}

fn check_degree(m: &Matroid, d: usize) -> Result<()> {
    if d > m.n() {
        Err(OsxError::InvalidParameter(format!("degree {d} outside 0..={}", m.n())))
    } else {
        Ok(())
    }
}

/// Basis of `(I⁰)_q` in reduced echelon form.
pub fn annihilator(m: &Matroid, q: usize) -> Result<Outcome> {
    check_degree(m, q)?;
    let os = os_ideal(m);
    let ann = os.annihilator(q)?;
    let basis: Vec<String> = ann.basis().iter().map(|b| b.to_string()).collect();
    Ok(Outcome::affirmative(json!({ "degree": q, "dim": ann.dim(), "basis": basis })))
}

pub fn groebner(m: &Matroid) -> Result<Outcome> {
    let r = groebner_verify(m, &os_ideal(m))?;
    Ok(Outcome { verdict: r.pass, report: to_value(&r) })
}

/// The elements `z(T)`, `T ∈ nbc_p`, and the checks that they form a basis of `(I⁰)_{n-p}`.
pub fn zbasis(m: &Matroid, p: usize) -> Result<Outcome> {
    if p > m.rank_total() {
        return Err(OsxError::InvalidParameter(format!("degree {p} outside 0..={}", m.rank_total())));
    }
    let r = zp_basis_verify(m, &os_ideal(m), p)?;
    let elements: Vec<Value> =
        z_basis(m, p).iter().map(|z| json!({ "source": to_value(&z.source), "z": z.value.to_string() })).collect();
    let mut report = to_value(&r);
    report["elements"] = Value::Array(elements);
    Ok(Outcome { verdict: r.pass, report })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PresentationOptions {
    pub trees: bool,
    pub relations: bool,
    pub verify_basis: bool,
}

pub fn presentation(m: &Matroid, opts: PresentationOptions) -> Result<Outcome> {
    let prime = nbc_prime(m);
    let first = relations_first_kind(m)?;
    let second = relations_second_kind(m)?;
    let mut report = json!({
        "nbc_prime": to_value(&prime),
        "first_kind": first.len(),
        "second_kind": second.len(),
    });
    let mut verdict = true;
    if opts.trees {
        let trees: Vec<Value> = prime
            .iter()
            .map(|e| {
                let g = gamma_tree(m, e.s)?;
                let t = t_tree(m, e.s)?;
                Ok(json!({
                    "s": to_value(&e.s),
                    "gamma": g.to_nested_json(),
                    "gamma_dot": g.to_dot(),
                    "t_edges": to_value(&t.edges),
                    "t_dot": t.to_dot(),
                }))
            })
            .collect::<Result<_>>()?;
        report["trees"] = Value::Array(trees);
    }
    if opts.relations {
        report["relations"] = json!({ "first_kind": to_value(&first), "second_kind": to_value(&second) });
    }
    if opts.verify_basis {
        let r = verify_relation_basis(m)?;
        let mono = verify_monomial_relations(m)?;
        verdict = r.pass && mono.pass;
        report["relation_basis"] = to_value(&r);
        report["monomial_relations"] = to_value(&mono);
    }
    Ok(Outcome { verdict, report })
}

pub fn case_study(name: &str, max_n: usize) -> Result<Outcome> {
    let fixture: Fixture = name.parse()?;
    let r = run_case_study(fixture, max_n)?;
    let verdict = r.relation_basis.pass
        && r.oracle.as_ref().is_none_or(|o| o.iter().all(|c| c.pass))
        && r.pencil.as_ref().is_none_or(|p| p.checks.iter().all(|c| c.pass));
    Ok(Outcome { verdict, report: to_value(&r) })
}
