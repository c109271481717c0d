//! JSON and TSV rendering. Big integers are written as decimal strings and
//! JSON objects have sorted keys, so output is byte-stable.

use std::fmt::Write as _;

use indexlab_core::arith::IntPoly;
use indexlab_core::families::{Family, VerificationReport, VerificationRow};
use indexlab_core::invariants::InvariantReport;
use indexlab_core::nf::SplittingType;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

fn s(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn poly_json(f: &IntPoly) -> Value {
    Value::Array(f.coeffs().iter().map(s).collect())
}

fn split_json(t: &SplittingType) -> Value {
    Value::Array(t.pairs().iter().map(|&(e, f)| json!([e, f])).collect())
}

/// `splittings` are the primes listed under "splitting".
pub fn invariants_json(r: &InvariantReport, splittings: &[(u64, SplittingType)]) -> Value {
    let mut split = Map::new();
    for (p, t) in splittings {
        split.insert(p.to_string(), split_json(t));
    }
    let mut vals = Map::new();
    for (p, v) in &r.valuations {
        vals.insert(p.to_string(), json!({"i": v.fixed, "I": v.index}));
    }
    json!({
        "field": {
            "poly": poly_json(&r.poly),
            "disc": s(&r.field_disc),
            "degree": r.degree,
        },
        "splitting": split,
        "invariants": {
            "i_K": s(&r.i_k),
            "I_K": s(&r.index_k),
            "valuations": vals,
            "maccluer_support": r.support,
        },
        "witness": {
            "coords": Value::Array(r.witness.coords.iter().map(s).collect()),
            "char_poly": poly_json(&r.witness_char_poly),
        },
    })
}

pub fn invariants_tsv(r: &InvariantReport, splittings: &[(u64, SplittingType)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "poly\t{}", r.poly);
    let _ = writeln!(out, "degree\t{}", r.degree);
    let _ = writeln!(out, "disc\t{}", r.field_disc);
    for (p, t) in splittings {
        let _ = writeln!(out, "splitting\t{p}\t{t}");
    }
    let _ = writeln!(out, "i_K\t{}", r.i_k);
    let _ = writeln!(out, "I_K\t{}", r.index_k);
    for (p, v) in &r.valuations {
        let _ = writeln!(out, "valuation\t{p}\t{}\t{}", v.fixed, v.index);
    }
    let support: Vec<String> = r.support.iter().map(u64::to_string).collect();
    let _ = writeln!(out, "maccluer_support\t{}", support.join(","));
    let _ = writeln!(out, "witness\t{}", r.witness);
    let _ = writeln!(out, "witness_char_poly\t{}", r.witness_char_poly);
    out
}

fn param_text(row: &VerificationRow) -> String {
    row.param.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
}

fn opt(x: Option<&BigInt>) -> String {
    x.map_or_else(|| "-".to_string(), BigInt::to_string)
}

fn i_pred_text(row: &VerificationRow) -> String {
    row.prediction.as_ref().map_or_else(
        || "-".to_string(),
        |p| format!("{{{}}}", p.i_pred.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")),
    )
}

pub fn verification_tsv(report: &VerificationReport) -> String {
    let sextic = report.family == Family::SimplestSextic;
    let mut out = String::from("family\tm\tapplicable\tI_pred\tI_exact\ti_pred_set\ti_exact\tpass");
    if sextic {
        out.push_str("\talpha");
    }
    out.push('\n');
    for row in &report.rows {
        let exact = row.exact.as_ref();
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            report.family,
            param_text(row),
            row.applicable,
            opt(row.prediction.as_ref().and_then(|p| p.index_pred.as_ref())),
            opt(exact.map(|r| &r.index_k)),
            i_pred_text(row),
            opt(exact.map(|r| &r.i_k)),
            row.applicable && row.pass,
        );
        if sextic {
            let _ = write!(out, "\t{}", row.alpha().map_or_else(|| "-".to_string(), |a| a.to_string()));
        }
        out.push('\n');
    }
    out
}

fn row_json(family: Family, row: &VerificationRow) -> Value {
    let exact = row.exact.as_ref();
    let mut v = json!({
        "m": param_text(row),
        "applicable": row.applicable,
        "I_pred": row.prediction.as_ref().and_then(|p| p.index_pred.as_ref()).map(s),
        "I_exact": exact.map(|r| s(&r.index_k)),
        "i_pred_set": row.prediction.as_ref().map(|p| p.i_pred.iter().map(s).collect::<Vec<_>>()),
        "i_exact": exact.map(|r| s(&r.i_k)),
        "pass": row.applicable && row.pass,
        "reason": row.reason,
    });
    if family == Family::SimplestSextic {
        v["alpha"] = json!(row.alpha());
    }
    v
}

pub fn verification_json(report: &VerificationReport) -> Value {
    let rows: Vec<Value> = report.rows.iter().map(|r| row_json(report.family, r)).collect();
    let discrepancies: Vec<Value> =
        report.discrepancies().into_iter().map(|r| row_json(report.family, r)).collect();
    let mut v = json!({
        "family": report.family.name(),
        "points": report.rows.len(),
        "applicable": report.applicable(),
        "passed": report.passed(),
        "discrepancies": discrepancies,
        "rows": rows,
    });
    if report.family == Family::SimplestSextic {
        let mut table = Map::new();
        for row in report.rows.iter().filter(|r| r.exact.is_some()) {
            table.insert(param_text(row), json!(row.alpha()));
        }
        v["alpha_table"] = Value::Object(table);
    }
    v
}

/// Pretty JSON followed by a newline.
pub fn to_text(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("json values serialize");
    out.push('\n');
    out
}
