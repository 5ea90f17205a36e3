//! JSON ingestion and emission for instances, certificates, classifications,
//! optimization outcomes, and potentials.
//!
//! All rationals are encoded as exact `"num/den"` strings (the `/den` part
//! omitted when the denominator is 1) and polynomials as ascending
//! coefficient arrays, so every emitted file parses back bit-exactly.

use crate::automata::{Pattern, Potential};
use crate::lp::LpStatus;
use crate::opt::{OptOutcome, OptStatus, ParamLp};
use crate::plp::{
    LocalClassification, PlpInstance, PolyMatrix, Side, SideCertificate, Summary, Verdict,
};
use crate::poly::{parse_rat, rat_to_string, Poly, Rat};
use crate::ratfunc::RatFunc;
use crate::sturm::{RootBound, WitnessKind};
use crate::{Error, Result};
use serde_json::{json, Map, Value};

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

// ---------------------------------------------------------------------------
// Scalars and polynomials

pub fn rat_to_value(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    let s = v.as_str().ok_or_else(|| bad("rational must be a string"))?;
    parse_rat(s).map_err(bad)
}

pub fn poly_to_value(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_to_value).collect())
}

pub fn poly_from_value(v: &Value) -> Result<Poly> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad("polynomial must be an array of coefficient strings"))?;
    let coeffs = arr.iter().map(rat_from_value).collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

fn ratfunc_to_value(r: &RatFunc) -> Value {
    json!({ "num": poly_to_value(r.num()), "den": poly_to_value(r.den()) })
}

fn ratfunc_from_value(v: &Value) -> Result<RatFunc> {
    let num = poly_from_value(field(v, "num")?)?;
    let den = poly_from_value(field(v, "den")?)?;
    RatFunc::new(num, den).map_err(bad)
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| bad(format!("missing field {name:?}")))
}

fn usize_field(v: &Value, name: &str) -> Result<usize> {
    field(v, name)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(format!("field {name:?} must be a nonnegative integer")))
}

// ---------------------------------------------------------------------------
// Instances

fn constraints_to_value(a: &PolyMatrix, b: &[Poly]) -> Value {
    Value::Array(
        (0..a.rows())
            .map(|i| {
                json!({
                    "row": Value::Array(a.row(i).iter().map(poly_to_value).collect()),
                    "rhs": poly_to_value(&b[i]),
                    "sense": ">=",
                })
            })
            .collect(),
    )
}

pub fn instance_to_value(inst: &PlpInstance) -> Value {
    json!({
        "n": inst.n_vars(),
        "constraints": constraints_to_value(&inst.a, &inst.b),
    })
}

pub fn optimize_to_value(lp: &ParamLp) -> Value {
    let mut v = json!({
        "n": lp.a.cols(),
        "objective": Value::Array(lp.c.iter().map(poly_to_value).collect()),
        "convention": "max-le-nonneg",
    });
    v["constraints"] = constraints_to_value(&lp.a, &lp.b);
    v
}

fn constraints_from_value(v: &Value, n: usize) -> Result<(PolyMatrix, Vec<Poly>)> {
    let arr = field(v, "constraints")?
        .as_array()
        .ok_or_else(|| bad("constraints must be an array"))?;
    let mut rows = Vec::with_capacity(arr.len());
    let mut rhs = Vec::with_capacity(arr.len());
    for c in arr {
        match c.get("sense").and_then(Value::as_str) {
            Some(">=") => {}
            _ => return Err(bad("constraint sense must be \">=\"")),
        }
        let row = field(c, "row")?
            .as_array()
            .ok_or_else(|| bad("constraint row must be an array of polynomials"))?
            .iter()
            .map(poly_from_value)
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "constraint row has {} entries, expected n = {n}",
                row.len()
            )));
        }
        rows.push(row);
        rhs.push(poly_from_value(field(c, "rhs")?)?);
    }
    Ok((PolyMatrix::new(rows)?, rhs))
}

pub fn instance_from_value(v: &Value) -> Result<PlpInstance> {
    let n = usize_field(v, "n")?;
    let (a, b) = constraints_from_value(v, n)?;
    PlpInstance::new(a, b)
}

pub fn optimize_from_value(v: &Value) -> Result<ParamLp> {
    let n = usize_field(v, "n")?;
    match field(v, "convention")?.as_str() {
        Some("max-le-nonneg") => {}
        _ => return Err(bad("convention must be \"max-le-nonneg\"")),
    }
    let c = field(v, "objective")?
        .as_array()
        .ok_or_else(|| bad("objective must be an array of polynomials"))?
        .iter()
        .map(poly_from_value)
        .collect::<Result<Vec<_>>>()?;
    let (a, b) = constraints_from_value(v, n)?;
    ParamLp::new(c, a, b)
}

// ---------------------------------------------------------------------------
// Certificates

fn side_str(s: Side) -> &'static str {
    match s {
        Side::Positive => "positive",
        Side::Negative => "negative",
    }
}

fn side_from_str(s: &str) -> Result<Side> {
    match s {
        "positive" => Ok(Side::Positive),
        "negative" => Ok(Side::Negative),
        other => Err(bad(format!("unknown side {other:?}"))),
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Feasible => "feasible",
        Verdict::Infeasible => "infeasible",
        Verdict::UnknownAtCap => "unknown-at-cap",
    }
}

fn verdict_from_str(s: &str) -> Result<Verdict> {
    match s {
        "feasible" => Ok(Verdict::Feasible),
        "infeasible" => Ok(Verdict::Infeasible),
        "unknown-at-cap" => Ok(Verdict::UnknownAtCap),
        other => Err(bad(format!("unknown verdict {other:?}"))),
    }
}

fn root_bound_to_value(r: &RootBound) -> Value {
    json!({
        "value": rat_to_value(&r.value),
        "witness": match r.witness_kind {
            WitnessKind::NoPositiveRoot => "no-positive-root",
            WitnessKind::IsolatedBelowRoot => "isolated-below-root",
        },
        "certifying_polys": Value::Array(r.certifying_polys.iter().map(poly_to_value).collect()),
    })
}

fn root_bound_from_value(v: &Value) -> Result<RootBound> {
    let witness_kind = match field(v, "witness")?.as_str() {
        Some("no-positive-root") => WitnessKind::NoPositiveRoot,
        Some("isolated-below-root") => WitnessKind::IsolatedBelowRoot,
        _ => return Err(bad("unknown radius witness kind")),
    };
    Ok(RootBound {
        value: rat_from_value(field(v, "value")?)?,
        witness_kind,
        certifying_polys: field(v, "certifying_polys")?
            .as_array()
            .ok_or_else(|| bad("certifying_polys must be an array"))?
            .iter()
            .map(poly_from_value)
            .collect::<Result<Vec<_>>>()?,
    })
}

pub fn certificate_to_value(cert: &SideCertificate) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(CERTIFICATE_SCHEMA_VERSION));
    m.insert("side".into(), json!(side_str(cert.side)));
    m.insert("verdict".into(), json!(verdict_str(cert.verdict)));
    if let Some(c) = cert.c_used {
        m.insert("c".into(), json!(c));
    }
    if let Some((dp, dq)) = cert.degrees_used {
        m.insert("deg_p".into(), json!(dp));
        m.insert("deg_q1".into(), json!(dq));
    }
    if let Some(sol) = &cert.solution {
        m.insert(
            "solution".into(),
            Value::Array(sol.iter().map(ratfunc_to_value).collect()),
        );
    }
    if let Some(r) = &cert.radius {
        m.insert("radius".into(), root_bound_to_value(r));
    }
    Value::Object(m)
}

pub fn certificate_from_value(v: &Value) -> Result<SideCertificate> {
    match field(v, "schema_version")?.as_u64() {
        Some(n) if n == CERTIFICATE_SCHEMA_VERSION as u64 => {}
        _ => return Err(bad("unsupported certificate schema version")),
    }
    let side = side_from_str(field(v, "side")?.as_str().ok_or_else(|| bad("side must be a string"))?)?;
    let verdict = verdict_from_str(
        field(v, "verdict")?.as_str().ok_or_else(|| bad("verdict must be a string"))?,
    )?;
    let c_used = v.get("c").and_then(Value::as_u64).map(|n| n as usize);
    let degrees_used = match (
        v.get("deg_p").and_then(Value::as_u64),
        v.get("deg_q1").and_then(Value::as_u64),
    ) {
        (Some(p), Some(q)) => Some((p as usize, q as usize)),
        _ => None,
    };
    let solution = match v.get("solution") {
        None => None,
        Some(Value::Array(arr)) => {
            Some(arr.iter().map(ratfunc_from_value).collect::<Result<Vec<_>>>()?)
        }
        Some(_) => return Err(bad("solution must be an array")),
    };
    let radius = match v.get("radius") {
        None => None,
        Some(r) => Some(root_bound_from_value(r)?),
    };
    Ok(SideCertificate { side, verdict, solution, radius, c_used, degrees_used })
}

// ---------------------------------------------------------------------------
// Classification and optimization outcomes

pub fn summary_str(s: Summary) -> &'static str {
    match s {
        Summary::LocallyFeasible => "locally-feasible",
        Summary::LocallyInfeasible => "locally-infeasible",
        Summary::Mixed => "mixed",
        Summary::UnknownAtCap => "unknown-at-cap",
    }
}

pub fn classification_to_value(cls: &LocalClassification) -> Value {
    let origin = match cls.origin.status {
        LpStatus::Optimal => json!({
            "feasible": true,
            "witness": Value::Array(
                cls.origin.witness.iter().flatten().map(rat_to_value).collect()
            ),
        }),
        _ => json!({
            "feasible": false,
            "farkas": Value::Array(
                cls.origin.farkas.iter().flatten().map(rat_to_value).collect()
            ),
        }),
    };
    json!({
        "schema_version": CERTIFICATE_SCHEMA_VERSION,
        "summary": summary_str(cls.summary),
        "negative": certificate_to_value(&cls.negative),
        "origin": origin,
        "positive": certificate_to_value(&cls.positive),
    })
}

pub fn opt_status_str(s: OptStatus) -> &'static str {
    match s {
        OptStatus::LocallyInfeasible => "locally-infeasible",
        OptStatus::LocallyUnbounded => "locally-unbounded",
        OptStatus::LocallyOptimal => "locally-optimal",
        OptStatus::UnknownAtCap => "unknown-at-cap",
    }
}

pub fn opt_outcome_to_value(out: &OptOutcome) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(CERTIFICATE_SCHEMA_VERSION));
    m.insert("status".into(), json!(opt_status_str(out.status)));
    if let Some(x) = &out.x {
        m.insert("solution".into(), Value::Array(x.iter().map(ratfunc_to_value).collect()));
    }
    if let Some(v) = &out.value {
        m.insert("value".into(), ratfunc_to_value(v));
    }
    if let Some(r) = &out.radius {
        m.insert("radius".into(), root_bound_to_value(r));
    }
    if let Some(c) = &out.certificate {
        m.insert("certificate".into(), certificate_to_value(c));
    }
    Value::Object(m)
}

// ---------------------------------------------------------------------------
// Potentials

pub fn potential_to_value(w: &Potential) -> Value {
    let mut coeffs = Map::new();
    for (idx, p) in w.coeffs.iter().enumerate() {
        if !p.coeffs().is_empty() {
            coeffs.insert(Pattern::from_index(idx, w.length).to_string(), poly_to_value(p));
        }
    }
    json!({
        "length": w.length,
        "shared_den": poly_to_value(&w.shared_den),
        "coeffs": Value::Object(coeffs),
    })
}

pub fn potential_from_value(v: &Value) -> Result<Potential> {
    let length = usize_field(v, "length")?;
    let shared_den = poly_from_value(field(v, "shared_den")?)?;
    let map = field(v, "coeffs")?
        .as_object()
        .ok_or_else(|| bad("coeffs must be an object keyed by pattern"))?;
    let mut coeffs = vec![Poly::zero(); 3usize.pow(length as u32)];
    for (key, val) in map {
        let pat = Pattern::parse(key)?;
        if pat.len() != length {
            return Err(Error::DimensionMismatch(format!(
                "pattern {key:?} does not have length {length}"
            )));
        }
        coeffs[pat.index()] = poly_from_value(val)?;
    }
    Potential::new(length, coeffs, shared_den)
}

/// The named potentials shipped with the crate, keyed as in data/potentials.json.
pub fn builtin_potentials() -> Result<Vec<(String, Potential)>> {
    let v: Value = serde_json::from_str(include_str!("../data/potentials.json"))
        .map_err(|e| bad(format!("built-in potential data: {e}")))?;
    v.as_object()
        .ok_or_else(|| bad("potential data must be an object"))?
        .iter()
        .map(|(name, pv)| Ok((name.clone(), potential_from_value(pv)?)))
        .collect()
}

// ---------------------------------------------------------------------------
// File helpers

pub fn read_value(path: &std::path::Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| bad(format!("malformed JSON in {}: {e}", path.display())))
}

pub fn write_value(path: &std::path::Path, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("serializable");
    std::fs::write(path, text + "\n")
        .map_err(|e| bad(format!("cannot write {}: {e}", path.display())))
}
