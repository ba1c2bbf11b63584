use catalan_core::identities::Evaluation;
use catalan_core::numeric::ExactRational;
use catalan_core::{
    ballot_probability, big_gamma, catalan_family, conjecture_sweep, gamma0, gamma_m,
    gamma_product_form, theta, verify_catalan_determinant, verify_identity, Error, FamilyKind,
    IdentityId, IdentityReport, Regime, TruncatedSeries,
};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::output::{csv, exit, strings, CommandResult};

pub fn compute(kind: FamilyKind, n: i64, m: i64) -> Result<CommandResult, Error> {
    let value = catalan_family(kind, n, m)?;
    let mut r = CommandResult::new("compute").param("kind", kind).param("n", n).param("m", m);
    r.payload = json!({ "value": value.to_string() });
    r.text = value.to_string();
    r.csv = csv(&["kind", "n", "m", "value"], [strings(&[kind.to_string(), n.to_string(), m.to_string(), value.to_string()])]);
    Ok(r)
}

pub fn table(n_max: i64) -> Result<CommandResult, Error> {
    let rows: Vec<Vec<String>> = (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|m| catalan_family(FamilyKind::C, n, m).map(|v| v.to_string()))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut r = CommandResult::new("table").param("n_max", n_max);
    r.payload = json!({ "rows": rows });
    r.text = rows.iter().map(|row| row.join(",")).collect::<Vec<_>>().join("\n");
    let mut header = vec!["n".to_string()];
    header.extend((0..=n_max).map(|m| format!("m{m}")));
    r.csv = csv(
        &header,
        rows.iter().enumerate().map(|(n, row)| {
            let mut fields = vec![n.to_string()];
            fields.extend(row.iter().cloned());
            fields.resize(n_max as usize + 2, String::new());
            fields
        }),
    );
    Ok(r)
}

pub fn ballot(n: i64, m: i64) -> Result<CommandResult, Error> {
    let p = ballot_probability(n, m)?;
    let fraction = format!("{}/{}", p.numer(), p.denom());
    let mut r = CommandResult::new("ballot").param("n", n).param("m", m);
    r.payload = json!({
        "probability": fraction,
        "numerator": p.numer().to_string(),
        "denominator": p.denom().to_string(),
    });
    r.csv = csv(&["n", "m", "probability"], [strings(&[n.to_string(), m.to_string(), fraction.clone()])]);
    r.text = fraction;
    Ok(r)
}

pub fn det(n: usize) -> CommandResult {
    let (det, expected, matched) = verify_catalan_determinant(n);
    let mut r = CommandResult::new("det").param("N", n);
    r.payload = json!({
        "det": det.to_string(),
        "expected": expected.to_string(),
        "match": matched,
    });
    let verdict = if matched { "match" } else { "mismatch" };
    r.text = format!("det={det} expected={expected} {verdict}");
    r.csv = csv(&["N", "det", "expected", "match"], [strings(&[n.to_string(), det.to_string(), expected.to_string(), matched.to_string()])]);
    r.exit_code = if matched { exit::OK } else { exit::MISMATCH };
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SeriesTarget {
    Gamma0,
    GammaM,
    Theta,
    ProductForm,
    BigGamma,
}

pub fn series(target: SeriesTarget, m: u32, order: usize, order_x: usize, order_y: usize) -> Result<CommandResult, Error> {
    let name = target.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut r = CommandResult::new("series").param("target", &name);
    if target == SeriesTarget::BigGamma {
        let grid: Vec<Vec<String>> = big_gamma(order_x, order_y)
            .grid()
            .iter()
            .map(|row| strings(row))
            .collect();
        r = r.param("order_x", order_x).param("order_y", order_y);
        r.payload = json!({ "grid": grid });
        r.text = grid.iter().map(|row| row.join(",")).collect::<Vec<_>>().join("\n");
        r.csv = csv(
            &["n", "m", "coefficient"],
            grid.iter().enumerate().flat_map(|(n, row)| {
                row.iter().enumerate().map(move |(m, v)| vec![n.to_string(), m.to_string(), v.clone()])
            }),
        );
        return Ok(r);
    }
    let s: TruncatedSeries = match target {
        SeriesTarget::Gamma0 => gamma0(order),
        SeriesTarget::GammaM => gamma_m(m, order),
        SeriesTarget::Theta => theta(m, order),
        SeriesTarget::ProductForm => gamma_product_form(m, order)?,
        SeriesTarget::BigGamma => unreachable!(),
    };
    if target != SeriesTarget::Gamma0 {
        r = r.param("m", m);
    }
    r = r.param("order", order);
    let coeffs = strings(s.coeffs());
    r.payload = json!({ "coefficients": coeffs });
    r.text = coeffs.join(",");
    r.csv = csv(&["n", "coefficient"], coeffs.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.clone()]));
    Ok(r)
}

fn params_json(e: &Evaluation) -> Value {
    let mut p = json!({ "n": e.params.n.to_string(), "m": e.params.m.to_string() });
    if let Some(k) = e.params.k {
        p["k"] = json!(k.to_string());
    }
    p
}

fn rational(v: &ExactRational) -> String {
    v.to_string()
}

fn failure_json(e: &Evaluation) -> Value {
    json!({
        "params": params_json(e),
        "lhs": rational(&e.lhs),
        "rhs": rational(&e.rhs),
        "regime": e.regime.name(),
    })
}

fn report_json(r: &IdentityReport) -> Value {
    json!({
        "identity": r.id.tag(),
        "params_checked": r.params_checked.to_string(),
        "passed": r.passed(),
        "failures": r.failures.iter().map(failure_json).collect::<Vec<_>>(),
    })
}

/// Which sweep `verify` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    One(IdentityId),
    All,
    Conjecture,
}

impl std::str::FromStr for VerifyTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(VerifyTarget::All),
            "conjecture" => Ok(VerifyTarget::Conjecture),
            _ => s.parse().map(VerifyTarget::One),
        }
    }
}

pub fn verify(target: VerifyTarget, n_max: i64, k_max: i64) -> CommandResult {
    match target {
        VerifyTarget::Conjecture => verify_conjecture(n_max, k_max),
        VerifyTarget::One(id) => verify_proven(&[id], n_max, id.tag()),
        VerifyTarget::All => verify_proven(&IdentityId::ALL, n_max, "all"),
    }
}

fn verify_proven(ids: &[IdentityId], n_max: i64, label: &str) -> CommandResult {
    let reports: Vec<IdentityReport> = ids.iter().map(|&id| verify_identity(id, n_max)).collect();
    let all_passed = reports.iter().all(IdentityReport::passed);
    let mut r = CommandResult::new("verify").param("identity", label).param("n_max", n_max);
    r.payload = json!({
        "all_passed": all_passed,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    let mut lines = Vec::new();
    for rep in &reports {
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        lines.push(format!("{} checked={} failures={} {status}", rep.id, rep.params_checked, rep.failures.len()));
        for f in &rep.failures {
            lines.push(format!("  {}: lhs={} rhs={}", f.params, f.lhs, f.rhs));
        }
    }
    r.text = lines.join("\n");
    r.csv = csv(
        &["identity", "params_checked", "failures", "passed"],
        reports.iter().map(|rep| {
            vec![rep.id.tag().to_string(), rep.params_checked.to_string(), rep.failures.len().to_string(), rep.passed().to_string()]
        }),
    );
    r.exit_code = if all_passed { exit::OK } else { exit::MISMATCH };
    r
}

fn verify_conjecture(n_max: i64, k_max: i64) -> CommandResult {
    let rep = conjecture_sweep(n_max, k_max);
    let regime_summary = |regime: Regime| {
        json!({
            "checked": rep.checked_in(regime).to_string(),
            "failures": rep.failures_in(regime).count().to_string(),
        })
    };
    let tuples: Vec<Value> = rep
        .evidence
        .iter()
        .map(|e| {
            let mut t = params_json(e);
            t["regime"] = json!(e.regime.name());
            t["lhs"] = json!(rational(&e.lhs));
            t["rhs"] = json!(rational(&e.rhs));
            t["holds"] = json!(e.holds());
            t
        })
        .collect();
    let mut r = CommandResult::new("verify")
        .param("identity", "conjecture")
        .param("n_max", n_max)
        .param("k_max", k_max);
    r.payload = json!({
        "identity": rep.id.tag(),
        "params_checked": rep.params_checked.to_string(),
        "proven": regime_summary(Regime::Proven),
        "conjectural": regime_summary(Regime::Conjectural),
        "failures": rep.failures.iter().map(failure_json).collect::<Vec<_>>(),
        "tuples": tuples,
    });
    let mut lines = vec![format!("{} conjecture sweep n<={n_max} k<={k_max}", rep.id)];
    for regime in [Regime::Proven, Regime::Conjectural] {
        lines.push(format!(
            "{}: checked={} failures={}",
            regime.name(),
            rep.checked_in(regime),
            rep.failures_in(regime).count()
        ));
    }
    for f in &rep.failures {
        lines.push(format!("  [{}] {}: lhs={} rhs={}", f.regime.name(), f.params, f.lhs, f.rhs));
    }
    r.text = lines.join("\n");
    r.csv = csv(
        &["n", "m", "k", "regime", "lhs", "rhs", "holds"],
        rep.evidence.iter().map(|e| {
            vec![
                e.params.n.to_string(),
                e.params.m.to_string(),
                e.params.k.unwrap_or_default().to_string(),
                e.regime.name().to_string(),
                rational(&e.lhs),
                rational(&e.rhs),
                e.holds().to_string(),
            ]
        }),
    );
    // conjecture evidence never fails the run; only the proven regime does
    r.exit_code = if rep.failures_in(Regime::Proven).count() == 0 { exit::OK } else { exit::MISMATCH };
    r
}
