//! Command implementations. Each returns the JSON output, a human summary and an exit code.

use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use kumcert::exact::nt::is_prime;
use kumcert::kumgeo::{kummer_quadrics, theorem_a_surface};
use kumcert::localarith::LambdaElement;
use kumcert::locsol::{
    everywhere_local_a, everywhere_local_b, padic_solubility_a, padic_solubility_b, real_solubility_a,
    real_solubility_b,
};
use kumcert::permgrp::{galois_group_cubic, galois_group_quartic, galois_group_quintic, DEFAULT_PRIME_BUDGET};
use kumcert::pipeline::{
    check_theorem_a, check_theorem_b, conditions_table, find_admissible_prime, AdmissiblePrimeQuery, Overall,
    TheoremReport, SCHEMA_VERSION,
};
use kumcert::PolyQ;

use crate::config::{
    self, CheckAConfig, CheckBConfig, CohomologyConfig, ConfigError, FindPrimeConfig, GaloisConfig, KummerConfig,
    LocsolConfig, Overrides, PlaceInput, PolyInput, Result, SurfaceKind,
};

pub struct Output {
    pub json: Value,
    pub summary: String,
    pub code: u8,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(ConfigError::Invalid(msg.into()))
}

fn core_err(e: kumcert::Error) -> ConfigError {
    ConfigError::Invalid(e.to_string())
}

fn odd_prime(name: &str, p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return invalid(format!("{name} = {p} is not an odd prime"));
    }
    Ok(())
}

fn degree(name: &str, f: &PolyQ, d: usize) -> Result<()> {
    if f.degree() != Some(d) {
        return invalid(format!("{name} = {f} has degree {}, expected {d}", f.deg()));
    }
    Ok(())
}

fn lambda_of(input: &Option<PolyInput>, summary: &mut String) -> Result<LambdaElement> {
    match input {
        Some(l) => LambdaElement::new(l.parse("lambda")?).map_err(core_err),
        None => {
            writeln!(summary, "warning: lambda omitted, using lambda = 1; that surface contains a rational line").unwrap();
            Ok(LambdaElement::one())
        }
    }
}

fn report_output(report: TheoremReport, mut summary: String) -> Output {
    writeln!(summary, "theorem {:?}", report.theorem).unwrap();
    for c in &report.checks {
        writeln!(summary, "  {:<28} {:?}", c.name, c.outcome).unwrap();
    }
    for s in &report.skipped {
        writeln!(summary, "  {s:<28} skipped").unwrap();
    }
    writeln!(summary, "overall: {:?}", report.overall).unwrap();
    let code = match report.overall {
        Overall::HypothesesHold => 0,
        Overall::HypothesesFail => 1,
        Overall::Undecided => 2,
    };
    Output { json: serde_json::to_value(&report).expect("report serializes"), summary, code }
}

pub fn check_a(path: &str, ov: &Overrides) -> Result<Output> {
    let c: CheckAConfig = config::load(path)?;
    let g1 = c.g1.parse("g1")?;
    let g2 = c.g2.parse("g2")?;
    degree("g1", &g1, 4)?;
    degree("g2", &g2, 4)?;
    odd_prime("w1", c.w1)?;
    odd_prime("w2", c.w2)?;
    let effort = c.effort.resolve(c.seed, ov)?;
    Ok(report_output(check_theorem_a(&g1, &g2, c.w1, c.w2, &effort), String::new()))
}

pub fn check_b(path: &str, ov: &Overrides) -> Result<Output> {
    let c: CheckBConfig = config::load(path)?;
    let f = c.f.parse("f")?;
    degree("f", &f, 5)?;
    if !f.is_monic() {
        return invalid(format!("f = {f} is not monic"));
    }
    odd_prime("w", c.w)?;
    let mut summary = String::new();
    let lambda = lambda_of(&c.lambda, &mut summary)?;
    let effort = c.effort.resolve(c.seed, ov)?;
    Ok(report_output(check_theorem_b(&f, &lambda, c.w, &effort), summary))
}

fn tool_output(tool: &str, inputs: Value, result: impl Serialize, summary: String) -> Output {
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "tool": tool,
        "inputs": inputs,
        "result": result,
    });
    Output { json, summary, code: 0 }
}

pub fn galois(path: &str) -> Result<Output> {
    let c: GaloisConfig = config::load(path)?;
    let f = c.f.parse("f")?;
    let budget = c.prime_budget.unwrap_or(DEFAULT_PRIME_BUDGET);
    let v = match f.degree() {
        Some(3) => galois_group_cubic(&f),
        Some(4) => galois_group_quartic(&f),
        Some(5) => galois_group_quintic(&f, budget),
        _ => return invalid(format!("f = {f} must have degree 3, 4 or 5")),
    }
    .map_err(core_err)?;
    let summary = format!("{f}: {:?} ({})\n", v.classification, v.reason);
    Ok(tool_output("galois", json!({ "f": f, "prime_budget": budget }), v, summary))
}

pub fn cohomology(path: &str) -> Result<Output> {
    let c: CohomologyConfig = config::load(path)?;
    let t = conditions_table(c.m).map_err(core_err)?;
    let summary = format!("m = {}: (a) {} (b) {} (c) {} (d) {}\n", c.m, t.a(), t.b(), t.c(), t.d());
    let result = json!({ "a": t.a(), "b": t.b(), "c": t.c(), "d": t.d(), "table": t });
    Ok(tool_output("cohomology", json!({ "m": c.m }), result, summary))
}

pub fn kummer_eqs(path: &str) -> Result<Output> {
    let c: KummerConfig = config::load(path)?;
    let f = c.f.parse("f")?;
    let mut summary = String::new();
    let lambda = lambda_of(&c.lambda, &mut summary)?;
    let s = kummer_quadrics(&f, &lambda).map_err(core_err)?;
    writeln!(summary, "norm of lambda: {}", kumcert::exact::format_rational(&s.norm)).unwrap();
    Ok(tool_output("kummer-eqs", json!({ "f": f, "lambda": lambda }), s, summary))
}

fn place_of(p: &Option<PlaceInput>) -> Result<Option<Option<u64>>> {
    match p {
        None => Ok(None),
        Some(PlaceInput::Named(s)) if s == "real" => Ok(Some(None)),
        Some(PlaceInput::Named(s)) => invalid(format!("unknown place {s:?}")),
        Some(PlaceInput::Prime(p)) => {
            odd_prime("place", *p)?;
            Ok(Some(Some(*p)))
        }
    }
}

pub fn locsol(path: &str, ov: &Overrides) -> Result<Output> {
    let c: LocsolConfig = config::load(path)?;
    let effort = c.effort.resolve(c.seed, ov)?.local_effort;
    let place = place_of(&c.place)?;
    let mut summary = String::new();
    let (inputs, result): (Value, Value) = match c.surface {
        SurfaceKind::A => {
            let (Some(g1), Some(g2)) = (&c.g1, &c.g2) else { return invalid("surface a needs g1 and g2") };
            if c.f.is_some() || c.lambda.is_some() {
                return invalid("surface a takes g1 and g2 only");
            }
            let (g1, g2) = (g1.parse("g1")?, g2.parse("g2")?);
            let s = theorem_a_surface(&g1, &g2).map_err(core_err)?;
            let r = match place {
                None => serde_json::to_value(everywhere_local_a(&s, &effort)),
                Some(None) => serde_json::to_value(real_solubility_a(&s)),
                Some(Some(p)) => serde_json::to_value(padic_solubility_a(&s, p, &effort)),
            };
            (json!({ "surface": "a", "g1": g1, "g2": g2 }), r.expect("serializes"))
        }
        SurfaceKind::B => {
            let Some(f) = &c.f else { return invalid("surface b needs f") };
            if c.g1.is_some() || c.g2.is_some() {
                return invalid("surface b takes f and lambda only");
            }
            let f = f.parse("f")?;
            let lambda = lambda_of(&c.lambda, &mut summary)?;
            let s = kummer_quadrics(&f, &lambda).map_err(core_err)?;
            let r = match place {
                None => serde_json::to_value(everywhere_local_b(&s, &effort)),
                Some(None) => serde_json::to_value(real_solubility_b(&s, &effort)),
                Some(Some(p)) => serde_json::to_value(padic_solubility_b(&s, p, &effort)),
            };
            (json!({ "surface": "b", "f": f, "lambda": lambda }), r.expect("serializes"))
        }
    };
    let outcome = result["outcome"].as_str().unwrap_or("?").to_string();
    writeln!(summary, "outcome: {outcome}").unwrap();
    let mut out = tool_output("locsol", inputs, result, summary);
    out.json["inputs"]["place"] = serde_json::to_value(&c.place).unwrap();
    Ok(out)
}

pub fn find_prime(path: &str) -> Result<Output> {
    let c: FindPrimeConfig = config::load(path)?;
    let polys: Vec<PolyQ> =
        c.polys.iter().enumerate().map(|(i, p)| p.parse(&format!("polys[{i}]"))).collect::<Result<_>>()?;
    let query = AdmissiblePrimeQuery { primes: c.primes.clone(), real_place: true, targets: c.targets.clone(), bound: c.bound };
    let r = find_admissible_prime(&query, &polys).map_err(core_err)?;
    let summary = match r.prime {
        Some(q) => format!("q = {q}\n"),
        None => format!("no admissible prime up to {}\n", c.bound),
    };
    Ok(tool_output("find-prime", json!({ "polys": polys, "query": query }), r, summary))
}
