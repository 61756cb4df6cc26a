//! Command-line front end: subcommand dispatch, JSON emission, and a human
//! rendering of the same data.
//!
//! JSON is the machine interface; the human format walks the identical JSON
//! value, so the two can never drift apart. All coefficients serialize as
//! `p` or `p/q` strings. Identical configuration and seed produce
//! byte-identical output.

pub mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use hilbcurve::chart_mu::build_presentation;
use hilbcurve::chart_un::ChartIdealN;
use hilbcurve::components::{components_curve, count_components, CurveSpec};
use hilbcurve::dimcheck::verify_dims;
use hilbcurve::partitions::{rows_at_most, Partition};
use hilbcurve::rational::{rational_to_string, Rational};
use hilbcurve::strata::{build_stratum_ideal, sample_stratum, StratumLabel, StratumPoint};
use hilbcurve::unipoly::UniPoly;
use parse::parse_poly;
use serde_json::{json, Value};
use std::str::FromStr;

pub const SCHEMA: &str = "hilbcurve/1";
pub const DEFAULT_SEED: u64 = 1;

/// Exit codes: 0 success, 1 verification failure, 2 input error.
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Human,
}

#[derive(Parser, Debug)]
#[command(
    name = "hilbcurve",
    version,
    about = "Exact computations with Hilbert schemes of points on non-reduced plane curves"
)]
pub struct Cli {
    /// Output format. JSON is the machine interface; human renders the same data.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate the irreducible components for n points.
    Components {
        /// Number of points.
        #[arg(long)]
        n: usize,
        /// Multiplicity of a single local branch y^beta = 0.
        #[arg(long)]
        beta: Option<usize>,
        /// Branch multiplicities of a multi-branch curve, e.g. 1,2.
        #[arg(long, value_delimiter = ',')]
        branches: Option<Vec<usize>>,
    },
    /// Test whether y^beta (or a given polynomial f) lies in (a, y - b).
    Membership {
        /// Monic generator a(x), e.g. "x^2 - 3*x + 1".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// The polynomial b(x) with y - b(x) the second generator.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        beta: usize,
        /// Optional polynomial in x and y to test instead of y^beta.
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
    },
    /// Build a stratum ideal from multiplicities, points and cofactor.
    Stratum {
        /// Point multiplicities, e.g. 2,1.
        #[arg(long, value_delimiter = ',', required = true)]
        mults: Vec<usize>,
        #[arg(long)]
        beta: usize,
        /// Distinct rational x-coordinates, e.g. 1,-2 or 1/2,3. Sampled from
        /// the seed when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        points: Option<Vec<String>>,
        /// Cofactor alpha(x) for general-case strata.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Seed for sampling when points are omitted (default HILB_SEED or 1).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Multiplicity profile of the Hilbert-Chow image of (a, y).
    Profile {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Emit the relation system of a chart presentation.
    Chart {
        /// Partition of n, e.g. 2,1.
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
        /// Also emit the y^beta equations.
        #[arg(long)]
        zbeta: Option<usize>,
    },
    /// Verify dimension formulas by exact rank computations at sampled points.
    VerifyDims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Seed (default HILB_SEED or 1).
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn input_error(message: impl Into<String>) -> RunOutput {
    RunOutput {
        code: 2,
        stdout: format!("error: {}", message.into()),
    }
}

fn seed_or_default(seed: Option<u64>) -> u64 {
    seed.or_else(|| std::env::var("HILB_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_SEED)
}

fn poly_coeffs_json(p: &UniPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(rational_to_string(c)))
            .collect(),
    )
}

fn ideal_json(ideal: &ChartIdealN) -> Value {
    json!({
        "n": ideal.n(),
        "a": poly_coeffs_json(ideal.a()),
        "b": poly_coeffs_json(ideal.b()),
        "text": ideal.to_string(),
    })
}

fn parse_uni(text: &str, what: &str) -> Result<UniPoly, RunOutput> {
    let expr = parse_poly(text).map_err(|e| input_error(format!("{what}: {e}")))?;
    expr.to_uni_x()
        .map_err(|e| input_error(format!("{what}: {e}")))
}

fn parse_partition(parts: &[usize], what: &str) -> Result<Partition, RunOutput> {
    if parts.contains(&0) {
        return Err(input_error(format!("{what}: parts must be positive")));
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(input_error(format!(
            "{what}: parts must be weakly decreasing"
        )));
    }
    Ok(Partition::new(parts.to_vec()))
}

pub fn run(cli: Cli) -> RunOutput {
    let result = match cli.command {
        Command::Components { n, beta, branches } => run_components(n, beta, branches),
        Command::Membership { a, b, beta, f } => run_membership(&a, &b, beta, f.as_deref()),
        Command::Stratum {
            mults,
            beta,
            points,
            alpha,
            seed,
        } => run_stratum(&mults, beta, points.as_deref(), alpha.as_deref(), seed),
        Command::Profile { a } => run_profile(&a),
        Command::Chart { mu, zbeta } => run_chart(&mu, zbeta),
        Command::VerifyDims {
            n,
            beta,
            trials,
            seed,
        } => run_verify(n, beta, trials, seed),
    };
    match result {
        Err(out) => out,
        Ok((code, value)) => {
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&value).unwrap(),
                Format::Human => render_human(&value),
            };
            RunOutput { code, stdout }
        }
    }
}

fn run_components(
    n: usize,
    beta: Option<usize>,
    branches: Option<Vec<usize>>,
) -> Result<(i32, Value), RunOutput> {
    let betas = match (beta, branches) {
        (Some(_), Some(_)) => {
            return Err(input_error("pass either --beta or --branches, not both"))
        }
        (Some(b), None) => vec![b],
        (None, Some(bs)) => bs,
        (None, None) => return Err(input_error("one of --beta or --branches is required")),
    };
    if betas.contains(&0) {
        return Err(input_error("branch multiplicities must be positive"));
    }
    let spec = CurveSpec::from_betas(&betas);
    let components = components_curve(n, &spec);
    let count = count_components(n, &spec);
    assert_eq!(count, components.len() as u64);
    let value = json!({
        "schema": SCHEMA,
        "command": "components",
        "n": n,
        "branches": betas.iter().map(|&b| json!({"beta": b})).collect::<Vec<_>>(),
        "components": components
            .iter()
            .map(|c| {
                c.per_branch()
                    .iter()
                    .map(|p| p.parts().to_vec())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
        "count": count,
        "dim": n,
    });
    Ok((0, value))
}

fn run_membership(
    a: &str,
    b: &str,
    beta: usize,
    f: Option<&str>,
) -> Result<(i32, Value), RunOutput> {
    if beta == 0 {
        return Err(input_error("--beta must be positive"));
    }
    let a = parse_uni(a, "--a")?;
    let b = parse_uni(b, "--b")?;
    let ideal = ChartIdealN::new(a, b).map_err(|e| input_error(format!("--a: {e}")))?;
    let (contains, tested) = match f {
        None => (ideal.contains_power_y(beta), format!("y^{beta}")),
        Some(text) => {
            let expr = parse_poly(text).map_err(|e| input_error(format!("--f: {e}")))?;
            let multi = expr.to_multi();
            let contains = ideal
                .contains_poly(&multi)
                .map_err(|e| input_error(format!("--f: {e}")))?;
            (contains, expr.to_string())
        }
    };
    let oracle = f.is_none().then(|| ideal.oracle_nilpotency(beta));
    let value = json!({
        "schema": SCHEMA,
        "command": "membership",
        "ideal": ideal_json(&ideal),
        "beta": beta,
        "poly": tested,
        "contains": contains,
        "oracle_nilpotency": oracle,
    });
    Ok((0, value))
}

fn run_stratum(
    mults: &[usize],
    beta: usize,
    points: Option<&[String]>,
    alpha: Option<&str>,
    seed: Option<u64>,
) -> Result<(i32, Value), RunOutput> {
    if beta == 0 {
        return Err(input_error("--beta must be positive"));
    }
    let mults = parse_partition(mults, "--mults")?;
    if mults.is_empty() {
        return Err(input_error("--mults must be nonempty"));
    }
    let label = StratumLabel::new(mults, beta);
    let pt = match points {
        Some(texts) => {
            let mut parsed = Vec::with_capacity(texts.len());
            for t in texts {
                let r = Rational::from_str(t)
                    .map_err(|e| input_error(format!("--points: '{t}': {e}")))?;
                parsed.push(r);
            }
            let alpha = match alpha {
                Some(text) => Some(parse_uni(text, "--alpha")?),
                None => None,
            };
            StratumPoint {
                points: parsed,
                mults: label.mults().parts().to_vec(),
                alpha,
            }
        }
        None => {
            if alpha.is_some() {
                return Err(input_error("--alpha requires explicit --points"));
            }
            sample_stratum(&label, seed_or_default(seed))
        }
    };
    let ideal =
        build_stratum_ideal(&label, &pt).map_err(|e| input_error(format!("stratum: {e}")))?;
    let member = ideal.contains_power_y(beta);
    let profile = ideal.hilbert_chow_profile();
    let value = json!({
        "schema": SCHEMA,
        "command": "stratum",
        "label": {
            "mults": label.mults().parts().to_vec(),
            "n": label.n(),
            "beta": beta,
            "dim": label.dimension(),
            "case": label.classify_case().to_string(),
        },
        "points": pt.points.iter().map(|r| Value::String(rational_to_string(r))).collect::<Vec<_>>(),
        "alpha": pt.alpha.as_ref().map(poly_coeffs_json),
        "ideal": ideal_json(&ideal),
        "member": member,
        "profile": profile.mults().to_vec(),
    });
    Ok((0, value))
}

fn run_profile(a: &str) -> Result<(i32, Value), RunOutput> {
    let a = parse_uni(a, "--a")?;
    let ideal =
        ChartIdealN::new(a, UniPoly::zero()).map_err(|e| input_error(format!("--a: {e}")))?;
    let profile = ideal.hilbert_chow_profile();
    let value = json!({
        "schema": SCHEMA,
        "command": "profile",
        "a": poly_coeffs_json(ideal.a()),
        "profile": profile.mults().to_vec(),
        "points": profile.points(),
    });
    Ok((0, value))
}

fn run_chart(mu: &[usize], zbeta: Option<usize>) -> Result<(i32, Value), RunOutput> {
    let mu = parse_partition(mu, "--mu")?;
    if mu.is_empty() {
        return Err(input_error("--mu: partition must be nonempty"));
    }
    if let Some(beta) = zbeta {
        if beta == 0 {
            return Err(input_error("--zbeta must be positive"));
        }
    }
    let pres = build_presentation(&mu).map_err(|e| input_error(format!("--mu: {e}")))?;
    let commutators = pres.commutator_relations();
    let warning = zbeta.and_then(|beta| {
        (!rows_at_most(&mu, beta)).then(|| {
            format!(
                "partition {mu} has {} rows > beta = {beta}; the y^{beta} locus misses this chart and the system below has no solutions",
                mu.rows()
            )
        })
    });
    let zbeta_json = zbeta.map(|beta| {
        let system = pres.zbeta_equations(beta);
        json!({
            "beta": beta,
            "labels": system.labels().to_vec(),
            "polys": system.polys().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "forces_unit": system.forces_unit(),
        })
    });
    // variable order documented in the output header
    let value = json!({
        "schema": SCHEMA,
        "command": "chart",
        "mu": mu.parts().to_vec(),
        "n": pres.n(),
        "header": "variables C[r,s][h,k] = coefficient of basis box x^h y^k in the expansion of x^r y^s; border monomials and boxes both in (degree, x-exponent) order",
        "num_variables": pres.num_variables(),
        "free_variables": pres.free_variables().to_vec(),
        "border": pres.border().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "corners": pres.corners().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "basis": pres.boxes().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "commutators": {
            "labels": commutators.labels().to_vec(),
            "polys": commutators.polys().iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "zbeta": zbeta_json,
        "warning": warning,
    });
    Ok((0, value))
}

fn run_verify(
    n: usize,
    beta: usize,
    trials: usize,
    seed: Option<u64>,
) -> Result<(i32, Value), RunOutput> {
    if n == 0 || beta == 0 {
        return Err(input_error("--n and --beta must be positive"));
    }
    if trials == 0 {
        return Err(input_error("--trials must be positive"));
    }
    let seed = seed_or_default(seed);
    let report = verify_dims(n, beta, trials, seed);
    let labels: Vec<Value> = report
        .labels
        .iter()
        .map(|l| {
            json!({
                "mults": l.mults,
                "case": l.case.to_string(),
                "dim": l.dim,
                "is_component": l.is_component,
                "param_ranks": l.param_ranks,
                "param_ok": l.param_ok,
                "tangent_dims": l.tangent_dims,
                "tangent_ge_n": l.tangent_ge_n,
                "tangent_eq_n_count": l.tangent_eq_n_count,
                "seeds": l.seeds,
                "pass": l.pass,
            })
        })
        .collect();
    let value = json!({
        "schema": SCHEMA,
        "command": "verify-dims",
        "n": n,
        "beta": beta,
        "trials": trials,
        "seed": seed,
        "labels": labels,
        "pass": report.pass,
    });
    Ok((if report.pass { 0 } else { 1 }, value))
}

/// Renders a JSON value as indented `key: value` lines. Purely a view of the
/// JSON output.
pub fn render_human(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out.trim_end().to_string()
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if v.is_null() {
                    continue;
                }
                if is_scalar(v) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_text(v)));
                } else if v.as_array().is_some_and(|a| a.iter().all(is_scalar)) {
                    let items: Vec<String> =
                        v.as_array().unwrap().iter().map(scalar_text).collect();
                    out.push_str(&format!("{pad}{k}: [{}]\n", items.join(", ")));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_into(v, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if is_scalar(v) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(v)));
                } else if v.as_array().is_some_and(|a| a.iter().all(is_scalar)) {
                    let inner: Vec<String> =
                        v.as_array().unwrap().iter().map(scalar_text).collect();
                    out.push_str(&format!("{pad}- [{}]\n", inner.join(", ")));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_into(v, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}
