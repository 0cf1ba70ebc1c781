//! Command-line front end: semigroup structure, gap series routes, and
//! identity verification with deterministic JSON or CSV output.
//!
//! Exit codes: 0 success (and every check passed), 1 a verification
//! failed, 2 usage or domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use gapzeta::output::{format_float, format_ratio, ratio_to_float, record};
use gapzeta::{
    g_minus_1_finite, g_minus_n_direct, g_minus_n_zeta, identity_from_gaps, scan_identities,
    verify_dual_identity, IdentityReport, Semigroup2, SeriesValue, ZetaVariant,
};

/// Refuse to materialize gap sets beyond this many candidate integers.
const GAP_ENUMERATION_LIMIT: u128 = 100_000_000;
/// Magnitude cap for gsum exponents; beyond this the exact powers are
/// enormous and the floats degenerate.
const EXPONENT_LIMIT: i64 = 1024;

#[derive(Parser)]
#[command(
    name = "gapzeta",
    version,
    about = "Gap series of two-generator numerical semigroups and the zeta identities they induce"
)]
struct Cli {
    /// Absolute tolerance a verification may consume beyond its rigorous
    /// error budget
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,

    /// Write the report here instead of standard out
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Finite,
    ZetaA,
    ZetaB,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Dual,
    Gaps,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, conductor, genus, and the gap list
    Info { d1: u64, d2: u64 },

    /// Gap power series: n >= 0 sums g^n, negative n sums 1/g^|n| by the
    /// requested route
    Gsum {
        d1: u64,
        d2: u64,
        /// Exponent; the finite route needs n = -1, zeta routes n <= -2
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },

    /// Verify the zeta identities at one (d1, d2, n)
    Verify {
        d1: u64,
        d2: u64,
        n: u32,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        /// Pass only when residual <= budget, with no tolerance floor
        #[arg(long)]
        strict: bool,
    },

    /// Verify identities for every coprime pair 2 <= d1 < d2 <= dmax
    Scan {
        #[arg(long)]
        dmax: u64,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
}

struct Rendered {
    text: String,
    check_failed: bool,
}

impl Rendered {
    fn clean(text: String) -> Rendered {
        Rendered {
            text,
            check_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rendered) => {
            if let Err(message) = deliver(&cli.out, &rendered.text) {
                eprintln!("gapzeta: {message}");
                return ExitCode::from(2);
            }
            if rendered.check_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("gapzeta: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Rendered, String> {
    if !(cli.tolerance > 0.0) || !cli.tolerance.is_finite() {
        return Err(format!(
            "tolerance must be a positive finite number, got {}",
            cli.tolerance
        ));
    }
    match &cli.command {
        Command::Info { d1, d2 } => cmd_info(cli, *d1, *d2),
        Command::Gsum { d1, d2, n, method } => cmd_gsum(cli, *d1, *d2, *n, *method),
        Command::Verify {
            d1,
            d2,
            n,
            kind,
            strict,
        } => cmd_verify(cli, *d1, *d2, *n, *kind, *strict),
        Command::Scan { dmax, n_min, n_max } => cmd_scan(cli, *dmax, *n_min, *n_max),
    }
}

fn deliver(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn semigroup(d1: u64, d2: u64) -> Result<Semigroup2, String> {
    Semigroup2::new(d1, d2).map_err(|e| e.to_string())
}

fn check_enumerable(s: &Semigroup2) -> Result<(), String> {
    if s.frobenius() > GAP_ENUMERATION_LIMIT {
        Err(format!(
            "gap enumeration for {s} would scan {} integers (limit {}); \
             the zeta routes avoid enumeration",
            s.frobenius(),
            GAP_ENUMERATION_LIMIT
        ))
    } else {
        Ok(())
    }
}

fn int_value(x: u128) -> Value {
    match u64::try_from(x) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(x.to_string()),
    }
}

fn json_line(value: &Value) -> String {
    let mut text = serde_json::to_string(value).expect("serializable record");
    text.push('\n');
    text
}

fn cmd_info(cli: &Cli, d1: u64, d2: u64) -> Result<Rendered, String> {
    let s = semigroup(d1, d2)?;
    check_enumerable(&s)?;
    let gaps: Vec<Value> = s.gaps().iter().map(int_value).collect();
    let text = match cli.format {
        OutputFormat::Json => {
            let results = json!({
                "frobenius": int_value(s.frobenius()),
                "conductor": int_value(s.conductor()),
                "genus": s.genus(),
                "gaps": gaps,
            });
            json_line(&record(
                "info",
                json!({"d1": d1, "d2": d2}),
                results,
                None,
            ))
        }
        OutputFormat::Csv => {
            let list = s
                .gaps()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(";");
            format!(
                "key,value\nfrobenius,{}\nconductor,{}\ngenus,{}\ngaps,{}\n",
                s.frobenius(),
                s.conductor(),
                s.genus(),
                list
            )
        }
    };
    Ok(Rendered::clean(text))
}

struct RouteValue {
    name: &'static str,
    value: f64,
    exact: Option<String>,
    error_bound: f64,
}

impl RouteValue {
    fn from_series(v: SeriesValue) -> RouteValue {
        RouteValue {
            name: match v.method {
                gapzeta::Method::Direct => "direct",
                gapzeta::Method::FiniteForm => "finite",
                gapzeta::Method::ZetaA => "zeta-a",
                gapzeta::Method::ZetaB => "zeta-b",
            },
            value: v.value,
            exact: v.exact.as_ref().map(format_ratio),
            error_bound: v.error_bound,
        }
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Direct => "direct",
        MethodArg::Finite => "finite",
        MethodArg::ZetaA => "zeta-a",
        MethodArg::ZetaB => "zeta-b",
        MethodArg::All => "all",
    }
}

fn cmd_gsum(cli: &Cli, d1: u64, d2: u64, n: i64, method: MethodArg) -> Result<Rendered, String> {
    let s = semigroup(d1, d2)?;
    if n.abs() > EXPONENT_LIMIT {
        return Err(format!(
            "exponent {n} is out of the supported range [-{EXPONENT_LIMIT}, {EXPONENT_LIMIT}]"
        ));
    }
    match method {
        MethodArg::Finite if n != -1 => {
            return Err(format!("the finite route is the n = -1 form, got n = {n}"));
        }
        MethodArg::ZetaA | MethodArg::ZetaB if n > -2 => {
            return Err(format!("zeta routes need n <= -2, got n = {n}"));
        }
        _ => {}
    }

    let wants = |candidate: MethodArg| method == MethodArg::All || method == candidate;
    let mut routes: Vec<RouteValue> = Vec::new();
    if wants(MethodArg::Direct) {
        check_enumerable(&s)?;
        if n >= 0 {
            let exact = s.gap_power_sum(n as u32);
            routes.push(RouteValue {
                name: "direct",
                value: ratio_to_float(&exact),
                exact: Some(format_ratio(&exact)),
                error_bound: 0.0,
            });
        } else {
            routes.push(RouteValue::from_series(g_minus_n_direct(&s, n.unsigned_abs() as u32)));
        }
    }
    if wants(MethodArg::Finite) && n == -1 {
        check_enumerable(&s)?;
        routes.push(RouteValue::from_series(g_minus_1_finite(&s)));
    }
    if n <= -2 {
        let m = n.unsigned_abs() as u32;
        if wants(MethodArg::ZetaA) {
            routes.push(RouteValue::from_series(
                g_minus_n_zeta(&s, m, ZetaVariant::A).map_err(|e| e.to_string())?,
            ));
        }
        if wants(MethodArg::ZetaB) {
            routes.push(RouteValue::from_series(
                g_minus_n_zeta(&s, m, ZetaVariant::B).map_err(|e| e.to_string())?,
            ));
        }
    }

    let discrepancy = if method == MethodArg::All {
        let mut worst = 0.0f64;
        for a in &routes {
            for b in &routes {
                worst = worst.max((a.value - b.value).abs());
            }
        }
        Some(worst)
    } else {
        None
    };

    let text = match cli.format {
        OutputFormat::Json => {
            let mut results = Map::new();
            let mut bounds = Map::new();
            for route in &routes {
                let mut entry = Map::new();
                entry.insert("value".into(), Value::String(format_float(route.value)));
                if let Some(exact) = &route.exact {
                    entry.insert("exact".into(), Value::String(exact.clone()));
                }
                entry.insert(
                    "error_bound".into(),
                    Value::String(format_float(route.error_bound)),
                );
                results.insert(route.name.into(), Value::Object(entry));
                if route.error_bound > 0.0 {
                    bounds.insert(
                        route.name.into(),
                        Value::String(format_float(route.error_bound)),
                    );
                }
            }
            if let Some(worst) = discrepancy {
                results.insert("discrepancy".into(), Value::String(format_float(worst)));
            }
            let error_bounds = if bounds.is_empty() {
                None
            } else {
                Some(Value::Object(bounds))
            };
            json_line(&record(
                "gsum",
                json!({"d1": d1, "d2": d2, "n": n, "method": method_name(method)}),
                Value::Object(results),
                error_bounds,
            ))
        }
        OutputFormat::Csv => {
            let mut text = String::from("key,value\n");
            for route in &routes {
                text.push_str(&format!("{}.value,{}\n", route.name, format_float(route.value)));
                if let Some(exact) = &route.exact {
                    text.push_str(&format!("{}.exact,{exact}\n", route.name));
                }
                text.push_str(&format!(
                    "{}.error_bound,{}\n",
                    route.name,
                    format_float(route.error_bound)
                ));
            }
            if let Some(worst) = discrepancy {
                text.push_str(&format!("discrepancy,{}\n", format_float(worst)));
            }
            text
        }
    };
    Ok(Rendered::clean(text))
}

fn report_value(r: &IdentityReport) -> Value {
    json!({
        "d1": r.d1,
        "d2": r.d2,
        "n": r.n,
        "kind": r.kind.to_string(),
        "lhs": format_float(r.lhs),
        "rhs": format_float(r.rhs),
        "residual": format_float(r.residual),
        "budget": format_float(r.budget),
        "passed": r.passed,
    })
}

const REPORT_HEADER: &str = "d1,d2,n,kind,lhs,rhs,residual,budget,passed\n";

fn report_row(r: &IdentityReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}\n",
        r.d1,
        r.d2,
        r.n,
        r.kind,
        format_float(r.lhs),
        format_float(r.rhs),
        format_float(r.residual),
        format_float(r.budget),
        r.passed
    )
}

fn cmd_verify(
    cli: &Cli,
    d1: u64,
    d2: u64,
    n: u32,
    kind: KindArg,
    strict: bool,
) -> Result<Rendered, String> {
    if n < 2 {
        return Err(format!("n must be >= 2, got {n}"));
    }
    let mut reports = Vec::new();
    if matches!(kind, KindArg::Dual | KindArg::Both) {
        reports.push(verify_dual_identity(d1, d2, n, cli.tolerance).map_err(|e| e.to_string())?);
    }
    if matches!(kind, KindArg::Gaps | KindArg::Both) {
        let s = semigroup(d1, d2)?;
        check_enumerable(&s)?;
        reports.push(identity_from_gaps(&s, n, cli.tolerance).map_err(|e| e.to_string())?);
    }
    if strict {
        for r in &mut reports {
            r.passed = r.residual <= r.budget;
        }
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let kind_name = match kind {
        KindArg::Dual => "dual",
        KindArg::Gaps => "gaps",
        KindArg::Both => "both",
    };
    let text = match cli.format {
        OutputFormat::Json => {
            let results = json!({
                "all_passed": all_passed,
                "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
            });
            json_line(&record(
                "verify",
                json!({
                    "d1": d1, "d2": d2, "n": n,
                    "kind": kind_name,
                    "strict": strict,
                    "tolerance": format_float(cli.tolerance),
                }),
                results,
                None,
            ))
        }
        OutputFormat::Csv => {
            let mut text = String::from(REPORT_HEADER);
            for r in &reports {
                text.push_str(&report_row(r));
            }
            text
        }
    };
    Ok(Rendered {
        text,
        check_failed: !all_passed,
    })
}

fn cmd_scan(cli: &Cli, dmax: u64, n_min: u32, n_max: u32) -> Result<Rendered, String> {
    if dmax < 3 {
        return Err(format!("dmax must be at least 3, got {dmax}"));
    }
    if n_min < 2 || n_max < n_min || n_max > 64 {
        return Err(format!(
            "exponent range must satisfy 2 <= n-min <= n-max <= 64, got [{n_min}, {n_max}]"
        ));
    }
    let reports = scan_identities(dmax, n_min..=n_max, cli.tolerance);
    let passed = reports.iter().filter(|r| r.passed).count();
    let failed = reports.len() - passed;
    let text = match cli.format {
        OutputFormat::Json => {
            let results = json!({
                "rows": reports.iter().map(report_value).collect::<Vec<_>>(),
                "summary": {
                    "total": reports.len(),
                    "passed": passed,
                    "failed": failed,
                },
            });
            json_line(&record(
                "scan",
                json!({
                    "dmax": dmax,
                    "n_min": n_min,
                    "n_max": n_max,
                    "tolerance": format_float(cli.tolerance),
                }),
                results,
                None,
            ))
        }
        OutputFormat::Csv => {
            let mut text = String::from(REPORT_HEADER);
            for r in &reports {
                text.push_str(&report_row(r));
            }
            eprintln!(
                "scan: {} checks, {passed} passed, {failed} failed",
                reports.len()
            );
            text
        }
    };
    Ok(Rendered {
        text,
        check_failed: failed > 0,
    })
}
