use std::path::Path;
use std::time::Instant;

use mcz_core::euler::{euler_integral_quad, euler_integral_thm1, EulerIntegralSpec};
use mcz_core::gamma::{log_barnes_g, log_gamma, trigamma};
use mcz_core::identities::{
    catalogue_markdown, reports_to_csv, reports_to_json, run_suite, run_suite_with_jobs, table as build_table,
    IdentityReport, TableName,
};
use mcz_core::multitrig::{log_mcos, log_mcos_product, log_msin, RouteChoice};
use mcz_core::polylog::{clausen2, polylog_unit, Sign, UnitCirclePoint};
use mcz_core::zeta::{alt_zeta, beta_fn, dirichlet_l, hurwitz_zeta, lambda_fn, riemann_zeta, CharacterSpec};
use mcz_core::EvalResult;

use crate::args::{BenchArgs, EvalArgs, ReportFormat, SignArg, TableArgs, VerifyArgs};
use crate::config::Config;
use crate::CliError;

type CliResult = Result<u8, CliError>;

fn need<T: Copy>(v: Option<T>, flag: &str, function: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::usage(format!("--fn {function} needs --{flag}")))
}

fn parse_chi(s: &str) -> Result<CharacterSpec, CliError> {
    match s {
        "chi3" => Ok(CharacterSpec::chi3()),
        "chi6" => Ok(CharacterSpec::chi6()),
        _ => match s.strip_prefix("principal:").map(str::parse::<u32>) {
            Some(Ok(m)) => Ok(CharacterSpec::principal(m)?),
            _ => Err(CliError::usage(format!("unknown character '{s}' (chi3, chi6, principal:M)"))),
        },
    }
}

fn no_route(route: &str, function: &str) -> Result<(), CliError> {
    if route == "auto" {
        Ok(())
    } else {
        Err(CliError::usage(format!("--fn {function} has no route '{route}'")))
    }
}

#[derive(Clone, Copy)]
enum EulerRoute {
    Quadrature,
    ClosedForm,
}

fn euler_route(route: &str) -> Result<EulerRoute, CliError> {
    match route {
        "auto" | "quadrature" => Ok(EulerRoute::Quadrature),
        "closed-form" => Ok(EulerRoute::ClosedForm),
        _ => Err(CliError::usage(format!("euler_integral has no route '{route}' (quadrature, closed-form)"))),
    }
}

fn euler_integral(r: u32, x: f64, route: EulerRoute) -> mcz_core::Result<EvalResult> {
    let spec = EulerIntegralSpec::new(r, x)?;
    match route {
        EulerRoute::Quadrature => euler_integral_quad(&spec, &spec.default_quadrature()),
        EulerRoute::ClosedForm => euler_integral_thm1(&spec),
    }
}

/// Named results for one evaluation; `li` yields two.
fn evaluate(a: &EvalArgs) -> Result<Vec<(&'static str, EvalResult)>, CliError> {
    let f = a.function.as_str();
    let single = |r: mcz_core::Result<EvalResult>| -> Result<Vec<(&'static str, EvalResult)>, CliError> {
        Ok(vec![("value", r?)])
    };
    if !matches!(f, "mcos" | "euler_integral") {
        no_route(&a.route, f)?;
    }
    match f {
        "zeta" => single(riemann_zeta(need(a.s, "s", f)?)),
        "hurwitz" => single(hurwitz_zeta(need(a.s, "s", f)?, need(a.a, "a", f)?)),
        "zeta_e" => single(alt_zeta(need(a.s, "s", f)?)),
        "lambda" => single(lambda_fn(need(a.s, "s", f)?)),
        "beta" => single(beta_fn(need(a.s, "s", f)?)),
        "L" => {
            let chi = parse_chi(a.chi.as_deref().ok_or_else(|| CliError::usage("--fn L needs --chi"))?)?;
            single(dirichlet_l(need(a.s, "s", f)?, &chi))
        }
        "li" => {
            let sign = match a.sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            let p = UnitCirclePoint::new(need(a.x, "x", f)?, sign)?;
            let (re, im) = polylog_unit(need(a.k, "k", f)?, p)?;
            Ok(vec![("re", re), ("im", im)])
        }
        "cl2" => {
            let theta = a.theta.or(a.x).ok_or_else(|| CliError::usage("--fn cl2 needs --theta"))?;
            single(clausen2(theta))
        }
        "lgamma" => single(log_gamma(need(a.x, "x", f)?)),
        "trigamma" => single(trigamma(need(a.x, "x", f)?)),
        "barnes_g" => single(log_barnes_g(need(a.x, "x", f)?)),
        "mcos" => {
            let route: RouteChoice = a.route.parse()?;
            single(log_mcos(need(a.r, "r", f)?, need(a.x, "x", f)?, route))
        }
        "msin" => single(log_msin(need(a.r, "r", f)?, need(a.x, "x", f)?)),
        "euler_integral" => {
            let route = euler_route(&a.route)?;
            single(euler_integral(need(a.r, "r", f)?, need(a.x, "x", f)?, route))
        }
        _ => Err(CliError::usage(format!(
            "unknown function '{f}'; expected one of zeta, hurwitz, zeta_e, lambda, beta, L, li, cl2, \
             lgamma, trigamma, barnes_g, mcos, msin, euler_integral"
        ))),
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

fn json_result(r: &EvalResult) -> String {
    format!(
        "{{\"value\": {}, \"error_bound\": {}, \"terms_or_cells\": {}, \"route\": {}}}",
        json_number(r.value),
        json_number(r.error_bound),
        r.terms_or_cells,
        json_string(&r.route)
    )
}

pub fn eval(a: &EvalArgs, cfg: &Config) -> CliResult {
    let results = evaluate(a)?;
    if a.json {
        let body = if let [(_, r)] = results.as_slice() {
            let inner = json_result(r);
            format!("{{\"fn\": {}, {}", json_string(&a.function), &inner[1..])
        } else {
            let parts: Vec<String> = results.iter().map(|(n, r)| format!("\"{n}\": {}", json_result(r))).collect();
            format!("{{\"fn\": {}, {}}}", json_string(&a.function), parts.join(", "))
        };
        println!("{body}");
    } else {
        for (name, r) in &results {
            let prefix = if *name == "value" { String::new() } else { format!("{name}_") };
            println!("{prefix}value = {:.16e}", r.value);
            println!("{prefix}error_bound = {:.16e}", r.error_bound);
            println!("{prefix}terms_or_cells = {}", r.terms_or_cells);
            println!("{prefix}route = {}", r.route);
        }
    }
    if let Some(tol) = a.tol.or(cfg.tol) {
        if let Some((_, worst)) = results.iter().find(|(_, r)| !(r.error_bound <= tol)) {
            return Err(CliError::tolerance(format!(
                "error bound {:.3e} exceeds tolerance {tol:.3e}",
                worst.error_bound
            )));
        }
    }
    Ok(0)
}

fn write_report(path: &Path, format: ReportFormat, reports: &[IdentityReport]) -> Result<(), CliError> {
    let body = match format {
        ReportFormat::Json => reports_to_json(reports),
        ReportFormat::Csv => {
            reports_to_csv(reports).map_err(|e| CliError { code: CliError::FAILED, msg: e.to_string() })?
        }
    };
    std::fs::write(path, body).map_err(|e| CliError::file(format!("cannot write {}: {e}", path.display())))
}

pub fn verify(a: &VerifyArgs, cfg: &Config) -> CliResult {
    if a.list {
        print!("{}", catalogue_markdown());
        return Ok(0);
    }
    let filter: Vec<&str> = a.suite.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let reports = match a.jobs.or(cfg.jobs) {
        Some(0) => return Err(CliError::usage("--jobs must be at least 1")),
        Some(j) => run_suite_with_jobs(&filter, j)?,
        None => run_suite(&filter),
    };
    if reports.is_empty() {
        eprintln!("mcz: warning: no identities match '{}'", a.suite);
    }
    println!("{:<44} {:>24} {:>8}  pass", "id", "abs_residual", "tol");
    for r in &reports {
        println!(
            "{:<44} {:>24.16e} {:>8.1e}  {}",
            r.id,
            r.abs_residual,
            r.tol,
            if r.pass { "PASS" } else { "FAIL" }
        );
        if let Some(e) = &r.error {
            println!("    error: {e}");
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checked, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    if let Some(path) = &a.report {
        let inferred = match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => Some(ReportFormat::Csv),
            Some("json") => Some(ReportFormat::Json),
            _ => None,
        };
        let format = a.format.or(inferred).or(cfg.format).unwrap_or(ReportFormat::Json);
        write_report(path, format, &reports)?;
    }
    Ok(if failed == 0 { 0 } else { CliError::FAILED })
}

pub fn table(a: &TableArgs) -> CliResult {
    let name: TableName = a.name.parse()?;
    let rows = build_table(name)?;
    println!("{:<24} {:>24} {:>24} {:>24}", "row", "closed_form", "recomputed", "residual");
    for r in &rows {
        println!("{:<24} {:>24.16e} {:>24.16e} {:>24.16e}", r.label, r.closed_form, r.recomputed, r.residual);
    }
    Ok(0)
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::usage(format!("grid must be start:stop:step, got '{spec}'"));
    let parts: Vec<f64> = spec.split(':').map(|p| p.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0) || !(stop >= start) || !start.is_finite() || !stop.is_finite() {
        return Err(bad());
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|i| start + i as f64 * step).collect())
}

#[derive(Clone, Copy)]
enum BenchRoute {
    Mcos(RouteChoice),
    Msin,
    Euler(EulerRoute),
}

fn bench_routes(function: &str, routes: &str) -> Result<Vec<(String, BenchRoute)>, CliError> {
    routes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            let route = match function {
                "mcos" => BenchRoute::Mcos(name.parse()?),
                "msin" if name == "integral" || name == "auto" => BenchRoute::Msin,
                "msin" => return Err(CliError::usage(format!("msin has no route '{name}' (integral)"))),
                "euler_integral" => BenchRoute::Euler(euler_route(name)?),
                _ => return Err(CliError::usage(format!("bench supports mcos, msin, euler_integral; got '{function}'"))),
            };
            Ok((name.to_string(), route))
        })
        .collect()
}

pub fn bench(a: &BenchArgs) -> CliResult {
    let routes = bench_routes(&a.function, &a.routes)?;
    if routes.is_empty() {
        return Err(CliError::usage("no routes given"));
    }
    let grid = parse_grid(&a.grid)?;
    println!("route,x,value,error_bound,terms_or_cells,wall_time");
    for (name, route) in &routes {
        for &x in &grid {
            let start = Instant::now();
            let r = match *route {
                BenchRoute::Mcos(RouteChoice::Product) => log_mcos_product(a.r, x, a.terms),
                BenchRoute::Mcos(c) => log_mcos(a.r, x, c),
                BenchRoute::Msin => log_msin(a.r, x),
                BenchRoute::Euler(e) => euler_integral(a.r, x, e),
            };
            let t = start.elapsed().as_secs_f64();
            match r {
                Ok(v) => println!(
                    "{name},{x:.16e},{:.16e},{:.16e},{},{t:.16e}",
                    v.value, v.error_bound, v.terms_or_cells
                ),
                Err(e) => {
                    eprintln!("mcz: {name} at x = {x}: {e}");
                    println!("{name},{x:.16e},NaN,NaN,0,{t:.16e}");
                }
            }
        }
    }
    Ok(0)
}
