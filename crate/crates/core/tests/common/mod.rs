//! Property checks shared by the proptest drivers and the acceptance runner.
//! Each returns `Err` with a description of the first violation.
#![allow(dead_code)]

use mcz_core::identities::{reports_from_json, reports_to_json, run_suite_with_jobs, IdentityReport};
use mcz_core::numerics::{integrate, sum_alternating, QuadratureConfig, SeriesConfig};
use mcz_core::polylog::trig_sums;

fn gk() -> QuadratureConfig {
    QuadratureConfig::gauss_kronrod(1e-10)
}

fn poly(c: [f64; 3], t: f64) -> f64 {
    c[0] + c[1] * t + c[2] * t * t
}

/// `int (a f + b g) = a int f + b int g` with `f = sin(w t) e^{-t}` and a quadratic `g`.
pub fn quad_linearity(a: f64, b: f64, w: f64, c: [f64; 3], lo: f64, hi: f64) -> Result<(), String> {
    let f = |t: f64| (w * t).sin() * (-t).exp();
    let g = |t: f64| poly(c, t);
    let err = |e| format!("{e}");
    let both = integrate(|t| a * f(t) + b * g(t), lo, hi, &gk()).map_err(err)?;
    let fi = integrate(f, lo, hi, &gk()).map_err(err)?;
    let gi = integrate(g, lo, hi, &gk()).map_err(err)?;
    let rhs = a * fi.value + b * gi.value;
    let slack = both.error_bound + a.abs() * fi.error_bound + b.abs() * gi.error_bound + 1e-14 * (1.0 + rhs.abs());
    let d = (both.value - rhs).abs();
    if d > slack {
        return Err(format!("linearity a={a} b={b} w={w} c={c:?} [{lo},{hi}]: diff {d:e} > {slack:e}"));
    }
    Ok(())
}

/// `int_a^c = int_a^b + int_b^c` for a smooth oscillatory integrand.
pub fn quad_additivity(w: f64, a: f64, b: f64, c: f64) -> Result<(), String> {
    let f = |t: f64| (w * t).cos() / (1.0 + t * t);
    let err = |e| format!("{e}");
    let whole = integrate(f, a, c, &gk()).map_err(err)?;
    let left = integrate(f, a, b, &gk()).map_err(err)?;
    let right = integrate(f, b, c, &gk()).map_err(err)?;
    let d = (whole.value - left.value - right.value).abs();
    let slack = whole.error_bound + left.error_bound + right.error_bound + 1e-15;
    if d > slack {
        return Err(format!("additivity w={w} [{a},{b},{c}]: diff {d:e} > {slack:e}"));
    }
    Ok(())
}

/// CVZ and plain summation of `sum (-1)^n q^n / (n + a)` agree within their bounds.
pub fn cvz_matches_direct(q: f64, a: f64) -> Result<(), String> {
    let term = |n: u64| {
        let s = if n % 2 == 0 { 1.0 } else { -1.0 };
        s * q.powi(n as i32) / (n as f64 + a)
    };
    let err = |e| format!("{e}");
    let acc = sum_alternating(term, &SeriesConfig::with_tol(1e-13)).map_err(err)?;
    let direct = sum_alternating(term, &SeriesConfig::direct(1e-13, 2_000_000)).map_err(err)?;
    let d = (acc.value - direct.value).abs();
    let slack = acc.error_bound + direct.error_bound + 1e-15;
    if d > slack {
        return Err(format!("cvz q={q} a={a}: {} vs {} diff {d:e} > {slack:e}", acc.value, direct.value));
    }
    Ok(())
}

/// The rational fast path for `sum (-1)^n cos(pi n p/q)/n^s` and the sine
/// analogue against a direct partial sum with an explicit tail majorant.
pub fn rational_vs_direct(s: u32, p: i64, q: i64) -> Result<(), String> {
    const N: u64 = 20_000;
    let x = p as f64 / q as f64;
    let (c, sn) = trig_sums(s, x).map_err(|e| format!("{e}"))?;
    let (mut dc, mut ds) = (0.0f64, 0.0f64);
    // Small terms first.
    for n in (1..=N).rev() {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // Reduce the phase exactly in integers before going to floating point.
        let m = (n as i64 * p).rem_euclid(2 * q) as f64;
        let th = std::f64::consts::PI * m / q as f64;
        let w = sign / (n as f64).powi(s as i32);
        dc += w * th.cos();
        ds += w * th.sin();
    }
    let tail = 1.0 / ((s as f64 - 1.0) * (N as f64).powi(s as i32 - 1)) + 1e-15;
    for (name, fast, slow) in [("cos", &c, dc), ("sin", &sn, ds)] {
        let d = (fast.value - slow).abs();
        if d > tail + fast.error_bound {
            return Err(format!("{name} s={s} x={p}/{q}: {} vs {slow} diff {d:e}", fast.value));
        }
    }
    Ok(())
}

/// The same filter yields identical reports whatever the worker count.
pub fn reports_deterministic(filter: &str, jobs_a: usize, jobs_b: usize) -> Result<(), String> {
    let a = run_suite_with_jobs(&[filter], jobs_a).map_err(|e| format!("{e}"))?;
    let b = run_suite_with_jobs(&[filter], jobs_b).map_err(|e| format!("{e}"))?;
    if a.is_empty() {
        return Err(format!("filter {filter} selected nothing"));
    }
    if a.len() != b.len() || !a.iter().zip(&b).all(|(x, y)| x.same_values(y)) {
        return Err(format!("{filter}: jobs {jobs_a} and {jobs_b} disagree"));
    }
    Ok(())
}

/// A report built from `vals`; NaN stands in for a missing value (the tolerance and
/// wall time are always finite).
pub fn synthetic_report(id: String, vals: [f64; 7], pass: bool, error: Option<String>) -> IdentityReport {
    IdentityReport {
        id,
        lhs_value: vals[0],
        rhs_value: vals[1],
        abs_residual: vals[2],
        rel_residual: vals[3],
        lhs_bound: vals[4],
        rhs_bound: vals[5],
        tol: vals[6].abs().max(1e-300),
        pass,
        wall_time: if vals[6].is_finite() { vals[6].abs() } else { 0.0 },
        error,
    }
}

pub fn json_round_trip(reports: &[IdentityReport]) -> Result<(), String> {
    let text = reports_to_json(reports);
    let back = reports_from_json(&text).map_err(|e| format!("{e}"))?;
    if back.len() != reports.len() {
        return Err("length changed".into());
    }
    for (a, b) in reports.iter().zip(&back) {
        let same = |x: f64, y: f64| if x.is_finite() { x.to_bits() == y.to_bits() } else { y.is_nan() };
        let ok = a.same_values(b) || {
            a.id == b.id
                && a.pass == b.pass
                && a.error == b.error
                && same(a.lhs_value, b.lhs_value)
                && same(a.rhs_value, b.rhs_value)
                && same(a.abs_residual, b.abs_residual)
                && same(a.rel_residual, b.rel_residual)
                && same(a.lhs_bound, b.lhs_bound)
                && same(a.rhs_bound, b.rhs_bound)
        };
        if !ok || a.wall_time.to_bits() != b.wall_time.to_bits() {
            return Err(format!("{a:?} came back as {b:?}"));
        }
    }
    Ok(())
}
