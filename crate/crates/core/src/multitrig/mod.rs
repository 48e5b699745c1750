//! Multiple cosine `C_r` and multiple sine `S_r`.
//!
//! `log C_r` has four independent routes:
//!
//! * `product`: the Weierstrass product over odd `n`, truncated, with an
//!   analytic tail majorant. Slow (`O(1/N)`) and kept as a cross-check.
//! * `series`: `-2 sum_k 2^{2k} lambda(2k) x^{2k+r-1} / (2k+r-1)`.
//! * `integral`: `-int_0^x pi t^{r-1} tan(pi t) dt`.
//! * `polylog`: the real form of the polylogarithm expansion at `x/2`,
//!   built from the trigonometric sums in [`crate::polylog`].
//!
//! All routes are restricted to `|x| < 1/2`; negative arguments use
//! `log C_r(-x) = (-1)^{r-1} log C_r(x)`.

mod structure;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{integrate, sum_geometric_tail, EvalResult, QuadratureConfig, SeriesConfig, EPS};
use crate::polylog::{rational_approx, trig_sums, RATIONAL_MAX_DEN};
use crate::zeta::{alt_zeta, lambda_even};

pub use structure::{
    duplication_residual, log_mcos_derivative, log_msin, multiplication_residual, ode_residual,
    translation_residual, MSIN_SPLIT,
};

/// Odd-`n` cutoff used when the product route is selected through [`log_mcos`].
pub const DEFAULT_PRODUCT_TERMS: u64 = 200_000;
/// Below this `|x|` the automatic route uses the series.
pub const AUTO_SERIES_LIMIT: f64 = 0.45;

/// Order `r >= 1` of a multiple trigonometric function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiTrigOrder(u32);

impl MultiTrigOrder {
    pub fn new(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::domain("order r must be >= 1"));
        }
        Ok(MultiTrigOrder(r))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RouteChoice {
    Product,
    Integral,
    Series,
    Polylog,
    Auto,
}

impl std::str::FromStr for RouteChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "product" => Ok(RouteChoice::Product),
            "integral" => Ok(RouteChoice::Integral),
            "series" => Ok(RouteChoice::Series),
            "polylog" => Ok(RouteChoice::Polylog),
            "auto" => Ok(RouteChoice::Auto),
            _ => Err(Error::domain(format!("unknown route '{s}'"))),
        }
    }
}

impl std::fmt::Display for RouteChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RouteChoice::Product => "product",
            RouteChoice::Integral => "integral",
            RouteChoice::Series => "series",
            RouteChoice::Polylog => "polylog",
            RouteChoice::Auto => "auto",
        };
        f.write_str(s)
    }
}

/// `log P_r(y) = log(1 - y) + y + y^2/2 + ... + y^r/r` for `|y| < 1`.
///
/// For `|y| < 1/2` the equivalent `-sum_{m > r} y^m / m` is summed instead,
/// which avoids the cancellation between the logarithm and the polynomial.
pub fn log_weierstrass_factor(r: u32, y: f64) -> Result<f64> {
    if !(y.abs() < 1.0) {
        return Err(Error::domain(format!("Weierstrass factor needs |y| < 1, got {y}")));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    if y.abs() < 0.5 {
        let mut pow = y.powi(r as i32 + 1);
        let mut acc = 0.0;
        let mut m = r as f64 + 1.0;
        loop {
            let t = pow / m;
            acc += t;
            if t.abs() <= 0.25 * EPS * acc.abs() {
                return Ok(-acc);
            }
            pow *= y;
            m += 1.0;
        }
    }
    let mut poly = 0.0;
    let mut pow = 1.0;
    for m in 1..=r {
        pow *= y;
        poly += pow / m as f64;
    }
    Ok((-y).ln_1p() + poly)
}

fn check_order(r: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::domain(format!("this route needs r >= 2, got r = {r}")));
    }
    Ok(())
}

/// Poles and zeros of `C_r` sit at half-odd integers; the routes here cover
/// the open interval between the first pair.
fn check_inner(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::domain(format!("x must be finite, got {x}")));
    }
    let a = x.abs();
    if a < 0.5 {
        return Ok(());
    }
    if (a - 0.5).rem_euclid(1.0) == 0.0 {
        return Err(Error::Pole { x });
    }
    Err(Error::domain(format!("log C_r is implemented for |x| < 1/2, got x = {x}")))
}

/// Applies `log C_r(-x) = (-1)^{r-1} log C_r(x)`.
fn with_parity(r: u32, x: f64, f: impl FnOnce(f64) -> Result<EvalResult>) -> Result<EvalResult> {
    if x < 0.0 {
        let v = f(-x)?;
        Ok(if r % 2 == 0 { v.scale(-1.0) } else { v })
    } else {
        f(x)
    }
}

/// `log C_1(x) = log(2 cos(pi x))`.
fn log_mcos_first(x: f64) -> Result<EvalResult> {
    check_inner(x)?;
    Ok(EvalResult::exact((2.0 * (PI * x).cos()).ln()).with_route("closed-form"))
}

/// Truncated Weierstrass product over odd `n <= n_max`.
///
/// The reported bound is the tail majorant
/// `4 |x|^{r+1} / ((r+1)(n0-1)(1-y0^2))`, where `n0` is the first omitted odd
/// index and `y0 = 2|x|/n0`, plus accumulated rounding.
pub fn log_mcos_product(r: u32, x: f64, n_max: u64) -> Result<EvalResult> {
    check_order(r)?;
    check_inner(x)?;
    if n_max == 0 {
        return Err(Error::domain("product cutoff N must be >= 1"));
    }
    if x == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, 0, "product"));
    }
    let odd_sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    let mut magnitude = 0.0f64;
    let mut count = 0usize;
    let mut n = 1u64;
    while n <= n_max {
        let half = n as f64 / 2.0;
        let y = x / half;
        let t = half.powi(r as i32 - 1)
            * (log_weierstrass_factor(r, y)? + odd_sign * log_weierstrass_factor(r, -y)?);
        let s = sum + t;
        carry += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
        magnitude += t.abs();
        count += 1;
        n += 2;
    }
    let n0 = n as f64;
    let y0 = 2.0 * x.abs() / n0;
    let tail = 4.0 * x.abs().powi(r as i32 + 1) / ((r as f64 + 1.0) * (n0 - 1.0) * (1.0 - y0 * y0));
    Ok(EvalResult::new(sum + carry, tail + 4.0 * EPS * magnitude, count, "product"))
}

/// `log C_r(x) = -2 sum_{k>=1} 2^{2k} lambda(2k) x^{2k+r-1} / (2k+r-1)`, `|x| < 1/2`.
///
/// Consecutive terms shrink at least by `(2x)^2`, which certifies the tail.
pub fn log_mcos_series(r: u32, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    check_order(r)?;
    check_inner(x)?;
    with_parity(r, x, |x| {
        if x == 0.0 {
            return Ok(EvalResult::new(0.0, 0.0, 0, "series"));
        }
        let u = 4.0 * x * x;
        let lead = -2.0 * x.powi(r as i32 - 1);
        let rm1 = (r - 1) as f64;
        let term = |k: usize| lead * lambda_even(k) * u.powi(k as i32) / (2.0 * k as f64 + rm1);
        Ok(sum_geometric_tail(term, 1, u, cfg)?.with_route("series"))
    })
}

/// `log C_r(x) = -int_0^x pi t^{r-1} tan(pi t) dt` for `|x| < 1/2`.
pub fn log_mcos_integral(r: u32, x: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_order(r)?;
    check_inner(x)?;
    with_parity(r, x, |x| {
        let v = integrate(|t| PI * t.powi(r as i32 - 1) * (PI * t).tan(), 0.0, x, cfg)?;
        Ok(v.scale(-1.0).with_route("integral"))
    })
}

/// `(-1)^{k/2}` or `(-1)^{(k-1)/2}`, i.e. the sign pattern `+, +, -, -, ...` in `k`.
fn quarter_sign(k: u32) -> f64 {
    if (k / 2) % 2 == 0 { 1.0 } else { -1.0 }
}

/// `log C_r(x/2)` for `0 <= x < 1` from the polylogarithm expansion:
///
/// ```text
/// log C_r(x/2) = (x/2)^{r-1} log(2 cos(pi x / 2)) + E_r(x)
/// ```
///
/// where `E_r` is a finite combination of `sum (-1)^n cos(pi n x)/n^j`,
/// `sum (-1)^n sin(pi n x)/n^j` and, for odd `r`, `zeta_E(r)`.
pub fn log_mcos_polylog(r: u32, x: f64) -> Result<EvalResult> {
    check_order(r)?;
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("polylog route takes x in [0, 1) and returns log C_r(x/2), got x = {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, 0, "polylog"));
    }
    let mut fact = 1.0;
    for j in 1..r {
        fact *= j as f64;
    }
    let c = fact / (2.0 * PI).powi(r as i32 - 1);
    let px = PI * x;

    let mut parts: Vec<(f64, EvalResult)> = Vec::new();
    let mut k_fact = 1.0;
    let mut px_pow = 1.0;
    for k in 0..=r - 2 {
        if k > 0 {
            k_fact *= k as f64;
            px_pow *= px;
        }
        let w = quarter_sign(k) * px_pow / k_fact;
        let (cos_sum, sin_sum) = trig_sums(r - k, x)?;
        if r % 2 == 0 {
            // cos terms at odd k <= r - 3, sin terms at even k <= r - 2
            let sign = if (r / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 1 && k + 3 <= r {
                parts.push((sign * c * w, cos_sum));
            } else if k % 2 == 0 {
                parts.push((-sign * c * w, sin_sum));
            }
        } else {
            // cos terms at even k <= r - 3, sin terms at odd k <= r - 2
            let sign = if ((r - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 && k + 3 <= r {
                parts.push((-sign * c * w, cos_sum));
            } else if k % 2 == 1 {
                parts.push((-sign * c * w, sin_sum));
            }
        }
    }
    if r % 2 == 1 {
        let sign = if ((r - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        parts.push((-sign * c, alt_zeta(r as f64)?));
    }
    let half = 0.5 * x;
    let log_cos = (2.0 * (0.5 * px).cos()).ln();
    parts.push((half.powi(r as i32 - 1), EvalResult::exact(log_cos)));

    let refs: Vec<(f64, &EvalResult)> = parts.iter().map(|(w, v)| (*w, v)).collect();
    Ok(EvalResult::combine(&refs, "polylog"))
}

/// `log C_r(y)` for `0 <= y < 1/2` from
/// `y^{r-1} (log cos(pi y) + (r-1) sum_n lambda(2n) (2y)^{2n} / (n (2n+r-1)))`.
pub fn log_mcos_lambda_series(r: u32, y: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    check_order(r)?;
    if !(0.0..0.5).contains(&y) {
        return Err(Error::domain(format!("lambda series needs 0 <= y < 1/2, got y = {y}")));
    }
    if y == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, 0, "lambda-series"));
    }
    let u = 4.0 * y * y;
    let rm1 = (r - 1) as f64;
    let s = sum_geometric_tail(
        |n| lambda_even(n) * u.powi(n as i32) / (n as f64 * (2.0 * n as f64 + rm1)),
        1,
        u,
        cfg,
    )?;
    let head = EvalResult::exact((PI * y).cos().ln());
    let inner = EvalResult::combine(&[(1.0, &head), (rm1, &s)], "lambda-series");
    Ok(inner.scale(y.powi(r as i32 - 1)))
}

/// `log C_r(x)` by the chosen route.
///
/// `Auto` picks the series for `|x| < 0.45`, the polylog route for
/// `0.45 <= |x| < 1/2` when `2x` is a rational with small denominator, and
/// the integral otherwise. `r = 1` always uses `log(2 cos(pi x))`.
pub fn log_mcos(r: u32, x: f64, route: RouteChoice) -> Result<EvalResult> {
    if r == 0 {
        return Err(Error::domain("order r must be >= 1"));
    }
    if r == 1 {
        return log_mcos_first(x);
    }
    check_inner(x)?;
    let route = match route {
        RouteChoice::Auto if x.abs() < AUTO_SERIES_LIMIT => RouteChoice::Series,
        RouteChoice::Auto if rational_approx(2.0 * x.abs(), RATIONAL_MAX_DEN).is_some() => RouteChoice::Polylog,
        RouteChoice::Auto => RouteChoice::Integral,
        other => other,
    };
    match route {
        RouteChoice::Product => log_mcos_product(r, x, DEFAULT_PRODUCT_TERMS),
        RouteChoice::Series => log_mcos_series(r, x, &SeriesConfig::default()),
        RouteChoice::Integral => log_mcos_integral(r, x, &QuadratureConfig::default()),
        RouteChoice::Polylog => with_parity(r, x, |x| log_mcos_polylog(r, 2.0 * x)),
        RouteChoice::Auto => unreachable!(),
    }
}
