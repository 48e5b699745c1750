//! Euler-type integrals `int_0^x theta^{r-2} log cos(theta/2) d theta` and
//! the finite sums behind their closed forms at `x = pi/2`.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multitrig::{log_mcos, RouteChoice};
use crate::numerics::{integrate, sum_alternating_terms, EvalResult, QuadratureConfig, SeriesConfig, EPS};
use crate::zeta::{alt_zeta, beta_fn};

/// Above this upper limit the integrand's logarithmic blow-up at `pi` makes
/// tanh-sinh the better default.
const TANH_SINH_FROM: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerIntegralSpec {
    r: u32,
    x: f64,
}

impl EulerIntegralSpec {
    pub fn new(r: u32, x: f64) -> Result<Self> {
        if r < 2 {
            return Err(Error::domain(format!("Euler integral needs r >= 2, got r = {r}")));
        }
        if !(0.0..PI).contains(&x) {
            return Err(Error::domain(format!("Euler integral needs 0 <= x < pi, got x = {x}")));
        }
        Ok(EulerIntegralSpec { r, x })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Gauss-Kronrod away from `pi`, tanh-sinh close to it.
    pub fn default_quadrature(&self) -> QuadratureConfig {
        if self.x > TANH_SINH_FROM {
            QuadratureConfig::tanh_sinh(1e-13)
        } else {
            QuadratureConfig::default()
        }
    }
}

/// `sin(k pi / 2)` from `k mod 4`.
pub fn sin_quarter_turns(k: u32) -> f64 {
    [0.0, 1.0, 0.0, -1.0][(k % 4) as usize]
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut b = 1.0;
    for j in 0..k {
        b = b * (n - j) as f64 / (j + 1) as f64;
    }
    b
}

/// Direct quadrature of the integral.
pub fn euler_integral_quad(spec: &EulerIntegralSpec, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let p = spec.r as i32 - 2;
    integrate(|t| t.powi(p) * (0.5 * t).cos().ln(), 0.0, spec.x, cfg)
}

/// Closed form through the multiple cosine:
/// `x^{r-1}/(r-1) log cos(x/2) - (2 pi)^{r-1}/(r-1) log C_r(x / 2 pi)`.
pub fn euler_integral_thm1(spec: &EulerIntegralSpec) -> Result<EvalResult> {
    let (r, x) = (spec.r, spec.x);
    if x == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, 0, "mcos-closed-form"));
    }
    let rm1 = (r - 1) as f64;
    let c = log_mcos(r, x / (2.0 * PI), RouteChoice::Auto)?;
    let head = EvalResult::exact((0.5 * x).cos().ln());
    Ok(EvalResult::combine(
        &[(x.powi(r as i32 - 1) / rm1, &head), (-(2.0 * PI).powi(r as i32 - 1) / rm1, &c)],
        "mcos-closed-form",
    ))
}

/// Collects `coefficient * value` parts for the finite closed forms.
struct Parts(Vec<(f64, EvalResult)>);

impl Parts {
    fn push(&mut self, c: f64, v: EvalResult) {
        if c != 0.0 {
            self.0.push((c, v));
        }
    }

    fn finish(&self, route: &str) -> EvalResult {
        let refs: Vec<(f64, &EvalResult)> = self.0.iter().map(|(c, v)| (*c, v)).collect();
        EvalResult::combine(&refs, route)
    }
}

/// The `x = pi/2` integral as a finite combination of `log 2`, `beta(2k+2)`,
/// `zeta_E(2k+1)` and `zeta_E(r)`. Empty sums are zero.
pub fn euler_integral_thm1gen(r: u32) -> Result<EvalResult> {
    if r < 2 {
        return Err(Error::domain(format!("closed form needs r >= 2, got r = {r}")));
    }
    let m = r - 2;
    let h = FRAC_PI_2;
    let mut parts = Parts(Vec::new());
    parts.push(-h.powi(r as i32 - 1) / (r - 1) as f64, EvalResult::exact(LN_2));
    parts.push(factorial(m) * sin_quarter_turns(r), alt_zeta(r as f64)?);
    for k in 0..=m / 2 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * factorial(2 * k) * binomial(m, 2 * k) * h.powi((m - 2 * k) as i32);
        parts.push(c, beta_fn((2 * k + 2) as f64)?);
    }
    for k in 1..=m.div_ceil(2) {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let c = sign * factorial(2 * k - 1) / 2f64.powi(2 * k as i32 + 1)
            * binomial(m, 2 * k - 1)
            * h.powi(m as i32 - 2 * k as i32 + 1);
        parts.push(c, alt_zeta((2 * k + 1) as f64)?);
    }
    Ok(parts.finish("zeta-beta-closed-form"))
}

/// `log C_r(1/4)` as a finite combination of `log 2`, `beta(2k+2)`,
/// `zeta_E(2k+1)` and `zeta_E(r)`.
pub fn log_mcos_quarter_closed(r: u32) -> Result<EvalResult> {
    if r < 2 {
        return Err(Error::domain(format!("closed form needs r >= 2, got r = {r}")));
    }
    let m = r - 2;
    let rm1 = (r - 1) as f64;
    let mut parts = Parts(Vec::new());
    parts.push(1.0 / 2f64.powi(2 * r as i32 - 1), EvalResult::exact(LN_2));
    parts.push(
        -factorial(r - 1) / (2.0 * PI).powi(r as i32 - 1) * sin_quarter_turns(r),
        alt_zeta(r as f64)?,
    );
    for k in 0..=m / 2 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let c = -rm1 / 2f64.powi(2 * (r as i32 - 1))
            * sign
            * factorial(2 * k)
            * binomial(m, 2 * k)
            * (2.0 / PI).powi(2 * k as i32 + 1);
        parts.push(c, beta_fn((2 * k + 2) as f64)?);
    }
    for k in 1..=m.div_ceil(2) {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let c = -rm1 / 2f64.powi(2 * r as i32 - 1) * sign * factorial(2 * k - 1) / PI.powi(2 * k as i32)
            * binomial(m, 2 * k - 1);
        parts.push(c, alt_zeta((2 * k + 1) as f64)?);
    }
    Ok(parts.finish("zeta-beta-closed-form"))
}

/// `int_0^x theta^r cos(n theta) d theta` in closed form:
/// `sum_k C(r,k) k! n^{-(k+1)} sin(n x + k pi/2) x^{r-k} - r! n^{-(r+1)} sin(r pi/2)`.
pub fn cosine_moment(r: u32, n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("cosine_moment needs n >= 1"));
    }
    let nf = n as f64;
    let (s, c) = (nf * x).sin_cos();
    let mut acc = 0.0;
    let mut coeff = 1.0 / nf; // C(r,k) k! / n^{k+1} = r!/(r-k)! / n^{k+1}
    for k in 0..=r {
        let rotated = [s, c, -s, -c][(k % 4) as usize];
        acc += coeff * rotated * x.powi((r - k) as i32);
        coeff *= (r - k) as f64 / nf;
    }
    Ok(acc - factorial(r) / nf.powi(r as i32 + 1) * sin_quarter_turns(r))
}

/// Closed form of `sum_{n>=1} (-1)^{n-1}/n int_0^{pi/2} theta^r cos(n theta) d theta`.
pub fn lemma42_sum(r: u32) -> Result<EvalResult> {
    let h = FRAC_PI_2;
    let mut parts = Parts(Vec::new());
    for k in 0..=r / 2 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * factorial(2 * k) * binomial(r, 2 * k) * h.powi((r - 2 * k) as i32);
        parts.push(c, beta_fn((2 * k + 2) as f64)?);
    }
    for k in 1..=r.div_ceil(2) {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let c = sign * factorial(2 * k - 1) / 2f64.powi(2 * k as i32 + 1)
            * binomial(r, 2 * k - 1)
            * h.powi(r as i32 - 2 * k as i32 + 1);
        parts.push(c, alt_zeta((2 * k + 1) as f64)?);
    }
    parts.push(-factorial(r) * sin_quarter_turns(r), alt_zeta((r + 2) as f64)?);
    Ok(parts.finish("zeta-beta-closed-form"))
}

/// The same sum evaluated directly from [`cosine_moment`] over `n <= n_max`.
///
/// Each summand splits into period-4 (or period-2) sign patterns with partial
/// sums bounded by 1 times `n^{-(k+2)}`, so the tail after `n_max` is bounded
/// by Abel summation.
pub fn lemma42_direct(r: u32, n_max: u32) -> Result<EvalResult> {
    if n_max == 0 {
        return Err(Error::domain("need at least one term"));
    }
    let x = FRAC_PI_2;
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    let mut magnitude = 0.0f64;
    for n in 1..=n_max {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let t = sign * cosine_moment(r, n, x)? / n as f64;
        let s = sum + t;
        carry += if sum.abs() >= t.abs() { (sum - s) + t } else { (t - s) + sum };
        sum = s;
        magnitude += t.abs();
    }
    let n1 = (n_max + 1) as f64;
    let mut tail = 2.0 * factorial(r) * sin_quarter_turns(r).abs() / n1.powi(r as i32 + 2);
    for k in 0..=r {
        tail += 2.0 * binomial(r, k) * factorial(k) * x.powi((r - k) as i32) / n1.powi(k as i32 + 2);
    }
    Ok(EvalResult::new(sum + carry, tail + 8.0 * EPS * magnitude, n_max as usize, "direct-abel"))
}

/// `log cos(theta/2) = -log 2 + sum_{n>=1} (-1)^{n-1} cos(n theta)/n`, with the
/// series summed by CVZ acceleration.
pub fn log_cos_half_fourier(theta: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    if !(theta.abs() < PI) {
        return Err(Error::domain(format!("Fourier expansion needs |theta| < pi, got {theta}")));
    }
    // Off the real axis CVZ converges below its nominal rate; double the
    // length until the observed gap meets the tolerance.
    let term = |n: u64| {
        let k = (n + 1) as f64;
        let t = (k * theta).cos() / k;
        if n % 2 == 0 { t } else { -t }
    };
    let mut n = 32;
    let s = loop {
        let s = sum_alternating_terms(term, n)?;
        if s.error_bound <= cfg.abs_tol {
            break s;
        }
        if 2 * n > 400 {
            return Err(Error::TolNotReached { tol: cfg.abs_tol, best: s });
        }
        n *= 2;
    };
    Ok(EvalResult::combine(&[(1.0, &EvalResult::exact(-LN_2)), (1.0, &s)], "fourier-cvz"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    fn quad(r: u32, x: f64) -> EvalResult {
        let spec = EulerIntegralSpec::new(r, x).unwrap();
        euler_integral_quad(&spec, &spec.default_quadrature()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(EulerIntegralSpec::new(1, 0.5).is_err());
        assert!(EulerIntegralSpec::new(2, PI).is_err());
        assert!(EulerIntegralSpec::new(2, -0.1).is_err());
    }

    #[test]
    fn first_closed_form() {
        let q = quad(2, FRAC_PI_2);
        assert!((q.value - (-FRAC_PI_2 * LN_2 + CATALAN)).abs() < 1e-13, "{q:?}");
        assert_eq!(quad(3, 0.0).value, 0.0);
        let g = euler_integral_thm1gen(2).unwrap();
        assert!((g.value - q.value).abs() < 1e-13);
    }

    #[test]
    fn multiple_cosine_form() {
        for (r, x) in [(2, FRAC_PI_2), (4, 1.0), (5, 2.5), (3, 3.1)] {
            let spec = EulerIntegralSpec::new(r, x).unwrap();
            let a = euler_integral_thm1(&spec).unwrap();
            let b = quad(r, x);
            assert!((a.value - b.value).abs() < 1e-10, "r={r} x={x}: {} vs {}", a.value, b.value);
        }
    }

    #[test]
    fn general_closed_form_vs_quadrature() {
        for r in 2..=8 {
            let a = euler_integral_thm1gen(r).unwrap();
            let b = quad(r, FRAC_PI_2);
            assert!((a.value - b.value).abs() < 1e-11, "r={r}: {} vs {}", a.value, b.value);
        }
    }

    #[test]
    fn quarter_closed_form_vs_series() {
        for r in 2..=8 {
            let a = log_mcos_quarter_closed(r).unwrap();
            let b = log_mcos(r, 0.25, RouteChoice::Series).unwrap();
            assert!((a.value - b.value).abs() < 1e-13, "r={r}");
        }
    }

    #[test]
    fn cosine_moments() {
        assert!((cosine_moment(0, 1, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-15);
        for (r, n, x) in [(1, 2, FRAC_PI_2), (3, 5, 1.1), (4, 7, 2.9)] {
            let q = integrate(|t: f64| t.powi(r as i32) * (n as f64 * t).cos(), 0.0, x, &QuadratureConfig::gauss_kronrod(1e-11))
                .unwrap();
            assert!((cosine_moment(r, n, x).unwrap() - q.value).abs() < 1e-12, "r={r} n={n}");
        }
        assert!(cosine_moment(1, 0, 1.0).is_err());
    }

    #[test]
    fn lemma_sum_vs_direct() {
        for r in 0..=4 {
            let a = lemma42_sum(r).unwrap();
            let b = lemma42_direct(r, 200_000).unwrap();
            assert!((a.value - b.value).abs() <= a.error_bound + b.error_bound, "r={r}: {a:?} {b:?}");
            assert!(b.error_bound < 1e-9);
        }
    }

    #[test]
    fn fourier_series_pointwise() {
        for t in [0.5, 1.0, 1.5] {
            let f = log_cos_half_fourier(t, &SeriesConfig::with_tol(1e-10)).unwrap();
            assert!((f.value - (0.5 * t).cos().ln()).abs() < 1e-10, "theta={t}: {f:?}");
        }
    }
}
