use std::f64::consts::PI;

use super::{check_order, log_mcos, RouteChoice};
use crate::error::{Error, Result};
use crate::numerics::{derivative_fd, integrate, sum_geometric_tail, EvalResult, QuadratureConfig, SeriesConfig};
use crate::zeta::zeta_int;

/// Width of the interval near 0 where `log S_r` is integrated termwise.
pub const MSIN_SPLIT: f64 = 0.05;
/// Finite-difference step for the differential-equation check.
pub const FD_STEP: f64 = 1e-4;

/// `log S_r(x)` for `0 < x < 1`.
///
/// `r = 1` is `log(2 sin(pi x))`. For `r >= 2`,
/// `log S_r(x) = int_0^x pi t^{r-1} cot(pi t) dt`, with `[0, 0.05]` done
/// termwise from `pi t cot(pi t) = 1 - 2 sum zeta(2k) t^{2k}` and the rest by
/// tanh-sinh.
pub fn log_msin(r: u32, x: f64) -> Result<EvalResult> {
    if r == 0 {
        return Err(Error::domain("order r must be >= 1"));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("log_msin needs 0 < x < 1, got x = {x}")));
    }
    if r == 1 {
        return Ok(EvalResult::exact((2.0 * (PI * x).sin()).ln()).with_route("closed-form"));
    }
    let e = MSIN_SPLIT.min(x);
    let rm1 = (r - 1) as f64;
    let e2 = e * e;
    let ep = e.powi(r as i32 - 1);
    let series = sum_geometric_tail(
        |k| -2.0 * zeta_int(2 * k) * ep * e2.powi(k as i32) / (2.0 * k as f64 + rm1),
        1,
        e2,
        &SeriesConfig::with_tol(1e-15),
    )?;
    let head = EvalResult::combine(&[(1.0, &EvalResult::exact(ep / rm1)), (1.0, &series)], "msin-series");
    if e == x {
        return Ok(head);
    }
    let body = integrate(
        |t| PI * t.powi(r as i32 - 1) / (PI * t).tan(),
        e,
        x,
        &QuadratureConfig::tanh_sinh(1e-13),
    )?;
    Ok(EvalResult::combine(&[(1.0, &head), (1.0, &body)], "msin-split"))
}

/// `|2^{r-1} log C_r(x) - log S_r(2x) + 2^{r-1} log S_r(x)|` for `0 < x < 1/2`.
pub fn duplication_residual(r: u32, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 0.5) {
        return Err(Error::domain(format!("duplication check needs 0 < x < 1/2, got x = {x}")));
    }
    let w = 2f64.powi(r as i32 - 1);
    let c = log_mcos(r, x, RouteChoice::Auto)?;
    let s2 = log_msin(r, 2.0 * x)?;
    let s1 = log_msin(r, x)?;
    Ok((w * c.value - s2.value + w * s1.value).abs())
}

/// Logarithmic derivative `C_r'(x) / C_r(x) = -pi x^{r-1} tan(pi x)`.
pub fn log_mcos_derivative(r: u32, x: f64) -> Result<f64> {
    if r == 0 {
        return Err(Error::domain("order r must be >= 1"));
    }
    if (x - 0.5).rem_euclid(1.0) == 0.0 {
        return Err(Error::Pole { x });
    }
    Ok(-PI * x.powi(r as i32 - 1) * (PI * x).tan())
}

/// Translation formula in derivative form:
/// `|(log C_r)'(x+1) - sum_{k=1}^r C(r-1, k-1) (log C_k)'(x)|`.
pub fn translation_residual(r: u32, x: f64) -> Result<f64> {
    check_order(r)?;
    let lhs = log_mcos_derivative(r, x + 1.0)?;
    let mut rhs = 0.0;
    let mut binom = 1.0;
    for k in 1..=r {
        rhs += binom * log_mcos_derivative(k, x)?;
        binom = binom * (r - k) as f64 / k as f64;
    }
    Ok((lhs - rhs).abs())
}

/// Multiplication formula in derivative form for odd `n >= 3`:
/// `|d/dx log C_r(n x) + pi n^{r-1} x^{r-1} sum_{a<n} tan(pi (x + 2a/n))|`.
pub fn multiplication_residual(r: u32, n: u32, x: f64) -> Result<f64> {
    check_order(r)?;
    if n < 3 || n % 2 == 0 {
        return Err(Error::domain(format!("multiplication formula needs odd N >= 3, got N = {n}")));
    }
    let nf = n as f64;
    let lhs = nf * log_mcos_derivative(r, nf * x)?;
    let mut tan_sum = 0.0;
    for a in 0..n {
        let t = x + 2.0 * a as f64 / nf;
        if (t - 0.5).rem_euclid(1.0) == 0.0 {
            return Err(Error::Pole { x: t });
        }
        tan_sum += (PI * t).tan();
    }
    let rhs = -PI * nf.powi(r as i32 - 1) * x.powi(r as i32 - 1) * tan_sum;
    Ok((lhs - rhs).abs())
}

/// Normalized residual of
/// `C'' = (1 - x^{1-r}) C'^2 / C + (r-1) C'/x - pi^2 x^{r-1} C`
/// with `C'` and `C''` from five-point differences of `exp(log C_r)`.
pub fn ode_residual(r: u32, x: f64) -> Result<f64> {
    check_order(r)?;
    if !(x > 0.0 && x < 0.5) {
        return Err(Error::domain(format!("ODE check needs 0 < x < 1/2, got x = {x}")));
    }
    let h = FD_STEP.min(0.25 * x).min(0.25 * (0.5 - x));
    // Fix the route at the centre so the stencil never straddles a switch.
    let route = match log_mcos(r, x, RouteChoice::Auto)?.route.as_str() {
        "series" if x + 2.0 * h < super::AUTO_SERIES_LIMIT => RouteChoice::Series,
        _ => RouteChoice::Integral,
    };
    let c_of = |t: f64| match log_mcos(r, t, route) {
        Ok(v) => v.value.exp(),
        Err(_) => f64::NAN,
    };
    let c = c_of(x);
    let d1 = derivative_fd(c_of, x, 1, h);
    let d2 = derivative_fd(c_of, x, 2, h);
    if !(c.is_finite() && d1.is_finite() && d2.is_finite()) {
        return Err(Error::NonFiniteSample { x });
    }
    let rf = r as f64;
    let terms = [
        d2,
        (1.0 - x.powf(1.0 - rf)) * d1 * d1 / c,
        (rf - 1.0) * d1 / x,
        -PI * PI * x.powi(r as i32 - 1) * c,
    ];
    let scale = terms.iter().map(|t| t.abs()).fold(0.0, f64::max);
    let residual = terms[0] - terms[1] - terms[2] - terms[3];
    Ok(if scale == 0.0 { 0.0 } else { residual.abs() / scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn msin_closed_forms() {
        assert!((log_msin(1, 0.5).unwrap().value - LN_2).abs() < 1e-15);
        assert!(log_msin(1, 1.0 / 6.0).unwrap().value.abs() < 1e-15);
        assert!(log_msin(2, 0.0).is_err() && log_msin(2, 1.0).is_err());
    }

    #[test]
    fn duplication() {
        for r in 1..=4 {
            for x in [0.001, 0.1, 0.2, 0.3, 0.4, 0.47] {
                let d = duplication_residual(r, x).unwrap();
                assert!(d < 1e-11, "r={r} x={x}: {d:e}");
            }
        }
    }

    #[test]
    fn derivative_identities() {
        assert!(translation_residual(3, 0.2).unwrap() < 1e-12);
        assert!(translation_residual(2, 0.1).unwrap() < 1e-12);
        assert!(translation_residual(5, 0.3).unwrap() < 1e-12);
        assert!(multiplication_residual(2, 3, 0.05).unwrap() < 1e-11);
        assert!(multiplication_residual(3, 3, 0.07).unwrap() < 1e-11);
        assert!(multiplication_residual(4, 5, 0.03).unwrap() < 1e-11);
        assert!(multiplication_residual(3, 4, 0.03).is_err());
        assert!(matches!(log_mcos_derivative(2, 0.5), Err(Error::Pole { .. })));
    }

    #[test]
    fn differential_equation() {
        for (r, x) in [(3, 0.2), (2, 0.1), (4, 0.3), (5, 0.46)] {
            let d = ode_residual(r, x).unwrap();
            assert!(d < 1e-5, "r={r} x={x}: {d:e}");
        }
    }
}
