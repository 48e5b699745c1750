use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::{EvalResult, EPS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadRule {
    /// Adaptive Gauss-Kronrod 7/15 with global bisection. For integrands
    /// smooth on the closed interval.
    GaussKronrod15,
    /// Double-exponential rule. Tolerates integrable endpoint singularities;
    /// the endpoints themselves are never sampled.
    TanhSinh,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    /// Cell budget for Gauss-Kronrod; level budget for tanh-sinh.
    pub max_subdivisions: usize,
    pub rule: QuadRule,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-13,
            max_subdivisions: 400,
            rule: QuadRule::GaussKronrod15,
        }
    }
}

impl QuadratureConfig {
    pub fn gauss_kronrod(abs_tol: f64) -> Self {
        QuadratureConfig {
            abs_tol,
            ..Default::default()
        }
    }

    pub fn tanh_sinh(abs_tol: f64) -> Self {
        QuadratureConfig {
            abs_tol,
            max_subdivisions: 12,
            rule: QuadRule::TanhSinh,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::domain("quadrature abs_tol must be > 0"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain("quadrature max_subdivisions must be >= 1"));
        }
        Ok(())
    }
}

/// Integrates `f` over `[a, b]`.
///
/// On success the returned bound is at most `cfg.abs_tol`. When the budget runs
/// out the best estimate is returned inside [`Error::TolNotReached`].
pub fn integrate<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if !(a <= b) {
        return Err(Error::domain(format!("integration bounds out of order: [{a}, {b}]")));
    }
    if a == b {
        return Ok(EvalResult::new(0.0, 0.0, 0, "quad"));
    }
    match cfg.rule {
        QuadRule::GaussKronrod15 => gauss_kronrod(&f, a, b, cfg),
        QuadRule::TanhSinh => tanh_sinh(&f, a, b, cfg),
    }
}

// Kronrod abscissae on [0, 1]; odd indices are the Gauss points.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

struct Cell {
    a: f64,
    b: f64,
    estimate: f64,
    error: f64,
    abs_mass: f64,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15_cell<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Cell> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let sample = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFiniteSample { x })
        }
    };

    let fc = sample(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_mass = fc.abs() * WGK[7];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let f1 = sample(center - dx)?;
        let f2 = sample(center + dx)?;
        kronrod += w * (f1 + f2);
        abs_mass += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let estimate = kronrod * half;
    let abs_mass = abs_mass * half.abs();
    let error = ((kronrod - gauss) * half).abs() + 50.0 * EPS * abs_mass;
    Ok(Cell {
        a,
        b,
        estimate,
        error,
        abs_mass,
    })
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let mut heap = BinaryHeap::new();
    heap.push(gk15_cell(f, a, b)?);
    let mut cells = 1usize;

    loop {
        let (estimate, error, mass) = heap.iter().fold((0.0, 0.0, 0.0), |acc, c| {
            (acc.0 + c.estimate, acc.1 + c.error, acc.2 + c.abs_mass)
        });
        let error = error + (cells as f64).sqrt() * EPS * mass;
        if error <= cfg.abs_tol {
            return Ok(EvalResult::new(estimate, error, cells, "gauss-kronrod-15"));
        }
        let worst = heap.pop().expect("heap never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if cells >= cfg.max_subdivisions || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            let best = EvalResult::new(estimate, error, cells, "gauss-kronrod-15");
            return Err(Error::TolNotReached {
                tol: cfg.abs_tol,
                best,
            });
        }
        heap.push(gk15_cell(f, worst.a, mid)?);
        heap.push(gk15_cell(f, mid, worst.b)?);
        cells += 1;
    }
}

fn tanh_sinh<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    use std::f64::consts::FRAC_PI_2;

    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let max_levels = cfg.max_subdivisions.min(14);
    // Abscissa parameter beyond which nodes collapse onto the endpoints in binary64.
    const T_MAX: f64 = 4.0;

    // Contribution of the node pair at parameter t, plus its absolute mass.
    let pair = |t: f64| -> Result<Option<(f64, f64)>> {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (cu * cu);
        // distance from the endpoint, computed without cancellation
        let delta = half * (-u).exp() / cu;
        let xl = a + delta;
        let xr = b - delta;
        if !(xl > a) || !(xr < b) {
            return Ok(None);
        }
        let fl = f(xl);
        let fr = f(xr);
        if !fl.is_finite() {
            return Err(Error::NonFiniteSample { x: xl });
        }
        if !fr.is_finite() {
            return Err(Error::NonFiniteSample { x: xr });
        }
        Ok(Some((w * (fl + fr), w * (fl.abs() + fr.abs()))))
    };

    let f0 = f(center);
    if !f0.is_finite() {
        return Err(Error::NonFiniteSample { x: center });
    }
    let mut step = 1.0;
    let mut sum = FRAC_PI_2 * f0;
    let mut mass = FRAC_PI_2 * f0.abs();
    let mut nodes = 1usize;
    let mut tail = 0.0f64;

    let accumulate = |start: f64, stride: f64, sum: &mut f64, mass: &mut f64, nodes: &mut usize, tail: &mut f64| -> Result<()> {
        let mut t = start;
        while t <= T_MAX {
            match pair(t)? {
                Some((s, m)) => {
                    *sum += s;
                    *mass += m;
                    *nodes += 2;
                    if m <= EPS * EPS * mass.abs() {
                        *tail = tail.max(m);
                        break;
                    }
                }
                None => break,
            }
            t += stride;
        }
        Ok(())
    };

    accumulate(step, step, &mut sum, &mut mass, &mut nodes, &mut tail)?;
    let mut previous = sum * step * half;
    let mut error = f64::INFINITY;
    let mut estimate = previous;

    for level in 1..=max_levels {
        step *= 0.5;
        accumulate(step, 2.0 * step, &mut sum, &mut mass, &mut nodes, &mut tail)?;
        estimate = sum * step * half;
        let roundoff = 10.0 * EPS * mass * step * half.abs();
        error = (estimate - previous).abs() + roundoff + tail * step * half.abs();
        if level >= 3 && error <= cfg.abs_tol {
            return Ok(EvalResult::new(estimate, error, nodes, "tanh-sinh"));
        }
        previous = estimate;
    }
    Err(Error::TolNotReached {
        tol: cfg.abs_tol,
        best: EvalResult::new(estimate, error, nodes, "tanh-sinh"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI};

    #[test]
    fn zero_integrand_is_exactly_zero() {
        for cfg in [QuadratureConfig::default(), QuadratureConfig::tanh_sinh(1e-12)] {
            let r = integrate(|_| 0.0, 0.0, 1.0, &cfg).unwrap();
            assert_eq!(r.value, 0.0);
        }
    }

    #[test]
    fn euler_log_sine_integral() {
        let r = integrate(|t: f64| t.sin().ln(), 0.0, FRAC_PI_2, &QuadratureConfig::tanh_sinh(1e-13)).unwrap();
        let exact = -FRAC_PI_2 * LN_2;
        assert!((r.value - exact).abs() < 1e-12, "{r:?}");
        assert!((r.value - exact).abs() <= r.error_bound);
    }

    #[test]
    fn polynomials_are_exact() {
        let r = integrate(|t: f64| t.powi(5) - 3.0 * t * t, -1.0, 2.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - (64.0 / 6.0 - 1.0 / 6.0 - 9.0)).abs() < 1e-14);
    }

    #[test]
    fn reversed_bounds_rejected() {
        assert!(matches!(
            integrate(|t| t, 1.0, 0.0, &QuadratureConfig::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn non_finite_sample_reported() {
        let r = integrate(|t: f64| 1.0 / (t - 0.5), 0.0, 1.0, &QuadratureConfig::default());
        assert!(matches!(r, Err(Error::NonFiniteSample { .. })));
    }

    #[test]
    fn budget_exhaustion_returns_best_estimate() {
        let cfg = QuadratureConfig {
            abs_tol: 1e-15,
            max_subdivisions: 2,
            rule: QuadRule::GaussKronrod15,
        };
        let err = integrate(|t: f64| (40.0 * t).sin(), 0.0, PI, &cfg).unwrap_err();
        let best = err.best_estimate().expect("flagged estimate");
        assert!(best.error_bound > 1e-15);
    }

    #[test]
    fn invalid_config_rejected() {
        let cfg = QuadratureConfig {
            abs_tol: 0.0,
            ..Default::default()
        };
        assert!(integrate(|t| t, 0.0, 1.0, &cfg).is_err());
    }
}
