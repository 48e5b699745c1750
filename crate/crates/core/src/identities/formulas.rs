//! Closed forms and independent oracles used by the identity catalogue.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gamma::{catalan, glaisher_log_a, log_barnes_g, log_gamma, trigamma};
use crate::multitrig::{log_mcos, RouteChoice};
use crate::numerics::{sum_geometric_tail, sum_periodic_weighted, EvalResult, SeriesConfig};
use crate::polylog::{trig_sum_cos, trig_sum_sin};
use crate::zeta::{alt_zeta, beta_fn, dirichlet_l, lambda_even, riemann_zeta, CharacterSpec};

pub(crate) fn lin(parts: &[(f64, &EvalResult)], route: &str) -> EvalResult {
    EvalResult::combine(parts, route)
}

pub(crate) fn exact(v: f64) -> EvalResult {
    EvalResult::exact(v)
}

pub(crate) fn catalan_value() -> EvalResult {
    EvalResult::new(catalan(), 1e-16, 0, "constant")
}

fn ln3() -> EvalResult {
    exact(3f64.ln())
}

/// `zeta(3)` by plain summation: `sum_{n <= 10^7} n^{-3}` added smallest
/// first, plus the Euler-Maclaurin tail `1/(2N^2) - 1/(2N^3) + 1/(4N^4)`.
/// Shares no code with the library's zeta routes. Computed once.
pub fn zeta3_oracle() -> EvalResult {
    static ORACLE: OnceLock<EvalResult> = OnceLock::new();
    ORACLE
        .get_or_init(|| {
            const N: u64 = 10_000_000;
            let mut sum = 0.0f64;
            let mut carry = 0.0f64;
            for n in (1..=N).rev() {
                let x = n as f64;
                let t = 1.0 / (x * x * x);
                let s = sum + t;
                carry += if sum.abs() >= t { (sum - s) + t } else { (t - s) + sum };
                sum = s;
            }
            let n = N as f64;
            let tail = 1.0 / (2.0 * n * n) - 1.0 / (2.0 * n * n * n) + 1.0 / (4.0 * n.powi(4));
            EvalResult::new(sum + carry + tail, 1e-15, N as usize, "direct-sum")
        })
        .clone()
}

/// `(4 pi^2/21) (4G/pi + 16 log C_3(1/4) - log 2 / 2)`.
pub fn zeta3_from_quarter_parts(g: f64, log_c3_quarter: f64) -> f64 {
    4.0 * PI * PI / 21.0 * (4.0 * g / PI + 16.0 * log_c3_quarter - 0.5 * LN_2)
}

/// `zeta(3)` extracted from `C_3(1/4)` and Catalan's constant.
pub fn zeta3_via_quarter() -> Result<EvalResult> {
    let c3 = log_mcos(3, 0.25, RouteChoice::Series)?;
    let k = 4.0 * PI * PI / 21.0;
    Ok(lin(
        &[(k * 4.0 / PI, &catalan_value()), (k * 16.0, &c3), (-k * 0.5, &exact(LN_2))],
        "mcos-quarter",
    ))
}

/// `(72 pi^2/11) (log 3 / 72 + log C_3(1/6) - log C_2(1/6) / 3)`.
pub fn zeta3_via_sixth() -> Result<EvalResult> {
    let c3 = log_mcos(3, 1.0 / 6.0, RouteChoice::Series)?;
    let c2 = log_mcos(2, 1.0 / 6.0, RouteChoice::Series)?;
    let k = 72.0 * PI * PI / 11.0;
    Ok(lin(&[(k / 72.0, &ln3()), (k, &c3), (-k / 3.0, &c2)], "mcos-sixth"))
}

/// `L(2, chi_3)/4 - L(2, chi_6)`, the Clausen-type combination at `1/6`.
pub fn sixth_l_combination() -> Result<EvalResult> {
    let l3 = dirichlet_l(2.0, &CharacterSpec::chi3())?;
    let l6 = dirichlet_l(2.0, &CharacterSpec::chi6())?;
    Ok(lin(&[(0.25, &l3), (-1.0, &l6)], "dirichlet-l"))
}

/// `log C_2(1/6) = log 3 / 12 + sqrt3/(4 pi) (L(2,chi_3)/4 - L(2,chi_6))`.
pub fn log_c2_sixth_closed() -> Result<EvalResult> {
    let l = sixth_l_combination()?;
    Ok(lin(&[(1.0 / 12.0, &ln3()), (3f64.sqrt() / (4.0 * PI), &l)], "dirichlet-l"))
}

/// `log C_3(1/6) = log 3 / 72 + 11 zeta(3)/(72 pi^2) + sqrt3/(12 pi) (...)`.
pub fn log_c3_sixth_closed() -> Result<EvalResult> {
    let l = sixth_l_combination()?;
    let z3 = riemann_zeta(3.0)?;
    Ok(lin(
        &[(1.0 / 72.0, &ln3()), (11.0 / (72.0 * PI * PI), &z3), (3f64.sqrt() / (12.0 * PI), &l)],
        "dirichlet-l",
    ))
}

/// The four worked integrals `int_0^{pi/2} theta^{r-2} log cos(theta/2)`,
/// `r = 2..5`, as printed, except that the `r = 4` coefficient of
/// `pi zeta_E(3)` is `1/8` (the printed `1/12` is off; see
/// [`example_integral_r4_printed`]).
pub fn example_integral_closed(r: u32) -> Result<EvalResult> {
    let g = catalan_value();
    let l2 = exact(LN_2);
    let route = "printed-closed-form";
    Ok(match r {
        2 => lin(&[(-FRAC_PI_2, &l2), (1.0, &g)], route),
        3 => {
            let z3 = alt_zeta(3.0)?;
            lin(&[(-PI * PI / 8.0, &l2), (FRAC_PI_2, &g), (-7.0 / 8.0, &z3)], route)
        }
        4 => {
            let (z3, b4) = (alt_zeta(3.0)?, beta_fn(4.0)?);
            lin(&[(-PI.powi(3) / 24.0, &l2), (PI * PI / 4.0, &g), (PI / 8.0, &z3), (-2.0, &b4)], route)
        }
        5 => {
            let (z3, b4, z5) = (alt_zeta(3.0)?, beta_fn(4.0)?, alt_zeta(5.0)?);
            lin(
                &[
                    (-PI.powi(4) / 64.0, &l2),
                    (PI.powi(3) / 8.0, &g),
                    (3.0 * PI * PI / 32.0, &z3),
                    (-3.0 * PI, &b4),
                    (93.0 / 16.0, &z5),
                ],
                route,
            )
        }
        _ => return Err(Error::domain(format!("worked example exists for r = 2..5, got {r}"))),
    })
}

/// The `r = 4` worked integral with the coefficient `pi/12` as printed.
pub fn example_integral_r4_printed() -> Result<EvalResult> {
    let (z3, b4) = (alt_zeta(3.0)?, beta_fn(4.0)?);
    Ok(lin(
        &[
            (-PI.powi(3) / 24.0, &exact(LN_2)),
            (PI * PI / 4.0, &catalan_value()),
            (PI / 12.0, &z3),
            (-2.0, &b4),
        ],
        "printed-closed-form",
    ))
}

/// The four printed values of `log C_r(1/4)`, `r = 2..5`.
pub fn quarter_printed(r: u32) -> Result<EvalResult> {
    let g = catalan_value();
    let l2 = exact(LN_2);
    let route = "printed-closed-form";
    let (z3, b4, z5) = (alt_zeta(3.0)?, beta_fn(4.0)?, alt_zeta(5.0)?);
    let p2 = PI * PI;
    Ok(match r {
        2 => lin(&[(1.0 / 8.0, &l2), (-1.0 / (2.0 * PI), &g)], route),
        3 => lin(&[(1.0 / 32.0, &l2), (-1.0 / (4.0 * PI), &g), (7.0 / (16.0 * p2), &z3)], route),
        4 => lin(
            &[
                (1.0 / 128.0, &l2),
                (-3.0 / (32.0 * PI), &g),
                (-3.0 / (64.0 * p2), &z3),
                (3.0 / (4.0 * PI.powi(3)), &b4),
            ],
            route,
        ),
        5 => lin(
            &[
                (1.0 / 512.0, &l2),
                (-1.0 / (32.0 * PI), &g),
                (-3.0 / (128.0 * p2), &z3),
                (3.0 / (4.0 * PI.powi(3)), &b4),
                (-93.0 / (64.0 * PI.powi(4)), &z5),
            ],
            route,
        ),
        _ => return Err(Error::domain(format!("printed value exists for r = 2..5, got {r}"))),
    })
}

/// `-pi^{r-1}/(r-1) (log 2 / 2^r + 2^{r-1} log C_r(1/4))`.
pub fn quarter_integral_form(r: u32) -> Result<EvalResult> {
    let c = log_mcos(r, 0.25, RouteChoice::Series)?;
    let k = -PI.powi(r as i32 - 1) / (r - 1) as f64;
    Ok(lin(
        &[(k / 2f64.powi(r as i32), &exact(LN_2)), (k * 2f64.powi(r as i32 - 1), &c)],
        "mcos-quarter",
    ))
}

/// `sum_{k>=1} lambda(2k) f(k) / 4^k` for non-increasing positive `f`.
pub fn lambda_weighted_sum(f: impl Fn(usize) -> f64) -> Result<EvalResult> {
    sum_geometric_tail(
        |k| lambda_even(k) * f(k) / 4f64.powi(k as i32),
        1,
        0.25,
        &SeriesConfig::with_tol(1e-14),
    )
}

/// A member of the lambda-series family: summand weight and printed value.
pub struct LambdaSeries {
    pub id: &'static str,
    pub anchor: &'static str,
    pub weight: fn(usize) -> f64,
    /// Coefficients of `(log 2, G/pi, zeta_E(3)/pi^2, beta(4)/pi^3, zeta_E(5)/pi^4)`.
    pub printed: [f64; 5],
}

impl LambdaSeries {
    pub fn closed_form(&self) -> Result<EvalResult> {
        let g = catalan_value();
        let (z3, b4, z5) = (alt_zeta(3.0)?, beta_fn(4.0)?, alt_zeta(5.0)?);
        let c = self.printed;
        Ok(lin(
            &[
                (c[0], &exact(LN_2)),
                (c[1] / PI, &g),
                (c[2] / (PI * PI), &z3),
                (c[3] / PI.powi(3), &b4),
                (c[4] / PI.powi(4), &z5),
            ],
            "printed-closed-form",
        ))
    }

    pub fn summed(&self) -> Result<EvalResult> {
        lambda_weighted_sum(self.weight)
    }
}

fn kf(k: usize) -> f64 {
    k as f64
}

/// The eleven lambda-weighted sums with printed closed forms. The first four
/// come from the quarter-point expansion of `log C_r`, `r = 2..5`.
pub const LAMBDA_SERIES: [LambdaSeries; 11] = [
    LambdaSeries {
        id: "lambda-sum-n-2n+1",
        anchor: "sum lambda(2n)/(n(2n+1)4^n) = log2 - 2G/pi",
        weight: |k| 1.0 / (kf(k) * (2.0 * kf(k) + 1.0)),
        printed: [1.0, -2.0, 0.0, 0.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-n-2n+2",
        anchor: "sum lambda(2n)/(n(2n+2)4^n) = log2/2 - 2G/pi + 7zeta_E(3)/(2pi^2)",
        weight: |k| 1.0 / (kf(k) * (2.0 * kf(k) + 2.0)),
        printed: [0.5, -2.0, 3.5, 0.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-n-2n+3",
        anchor: "sum lambda(2n)/(n(2n+3)4^n) = log2/3 - 2G/pi - zeta_E(3)/pi^2 + 16beta(4)/pi^3",
        weight: |k| 1.0 / (kf(k) * (2.0 * kf(k) + 3.0)),
        printed: [1.0 / 3.0, -2.0, -1.0, 16.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-n-2n+4",
        anchor: "sum lambda(2n)/(n(2n+4)4^n) = log2/4 - 2G/pi - 3zeta_E(3)/(2pi^2) - 93zeta_E(5)/pi^4 + 48beta(4)/pi^3",
        weight: |k| 1.0 / (kf(k) * (2.0 * kf(k) + 4.0)),
        printed: [0.25, -2.0, -1.5, 48.0, -93.0],
    },
    LambdaSeries {
        id: "lambda-sum-2k+1",
        anchor: "sum lambda(2k)/((2k+1)4^k) = -log2/4 + G/pi",
        weight: |k| 1.0 / (2.0 * kf(k) + 1.0),
        printed: [-0.25, 1.0, 0.0, 0.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-2k+2",
        anchor: "sum lambda(2k)/((2k+2)4^k) = -log2/4 + 2G/pi - 7zeta_E(3)/(2pi^2)",
        weight: |k| 1.0 / (2.0 * kf(k) + 2.0),
        printed: [-0.25, 2.0, -3.5, 0.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-2k+3",
        anchor: "sum lambda(2k)/((2k+3)4^k) = -log2/4 + 3G/pi + 3zeta_E(3)/(2pi^2) - 24beta(4)/pi^3",
        weight: |k| 1.0 / (2.0 * kf(k) + 3.0),
        printed: [-0.25, 3.0, 1.5, -24.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-2k+4",
        anchor: "sum lambda(2k)/((2k+4)4^k) = -log2/4 + 4G/pi + 3zeta_E(3)/pi^2 - 96beta(4)/pi^3 + 186zeta_E(5)/pi^4",
        weight: |k| 1.0 / (2.0 * kf(k) + 4.0),
        printed: [-0.25, 4.0, 3.0, -96.0, 186.0],
    },
    LambdaSeries {
        id: "lambda-sum-diff-1-2",
        anchor: "sum lambda(2k)/((2k+1)(2k+2)4^k) = -G/pi + 7zeta_E(3)/(2pi^2)",
        weight: |k| 1.0 / ((2.0 * kf(k) + 1.0) * (2.0 * kf(k) + 2.0)),
        printed: [0.0, -1.0, 3.5, 0.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-diff-2-3",
        anchor: "sum lambda(2k)/((2k+2)(2k+3)4^k) = -G/pi - 5zeta_E(3)/pi^2 + 24beta(4)/pi^3",
        weight: |k| 1.0 / ((2.0 * kf(k) + 2.0) * (2.0 * kf(k) + 3.0)),
        printed: [0.0, -1.0, -5.0, 24.0, 0.0],
    },
    LambdaSeries {
        id: "lambda-sum-diff-3-4",
        anchor: "sum lambda(2k)/((2k+3)(2k+4)4^k) = -G/pi - 3zeta_E(3)/(2pi^2) + 72beta(4)/pi^3 - 186zeta_E(5)/pi^4",
        weight: |k| 1.0 / ((2.0 * kf(k) + 3.0) * (2.0 * kf(k) + 4.0)),
        printed: [0.0, -1.0, -1.5, 72.0, -186.0],
    },
];

/// `zeta_E(3) = (2 pi^2/7)(G/pi + sum lambda(2k)/((2k+1)(2k+2)4^k))`.
pub fn alt_zeta3_from_lambda_series() -> Result<EvalResult> {
    let s = lambda_weighted_sum(LAMBDA_SERIES[8].weight)?;
    let k = 2.0 * PI * PI / 7.0;
    Ok(lin(&[(k / PI, &catalan_value()), (k, &s)], "lambda-series"))
}

/// The quarter-point expansions of `log C_r(x/2)`, `r = 2..5`, written with
/// `C_s(x) = sum (-1)^n cos(pi n x)/n^s` and `S_s(x) = sum (-1)^n sin(pi n x)/n^s`.
pub fn mcos_trig_expansion(r: u32, x: f64) -> Result<EvalResult> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("expansion needs 0 <= x < 1, got {x}")));
    }
    let head = exact((0.5 * x).powi(r as i32 - 1) * (2.0 * (FRAC_PI_2 * x).cos()).ln());
    let route = "trig-sum-expansion";
    let (p2, p3, p4) = (PI * PI, PI.powi(3), PI.powi(4));
    Ok(match r {
        2 => lin(&[(1.0, &head), (1.0 / (2.0 * PI), &trig_sum_sin(2, x)?)], route),
        3 => lin(
            &[
                (1.0, &head),
                (1.0 / (2.0 * p2), &trig_sum_cos(3, x)?),
                (x / (2.0 * PI), &trig_sum_sin(2, x)?),
                (1.0 / (2.0 * p2), &alt_zeta(3.0)?),
            ],
            route,
        ),
        4 => lin(
            &[
                (1.0, &head),
                (3.0 * x / (4.0 * p2), &trig_sum_cos(3, x)?),
                (-3.0 / (4.0 * p3), &trig_sum_sin(4, x)?),
                (3.0 * x * x / (8.0 * PI), &trig_sum_sin(2, x)?),
            ],
            route,
        ),
        5 => lin(
            &[
                (1.0, &head),
                (-3.0 / (2.0 * p4), &trig_sum_cos(5, x)?),
                (3.0 * x * x / (4.0 * p2), &trig_sum_cos(3, x)?),
                (-3.0 * x / (2.0 * p3), &trig_sum_sin(4, x)?),
                (x.powi(3) / (4.0 * PI), &trig_sum_sin(2, x)?),
                (-3.0 / (2.0 * p4), &alt_zeta(5.0)?),
            ],
            route,
        ),
        _ => return Err(Error::domain(format!("expansion written out for r = 2..5, got {r}"))),
    })
}

/// Periods used for the mod-6 Dirichlet sums; the Abel tail is `O(N^{-s})`.
const SIXTH_PERIODS: u64 = 200_000;

/// `sum (-1)^n sin(pi n/3)/n^s` summed directly over whole periods of 6.
pub fn sixth_sin_direct(s: u32) -> Result<EvalResult> {
    let h = 0.5 * 3f64.sqrt();
    // (-1)^n sin(pi n/3) for n mod 6 = 0..5
    let pattern = [0.0, -h, h, 0.0, -h, h];
    sum_periodic_weighted(&pattern, |n| (n as f64).powi(-(s as i32)), 1, SIXTH_PERIODS)
}

/// `sum (-1)^n cos(pi n/3)/n^s` summed directly over whole periods of 6.
pub fn sixth_cos_direct(s: u32) -> Result<EvalResult> {
    let pattern = [1.0, -0.5, -0.5, 1.0, -0.5, -0.5];
    sum_periodic_weighted(&pattern, |n| (n as f64).powi(-(s as i32)), 1, SIXTH_PERIODS)
}

/// `sqrt3/2 (-L(s, chi_6) + 2^{-s} L(s, chi_3))`.
pub fn sixth_sin_closed(s: u32) -> Result<EvalResult> {
    let sf = s as f64;
    let l6 = dirichlet_l(sf, &CharacterSpec::chi6())?;
    let l3 = dirichlet_l(sf, &CharacterSpec::chi3())?;
    let h = 0.5 * 3f64.sqrt();
    Ok(lin(&[(-h, &l6), (h * 2f64.powi(-(s as i32)), &l3)], "dirichlet-l"))
}

/// `(3^{1-s} - 1) zeta(s) / 2`.
pub fn sixth_cos_closed(s: u32) -> Result<EvalResult> {
    let z = riemann_zeta(s as f64)?;
    Ok(z.scale(0.5 * (3f64.powi(1 - s as i32) - 1.0)).with_route("zeta"))
}

fn lg(x: f64) -> Result<EvalResult> {
    log_barnes_g(x)
}

fn log_a() -> EvalResult {
    EvalResult::new(glaisher_log_a(), 1e-16, 0, "constant")
}

/// `log G(7/4)` in terms of `G`, `log A` and `log Gamma(1/4)`.
pub fn barnes_seven_quarters_closed() -> Result<EvalResult> {
    let lg14 = log_gamma(0.25)?;
    Ok(lin(
        &[
            (3.0 / 8.0, &exact(LN_2)),
            (0.75, &exact(PI.ln())),
            (1.0 / (4.0 * PI), &catalan_value()),
            (1.0, &exact(3.0 / 32.0)),
            (-9.0 / 8.0, &log_a()),
            (-0.75, &lg14),
        ],
        "barnes-closed-form",
    ))
}

/// `log G(1/4)` in terms of `G`, `log A` and `log Gamma(1/4)`.
pub fn barnes_quarter_closed() -> Result<EvalResult> {
    let lg14 = log_gamma(0.25)?;
    Ok(lin(
        &[
            (-1.0 / (4.0 * PI), &catalan_value()),
            (-0.75, &lg14),
            (-9.0 / 8.0, &log_a()),
            (1.0, &exact(3.0 / 32.0)),
        ],
        "barnes-closed-form",
    ))
}

/// `log C_2(x/2) = (x/2) log 2pi + log sqrt(pi) - log cos(pi x/2)/2
///   + log G(1/2 - x/2) - log G(3/2 + x/2)` for `0 <= x < 1`.
pub fn log_c2_barnes(x: f64) -> Result<EvalResult> {
    let a = lg(0.5 - 0.5 * x)?;
    let b = lg(1.5 + 0.5 * x)?;
    let head = exact(0.5 * x * (2.0 * PI).ln() + 0.5 * PI.ln() - 0.5 * (FRAC_PI_2 * x).cos().ln());
    Ok(lin(&[(1.0, &head), (1.0, &a), (-1.0, &b)], "barnes-g"))
}

/// `log C_2(1/6) = 2 log(2 pi)/3 - log 3/4 + log G(1/3) - log G(5/3)`.
pub fn log_c2_sixth_barnes() -> Result<EvalResult> {
    let a = lg(1.0 / 3.0)?;
    let b = lg(5.0 / 3.0)?;
    let head = exact(2.0 * (2.0 * PI).ln() / 3.0 - 0.25 * 3f64.ln());
    Ok(lin(&[(1.0, &head), (1.0, &a), (-1.0, &b)], "barnes-g"))
}

/// `log G(1/3) - log G(5/3) = log 3/3 - 2 log(2 pi)/3 + sqrt3/(4 pi)(L(2,chi_3)/4 - L(2,chi_6))`.
pub fn barnes_third_ratio_closed() -> Result<EvalResult> {
    let l = sixth_l_combination()?;
    let head = exact(3f64.ln() / 3.0 - 2.0 * (2.0 * PI).ln() / 3.0);
    Ok(lin(&[(1.0, &head), (3f64.sqrt() / (4.0 * PI), &l)], "dirichlet-l"))
}

/// Shared part of `log G(1/3)` and `log G(5/3)`:
/// `pi/(18 sqrt3) - 2 log Gamma(1/3)/3 - 4 log A/3 - psi_1(1/3)/(12 pi sqrt3) + 1/9`.
fn barnes_third_common() -> Result<Vec<(f64, EvalResult)>> {
    let s3 = 3f64.sqrt();
    Ok(vec![
        (1.0, exact(PI / (18.0 * s3) + 1.0 / 9.0)),
        (-2.0 / 3.0, log_gamma(1.0 / 3.0)?),
        (-4.0 / 3.0, log_a()),
        (-1.0 / (12.0 * PI * s3), trigamma(1.0 / 3.0)?),
    ])
}

/// `log G(1/3)` in closed form.
pub fn barnes_third_closed() -> Result<EvalResult> {
    let mut parts = barnes_third_common()?;
    parts.push((1.0 / 72.0, ln3()));
    let refs: Vec<(f64, &EvalResult)> = parts.iter().map(|(c, v)| (*c, v)).collect();
    Ok(lin(&refs, "barnes-closed-form"))
}

/// `log G(5/3)` in closed form.
pub fn barnes_five_thirds_closed() -> Result<EvalResult> {
    let mut parts = barnes_third_common()?;
    parts.push((-23.0 / 72.0, ln3()));
    parts.push((2.0 / 3.0, exact((2.0 * PI).ln())));
    parts.push((-3f64.sqrt() / (4.0 * PI), sixth_l_combination()?));
    let refs: Vec<(f64, &EvalResult)> = parts.iter().map(|(c, v)| (*c, v)).collect();
    Ok(lin(&refs, "barnes-closed-form"))
}

/// `Cl_2(theta) = theta log pi - theta log sin(theta/2)
///   + 2 pi (log G(1 - theta/2pi) - log G(1 + theta/2pi))` for `0 < theta < 2 pi`.
pub fn clausen_barnes(theta: f64) -> Result<EvalResult> {
    let u = theta / (2.0 * PI);
    let a = lg(1.0 - u)?;
    let b = lg(1.0 + u)?;
    let head = exact(theta * PI.ln() - theta * (0.5 * theta).sin().ln());
    Ok(lin(&[(1.0, &head), (2.0 * PI, &a), (-2.0 * PI, &b)], "barnes-g"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_known_digits() {
        let z = zeta3_oracle();
        assert!((z.value - 1.202_056_903_159_594_3).abs() < 1e-14);
    }

    #[test]
    fn lambda_family_closed_forms() {
        for s in &LAMBDA_SERIES {
            let a = s.summed().unwrap();
            let b = s.closed_form().unwrap();
            assert!((a.value - b.value).abs() < 1e-12, "{}: {} vs {}", s.id, a.value, b.value);
        }
        let z = alt_zeta3_from_lambda_series().unwrap();
        assert!((z.value - 0.75 * zeta3_oracle().value).abs() < 1e-12);
    }

    #[test]
    fn extraction_linearity() {
        let base = zeta3_from_quarter_parts(0.9, -0.04);
        let bumped = zeta3_from_quarter_parts(0.9, -0.04 + 1e-8);
        let expected = 4.0 * PI * PI / 21.0 * 16.0 * 1e-8;
        assert!(((bumped - base) - expected).abs() < 1e-14);
    }
}
