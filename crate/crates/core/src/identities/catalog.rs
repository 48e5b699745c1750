use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::sync::Arc;

use super::formulas::{self as f, exact};
use super::{IdentityRecord, TOL_QUADRATURE, TOL_SERIES};
use crate::error::Result;
use crate::euler::{
    cosine_moment, euler_integral_quad, euler_integral_thm1, euler_integral_thm1gen, lemma42_direct, lemma42_sum,
    log_cos_half_fourier, log_mcos_quarter_closed, EulerIntegralSpec,
};
use crate::gamma::{catalan, constant_residuals, log_barnes_g};
use crate::multitrig::{
    log_mcos, log_mcos_lambda_series, log_msin, multiplication_residual, ode_residual, translation_residual,
    RouteChoice,
};
use crate::numerics::{derivative_fd, integrate, EvalResult, QuadratureConfig, SeriesConfig};
use crate::polylog::clausen2;
use crate::zeta::beta_fn;

const TOL_BARNES: f64 = 1e-8;
const TOL_DIRICHLET: f64 = 1e-10;

const A_EULER_SIN: &str = "int_0^{pi/2} log sin(theta) dtheta = -(pi/2) log 2";
const A_EULER_COS: &str = "int_0^{pi/2} log cos(theta) dtheta = -(pi/2) log 2";
const A_MCOS_INTEGRAL: &str =
    "int_0^x theta^{r-2} log cos(theta/2) dtheta = x^{r-1}/(r-1) log cos(x/2) - (2pi)^{r-1}/(r-1) log C_r(x/(2pi))";
const A_HALF_PI_GENERAL: &str =
    "int_0^{pi/2} theta^{r-2} log cos(theta/2) dtheta = combination of log 2, beta(2k+2), zeta_E(2k+1), zeta_E(r)";
const A_HALF_PI_QUARTER: &str =
    "int_0^{pi/2} theta^{r-2} log cos(theta/2) dtheta = -pi^{r-1}/(r-1) (log 2/2^r + 2^{r-1} log C_r(1/4))";
const A_QUARTER_GENERAL: &str = "log C_r(1/4) = combination of log 2, beta(2k+2), zeta_E(2k+1), zeta_E(r)";
const A_EXAMPLES: [&str; 4] = [
    "int_0^{pi/2} log cos(theta/2) dtheta = -pi log2/2 + G",
    "int_0^{pi/2} theta log cos(theta/2) dtheta = -pi^2 log2/8 + pi G/2 - 7zeta_E(3)/8",
    "int_0^{pi/2} theta^2 log cos(theta/2) dtheta = -pi^3 log2/24 + pi^2 G/4 + pi zeta_E(3)/8 - 2beta(4)",
    "int_0^{pi/2} theta^3 log cos(theta/2) dtheta = -pi^4 log2/64 + pi^3 G/8 + 3pi^2 zeta_E(3)/32 - 3pi beta(4) + 93zeta_E(5)/16",
];
const A_EXAMPLE_R4_PRINTED: &str =
    "int_0^{pi/2} theta^2 log cos(theta/2) dtheta = -pi^3 log2/24 + pi^2 G/4 + pi zeta_E(3)/12 - 2beta(4) (as printed)";
const A_QUARTERS: [&str; 4] = [
    "log C_2(1/4) = log2/8 - G/(2pi)",
    "log C_3(1/4) = log2/32 - G/(4pi) + 7zeta_E(3)/(16pi^2)",
    "log C_4(1/4) = log2/128 - 3G/(32pi) - 3zeta_E(3)/(64pi^2) + 3beta(4)/(4pi^3)",
    "log C_5(1/4) = log2/512 - G/(32pi) - 3zeta_E(3)/(128pi^2) + 3beta(4)/(4pi^3) - 93zeta_E(5)/(64pi^4)",
];
const A_ZETA3_QUARTER: &str = "zeta(3) = (4pi^2/21) log(e^{4G/pi} C_3(1/4)^16 / sqrt2)";
const A_ZETA3_SIXTH: &str = "zeta(3) = (72pi^2/11) log(3^{1/72} C_3(1/6) / C_2(1/6)^{1/3})";
const A_C2_SIXTH: &str = "C_2(1/6) = 3^{1/12} exp(sqrt3/(4pi) (L(2,chi_3)/4 - L(2,chi_6)))";
const A_C3_SIXTH: &str =
    "C_3(1/6) = 3^{1/72} exp(11zeta(3)/(72pi^2) + sqrt3/(12pi) (L(2,chi_3)/4 - L(2,chi_6)))";
const A_LAMBDA_REP: &str =
    "log C_r(x/(2pi)) = (x/(2pi))^{r-1} (log cos(x/2) + (r-1) sum lambda(2n)/(n(2n+r-1)) (x/pi)^{2n})";
const A_TRIG_EXPANSION: &str =
    "C_r(x/2) = (2cos(pi x/2))^{(x/2)^{r-1}} exp(sums of (-1)^n cos(pi n x)/n^s and (-1)^n sin(pi n x)/n^s), r = 2..5";
const A_SIXTH_SIN: &str = "sum (-1)^n sin(pi n/3)/n^s = (sqrt3/2)(-L(s,chi_6) + L(s,chi_3)/2^s)";
const A_SIXTH_COS: &str = "sum (-1)^n cos(pi n/3)/n^s = (3^{1-s} - 1) zeta(s)/2";
const A_ROUTES: &str = "log C_r(x) = -int_0^x pi t^{r-1} tan(pi t) dt = -2 sum_k lambda(2k) 2^{2k} x^{2k+r-1}/(2k+r-1)";
const A_DUPLICATION: &str = "C_r(x)^{2^{r-1}} = S_r(2x) / S_r(x)^{2^{r-1}}";
const A_TRANSLATION: &str = "(log C_r)'(x+1) = sum_{k=1}^r binom(r-1,k-1) (log C_k)'(x)";
const A_MULTIPLICATION: &str =
    "d/dx log C_r(Nx) = -pi N^{r-1} x^{r-1} sum_{a=0}^{N-1} tan(pi(x + 2a/N)), N odd";
const A_ODE: &str = "C'' = (1 - x^{1-r}) C'^2/C + (r-1) C'/x - pi^2 x^{r-1} C";
const A_AT_ZERO: &str = "C_r(0) = 1 and C_r'(0) = 0";
const A_COSINE_MOMENT: &str =
    "int_0^x theta^r cos(n theta) dtheta = sum_k binom(r,k) k! n^{-(k+1)} sin(nx + k pi/2) x^{r-k} - r! n^{-(r+1)} sin(r pi/2)";
const A_LEMMA_SUM: &str =
    "sum_n (-1)^{n-1}/n int_0^{pi/2} theta^r cos(n theta) dtheta = combination of beta(2k+2), zeta_E(2k+1), zeta_E(r+2)";
const A_FOURIER: &str = "log cos(theta/2) = -log 2 + sum (-1)^{n-1} cos(n theta)/n";
const A_ALT_ZETA3: &str = "zeta_E(3) = (2pi^2/7)(G/pi + sum lambda(2k)/((2k+1)(2k+2)4^k))";
const A_CLAUSEN: &str =
    "Cl_2(theta) = theta log pi - theta log sin(theta/2) + 2pi log(G(1 - theta/(2pi)) / G(1 + theta/(2pi)))";
const A_C2_BARNES: &str =
    "log C_2(x/2) = (x/2) log(2pi) + log sqrt(pi) - log cos(pi x/2)/2 + log(G(1/2 - x/2) / G(3/2 + x/2))";
const A_C2_SIXTH_BARNES: &str = "log C_2(1/6) = (2/3) log(2pi) - log3/4 + log(G(1/3)/G(5/3))";
const A_BARNES_THIRD_RATIO: &str =
    "log(G(1/3)/G(5/3)) = log3/3 - (2/3) log(2pi) + sqrt3/(4pi) (L(2,chi_3)/4 - L(2,chi_6))";
const A_BARNES_THIRD: &str =
    "log G(1/3) = log3/72 + pi/(18 sqrt3) - (2/3) log Gamma(1/3) - (4/3) log A - psi_1(1/3)/(12 pi sqrt3) + 1/9";
const A_BARNES_FIVE_THIRDS: &str = "log G(5/3) = -23 log3/72 + pi/(18 sqrt3) - (2/3) log Gamma(1/3) - (4/3) log A - psi_1(1/3)/(12 pi sqrt3) + 1/9 + (2/3) log(2pi) - sqrt3/(4pi) (L(2,chi_3)/4 - L(2,chi_6))";
const A_BARNES_SEVEN_QUARTERS: &str =
    "log G(7/4) = 3 log2/8 + 3 log pi/4 + G/(4pi) + 3/32 - 9 log A/8 - 3 log Gamma(1/4)/4";
const A_BARNES_QUARTER: &str = "log G(1/4) = -G/(4pi) - 3 log Gamma(1/4)/4 - 9 log A/8 + 3/32";
const A_BARNES_QUARTER_RATIO: &str = "log G(7/4) - log G(1/4) = 3 log2/8 + 3 log pi/4 + G/(2pi)";
const A_CATALAN: &str = "G = beta(2)";
const A_GLAISHER: &str = "G(1/2) = 2^{1/24} e^{1/8} pi^{-1/4} A^{-3/2}";

struct Builder(Vec<IdentityRecord>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn add<L, R>(&mut self, id: String, anchor: &str, lhs_desc: &str, lhs: L, rhs_desc: &str, rhs: R, tol: f64, tags: &[&str])
    where
        L: Fn() -> Result<EvalResult> + Send + Sync + 'static,
        R: Fn() -> Result<EvalResult> + Send + Sync + 'static,
    {
        self.0.push(IdentityRecord {
            id,
            paper_anchor: anchor.to_string(),
            lhs_desc: lhs_desc.to_string(),
            rhs_desc: rhs_desc.to_string(),
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
            tol,
            tags: tags.iter().map(|t| t.to_string()).collect(),
        });
    }
}

fn zero() -> Result<EvalResult> {
    Ok(EvalResult::new(0.0, 0.0, 0, "exact"))
}

/// A residual computed by finite differences, reported as a value with no
/// certified bound.
fn residual(v: Result<f64>) -> Result<EvalResult> {
    v.map(|d| EvalResult::new(d, 0.0, 0, "residual"))
}

fn half_pi_quad(r: u32) -> Result<EvalResult> {
    let spec = EulerIntegralSpec::new(r, FRAC_PI_2)?;
    euler_integral_quad(&spec, &spec.default_quadrature())
}

fn x_label(x: f64) -> String {
    if x == FRAC_PI_2 {
        "pi_2".to_string()
    } else {
        format!("{x}")
    }
}

pub fn build_registry() -> Vec<IdentityRecord> {
    let mut b = Builder(Vec::new());
    classical(&mut b);
    euler_integrals(&mut b);
    quarter_values(&mut b);
    zeta3(&mut b);
    expansions(&mut b);
    structure(&mut b);
    lemmas(&mut b);
    lambda_series(&mut b);
    barnes_clausen(&mut b);
    b.0.sort_by(|x, y| x.id.cmp(&y.id));
    b.0
}

fn classical(b: &mut Builder) {
    let ts = QuadratureConfig::tanh_sinh(1e-14);
    b.add(
        "euler-log-sin-half-pi".into(),
        A_EULER_SIN,
        "tanh-sinh quadrature",
        move || integrate(|t: f64| t.sin().ln(), 0.0, FRAC_PI_2, &ts),
        "-(pi/2) log 2",
        || Ok(exact(-FRAC_PI_2 * LN_2)),
        1e-12,
        &["classical", "euler"],
    );
    b.add(
        "euler-log-cos-half-pi".into(),
        A_EULER_COS,
        "tanh-sinh quadrature",
        move || integrate(|t: f64| t.cos().ln(), 0.0, FRAC_PI_2, &ts),
        "-(pi/2) log 2",
        || Ok(exact(-FRAC_PI_2 * LN_2)),
        1e-12,
        &["classical", "euler"],
    );
    b.add(
        "constant-catalan".into(),
        A_CATALAN,
        "stored G",
        || Ok(f::catalan_value()),
        "beta(2) by CVZ",
        || beta_fn(2.0),
        TOL_SERIES,
        &["constants"],
    );
    b.add(
        "constant-glaisher".into(),
        A_GLAISHER,
        "stored log A",
        || Ok(EvalResult::new(crate::gamma::glaisher_log_a(), 1e-16, 0, "constant")),
        "log A from the Taylor route at G(1/2)",
        || {
            let (_, d) = constant_residuals()?;
            Ok(EvalResult::new(crate::gamma::glaisher_log_a() - d, 1e-14, 0, "barnes-taylor"))
        },
        TOL_SERIES,
        &["constants"],
    );
}

fn euler_integrals(b: &mut Builder) {
    for r in 2..=5u32 {
        for x in [0.5, 1.0, FRAC_PI_2, 2.5] {
            b.add(
                format!("mcos-integral-r{r}-x{}", x_label(x)),
                A_MCOS_INTEGRAL,
                "quadrature",
                move || {
                    let spec = EulerIntegralSpec::new(r, x)?;
                    euler_integral_quad(&spec, &spec.default_quadrature())
                },
                "multiple cosine closed form",
                move || euler_integral_thm1(&EulerIntegralSpec::new(r, x)?),
                TOL_QUADRATURE,
                &["euler", "mcos-integral-grid"],
            );
        }
    }
    for r in 2..=8u32 {
        b.add(
            format!("half-pi-general-r{r}"),
            A_HALF_PI_GENERAL,
            "quadrature at pi/2",
            move || half_pi_quad(r),
            "zeta/beta combination",
            move || euler_integral_thm1gen(r),
            TOL_QUADRATURE,
            &["euler", "closed-form"],
        );
    }
    for r in 2..=6u32 {
        b.add(
            format!("half-pi-quarter-form-r{r}"),
            A_HALF_PI_QUARTER,
            "quadrature at pi/2",
            move || half_pi_quad(r),
            "log C_r(1/4) form",
            move || f::quarter_integral_form(r),
            TOL_QUADRATURE,
            &["euler", "closed-form"],
        );
    }
    for r in 2..=5u32 {
        b.add(
            format!("worked-integral-r{r}"),
            A_EXAMPLES[(r - 2) as usize],
            "quadrature at pi/2",
            move || half_pi_quad(r),
            "printed closed form",
            move || f::example_integral_closed(r),
            TOL_QUADRATURE,
            &["euler", "examples"],
        );
    }
    b.add(
        "worked-integral-r4-as-printed".into(),
        A_EXAMPLE_R4_PRINTED,
        "quadrature at pi/2",
        || half_pi_quad(4),
        "closed form with pi zeta_E(3)/12",
        f::example_integral_r4_printed,
        TOL_QUADRATURE,
        &["erratum", "errata"],
    );
}

fn quarter_values(b: &mut Builder) {
    for r in 2..=8u32 {
        b.add(
            format!("quarter-general-r{r}"),
            A_QUARTER_GENERAL,
            "log C_r(1/4), series route",
            move || log_mcos(r, 0.25, RouteChoice::Series),
            "zeta/beta combination",
            move || log_mcos_quarter_closed(r),
            TOL_SERIES,
            &["quarter", "closed-form"],
        );
    }
    for r in 2..=5u32 {
        b.add(
            format!("quarter-printed-r{r}"),
            A_QUARTERS[(r - 2) as usize],
            "log C_r(1/4), series route",
            move || log_mcos(r, 0.25, RouteChoice::Series),
            "printed closed form",
            move || f::quarter_printed(r),
            TOL_SERIES,
            &["quarter", "examples"],
        );
    }
}

fn zeta3(b: &mut Builder) {
    b.add(
        "zeta3-from-quarter".into(),
        A_ZETA3_QUARTER,
        "extraction from C_3(1/4)",
        f::zeta3_via_quarter,
        "direct-sum oracle",
        || Ok(f::zeta3_oracle()),
        1e-10,
        &["zeta3"],
    );
    b.add(
        "zeta3-from-sixth".into(),
        A_ZETA3_SIXTH,
        "extraction from C_2(1/6), C_3(1/6)",
        f::zeta3_via_sixth,
        "direct-sum oracle",
        || Ok(f::zeta3_oracle()),
        TOL_QUADRATURE,
        &["zeta3"],
    );
    b.add(
        "zeta3-extractions-agree".into(),
        A_ZETA3_SIXTH,
        "extraction from C_3(1/4)",
        f::zeta3_via_quarter,
        "extraction from C_2(1/6), C_3(1/6)",
        f::zeta3_via_sixth,
        2e-9,
        &["zeta3-cross"],
    );
    b.add(
        "sixth-c2-dirichlet".into(),
        A_C2_SIXTH,
        "log C_2(1/6), series route",
        || log_mcos(2, 1.0 / 6.0, RouteChoice::Series),
        "L(2, chi_3), L(2, chi_6)",
        f::log_c2_sixth_closed,
        TOL_DIRICHLET,
        &["sixth"],
    );
    b.add(
        "sixth-c3-dirichlet".into(),
        A_C3_SIXTH,
        "log C_3(1/6), series route",
        || log_mcos(3, 1.0 / 6.0, RouteChoice::Series),
        "zeta(3), L(2, chi_3), L(2, chi_6)",
        f::log_c3_sixth_closed,
        TOL_DIRICHLET,
        &["sixth"],
    );
}

fn expansions(b: &mut Builder) {
    for (r, x) in [(2u32, 1.0), (3, 2.5), (4, FRAC_PI_2), (5, 0.5)] {
        b.add(
            format!("lambda-representation-r{r}-x{}", x_label(x)),
            A_LAMBDA_REP,
            "log C_r(x/2pi), automatic route",
            move || log_mcos(r, x / (2.0 * PI), RouteChoice::Auto),
            "lambda(2n) series",
            move || log_mcos_lambda_series(r, x / (2.0 * PI), &SeriesConfig::with_tol(1e-14)),
            TOL_SERIES,
            &["expansions"],
        );
    }
    for r in 2..=5u32 {
        for (label, x) in [("1_3", 1.0 / 3.0), ("1_2", 0.5)] {
            b.add(
                format!("trig-expansion-r{r}-x{label}"),
                A_TRIG_EXPANSION,
                "log C_r(x/2), series route",
                move || log_mcos(r, 0.5 * x, RouteChoice::Series),
                "trigonometric Dirichlet sums",
                move || f::mcos_trig_expansion(r, x),
                TOL_SERIES,
                &["expansions", "polylog"],
            );
        }
    }
    for s in 2..=4u32 {
        b.add(
            format!("sixth-sin-sum-s{s}"),
            A_SIXTH_SIN,
            "direct periodic summation",
            move || f::sixth_sin_direct(s),
            "L(s, chi_6), L(s, chi_3)",
            move || f::sixth_sin_closed(s),
            TOL_DIRICHLET,
            &["dirichlet"],
        );
        b.add(
            format!("sixth-cos-sum-s{s}"),
            A_SIXTH_COS,
            "direct periodic summation",
            move || f::sixth_cos_direct(s),
            "zeta(s)",
            move || f::sixth_cos_closed(s),
            TOL_DIRICHLET,
            &["dirichlet"],
        );
    }
    for (r, x) in [(2u32, 0.2), (3, 0.2), (3, 0.4), (5, 0.4)] {
        b.add(
            format!("routes-series-integral-r{r}-x{x}"),
            A_ROUTES,
            "series route",
            move || log_mcos(r, x, RouteChoice::Series),
            "integral route",
            move || log_mcos(r, x, RouteChoice::Integral),
            TOL_QUADRATURE,
            &["routes"],
        );
    }
}

fn structure(b: &mut Builder) {
    for r in 2..=4u32 {
        for x in [0.1, 0.2, 0.3, 0.4] {
            b.add(
                format!("duplication-r{r}-x{x}"),
                A_DUPLICATION,
                "2^{r-1}(log C_r(x) + log S_r(x))",
                move || {
                    let w = 2f64.powi(r as i32 - 1);
                    let c = log_mcos(r, x, RouteChoice::Auto)?;
                    let s = log_msin(r, x)?;
                    Ok(EvalResult::combine(&[(w, &c), (w, &s)], "duplication"))
                },
                "log S_r(2x)",
                move || log_msin(r, 2.0 * x),
                TOL_QUADRATURE,
                &["structure", "duplication"],
            );
        }
    }
    for (r, x) in [(2u32, 0.1), (3, 0.2), (5, 0.3)] {
        b.add(
            format!("translation-r{r}-x{x}"),
            A_TRANSLATION,
            "derivative-form residual",
            move || residual(translation_residual(r, x)),
            "0",
            zero,
            1e-10,
            &["structure"],
        );
    }
    for (r, n, x) in [(2u32, 3u32, 0.05), (3, 3, 0.07), (4, 5, 0.03)] {
        b.add(
            format!("multiplication-r{r}-n{n}-x{x}"),
            A_MULTIPLICATION,
            "derivative-form residual",
            move || residual(multiplication_residual(r, n, x)),
            "0",
            zero,
            1e-10,
            &["structure"],
        );
    }
    for (r, x) in [(2u32, 0.1), (3, 0.2), (4, 0.3)] {
        b.add(
            format!("ode-r{r}-x{x}"),
            A_ODE,
            "normalized finite-difference residual",
            move || residual(ode_residual(r, x)),
            "0",
            zero,
            1e-5,
            &["structure"],
        );
    }
    for r in [2u32, 3] {
        b.add(
            format!("at-zero-value-r{r}"),
            A_AT_ZERO,
            "C_r(0)",
            move || log_mcos(r, 0.0, RouteChoice::Series).map(|v| EvalResult::new(v.value.exp(), v.error_bound, 0, "series")),
            "1",
            || Ok(exact(1.0)),
            TOL_SERIES,
            &["structure"],
        );
        b.add(
            format!("at-zero-slope-r{r}"),
            A_AT_ZERO,
            "C_r'(0) by central differences",
            move || {
                let c = |t: f64| log_mcos(r, t, RouteChoice::Series).map(|v| v.value.exp()).unwrap_or(f64::NAN);
                Ok(EvalResult::new(derivative_fd(c, 0.0, 1, 1e-3), 0.0, 0, "fd"))
            },
            "0",
            zero,
            TOL_QUADRATURE,
            &["structure"],
        );
    }
}

fn lemmas(b: &mut Builder) {
    for (r, n, x) in [(0u32, 1u32, FRAC_PI_2), (1, 2, FRAC_PI_2), (3, 5, 1.1), (4, 7, 2.9)] {
        b.add(
            format!("cosine-moment-r{r}-n{n}-x{}", x_label(x)),
            A_COSINE_MOMENT,
            "quadrature",
            move || {
                integrate(
                    |t: f64| t.powi(r as i32) * (n as f64 * t).cos(),
                    0.0,
                    x,
                    &QuadratureConfig::gauss_kronrod(1e-12),
                )
            },
            "closed form",
            move || cosine_moment(r, n, x).map(exact),
            1e-11,
            &["lemmas"],
        );
    }
    for r in 0..=4u32 {
        b.add(
            format!("lemma-sum-r{r}"),
            A_LEMMA_SUM,
            "direct summation with Abel tail",
            move || lemma42_direct(r, 200_000),
            "zeta/beta combination",
            move || lemma42_sum(r),
            TOL_QUADRATURE,
            &["lemmas"],
        );
    }
    for t in [0.5, 1.0, 1.5] {
        b.add(
            format!("fourier-log-cos-theta{t}"),
            A_FOURIER,
            "CVZ-accelerated Fourier series",
            move || log_cos_half_fourier(t, &SeriesConfig::with_tol(1e-10)),
            "log cos(theta/2)",
            move || Ok(exact((0.5 * t).cos().ln())),
            1e-8,
            &["lemmas", "fourier"],
        );
    }
}

fn lambda_series(b: &mut Builder) {
    for (i, s) in f::LAMBDA_SERIES.iter().enumerate() {
        b.add(
            s.id.to_string(),
            s.anchor,
            "geometric-tail summation",
            move || f::LAMBDA_SERIES[i].summed(),
            "printed closed form",
            move || f::LAMBDA_SERIES[i].closed_form(),
            TOL_SERIES,
            &["lambda-series"],
        );
    }
    b.add(
        "lambda-sum-alt-zeta3".into(),
        A_ALT_ZETA3,
        "lambda-series representation of zeta_E(3)",
        f::alt_zeta3_from_lambda_series,
        "(3/4) zeta(3) from the direct-sum oracle",
        || Ok(f::zeta3_oracle().scale(0.75)),
        TOL_SERIES,
        &["lambda-series"],
    );
}

fn barnes_clausen(b: &mut Builder) {
    for (label, k) in [("pi_3", 1.0 / 3.0), ("pi_2", 0.5), ("2pi_3", 2.0 / 3.0)] {
        let theta = k * PI;
        b.add(
            format!("clausen-barnes-theta{label}"),
            A_CLAUSEN,
            "Cl_2 via polylogarithm",
            move || clausen2(theta),
            "Barnes G form",
            move || f::clausen_barnes(theta),
            TOL_BARNES,
            &["barnes", "clausen"],
        );
    }
    for (label, x) in [("1_2", 0.5), ("1_3", 1.0 / 3.0)] {
        b.add(
            format!("mcos2-barnes-x{label}"),
            A_C2_BARNES,
            "log C_2(x/2), series route",
            move || log_mcos(2, 0.5 * x, RouteChoice::Series),
            "Barnes G form",
            move || f::log_c2_barnes(x),
            TOL_BARNES,
            &["barnes"],
        );
    }
    b.add(
        "mcos2-barnes-sixth".into(),
        A_C2_SIXTH_BARNES,
        "log C_2(1/6), series route",
        || log_mcos(2, 1.0 / 6.0, RouteChoice::Series),
        "Barnes G form",
        f::log_c2_sixth_barnes,
        TOL_BARNES,
        &["barnes"],
    );
    b.add(
        "barnes-third-ratio".into(),
        A_BARNES_THIRD_RATIO,
        "log G(1/3) - log G(5/3)",
        || {
            let a = log_barnes_g(1.0 / 3.0)?;
            let c = log_barnes_g(5.0 / 3.0)?;
            Ok(EvalResult::combine(&[(1.0, &a), (-1.0, &c)], "barnes-g"))
        },
        "Dirichlet L form",
        f::barnes_third_ratio_closed,
        TOL_BARNES,
        &["barnes"],
    );
    b.add(
        "barnes-third".into(),
        A_BARNES_THIRD,
        "log G(1/3)",
        || log_barnes_g(1.0 / 3.0),
        "closed form",
        f::barnes_third_closed,
        TOL_BARNES,
        &["barnes"],
    );
    b.add(
        "barnes-five-thirds".into(),
        A_BARNES_FIVE_THIRDS,
        "log G(5/3)",
        || log_barnes_g(5.0 / 3.0),
        "closed form",
        f::barnes_five_thirds_closed,
        TOL_BARNES,
        &["barnes"],
    );
    b.add(
        "barnes-seven-quarters".into(),
        A_BARNES_SEVEN_QUARTERS,
        "log G(7/4)",
        || log_barnes_g(1.75),
        "closed form",
        f::barnes_seven_quarters_closed,
        TOL_BARNES,
        &["barnes"],
    );
    b.add(
        "barnes-quarter".into(),
        A_BARNES_QUARTER,
        "log G(1/4)",
        || log_barnes_g(0.25),
        "closed form",
        f::barnes_quarter_closed,
        TOL_BARNES,
        &["barnes"],
    );
    b.add(
        "barnes-quarter-ratio".into(),
        A_BARNES_QUARTER_RATIO,
        "log G(7/4) - log G(1/4)",
        || {
            let a = log_barnes_g(1.75)?;
            let c = log_barnes_g(0.25)?;
            Ok(EvalResult::combine(&[(1.0, &a), (-1.0, &c)], "barnes-g"))
        },
        "3 log2/8 + 3 log pi/4 + G/(2pi)",
        || Ok(exact(3.0 * LN_2 / 8.0 + 0.75 * PI.ln() + catalan() / (2.0 * PI))),
        TOL_BARNES,
        &["barnes"],
    );
}

/// Markdown listing of every record grouped by the formula it checks.
pub fn catalogue_markdown() -> String {
    let reg = super::registry();
    let mut anchors: Vec<&str> = Vec::new();
    for r in reg {
        if !anchors.contains(&r.paper_anchor.as_str()) {
            anchors.push(&r.paper_anchor);
        }
    }
    let mut out = String::from(
        "# Identity catalogue\n\nEvery record run by `mcz verify`, grouped by the formula it checks. \
         Regenerate with `mcz verify --list > docs/identities.md`.\n",
    );
    for (i, a) in anchors.iter().enumerate() {
        out.push_str(&format!("\n## {}\n\n`{a}`\n\n| id | lhs | rhs | tol | tags |\n|---|---|---|---|---|\n", i + 1));
        for r in reg.iter().filter(|r| r.paper_anchor == *a) {
            out.push_str(&format!(
                "| `{}` | {} | {} | {:e} | {} |\n",
                r.id,
                r.lhs_desc,
                r.rhs_desc,
                r.tol,
                r.tags.join(", ")
            ));
        }
    }
    out
}
