//! Values frozen from 30-digit mpmath runs (quadrature for the multiple
//! trigonometric functions, direct or accelerated sums elsewhere).

use mcz_core::euler::{euler_integral_quad, EulerIntegralSpec};
use mcz_core::gamma::{log_barnes_g, log_gamma, trigamma};
use mcz_core::multitrig::{log_mcos, log_msin, RouteChoice};
use mcz_core::polylog::{clausen2, polylog_unit, Sign, UnitCirclePoint};
use mcz_core::zeta::{alt_zeta, beta_fn, dirichlet_l, hurwitz_zeta, CharacterSpec};
use mcz_core::EvalResult;

fn close(r: &EvalResult, want: f64, tol: f64) {
    let d = (r.value - want).abs();
    assert!(d <= tol, "{} vs {want}: diff {d:e} ({r:?})", r.value);
    assert!(d <= r.error_bound + 4.0 * f64::EPSILON * want.abs(), "bound too small: diff {d:e}, {r:?}");
}

#[test]
fn multiple_cosine_all_routes() {
    let cases = [
        (2, 0.1, -0.003_356_697_570_077_456_177_2),
        (3, 0.3, -0.025_416_360_355_105_165_132),
        (4, 0.45, -0.089_472_264_949_138_601_241),
        (5, 0.2, -0.000_117_181_370_783_852_132_13),
        (2, 0.49, -1.393_727_712_532_685_504_1),
    ];
    for (r, x, want) in cases {
        for route in [RouteChoice::Series, RouteChoice::Integral, RouteChoice::Polylog, RouteChoice::Auto] {
            close(&log_mcos(r, x, route).unwrap(), want, 1e-12);
        }
        assert!((log_mcos(r, -x, RouteChoice::Auto).unwrap().value - (-1f64).powi(r as i32 - 1) * want).abs() < 1e-12);
    }
}

#[test]
fn multiple_sine() {
    for (r, x, want) in [
        (2, 0.3, 0.269_270_858_352_875_496_61),
        (3, 0.7, -0.019_272_848_008_574_375_885),
        (4, 0.5, 0.018_134_369_188_608_304_422),
    ] {
        close(&log_msin(r, x).unwrap(), want, 1e-12);
    }
}

#[test]
fn dirichlet_family() {
    close(&dirichlet_l(2.0, &CharacterSpec::chi3()).unwrap(), 0.781_302_412_896_486_296_87, 1e-14);
    close(&dirichlet_l(2.0, &CharacterSpec::chi6()).unwrap(), 0.976_628_016_120_607_871_08, 1e-14);
    close(&dirichlet_l(3.0, &CharacterSpec::chi3()).unwrap(), 0.884_023_811_750_079_856_74, 1e-14);
    close(&hurwitz_zeta(2.5, 0.3).unwrap(), 21.069_239_202_247_724_917, 1e-12);
    close(&hurwitz_zeta(3.0, 1.0 / 7.0).unwrap(), 343.840_761_034_329_157_39, 1e-10);
    close(&alt_zeta(0.5).unwrap(), 0.604_898_643_421_630_370_25, 1e-14);
    close(&alt_zeta(3.0).unwrap(), 0.901_542_677_369_695_714_05, 1e-14);
    close(&beta_fn(4.0).unwrap(), 0.988_944_551_741_105_336_11, 1e-14);
}

#[test]
fn gamma_family() {
    close(&trigamma(1.0 / 3.0).unwrap(), 10.095_597_125_427_094_082, 1e-12);
    close(&trigamma(2.5).unwrap(), 0.490_357_756_100_234_864_97, 1e-14);
    close(&log_gamma(0.25).unwrap(), 1.288_022_524_698_077_457_4, 1e-14);
    close(&log_gamma(7.3).unwrap(), 7.147_892_523_022_249_032_8, 1e-13);
    close(&log_barnes_g(1.0 / 3.0).unwrap(), -0.916_094_443_413_075_069_49, 1e-12);
    close(&log_barnes_g(3.7).unwrap(), 0.385_290_205_704_642_719_6, 1e-12);
    close(&log_barnes_g(50.0).unwrap(), 2_915.918_514_771_743_880_3, 1e-9);
}

#[test]
fn unit_circle() {
    close(&clausen2(1.0).unwrap(), 1.013_959_132_360_768_504_3, 1e-14);
    close(&clausen2(2.5).unwrap(), 0.433_598_203_235_532_779_36, 1e-14);
    let (re, im) = polylog_unit(3, UnitCirclePoint::new(0.3, Sign::Plus).unwrap()).unwrap();
    close(&re, -0.602_038_294_700_427_796_45, 1e-14);
    close(&im, -0.705_392_794_476_820_908_99, 1e-14);
}

#[test]
fn euler_integral_off_grid() {
    let spec = EulerIntegralSpec::new(4, 2.5).unwrap();
    close(&euler_integral_quad(&spec, &spec.default_quadrature()).unwrap(), -3.146_399_053_965_786_127_8, 1e-12);
}
