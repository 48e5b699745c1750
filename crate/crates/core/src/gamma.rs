//! log Gamma, trigamma, log Barnes G and the named constants they need.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{EvalResult, EPS};
use crate::zeta::{bernoulli, beta_fn, zeta_int};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const CATALAN: f64 = 0.915_965_594_177_219_015;
const LOG_GLAISHER_A: f64 = 0.248_754_477_033_784_262_5;
const GLAISHER_A: f64 = 1.282_427_129_100_622_636_9;

/// Arguments are shifted up to this before the asymptotic series.
const SHIFT_TO: f64 = 15.0;
/// Bernoulli terms in the Stirling and trigamma series.
const ASYMPTOTIC_TERMS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantName {
    CatalanG,
    GlaisherA,
    LogGlaisherA,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedConstant {
    pub name: ConstantName,
    pub value: f64,
    pub provenance: String,
}

impl NamedConstant {
    pub fn get(name: ConstantName) -> Self {
        validated();
        let (value, provenance) = match name {
            ConstantName::CatalanG => (CATALAN, "stored; checked against beta(2) by CVZ summation"),
            ConstantName::GlaisherA => (GLAISHER_A, "stored; exp of log A"),
            ConstantName::LogGlaisherA => {
                (LOG_GLAISHER_A, "stored 1/12 - zeta'(-1); checked against the Taylor route at G(1/2)")
            }
        };
        NamedConstant { name, value, provenance: provenance.to_string() }
    }
}

/// Catalan's constant `G = beta(2)`.
pub fn catalan() -> f64 {
    validated();
    CATALAN
}

/// `log A` for the Glaisher-Kinkelin constant `A`.
pub fn glaisher_log_a() -> f64 {
    validated();
    LOG_GLAISHER_A
}

/// Residuals of the stored constants against live computations:
/// `(G - beta(2), log A - log A from G(1/2))`.
pub fn constant_residuals() -> Result<(f64, f64)> {
    let g = beta_fn(2.0)?.value;
    // G(1/2) = 2^{1/24} e^{1/8} pi^{-1/4} A^{-3/2}
    let half = log_barnes_g_unvalidated(0.5)?.value;
    let log_a = (2f64.ln() / 24.0 + 0.125 - 0.25 * PI.ln() - half) / 1.5;
    Ok((CATALAN - g, LOG_GLAISHER_A - log_a))
}

fn validated() {
    static CHECK: OnceLock<()> = OnceLock::new();
    CHECK.get_or_init(|| {
        let (dg, da) = constant_residuals().expect("constant validation evaluates");
        assert!(dg.abs() < 1e-14, "stored Catalan constant off by {dg:e}");
        assert!(da.abs() < 1e-12, "stored log A off by {da:e}");
        assert!((GLAISHER_A.ln() - LOG_GLAISHER_A).abs() < 1e-15);
    });
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("{name} needs finite x > 0, got x = {x}")));
    }
    Ok(())
}

/// `log Gamma(x)` for `x > 0`: upward recurrence to `x >= 15`, then Stirling
/// with Bernoulli corrections through `B_16`.
pub fn log_gamma(x: f64) -> Result<EvalResult> {
    check_positive("log_gamma", x)?;
    let mut z = x;
    let mut shift = 0.0;
    let mut magnitude = 0.0;
    while z < SHIFT_TO {
        let l = z.ln();
        shift += l;
        magnitude += l.abs();
        z += 1.0;
    }
    let lz = z.ln();
    let mut v = (z - 0.5) * lz - z + 0.5 * (2.0 * PI).ln();
    magnitude += ((z - 0.5) * lz).abs() + z;
    let z2 = z * z;
    let mut zpow = z;
    for k in 1..=ASYMPTOTIC_TERMS {
        v += bernoulli(2 * k) / ((2 * k * (2 * k - 1)) as f64 * zpow);
        zpow *= z2;
    }
    let k = ASYMPTOTIC_TERMS + 1;
    let omitted = (bernoulli(2 * k) / ((2 * k * (2 * k - 1)) as f64 * zpow)).abs();
    let value = v - shift;
    Ok(EvalResult::new(value, omitted + 4.0 * EPS * magnitude, ASYMPTOTIC_TERMS, "stirling"))
}

/// Trigamma `psi'(x)` for `x > 0`: recurrence, then
/// `1/z + 1/(2 z^2) + sum B_2k / z^{2k+1}`.
pub fn trigamma(x: f64) -> Result<EvalResult> {
    check_positive("trigamma", x)?;
    let mut z = x;
    let mut head = 0.0;
    while z < SHIFT_TO {
        head += 1.0 / (z * z);
        z += 1.0;
    }
    let z2 = z * z;
    let mut v = 1.0 / z + 0.5 / z2;
    let mut zpow = z2 * z;
    for k in 1..=ASYMPTOTIC_TERMS {
        v += bernoulli(2 * k) / zpow;
        zpow *= z2;
    }
    let omitted = (bernoulli(2 * ASYMPTOTIC_TERMS + 2) / zpow).abs();
    let value = head + v;
    Ok(EvalResult::new(value, omitted + 4.0 * EPS * value, ASYMPTOTIC_TERMS, "asymptotic"))
}

/// `log G(1+z)` for `|z| <= 1/2` from the Maclaurin series with zeta
/// coefficients.
fn log_barnes_g_taylor(z: f64) -> EvalResult {
    let mut v = 0.5 * z * (2.0 * PI).ln() - 0.5 * (z + (1.0 + EULER_GAMMA) * z * z);
    let mut magnitude = v.abs();
    let mut zpow = z * z * z;
    let mut k = 2;
    let ratio = z.abs();
    loop {
        let t = zeta_int(k) * zpow / (k + 1) as f64;
        let t = if k % 2 == 0 { t } else { -t };
        v += t;
        magnitude += t.abs();
        let tail = t.abs() * ratio / (1.0 - ratio);
        if tail <= 1e-3 * EPS * magnitude.max(EPS) || k > 150 {
            return EvalResult::new(v, tail + 4.0 * EPS * magnitude, k, "barnes-taylor");
        }
        zpow *= z;
        k += 1;
    }
}

/// Asymptotic `log G(1+z)` for large `z`.
fn log_barnes_g_asymptotic(z: f64) -> EvalResult {
    let lz = z.ln();
    let mut v = 0.5 * z * z * lz - 0.75 * z * z + 0.5 * z * (2.0 * PI).ln() - lz / 12.0 + (1.0 / 12.0 - LOG_GLAISHER_A);
    let magnitude = 0.5 * z * z * lz + 0.75 * z * z + z;
    let z2 = z * z;
    let mut zpow = z2;
    for k in 1..=ASYMPTOTIC_TERMS {
        v += bernoulli(2 * k + 2) / ((4 * k * (k + 1)) as f64 * zpow);
        zpow *= z2;
    }
    let k = ASYMPTOTIC_TERMS + 1;
    let omitted = (bernoulli(2 * k + 2) / ((4 * k * (k + 1)) as f64 * zpow)).abs();
    EvalResult::new(v, omitted + 4.0 * EPS * magnitude, ASYMPTOTIC_TERMS, "barnes-asymptotic")
}

const BARNES_ASYMPTOTIC_FROM: f64 = 40.0;

fn log_barnes_g_unvalidated(x: f64) -> Result<EvalResult> {
    check_positive("log_barnes_g", x)?;
    if x >= BARNES_ASYMPTOTIC_FROM {
        return Ok(log_barnes_g_asymptotic(x - 1.0));
    }
    // log G(x) = log G(x - 1) + log Gamma(x - 1) shifts x into [1/2, 3/2].
    let mut z = x;
    let mut parts: Vec<(f64, EvalResult)> = Vec::new();
    while z > 1.5 {
        z -= 1.0;
        parts.push((1.0, log_gamma(z)?));
    }
    while z < 0.5 {
        parts.push((-1.0, log_gamma(z)?));
        z += 1.0;
    }
    parts.push((1.0, log_barnes_g_taylor(z - 1.0)));
    let refs: Vec<(f64, &EvalResult)> = parts.iter().map(|(c, r)| (*c, r)).collect();
    Ok(EvalResult::combine(&refs, "barnes-taylor"))
}

/// `log G(x)` for the Barnes G-function, `x > 0`.
///
/// Maclaurin series of `log G(1+z)` on `|z| <= 1/2`, moved with
/// `G(z+1) = Gamma(z) G(z)`; the Stirling-type expansion takes over for
/// large arguments.
pub fn log_barnes_g(x: f64) -> Result<EvalResult> {
    validated();
    log_barnes_g_unvalidated(x)
}
