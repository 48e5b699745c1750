//! Polylogarithms on the unit circle and the trigonometric Dirichlet sums
//!
//! ```text
//! C_s(x) = sum_{n>=1} (-1)^n cos(pi n x) / n^s
//! S_s(x) = sum_{n>=1} (-1)^n sin(pi n x) / n^s
//! ```
//!
//! which are the real and imaginary parts of `Li_s(e^{i pi (x+1)})`.
//!
//! Rational phases reduce exactly to finite combinations of Hurwitz zeta
//! values. Other phases use the logarithmic expansion of `Li_s` around
//! `z = 1`, whose tail after the `zeta(0)` term decays at least like
//! `(theta / 2 pi)^2 <= 1/4` per retained term.
//!
//! Sign convention for [`polylog_unit`]: [`Sign::Minus`] is the point
//! `-e^{-i pi x}`, whose imaginary part is `-S_s(x)`; [`Sign::Plus`] is
//! `-e^{+i pi x}` with imaginary part `+S_s(x)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{EvalResult, EPS};
use crate::zeta::{bernoulli, hurwitz_zeta, zeta_int};

/// Largest denominator accepted by the rational fast path.
pub const RATIONAL_MAX_DEN: i64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

/// The point `-e^{+-i pi x}` on the unit circle, with `x` reduced mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitCirclePoint {
    x: f64,
    sign: Sign,
}

impl UnitCirclePoint {
    pub fn new(x: f64, sign: Sign) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::domain(format!("phase parameter must be finite, got {x}")));
        }
        Ok(UnitCirclePoint { x: x.rem_euclid(2.0), sign })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// Continued-fraction recovery of `x = p/q` with `q <= max_den`, accepted
/// only when `p/q` reproduces `x` to a couple of ulps.
pub fn rational_approx(x: f64, max_den: i64) -> Option<(i64, i64)> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let tol = 2.0 * EPS * x.abs().max(1.0);
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let (p2, q2) = (a as i64 * p1 + p0, a as i64 * q1 + q0);
        if q2 > max_den {
            return None;
        }
        if (x - p2 as f64 / q2 as f64).abs() <= tol {
            return Some((p2, q2));
        }
        let frac = r - a;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// `(cos, sin)` of `2 pi m / q`, exact at multiples of a quarter turn.
fn unit_root(m: i64, q: i64) -> (f64, f64) {
    let m = m.rem_euclid(q);
    if (4 * m) % q == 0 {
        return match 4 * m / q {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
    }
    // Centre the angle to keep the argument small.
    let centred = if 2 * m > q { m - q } else { m };
    let (s, c) = (2.0 * PI * centred as f64 / q as f64).sin_cos();
    (c, s)
}

/// `Li_s(e^{2 pi i P/Q})` for integer `s >= 2` via
/// `Q^{-s} sum_{j=1}^{Q} e^{2 pi i j P/Q} zeta(s, j/Q)`.
fn li_root_of_unity(s: u32, p: i64, q: i64) -> Result<(EvalResult, EvalResult)> {
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    let sf = s as f64;
    let scale = (q as f64).powf(-sf);
    let mut zetas = Vec::with_capacity(q as usize);
    for j in 1..=q {
        zetas.push(hurwitz_zeta(sf, j as f64 / q as f64)?);
    }
    let mut re_parts = Vec::new();
    let mut im_parts = Vec::new();
    for (j, z) in (1..=q).zip(&zetas) {
        let (c, si) = unit_root(j * p, q);
        if c != 0.0 {
            re_parts.push((c * scale, z));
        }
        if si != 0.0 {
            im_parts.push((si * scale, z));
        }
    }
    Ok((
        EvalResult::combine(&re_parts, "rational-hurwitz"),
        EvalResult::combine(&im_parts, "rational-hurwitz"),
    ))
}

/// `zeta(-m)` for `m >= 0`.
fn zeta_nonpositive(m: usize) -> f64 {
    if m == 0 {
        -0.5
    } else {
        let b = bernoulli(m + 1) / (m + 1) as f64;
        if m % 2 == 0 { b } else { -b }
    }
}

/// `i^k` as `(re, im)`.
fn i_pow(k: usize) -> (f64, f64) {
    match k % 4 {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    }
}

/// `Li_s(e^{i theta})` for integer `s >= 2` and real `theta`, by the
/// expansion around `z = 1`:
///
/// ```text
/// sum_{k != s-1} zeta(s-k) (i theta)^k / k!
///   + (i theta)^{s-1} / (s-1)! * (H_{s-1} - log(-i theta))
/// ```
pub fn li_log_series(s: u32, theta: f64) -> Result<(EvalResult, EvalResult)> {
    if s < 2 {
        return Err(Error::domain(format!("order must be >= 2, got {s}")));
    }
    if !theta.is_finite() {
        return Err(Error::domain(format!("phase must be finite, got {theta}")));
    }
    let mut th = theta.rem_euclid(2.0 * PI);
    if th > PI {
        th -= 2.0 * PI;
    }
    let s = s as usize;
    if th == 0.0 {
        let z = zeta_int(s);
        return Ok((EvalResult::new(z, 16.0 * EPS * z, 1, "log-series"), EvalResult::new(0.0, 0.0, 1, "log-series")));
    }

    let (mut re, mut im) = (0.0f64, 0.0f64);
    let mut magnitude = 0.0f64;
    let mut add = |k: usize, t: f64| {
        let (a, b) = i_pow(k);
        re += a * t;
        im += b * t;
        magnitude += t.abs();
    };

    // power = theta^k / k!
    let mut power = 1.0f64;
    for k in 0..s - 1 {
        add(k, zeta_int(s - k) * power);
        power *= th / (k + 1) as f64;
    }
    // k = s - 1: (i theta)^{s-1}/(s-1)! (H - log|theta| + i pi/2 sgn theta);
    // i^{s-1} (lr + i li) = i^{s-1} lr + i^s li
    let harmonic: f64 = (1..s).map(|j| 1.0 / j as f64).sum();
    let (lr, li) = (harmonic - th.abs().ln(), 0.5 * PI * th.signum());
    add(s - 1, power * lr);
    add(s, power * li);
    power *= th / s as f64;

    // k = s, s + 1, s + 3, ...: zeta(-m) with m = k - s, zero for even m >= 2.
    let q = (th / (2.0 * PI)).powi(2);
    let mut k = s;
    let tail;
    loop {
        let m = k - s;
        let t = zeta_nonpositive(m) * power;
        add(k, t);
        if m >= 1 {
            let majorant = t.abs() * q / (1.0 - q);
            if majorant <= 1e-20 || m + 3 > crate::zeta::BERNOULLI_MAX_INDEX {
                tail = majorant;
                break;
            }
        }
        let step = if m == 0 { 1 } else { 2 };
        for j in 0..step {
            power *= th / (k + j + 1) as f64;
        }
        k += step;
    }
    let terms = k + 1;

    let bound = tail + 32.0 * EPS * magnitude;
    Ok((EvalResult::new(re, bound, terms, "log-series"), EvalResult::new(im, bound, terms, "log-series")))
}

fn check_order(s: u32) -> Result<()> {
    if s < 2 {
        return Err(Error::domain(format!("trigonometric sums need s >= 2, got s = {s}")));
    }
    Ok(())
}

/// `(C_s(x), S_s(x))` together; see the module docs.
pub fn trig_sums(s: u32, x: f64) -> Result<(EvalResult, EvalResult)> {
    check_order(s)?;
    if !x.is_finite() {
        return Err(Error::domain(format!("x must be finite, got {x}")));
    }
    match rational_approx(x, RATIONAL_MAX_DEN) {
        // e^{i pi (p/q + 1)} = e^{2 pi i (p + q) / (2q)}
        Some((p, q)) => li_root_of_unity(s, p + q, 2 * q),
        None => li_log_series(s, PI * (x.rem_euclid(2.0) + 1.0)),
    }
}

/// `sum_{n>=1} (-1)^n cos(pi n x) / n^s` for integer `s >= 2`.
pub fn trig_sum_cos(s: u32, x: f64) -> Result<EvalResult> {
    Ok(trig_sums(s, x)?.0)
}

/// `sum_{n>=1} (-1)^n sin(pi n x) / n^s` for integer `s >= 2`.
pub fn trig_sum_sin(s: u32, x: f64) -> Result<EvalResult> {
    Ok(trig_sums(s, x)?.1)
}

/// `(Re, Im)` of `Li_k` at the point `p`.
pub fn polylog_unit(k: u32, p: UnitCirclePoint) -> Result<(EvalResult, EvalResult)> {
    if k < 2 {
        return Err(Error::domain(format!("polylog_unit needs k >= 2, got k = {k}")));
    }
    let (c, s) = trig_sums(k, p.x)?;
    let im = match p.sign {
        Sign::Plus => s,
        Sign::Minus => s.scale(-1.0),
    };
    Ok((c, im))
}

/// Clausen function `Cl_2(theta) = sum_{n>=1} sin(n theta) / n^2`.
///
/// Evaluated on `[0, pi]` and extended by oddness and `2 pi` periodicity, so
/// `clausen2(-t) == -clausen2(t)` holds exactly.
pub fn clausen2(theta: f64) -> Result<EvalResult> {
    if !theta.is_finite() {
        return Err(Error::domain(format!("theta must be finite, got {theta}")));
    }
    let (sign, a) = if theta < 0.0 { (-1.0, -theta) } else { (1.0, theta) };
    let mut t = a.rem_euclid(2.0 * PI);
    let mut sign = sign;
    if t > PI {
        t = 2.0 * PI - t;
        sign = -sign;
    }
    let turns = t / PI;
    let im = match rational_approx(turns, RATIONAL_MAX_DEN) {
        Some((p, q)) => li_root_of_unity(2, p, 2 * q)?.1,
        None => li_log_series(2, t)?.1,
    };
    let route = format!("clausen-{}", im.route);
    let im = if sign < 0.0 { im.scale(-1.0) } else { im };
    Ok(im.with_route(route))
}
