use serde::{Deserialize, Serialize};

use super::{EvalResult, EPS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Acceleration {
    None,
    /// Cohen, Rodriguez Villegas and Zagier's weights (their Algorithm 1).
    AlternatingCvz,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub abs_tol: f64,
    pub max_terms: usize,
    pub acceleration: Acceleration,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            abs_tol: 1e-14,
            max_terms: 4000,
            acceleration: Acceleration::AlternatingCvz,
        }
    }
}

impl SeriesConfig {
    pub fn with_tol(abs_tol: f64) -> Self {
        SeriesConfig {
            abs_tol,
            ..Default::default()
        }
    }

    pub fn direct(abs_tol: f64, max_terms: usize) -> Self {
        SeriesConfig {
            abs_tol,
            max_terms,
            acceleration: Acceleration::None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::domain("series abs_tol must be > 0"));
        }
        if self.max_terms == 0 {
            return Err(Error::domain("series max_terms must be >= 1"));
        }
        Ok(())
    }
}

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

const CVZ_BASE: f64 = 5.828_427_124_746_19; // 3 + sqrt(8)

/// CVZ-accelerated value of `sum_{k<n} (-1)^k a_k`.
fn cvz(a: &[f64]) -> f64 {
    let n = a.len() as f64;
    let mut d = CVZ_BASE.powf(n);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for (k, &ak) in a.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += c * ak;
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Sums `term(0) + term(1) + ...` for a series whose terms alternate in sign.
///
/// With [`Acceleration::None`] the partial sums are accumulated until the
/// next term drops below the tolerance (the Leibniz bound). With
/// [`Acceleration::AlternatingCvz`] the CVZ transform is applied; the bound
/// `2 |a_0| / (3 + sqrt 8)^n` is rigorous for totally monotone magnitudes and is
/// combined with the observed change between two transform orders otherwise.
pub fn sum_alternating<F>(term: F, cfg: &SeriesConfig) -> Result<EvalResult>
where
    F: Fn(u64) -> f64,
{
    cfg.validate()?;
    match cfg.acceleration {
        Acceleration::None => sum_direct_alternating(&term, cfg),
        Acceleration::AlternatingCvz => sum_cvz(&term, cfg),
    }
}

fn sum_direct_alternating<F: Fn(u64) -> f64>(term: &F, cfg: &SeriesConfig) -> Result<EvalResult> {
    let mut acc = CompensatedSum::default();
    let mut magnitude = 0.0;
    let mut current = term(0);
    for n in 0..cfg.max_terms as u64 {
        if !current.is_finite() {
            return Err(Error::NonFiniteSample { x: n as f64 });
        }
        acc.add(current);
        magnitude += current.abs();
        let next = term(n + 1);
        let bound = next.abs() + 2.0 * EPS * magnitude;
        if next.abs() <= 0.5 * cfg.abs_tol || n + 1 == cfg.max_terms as u64 {
            let r = EvalResult::new(acc.value(), bound, n as usize + 1, "direct");
            if bound <= cfg.abs_tol {
                return Ok(r);
            }
            return Err(Error::TolNotReached { tol: cfg.abs_tol, best: r });
        }
        current = next;
    }
    unreachable!("max_terms >= 1")
}

/// CVZ with an explicit number of terms, for sequences (such as
/// `cos(k theta)/k`) where the nominal rate does not hold. The bound is the
/// gap to the three-quarter-length transform plus roundoff.
pub fn sum_alternating_terms<F>(term: F, n: usize) -> Result<EvalResult>
where
    F: Fn(u64) -> f64,
{
    if !(8..=400).contains(&n) {
        return Err(Error::domain(format!("CVZ term count must be in 8..=400, got {n}")));
    }
    let mut a = Vec::with_capacity(n);
    for k in 0..n as u64 {
        let ak = if k % 2 == 0 { term(k) } else { -term(k) };
        if !ak.is_finite() {
            return Err(Error::NonFiniteSample { x: k as f64 });
        }
        a.push(ak);
    }
    let value = cvz(&a);
    let lower = cvz(&a[..3 * n / 4]);
    let roundoff = 8.0 * EPS * a.iter().map(|x| x.abs()).fold(0.0, f64::max).max(value.abs());
    Ok(EvalResult::new(value, (value - lower).abs() + roundoff, n, "cvz"))
}

fn sum_cvz<F: Fn(u64) -> f64>(term: &F, cfg: &SeriesConfig) -> Result<EvalResult> {
    // Magnitudes a_k with term(k) = (-1)^k a_k.
    let magnitude = |k: u64| if k % 2 == 0 { term(k) } else { -term(k) };
    let scale = (0..4).map(|k| magnitude(k).abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, 4, "cvz"));
    }
    if !scale.is_finite() {
        return Err(Error::NonFiniteSample { x: 0.0 });
    }
    let target = (0.25 * cfg.abs_tol).max(EPS * EPS * scale);
    let needed = ((2.0 * scale / target).ln() / CVZ_BASE.ln()).ceil().max(8.0) as usize + 2;
    // The lower order alone is expected to meet the target; the higher order
    // is reported and their difference bounds it.
    let n_low = needed.min(cfg.max_terms.max(8));
    let n = n_low + (n_low / 4).max(3);

    let mut a = Vec::with_capacity(n);
    for k in 0..n as u64 {
        let ak = magnitude(k);
        if !ak.is_finite() {
            return Err(Error::NonFiniteSample { x: k as f64 });
        }
        a.push(ak);
    }
    let value = cvz(&a);
    let lower = cvz(&a[..n_low]);
    let theory = 2.0 * scale / CVZ_BASE.powf(n as f64);
    let roundoff = 8.0 * EPS * a.iter().map(|x| x.abs()).fold(0.0, f64::max).max(value.abs());
    let bound = theory.max((value - lower).abs()) + roundoff;
    let r = EvalResult::new(value, bound, n, "cvz");
    if bound <= cfg.abs_tol {
        Ok(r)
    } else {
        Err(Error::TolNotReached { tol: cfg.abs_tol, best: r })
    }
}

/// Sums `sum_{k >= start} term(k)` where every later term satisfies
/// `|term(k+1)| <= ratio * |term(k)|` with `ratio < 1`. Stops once the
/// geometric tail majorant is below half the tolerance.
pub fn sum_geometric_tail<F>(term: F, start: usize, ratio: f64, cfg: &SeriesConfig) -> Result<EvalResult>
where
    F: Fn(usize) -> f64,
{
    cfg.validate()?;
    if !(0.0..1.0).contains(&ratio) {
        return Err(Error::domain(format!("geometric ratio {ratio} outside [0, 1)")));
    }
    let tail_factor = ratio / (1.0 - ratio);
    let mut acc = CompensatedSum::default();
    let mut magnitude = 0.0f64;
    for (count, k) in (start..start + cfg.max_terms).enumerate() {
        let t = term(k);
        if !t.is_finite() {
            return Err(Error::NonFiniteSample { x: k as f64 });
        }
        acc.add(t);
        magnitude += t.abs();
        let tail = t.abs() * tail_factor;
        let bound = tail + 2.0 * EPS * magnitude;
        if tail <= 0.5 * cfg.abs_tol || count + 1 == cfg.max_terms {
            let r = EvalResult::new(acc.value(), bound, count + 1, "geometric");
            if bound <= cfg.abs_tol {
                return Ok(r);
            }
            return Err(Error::TolNotReached { tol: cfg.abs_tol, best: r });
        }
    }
    unreachable!("max_terms >= 1")
}

/// Sums `sum_{n >= first} pattern[n mod P] * weight(n)` for a zero-mean
/// periodic pattern and a positive non-increasing weight, using `periods`
/// full periods and an Abel-summation bound on the tail.
pub fn sum_periodic_weighted<W>(pattern: &[f64], weight: W, first: u64, periods: u64) -> Result<EvalResult>
where
    W: Fn(u64) -> f64,
{
    let p = pattern.len() as u64;
    if p == 0 {
        return Err(Error::domain("empty pattern"));
    }
    let total: f64 = pattern.iter().sum();
    let scale = pattern.iter().map(|x| x.abs()).sum::<f64>();
    if total.abs() > 1e-12 * scale.max(1.0) {
        return Err(Error::domain("periodic pattern must have zero mean"));
    }
    let last = first + p * periods;
    let mut acc = CompensatedSum::default();
    let mut magnitude = 0.0;
    for n in first..last {
        let t = pattern[(n % p) as usize] * weight(n);
        acc.add(t);
        magnitude += t.abs();
    }
    // Largest partial sum of the pattern starting at phase `last mod P`.
    let mut partial = 0.0f64;
    let mut max_partial = 0.0f64;
    for j in 0..p {
        partial += pattern[((last + j) % p) as usize];
        max_partial = max_partial.max(partial.abs());
    }
    let tail = 2.0 * max_partial * weight(last).abs();
    let bound = tail + 4.0 * EPS * magnitude;
    Ok(EvalResult::new(acc.value(), bound, (last - first) as usize, "periodic-abel"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    #[test]
    fn log2_from_alternating_harmonic() {
        let r = sum_alternating(|n| {
            let k = (n + 1) as f64;
            if n % 2 == 0 { 1.0 / k } else { -1.0 / k }
        }, &SeriesConfig::with_tol(1e-14))
        .unwrap();
        assert!((r.value - LN_2).abs() < 1e-13, "{r:?}");
    }

    #[test]
    fn catalan_from_odd_squares() {
        let r = sum_alternating(|n| {
            let d = (2 * n + 1) as f64;
            if n % 2 == 0 { 1.0 / (d * d) } else { -1.0 / (d * d) }
        }, &SeriesConfig::with_tol(1e-14))
        .unwrap();
        assert!((r.value - CATALAN).abs() < 1e-14);
        assert!(r.terms_or_cells < 60);
    }

    #[test]
    fn zero_series() {
        for acc in [Acceleration::None, Acceleration::AlternatingCvz] {
            let cfg = SeriesConfig { acceleration: acc, ..Default::default() };
            assert_eq!(sum_alternating(|_| 0.0, &cfg).unwrap().value, 0.0);
        }
    }

    #[test]
    fn direct_budget_exhaustion_is_flagged() {
        let err = sum_alternating(
            |n| if n % 2 == 0 { 1.0 / (n + 1) as f64 } else { -1.0 / (n + 1) as f64 },
            &SeriesConfig::direct(1e-12, 1000),
        )
        .unwrap_err();
        let best = err.best_estimate().unwrap();
        assert!((best.value - LN_2).abs() <= best.error_bound);
    }

    #[test]
    fn geometric_tail_sum() {
        let r = sum_geometric_tail(|k| 0.5f64.powi(k as i32), 0, 0.5, &SeriesConfig::with_tol(1e-14)).unwrap();
        assert!((r.value - 2.0).abs() <= r.error_bound);
        assert!(sum_geometric_tail(|_| 1.0, 0, 1.5, &SeriesConfig::default()).is_err());
    }

    #[test]
    fn periodic_pattern_requires_zero_mean() {
        assert!(sum_periodic_weighted(&[1.0, 1.0], |n| 1.0 / (n as f64), 1, 10).is_err());
        let r = sum_periodic_weighted(&[1.0, -1.0], |n| 1.0 / ((n + 1) as f64), 0, 500_000).unwrap();
        assert!((r.value - LN_2).abs() <= r.error_bound);
    }
}
