//! Dirichlet-series family: Riemann and Hurwitz zeta, the alternating
//! (eta-type) zeta functions, Dirichlet lambda and beta, Dirichlet L-series
//! for real characters, and the Bernoulli numbers behind the even zeta values.

mod bernoulli;
mod character;

use std::f64::consts::PI;
use std::sync::OnceLock;

pub use bernoulli::{bernoulli_table, BernoulliTable, BERNOULLI_MAX_INDEX};
pub(crate) use bernoulli::bernoulli;
pub use character::{dirichlet_l, CharacterSpec};

use crate::error::{Error, Result};
use crate::numerics::{sum_alternating, EvalResult, SeriesConfig, EPS};

/// Number of explicit terms summed before the Euler-Maclaurin correction.
const EM_SHIFT: usize = 20;
/// Bernoulli terms used in the correction (`B_2 ..= B_{2 * EM_ORDER}`).
const EM_ORDER: usize = 6;

/// Hurwitz zeta `sum_{n >= 0} (n + a)^{-s}` for `s > 1`, `a > 0`.
///
/// Sums `EM_SHIFT` terms explicitly and corrects the tail with the
/// Euler-Maclaurin formula through `B_12`. The remainder is bounded by four
/// times the first omitted correction term.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<EvalResult> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(format!("hurwitz_zeta needs s > 1, got s = {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("hurwitz_zeta needs a > 0, got a = {a}")));
    }

    let mut direct = 0.0;
    for n in (0..EM_SHIFT).rev() {
        direct += (n as f64 + a).powf(-s);
    }
    let z = EM_SHIFT as f64 + a;
    let zs = z.powf(-s);
    let mut tail = z * zs / (s - 1.0) + 0.5 * zs;

    // (s)_{2j-1} / (2j)! * z^{-s-2j+1}, built incrementally.
    let mut factor = s * zs / z; // j = 1: s * z^{-s-1}
    let mut fact = 2.0; // (2j)!
    let mut omitted = 0.0;
    for j in 1..=EM_ORDER + 1 {
        let term = bernoulli(2 * j) / fact * factor;
        if j <= EM_ORDER {
            tail += term;
        } else {
            omitted = term.abs();
        }
        let (p, q) = ((s + 2.0 * j as f64 - 1.0), (s + 2.0 * j as f64));
        factor *= p * q / (z * z);
        fact *= ((2 * j + 1) * (2 * j + 2)) as f64;
    }

    let value = direct + tail;
    let bound = 4.0 * omitted + 8.0 * EPS * value.abs();
    Ok(EvalResult::new(value, bound, EM_SHIFT + EM_ORDER, "euler-maclaurin"))
}

/// Riemann zeta for `s > 1`.
pub fn riemann_zeta(s: f64) -> Result<EvalResult> {
    if !(s > 1.0) {
        return Err(Error::domain(format!("riemann_zeta is implemented for s > 1, got s = {s}")));
    }
    hurwitz_zeta(s, 1.0)
}

const ZETA_TABLE_MAX: usize = 160;

/// `zeta(n)` for integer `n >= 2`, from a table built once.
pub(crate) fn zeta_int(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    assert!(n >= 2, "zeta_int needs n >= 2");
    if n > ZETA_TABLE_MAX {
        return 1.0 + 2f64.powi(-(n as i32));
    }
    let table = TABLE.get_or_init(|| {
        (0..=ZETA_TABLE_MAX)
            .map(|k| if k < 2 { f64::NAN } else { hurwitz_zeta(k as f64, 1.0).map(|r| r.value).unwrap_or(f64::NAN) })
            .collect()
    });
    table[n]
}

/// `lambda(2k) = (1 - 2^{-2k}) zeta(2k)` for `k >= 1`.
pub(crate) fn lambda_even(k: usize) -> f64 {
    assert!(k >= 1);
    let n = 2 * k;
    if n > ZETA_TABLE_MAX {
        // 1 + 3^{-n} + ...; 3^{-160} is far below binary64 resolution.
        return 1.0;
    }
    (1.0 - 2f64.powi(-(n as i32))) * zeta_int(n)
}

/// `zeta(2n)` from its Bernoulli closed form.
pub fn zeta_even_closed(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("zeta_even_closed needs n >= 1"));
    }
    let b = bernoulli_table().get(2 * n)?;
    // |B_2n| / 2 * prod_{k=1}^{2n} (2 pi / k), sign (-1)^{n-1} B_2n > 0
    let mut v = 0.5 * b.abs();
    for k in 1..=2 * n {
        v *= 2.0 * PI / k as f64;
    }
    Ok(v)
}

fn alternating_config(scale: f64) -> SeriesConfig {
    SeriesConfig::with_tol(1e-15 * 16.0 * scale.max(1.0))
}

/// Alternating Hurwitz zeta `sum_{n >= 0} (-1)^n (n + a)^{-s}`, `s > 0`, `a > 0`,
/// by CVZ acceleration.
pub fn alt_hurwitz_zeta(s: f64, a: f64) -> Result<EvalResult> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("alt_hurwitz_zeta needs s > 0, got s = {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("alt_hurwitz_zeta needs a > 0, got a = {a}")));
    }
    let cfg = alternating_config(a.powf(-s));
    let term = |n: u64| {
        let t = (n as f64 + a).powf(-s);
        if n % 2 == 0 { t } else { -t }
    };
    Ok(sum_alternating(term, &cfg)?.with_route("cvz"))
}

/// Alternating zeta (Dirichlet eta) for `s > 0`: the closed relation
/// `(1 - 2^{1-s}) zeta(s)` when `s > 1`, the accelerated series otherwise.
pub fn alt_zeta(s: f64) -> Result<EvalResult> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("alt_zeta needs s > 0, got s = {s}")));
    }
    if s > 1.0 {
        let z = riemann_zeta(s)?;
        Ok(EvalResult::combine(&[(1.0 - 2f64.powf(1.0 - s), &z)], "zeta-relation"))
    } else {
        alt_hurwitz_zeta(s, 1.0)
    }
}

/// Dirichlet lambda `sum_{n >= 0} (2n + 1)^{-s}` for `s > 1`.
pub fn lambda_fn(s: f64) -> Result<EvalResult> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(format!("lambda_fn needs s > 1, got s = {s}")));
    }
    let z = riemann_zeta(s)?;
    Ok(EvalResult::combine(&[(1.0 - 2f64.powf(-s), &z)], "zeta-relation"))
}

/// Dirichlet beta `sum_{n >= 0} (-1)^n (2n + 1)^{-s}` for `s > 0`.
pub fn beta_fn(s: f64) -> Result<EvalResult> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("beta_fn needs s > 0, got s = {s}")));
    }
    let term = |n: u64| {
        let t = ((2 * n + 1) as f64).powf(-s);
        if n % 2 == 0 { t } else { -t }
    };
    Ok(sum_alternating(term, &alternating_config(1.0))?.with_route("cvz"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    #[test]
    fn zeta_two_and_four() {
        let z2 = riemann_zeta(2.0).unwrap();
        assert!((z2.value - PI * PI / 6.0).abs() < 1e-13, "{z2:?}");
        assert!(z2.error_bound <= 1e-13);
        let z4 = riemann_zeta(4.0).unwrap();
        assert!((z4.value - PI.powi(4) / 90.0).abs() < 1e-13);
    }

    #[test]
    fn catalan_from_hurwitz_difference() {
        let d = hurwitz_zeta(2.0, 0.25).unwrap().value - hurwitz_zeta(2.0, 0.75).unwrap().value;
        assert!((d - 16.0 * CATALAN).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(hurwitz_zeta(1.0, 0.5), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta(2.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(riemann_zeta(0.5), Err(Error::Domain(_))));
        assert!(matches!(alt_hurwitz_zeta(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(lambda_fn(1.0), Err(Error::Domain(_))));
        assert!(matches!(beta_fn(-1.0), Err(Error::Domain(_))));
        assert!(zeta_even_closed(0).is_err());
    }

    #[test]
    fn even_closed_forms() {
        assert!((zeta_even_closed(1).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta_even_closed(2).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        for n in 1..=6 {
            let d = zeta_even_closed(n).unwrap() - riemann_zeta(2.0 * n as f64).unwrap().value;
            assert!(d.abs() < 1e-12, "n = {n}: {d}");
        }
        assert!(matches!(zeta_even_closed(61), Err(Error::TableExhausted { .. })));
    }

    #[test]
    fn alternating_values() {
        assert!((alt_hurwitz_zeta(1.0, 1.0).unwrap().value - LN_2).abs() < 1e-14);
        assert!((alt_zeta(1.0).unwrap().value - LN_2).abs() < 1e-14);
        assert!((alt_hurwitz_zeta(2.0, 0.5).unwrap().value - 4.0 * CATALAN).abs() < 1e-14);
        assert!((beta_fn(2.0).unwrap().value - CATALAN).abs() < 1e-14);
        assert!((lambda_fn(2.0).unwrap().value - PI * PI / 8.0).abs() < 1e-13);
        assert!((alt_zeta(2.0).unwrap().value - PI * PI / 12.0).abs() < 1e-13);
    }

    #[test]
    fn beta_one_is_quarter_pi() {
        assert!((beta_fn(1.0).unwrap().value - PI / 4.0).abs() < 1e-14);
    }
}
