//! Numeric engines shared by every function family: adaptive quadrature,
//! alternating-series acceleration, tail-bounded series summation and
//! finite-difference differentiation.
//!
//! Every engine returns an [`EvalResult`]: a value together with an absolute
//! error bound that the engine is prepared to stand behind.

mod diff;
mod quadrature;
mod series;

pub use diff::derivative_fd;
pub use quadrature::{integrate, QuadRule, QuadratureConfig};
pub use series::{
    sum_alternating, sum_alternating_terms, sum_geometric_tail, sum_periodic_weighted, Acceleration, SeriesConfig,
};

use serde::{Deserialize, Serialize};

/// Machine epsilon for binary64.
pub(crate) const EPS: f64 = f64::EPSILON;

/// A value with a certified absolute error bound and route metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub error_bound: f64,
    /// Series terms or quadrature cells consumed.
    pub terms_or_cells: usize,
    pub route: String,
}

impl EvalResult {
    pub fn new(value: f64, error_bound: f64, terms_or_cells: usize, route: impl Into<String>) -> Self {
        debug_assert!(error_bound >= 0.0 || error_bound.is_nan());
        EvalResult {
            value,
            error_bound,
            terms_or_cells,
            route: route.into(),
        }
    }

    /// A value known up to binary64 rounding.
    pub fn exact(value: f64) -> Self {
        EvalResult::new(value, 2.0 * EPS * value.abs(), 0, "exact")
    }

    /// Linear combination `sum c_i * r_i`, propagating bounds and adding
    /// the rounding of the combination itself.
    pub fn combine(parts: &[(f64, &EvalResult)], route: impl Into<String>) -> Self {
        let mut value = 0.0;
        let mut bound = 0.0;
        let mut magnitude = 0.0;
        let mut terms = 0;
        for &(c, r) in parts {
            value += c * r.value;
            bound += c.abs() * r.error_bound;
            magnitude += (c * r.value).abs();
            terms += r.terms_or_cells;
        }
        bound += (parts.len() as f64 + 2.0) * EPS * magnitude;
        EvalResult::new(value, bound, terms, route)
    }

    pub fn with_route(mut self, route: impl Into<String>) -> Self {
        self.route = route.into();
        self
    }

    pub fn scale(&self, c: f64) -> Self {
        EvalResult::new(
            c * self.value,
            c.abs() * self.error_bound + EPS * (c * self.value).abs(),
            self.terms_or_cells,
            self.route.clone(),
        )
    }

    /// Interval `[value - bound, value + bound]` contains `x`.
    pub fn contains(&self, x: f64) -> bool {
        (self.value - x).abs() <= self.error_bound
    }
}
