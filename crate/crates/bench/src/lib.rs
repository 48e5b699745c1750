//! Criterion benchmarks for `mcz-core`; see `benches/routes.rs`.

/// Evaluation points shared by the route benchmarks, inside the series
/// route's fast region and near its edge.
pub const MCOS_POINTS: [f64; 3] = [0.1, 0.25, 0.44];
