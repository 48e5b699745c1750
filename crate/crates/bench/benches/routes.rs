use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use mcz_bench::MCOS_POINTS;
use mcz_core::gamma::log_barnes_g;
use mcz_core::identities::run_suite;
use mcz_core::multitrig::{log_mcos, log_mcos_product, RouteChoice};
use mcz_core::polylog::clausen2;
use mcz_core::zeta::{beta_fn, hurwitz_zeta};

fn mcos_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("log_mcos_r3");
    for x in MCOS_POINTS {
        for route in [RouteChoice::Series, RouteChoice::Integral] {
            g.bench_with_input(BenchmarkId::new(route.to_string(), x), &x, |b, &x| {
                b.iter(|| log_mcos(3, black_box(x), route))
            });
        }
    }
    g.bench_function("polylog/0.25", |b| b.iter(|| log_mcos(3, black_box(0.25), RouteChoice::Polylog)));
    g.sample_size(10);
    g.bench_function("product-1e5/0.25", |b| b.iter(|| log_mcos_product(3, black_box(0.25), 100_000)));
    g.finish();
}

fn special_functions(c: &mut Criterion) {
    c.bench_function("hurwitz_zeta(3, 0.3)", |b| b.iter(|| hurwitz_zeta(black_box(3.0), black_box(0.3))));
    c.bench_function("beta(2)", |b| b.iter(|| beta_fn(black_box(2.0))));
    c.bench_function("log_barnes_g(1/3)", |b| b.iter(|| log_barnes_g(black_box(1.0 / 3.0))));
    c.bench_function("clausen2(1.0)", |b| b.iter(|| clausen2(black_box(1.0))));
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("lambda-series", |b| b.iter(|| run_suite(&["lambda-series"])));
    g.finish();
}

criterion_group!(benches, mcos_routes, special_functions, suite);
criterion_main!(benches);
