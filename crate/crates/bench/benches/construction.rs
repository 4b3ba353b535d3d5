use criterion::{criterion_group, criterion_main, Criterion};

use qlie_core::builder::Gauge;
use qlie_core::pipeline::{Construction, Options};
use qlie_core::uq::AlgebraKind;

fn construct(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    g.sample_size(10);
    for kind in [AlgebraKind::Sl2, AlgebraKind::A2] {
        g.bench_function(kind.name(), |b| {
            b.iter(|| {
                let c = Construction::new(kind, &Options::default()).unwrap();
                c.report_gauge(Gauge::Paper).unwrap()
            })
        });
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let built = Construction::new(AlgebraKind::A2, &Options::default()).unwrap();
    let report = built.report_gauge(Gauge::Paper).unwrap();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("a2", |b| b.iter(|| report.verification()));
    g.finish();
}

criterion_group!(benches, construct, verify);
criterion_main!(benches);
