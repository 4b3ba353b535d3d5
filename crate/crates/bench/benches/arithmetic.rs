use criterion::{black_box, criterion_group, criterion_main, Criterion};

use qlie_core::scalar::Scalar;
use qlie_core::uq::{AlgebraKind, Uq};

fn quantum_integer(n: i32) -> Scalar {
    let num = &Scalar::v_pow(n) - &Scalar::v_pow(-n);
    let den = &Scalar::v_pow(1) - &Scalar::v_pow(-1);
    &num / &den
}

fn scalars(c: &mut Criterion) {
    let a = quantum_integer(5);
    let b = quantum_integer(7);
    c.bench_function("scalar/mul", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("scalar/add", |bench| bench.iter(|| black_box(&a) + black_box(&b)));
    c.bench_function("scalar/div", |bench| bench.iter(|| black_box(&a) / black_box(&b)));
}

fn products(c: &mut Criterion) {
    let uq = Uq::new(AlgebraKind::A2);
    let x = uq.mul_all(&[&uq.e(0), &uq.e(1), &uq.f(0)]).unwrap();
    let y = uq.mul_all(&[&uq.f(1), &uq.e(0), &uq.f(0)]).unwrap();
    c.bench_function("uq/a2_product", |bench| bench.iter(|| uq.mul(black_box(&x), black_box(&y)).unwrap()));
}

criterion_group!(benches, scalars, products);
criterion_main!(benches);
