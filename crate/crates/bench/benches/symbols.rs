use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gersten_bench::{curve_and_function, dual_pair, gcd_pair, plane_pair, steinberg_on_the_line};
use gersten_core::geometry::{div_on_curve, restrict};
use gersten_core::ksymbols::{d_eps, tame};
use gersten_core::tangent::{diagram_check, tangent2};
use gersten_core::{Context, Variety};

fn symbols(c: &mut Criterion) {
    let ctx = Context::default();
    let line = steinberg_on_the_line();
    let pair = plane_pair();
    let dual = dual_pair();
    let (curve, g) = curve_and_function();
    let (a, b) = gcd_pair();

    c.bench_function("tame steinberg on P1", |bench| bench.iter(|| tame(black_box(&line), Variety::P1, &ctx).unwrap()));
    c.bench_function("tame coprime pair on A2", |bench| bench.iter(|| tame(black_box(&pair), Variety::A2, &ctx).unwrap()));
    c.bench_function("div on the parabola", |bench| {
        bench.iter(|| div_on_curve(&restrict(black_box(&g), &curve).unwrap(), &ctx).unwrap())
    });
    c.bench_function("ratfunc product with shared factor", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("tangent2", |bench| bench.iter(|| tangent2(black_box(&dual), Variety::A2).unwrap()));
    c.bench_function("d_eps", |bench| bench.iter(|| d_eps(black_box(&dual), &ctx).unwrap()));
    c.bench_function("diagram_check", |bench| bench.iter(|| diagram_check(black_box(&dual), &ctx).unwrap()));
}

criterion_group!(benches, symbols);
criterion_main!(benches);
