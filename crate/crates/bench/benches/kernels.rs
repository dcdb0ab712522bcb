use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use vsecant::exactlin::rref;
use vsecant::hopf::star_coinv;
use vsecant::random::Sampler;
use vsecant::secant::{mult_map, veronese_ideal_piece, SecantIdeals};
use vsecant::GradedRing;

fn elimination(c: &mut Criterion) {
    let ring = GradedRing::free(3);
    let m = mult_map(&ring, 2, 4);
    c.bench_function("rref mult_map v3 d2 n4", |b| b.iter(|| rref(black_box(&m))));
}

fn veronese(c: &mut Criterion) {
    let ring = GradedRing::free(3);
    c.bench_function("veronese piece v3 d3 n3", |b| {
        b.iter(|| veronese_ideal_piece(black_box(&ring), 3, 3))
    });
}

fn secant(c: &mut Criterion) {
    let ring = Arc::new(GradedRing::free(2));
    c.bench_function("secant piece v2 r2 d5 n4", |b| {
        b.iter(|| SecantIdeals::new(Arc::clone(&ring)).piece(2, black_box(5), 4))
    });
}

fn star(c: &mut Criterion) {
    let ring = GradedRing::from_json(r#"{"vars": 3, "relations": ["x0*x2 - x1^2"]}"#).unwrap();
    let mut s = Sampler::new(1);
    let f = s.sym(ring.hilbert(2), 2, 4, 4);
    let g = s.sym(ring.hilbert(1), 1, 4, 4);
    c.bench_function("star coinvariants conic n4", |b| {
        b.iter(|| star_coinv(&ring, black_box(&f), black_box(&g)))
    });
}

criterion_group!(benches, elimination, veronese, secant, star);
criterion_main!(benches);
