use std::hint::black_box;

use a2spider::braiding::{braid, Polarity};
use a2spider::clasp::{clasp_double, clasp_single};
use a2spider::grothendieck::cheb_table;
use a2spider::rewrite::{clear_cache, random_diagram, reduce_web};
use a2spider::{RingScalar, Sign, SignSeq};
use a2spider_bench::{bigon_tower, closed_square};
use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalars(c: &mut Criterion) {
    let a: RingScalar = "(v^3 + v^-3)/(v^6 + 1 + v^-6)".parse().unwrap();
    let b: RingScalar = "(v^9 + v^3 + v^-3 + v^-9)/(v^3 + v^-3)".parse().unwrap();
    c.bench_function("scalar mul and add", |bench| bench.iter(|| black_box(&a).mul(black_box(&b)).add(&a)));
}

fn reduction(c: &mut Criterion) {
    c.bench_function("closed square", |bench| bench.iter(|| closed_square(black_box(Sign::Plus))));
    c.bench_function("bigon tower of 8", |bench| bench.iter(|| bigon_tower(black_box(Sign::Minus), 8)));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let webs: Vec<_> = (0..16).map(|_| random_diagram(&mut rng, 14, 6)).collect();
    c.bench_function("reduce random webs uncached", |bench| {
        bench.iter(|| {
            clear_cache();
            for w in &webs {
                black_box(reduce_web(w));
            }
        })
    });
}

fn clasps(c: &mut Criterion) {
    c.bench_function("clasp on three plus strands", |bench| {
        bench.iter(|| {
            a2spider::clasp::clear_cache();
            clasp_single(Sign::Plus, black_box(3)).unwrap()
        })
    });
    c.bench_function("clasp on ++-", |bench| {
        bench.iter(|| {
            a2spider::clasp::clear_cache();
            clasp_double(Sign::Plus, black_box(2), 1).unwrap()
        })
    });
}

fn braids(c: &mut Criterion) {
    let (d, e) = (SignSeq::from("+-"), SignSeq::from("++"));
    c.bench_function("cabled braid 2x2", |bench| bench.iter(|| braid(black_box(&d), black_box(&e), Polarity::Positive)));
}

fn chebyshev(c: &mut Criterion) {
    c.bench_function("chebyshev table to degree 12", |bench| bench.iter(|| cheb_table(black_box(12))));
}

criterion_group!(benches, scalars, reduction, clasps, braids, chebyshev);
criterion_main!(benches);
