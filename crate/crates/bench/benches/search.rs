use criterion::{criterion_group, criterion_main, Criterion};
use sgbrick::brickhunt::{IdealTuples, Screen};
use sgbrick::{search, SearchConfig};
use sgbrick_bench::semigroup;
use std::hint::black_box;

fn screen(c: &mut Criterion) {
    let s = semigroup(&[21, 28, 36, 48]);
    let tuples: Vec<Vec<i64>> = IdealTuples::new(&s, 3).collect();
    c.bench_function("screen/<21,28,36,48> all tuples", |b| {
        let mut screen = Screen::new(&s).unwrap();
        b.iter(|| {
            tuples
                .iter()
                .filter(|t| screen.mu(black_box(t)).is_brick())
                .count()
        })
    });
}

fn small_search(c: &mut Criterion) {
    let config = SearchConfig {
        t_min: 4,
        t_max: 4,
        gen_max: 21,
        ..SearchConfig::default()
    };
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("t=4 gen_max=21", |b| {
        b.iter(|| search(black_box(&config)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, screen, small_search);
criterion_main!(benches);
