use bcenter::centers::b_center;
use bcenter::par;
use bcenter::scenarios::NilpotentSetup;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", false), ("sequential", true)]
}

fn center(c: &mut Criterion) {
    let mut g = c.benchmark_group("b_center");
    g.sample_size(10);
    for n in [3u32, 5] {
        let s = NilpotentSetup::canonical(n, 1, 2 * n + 2).unwrap();
        for (mode, seq) in modes() {
            par::set_sequential(seq);
            g.bench_with_input(BenchmarkId::new(mode, n), &s, |b, s| b.iter(|| b_center(&s.a).unwrap()));
        }
    }
    par::set_sequential(false);
    g.finish();
}

fn associativity(c: &mut Criterion) {
    let mut g = c.benchmark_group("associativity");
    g.sample_size(10);
    let s = NilpotentSetup::canonical(3, 1, 8).unwrap();
    let rb = bcenter::constructions::rb_algebra(&s.a).unwrap();
    for (mode, seq) in modes() {
        par::set_sequential(seq);
        g.bench_function(BenchmarkId::new(mode, rb.alg.dim()), |b| b.iter(|| rb.alg.check_associative().unwrap()));
    }
    par::set_sequential(false);
    g.finish();
}

criterion_group!(benches, center, associativity);
criterion_main!(benches);
