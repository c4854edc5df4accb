use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qqueer::actions::{check_relation_invariance, ActionTable, Family};
use qqueer::graded::{Algebra, AlgebraSpec};
use qqueer::invariants::fft_check;
use qqueer::par;

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", false), ("sequential", true)]
}

fn components(c: &mut Criterion) {
    let mut g = c.benchmark_group("components");
    g.sample_size(10);
    for (name, seq) in modes() {
        g.bench_function(BenchmarkId::new("o_221_deg3", name), |b| {
            par::set_sequential(seq);
            b.iter(|| Algebra::new(AlgebraSpec::o(2, 2, 1)).dims_table(3).unwrap());
        });
    }
    par::set_sequential(false);
    g.finish();
}

fn invariance(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariance");
    g.sample_size(10);
    let spec = AlgebraSpec::o(1, 1, 2);
    let alg = Algebra::new(spec);
    alg.ensure_upto(3).unwrap();
    let t = ActionTable::build(Family::Phi, spec).unwrap();
    for (name, seq) in modes() {
        g.bench_function(BenchmarkId::new("phi_o112_d21", name), |b| {
            par::set_sequential(seq);
            b.iter(|| check_relation_invariance(&alg, &t, (2, 1)).unwrap());
        });
    }
    par::set_sequential(false);
    g.finish();
}

fn fft(c: &mut Criterion) {
    let mut g = c.benchmark_group("fft");
    g.sample_size(10);
    for (name, seq) in modes() {
        g.bench_function(BenchmarkId::new("o_211_d2", name), |b| {
            par::set_sequential(seq);
            b.iter(|| {
                let alg = Algebra::new(AlgebraSpec::o(2, 1, 1));
                fft_check(&alg, &(), 2).unwrap()
            });
        });
    }
    par::set_sequential(false);
    g.finish();
}

criterion_group!(benches, components, invariance, fft);
criterion_main!(benches);
