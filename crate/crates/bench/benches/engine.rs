use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weakhopf::algebra::{Presentation, TypeSequence};
use weakhopf::cartan::CartanData;
use weakhopf::hopf::{delta, weak_antipode_report};
use weakhopf::rewrite::{RewriteSystem, Variant};
use weakhopf::syntax::parse_element;

fn presentation(t: &str, d: &str) -> Presentation {
    let c = CartanData::from_name(t).unwrap();
    let d = TypeSequence::parse(d, c.n).unwrap();
    Presentation::build(&c, &d)
}

fn completion(c: &mut Criterion) {
    let mut g = c.benchmark_group("complete");
    g.sample_size(10);
    for (t, d) in [("A1", "1|0"), ("A2", "11|01"), ("B2", "10|10")] {
        let p = presentation(t, d);
        g.bench_with_input(BenchmarkId::new(t, d), &p, |b, p| {
            b.iter(|| RewriteSystem::build(black_box(p), Variant::Base, 8).unwrap())
        });
    }
    g.finish();
}

fn normalization(c: &mut Criterion) {
    let sys = RewriteSystem::build(&presentation("A2", "10|01"), Variant::Base, 8).unwrap();
    let x = parse_element("E1*E2*F1*F2*E1 + q*F2*K1*E2*E2*F1", 2).unwrap();
    c.bench_function("normalize A2 mixed word", |b| b.iter(|| sys.normalize(black_box(&x)).unwrap()));
    let y = parse_element("E1*E2*F1", 2).unwrap();
    c.bench_function("delta A2 length 3", |b| b.iter(|| delta(&sys, black_box(&y)).unwrap()));
}

fn weak_antipode(c: &mut Criterion) {
    let sys = RewriteSystem::build(&presentation("A1", "1|0"), Variant::Base, 8).unwrap();
    let mut g = c.benchmark_group("weak antipode");
    g.sample_size(10);
    g.bench_function("A1 words <= 3", |b| b.iter(|| weak_antipode_report(&sys, 3).unwrap()));
    g.finish();
}

criterion_group!(benches, completion, normalization, weak_antipode);
criterion_main!(benches);
