use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pathturan_core::containment::contains_linear_forest;
use pathturan_core::formulas::ex_forest;
use pathturan_core::graphs::{canonical_form, construct_forest_extremal};
use pathturan_core::search::{turan_branch_bound, turan_enumerate};
use pathturan_core::{PathForest, SimpleGraph};

fn forest(s: &str) -> PathForest {
    s.parse().unwrap()
}

fn formulas(c: &mut Criterion) {
    let f = forest("8,6,4");
    c.bench_function("ex_forest 8,6,4 n=1..500", |b| {
        b.iter(|| {
            (1..=500)
                .map(|n| ex_forest(n, black_box(&f)).unwrap().value)
                .sum::<u128>()
        })
    });
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    let graphs = [
        ("C10", SimpleGraph::cycle(10)),
        (
            "K6 + E6",
            SimpleGraph::complete(6).join(&SimpleGraph::empty(6)),
        ),
        ("P12", SimpleGraph::path(12)),
    ];
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| {
            b.iter(|| canonical_form(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn containment(c: &mut Criterion) {
    let mut group = c.benchmark_group("containment");
    for (spec, n) in [("8,8,6", 60u64), ("7,5,3", 40), ("6,6", 40)] {
        let f = forest(spec);
        let set = construct_forest_extremal(n, &f).unwrap();
        let g = set.graphs().next().unwrap().clone();
        group.bench_with_input(
            BenchmarkId::new("extremal host", format!("{spec} n={n}")),
            &g,
            |b, g| b.iter(|| contains_linear_forest(black_box(g), &f)),
        );
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("enumerate n=8 P5∪P3", |b| {
        b.iter(|| turan_enumerate(8, &forest("5,3"), false).unwrap().max_edges)
    });
    group.bench_function("branch-bound n=10 P5∪P5", |b| {
        b.iter(|| turan_branch_bound(10, &forest("5,5")).unwrap().max_edges)
    });
    group.finish();
}

criterion_group!(benches, formulas, canon, containment, oracles);
criterion_main!(benches);
