use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ppl_bench::{lottery, lottery_text};
use ppl_core::description::build_axioms;
use ppl_core::resolution::{claus_all, resolution_closure};
use ppl_core::{parse_formula, parse_kb, Alg, AtomLimit, History, Prover};

fn prove_lottery(c: &mut Criterion) {
    let mut group = c.benchmark_group("prove_not_s1");
    let goal = parse_formula("~s1").unwrap();
    for n in [3, 4, 5] {
        let desc = lottery(n);
        for alg in [Alg::Pi, Alg::Beta, Alg::PiP] {
            group.bench_with_input(BenchmarkId::new(alg.tag(), n), &desc, |b, desc| {
                b.iter(|| Prover::new(desc).prove(alg, &History::new(), black_box(&goal)).unwrap())
            });
        }
    }
    group.finish();
}

fn description(c: &mut Criterion) {
    let mut group = c.benchmark_group("describe");
    for n in [3, 4, 5] {
        let kb = parse_kb(&lottery_text(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("build_axioms", n), &kb, |b, kb| {
            b.iter(|| build_axioms(black_box(&kb.facts), AtomLimit::default()).unwrap())
        });
        let clauses = claus_all(&kb.facts, AtomLimit::default()).unwrap();
        group.bench_with_input(BenchmarkId::new("resolution_closure", n), &clauses, |b, c| {
            b.iter(|| resolution_closure(black_box(c)))
        });
        group.bench_with_input(BenchmarkId::new("full", n), &kb, |b, kb| {
            b.iter(|| kb.describe(AtomLimit::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, prove_lottery, description);
criterion_main!(benches);
