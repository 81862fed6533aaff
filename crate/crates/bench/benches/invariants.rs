use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use liechain_core::enumerate::groups_up_to_dim;
use liechain_core::formulas::depth_refined;
use liechain_core::{length, max_chain, parse_group, verify_chain, Constants, Oracle, Surd};

fn formulas(c: &mut Criterion) {
    let groups = groups_up_to_dim(30, None);
    c.bench_function("length over dim<=30", |b| {
        b.iter(|| groups.iter().map(length).sum::<u64>())
    });
    c.bench_function("e8 exact equality", |b| {
        let k = Constants::new();
        b.iter(|| &k.beta * &(&Surd::sqrt(black_box(248)) - &k.alpha) == Surd::integer(20))
    });
}

fn chains(c: &mut Criterion) {
    let so50 = parse_group("SO(50)").unwrap();
    c.bench_function("max chain SO(50) + verify", |b| {
        b.iter(|| verify_chain(&max_chain(black_box(&so50))).is_acceptable())
    });
}

fn oracle(c: &mut Criterion) {
    let g = parse_group("SO(8) x SU(6) x G2").unwrap();
    c.bench_function("cold oracle SO(8) x SU(6) x G2", |b| {
        b.iter_batched(Oracle::new, |o| o.invariants(&g).unwrap(), BatchSize::SmallInput)
    });
    let groups = groups_up_to_dim(40, None);
    c.bench_function("refined depth over dim<=40", |b| {
        b.iter_batched(
            Oracle::new,
            |o| groups.iter().filter(|g| depth_refined(g, &o).unwrap().as_exact().is_some()).count(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, formulas, chains, oracle);
criterion_main!(benches);
