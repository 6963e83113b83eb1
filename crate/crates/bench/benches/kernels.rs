use criterion::{black_box, criterion_group, criterion_main, Criterion};

use charwalk::characters::CharacterTable;
use charwalk::gelfand;
use charwalk::partition::Partition;
use charwalk::spin::SpinCharacterTable;
use charwalk::{chains, normal, stein, walks};

fn bench_character_table(c: &mut Criterion) {
    c.bench_function("character_table_s10", |b| {
        b.iter(|| CharacterTable::new(black_box(10)))
    });
}

fn bench_group_chain(c: &mut Criterion) {
    let table = CharacterTable::new(8);
    let tau = table
        .index_of(&Partition::new(vec![7, 1]).unwrap())
        .unwrap();
    c.bench_function("group_chain_s8", |b| {
        b.iter(|| chains::group_chain(black_box(&table), black_box(tau)).unwrap())
    });
}

fn bench_group_walk(c: &mut Criterion) {
    let table = CharacterTable::new(10);
    let cls = table
        .index_of(&Partition::hook_type(10, 2).unwrap())
        .unwrap();
    c.bench_function("group_walk_p2_s10", |b| {
        b.iter(|| walks::group_walk(black_box(&table), black_box(cls), 2))
    });
}

fn bench_matchings_pair(c: &mut Criterion) {
    c.bench_function("matchings_pair_n5", |b| {
        b.iter(|| gelfand::matchings_pair(black_box(5)).unwrap())
    });
}

fn bench_spin_table(c: &mut Criterion) {
    c.bench_function("spin_table_n10", |b| {
        b.iter(|| SpinCharacterTable::new(black_box(10)).unwrap())
    });
}

fn bench_limgroup_pipeline(c: &mut Criterion) {
    let table = CharacterTable::new(10);
    let cls = table
        .index_of(&Partition::hook_type(10, 2).unwrap())
        .unwrap();
    c.bench_function("limgroup_bound_plus_distance_s10", |b| {
        b.iter(|| {
            let bound = stein::limgroup_bound(black_box(&table), 2).unwrap();
            let spectrum = normal::w_symmetric(&table, cls).unwrap();
            let k = normal::kolmogorov_distance(&spectrum).unwrap();
            (bound.total, k)
        })
    });
}

criterion_group!(
    benches,
    bench_character_table,
    bench_group_chain,
    bench_group_walk,
    bench_matchings_pair,
    bench_spin_table,
    bench_limgroup_pipeline
);
criterion_main!(benches);
