use criterion::{criterion_group, criterion_main, Criterion};
use lrcheckers::board::{partition_to_subset, Partition};
use lrcheckers::game::{expansion, Mode};
use lrcheckers::oracle::count_set_valued;
use lrcheckers::puzzles::{puzzle_counts, PuzzleMode};

fn bench_expansion(c: &mut Criterion) {
    let p = Partition::new(vec![2, 1]).unwrap();
    c.bench_function("game expansion (2,1)^2 in G(3,6)", |b| {
        b.iter(|| expansion(&p, &p, 3, 6, Mode::Cohomology).unwrap())
    });
    c.bench_function("K-game expansion (2,1)^2 in G(3,6)", |b| {
        b.iter(|| expansion(&p, &p, 3, 6, Mode::KTheory).unwrap())
    });
}

fn bench_puzzles(c: &mut Criterion) {
    let p = Partition::new(vec![2, 1]).unwrap();
    let a = partition_to_subset(&p, 2, 5).unwrap();
    c.bench_function("puzzle enumeration (2,1)^2 in G(2,5)", |b| {
        b.iter(|| puzzle_counts(&a, &a, 5, PuzzleMode::KTheory).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let alpha = Partition::new(vec![2, 1]).unwrap();
    let gamma = Partition::new(vec![3, 2, 1]).unwrap();
    c.bench_function("set-valued oracle coefficient (3,2,1)", |b| {
        b.iter(|| count_set_valued(&gamma, &alpha, &alpha))
    });
}

criterion_group!(benches, bench_expansion, bench_puzzles, bench_oracle);
criterion_main!(benches);
