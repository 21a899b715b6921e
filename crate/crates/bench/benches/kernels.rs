use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use windlab_core::invariant::{horizontal_spec, lambda_value, omega_of_poly};
use windlab_core::quotient::{completed_lattice, family_lattice, quotient_order};
use windlab_core::subgroup::{omega_image_generators, omega_image_order, subgroup_order_bfs};
use windlab_core::winding::engel_winding;
use windlab_core::word::{engel_word, random_nth_power_product};
use windlab_core::{winding_invariant, winding_oracle};

fn winding(c: &mut Criterion) {
    let mut group = c.benchmark_group("winding");
    for m in [6, 10, 14] {
        let w = engel_word(m).unwrap();
        group.bench_with_input(BenchmarkId::new("suffix_sums", w.len()), &w, |b, w| {
            b.iter(|| winding_invariant(black_box(w)).unwrap())
        });
        if m <= 10 {
            group.bench_with_input(BenchmarkId::new("ray_oracle", w.len()), &w, |b, w| {
                b.iter(|| winding_oracle(black_box(w)).unwrap())
            });
        }
    }
    let z = random_nth_power_product(8, 4, 20, 7);
    group.bench_function("power_product_n8", |b| {
        b.iter(|| winding_invariant(black_box(&z)).unwrap())
    });
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let p = engel_winding(20);
    let spec = horizontal_spec(0, 16).unwrap();
    c.bench_function("lambda_engel20_n16", |b| {
        b.iter(|| lambda_value(black_box(&spec), black_box(&p)))
    });
    c.bench_function("omega_engel20_n16", |b| {
        b.iter(|| omega_of_poly(black_box(&p), 16).unwrap())
    });
}

fn lattices(c: &mut Criterion) {
    let mut group = c.benchmark_group("quotient");
    group.sample_size(10);
    group.bench_function("family_n4", |b| {
        b.iter(|| quotient_order(&family_lattice(black_box(4)).unwrap()))
    });
    group.bench_function("family_n8", |b| {
        b.iter(|| quotient_order(&family_lattice(black_box(8)).unwrap()))
    });
    group.bench_function("completed_n8", |b| {
        b.iter(|| quotient_order(&completed_lattice(black_box(8)).unwrap()))
    });
    group.finish();
}

fn image_orders(c: &mut Criterion) {
    let mut group = c.benchmark_group("image_order");
    for n in [4u64, 8, 16] {
        group.bench_with_input(BenchmarkId::new("omega_snf", n), &n, |b, &n| {
            b.iter(|| omega_image_order(n).unwrap())
        });
    }
    let gens = omega_image_generators(4).unwrap();
    group.bench_function("omega_bfs_n4", |b| {
        b.iter(|| subgroup_order_bfs(black_box(&gens)))
    });
    group.finish();
}

criterion_group!(benches, winding, invariants, lattices, image_orders);
criterion_main!(benches);
