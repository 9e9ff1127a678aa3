use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polybergman::{Orders, Representation};
use polybergman_bench::{points, weight, GAMMAS};

fn representations(c: &mut Criterion) {
    let pts = points(64, 0.95);
    let mut group = c.benchmark_group("disc_poly");
    for rep in Representation::ALL {
        for &g in &GAMMAS {
            let w = weight(g);
            for o in [Orders::new(4, 2), Orders::new(16, 8)] {
                let id = BenchmarkId::new(rep.to_string(), format!("g={g},m={},n={}", o.m, o.n));
                group.bench_with_input(id, &o, |b, &o| {
                    b.iter(|| {
                        pts.iter()
                            .map(|&z| rep.eval(w, o, black_box(z)))
                            .sum::<polybergman::Complex64>()
                    })
                });
            }
        }
    }
    group.finish();
}

criterion_group!(benches, representations);
criterion_main!(benches);
