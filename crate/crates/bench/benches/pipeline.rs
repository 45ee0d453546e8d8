use criterion::{black_box, criterion_group, criterion_main, Criterion};
use macaulay_bench::{system, FIXTURES};
use macaulay_core::dual::build_dual;
use macaulay_core::module::{localize, purity_test};
use macaulay_core::{complete, CompletionOptions};

fn completion(c: &mut Criterion) {
    let opts = CompletionOptions::default();
    for (name, text) in FIXTURES {
        let s = system(text);
        c.bench_function(&format!("complete/{}", name), |b| b.iter(|| complete(black_box(&s), &opts).unwrap()));
    }
}

fn purity(c: &mut Criterion) {
    let opts = CompletionOptions::default();
    for (name, text) in FIXTURES {
        let inv = complete(&system(text), &opts).unwrap();
        c.bench_function(&format!("purity/{}", name), |b| b.iter(|| purity_test(black_box(&inv)).unwrap()));
    }
}

fn generators(c: &mut Criterion) {
    let opts = CompletionOptions::default();
    for (name, text) in FIXTURES {
        let inv = complete(&system(text), &opts).unwrap();
        c.bench_function(&format!("generators/{}", name), |b| {
            b.iter(|| {
                if inv.codim == inv.n() {
                    build_dual(&inv, &[]).unwrap().min_generators().unwrap().count
                } else {
                    let l = localize(&inv, inv.codim, &[], &opts).unwrap();
                    build_dual(&l.involutive, &l.variable_names()).unwrap().min_generators().unwrap().count
                }
            })
        });
    }
}

criterion_group!(benches, completion, purity, generators);
criterion_main!(benches);
