use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use iwasawa_core::{structure_constants, CartanType, IwasawaModel, PAdic, RootSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sys(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<CartanType>().unwrap())
}

fn padic(c: &mut Criterion) {
    let x = PAdic::new(5, 12, 1 + 5 * 123_456).unwrap();
    c.bench_function("log 5^12", |b| b.iter(|| black_box(x).log().unwrap()));
    let y = PAdic::new(5, 12, 5 * 98_765).unwrap();
    c.bench_function("exp 5^12", |b| b.iter(|| black_box(y).exp().unwrap()));
}

fn lattice(c: &mut Criterion) {
    for name in ["A3", "F4", "E8"] {
        let rs = sys(name);
        c.bench_function(&format!("structure constants {name}"), |b| {
            b.iter(|| structure_constants(black_box(&rs)).unwrap())
        });
    }
}

fn series(c: &mut Criterion) {
    let model = IwasawaModel::new(sys("A2"), 3, 3, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = model.group().random_element(&mut rng, 6);
    let h = model.group().random_element(&mut rng, 6);
    c.bench_function("dirac A2 N=4 m=3", |b| {
        b.iter(|| model.dirac(black_box(&g)).unwrap())
    });
    let (a, b_) = (model.dirac(&g).unwrap(), model.dirac(&h).unwrap());
    model.convolve(&a, &b_).unwrap();
    c.bench_function("convolve A2 N=4 m=3", |b| {
        b.iter(|| model.convolve(black_box(&a), black_box(&b_)).unwrap())
    });
}

criterion_group!(benches, padic, lattice, series);
criterion_main!(benches);
