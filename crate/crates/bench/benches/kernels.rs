use criterion::{black_box, criterion_group, criterion_main, Criterion};

use bsymbol::bsymbol::w_b;
use bsymbol::codes::brute_distribution;
use bsymbol::cyclotomy::PeriodSystem;
use bsymbol::enumerators::{closed_form_distribution, u_profile};
use bsymbol::{DistributionView, EnumerationMode, FieldDescriptor, Limits};
use bsymbol_bench::{code, word};

fn field_ops(c: &mut Criterion) {
    let f = FieldDescriptor::new(3, 8, None).unwrap();
    c.bench_function("gf 3^8 mul+inv sweep", |bch| {
        bch.iter(|| {
            let mut acc = 1;
            for x in 1..f.order() {
                acc = f.add(f.mul(acc, x), f.inv(x).unwrap());
            }
            black_box(acc)
        })
    });
}

fn weights(c: &mut Criterion) {
    let x = word(5, 4096);
    c.bench_function("w_b n=4096 b=8", |bch| bch.iter(|| w_b(black_box(&x), 8).unwrap()));
}

fn enumerators(c: &mut Criterion) {
    let limits = Limits::default();
    let small = code(2, 1, 8, 5);
    c.bench_function("u_profile C(2^8,5) b=4", |bch| bch.iter(|| u_profile(&small, 4, &limits).unwrap()));
    c.bench_function("brute orbits C(2^8,5) b=4", |bch| {
        bch.iter(|| {
            brute_distribution(&small, 4, EnumerationMode::Orbits, DistributionView::BetaIndexed, &limits, 0).unwrap()
        })
    });
    c.bench_function("closed form C(2^8,5) b=4", |bch| {
        bch.iter(|| closed_form_distribution(&small, 4, &limits).unwrap())
    });
    let f = FieldDescriptor::new(2, 10, None).unwrap();
    c.bench_function("exact periods 2^10 k=3", |bch| bch.iter(|| PeriodSystem::exact(&f, 3).unwrap()));
}

criterion_group!(benches, field_ops, weights, enumerators);
criterion_main!(benches);
