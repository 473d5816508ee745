use criterion::{black_box, criterion_group, criterion_main, Criterion};

use wfk_core::charmap::{verify_cubic, CharMap};
use wfk_core::exact::CycNum;
use wfk_core::fock::{p2_model, virasoro, FockSpace, FockVector};
use wfk_core::groups::{binary_icosahedral, cyclic, Group};
use wfk_core::mckay::mckay_data;
use wfk_core::series::{euler_product, gottsche_poincare};
use wfk_core::wreath::{verify_heisenberg, WreathFamily};
use wfk_core::{Budget, ClassFunction};

fn cyclotomic(c: &mut Criterion) {
    let z = CycNum::zeta(60, 7);
    let w = &CycNum::zeta(60, 11) + &CycNum::from_int(3);
    c.bench_function("cyclotomic mul Q(ζ_60)", |b| b.iter(|| black_box(&z) * black_box(&w)));
    c.bench_function("cyclotomic inverse Q(ζ_60)", |b| b.iter(|| black_box(&w).inverse().unwrap()));
}

fn groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("groups");
    g.sample_size(10);
    g.bench_function("binary icosahedral character table", |b| {
        b.iter(|| {
            let g = Group::new(binary_icosahedral().unwrap());
            ClassFunction::irreducibles(&g).unwrap().len()
        })
    });
    g.bench_function("binary icosahedral McKay data", |b| {
        let grp = Group::new(binary_icosahedral().unwrap());
        b.iter(|| mckay_data(&grp).unwrap())
    });
    g.finish();
}

fn wreath(c: &mut Criterion) {
    let mut g = c.benchmark_group("wreath");
    g.sample_size(10);
    g.bench_function("Heisenberg relations Z/2, levels ≤ 2", |b| {
        b.iter(|| {
            let fam = WreathFamily::new(&Group::new(cyclic(2).unwrap()), Budget::default());
            verify_heisenberg(&fam, 2, 2).unwrap().pass
        })
    });
    g.bench_function("cubic identity S_n, n ≤ 4", |b| b.iter(|| verify_cubic(4, Budget::default()).unwrap().pass));
    g.bench_function("ch of all classes of Γ_3(Z/3)", |b| {
        let cm = CharMap::new(&Group::new(cyclic(3).unwrap()), Budget::default());
        let lvl = cm.family().level(3);
        b.iter(|| {
            (0..lvl.len())
                .map(|i| cm.ch(&wfk_core::wreath::WreathClassFunction::indicator(&lvl, i)).unwrap().len())
                .sum::<usize>()
        })
    });
    g.finish();
}

fn fock(c: &mut Criterion) {
    let a = p2_model();
    let space = FockSpace::from_algebra(&a);
    let vs: Vec<FockVector> = space.basis_upto(3).into_iter().map(FockVector::monomial).collect();
    let l1 = virasoro(&a, 1, a.unit(), 4).unwrap();
    c.bench_function("L_1 on P2 Fock space, weight ≤ 3", |b| {
        b.iter(|| vs.iter().map(|v| l1.apply(&space, v).unwrap().len()).sum::<usize>())
    });
}

fn series(c: &mut Criterion) {
    c.bench_function("Euler product to q^30", |b| b.iter(|| euler_product(black_box(24), 31)));
    c.bench_function("Göttsche series of P2 to q^8", |b| b.iter(|| gottsche_poincare([1, 0, 1, 0, 1], 9)));
}

criterion_group!(benches, cyclotomic, groups, wreath, fock, series);
criterion_main!(benches);
