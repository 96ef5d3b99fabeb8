use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spinweave::spinor::commutant;
use spinweave::{CliffordElement, FrameGroup, RepKind, Representation, Signature, SpinSpace};

fn build_reps(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_representation");
    for (k, l) in [(3, 0), (2, 2), (3, 2), (4, 2)] {
        let sig = Signature::new(k, l).unwrap();
        let kind = if sig.is_even() { RepKind::Dirac } else { RepKind::Cartan };
        g.bench_with_input(BenchmarkId::from_parameter(sig), &sig, |b, s| {
            b.iter(|| Representation::build(*s, kind).unwrap())
        });
    }
    g.finish();
}

fn blade_products(c: &mut Criterion) {
    let sig = Signature::new(4, 4).unwrap();
    let basis: Vec<CliffordElement> = CliffordElement::basis(sig).collect();
    let x = basis.iter().take(40).fold(CliffordElement::zero(sig), |acc, b| &acc + b);
    let y = basis.iter().rev().take(40).fold(CliffordElement::zero(sig), |acc, b| &acc + b);
    c.bench_function("clifford_product_40x40_terms_m8", |b| b.iter(|| &x * &y));
}

fn frame_groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("frame_group");
    g.sample_size(10);
    for (k, l) in [(2, 1), (2, 2), (3, 2)] {
        let ss = SpinSpace::standard(Signature::new(k, l).unwrap()).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(ss.sig), &ss, |b, ss| {
            b.iter(|| FrameGroup::generate(ss).unwrap())
        });
    }
    g.finish();
}

fn commutants(c: &mut Criterion) {
    let mut g = c.benchmark_group("commutant");
    g.sample_size(10);
    for (k, l) in [(3, 0), (2, 2), (3, 2)] {
        let ss = SpinSpace::standard(Signature::new(k, l).unwrap()).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(ss.sig), &ss, |b, ss| b.iter(|| commutant(&ss.frame)));
    }
    g.finish();
}

criterion_group!(benches, build_reps, blade_products, frame_groups, commutants);
criterion_main!(benches);
