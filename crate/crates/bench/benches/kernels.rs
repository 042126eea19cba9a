use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use redisc_bench::repeated_sylvester;
use redisc_core::{big_discriminant, det_cofactor, det_fraction_free, factor_pipeline, FamilySpec, PipelineOptions};

fn discriminant(c: &mut Criterion) {
    let mut g = c.benchmark_group("discriminant");
    for n in [4usize, 5, 6] {
        let fam = FamilySpec::new(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &fam, |b, fam| b.iter(|| big_discriminant(fam)));
    }
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("det_n4_k1");
    let (_, m) = repeated_sylvester(4, 1);
    g.bench_function("fraction_free", |b| b.iter(|| det_fraction_free(&m)));
    g.bench_function("cofactor", |b| b.iter(|| det_cofactor(&m)));
    g.finish();

    let mut g = c.benchmark_group("det_n5");
    g.sample_size(10);
    for k in [1usize, 5] {
        let (_, m) = repeated_sylvester(5, k);
        g.bench_with_input(BenchmarkId::new("fraction_free", k), &m, |b, m| b.iter(|| det_fraction_free(m)));
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline_n4");
    let fam = FamilySpec::new(4).unwrap();
    let opts = PipelineOptions::default();
    for k in 1..=4usize {
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| b.iter(|| factor_pipeline(&fam, k, &opts)));
    }
    g.finish();
}

criterion_group!(benches, discriminant, determinants, pipeline);
criterion_main!(benches);
