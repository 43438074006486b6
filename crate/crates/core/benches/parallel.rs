//! Parallel (rayon global pool) against a single-thread pool on the same
//! workloads. Built without the `parallel` feature, both variants run the
//! sequential code path.

use bstar_core::classify::{is_buchsbaum_star, is_m_buchsbaum_star};
use bstar_core::constructions::{multi_point_join, stacked_cross_polytopal_sphere};
use bstar_core::explore::{explore, ExploreOptions};
use bstar_core::homology::{clear_cache, reduced_betti, relative_betti_vector};
use bstar_core::{CoefficientField, Complex};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn lemma_pass(c: &Complex) -> usize {
  let faces: Vec<_> = c.faces().filter(|f| !f.is_empty()).cloned().collect();
  bstar_core::par::map(&faces, |tau| {
    let rel = relative_betti_vector(c, tau, CoefficientField::Q).unwrap();
    let link = reduced_betti(&c.link(tau).unwrap(), CoefficientField::Q).unwrap();
    usize::from(rel.values.iter().sum::<usize>() == link.values.iter().sum::<usize>())
  })
  .into_iter()
  .sum()
}

fn bench(c: &mut Criterion) {
  let st = stacked_cross_polytopal_sphere(12, 4).unwrap().0;
  let p33 = multi_point_join(3, 3).0;
  let st9 = stacked_cross_polytopal_sphere(9, 3).unwrap().0;
  let explore_opts = ExploreOptions::new(2, 1, 2, 5);

  let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
  let mut group = c.benchmark_group("workloads");
  group.sample_size(10);

  let workloads: Vec<(&str, Box<dyn Fn() + Sync>)> = vec![
    ("buchsbaum-star ST(12,4)", Box::new(|| assert!(is_buchsbaum_star(&st, CoefficientField::Q).unwrap().verdict))),
    ("2-buchsbaum-star P(3,3)", Box::new(|| assert!(is_m_buchsbaum_star(&p33, 2, CoefficientField::Q).unwrap().verdict))),
    ("lemma oracle ST(9,3)", Box::new(|| assert!(lemma_pass(&st9) > 0))),
    ("explore m=2 i=1 d=2 n<=5", Box::new(|| assert!(explore(&explore_opts).unwrap().pass))),
  ];
  for (name, work) in &workloads {
    group.bench_function(BenchmarkId::new("global-pool", name), |b| {
      b.iter(|| {
        clear_cache();
        work()
      })
    });
    group.bench_function(BenchmarkId::new("one-thread", name), |b| {
      b.iter(|| {
        single.install(|| {
          clear_cache();
          work()
        })
      })
    });
  }
  group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
