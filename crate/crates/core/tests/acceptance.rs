//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bstar_core::constructions::{cross_polytope, multi_point_join, named, stacked_cross_polytopal_sphere};
use bstar_core::enumerative::{binomial, h_prime_vector, h_vector, reduced_euler_characteristic};
use bstar_core::suites::{run_suite, SuiteOptions, SuiteReport};
use bstar_core::{classify, CoefficientField, Witness};

const Q: CoefficientField = CoefficientField::Q;
const F2: CoefficientField = CoefficientField::F2;
const F3: CoefficientField = CoefficientField::F3;

struct Outcome {
  ok:     bool,
  detail: String,
}

fn suite(name: &str) -> (SuiteReport, Outcome) {
  let report = run_suite(name, &SuiteOptions::default()).expect("registered suite");
  let failed: Vec<String> = report.failures().take(3).map(|r| format!("{} {}: expected {} got {}", r.id, r.property, r.expected, r.got)).collect();
  let detail = if failed.is_empty() {
    format!("{} cases", report.records.len())
  } else {
    format!("{} failing, e.g. {}", report.failures().count(), failed.join("; "))
  };
  let ok = report.pass;
  (report, Outcome { ok, detail })
}

fn all(checks: &[(bool, String)]) -> Outcome {
  let bad: Vec<&str> = checks.iter().filter(|c| !c.0).map(|c| c.1.as_str()).collect();
  Outcome {
    ok:     bad.is_empty(),
    detail: if bad.is_empty() { format!("{} checks", checks.len()) } else { bad.join("; ") },
  }
}

fn criterion(n: u32, title: &str, limit: Option<Duration>, run: impl FnOnce() -> Outcome) -> bool {
  let start = Instant::now();
  let mut out = run();
  let took = start.elapsed();
  if let Some(limit) = limit {
    if took > limit {
      out.ok = false;
      out.detail += &format!("; took {took:.2?}, limit {limit:?}");
    }
  }
  println!("{} criterion {n:>2}: {title} ({:.2?}) {}", if out.ok { "PASS" } else { "FAIL" }, took, out.detail);
  out.ok
}

fn secs(s: u64) -> Option<Duration> { Some(Duration::from_secs(s)) }

fn main() -> ExitCode {
  let mut ok = true;

  ok &= criterion(1, "h_i equals the sum of h_i over rank selections", secs(5), || suite("stanley-hnums").1);

  ok &= criterion(2, "rank-selected subcomplexes of balanced Buchsbaum* fixtures are Buchsbaum*", secs(60), || {
    suite("rank-selection").1
  });

  ok &= criterion(3, "rank selections of P(3,3) of size 2 are 2-Buchsbaum*", secs(30), || suite("m-rank-selection").1);

  ok &= criterion(4, "balanced lower bound d*h2 >= C(d,2)*h1", None, || {
    let (_, mut out) = suite("balanced-lbt");
    let mut checks = Vec::new();
    for (n, d, expect) in [(9, 3, 18), (12, 4, 48)] {
      let h = h_vector(&stacked_cross_polytopal_sphere(n, d).unwrap().0);
      let (lhs, rhs) = (d as i64 * h[2], binomial(d as i64, 2) * h[1]);
      checks.push((lhs == expect && rhs == expect, format!("stacked({n},{d}): {lhs} vs {rhs}")));
    }
    let extra = all(&checks);
    out.ok &= extra.ok;
    out.detail += &format!("; equality cases: {}", extra.detail);
    out
  });

  ok &= criterion(5, "d*h3 >= C(d,3)*h1 for d >= 4", None, || suite("h3-bound").1);

  ok &= criterion(6, "short simplicial h-numbers identity", None, || suite("swartz").1);

  ok &= criterion(7, "flag m-Buchsbaum* bound h'(t) >= (1+mt)^d", None, || {
    let (_, mut out) = suite("flag-bound");
    let k33 = multi_point_join(3, 2).0;
    let p33 = multi_point_join(3, 3).0;
    let oct = cross_polytope(3).0;
    let hex = named("suspended_hexagon").unwrap();
    let hp = |c, f| h_prime_vector(c, f).unwrap().values;
    let extra = all(&[
      (hp(&k33, Q) == [1, 4, 4], format!("h'(K33) = {:?}", hp(&k33, Q))),
      (hp(&p33, Q) == [1, 6, 12, 8], format!("h'(P(3,3)) = {:?}", hp(&p33, Q))),
      (hp(&oct, Q) == [1, 3, 3, 1], format!("h'(octahedron) = {:?}", hp(&oct, Q))),
      (hp(&hex, Q) == [1, 5, 5, 1], format!("h'(suspended hexagon) = {:?}", hp(&hex, Q))),
    ]);
    out.ok &= extra.ok;
    out.detail += &format!("; exact values: {}", extra.detail);
    out
  });

  ok &= criterion(8, "(-1)^(d-1) reduced Euler characteristic >= m^d", None, || {
    let (_, mut out) = suite("euler");
    let k33 = -reduced_euler_characteristic(&multi_point_join(3, 2).0);
    let p33 = reduced_euler_characteristic(&multi_point_join(3, 3).0);
    let extra = all(&[(k33 == 4, format!("K33 gives {k33}")), (p33 == 8, format!("P(3,3) gives {p33}"))]);
    out.ok &= extra.ok;
    out.detail += &format!("; exact values: {}", extra.detail);
    out
  });

  ok &= criterion(9, "rp2 is Buchsbaum* over F2 only", secs(5), || {
    let (_, mut out) = suite("orientability-rp2");
    let rp2 = named("rp2_min").unwrap();
    let mut checks = vec![(classify::is_buchsbaum_star(&rp2, F2).unwrap().verdict, "F2 verdict".to_string())];
    for field in [Q, F3] {
      let r = classify::is_buchsbaum_star(&rp2, field).unwrap();
      let vertex = matches!(&r.witness, Some(Witness::NotSurjective { face }) if face.len() == 1);
      checks.push((!r.verdict && vertex, format!("{field}: verdict {} witness {:?}", r.verdict, r.witness)));
    }
    let extra = all(&checks);
    out.ok &= extra.ok;
    out.detail += &format!("; direct: {}", extra.detail);
    out
  });

  ok &= criterion(10, "relative homology of contrastars equals shifted link homology", secs(60), || {
    suite("lemma-oracle").1
  });

  ok &= criterion(11, "Buchsbaum* implications and condition (b) <=> (c)", None, || suite("hierarchy").1);

  if ok {
    ExitCode::SUCCESS
  } else {
    ExitCode::FAILURE
  }
}
