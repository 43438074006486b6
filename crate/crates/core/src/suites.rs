//! Verification suites: each one runs a family of exact checks over a fixed,
//! seeded corpus and returns a [`SuiteReport`].

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{self, rank_selected, Coloring};
use crate::complex::{Complex, Face};
use crate::constructions::{
  cross_polytope, fixtures, multi_point_join, named, random_balanced_complex, random_pure_complex,
  stacked_cross_polytopal_sphere,
};
use crate::enumerative::{
  binomial, f_vector, h_from_f, h_prime_vector, h_vector, one_plus_mt_pow, poly_geq, reduced_euler_characteristic,
  short_simplicial_h,
};
use crate::error::{Error, Result};
use crate::homology::{
  pair_restriction_surjective, reduced_betti, relative_betti_vector, top_restriction_surjective,
};
use crate::linalg::CoefficientField;
use crate::par;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const SUITES: &[&str] = &[
  "stanley-hnums",
  "rank-selection",
  "m-rank-selection",
  "balanced-lbt",
  "h3-bound",
  "swartz",
  "flag-bound",
  "euler",
  "orientability-rp2",
  "lemma-oracle",
  "hierarchy",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
  pub seed:   u64,
  /// Upper bound on vertex counts of random complexes.
  pub max_n:  Option<usize>,
  /// Overrides the suite's default fields.
  pub fields: Option<Vec<CoefficientField>>,
}

impl Default for SuiteOptions {
  fn default() -> Self { SuiteOptions { seed: 0, max_n: None, fields: None } }
}

/// One check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
  pub id:       String,
  pub property: String,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub field:    Option<CoefficientField>,
  pub expected: String,
  pub got:      String,
  pub pass:     bool,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub witness:  Option<String>,
}

impl CaseRecord {
  /// Passes when both sides render identically.
  pub fn compare(
    id: impl Into<String>,
    property: impl Into<String>,
    field: Option<CoefficientField>,
    expected: impl fmt::Debug,
    got: impl fmt::Debug,
  ) -> CaseRecord {
    let (expected, got) = (format!("{expected:?}"), format!("{got:?}"));
    CaseRecord { id: id.into(), property: property.into(), field, pass: expected == got, expected, got, witness: None }
  }

  pub fn with_witness(mut self, witness: Option<impl ToString>) -> CaseRecord {
    self.witness = witness.map(|w| w.to_string());
    self
  }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
  pub suite:      String,
  pub version:    String,
  pub seed:       u64,
  pub fields:     Vec<CoefficientField>,
  pub records:    Vec<CaseRecord>,
  pub pass:       bool,
  /// Set when a size cap cut the run short.
  pub incomplete: bool,
  pub notes:      Vec<String>,
  pub elapsed_ms: u128,
}

impl SuiteReport {
  pub fn new(suite: &str, seed: u64, fields: Vec<CoefficientField>, mut records: Vec<CaseRecord>) -> SuiteReport {
    records.sort_by(|a, b| (&a.id, &a.property, a.field.map(|f| f.to_string())).cmp(&(&b.id, &b.property, b.field.map(|f| f.to_string()))));
    let pass = records.iter().all(|r| r.pass);
    SuiteReport {
      suite: suite.to_string(),
      version: VERSION.to_string(),
      seed,
      fields,
      records,
      pass,
      incomplete: false,
      notes: Vec::new(),
      elapsed_ms: 0,
    }
  }

  pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> { self.records.iter().filter(|r| !r.pass) }

  pub fn to_json(&self) -> String { serde_json::to_string_pretty(self).expect("report serializes") }

  /// Same verdicts as [`SuiteReport::to_json`], one line per record.
  pub fn render(&self) -> String {
    let fields: Vec<String> = self.fields.iter().map(ToString::to_string).collect();
    let mut out = format!("suite {} (bstar {}, seed {}, fields {})\n", self.suite, self.version, self.seed, fields.join(","));
    for r in &self.records {
      let field = r.field.map_or_else(|| "-".to_string(), |f| f.to_string());
      out += &format!(
        "  {} {:<40} {:<28} {:<3} expected {} got {}",
        if r.pass { "PASS" } else { "FAIL" },
        r.id,
        r.property,
        field,
        r.expected,
        r.got
      );
      if let Some(w) = &r.witness {
        out += &format!(" [{w}]");
      }
      out.push('\n');
    }
    for n in &self.notes {
      out += &format!("  note: {n}\n");
    }
    let failed = self.failures().count();
    out += &format!(
      "{}: {}{} ({} cases, {} failed, {} ms)\n",
      self.suite,
      if self.pass { "PASS" } else { "FAIL" },
      if self.incomplete { ", incomplete" } else { "" },
      self.records.len(),
      failed,
      self.elapsed_ms
    );
    out
  }
}

// ---------------------------------------------------------------------------
// corpus

/// A corpus member.
#[derive(Clone, Debug)]
pub struct Entry {
  pub id:       String,
  pub complex:  Complex,
  pub coloring: Option<Coloring>,
}

impl Entry {
  fn new(id: impl Into<String>, complex: Complex, coloring: Option<Coloring>) -> Entry {
    Entry { id: id.into(), complex, coloring }
  }
}

fn stacked(n: usize, d: usize) -> Entry {
  let (c, k) = stacked_cross_polytopal_sphere(n, d).expect("valid parameters");
  Entry::new(format!("stacked-{n}-{d}"), c, Some(k))
}

fn cross(d: usize) -> Entry {
  let (c, k) = cross_polytope(d);
  Entry::new(format!("cross-polytope-{d}"), c, Some(k))
}

fn mpj(q: usize, d: usize) -> Entry {
  let (c, k) = multi_point_join(q, d);
  Entry::new(format!("multi-point-join-{q}-{d}"), c, Some(k))
}

/// Balanced complexes that are Buchsbaum* over every field.
pub fn balanced_buchsbaum_star_corpus() -> Vec<Entry> {
  vec![cross(2), cross(3), cross(4), stacked(9, 3), stacked(12, 3), stacked(12, 4), mpj(3, 2), mpj(3, 3)]
}

fn fixture_entries() -> Vec<Entry> {
  fixtures().into_iter().map(|f| Entry::new(format!("fixture-{}", f.name), f.complex, None)).collect()
}

/// Fixtures, constructed families, and nothing random.
pub fn named_corpus() -> Vec<Entry> {
  let mut out = fixture_entries();
  out.extend(balanced_buchsbaum_star_corpus());
  out.push(mpj(3, 4));
  out.push(stacked(10, 2));
  out
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng { ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt) }

/// `count` random pure complexes on at most `max_n` vertices.
pub fn random_pure_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Entry> {
  let mut rng = rng_for(seed, 1);
  (0..count)
    .map(|k| {
      let n = rng.gen_range(3..=max_n.max(3));
      let dim = rng.gen_range(0..3.min(n));
      let total = binomial(n as i64, dim as i64 + 1) as usize;
      let facets = rng.gen_range(1..=total.min(14));
      let s = rng.gen();
      Entry::new(format!("random-pure-{k:03}"), random_pure_complex(s, n, dim, facets).expect("feasible"), None)
    })
    .collect()
}

/// `count` random complexes, pure or not, on at most `max_n` vertices.
pub fn random_mixed_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Entry> {
  let mut rng = rng_for(seed, 2);
  (0..count)
    .map(|k| {
      let n = rng.gen_range(3..=max_n.max(3));
      let mut faces = Vec::new();
      for _ in 0..rng.gen_range(1..=3) {
        let dim = rng.gen_range(0..3.min(n));
        let total = binomial(n as i64, dim as i64 + 1) as usize;
        let facets = rng.gen_range(1..=total.min(8));
        faces.extend(random_pure_complex(rng.gen(), n, dim, facets).expect("feasible").facets().iter().cloned());
      }
      Entry::new(format!("random-{k:03}"), Complex::from_faces(faces), None)
    })
    .collect()
}

/// `count` random balanced complexes on at most `max_n` vertices.
pub fn random_balanced_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Entry> {
  let mut rng = rng_for(seed, 3);
  (0..count)
    .map(|k| {
      let d = rng.gen_range(2..=3);
      let n = rng.gen_range(d + 1..=max_n.max(d + 1));
      let total: usize = (0..d).map(|c| (c..n).step_by(d).count()).product();
      let facets = rng.gen_range(1..=total.min(12));
      let (c, col) = random_balanced_complex(rng.gen(), n, d, facets).expect("feasible");
      Entry::new(format!("random-balanced-{k:03}"), c, Some(col))
    })
    .collect()
}

// ---------------------------------------------------------------------------
// suites

fn default_fields(opts: &SuiteOptions, defaults: &[CoefficientField]) -> Vec<CoefficientField> {
  opts.fields.clone().unwrap_or_else(|| defaults.to_vec())
}

const QF2: &[CoefficientField] = &[CoefficientField::Q, CoefficientField::F2];

/// Every suite in [`SUITES`], or all of them for `"all"`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
  let start = Instant::now();
  let mut report = match name {
    "stanley-hnums" => stanley_hnums(opts),
    "rank-selection" => rank_selection(opts),
    "m-rank-selection" => m_rank_selection(opts),
    "balanced-lbt" => balanced_lbt(opts),
    "h3-bound" => h3_bound(opts),
    "swartz" => swartz(opts),
    "flag-bound" => flag_bound(opts),
    "euler" => euler(opts),
    "orientability-rp2" => orientability_rp2(opts),
    "lemma-oracle" => lemma_oracle(opts),
    "hierarchy" => hierarchy(opts),
    "all" => {
      let parts = SUITES.iter().map(|s| run_suite(s, opts)).collect::<Result<Vec<_>>>()?;
      let mut fields: Vec<CoefficientField> = parts.iter().flat_map(|p| p.fields.clone()).collect();
      fields.sort_by_key(|f| f.characteristic());
      fields.dedup();
      let records = parts
        .iter()
        .flat_map(|p| p.records.iter().map(move |r| CaseRecord { id: format!("{}/{}", p.suite, r.id), ..r.clone() }))
        .collect();
      let mut all = SuiteReport::new("all", opts.seed, fields, records);
      all.incomplete = parts.iter().any(|p| p.incomplete);
      all.notes = parts.iter().flat_map(|p| p.notes.iter().map(move |n| format!("{}: {n}", p.suite))).collect();
      Ok(all)
    }
    other => Err(Error::Lookup { kind: "suite", name: other.to_string() }),
  }?;
  report.elapsed_ms = start.elapsed().as_millis();
  Ok(report)
}

/// `(h_i(Δ), Σ_{|S|=i} h_i(Δ_S))` for `i = 0..=d`.
pub fn stanley_sides(complex: &Complex, coloring: &Coloring) -> Result<Vec<(i64, i64)>> {
  let d = coloring.d() as usize;
  let h = h_from_f(&f_vector(complex), d);
  let colors = Face::new(1..=d as u32).expect("distinct");
  (0..=d)
    .map(|i| {
      let mut sum = 0;
      for s in colors.subsets_of_size(i) {
        let sel: Vec<u32> = s.vertices().iter().map(|v| v.0).collect();
        let part = rank_selected(complex, coloring, &sel)?;
        sum += h_from_f(&f_vector(&part), i)[i];
      }
      Ok((h[i], sum))
    })
    .collect()
}

fn stanley_hnums(opts: &SuiteOptions) -> Result<SuiteReport> {
  let max_n = opts.max_n.unwrap_or(8).min(8);
  let mut corpus = vec![cross(3), stacked(9, 3), mpj(3, 3)];
  corpus.extend(random_balanced_corpus(opts.seed, 50, max_n));
  let records = par::map(&corpus, |e| {
    let sides = stanley_sides(&e.complex, e.coloring.as_ref().expect("balanced"))?;
    let (lhs, rhs): (Vec<i64>, Vec<i64>) = sides.into_iter().unzip();
    Ok(CaseRecord::compare(&e.id, "h_i = sum h_i(rank selected)", None, lhs, rhs))
  })
  .into_iter()
  .collect::<Result<Vec<_>>>()?;
  Ok(SuiteReport::new("stanley-hnums", opts.seed, vec![], records))
}

/// Proper non-empty color subsets of `1..=d`.
fn proper_color_sets(d: u32) -> Vec<Vec<u32>> {
  (1..(1u32 << d) - 1).map(|mask| (1..=d).filter(|c| mask >> (c - 1) & 1 == 1).collect()).collect()
}

fn rank_selection(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let corpus = balanced_buchsbaum_star_corpus();
  let mut jobs = Vec::new();
  for e in &corpus {
    for &field in &fields {
      jobs.push((e, field, None));
      for s in proper_color_sets(e.coloring.as_ref().expect("balanced").d()) {
        jobs.push((e, field, Some(s)));
      }
    }
  }
  let records = par::map(&jobs, |(e, field, s)| {
    let k = e.coloring.as_ref().expect("balanced");
    match s {
      None => {
        let r = classify::is_doubly_buchsbaum(&e.complex, *field)?;
        Ok(CaseRecord::compare(&e.id, "doubly-buchsbaum", Some(*field), true, r.verdict).with_witness(r.witness))
      }
      Some(s) => {
        let part = rank_selected(&e.complex, k, s)?;
        let r = classify::is_buchsbaum_star(&part, *field)?;
        let id = format!("{}/S={}", e.id, s.iter().map(ToString::to_string).collect::<String>());
        Ok(CaseRecord::compare(id, "buchsbaum*(rank selected)", Some(*field), true, r.verdict).with_witness(r.witness))
      }
    }
  })
  .into_iter()
  .collect::<Result<Vec<_>>>()?;
  Ok(SuiteReport::new("rank-selection", opts.seed, fields, records))
}

fn m_rank_selection(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let e = mpj(3, 3);
  let k = e.coloring.as_ref().expect("balanced");
  let sets: Vec<Vec<u32>> = proper_color_sets(3).into_iter().filter(|s| s.len() == 2).collect();
  let mut jobs = Vec::new();
  for &field in &fields {
    jobs.push((field, None));
    for s in &sets {
      jobs.push((field, Some(s.clone())));
    }
  }
  let records = par::map(&jobs, |(field, s)| {
    Ok(match s {
      None => {
        let r = classify::is_m_buchsbaum_star(&e.complex, 2, *field)?;
        CaseRecord::compare(&e.id, "2-buchsbaum*", Some(*field), true, r.verdict).with_witness(r.witness)
      }
      Some(s) => {
        let part = rank_selected(&e.complex, k, s)?;
        let r = classify::is_m_buchsbaum_star(&part, 2, *field)?;
        let id = format!("{}/S={}", e.id, s.iter().map(ToString::to_string).collect::<String>());
        CaseRecord::compare(id, "2-buchsbaum*(rank selected)", Some(*field), true, r.verdict).with_witness(r.witness)
      }
    })
  })
  .into_iter()
  .collect::<Result<Vec<_>>>()?;
  Ok(SuiteReport::new("m-rank-selection", opts.seed, fields, records))
}

/// f-numbers of `ST^×(n, d-1)` by inclusion–exclusion over the `k = n/d - 1`
/// glued copies of `P^×_d`: each gluing identifies every proper face of one
/// facet and deletes that facet from both sides.
pub fn stacked_f_formula(n: usize, d: usize) -> Vec<i64> {
  let k = (n / d - 1) as i64;
  let d = d as i64;
  let mut f = vec![1];
  for j in 0..d - 1 {
    f.push(k * 2i64.pow(j as u32 + 1) * binomial(d, j + 1) - (k - 1) * binomial(d, j + 1));
  }
  f.push(k * 2i64.pow(d as u32) - 2 * (k - 1));
  f
}

fn relation(a: i64, b: i64) -> &'static str {
  match a.cmp(&b) {
    std::cmp::Ordering::Less => "<",
    std::cmp::Ordering::Equal => "=",
    std::cmp::Ordering::Greater => ">",
  }
}

fn preconditions(e: &Entry, field: CoefficientField) -> Result<Vec<CaseRecord>> {
  let r = classify::is_buchsbaum_star(&e.complex, field)?;
  let k = e.coloring.as_ref().expect("balanced");
  Ok(vec![
    CaseRecord::compare(&e.id, "buchsbaum*", Some(field), true, r.verdict).with_witness(r.witness),
    CaseRecord::compare(&e.id, "balanced", None, true, k.validate(&e.complex).is_ok()),
    CaseRecord::compare(&e.id, "connected", None, true, e.complex.is_connected()),
  ])
}

fn balanced_lbt(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let hex = {
    let c = named("suspended_hexagon")?;
    let k = Coloring::from_pairs(c.vertices().iter().map(|v| (*v, if v.0 >= 6 { 3 } else { v.0 % 2 + 1 })), 3);
    Entry::new("fixture-suspended_hexagon", c, Some(k))
  };
  // (entry, relation between d·h_2 and C(d,2)·h_1)
  let cases = [
    (cross(3), "="),
    (cross(4), "="),
    (stacked(9, 3), "="),
    (stacked(12, 3), "="),
    (stacked(12, 4), "="),
    // every 2-sphere has h_1 = h_2
    (hex, "="),
    // h = (1+2t)^3: 3·12 against 3·6
    (mpj(3, 3), ">"),
  ];
  let mut records = Vec::new();
  for (e, expected) in &cases {
    for &field in &fields {
      records.extend(preconditions(e, field)?);
    }
    let d = e.complex.d() as i64;
    let h = h_vector(&e.complex);
    let (lhs, rhs) = (d * h[2], binomial(d, 2) * h[1]);
    records.push(CaseRecord::compare(&e.id, "d*h2 >= C(d,2)*h1", None, true, lhs >= rhs));
    records.push(CaseRecord::compare(&e.id, "d*h2 vs C(d,2)*h1", None, expected, relation(lhs, rhs)));
    let n = e.complex.num_vertices();
    if n % d as usize == 0 && n >= 2 * d as usize {
      let st = stacked_cross_polytopal_sphere(n, d as usize)?.0;
      records.push(CaseRecord::compare(
        &e.id,
        "f >= f(stacked sphere)",
        None,
        true,
        poly_geq(&f_vector(&e.complex), &f_vector(&st)),
      ));
    }
  }
  for (n, d) in [(9, 3), (12, 3), (8, 4), (12, 4)] {
    let e = stacked(n, d);
    records.push(CaseRecord::compare(&e.id, "f = inclusion-exclusion", None, stacked_f_formula(n, d), f_vector(&e.complex)));
  }
  Ok(SuiteReport::new("balanced-lbt", opts.seed, fields, records))
}

fn h3_bound(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let mut records = Vec::new();
  for e in [cross(4), stacked(8, 4), stacked(12, 4), mpj(3, 4)] {
    for &field in &fields {
      records.extend(preconditions(&e, field)?);
    }
    let d = e.complex.d() as i64;
    let h = h_vector(&e.complex);
    records.push(CaseRecord::compare(&e.id, "d*h3 >= C(d,3)*h1", None, true, d * h[3] >= binomial(d, 3) * h[1]));
  }
  Ok(SuiteReport::new("h3-bound", opts.seed, fields, records))
}

/// `j h_j + (d-j+1) h_{j-1}` for `j = 1..=d`.
pub fn swartz_rhs(h: &[i64]) -> Vec<i64> {
  let d = h.len() - 1;
  (1..=d).map(|j| j as i64 * h[j] + (d - j + 1) as i64 * h[j - 1]).collect()
}

fn swartz(opts: &SuiteOptions) -> Result<SuiteReport> {
  let max_n = opts.max_n.unwrap_or(8).min(8);
  let mut corpus: Vec<Entry> = named_corpus().into_iter().filter(|e| e.complex.is_pure()).collect();
  corpus.extend(random_pure_corpus(opts.seed, 100, max_n));
  let records = par::map(&corpus, |e| {
    CaseRecord::compare(&e.id, "short h = j*h_j + (d-j+1)*h_{j-1}", None, swartz_rhs(&h_vector(&e.complex)), short_simplicial_h(&e.complex))
  });
  Ok(SuiteReport::new("swartz", opts.seed, vec![], records))
}

/// Isomorphism of graphs on the listed vertices, by backtracking with degree
/// and adjacency pruning.
pub fn graphs_isomorphic(a: &Complex, b: &Complex) -> bool {
  fn adjacency(c: &Complex) -> Vec<Vec<bool>> {
    let vs = c.vertices();
    let mut adj = vec![vec![false; vs.len()]; vs.len()];
    for e in c.faces_of_dim(1) {
      let i = vs.binary_search(&e.vertices()[0]).expect("vertex");
      let j = vs.binary_search(&e.vertices()[1]).expect("vertex");
      adj[i][j] = true;
      adj[j][i] = true;
    }
    adj
  }
  let (ga, gb) = (adjacency(a), adjacency(b));
  let n = ga.len();
  if n != gb.len() {
    return false;
  }
  let deg = |g: &Vec<Vec<bool>>, i: usize| g[i].iter().filter(|x| **x).count();
  let mut da: Vec<usize> = (0..n).map(|i| deg(&ga, i)).collect();
  let mut db: Vec<usize> = (0..n).map(|i| deg(&gb, i)).collect();
  let (ra, rb) = (da.clone(), db.clone());
  da.sort_unstable();
  db.sort_unstable();
  if da != db {
    return false;
  }
  fn go(k: usize, map: &mut Vec<usize>, used: &mut [bool], ga: &[Vec<bool>], gb: &[Vec<bool>], ra: &[usize], rb: &[usize]) -> bool {
    if k == ga.len() {
      return true;
    }
    for j in 0..gb.len() {
      if used[j] || ra[k] != rb[j] || (0..k).any(|i| ga[k][i] != gb[j][map[i]]) {
        continue;
      }
      used[j] = true;
      map.push(j);
      if go(k + 1, map, used, ga, gb, ra, rb) {
        return true;
      }
      map.pop();
      used[j] = false;
    }
    false
  }
  go(0, &mut Vec::new(), &mut vec![false; n], &ga, &gb, &ra, &rb)
}

fn flag_bound(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let hex = Entry::new("fixture-suspended_hexagon", named("suspended_hexagon")?, None);
  // (entry, m, exact h′ when it is extremal)
  let cases: Vec<(Entry, u32, Option<Vec<i64>>)> = vec![
    (mpj(3, 2), 2, Some(vec![1, 4, 4])),
    (mpj(3, 3), 2, Some(vec![1, 6, 12, 8])),
    (cross(3), 1, Some(vec![1, 3, 3, 1])),
    (hex.clone(), 1, None),
  ];
  let mut records = Vec::new();
  for (e, m, exact) in &cases {
    let d = e.complex.d();
    records.push(CaseRecord::compare(&e.id, "flag", None, true, e.complex.is_flag()));
    let target = one_plus_mt_pow(*m as i64, d);
    let extremal_model = multi_point_join(*m as usize + 1, d).0;
    for &field in &fields {
      let r = classify::is_m_buchsbaum_star(&e.complex, *m, field)?;
      records.push(CaseRecord::compare(&e.id, format!("{m}-buchsbaum*"), Some(field), true, r.verdict).with_witness(r.witness));
      let hp = h_prime_vector(&e.complex, field)?.values;
      records.push(CaseRecord::compare(&e.id, format!("h' >= (1+{m}t)^{d}"), Some(field), true, poly_geq(&hp, &target)));
      match exact {
        Some(v) => {
          records.push(CaseRecord::compare(&e.id, "h'", Some(field), v, &hp));
          records.push(CaseRecord::compare(&e.id, format!("h' = (1+{m}t)^{d}"), Some(field), &target, &hp));
        }
        None => {
          let strict = (1..d).all(|j| hp[j] > target[j]);
          records.push(CaseRecord::compare(&e.id, "strict excess in degrees 1..d-1", Some(field), true, strict));
        }
      }
      let equal_somewhere = (1..d).any(|j| hp[j] == target[j]);
      records.push(CaseRecord::compare(
        &e.id,
        format!("equality implies P({},{d})", m + 1),
        Some(field),
        true,
        !equal_somewhere || graphs_isomorphic(&e.complex, &extremal_model),
      ));
    }
  }
  // the non-extremal sphere must not be 2-Buchsbaum*, else the bound would fail
  for &field in &fields {
    let r = classify::is_m_buchsbaum_star(&hex.complex, 2, field)?;
    records.push(CaseRecord::compare(&hex.id, "2-buchsbaum*", Some(field), false, r.verdict).with_witness(r.witness));
  }
  Ok(SuiteReport::new("flag-bound", opts.seed, fields, records))
}

fn euler(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let cases: Vec<(Entry, u32, Option<i64>)> =
    vec![(mpj(3, 2), 2, Some(4)), (mpj(3, 3), 2, Some(8)), (cross(3), 1, Some(1)), (mpj(3, 4), 2, Some(16))];
  let mut records = Vec::new();
  for (e, m, exact) in &cases {
    let d = e.complex.d();
    let chi = reduced_euler_characteristic(&e.complex);
    let signed = if d % 2 == 1 { chi } else { -chi };
    let bound = (*m as i64).pow(d as u32);
    for &field in &fields {
      let r = classify::is_m_buchsbaum_star(&e.complex, *m, field)?;
      records.push(CaseRecord::compare(&e.id, format!("{m}-buchsbaum*"), Some(field), true, r.verdict).with_witness(r.witness));
      let betti = reduced_betti(&e.complex, field)?;
      records.push(CaseRecord::compare(&e.id, "chi from betti", Some(field), chi, betti.euler_characteristic()));
    }
    records.push(CaseRecord::compare(&e.id, format!("(-1)^(d-1) chi >= {m}^{d}"), None, true, signed >= bound));
    if let Some(x) = exact {
      records.push(CaseRecord::compare(&e.id, "(-1)^(d-1) chi", None, x, signed));
    }
  }
  Ok(SuiteReport::new("euler", opts.seed, fields, records))
}

fn orientability_rp2(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, &[CoefficientField::Q, CoefficientField::F2, CoefficientField::F3]);
  let rp2 = named("rp2_min")?;
  let torus = named("torus7")?;
  let mut records = Vec::new();
  for &field in &fields {
    let orientable_over = field.characteristic() == 2;
    let r = classify::is_buchsbaum_star(&rp2, field)?;
    let confirmed = r.witness.as_ref().map_or(true, |w| w.confirms(&rp2, field));
    let vertex_witness = matches!(&r.witness, Some(classify::Witness::NotSurjective { face }) if face.len() == 1);
    records.push(CaseRecord::compare("rp2_min", "buchsbaum*", Some(field), orientable_over, r.verdict).with_witness(r.witness.clone()));
    if !orientable_over {
      records.push(CaseRecord::compare("rp2_min", "vertex witness", Some(field), true, vertex_witness));
    }
    records.push(CaseRecord::compare("rp2_min", "witness confirms", Some(field), true, confirmed));
    records.push(CaseRecord::compare("rp2_min", "homology manifold", Some(field), true, classify::is_homology_manifold(&rp2, field)?.verdict));
    let t = classify::is_buchsbaum_star(&torus, field)?;
    records.push(CaseRecord::compare("torus7", "buchsbaum*", Some(field), true, t.verdict).with_witness(t.witness));
  }
  Ok(SuiteReport::new("orientability-rp2", opts.seed, fields, records))
}

/// `(relative, shifted link)` Betti numbers in degrees `-1..=dim Δ` for one
/// non-empty face.
pub fn lemma_sides(complex: &Complex, tau: &Face, field: CoefficientField) -> Result<(Vec<usize>, Vec<usize>)> {
  let dim = complex.dim().ok_or(Error::VoidComplex)?;
  let rel = relative_betti_vector(complex, tau, field)?;
  let link = reduced_betti(&complex.link(tau)?, field)?;
  let k = tau.len() as i32;
  Ok(((-1..=dim).map(|i| rel.get(i)).collect(), (-1..=dim).map(|i| link.get(i - k)).collect()))
}

fn lemma_oracle(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let max_n = opts.max_n.unwrap_or(7).min(7);
  let mut corpus = fixture_entries();
  corpus.extend(balanced_buchsbaum_star_corpus().into_iter().filter(|e| e.complex.num_faces() <= 200));
  corpus.extend(random_mixed_corpus(opts.seed, 100, max_n));
  let jobs: Vec<(&Entry, CoefficientField)> = corpus.iter().flat_map(|e| fields.iter().map(move |f| (e, *f))).collect();
  let records = par::map(&jobs, |(e, field)| {
    let mut bad = None;
    let mut faces = 0;
    for tau in e.complex.faces().filter(|f| !f.is_empty()) {
      faces += 1;
      let (rel, link) = lemma_sides(&e.complex, tau, *field)?;
      if rel != link && bad.is_none() {
        bad = Some(format!("face {tau}: relative {rel:?}, link {link:?}"));
      }
    }
    Ok(CaseRecord::compare(&e.id, format!("relative = shifted link ({faces} faces)"), Some(*field), true, bad.is_none()).with_witness(bad))
  })
  .into_iter()
  .collect::<Result<Vec<_>>>()?;
  Ok(SuiteReport::new("lemma-oracle", opts.seed, fields, records))
}

/// Condition (b): the map between relative top homologies is onto for every
/// pair of faces `σ ⊆ τ` with `τ` non-empty. Returns the first failing pair.
pub fn condition_b_failure(complex: &Complex, field: CoefficientField) -> Result<Option<(Face, Face)>> {
  for tau in complex.faces().filter(|f| !f.is_empty()) {
    for sigma in tau.subsets() {
      if !pair_restriction_surjective(complex, &sigma, tau, field)? {
        return Ok(Some((sigma, tau.clone())));
      }
    }
  }
  Ok(None)
}

/// Condition (c): top homology surjects onto every relative top homology
/// `H̃_{d-1}(Δ, cost τ)`, `τ` non-empty.
pub fn condition_c_failure(complex: &Complex, field: CoefficientField) -> Result<Option<Face>> {
  for tau in complex.faces().filter(|f| !f.is_empty()) {
    if !top_restriction_surjective(complex, tau, field)? {
      return Ok(Some(tau.clone()));
    }
  }
  Ok(None)
}

fn hierarchy(opts: &SuiteOptions) -> Result<SuiteReport> {
  let fields = default_fields(opts, QF2);
  let max_n = opts.max_n.unwrap_or(7).min(8);
  let mut corpus = named_corpus();
  corpus.extend(random_pure_corpus(opts.seed ^ 0x5eed, 40, max_n));
  let jobs: Vec<(&Entry, CoefficientField)> = corpus.iter().flat_map(|e| fields.iter().map(move |f| (e, *f))).collect();
  let per_job = par::map(&jobs, |(e, field)| -> Result<Vec<CaseRecord>> {
    let c = &e.complex;
    let field = *field;
    let mut out = Vec::new();
    let star = classify::is_buchsbaum_star(c, field)?;
    let buchsbaum = classify::is_buchsbaum(c, field)?;
    if buchsbaum.verdict && c.num_faces() <= 300 {
      let b = condition_b_failure(c, field)?;
      let cc = condition_c_failure(c, field)?;
      out.push(
        CaseRecord::compare(&e.id, "condition (b) <=> (c)", Some(field), b.is_none(), cc.is_none())
          .with_witness(b.map(|(s, t)| format!("(b) fails at {s} in {t}"))),
      );
      out.push(CaseRecord::compare(&e.id, "(c) <=> buchsbaum*", Some(field), star.verdict, cc.is_none()));
    }
    if star.verdict && c.d() >= 2 {
      let d = c.d() as i32;
      out.push(CaseRecord::compare(&e.id, "buchsbaum* => top betti > 0", Some(field), true, reduced_betti(c, field)?.get(d - 1) > 0));
      let links_2cm = c.vertices().iter().all(|v| {
        classify::is_m_cm(&c.link(&Face::vertex(*v)).expect("vertex"), 2, field).is_ok_and(|r| r.verdict)
      });
      out.push(CaseRecord::compare(&e.id, "buchsbaum* => vertex links 2-CM", Some(field), true, links_2cm));
      let db = classify::is_doubly_buchsbaum(c, field)?;
      out.push(CaseRecord::compare(&e.id, "buchsbaum* => doubly-buchsbaum", Some(field), true, db.verdict).with_witness(db.witness));
    }
    for r in [&star, &buchsbaum] {
      if let Some(w) = &r.witness {
        out.push(CaseRecord::compare(&e.id, format!("{} witness confirms", r.property), Some(field), true, w.confirms(c, field)));
      }
    }
    out.push(CaseRecord::compare(&e.id, "buchsbaum* => buchsbaum", Some(field), true, !star.verdict || buchsbaum.verdict));
    Ok(out)
  });
  let records = per_job.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
  Ok(SuiteReport::new("hierarchy", opts.seed, fields, records))
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn stacked_formula_matches_small_cases() {
    assert_eq!(stacked_f_formula(6, 3), vec![1, 6, 12, 8]);
    assert_eq!(stacked_f_formula(9, 3), vec![1, 9, 21, 14]);
  }

  #[test]
  fn isomorphism() {
    assert!(graphs_isomorphic(&cross_polytope(3).0, &multi_point_join(2, 3).0));
    assert!(!graphs_isomorphic(&cross_polytope(3).0, &named("suspended_hexagon").unwrap()));
    let k = cross_polytope(2).0;
    assert!(graphs_isomorphic(&k, &k.relabel(|v| crate::complex::Vertex(10 - v.0))));
  }

  #[test]
  fn unknown_suite() {
    assert!(matches!(run_suite("nope", &SuiteOptions::default()), Err(Error::Lookup { .. })));
  }

  #[test]
  fn reports_are_deterministic() {
    let a = run_suite("stanley-hnums", &SuiteOptions::default()).unwrap();
    let b = run_suite("stanley-hnums", &SuiteOptions::default()).unwrap();
    assert_eq!(a.records, b.records);
    assert!(a.pass);
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["version"], VERSION);
    let text = a.render();
    for r in &a.records {
      assert!(text.contains(&format!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.id)));
    }
  }
}
