//! Search for complexes that are m-CM with no missing faces of dimension
//! above `i` but whose h-polynomial does not dominate that of
//! `S(m, i, d-1)`.
//!
//! For each vertex count `n`, the candidates are pure `(d-1)`-dimensional
//! complexes on exactly the vertices `0..n`. When there are at most
//! [`EXHAUSTIVE_LIMIT`] possible facets every facet set is tried; otherwise a
//! seeded sample is drawn. The h-bound is tested first, and only complexes
//! that fail it are checked for membership in the class.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::is_m_cm;
use crate::complex::{Complex, Face, Vertex};
use crate::constructions::skeleton_join_sphere;
use crate::enumerative::{h_vector, poly_geq};
use crate::error::Result;
use crate::linalg::CoefficientField;
use crate::par;
use crate::suites::{CaseRecord, SuiteReport};

/// Largest facet universe enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 16;
pub const MAX_VERTICES: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreOptions {
  pub m:       u32,
  pub i:       usize,
  pub d:       usize,
  pub n_max:   usize,
  pub seed:    u64,
  /// Facet sets drawn per vertex count when enumeration is out of reach.
  pub samples: usize,
  pub field:   CoefficientField,
}

impl ExploreOptions {
  pub fn new(m: u32, i: usize, d: usize, n_max: usize) -> ExploreOptions {
    ExploreOptions { m, i, d, n_max, seed: 0, samples: 20_000, field: CoefficientField::Q }
  }
}

pub fn explore_question(m: u32, i: usize, d: usize, n_max: usize) -> Result<SuiteReport> {
  explore(&ExploreOptions::new(m, i, d, n_max))
}

fn facets_of(universe: &[Face], pick: impl IntoIterator<Item = usize>) -> Complex {
  Complex::from_faces(pick.into_iter().map(|k| universe[k].clone()).collect())
}

/// A violation, if this facet set is one.
fn examine(c: &Complex, n: usize, target: &[i64], opts: &ExploreOptions) -> Option<String> {
  if c.num_vertices() != n {
    return None;
  }
  let h = h_vector(c);
  if poly_geq(&h, target) {
    return None;
  }
  if c.max_missing_face_dim().is_some_and(|k| k > opts.i as i32) {
    return None;
  }
  if !is_m_cm(c, opts.m, opts.field).ok()?.verdict {
    return None;
  }
  Some(format!("facets {c}, h = {h:?}, bound {target:?}"))
}

pub fn explore(opts: &ExploreOptions) -> Result<SuiteReport> {
  let start = Instant::now();
  let extremal = skeleton_join_sphere(opts.m as usize, opts.i, opts.d)?;
  let target = h_vector(&extremal);
  let mut records = Vec::new();
  let mut notes = vec!["a search without violations does not settle the question".to_string()];
  let mut incomplete = false;

  let in_class = is_m_cm(&extremal, opts.m, opts.field)?.verdict
    && extremal.max_missing_face_dim().map_or(true, |k| k <= opts.i as i32);
  records.push(CaseRecord::compare("extremal", "S(m,i,d-1) is in the class", Some(opts.field), true, in_class));

  let n_max = if opts.n_max > MAX_VERTICES {
    incomplete = true;
    notes.push(format!("n_max {} exceeds the cap {MAX_VERTICES}; stopped at {MAX_VERTICES}", opts.n_max));
    MAX_VERTICES
  } else {
    opts.n_max
  };
  if n_max < opts.d + 1 {
    incomplete = true;
    notes.push(format!("no vertex count in {}..={n_max} admits a non-simplex (d-1)-complex", opts.d + 1));
  }

  for n in opts.d + 1..=n_max {
    let universe = Face::new((0..n as u32).map(Vertex)).expect("distinct").subsets_of_size(opts.d);
    let u = universe.len();
    let (found, examined, how): (Vec<Option<String>>, usize, &str) = if u <= EXHAUSTIVE_LIMIT {
      let total = 1usize << u;
      let found = par::map_range(total - 1, |mask| {
        let mask = mask + 1;
        examine(&facets_of(&universe, (0..u).filter(|k| mask >> k & 1 == 1)), n, &target, opts)
      });
      (found, total - 1, "exhaustive")
    } else {
      let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 32);
      let picks: Vec<Vec<usize>> = (0..opts.samples)
        .map(|_| {
          let k = rng.gen_range(1..=u);
          sample(&mut rng, u, k).into_vec()
        })
        .collect();
      let found = par::map(&picks, |p| examine(&facets_of(&universe, p.iter().copied()), n, &target, opts));
      (found, opts.samples, "sampled")
    };
    if how == "sampled" {
      notes.push(format!("n = {n}: {examined} of 2^{u} facet sets sampled"));
    }
    let violations: Vec<String> = found.into_iter().flatten().collect();
    records.push(CaseRecord::compare(format!("n={n}"), format!("violations ({how}, {examined} sets)"), Some(opts.field), 0, violations.len()));
    for (k, v) in violations.into_iter().enumerate() {
      records.push(CaseRecord {
        id:       format!("n={n}/candidate-{k:04}"),
        property: "h >= h(S(m,i,d-1))".into(),
        field:    Some(opts.field),
        expected: "true".into(),
        got:      "false".into(),
        pass:     false,
        witness:  Some(v),
      });
    }
  }
  let mut report = SuiteReport::new(&format!("explore(m={}, i={}, d={})", opts.m, opts.i, opts.d), opts.seed, vec![opts.field], records);
  report.incomplete = incomplete;
  report.notes = notes;
  report.elapsed_ms = start.elapsed().as_millis();
  Ok(report)
}
