//! Property predicates over a field: Cohen-Macaulay, m-CM, Buchsbaum,
//! doubly-Buchsbaum, Buchsbaum*, m-Buchsbaum* and homology manifolds, plus
//! balanced colorings and rank selection.
//!
//! Every predicate scans its candidates (faces in graded order, deleted vertex
//! sets by size then lexicographically) and reports the first violation as a
//! [`Witness`]. Scans may run in parallel; the reported witness is the first
//! one in that order regardless of scheduling.
//!
//! Conventions:
//! - Buchsbaum includes purity.
//! - m-CM: CM, and `Δ - A` is CM of the same dimension for all `|A| < m`.
//! - m-Buchsbaum*: Buchsbaum, and `Δ - A` is Buchsbaum* of the same dimension
//!   for all `|A| < m`. So `m = 0` is plain Buchsbaum and `m = 1` is Buchsbaum*.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};
use crate::homology::{self, reduced_betti, TopRestriction};
use crate::linalg::CoefficientField;
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
  CohenMacaulay,
  MCohenMacaulay(u32),
  Buchsbaum,
  DoublyBuchsbaum,
  BuchsbaumStar,
  MBuchsbaumStar(u32),
  HomologyManifold,
}

impl fmt::Display for Property {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      Property::CohenMacaulay => write!(f, "cohen-macaulay"),
      Property::MCohenMacaulay(m) => write!(f, "{m}-cohen-macaulay"),
      Property::Buchsbaum => write!(f, "buchsbaum"),
      Property::DoublyBuchsbaum => write!(f, "doubly-buchsbaum"),
      Property::BuchsbaumStar => write!(f, "buchsbaum*"),
      Property::MBuchsbaumStar(m) => write!(f, "{m}-buchsbaum*"),
      Property::HomologyManifold => write!(f, "homology-manifold"),
    }
  }
}

/// Certificate that a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
  NotPure,
  /// `β̃_degree(lk face) ≠ 0` although `degree < dim lk face`.
  LinkHomology { face: Face, degree: i32 },
  /// `β̃_degree(lk face)` differs from that of a sphere of dimension
  /// `dim lk face`.
  NonSphereLink { face: Face, degree: i32 },
  /// `H̃_{d-1}(Δ) → H̃_{d-1}(Δ, cost face)` is not onto.
  NotSurjective { face: Face },
  /// `Δ - removed` has dimension `dim` instead of `dim Δ`.
  DimensionDrop { removed: Vec<Vertex>, dim: Option<i32> },
  /// `Δ - removed` fails for the reason in `cause`, which refers to the
  /// deleted complex.
  Deletion { removed: Vec<Vertex>, cause: Box<Witness> },
}

impl fmt::Display for Witness {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      Witness::NotPure => write!(f, "not pure"),
      Witness::LinkHomology { face, degree } => write!(f, "link of {face} has reduced H_{degree} != 0"),
      Witness::NonSphereLink { face, degree } => {
        write!(f, "link of {face} differs from a sphere in degree {degree}")
      }
      Witness::NotSurjective { face } => write!(f, "top homology does not surject at {face}"),
      Witness::DimensionDrop { removed, dim } => {
        write!(f, "deleting {} drops the dimension to {}", fmt_set(removed), fmt_dim(*dim))
      }
      Witness::Deletion { removed, cause } => write!(f, "after deleting {}: {cause}", fmt_set(removed)),
    }
  }
}

fn fmt_set(vs: &[Vertex]) -> String {
  format!("{{{}}}", vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn fmt_dim(d: Option<i32>) -> String { d.map_or_else(|| "void".into(), |d| d.to_string()) }

impl Witness {
  /// Re-derives the violation from scratch, sharing no state with the
  /// predicate that produced it.
  pub fn confirms(&self, complex: &Complex, field: CoefficientField) -> bool {
    match self {
      Witness::NotPure => !complex.is_pure(),
      Witness::LinkHomology { face, degree } => {
        let Ok(link) = complex.link(face) else { return false };
        let dim = link.dim().unwrap_or(-2);
        *degree < dim && homology::reduced_betti_uncached(&link, field).is_ok_and(|b| b.get(*degree) != 0)
      }
      Witness::NonSphereLink { face, degree } => {
        let Ok(link) = complex.link(face) else { return false };
        let dim = link.dim().unwrap_or(-2);
        homology::reduced_betti_uncached(&link, field)
          .is_ok_and(|b| b.get(*degree) != usize::from(*degree == dim))
      }
      Witness::NotSurjective { face } => {
        !face.is_empty()
          && complex.contains(face)
          && homology::pair_restriction_surjective(complex, &Face::empty(), face, field) == Ok(false)
      }
      Witness::DimensionDrop { removed, dim } => {
        complex.delete(removed).is_ok_and(|c| c.dim() == *dim && c.dim() != complex.dim())
      }
      Witness::Deletion { removed, cause } => {
        complex.delete(removed).is_ok_and(|c| c.dim() == complex.dim() && cause.confirms(&c, field))
      }
    }
  }
}

/// Verdict of one predicate on one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
  pub property: Property,
  pub field:    CoefficientField,
  pub verdict:  bool,
  /// Present exactly when `verdict` is false.
  pub witness:  Option<Witness>,
}

impl PropertyReport {
  fn from_witness(property: Property, field: CoefficientField, witness: Option<Witness>) -> Self {
    PropertyReport { property, field, verdict: witness.is_none(), witness }
  }

  fn relabel(self, property: Property) -> Self { PropertyReport { property, ..self } }
}

impl fmt::Display for PropertyReport {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{} over {}: {}", self.property, self.field, self.verdict)?;
    if let Some(w) = &self.witness {
      write!(f, " ({w})")?;
    }
    Ok(())
  }
}

fn require_nonvoid(complex: &Complex) -> Result<()> {
  if complex.is_void() {
    Err(Error::VoidComplex)
  } else {
    Ok(())
  }
}

/// Reisner-type scan: the first face whose link has homology below its top
/// dimension.
fn link_vanishing_failure(complex: &Complex, field: CoefficientField, skip_empty: bool) -> Option<Witness> {
  let faces: Vec<&Face> = complex.faces().filter(|f| !(skip_empty && f.is_empty())).collect();
  par::find_first(&faces, |sigma| {
    let link = complex.link_unchecked(sigma);
    let dim = link.dim()?;
    // links of dimension ≤ 0 satisfy the condition vacuously
    if dim <= 0 {
      return None;
    }
    let betti = reduced_betti(&link, field).ok()?;
    (-1..dim).find(|&i| betti.get(i) != 0).map(|degree| Witness::LinkHomology { face: (*sigma).clone(), degree })
  })
}

/// Vertex subsets with `lo ≤ |A| < hi`, ordered by size then lexicographically.
fn deletion_sets(complex: &Complex, lo: usize, hi: usize) -> Vec<Vec<Vertex>> {
  let all = Face::new(complex.vertices().iter().copied()).expect("vertices are distinct");
  (lo..hi.min(all.len() + 1))
    .flat_map(|k| all.subsets_of_size(k))
    .map(|f| f.vertices().to_vec())
    .collect()
}

/// First deletion `Δ - A` (over `sets`) that changes the dimension or fails
/// `check`.
fn deletion_failure<F>(complex: &Complex, sets: &[Vec<Vertex>], check: F) -> Option<Witness>
where
  F: Fn(&Complex) -> Option<Witness> + Sync + Send,
{
  par::find_first(sets, |removed| {
    let rest = complex.delete(removed).expect("deleting known vertices");
    if rest.dim() != complex.dim() {
      return Some(Witness::DimensionDrop { removed: removed.clone(), dim: rest.dim() });
    }
    check(&rest).map(|cause| {
      if removed.is_empty() {
        cause
      } else {
        Witness::Deletion { removed: removed.clone(), cause: Box::new(cause) }
      }
    })
  })
}

fn cm_witness(complex: &Complex, field: CoefficientField) -> Option<Witness> {
  link_vanishing_failure(complex, field, false)
}

fn buchsbaum_witness(complex: &Complex, field: CoefficientField) -> Option<Witness> {
  if !complex.is_pure() {
    return Some(Witness::NotPure);
  }
  link_vanishing_failure(complex, field, true)
}

fn surjectivity_witness(complex: &Complex, field: CoefficientField) -> Option<Witness> {
  let top = TopRestriction::new(complex, field).expect("pure non-void complex");
  let faces: Vec<&Face> = complex.faces().filter(|f| !f.is_empty()).collect();
  par::find_first(&faces, |tau| (!top.surjective_at(tau)).then(|| Witness::NotSurjective { face: (*tau).clone() }))
}

fn buchsbaum_star_witness(complex: &Complex, field: CoefficientField) -> Option<Witness> {
  buchsbaum_witness(complex, field).or_else(|| surjectivity_witness(complex, field))
}

/// Cohen-Macaulay over `field`: every link (including `lk ∅ = Δ`) has
/// vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(complex: &Complex, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  Ok(PropertyReport::from_witness(Property::CohenMacaulay, field, cm_witness(complex, field)))
}

/// CM, and CM of the same dimension after deleting any fewer than `m`
/// vertices.
pub fn is_m_cm(complex: &Complex, m: u32, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  if m == 0 {
    return Err(Error::Domain("m-CM needs m >= 1".into()));
  }
  let witness = cm_witness(complex, field).or_else(|| {
    let sets = deletion_sets(complex, 1, m as usize);
    deletion_failure(complex, &sets, |rest| cm_witness(rest, field))
  });
  Ok(PropertyReport::from_witness(Property::MCohenMacaulay(m), field, witness))
}

/// Pure, with every vertex link CM.
pub fn is_buchsbaum(complex: &Complex, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  Ok(PropertyReport::from_witness(Property::Buchsbaum, field, buchsbaum_witness(complex, field)))
}

/// Buchsbaum, and `Δ - v` Buchsbaum of the same dimension for every vertex.
pub fn is_doubly_buchsbaum(complex: &Complex, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  let witness = buchsbaum_witness(complex, field).or_else(|| {
    let sets = deletion_sets(complex, 1, 2);
    deletion_failure(complex, &sets, |rest| buchsbaum_witness(rest, field))
  });
  Ok(PropertyReport::from_witness(Property::DoublyBuchsbaum, field, witness))
}

/// Buchsbaum, and top homology surjects onto `H̃_{d-1}(Δ, cost τ)` for
/// every non-empty face `τ`.
pub fn is_buchsbaum_star(complex: &Complex, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  let witness = buchsbaum_star_witness(complex, field);
  if cfg!(debug_assertions) && witness.is_none() && complex.d() >= 2 {
    debug_assert!(reduced_betti(complex, field)?.get(complex.d() as i32 - 1) >= 1);
  }
  Ok(PropertyReport::from_witness(Property::BuchsbaumStar, field, witness))
}

/// Buchsbaum, and `Δ - A` Buchsbaum* of the same dimension for every
/// `|A| < m`.
pub fn is_m_buchsbaum_star(complex: &Complex, m: u32, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  if m == 0 {
    return Ok(is_buchsbaum(complex, field)?.relabel(Property::MBuchsbaumStar(0)));
  }
  let witness = buchsbaum_witness(complex, field).or_else(|| {
    let sets = deletion_sets(complex, 0, m as usize);
    deletion_failure(complex, &sets, |rest| buchsbaum_star_witness(rest, field))
  });
  Ok(PropertyReport::from_witness(Property::MBuchsbaumStar(m), field, witness))
}

/// Closed homology manifold over `field`: pure, and every non-empty face has
/// the link homology of a sphere of the link's dimension.
pub fn is_homology_manifold(complex: &Complex, field: CoefficientField) -> Result<PropertyReport> {
  require_nonvoid(complex)?;
  let witness = if !complex.is_pure() {
    Some(Witness::NotPure)
  } else {
    let faces: Vec<&Face> = complex.faces().filter(|f| !f.is_empty()).collect();
    par::find_first(&faces, |sigma| {
      let link = complex.link_unchecked(sigma);
      let dim = link.dim()?;
      let betti = reduced_betti(&link, field).ok()?;
      (-1..=dim)
        .find(|&i| betti.get(i) != usize::from(i == dim))
        .map(|degree| Witness::NonSphereLink { face: (*sigma).clone(), degree })
    })
  };
  Ok(PropertyReport::from_witness(Property::HomologyManifold, field, witness))
}

// ---------------------------------------------------------------------------
// balanced complexes

/// A map from vertices to colors `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
  colors: BTreeMap<Vertex, u32>,
  d:      u32,
}

impl Coloring {
  pub fn new(colors: BTreeMap<Vertex, u32>, d: u32) -> Coloring { Coloring { colors, d } }

  pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, u32)>, d: u32) -> Coloring {
    Coloring { colors: pairs.into_iter().collect(), d }
  }

  pub fn d(&self) -> u32 { self.d }

  pub fn color(&self, v: Vertex) -> Option<u32> { self.colors.get(&v).copied() }

  pub fn iter(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ { self.colors.iter().map(|(v, c)| (*v, *c)) }

  /// `classes()[c - 1]` lists the vertices of color `c`.
  pub fn classes(&self) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new(); self.d as usize];
    for (v, c) in &self.colors {
      out[*c as usize - 1].push(*v);
    }
    out
  }

  /// Checks that this is a proper coloring of `complex` with exactly
  /// `d = dim + 1` colors available.
  pub fn validate(&self, complex: &Complex) -> Result<()> {
    if self.d as usize != complex.d() {
      return Err(Error::InvalidColoring(format!(
        "coloring uses {} colors but the complex needs {}",
        self.d,
        complex.d()
      )));
    }
    for &v in complex.vertices() {
      match self.color(v) {
        None => return Err(Error::InvalidColoring(format!("vertex {v} has no color"))),
        Some(c) if c == 0 || c > self.d => {
          return Err(Error::InvalidColoring(format!("vertex {v} has color {c} outside 1..={}", self.d)))
        }
        _ => {}
      }
    }
    if let Some(v) = self.colors.keys().find(|v| !complex.has_vertex(**v)) {
      return Err(Error::InvalidColoring(format!("vertex {v} is not in the complex")));
    }
    for e in complex.faces_of_dim(1) {
      let (u, v) = (e.vertices()[0], e.vertices()[1]);
      if self.colors[&u] == self.colors[&v] {
        return Err(Error::ImproperColoring { u, v, color: self.colors[&u] });
      }
    }
    for f in complex.facets() {
      let mut cs: Vec<u32> = f.vertices().iter().map(|v| self.colors[v]).collect();
      cs.sort_unstable();
      cs.dedup();
      debug_assert_eq!(cs.len(), f.len(), "facet {f} repeats a color");
    }
    Ok(())
  }

  /// The coloring restricted to the given vertices; `d` is unchanged.
  pub fn restrict(&self, vertices: &[Vertex]) -> Coloring {
    Coloring { colors: vertices.iter().filter_map(|v| self.color(*v).map(|c| (*v, c))).collect(), d: self.d }
  }
}

/// Outcome of a balanced-coloring search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringSearch {
  Found(Coloring),
  NotColorable,
  /// The node budget ran out first.
  Unknown,
}

pub const DEFAULT_COLORING_NODE_LIMIT: u64 = 10_000_000;

/// A proper `d`-coloring of the 1-skeleton of a pure complex, if one exists.
pub fn find_balanced_coloring(complex: &Complex) -> Result<ColoringSearch> {
  find_balanced_coloring_with_limit(complex, DEFAULT_COLORING_NODE_LIMIT)
}

pub fn find_balanced_coloring_with_limit(complex: &Complex, node_limit: u64) -> Result<ColoringSearch> {
  require_nonvoid(complex)?;
  if !complex.is_pure() {
    return Err(Error::NotPure);
  }
  let d = complex.d() as u32;
  let verts = complex.vertices();
  let pos = |v: &Vertex| verts.binary_search(v).expect("edge vertex");
  let mut adj = vec![Vec::new(); verts.len()];
  for e in complex.faces_of_dim(1) {
    let (a, b) = (pos(&e.vertices()[0]), pos(&e.vertices()[1]));
    adj[a].push(b);
    adj[b].push(a);
  }
  // highest degree first
  let mut order: Vec<usize> = (0..verts.len()).collect();
  order.sort_by_key(|&i| (std::cmp::Reverse(adj[i].len()), i));

  struct Search<'a> {
    adj:   &'a [Vec<usize>],
    order: &'a [usize],
    color: Vec<u32>,
    d:     u32,
    nodes: u64,
    limit: u64,
  }

  impl Search<'_> {
    /// `Some(true)` on success, `Some(false)` on exhaustion, `None` on budget.
    fn go(&mut self, k: usize, max_used: u32) -> Option<bool> {
      if k == self.order.len() {
        return Some(true);
      }
      self.nodes += 1;
      if self.nodes > self.limit {
        return None;
      }
      let v = self.order[k];
      // colors beyond max_used + 1 are symmetric to max_used + 1
      for c in 1..=self.d.min(max_used + 1) {
        if self.adj[v].iter().any(|&u| self.color[u] == c) {
          continue;
        }
        self.color[v] = c;
        match self.go(k + 1, max_used.max(c)) {
          Some(false) => {}
          other => return other,
        }
        self.color[v] = 0;
      }
      Some(false)
    }
  }

  let mut search = Search { adj: &adj, order: &order, color: vec![0; verts.len()], d, nodes: 0, limit: node_limit };
  Ok(match search.go(0, 0) {
    Some(true) => {
      let coloring = Coloring::from_pairs(verts.iter().copied().zip(search.color.iter().copied()), d);
      debug_assert!(coloring.validate(complex).is_ok());
      ColoringSearch::Found(coloring)
    }
    Some(false) => ColoringSearch::NotColorable,
    None => ColoringSearch::Unknown,
  })
}

/// `Δ_S = {τ ∈ Δ : κ(τ) ⊆ S}`.
pub fn rank_selected(complex: &Complex, coloring: &Coloring, colors: &[u32]) -> Result<Complex> {
  coloring.validate(complex)?;
  if let Some(c) = colors.iter().find(|&&c| c == 0 || c > coloring.d()) {
    return Err(Error::InvalidColoring(format!("color {c} outside 1..={}", coloring.d())));
  }
  let removed: Vec<Vertex> =
    complex.vertices().iter().copied().filter(|v| !colors.contains(&coloring.colors[v])).collect();
  complex.delete(&removed)
}
