//! Reduced simplicial homology over a field, relative homology of contrastar
//! pairs, and the surjectivity tests on top homology.
//!
//! Faces are oriented by their sorted vertex order and boundaries use the
//! usual alternating signs. Chains are augmented: the empty face spans degree
//! -1 and every vertex maps to it with coefficient 1.
//!
//! Relative groups `H̃(Δ, cost τ)` come from the quotient chain complex whose
//! degree-`j` basis is the `j`-faces containing `τ`. Induced maps on top
//! homology are coordinate projections of cycle spaces; the link isomorphism
//! is never used to compute them, so it stays available as an independent
//! check.

use std::collections::HashMap;
use std::sync::LazyLock;

use dashmap::DashMap;
use serde::Serialize;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::linalg::{self, CoefficientField, Matrix};

/// Augmented simplicial chain complex of a pair `(Δ, cost σ)`; `σ = ∅` gives
/// the absolute complex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
  field:      CoefficientField,
  /// `bases[i + 1]`: the `i`-faces in the basis, lexicographic.
  bases:      Vec<Vec<Face>>,
  /// `boundaries[i + 1] = ∂_i : C_i → C_{i-1}`; `∂_{-1}` is the zero map
  /// into the zero space.
  boundaries: Vec<Matrix>,
}

impl ChainComplex {
  pub fn field(&self) -> CoefficientField { self.field }

  pub fn top_degree(&self) -> i32 { self.bases.len() as i32 - 2 }

  /// Basis of `C_i`, empty outside the range of the complex.
  pub fn basis(&self, i: i32) -> &[Face] {
    if i < -1 {
      return &[];
    }
    self.bases.get((i + 1) as usize).map(Vec::as_slice).unwrap_or(&[])
  }

  /// `∂_i` as a `dim C_{i-1} × dim C_i` matrix.
  pub fn boundary(&self, i: i32) -> Option<&Matrix> {
    if i < -1 {
      return None;
    }
    self.boundaries.get((i + 1) as usize)
  }

  /// `∂_{i-1} ∘ ∂_i = 0` in every degree.
  pub fn is_complex(&self) -> bool {
    (0..=self.top_degree()).all(|i| match (self.boundary(i - 1), self.boundary(i)) {
      (Some(a), Some(b)) if a.cols() > 0 && b.rows() > 0 => a.mul(b).unwrap().is_zero_over(self.field),
      _ => true,
    })
  }

  fn rank_of(&self, i: i32) -> usize { self.boundary(i).map_or(0, |m| linalg::rank(m, self.field)) }

  /// `dim C_i - rank ∂_i - rank ∂_{i+1}` for each degree from -1 up.
  fn homology_dims(&self) -> Vec<usize> {
    let top = self.top_degree();
    let ranks: Vec<usize> = (-1..=top + 1).map(|i| self.rank_of(i)).collect();
    (-1..=top).map(|i| self.basis(i).len() - ranks[(i + 1) as usize] - ranks[(i + 2) as usize]).collect()
  }
}

/// Builds the boundary matrix from faces of `cols` to faces of `rows`,
/// dropping terms whose codimension-one face lies outside `rows`.
fn boundary_matrix(cols: &[Face], rows: &[Face], row_index: impl Fn(&Face) -> Option<usize>) -> Matrix {
  let mut entries = Vec::new();
  for (j, f) in cols.iter().enumerate() {
    for k in 0..f.len() {
      if let Some(i) = row_index(&f.without_index(k)) {
        entries.push((i, j, if k % 2 == 0 { 1i64 } else { -1 }));
      }
    }
  }
  Matrix::from_entries(rows.len(), cols.len(), entries)
}

fn containing(complex: &Complex, sigma: &Face, dim: i32) -> Vec<Face> {
  complex.faces_of_dim(dim).iter().filter(|f| sigma.is_subset_of(f)).cloned().collect()
}

/// Quotient chain complex `C(Δ) / C(cost σ)`. For `σ = ∅` this is the
/// augmented chain complex of `Δ`.
pub fn relative_chain_complex(complex: &Complex, sigma: &Face, field: CoefficientField) -> Result<ChainComplex> {
  let top = complex.dim().ok_or(Error::VoidComplex)?;
  if !complex.contains(sigma) {
    return Err(Error::FaceNotPresent(sigma.clone()));
  }
  let bases: Vec<Vec<Face>> = if sigma.is_empty() {
    (-1..=top).map(|i| complex.faces_of_dim(i).to_vec()).collect()
  } else {
    (-1..=top).map(|i| containing(complex, sigma, i)).collect()
  };
  let mut boundaries = Vec::with_capacity(bases.len());
  boundaries.push(Matrix::zeros(0, bases[0].len()));
  for i in 1..bases.len() {
    let rows = &bases[i - 1];
    let m = if sigma.is_empty() {
      boundary_matrix(&bases[i], rows, |f| complex.index_of(f))
    } else {
      let idx: HashMap<&Face, usize> = rows.iter().enumerate().map(|(k, f)| (f, k)).collect();
      boundary_matrix(&bases[i], rows, |f| idx.get(f).copied())
    };
    boundaries.push(m);
  }
  Ok(ChainComplex { field, bases, boundaries })
}

/// The augmented chain complex of a non-void complex.
pub fn chain_complex(complex: &Complex, field: CoefficientField) -> Result<ChainComplex> {
  relative_chain_complex(complex, &Face::empty(), field)
}

/// Reduced Betti numbers `β̃_{-1}, …, β̃_{dim}` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BettiVector {
  pub field:  CoefficientField,
  /// `values[i + 1] = β̃_i`.
  pub values: Vec<usize>,
}

impl BettiVector {
  /// `β̃_i`, zero outside the stored range.
  pub fn get(&self, i: i32) -> usize {
    if i < -1 {
      return 0;
    }
    self.values.get((i + 1) as usize).copied().unwrap_or(0)
  }

  /// `Σ (-1)^i β̃_i`.
  pub fn euler_characteristic(&self) -> i64 {
    self.values.iter().enumerate().map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) }).sum()
  }

  /// All `β̃_i` with `i < below` vanish.
  pub fn vanishes_below(&self, below: i32) -> bool { (-1..below).all(|i| self.get(i) == 0) }

  /// Equals the reduced Betti vector of a `dim`-sphere.
  pub fn is_sphere_like(&self, dim: i32) -> bool {
    (-1..self.values.len() as i32 - 1).all(|i| self.get(i) == usize::from(i == dim)) && self.get(dim) == 1
  }
}

type CacheKey = (CoefficientField, Vec<Face>);

/// Write-once memo of Betti vectors keyed by canonical facet list.
static BETTI_CACHE: LazyLock<DashMap<CacheKey, BettiVector>> = LazyLock::new(DashMap::new);

const BETTI_CACHE_LIMIT: usize = 1 << 18;

/// Drops every memoized Betti vector.
pub fn clear_cache() { BETTI_CACHE.clear(); }

/// Reduced Betti numbers, memoized per (complex, field).
pub fn reduced_betti(complex: &Complex, field: CoefficientField) -> Result<BettiVector> {
  if complex.is_void() {
    return Err(Error::VoidComplex);
  }
  let key = (field, complex.facets().to_vec());
  if let Some(hit) = BETTI_CACHE.get(&key) {
    return Ok(hit.clone());
  }
  let betti = reduced_betti_uncached(complex, field)?;
  if BETTI_CACHE.len() < BETTI_CACHE_LIMIT {
    // identical values may race in; either insert wins
    BETTI_CACHE.entry(key).or_insert_with(|| betti.clone());
  }
  Ok(betti)
}

pub fn reduced_betti_uncached(complex: &Complex, field: CoefficientField) -> Result<BettiVector> {
  let chains = chain_complex(complex, field)?;
  debug_assert!(chains.is_complex(), "boundary of boundary is not zero");
  let betti = BettiVector { field, values: chains.homology_dims() };
  debug_assert_eq!(
    betti.euler_characteristic(),
    crate::enumerative::reduced_euler_characteristic(complex),
    "Euler characteristic mismatch for {complex}"
  );
  Ok(betti)
}

fn require_nonempty_face(complex: &Complex, tau: &Face) -> Result<()> {
  if tau.is_empty() {
    return Err(Error::Domain("relative homology needs a non-empty face".into()));
  }
  if !complex.contains(tau) {
    return Err(Error::FaceNotPresent(tau.clone()));
  }
  Ok(())
}

/// All `dim H̃_i(Δ, cost τ)` for `i = -1..=dim Δ`.
pub fn relative_betti_vector(complex: &Complex, tau: &Face, field: CoefficientField) -> Result<BettiVector> {
  require_nonempty_face(complex, tau)?;
  let chains = relative_chain_complex(complex, tau, field)?;
  Ok(BettiVector { field, values: chains.homology_dims() })
}

/// `dim H̃_i(Δ, cost τ)` for a non-empty face `τ`.
pub fn relative_betti(complex: &Complex, tau: &Face, i: i32, field: CoefficientField) -> Result<usize> {
  let value = relative_betti_vector(complex, tau, field)?.get(i);
  #[cfg(debug_assertions)]
  {
    let link = complex.link_unchecked(tau);
    let shifted = reduced_betti(&link, field)?.get(i - tau.len() as i32);
    debug_assert_eq!(value, shifted, "relative homology of ({complex}, cost {tau}) in degree {i}");
  }
  Ok(value)
}

/// Top-degree boundary of the quotient by `cost σ`: columns are the top faces
/// containing `σ`, rows the codimension-one faces containing `σ`.
fn relative_top_boundary(complex: &Complex, sigma: &Face, top: i32) -> (Vec<Face>, Matrix) {
  let cols = containing(complex, sigma, top);
  let rows = containing(complex, sigma, top - 1);
  let idx: HashMap<&Face, usize> = rows.iter().enumerate().map(|(k, f)| (f, k)).collect();
  let m = boundary_matrix(&cols, &rows, |f| idx.get(f).copied());
  (cols, m)
}

fn relative_top_cycle_dim(complex: &Complex, sigma: &Face, top: i32, field: CoefficientField) -> usize {
  let (cols, m) = relative_top_boundary(complex, sigma, top);
  cols.len() - linalg::rank(&m, field)
}

/// Top cycles of a pure complex, reused across many surjectivity queries.
///
/// With no faces above the top dimension, `H̃_{d-1}(Δ) = ker ∂_{d-1}` and
/// the relative group `H̃_{d-1}(Δ, cost τ)` is the space of relative cycles,
/// so surjectivity of the restriction map is a rank comparison.
#[derive(Clone, Debug)]
pub struct TopRestriction<'a> {
  complex: &'a Complex,
  field:   CoefficientField,
  top:     i32,
  /// Basis of `ker ∂_{d-1}`, one column per cycle, rows indexed by the
  /// top faces in lexicographic order.
  cycles:  Matrix,
}

impl<'a> TopRestriction<'a> {
  pub fn new(complex: &'a Complex, field: CoefficientField) -> Result<Self> {
    let top = complex.dim().ok_or(Error::VoidComplex)?;
    if !complex.is_pure() {
      return Err(Error::NotPure);
    }
    let chains = chain_complex(complex, field)?;
    let cycles = linalg::kernel_basis(chains.boundary(top).expect("top boundary"), field);
    Ok(TopRestriction { complex, field, top, cycles })
  }

  /// `dim H̃_{d-1}(Δ)`.
  pub fn top_betti(&self) -> usize { self.cycles.cols() }

  /// Whether `H̃_{d-1}(Δ) → H̃_{d-1}(Δ, cost τ)` is onto. `τ` must be a
  /// non-empty face.
  pub fn surjective_at(&self, tau: &Face) -> bool {
    let target = relative_top_cycle_dim(self.complex, tau, self.top, self.field);
    if target == 0 {
      return true;
    }
    let rows: Vec<usize> = self
      .complex
      .faces_of_dim(self.top)
      .iter()
      .enumerate()
      .filter(|(_, f)| tau.is_subset_of(f))
      .map(|(k, _)| k)
      .collect();
    let image = linalg::rank(&self.cycles.select_rows(&rows), self.field);
    debug_assert!(image <= target);
    image == target
  }
}

/// Surjectivity of `ρ*: H̃_{d-1}(Δ) → H̃_{d-1}(Δ, cost τ)` for a pure `Δ` and a
/// non-empty face `τ`.
pub fn top_restriction_surjective(complex: &Complex, tau: &Face, field: CoefficientField) -> Result<bool> {
  require_nonempty_face(complex, tau)?;
  Ok(TopRestriction::new(complex, field)?.surjective_at(tau))
}

/// Surjectivity of `j*: H̃_{d-1}(Δ, cost σ) → H̃_{d-1}(Δ, cost τ)` for faces
/// `σ ⊆ τ` of a pure `Δ`. `σ = ∅` means the absolute group.
pub fn pair_restriction_surjective(
  complex: &Complex,
  sigma: &Face,
  tau: &Face,
  field: CoefficientField,
) -> Result<bool> {
  let top = complex.dim().ok_or(Error::VoidComplex)?;
  if !complex.is_pure() {
    return Err(Error::NotPure);
  }
  for f in [sigma, tau] {
    if !complex.contains(f) {
      return Err(Error::FaceNotPresent(f.clone()));
    }
  }
  if !sigma.is_subset_of(tau) {
    return Err(Error::Domain(format!("{sigma} is not contained in {tau}")));
  }
  if sigma == tau {
    return Ok(true);
  }
  let target = relative_top_cycle_dim(complex, tau, top, field);
  if target == 0 {
    return Ok(true);
  }
  let (source_cols, source_boundary) = if sigma.is_empty() {
    let chains = chain_complex(complex, field)?;
    (complex.faces_of_dim(top).to_vec(), chains.boundary(top).expect("top boundary").clone())
  } else {
    relative_top_boundary(complex, sigma, top)
  };
  let cycles = linalg::kernel_basis(&source_boundary, field);
  let rows: Vec<usize> =
    source_cols.iter().enumerate().filter(|(_, f)| tau.is_subset_of(f)).map(|(k, _)| k).collect();
  Ok(linalg::rank(&cycles.select_rows(&rows), field) == target)
}

#[cfg(test)]
mod tests {
  use num_bigint::BigInt;

  use super::*;
  use crate::constructions;

  const Q: CoefficientField = CoefficientField::Q;
  const F2: CoefficientField = CoefficientField::F2;

  fn cx(facets: &[&[u32]]) -> Complex { Complex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap() }

  fn face(vs: &[u32]) -> Face { Face::new(vs.iter().copied()).unwrap() }

  #[test]
  fn single_edge_chain_complex() {
    let edge = cx(&[&[1, 2]]);
    let c = chain_complex(&edge, Q).unwrap();
    let d1 = c.boundary(1).unwrap();
    assert_eq!(d1.column(0), vec![BigInt::from(-1), BigInt::from(1)]);
    let d0 = c.boundary(0).unwrap();
    assert_eq!((d0.rows(), d0.cols()), (1, 2));
    assert_eq!(d0.column(0), vec![BigInt::from(1)]);
  }

  #[test]
  fn triangle_boundary_d1_rank() {
    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    let c = chain_complex(&tri, Q).unwrap();
    let d1 = c.boundary(1).unwrap();
    assert_eq!((d1.rows(), d1.cols()), (3, 3));
    assert_eq!(linalg::rank(d1, Q), 2);
  }

  #[test]
  fn boundary_squares_to_zero() {
    for field in [Q, F2] {
      assert!(chain_complex(&constructions::cross_polytope(3).0, field).unwrap().is_complex());
      assert!(chain_complex(&constructions::named("rp2_min").unwrap(), field).unwrap().is_complex());
    }
  }

  #[test]
  fn betti_examples() {
    let oct = constructions::cross_polytope(3).0;
    assert_eq!(reduced_betti(&oct, Q).unwrap().values, vec![0, 0, 0, 1]);
    let rp2 = constructions::named("rp2_min").unwrap();
    assert_eq!(reduced_betti(&rp2, F2).unwrap().values, vec![0, 0, 1, 1]);
    assert_eq!(reduced_betti(&rp2, Q).unwrap().values, vec![0, 0, 0, 0]);
    assert_eq!(reduced_betti(&Complex::empty(), Q).unwrap().values, vec![1]);
    assert_eq!(reduced_betti(&Complex::void(), Q).unwrap_err(), Error::VoidComplex);
  }

  #[test]
  fn disjoint_union_adds_components() {
    let a = constructions::cross_polytope(3).0;
    let b = a.shifted(100);
    let u = Complex::from_faces(a.facets().iter().chain(b.facets()).cloned().collect());
    let ba = reduced_betti(&a, Q).unwrap();
    let bu = reduced_betti(&u, Q).unwrap();
    assert_eq!(bu.get(0), 2 * ba.get(0) + 1);
    for i in 1..=2 {
      assert_eq!(bu.get(i), 2 * ba.get(i));
    }
  }

  #[test]
  fn relative_betti_examples() {
    let oct = constructions::cross_polytope(3).0;
    assert_eq!(relative_betti(&oct, &face(&[0]), 2, Q).unwrap(), 1);
    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    assert_eq!(relative_betti(&tri, &face(&[1, 2]), 1, Q).unwrap(), 1);
    let cone = cx(&[&[0, 1, 2]]);
    assert_eq!(relative_betti(&cone, &face(&[0]), 2, Q).unwrap(), 0);
    assert!(matches!(relative_betti(&tri, &Face::empty(), 1, Q), Err(Error::Domain(_))));
    assert!(matches!(relative_betti(&tri, &face(&[1, 2, 3]), 1, Q), Err(Error::FaceNotPresent(_))));
  }

  #[test]
  fn top_restriction_examples() {
    let oct = constructions::cross_polytope(3).0;
    for field in [Q, F2, CoefficientField::F3] {
      for tau in oct.faces().filter(|f| !f.is_empty()) {
        assert!(top_restriction_surjective(&oct, tau, field).unwrap());
      }
    }
    let rp2 = constructions::named("rp2_min").unwrap();
    for v in rp2.vertices() {
      assert!(!top_restriction_surjective(&rp2, &Face::vertex(*v), Q).unwrap());
      assert!(top_restriction_surjective(&rp2, &Face::vertex(*v), F2).unwrap());
    }
    let bent = cx(&[&[0, 1, 2], &[2, 3]]);
    assert_eq!(top_restriction_surjective(&bent, &face(&[2]), Q).unwrap_err(), Error::NotPure);
  }

  #[test]
  fn pair_restriction_examples() {
    let oct = constructions::cross_polytope(3).0;
    let v = face(&[0]);
    let e = face(&[0, 2]);
    assert!(pair_restriction_surjective(&oct, &e, &e, Q).unwrap());
    assert!(pair_restriction_surjective(&oct, &v, &e, Q).unwrap());
    let rp2 = constructions::named("rp2_min").unwrap();
    let w = Face::vertex(rp2.vertices()[0]);
    assert!(!pair_restriction_surjective(&rp2, &Face::empty(), &w, Q).unwrap());
    assert!(matches!(pair_restriction_surjective(&oct, &e, &v, Q), Err(Error::Domain(_))));
  }
}
