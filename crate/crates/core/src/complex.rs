//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`Complex`] is immutable once built. Its full face table is computed
//! lazily on first use and shared afterwards, so a complex can be queried from
//! many threads at once.
//!
//! Two degenerate complexes are kept apart: the *void* complex has no faces at
//! all, while the *empty* complex `{∅}` has exactly one face, the empty face.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A vertex label. Labels are totally ordered and pairwise distinct within a
/// complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub u32);

impl From<u32> for Vertex {
  fn from(v: u32) -> Self { Vertex(v) }
}

impl fmt::Display for Vertex {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write!(f, "{}", self.0) }
}

/// A face: a strictly increasing sequence of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(SmallVec<[Vertex; 8]>);

impl Face {
  /// Sorts the given vertices; fails if one of them is repeated.
  pub fn new<I, V>(vertices: I) -> Result<Face>
  where
    I: IntoIterator<Item = V>,
    V: Into<Vertex>,
  {
    let mut vs: SmallVec<[Vertex; 8]> = vertices.into_iter().map(Into::into).collect();
    vs.sort_unstable();
    if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
      return Err(Error::MalformedFace(w[0]));
    }
    Ok(Face(vs))
  }

  pub fn empty() -> Face { Face(SmallVec::new()) }

  pub fn vertex(v: Vertex) -> Face { Face(smallvec::smallvec![v]) }

  pub fn vertices(&self) -> &[Vertex] { &self.0 }

  pub fn len(&self) -> usize { self.0.len() }

  pub fn is_empty(&self) -> bool { self.0.is_empty() }

  /// `|τ| - 1`; the empty face has dimension -1.
  pub fn dim(&self) -> i32 { self.0.len() as i32 - 1 }

  pub fn contains(&self, v: Vertex) -> bool { self.0.binary_search(&v).is_ok() }

  pub fn is_subset_of(&self, other: &Face) -> bool {
    if self.len() > other.len() {
      return false;
    }
    let mut it = other.0.iter();
    'outer: for v in &self.0 {
      for w in it.by_ref() {
        if w == v {
          continue 'outer;
        }
        if w > v {
          return false;
        }
      }
      return false;
    }
    true
  }

  pub fn is_disjoint(&self, other: &Face) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < self.len() && j < other.len() {
      match self.0[i].cmp(&other.0[j]) {
        std::cmp::Ordering::Less => i += 1,
        std::cmp::Ordering::Greater => j += 1,
        std::cmp::Ordering::Equal => return false,
      }
    }
    true
  }

  pub fn union(&self, other: &Face) -> Face {
    let mut out = SmallVec::with_capacity(self.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < self.len() || j < other.len() {
      if j == other.len() || (i < self.len() && self.0[i] < other.0[j]) {
        out.push(self.0[i]);
        i += 1;
      } else if i == self.len() || other.0[j] < self.0[i] {
        out.push(other.0[j]);
        j += 1;
      } else {
        out.push(self.0[i]);
        i += 1;
        j += 1;
      }
    }
    Face(out)
  }

  /// Vertices of `self` not in `other`.
  pub fn minus(&self, other: &Face) -> Face {
    Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
  }

  pub fn with(&self, v: Vertex) -> Face { self.union(&Face::vertex(v)) }

  /// The face with its `k`-th vertex removed.
  pub fn without_index(&self, k: usize) -> Face {
    let mut vs = self.0.clone();
    vs.remove(k);
    Face(vs)
  }

  pub fn without(&self, v: Vertex) -> Face {
    Face(self.0.iter().copied().filter(|&w| w != v).collect())
  }

  /// All subsets, including the empty face and the face itself.
  pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
    let n = self.len();
    assert!(n < 32, "face too large to enumerate subsets");
    (0u32..(1u32 << n)).map(move |mask| {
      Face((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
    })
  }

  /// All subsets with exactly `k` vertices, in lexicographic order.
  pub fn subsets_of_size(&self, k: usize) -> Vec<Face> {
    let mut out = Vec::new();
    if k > self.len() {
      return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
      out.push(Face(idx.iter().map(|&i| self.0[i]).collect()));
      // advance the combination
      let mut i = k;
      loop {
        if i == 0 {
          return out;
        }
        i -= 1;
        if idx[i] != i + self.len() - k {
          break;
        }
        if i == 0 && idx[0] == self.len() - k {
          return out;
        }
      }
      idx[i] += 1;
      for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }

  /// Graded order: by cardinality first, then lexicographically.
  pub fn graded_cmp(&self, other: &Face) -> std::cmp::Ordering {
    self.len().cmp(&other.len()).then_with(|| self.cmp(other))
  }
}

impl fmt::Display for Face {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, v) in self.0.iter().enumerate() {
      if i > 0 {
        write!(f, ",")?;
      }
      write!(f, "{v}")?;
    }
    write!(f, "}}")
  }
}

impl Serialize for Face {
  fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(self.0.iter())
  }
}

impl<'de> Deserialize<'de> for Face {
  fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
    let vs = Vec::<Vertex>::deserialize(d)?;
    Face::new(vs).map_err(serde::de::Error::custom)
  }
}

impl<'a> IntoIterator for &'a Face {
  type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;
  type Item = Vertex;

  fn into_iter(self) -> Self::IntoIter { self.0.iter().copied() }
}

impl FromIterator<Vertex> for Face {
  /// Panics on repeated vertices; use [`Face::new`] for untrusted input.
  fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
    Face::new(iter).expect("repeated vertex in face")
  }
}

#[derive(Clone, Debug)]
struct FaceTable {
  /// `by_dim[k + 1]` holds the faces of dimension `k`, sorted.
  by_dim: Vec<Vec<Face>>,
  /// Position of each face inside its dimension bucket.
  index:  HashMap<Face, usize>,
}

/// A simplicial complex, canonically represented by its inclusion-maximal
/// faces in lexicographic order.
#[derive(Clone, Debug)]
pub struct Complex {
  vertices: Vec<Vertex>,
  facets:   Vec<Face>,
  table:    OnceLock<FaceTable>,
}

impl PartialEq for Complex {
  fn eq(&self, other: &Self) -> bool { self.facets == other.facets }
}

impl Eq for Complex {}

impl std::hash::Hash for Complex {
  fn hash<H: std::hash::Hasher>(&self, state: &mut H) { self.facets.hash(state) }
}

impl Complex {
  /// Builds the complex generated by the given faces. Dominated faces are
  /// dropped; an empty list yields the void complex.
  pub fn from_facets<I, F, V>(facets: I) -> Result<Complex>
  where
    I: IntoIterator<Item = F>,
    F: IntoIterator<Item = V>,
    V: Into<Vertex>,
  {
    let faces = facets.into_iter().map(Face::new).collect::<Result<Vec<_>>>()?;
    Ok(Complex::from_faces(faces))
  }

  /// Canonicalizes an arbitrary generating set of faces.
  pub fn from_faces(mut faces: Vec<Face>) -> Complex {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
      if !kept.iter().any(|k| k.len() > f.len() && f.is_subset_of(k)) {
        kept.push(f);
      }
    }
    kept.sort_unstable();
    let mut vertices: Vec<Vertex> = kept.iter().flat_map(|f| f.vertices().iter().copied()).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Complex { vertices, facets: kept, table: OnceLock::new() }
  }

  /// The complex with no faces at all.
  pub fn void() -> Complex { Complex { vertices: vec![], facets: vec![], table: OnceLock::new() } }

  /// The complex `{∅}`.
  pub fn empty() -> Complex { Complex::from_faces(vec![Face::empty()]) }

  /// The full simplex on the given vertex set.
  pub fn full_simplex(face: Face) -> Complex { Complex::from_faces(vec![face]) }

  pub fn is_void(&self) -> bool { self.facets.is_empty() }

  pub fn vertices(&self) -> &[Vertex] { &self.vertices }

  pub fn num_vertices(&self) -> usize { self.vertices.len() }

  pub fn facets(&self) -> &[Face] { &self.facets }

  /// Maximum facet dimension; `None` for the void complex.
  pub fn dim(&self) -> Option<i32> { self.facets.iter().map(Face::dim).max() }

  /// `dim + 1`, the size of a largest facet (0 for the void complex).
  pub fn d(&self) -> usize { self.facets.iter().map(Face::len).max().unwrap_or(0) }

  /// All facets share one dimension. The void complex counts as pure.
  pub fn is_pure(&self) -> bool {
    self.facets.windows(2).all(|w| w[0].len() == w[1].len())
  }

  pub fn has_vertex(&self, v: Vertex) -> bool { self.vertices.binary_search(&v).is_ok() }

  fn table(&self) -> &FaceTable {
    self.table.get_or_init(|| {
      let mut set: HashSet<Face> = HashSet::new();
      for f in &self.facets {
        set.extend(f.subsets());
      }
      let mut by_dim = vec![Vec::new(); self.d() + usize::from(!self.is_void())];
      for f in set {
        by_dim[f.len()].push(f);
      }
      let mut index = HashMap::new();
      for bucket in &mut by_dim {
        bucket.sort_unstable();
        for (i, f) in bucket.iter().enumerate() {
          index.insert(f.clone(), i);
        }
      }
      FaceTable { by_dim, index }
    })
  }

  /// Faces of dimension exactly `k`, in lexicographic order. Out-of-range
  /// dimensions give an empty slice.
  pub fn faces_of_dim(&self, k: i32) -> &[Face] {
    if k < -1 {
      return &[];
    }
    self.table().by_dim.get((k + 1) as usize).map(Vec::as_slice).unwrap_or(&[])
  }

  pub fn face_count(&self, k: i32) -> usize { self.faces_of_dim(k).len() }

  /// Every face in graded order: by dimension, then lexicographically.
  pub fn faces(&self) -> impl Iterator<Item = &Face> + '_ { self.table().by_dim.iter().flatten() }

  pub fn num_faces(&self) -> usize { self.table().index.len() }

  pub fn contains(&self, face: &Face) -> bool { self.table().index.contains_key(face) }

  /// Position of `face` in [`Complex::faces_of_dim`] for its dimension.
  pub fn index_of(&self, face: &Face) -> Option<usize> { self.table().index.get(face).copied() }

  fn require_face(&self, tau: &Face) -> Result<()> {
    if self.contains(tau) {
      Ok(())
    } else {
      Err(Error::FaceNotPresent(tau.clone()))
    }
  }

  /// `lk(τ) = {σ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}`.
  pub fn link(&self, tau: &Face) -> Result<Complex> {
    self.require_face(tau)?;
    Ok(self.link_unchecked(tau))
  }

  pub(crate) fn link_unchecked(&self, tau: &Face) -> Complex {
    if tau.is_empty() {
      return self.clone();
    }
    let faces =
      self.facets.iter().filter(|f| tau.is_subset_of(f)).map(|f| f.minus(tau)).collect::<Vec<_>>();
    Complex::from_faces(faces)
  }

  /// `cost(τ) = {σ ∈ Δ : σ ⊉ τ}`. Undefined for the empty face.
  pub fn contrastar(&self, tau: &Face) -> Result<Complex> {
    if tau.is_empty() {
      return Err(Error::Domain("contrastar of the empty face is the void complex".into()));
    }
    self.require_face(tau)?;
    let mut faces = Vec::new();
    for f in &self.facets {
      if tau.is_subset_of(f) {
        faces.extend(tau.vertices().iter().map(|&v| f.without(v)));
      } else {
        faces.push(f.clone());
      }
    }
    Ok(Complex::from_faces(faces))
  }

  /// Restriction to `V(Δ) \ A`. Isolated vertices that survive are kept.
  pub fn delete(&self, removed: &[Vertex]) -> Result<Complex> {
    if let Some(v) = removed.iter().find(|v| !self.has_vertex(**v)) {
      return Err(Error::UnknownVertex(*v));
    }
    let gone = Face::new(removed.iter().copied())?;
    Ok(Complex::from_faces(self.facets.iter().map(|f| f.minus(&gone)).collect()))
  }

  /// The simplicial join; vertex sets must be disjoint.
  pub fn join(&self, other: &Complex) -> Result<Complex> {
    if let Some(v) = self.vertices.iter().find(|v| other.has_vertex(**v)) {
      return Err(Error::LabelCollision(*v));
    }
    let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
    for a in &self.facets {
      for b in &other.facets {
        faces.push(a.union(b));
      }
    }
    Ok(Complex::from_faces(faces))
  }

  /// All faces of dimension at most `j`. `j < -1` gives the void complex.
  pub fn skeleton(&self, j: i32) -> Complex {
    if j < -1 {
      return Complex::void();
    }
    let size = (j + 1) as usize;
    let mut faces = Vec::new();
    for f in &self.facets {
      if f.len() <= size {
        faces.push(f.clone());
      } else {
        faces.extend(f.subsets_of_size(size));
      }
    }
    Complex::from_faces(faces)
  }

  /// Minimal non-faces on the vertex set of the complex, in graded order.
  pub fn missing_faces(&self) -> Vec<Face> {
    if self.is_void() {
      return Vec::new();
    }
    let mut out = Vec::new();
    // size-k candidates extend a face of size k-1 by a larger vertex
    let mut size = 2;
    while size <= self.vertices.len() {
      let lower = self.faces_of_dim(size as i32 - 2);
      if lower.is_empty() {
        break;
      }
      for sigma in lower {
        let top = sigma.vertices().last().copied();
        for &v in self.vertices.iter().filter(|&&v| Some(v) > top) {
          let cand = sigma.with(v);
          if self.contains(&cand) {
            continue;
          }
          let all_sub = (0..cand.len()).all(|k| self.contains(&cand.without_index(k)));
          if all_sub {
            out.push(cand);
          }
        }
      }
      size += 1;
    }
    out.sort_unstable_by(Face::graded_cmp);
    out
  }

  /// Largest dimension of a missing face, or `None` when there is none.
  pub fn max_missing_face_dim(&self) -> Option<i32> { self.missing_faces().iter().map(Face::dim).max() }

  /// Every missing face is an edge.
  pub fn is_flag(&self) -> bool { self.missing_faces().iter().all(|f| f.len() == 2) }

  /// Components of the 1-skeleton, ordered by smallest vertex. Each
  /// component is returned as the subcomplex it spans.
  pub fn connected_components(&self) -> Vec<Complex> {
    let n = self.vertices.len();
    let pos: HashMap<Vertex, usize> = self.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
      while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
      }
      x
    }
    for f in &self.facets {
      let vs = f.vertices();
      for w in vs.windows(2) {
        let (a, b) = (find(&mut parent, pos[&w[0]]), find(&mut parent, pos[&w[1]]));
        if a != b {
          parent[a.max(b)] = a.min(b);
        }
      }
    }
    let mut groups: Vec<Vec<Face>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
      let r = find(&mut parent, i);
      if !slot.contains_key(&r) {
        slot.insert(r, groups.len());
        groups.push(Vec::new());
      }
    }
    for f in &self.facets {
      if let Some(v) = f.vertices().first() {
        let r = find(&mut parent, pos[v]);
        groups[slot[&r]].push(f.clone());
      }
    }
    groups.into_iter().map(Complex::from_faces).collect()
  }

  pub fn is_connected(&self) -> bool { self.connected_components().len() <= 1 }

  /// Applies an injective relabeling to every vertex.
  pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Complex {
    let faces = self
      .facets
      .iter()
      .map(|f| Face::new(f.vertices().iter().map(|&v| map(v))).expect("relabeling is not injective"))
      .collect();
    Complex::from_faces(faces)
  }

  /// Adds `offset` to every vertex label.
  pub fn shifted(&self, offset: u32) -> Complex { self.relabel(|v| Vertex(v.0 + offset)) }

  /// One more than the largest vertex label (0 when there are no vertices).
  pub fn label_bound(&self) -> u32 { self.vertices.last().map_or(0, |v| v.0 + 1) }
}

impl fmt::Display for Complex {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if self.is_void() {
      return write!(f, "void");
    }
    write!(f, "[")?;
    for (i, facet) in self.facets.iter().enumerate() {
      if i > 0 {
        write!(f, ", ")?;
      }
      write!(f, "{facet}")?;
    }
    write!(f, "]")
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  fn cx(facets: &[&[u32]]) -> Complex { Complex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap() }

  fn face(vs: &[u32]) -> Face { Face::new(vs.iter().copied()).unwrap() }

  fn octahedron() -> Complex {
    // antipodal pairs {0,1}, {2,3}, {4,5}
    let mut facets = Vec::new();
    for a in [0, 1] {
      for b in [2, 3] {
        for c in [4, 5] {
          facets.push(vec![a, b, c]);
        }
      }
    }
    Complex::from_facets(facets).unwrap()
  }

  /// Brute-force face enumeration over all vertex subsets.
  fn brute_faces(c: &Complex) -> Vec<Face> {
    let vs = Face::new(c.vertices().iter().copied()).unwrap();
    let mut out: Vec<Face> = vs.subsets().filter(|s| c.facets().iter().any(|f| s.is_subset_of(f))).collect();
    out.sort_unstable_by(Face::graded_cmp);
    out
  }

  #[test]
  fn build_examples() {
    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    assert_eq!(tri.dim(), Some(1));
    assert_eq!(tri.facets().len(), 3);
    assert_eq!(tri.num_vertices(), 3);

    let dominated = cx(&[&[1, 2, 3], &[2, 3]]);
    assert_eq!(dominated.facets(), &[face(&[1, 2, 3])]);

    let void = cx(&[]);
    assert!(void.is_void());
    assert_eq!(void.dim(), None);
    assert_ne!(void, Complex::empty());
    assert_eq!(Complex::empty().dim(), Some(-1));
    assert_eq!(Complex::empty().faces_of_dim(-1), &[Face::empty()]);
  }

  #[test]
  fn duplicate_vertex_is_malformed() {
    let err = Complex::from_facets(vec![vec![1u32, 2, 1]]).unwrap_err();
    assert_eq!(err, Error::MalformedFace(Vertex(1)));
  }

  #[test]
  fn faces_of_dim_examples() {
    let oct = octahedron();
    assert_eq!(oct.faces_of_dim(1).len(), 12);
    assert_eq!(oct.faces_of_dim(-1), &[Face::empty()]);
    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    assert!(tri.faces_of_dim(2).is_empty());
    assert!(tri.faces_of_dim(-5).is_empty());
    let edges = oct.faces_of_dim(1);
    assert!(edges.windows(2).all(|w| w[0] < w[1]));
  }

  #[test]
  fn face_table_matches_brute_force() {
    let c = cx(&[&[0, 1, 2], &[2, 3], &[3, 4, 5, 6], &[7]]);
    let got: Vec<Face> = c.faces().cloned().collect();
    assert_eq!(got, brute_faces(&c));
  }

  #[test]
  fn link_examples() {
    let oct = octahedron();
    assert_eq!(oct.link(&Face::empty()).unwrap(), oct);
    let lk = oct.link(&face(&[0])).unwrap();
    assert_eq!(lk.num_vertices(), 4);
    assert_eq!(lk.face_count(1), 4);
    assert_eq!(lk, cx(&[&[2, 4], &[2, 5], &[3, 4], &[3, 5]]));

    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    assert_eq!(tri.link(&face(&[1, 2])).unwrap(), Complex::empty());
    assert_eq!(tri.link(&face(&[1, 2, 3])).unwrap_err(), Error::FaceNotPresent(face(&[1, 2, 3])));
  }

  #[test]
  fn contrastar_examples() {
    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    let c = tri.contrastar(&face(&[1])).unwrap();
    let faces: Vec<Face> = c.faces().cloned().collect();
    assert_eq!(faces, vec![Face::empty(), face(&[2]), face(&[3]), face(&[2, 3])]);

    let oct = octahedron();
    let c = oct.contrastar(&face(&[0])).unwrap();
    let f: Vec<usize> = (-1..=2).map(|k| c.face_count(k)).collect();
    assert_eq!(f, vec![1, 5, 8, 4]);

    let simplex = cx(&[&[0, 1, 2]]);
    assert_eq!(simplex.contrastar(&face(&[0, 1, 2])).unwrap(), cx(&[&[0, 1], &[0, 2], &[1, 2]]));

    assert!(matches!(tri.contrastar(&Face::empty()), Err(Error::Domain(_))));
  }

  #[test]
  fn link_contrastar_partition_faces() {
    let oct = octahedron();
    for tau in oct.faces().filter(|f| !f.is_empty()) {
      let cost = oct.contrastar(tau).unwrap();
      let lk = oct.link(tau).unwrap();
      let mut combined: Vec<Face> = cost.faces().cloned().collect();
      combined.extend(lk.faces().map(|s| s.union(tau)));
      combined.sort_unstable_by(Face::graded_cmp);
      let all: Vec<Face> = oct.faces().cloned().collect();
      assert_eq!(combined, all, "tau = {tau}");
    }
  }

  #[test]
  fn delete_examples() {
    let oct = octahedron();
    assert_eq!(oct.delete(&[]).unwrap(), oct);
    let d = oct.delete(&[Vertex(0)]).unwrap();
    let f: Vec<usize> = (-1..=2).map(|k| d.face_count(k)).collect();
    assert_eq!(f, vec![1, 5, 8, 4]);

    // K_{3,3} on {0,1,2} x {3,4,5}
    let mut edges = Vec::new();
    for a in 0..3u32 {
      for b in 3..6u32 {
        edges.push(vec![a, b]);
      }
    }
    let k33 = Complex::from_facets(edges).unwrap();
    let k23 = k33.delete(&[Vertex(0)]).unwrap();
    assert_eq!(k23.num_vertices(), 5);
    assert_eq!(k23.face_count(1), 6);

    assert_eq!(oct.delete(&[Vertex(42)]).unwrap_err(), Error::UnknownVertex(Vertex(42)));
    // isolated vertices survive
    let path = cx(&[&[0, 1], &[1, 2]]);
    assert_eq!(path.delete(&[Vertex(1)]).unwrap(), cx(&[&[0], &[2]]));
    assert_eq!(cx(&[&[0]]).delete(&[Vertex(0)]).unwrap(), Complex::empty());
  }

  #[test]
  fn join_examples() {
    let p = cx(&[&[0]]);
    let q = cx(&[&[1]]);
    assert_eq!(p.join(&q).unwrap(), cx(&[&[0, 1]]));
    let a = cx(&[&[0], &[1]]);
    let b = cx(&[&[2], &[3]]);
    let c = cx(&[&[4], &[5]]);
    let square = a.join(&b).unwrap();
    assert_eq!(square, cx(&[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]));
    assert_eq!(square.join(&c).unwrap(), octahedron());
    assert_eq!(a.join(&a).unwrap_err(), Error::LabelCollision(Vertex(0)));
    assert_eq!(Complex::empty().join(&a).unwrap(), a);
    assert!(Complex::void().join(&a).unwrap().is_void());
  }

  #[test]
  fn join_face_counts_convolve() {
    let g = cx(&[&[0, 1, 2], &[2, 3]]);
    let h = cx(&[&[10, 11], &[11, 12], &[13]]);
    let j = g.join(&h).unwrap();
    let fg: Vec<usize> = (-1..=g.dim().unwrap()).map(|k| g.face_count(k)).collect();
    let fh: Vec<usize> = (-1..=h.dim().unwrap()).map(|k| h.face_count(k)).collect();
    assert_eq!(j.dim().unwrap(), g.dim().unwrap() + h.dim().unwrap() + 1);
    for k in -1..=j.dim().unwrap() {
      // f_k(G*H) = sum_{i+j=k-1} f_i(G) f_j(H), indices from -1
      let mut expect = 0;
      for (a, x) in fg.iter().enumerate() {
        for (b, y) in fh.iter().enumerate() {
          if a as i32 - 1 + b as i32 - 1 == k - 1 {
            expect += x * y;
          }
        }
      }
      assert_eq!(j.face_count(k), expect, "k = {k}");
    }
  }

  #[test]
  fn skeleton_examples() {
    let tri2 = cx(&[&[0, 1, 2]]);
    assert_eq!(tri2.skeleton(0), cx(&[&[0], &[1], &[2]]));
    let tet = cx(&[&[0, 1, 2, 3]]);
    let k4 = tet.skeleton(1);
    assert_eq!(k4.face_count(1), 6);
    assert_eq!(k4.dim(), Some(1));
    assert_eq!(octahedron().skeleton(1).face_count(1), 12);
    assert_eq!(octahedron().skeleton(5), octahedron());
    assert_eq!(octahedron().skeleton(-1), Complex::empty());
  }

  #[test]
  fn missing_face_examples() {
    let c4 = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
    assert_eq!(c4.missing_faces(), vec![face(&[1, 3]), face(&[2, 4])]);
    assert!(c4.is_flag());
    let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
    assert_eq!(tri.missing_faces(), vec![face(&[1, 2, 3])]);
    assert!(!tri.is_flag());
    assert_eq!(octahedron().missing_faces(), vec![face(&[0, 1]), face(&[2, 3]), face(&[4, 5])]);
  }

  #[test]
  fn missing_faces_match_brute_force() {
    let c = cx(&[&[0, 1, 2], &[1, 3], &[2, 3], &[3, 4], &[0, 4]]);
    let vs = Face::new(c.vertices().iter().copied()).unwrap();
    let mut brute: Vec<Face> = vs
      .subsets()
      .filter(|s| !c.contains(s) && (0..s.len()).all(|k| c.contains(&s.without_index(k))))
      .collect();
    brute.sort_unstable_by(Face::graded_cmp);
    assert_eq!(c.missing_faces(), brute);
  }

  #[test]
  fn component_examples() {
    assert_eq!(octahedron().connected_components().len(), 1);
    let two = cx(&[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
    let comps = two.connected_components();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[0], cx(&[&[0, 1], &[1, 2], &[0, 2]]));
    assert_eq!(cx(&[&[0], &[1], &[2]]).connected_components().len(), 3);
  }

  #[test]
  fn subsets_of_size_is_lexicographic() {
    let f = face(&[1, 2, 3, 4]);
    let s = f.subsets_of_size(2);
    assert_eq!(s, vec![face(&[1, 2]), face(&[1, 3]), face(&[1, 4]), face(&[2, 3]), face(&[2, 4]), face(&[3, 4])]);
    assert_eq!(f.subsets_of_size(0), vec![Face::empty()]);
    assert_eq!(f.subsets_of_size(4), vec![f.clone()]);
    assert!(f.subsets_of_size(5).is_empty());
  }
}
