//! Named families of complexes and the combinators that build them.
//!
//! Vertex labels are always `0..n`. Joins place factor `k` after the labels of
//! factors `0..k`, so a join of copies of one complex lists its vertices factor
//! by factor.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::Coloring;
use crate::complex::{Complex, Face, Vertex};
use crate::enumerative::binomial;
use crate::error::{Error, Result};

fn face_on(range: std::ops::Range<u32>) -> Face { Face::new(range.map(Vertex)).expect("distinct labels") }

/// `Σ^j`: the full simplex on `0..=j`.
pub fn simplex(j: usize) -> Complex { Complex::full_simplex(face_on(0..j as u32 + 1)) }

/// `∂Σ^j` for `j ≥ 1`.
pub fn simplex_boundary(j: usize) -> Complex {
  assert!(j >= 1, "the boundary of a point is not a simplicial complex here");
  simplex(j).skeleton(j as i32 - 1)
}

/// `q` isolated vertices.
fn points(q: usize) -> Complex { Complex::from_faces((0..q as u32).map(|v| Face::vertex(Vertex(v))).collect()) }

/// Joins the factors after shifting each one past its predecessors.
pub fn join_all_relabeled(factors: &[Complex]) -> Complex {
  factors.iter().fold(Complex::empty(), |acc, f| acc.join(&f.shifted(acc.label_bound())).expect("shifted apart"))
}

/// The coloring of a join of `d` factors of `q` vertices each by factor index.
fn factor_coloring(q: usize, d: usize) -> Coloring {
  Coloring::from_pairs((0..q * d).map(|v| (Vertex(v as u32), (v / q) as u32 + 1)), d as u32)
}

/// `P(q, d)`: the `d`-fold join of `q` points, colored by join factor.
pub fn multi_point_join(q: usize, d: usize) -> (Complex, Coloring) {
  assert!(q >= 1 && d >= 1, "P(q, d) needs q, d >= 1");
  (join_all_relabeled(&vec![points(q); d]), factor_coloring(q, d))
}

/// `P^×_d`, the boundary of the `d`-dimensional cross-polytope: `x_c = 2c - 2`
/// and `y_c = 2c - 1` both get color `c`.
pub fn cross_polytope(d: usize) -> (Complex, Coloring) { multi_point_join(2, d) }

fn require_facet(complex: &Complex, facet: &Face) -> Result<()> {
  if complex.facets().binary_search(facet).is_err() {
    return Err(Error::Construction(format!("{facet} is not a facet")));
  }
  Ok(())
}

/// Connected sum along `F₁ ∈ Δ₁` and `F₂ ∈ Δ₂`, identifying `φ(v) ∈ F₂` with
/// `v ∈ F₁`. The remaining vertices of `Δ₂` are renamed to fresh labels after
/// those of `Δ₁`, in increasing order. The identified facet is removed; its
/// proper faces stay.
///
/// Returns the sum and the map from old `Δ₂` labels to new ones.
pub fn connected_sum_with_map(
  first: &Complex,
  f1: &Face,
  second: &Complex,
  f2: &Face,
  phi: &BTreeMap<Vertex, Vertex>,
) -> Result<(Complex, BTreeMap<Vertex, Vertex>)> {
  require_facet(first, f1)?;
  require_facet(second, f2)?;
  if f1.len() != f2.len() {
    return Err(Error::Construction(format!("{f1} and {f2} have different dimensions")));
  }
  let mut image: Vec<Vertex> = f1.vertices().iter().filter_map(|v| phi.get(v).copied()).collect();
  image.sort_unstable();
  if phi.len() != f1.len() || phi.keys().ne(f1.vertices().iter()) || image != f2.vertices() {
    return Err(Error::Construction(format!("the identification is not a bijection from {f1} onto {f2}")));
  }
  let mut rename: BTreeMap<Vertex, Vertex> = phi.iter().map(|(a, b)| (*b, *a)).collect();
  let mut next = first.label_bound();
  for &v in second.vertices() {
    rename.entry(v).or_insert_with(|| {
      next += 1;
      Vertex(next - 1)
    });
  }
  let moved = second.relabel(|v| rename[&v]);
  let mut faces: Vec<Face> = first.facets().iter().chain(moved.facets()).filter(|f| *f != f1).cloned().collect();
  faces.extend((0..f1.len()).map(|k| f1.without_index(k)));
  Ok((Complex::from_faces(faces), rename))
}

pub fn connected_sum(
  first: &Complex,
  f1: &Face,
  second: &Complex,
  f2: &Face,
  phi: &BTreeMap<Vertex, Vertex>,
) -> Result<Complex> {
  connected_sum_with_map(first, f1, second, f2, phi).map(|(c, _)| c)
}

/// Connected sum of balanced complexes along facets, identifying vertices of
/// equal color.
pub fn connected_sum_colored(
  first: (&Complex, &Coloring),
  f1: &Face,
  second: (&Complex, &Coloring),
  f2: &Face,
) -> Result<(Complex, Coloring)> {
  let (c1, k1) = first;
  let (c2, k2) = second;
  if k1.d() != k2.d() {
    return Err(Error::Construction(format!("colorings use {} and {} colors", k1.d(), k2.d())));
  }
  let by_color: BTreeMap<u32, Vertex> = f2.vertices().iter().filter_map(|v| k2.color(*v).map(|c| (c, *v))).collect();
  let mut phi = BTreeMap::new();
  for &v in f1.vertices() {
    let c = k1.color(v).ok_or_else(|| Error::Construction(format!("vertex {v} has no color")))?;
    let w = by_color.get(&c).ok_or_else(|| Error::Construction(format!("color {c} does not occur on {f2}")))?;
    phi.insert(v, *w);
  }
  let (sum, rename) = connected_sum_with_map(c1, f1, c2, f2, &phi)?;
  let mut colors: BTreeMap<Vertex, u32> = k1.iter().collect();
  for (v, c) in k2.iter() {
    let w = rename[&v];
    if let Some(old) = colors.insert(w, c) {
      if old != c {
        return Err(Error::Construction(format!("vertex {w} gets colors {old} and {c}")));
      }
    }
  }
  Ok((sum, Coloring::new(colors, k1.d())))
}

/// `ST^×(n, d)`: the connected sum of `n/d - 1` copies of `P^×_d`. Each new
/// copy is glued along its first facet `{x_1, …, x_d}` to the lexicographically
/// last facet of the sum so far, matching colors.
pub fn stacked_cross_polytopal_sphere(n: usize, d: usize) -> Result<(Complex, Coloring)> {
  if d < 2 {
    return Err(Error::Construction(format!("stacked cross-polytopal spheres need d >= 2, got {d}")));
  }
  if n % d != 0 {
    return Err(Error::Construction(format!("{d} does not divide {n}")));
  }
  if n < 2 * d {
    return Err(Error::Construction(format!("need n >= 2d, got n = {n}, d = {d}")));
  }
  let (copy, copy_coloring) = cross_polytope(d);
  let glue = copy.facets()[0].clone();
  let mut acc = (copy.clone(), copy_coloring.clone());
  for _ in 1..n / d - 1 {
    let last = acc.0.facets().last().expect("non-void").clone();
    acc = connected_sum_colored((&acc.0, &acc.1), &last, (&copy, &copy_coloring), &glue)?;
  }
  debug_assert_eq!(acc.0.num_vertices(), n);
  Ok(acc)
}

/// `S(m, i, d-1) = Skel_{i-1}(Σ^{m+i-2})^{*q} * Skel_{r-1}(Σ^{m+r-2})` where
/// `d = q i + r` and `1 ≤ r ≤ i`.
pub fn skeleton_join_sphere(m: usize, i: usize, d: usize) -> Result<Complex> {
  if m < 2 || i < 1 || d < 1 {
    return Err(Error::Construction(format!("S(m, i, d-1) needs m >= 2, i >= 1, d >= 1; got ({m}, {i}, {d})")));
  }
  let q = (d - 1) / i;
  let r = d - q * i;
  let block = |k: usize| simplex(m + k - 2).skeleton(k as i32 - 1);
  let mut factors = vec![block(i); q];
  factors.push(block(r));
  Ok(join_all_relabeled(&factors))
}

// ---------------------------------------------------------------------------
// fixtures

/// A curated complex with its reduced Betti vectors (`values[i + 1] = β̃_i`).
#[derive(Clone, Debug)]
pub struct Fixture {
  pub name:     &'static str,
  pub complex:  Complex,
  pub betti_q:  Vec<usize>,
  pub betti_f2: Vec<usize>,
}

pub const FIXTURE_NAMES: &[&str] = &[
  "bowtie2d",
  "cone_over_4cycle",
  "k33",
  "octahedron",
  "path2",
  "rp2_min",
  "suspended_hexagon",
  "torus7",
  "triangle_boundary",
  "triangle_plus_pendant",
  "two_disjoint_edges",
  "two_octahedra_disjoint",
  "two_triangle_boundaries",
];

fn cx(facets: &[&[u32]]) -> Complex {
  Complex::from_facets(facets.iter().map(|f| f.iter().copied())).expect("fixture faces are well formed")
}

fn disjoint(a: &Complex, b: &Complex) -> Complex {
  Complex::from_faces(a.facets().iter().chain(b.shifted(a.label_bound()).facets()).cloned().collect())
}

pub fn fixture(name: &str) -> Result<Fixture> {
  let (name, complex, betti_q, betti_f2): (&'static str, Complex, Vec<usize>, Vec<usize>) = match name {
    "rp2_min" => (
      "rp2_min",
      cx(&[
        &[0, 1, 2],
        &[0, 2, 3],
        &[0, 3, 4],
        &[0, 4, 5],
        &[0, 1, 5],
        &[1, 2, 4],
        &[2, 3, 5],
        &[1, 3, 4],
        &[2, 4, 5],
        &[1, 3, 5],
      ]),
      vec![0, 0, 0, 0],
      vec![0, 0, 1, 1],
    ),
    "torus7" => {
      let facets: Vec<Vec<u32>> =
        (0..7u32).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]]).collect();
      ("torus7", Complex::from_facets(facets).expect("well formed"), vec![0, 0, 2, 1], vec![0, 0, 2, 1])
    }
    "bowtie2d" => ("bowtie2d", cx(&[&[0, 1, 2], &[0, 3, 4]]), vec![0; 4], vec![0; 4]),
    "path2" => ("path2", cx(&[&[0, 1], &[1, 2]]), vec![0; 3], vec![0; 3]),
    "octahedron" => ("octahedron", cross_polytope(3).0, vec![0, 0, 0, 1], vec![0, 0, 0, 1]),
    "two_octahedra_disjoint" => {
      let oct = cross_polytope(3).0;
      ("two_octahedra_disjoint", disjoint(&oct, &oct), vec![0, 1, 0, 2], vec![0, 1, 0, 2])
    }
    "triangle_boundary" => ("triangle_boundary", simplex_boundary(2), vec![0, 0, 1], vec![0, 0, 1]),
    "two_triangle_boundaries" => {
      let t = simplex_boundary(2);
      ("two_triangle_boundaries", disjoint(&t, &t), vec![0, 1, 2], vec![0, 1, 2])
    }
    "two_disjoint_edges" => ("two_disjoint_edges", cx(&[&[0, 1], &[2, 3]]), vec![0, 1, 0], vec![0, 1, 0]),
    "cone_over_4cycle" => (
      "cone_over_4cycle",
      cx(&[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 1, 4]]),
      vec![0; 4],
      vec![0; 4],
    ),
    "k33" => ("k33", multi_point_join(3, 2).0, vec![0, 0, 4], vec![0, 0, 4]),
    "suspended_hexagon" => {
      // hexagon 0..6, poles 6 and 7
      let facets: Vec<Vec<u32>> = (0..6u32).flat_map(|i| [vec![i, (i + 1) % 6, 6], vec![i, (i + 1) % 6, 7]]).collect();
      ("suspended_hexagon", Complex::from_facets(facets).expect("well formed"), vec![0, 0, 0, 1], vec![0, 0, 0, 1])
    }
    "triangle_plus_pendant" => {
      ("triangle_plus_pendant", cx(&[&[0, 1], &[1, 2], &[0, 2], &[2, 3]]), vec![0, 0, 1], vec![0, 0, 1])
    }
    other => return Err(Error::Lookup { kind: "fixture", name: other.to_string() }),
  };
  Ok(Fixture { name, complex, betti_q, betti_f2 })
}

/// The complex of a registered fixture.
pub fn named(name: &str) -> Result<Complex> { fixture(name).map(|f| f.complex) }

pub fn fixtures() -> Vec<Fixture> { FIXTURE_NAMES.iter().map(|n| fixture(n).expect("registered")).collect() }

// ---------------------------------------------------------------------------
// families by name

/// Builds a family from its name and integer parameters:
/// `simplex j`, `simplex-boundary j`, `cross-polytope d`,
/// `multi-point-join q d`, `stacked n d`, `skeleton-join m i d`, or a fixture
/// name with no parameters.
pub fn family(name: &str, params: &[usize]) -> Result<(Complex, Option<Coloring>)> {
  let want = |k: usize| -> Result<()> {
    if params.len() == k {
      Ok(())
    } else {
      Err(Error::Construction(format!("{name} takes {k} parameter(s), got {}", params.len())))
    }
  };
  let positive = |what: &str, x: usize| -> Result<usize> {
    if x == 0 {
      Err(Error::Construction(format!("{what} must be positive")))
    } else {
      Ok(x)
    }
  };
  match name {
    "simplex" => {
      want(1)?;
      Ok((simplex(params[0]), None))
    }
    "simplex-boundary" => {
      want(1)?;
      Ok((simplex_boundary(positive("j", params[0])?), None))
    }
    "cross-polytope" => {
      want(1)?;
      let (c, k) = cross_polytope(positive("d", params[0])?);
      Ok((c, Some(k)))
    }
    "multi-point-join" => {
      want(2)?;
      let (c, k) = multi_point_join(positive("q", params[0])?, positive("d", params[1])?);
      Ok((c, Some(k)))
    }
    "stacked" => {
      want(2)?;
      let (c, k) = stacked_cross_polytopal_sphere(params[0], params[1])?;
      Ok((c, Some(k)))
    }
    "skeleton-join" => {
      want(3)?;
      Ok((skeleton_join_sphere(params[0], params[1], params[2])?, None))
    }
    _ => {
      want(0)?;
      Ok((named(name)?, None))
    }
  }
}

// ---------------------------------------------------------------------------
// random complexes

/// `facet_count` distinct `dim`-faces on `0..n`, drawn uniformly without
/// replacement. Deterministic in `seed`.
pub fn random_pure_complex(seed: u64, n: usize, dim: usize, facet_count: usize) -> Result<Complex> {
  let k = dim + 1;
  let total = binomial(n as i64, k as i64);
  if k > n || facet_count == 0 || facet_count as i64 > total {
    return Err(Error::Infeasible(format!("cannot draw {facet_count} faces of dimension {dim} on {n} vertices")));
  }
  let all = face_on(0..n as u32).subsets_of_size(k);
  let mut rng = ChaCha8Rng::seed_from_u64(seed);
  let picks = sample(&mut rng, all.len(), facet_count);
  Ok(Complex::from_faces(picks.into_iter().map(|i| all[i].clone()).collect()))
}

/// A balanced complex: vertex `v` gets color `v mod d + 1`, and `facet_count`
/// rainbow facets are drawn uniformly without replacement. The vertex set may
/// come out smaller than `n`.
pub fn random_balanced_complex(seed: u64, n: usize, d: usize, facet_count: usize) -> Result<(Complex, Coloring)> {
  if d == 0 || n < d {
    return Err(Error::Infeasible(format!("cannot color {n} vertices with {d} colors rainbow-wise")));
  }
  let classes: Vec<Vec<u32>> = (0..d).map(|c| (c as u32..n as u32).step_by(d).collect()).collect();
  let total: usize = classes.iter().map(Vec::len).product();
  if facet_count == 0 || facet_count > total {
    return Err(Error::Infeasible(format!("only {total} rainbow facets exist, asked for {facet_count}")));
  }
  let mut rng = ChaCha8Rng::seed_from_u64(seed);
  let facets = sample(&mut rng, total, facet_count)
    .into_iter()
    .map(|mut code| {
      Face::new(classes.iter().map(|class| {
        let v = class[code % class.len()];
        code /= class.len();
        v
      }))
      .expect("one vertex per color")
    })
    .collect();
  let complex = Complex::from_faces(facets);
  let coloring = Coloring::from_pairs(complex.vertices().iter().map(|v| (*v, v.0 % d as u32 + 1)), d as u32);
  Ok((complex, coloring))
}
