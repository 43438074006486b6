//! Exact linear algebra over the rationals and prime fields.
//!
//! Matrices carry arbitrary-precision integer entries. Each operation takes a
//! [`CoefficientField`] and eliminates in that field: normalized
//! [`BigRational`]s for `Q`, residues for `F_p`. Nothing here touches
//! floating point.
//!
//! Two storage layouts exist. [`Matrix`] picks the sparse one automatically
//! when fewer than a quarter of the entries are non-zero, and both layouts
//! have their own elimination routine; ranks agree between them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient field for homology and elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientField {
  Rationals,
  /// `F_p`; construct through [`CoefficientField::prime`] so that `p` is
  /// checked.
  Prime(u32),
}

impl CoefficientField {
  pub const Q: CoefficientField = CoefficientField::Rationals;
  pub const F2: CoefficientField = CoefficientField::Prime(2);
  pub const F3: CoefficientField = CoefficientField::Prime(3);

  pub fn rationals() -> Self { CoefficientField::Rationals }

  pub fn prime(p: u64) -> Result<Self> {
    if p > u32::MAX as u64 || !is_prime(p) {
      return Err(Error::NotPrime(p));
    }
    Ok(CoefficientField::Prime(p as u32))
  }

  pub fn characteristic(&self) -> u32 {
    match self {
      CoefficientField::Rationals => 0,
      CoefficientField::Prime(p) => *p,
    }
  }
}

fn is_prime(p: u64) -> bool {
  if p < 2 {
    return false;
  }
  let mut d = 2;
  while d * d <= p {
    if p % d == 0 {
      return false;
    }
    d += 1;
  }
  true
}

impl fmt::Display for CoefficientField {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      CoefficientField::Rationals => write!(f, "Q"),
      CoefficientField::Prime(p) => write!(f, "F{p}"),
    }
  }
}

impl FromStr for CoefficientField {
  type Err = Error;

  /// Accepts `q`/`Q`/`rationals` and `f<p>`/`F<p>` for a prime `p`.
  fn from_str(s: &str) -> Result<Self> {
    let t = s.trim().to_ascii_lowercase();
    if t == "q" || t == "rationals" || t == "qq" {
      return Ok(CoefficientField::Rationals);
    }
    if let Some(num) = t.strip_prefix('f') {
      if let Ok(p) = num.parse::<u64>() {
        return CoefficientField::prime(p);
      }
    }
    Err(Error::Lookup { kind: "field", name: s.to_string() })
  }
}

impl Serialize for CoefficientField {
  fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&self.to_string())
  }
}

impl<'de> Deserialize<'de> for CoefficientField {
  fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
  }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
  /// Row-major.
  Dense(Vec<BigInt>),
  /// Per row, `(column, value)` pairs sorted by column with no zeros.
  Sparse(Vec<Vec<(usize, BigInt)>>),
}

/// An integer matrix, interpreted over whichever field an operation asks for.
#[derive(Clone, Debug)]
pub struct Matrix {
  rows:    usize,
  cols:    usize,
  storage: Storage,
}

/// Below this fraction of non-zero entries the sparse layout is used.
pub const SPARSE_DENSITY_THRESHOLD: f64 = 0.25;

impl Matrix {
  pub fn zeros(rows: usize, cols: usize) -> Matrix {
    Matrix { rows, cols, storage: Storage::Sparse(vec![Vec::new(); rows]) }
  }

  pub fn identity(n: usize) -> Matrix {
    Matrix::from_entries(n, n, (0..n).map(|i| (i, i, BigInt::one())))
  }

  /// Builds from `(row, col, value)` triples; repeated positions are summed.
  /// Panics if an index is out of bounds.
  pub fn from_entries<I, T>(rows: usize, cols: usize, entries: I) -> Matrix
  where
    I: IntoIterator<Item = (usize, usize, T)>,
    T: Into<BigInt>,
  {
    let mut by_row: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); rows];
    for (i, j, v) in entries {
      assert!(i < rows && j < cols, "entry ({i}, {j}) outside {rows}x{cols}");
      by_row[i].push((j, v.into()));
    }
    for row in &mut by_row {
      row.sort_by_key(|(j, _)| *j);
      let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(row.len());
      for (j, v) in row.drain(..) {
        match merged.last_mut() {
          Some((lj, lv)) if *lj == j => *lv += v,
          _ => merged.push((j, v)),
        }
      }
      merged.retain(|(_, v)| !v.is_zero());
      *row = merged;
    }
    Matrix { rows, cols, storage: Storage::Sparse(by_row) }.auto_layout()
  }

  /// Panics on ragged input.
  pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Matrix {
    let cols = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
    let entries = rows
      .iter()
      .enumerate()
      .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone().into())))
      .collect::<Vec<(usize, usize, BigInt)>>();
    Matrix::from_entries(rows.len(), cols, entries)
  }

  /// Each inner vector becomes one column.
  pub fn from_columns<T: Into<BigInt> + Clone>(rows: usize, columns: &[Vec<T>]) -> Matrix {
    assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
    let entries = columns
      .iter()
      .enumerate()
      .flat_map(|(j, c)| c.iter().enumerate().map(move |(i, v)| (i, j, v.clone().into())))
      .collect::<Vec<(usize, usize, BigInt)>>();
    Matrix::from_entries(rows, columns.len(), entries)
  }

  fn auto_layout(self) -> Matrix {
    if self.density() < SPARSE_DENSITY_THRESHOLD {
      self.to_sparse()
    } else {
      self.to_dense()
    }
  }

  pub fn rows(&self) -> usize { self.rows }

  pub fn cols(&self) -> usize { self.cols }

  pub fn is_sparse(&self) -> bool { matches!(self.storage, Storage::Sparse(_)) }

  pub fn nnz(&self) -> usize {
    match &self.storage {
      Storage::Dense(v) => v.iter().filter(|x| !x.is_zero()).count(),
      Storage::Sparse(r) => r.iter().map(Vec::len).sum(),
    }
  }

  pub fn density(&self) -> f64 {
    if self.rows == 0 || self.cols == 0 {
      0.0
    } else {
      self.nnz() as f64 / (self.rows * self.cols) as f64
    }
  }

  pub fn get(&self, i: usize, j: usize) -> BigInt {
    assert!(i < self.rows && j < self.cols);
    match &self.storage {
      Storage::Dense(v) => v[i * self.cols + j].clone(),
      Storage::Sparse(r) => match r[i].binary_search_by_key(&j, |(c, _)| *c) {
        Ok(k) => r[i][k].1.clone(),
        Err(_) => BigInt::zero(),
      },
    }
  }

  fn sparse_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
    match &self.storage {
      Storage::Sparse(r) => r.clone(),
      Storage::Dense(v) => (0..self.rows)
        .map(|i| {
          (0..self.cols).filter_map(|j| {
            let x = &v[i * self.cols + j];
            (!x.is_zero()).then(|| (j, x.clone()))
          })
          .collect()
        })
        .collect(),
    }
  }

  fn dense_rows(&self) -> Vec<Vec<BigInt>> {
    match &self.storage {
      Storage::Dense(v) => v.chunks(self.cols.max(1)).take(self.rows).map(<[BigInt]>::to_vec).collect(),
      Storage::Sparse(r) => r
        .iter()
        .map(|row| {
          let mut out = vec![BigInt::zero(); self.cols];
          for (j, x) in row {
            out[*j] = x.clone();
          }
          out
        })
        .collect(),
    }
  }

  pub fn to_sparse(&self) -> Matrix {
    Matrix { rows: self.rows, cols: self.cols, storage: Storage::Sparse(self.sparse_rows()) }
  }

  pub fn to_dense(&self) -> Matrix {
    let flat = if self.cols == 0 { Vec::new() } else { self.dense_rows().into_iter().flatten().collect() };
    Matrix { rows: self.rows, cols: self.cols, storage: Storage::Dense(flat) }
  }

  pub fn transpose(&self) -> Matrix {
    let mut entries = Vec::with_capacity(self.nnz());
    for (i, row) in self.sparse_rows().into_iter().enumerate() {
      for (j, v) in row {
        entries.push((j, i, v));
      }
    }
    Matrix::from_entries(self.cols, self.rows, entries)
  }

  /// The submatrix made of the listed rows, in the given order.
  pub fn select_rows(&self, which: &[usize]) -> Matrix {
    let rows = self.sparse_rows();
    let entries = which
      .iter()
      .enumerate()
      .flat_map(|(new_i, &i)| rows[i].iter().map(move |(j, v)| (new_i, *j, v.clone())))
      .collect::<Vec<_>>();
    Matrix::from_entries(which.len(), self.cols, entries)
  }

  pub fn column(&self, j: usize) -> Vec<BigInt> { (0..self.rows).map(|i| self.get(i, j)).collect() }

  /// Appends a column.
  pub fn with_column(&self, col: &[BigInt]) -> Result<Matrix> {
    if col.len() != self.rows {
      return Err(Error::Shape(format!("column of length {} against {} rows", col.len(), self.rows)));
    }
    let mut entries: Vec<(usize, usize, BigInt)> = Vec::new();
    for (i, row) in self.sparse_rows().into_iter().enumerate() {
      entries.extend(row.into_iter().map(|(j, v)| (i, j, v)));
    }
    entries.extend(col.iter().enumerate().map(|(i, v)| (i, self.cols, v.clone())));
    Ok(Matrix::from_entries(self.rows, self.cols + 1, entries))
  }

  /// Integer product. Errors on mismatched inner dimensions.
  pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
    if self.cols != other.rows {
      return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
    }
    let b = other.sparse_rows();
    let mut entries = Vec::new();
    for (i, row) in self.sparse_rows().into_iter().enumerate() {
      for (k, a) in row {
        for (j, v) in &b[k] {
          entries.push((i, *j, &a * v));
        }
      }
    }
    Ok(Matrix::from_entries(self.rows, other.cols, entries))
  }

  /// Every entry vanishes in the field.
  pub fn is_zero_over(&self, field: CoefficientField) -> bool {
    self.sparse_rows().iter().flatten().all(|(_, v)| match field {
      CoefficientField::Rationals => v.is_zero(),
      CoefficientField::Prime(p) => (v % BigInt::from(p)).is_zero(),
    })
  }
}

impl PartialEq for Matrix {
  fn eq(&self, other: &Self) -> bool {
    self.rows == other.rows && self.cols == other.cols && self.sparse_rows() == other.sparse_rows()
  }
}

impl Eq for Matrix {}

// ---------------------------------------------------------------------------
// field arithmetic

trait Arith {
  type E: Clone + PartialEq;
  fn from_int(&self, v: &BigInt) -> Self::E;
  fn zero(&self) -> Self::E;
  fn one(&self) -> Self::E;
  fn is_zero(&self, a: &Self::E) -> bool;
  fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
  /// `a - f * b`
  fn sub_mul(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E;
  fn neg(&self, a: &Self::E) -> Self::E;
  fn inv(&self, a: &Self::E) -> Self::E;
}

struct Rat;

impl Arith for Rat {
  type E = BigRational;

  fn from_int(&self, v: &BigInt) -> BigRational { BigRational::from_integer(v.clone()) }

  fn zero(&self) -> BigRational { BigRational::zero() }

  fn one(&self) -> BigRational { BigRational::one() }

  fn is_zero(&self, a: &BigRational) -> bool { a.is_zero() }

  fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational { a * b }

  fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational { a - f * b }

  fn neg(&self, a: &BigRational) -> BigRational { -a }

  fn inv(&self, a: &BigRational) -> BigRational { a.recip() }
}

struct ModP(u64);

impl Arith for ModP {
  type E = u64;

  fn from_int(&self, v: &BigInt) -> u64 {
    let m = v.mod_floor(&BigInt::from(self.0));
    m.to_u64().expect("residue fits in u64")
  }

  fn zero(&self) -> u64 { 0 }

  fn one(&self) -> u64 { 1 }

  fn is_zero(&self, a: &u64) -> bool { *a == 0 }

  fn mul(&self, a: &u64, b: &u64) -> u64 { a * b % self.0 }

  fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 { (a + self.0 - f * b % self.0) % self.0 }

  fn neg(&self, a: &u64) -> u64 { (self.0 - a) % self.0 }

  fn inv(&self, a: &u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (*a % self.0, self.0 - 2, 1u64);
    while exp > 0 {
      if exp & 1 == 1 {
        acc = acc * base % self.0;
      }
      base = base * base % self.0;
      exp >>= 1;
    }
    acc
  }
}

/// Row echelon form by Gauss-Jordan elimination. The pivot in each column is
/// the first usable row, scanning columns left to right. With `reduce` the
/// pivot columns are cleared above the pivot too (RREF).
fn dense_echelon<A: Arith>(a: &A, rows: &mut [Vec<A::E>], cols: usize, reduce: bool) -> Vec<usize> {
  let mut pivots = Vec::new();
  let mut r = 0;
  for j in 0..cols {
    if r == rows.len() {
      break;
    }
    let Some(p) = (r..rows.len()).find(|&i| !a.is_zero(&rows[i][j])) else { continue };
    rows.swap(r, p);
    let inv = a.inv(&rows[r][j]);
    for x in rows[r][j..].iter_mut() {
      *x = a.mul(x, &inv);
    }
    let pivot_row = rows[r].clone();
    let start = if reduce { 0 } else { r + 1 };
    for i in start..rows.len() {
      if i == r || a.is_zero(&rows[i][j]) {
        continue;
      }
      let f = rows[i][j].clone();
      for (x, y) in rows[i][j..].iter_mut().zip(&pivot_row[j..]) {
        *x = a.sub_mul(x, &f, y);
      }
    }
    pivots.push(j);
    r += 1;
  }
  pivots
}

type SparseRow<E> = Vec<(usize, E)>;

/// `x - f * y` on sorted sparse rows.
fn sparse_axpy<A: Arith>(a: &A, x: &SparseRow<A::E>, f: &A::E, y: &SparseRow<A::E>) -> SparseRow<A::E> {
  let mut out = Vec::with_capacity(x.len() + y.len());
  let (mut i, mut j) = (0, 0);
  while i < x.len() || j < y.len() {
    if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
      out.push(x[i].clone());
      i += 1;
    } else if i == x.len() || y[j].0 < x[i].0 {
      let v = a.neg(&a.mul(f, &y[j].1));
      if !a.is_zero(&v) {
        out.push((y[j].0, v));
      }
      j += 1;
    } else {
      let v = a.sub_mul(&x[i].1, f, &y[j].1);
      if !a.is_zero(&v) {
        out.push((x[i].0, v));
      }
      i += 1;
      j += 1;
    }
  }
  out
}

/// Rank by inserting rows one at a time into a set of pivot rows keyed by
/// leading column.
fn sparse_rank<A: Arith>(a: &A, rows: Vec<SparseRow<A::E>>) -> usize {
  let mut pivots: HashMap<usize, SparseRow<A::E>> = HashMap::new();
  for mut row in rows {
    while let Some((lead, lv)) = row.first().cloned() {
      match pivots.get(&lead) {
        Some(p) => row = sparse_axpy(a, &row, &lv, p),
        None => {
          let inv = a.inv(&lv);
          for (_, x) in row.iter_mut() {
            *x = a.mul(x, &inv);
          }
          pivots.insert(lead, row);
          break;
        }
      }
    }
  }
  pivots.len()
}

fn convert_sparse<A: Arith>(a: &A, m: &Matrix) -> Vec<SparseRow<A::E>> {
  m.sparse_rows()
    .into_iter()
    .map(|row| {
      row.into_iter().map(|(j, v)| (j, a.from_int(&v))).filter(|(_, v)| !a.is_zero(v)).collect()
    })
    .collect()
}

fn convert_dense<A: Arith>(a: &A, m: &Matrix) -> Vec<Vec<A::E>> {
  m.dense_rows().into_iter().map(|row| row.iter().map(|v| a.from_int(v)).collect()).collect()
}

fn rank_with<A: Arith>(a: &A, m: &Matrix) -> usize {
  if m.is_sparse() {
    sparse_rank(a, convert_sparse(a, m))
  } else {
    let mut rows = convert_dense(a, m);
    dense_echelon(a, &mut rows, m.cols, false).len()
  }
}

/// Rank of `m` over `field`, using the elimination routine of its layout.
pub fn rank(m: &Matrix, field: CoefficientField) -> usize {
  if m.rows == 0 || m.cols == 0 {
    return 0;
  }
  match field {
    CoefficientField::Rationals => rank_with(&Rat, m),
    CoefficientField::Prime(p) => rank_with(&ModP(p as u64), m),
  }
}

/// Rank through the dense routine regardless of layout.
pub fn rank_dense(m: &Matrix, field: CoefficientField) -> usize { rank(&m.to_dense(), field) }

/// Rank through the sparse routine regardless of layout.
pub fn rank_sparse(m: &Matrix, field: CoefficientField) -> usize { rank(&m.to_sparse(), field) }

fn kernel_with<A: Arith>(a: &A, m: &Matrix) -> Vec<Vec<A::E>> {
  let mut rows = convert_dense(a, m);
  let pivots = dense_echelon(a, &mut rows, m.cols, true);
  let mut is_pivot = vec![false; m.cols];
  for &j in &pivots {
    is_pivot[j] = true;
  }
  (0..m.cols)
    .filter(|&f| !is_pivot[f])
    .map(|f| {
      let mut v = vec![a.zero(); m.cols];
      v[f] = a.one();
      for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = a.neg(&rows[r][f]);
      }
      v
    })
    .collect()
}

/// Scales a rational vector to a primitive integer vector.
fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
  let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
  let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
  let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
  if g.is_zero() || g.is_one() {
    ints
  } else {
    ints.into_iter().map(|x| x / &g).collect()
  }
}

/// A basis of the null space of `m` over `field`, one basis vector per
/// column. Over `Q` the vectors are scaled to primitive integer vectors; over
/// `F_p` entries are residues in `0..p`.
pub fn kernel_basis(m: &Matrix, field: CoefficientField) -> Matrix {
  let columns: Vec<Vec<BigInt>> = match field {
    CoefficientField::Rationals => {
      kernel_with(&Rat, m).iter().map(|v| primitive_integer(v)).map(normalize_sign).collect()
    }
    CoefficientField::Prime(p) => kernel_with(&ModP(p as u64), m)
      .into_iter()
      .map(|v| v.into_iter().map(BigInt::from).collect())
      .collect(),
  };
  let basis = Matrix::from_columns(m.cols, &columns);
  debug_assert_eq!(rank_sparse(m, field) + basis.cols(), m.cols(), "rank-nullity violated");
  basis
}

fn normalize_sign(v: Vec<BigInt>) -> Vec<BigInt> {
  match v.iter().find(|x| !x.is_zero()) {
    Some(x) if x.is_negative() => v.into_iter().map(|x| -x).collect(),
    _ => v,
  }
}

/// Dimension of the span of the columns of `vectors`.
pub fn span_dim(vectors: &Matrix, field: CoefficientField) -> usize { rank(vectors, field) }

/// Whether `v` lies in the column span of `span`.
pub fn contains(span: &Matrix, v: &[BigInt], field: CoefficientField) -> Result<bool> {
  let extended = span.with_column(v)?;
  Ok(rank(&extended, field) == rank(span, field))
}

#[cfg(test)]
mod tests {
  use proptest::prelude::*;

  use super::*;

  const FIELDS: [CoefficientField; 4] =
    [CoefficientField::Q, CoefficientField::F2, CoefficientField::F3, CoefficientField::Prime(7)];

  /// ∂₁ of the triangle boundary: rows = vertices {1},{2},{3},
  /// columns = edges {1,2},{1,3},{2,3}.
  fn triangle_boundary_d1() -> Matrix {
    Matrix::from_rows(&[vec![-1i64, -1, 0], vec![1, 0, -1], vec![0, 1, 1]])
  }

  #[test]
  fn field_parsing() {
    assert_eq!("q".parse::<CoefficientField>().unwrap(), CoefficientField::Q);
    assert_eq!("f2".parse::<CoefficientField>().unwrap(), CoefficientField::F2);
    assert_eq!("F7".parse::<CoefficientField>().unwrap(), CoefficientField::Prime(7));
    assert_eq!("f4".parse::<CoefficientField>().unwrap_err(), Error::NotPrime(4));
    assert!("z".parse::<CoefficientField>().is_err());
    assert_eq!(CoefficientField::prime(1).unwrap_err(), Error::NotPrime(1));
    assert_eq!(CoefficientField::F3.to_string(), "F3");
  }

  #[test]
  fn rank_examples() {
    for field in FIELDS {
      assert_eq!(rank(&Matrix::identity(5), field), 5);
      assert_eq!(rank(&triangle_boundary_d1(), field), 2);
    }
    let two = Matrix::from_rows(&[vec![2i64]]);
    assert_eq!(rank(&two, CoefficientField::Q), 1);
    assert_eq!(rank(&two, CoefficientField::F2), 0);
    assert_eq!(rank(&Matrix::zeros(3, 0), CoefficientField::Q), 0);
  }

  #[test]
  fn kernel_examples() {
    for field in FIELDS {
      let z = Matrix::from_rows(&vec![vec![0i64; 4]; 4]);
      assert_eq!(kernel_basis(&z, field).cols(), 4);

      let d1 = triangle_boundary_d1();
      let k = kernel_basis(&d1, field);
      assert_eq!(k.cols(), 1);
      assert!(d1.mul(&k).unwrap().is_zero_over(field));

      let inj = Matrix::from_rows(&[vec![1i64, 0], vec![0, 1], vec![1, 1]]);
      assert_eq!(kernel_basis(&inj, field).cols(), 0);
    }
    // the fundamental cycle {1,2} - {1,3} + {2,3}
    let k = kernel_basis(&triangle_boundary_d1(), CoefficientField::Q);
    assert_eq!(k.column(0), vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
  }

  #[test]
  fn span_examples() {
    let e1_e12 = Matrix::from_columns(2, &[vec![1i64, 0], vec![1, 1]]);
    assert_eq!(span_dim(&e1_e12, CoefficientField::Q), 2);
    let e1 = Matrix::from_columns(2, &[vec![1i64, 0]]);
    assert!(!contains(&e1, &[BigInt::zero(), BigInt::one()], CoefficientField::Q).unwrap());
    assert!(contains(&e1, &[BigInt::from(5), BigInt::zero()], CoefficientField::Q).unwrap());
    // the three edge boundaries of a triangle span a plane
    let cols = triangle_boundary_d1();
    assert_eq!(span_dim(&cols, CoefficientField::Q), 2);
    assert!(matches!(contains(&e1, &[BigInt::one()], CoefficientField::Q), Err(Error::Shape(_))));
  }

  #[test]
  fn layout_is_chosen_by_density() {
    assert!(Matrix::identity(10).is_sparse());
    assert!(!Matrix::from_rows(&[vec![1i64, 1], vec![1, 0]]).is_sparse());
  }

  #[test]
  fn mod_p_inverse() {
    let f = ModP(7);
    for a in 1..7u64 {
      assert_eq!(f.mul(&a, &f.inv(&a)), 1);
    }
  }

  fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
      proptest::collection::vec(proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -3i64..=3], c), r)
    })
  }

  proptest! {
    #[test]
    fn dense_and_sparse_ranks_agree(m in small_matrix()) {
      let m = Matrix::from_rows(&m);
      for field in FIELDS {
        prop_assert_eq!(rank_dense(&m, field), rank_sparse(&m, field));
      }
    }

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix()) {
      let m = Matrix::from_rows(&m);
      for field in FIELDS {
        prop_assert_eq!(rank(&m, field), rank(&m.transpose(), field));
      }
    }

    #[test]
    fn prime_rank_never_exceeds_rational_rank(m in small_matrix()) {
      let m = Matrix::from_rows(&m);
      let q = rank(&m, CoefficientField::Q);
      for field in FIELDS {
        prop_assert!(rank(&m, field) <= q);
      }
    }

    #[test]
    fn kernel_is_annihilated_and_complementary(m in small_matrix()) {
      let m = Matrix::from_rows(&m);
      for field in FIELDS {
        let k = kernel_basis(&m, field);
        prop_assert_eq!(rank(&m, field) + k.cols(), m.cols());
        prop_assert_eq!(rank(&k, field), k.cols());
        prop_assert!(m.mul(&k).unwrap().is_zero_over(field));
      }
    }
  }
}
