//! Face counts and the polynomial transforms built on them.
//!
//! Indexing conventions: `f[k]` is `f_{k-1}` (so `f[0] = f_{-1}`), `h[j]` is
//! `h_j` for `j = 0..=d`, and `short_h[j]` is `h̃_j` for `j = 0..d`.

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology::reduced_betti;
use crate::linalg::CoefficientField;

pub fn binomial(n: i64, k: i64) -> i64 {
  if k < 0 || n < 0 || k > n {
    return 0;
  }
  let k = k.min(n - k);
  (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of `(1 + m t)^d`.
pub fn one_plus_mt_pow(m: i64, d: usize) -> Vec<i64> {
  (0..=d as i64).map(|j| binomial(d as i64, j) * m.pow(j as u32)).collect()
}

/// `(f_{-1}, f_0, …, f_{dim})`; empty for the void complex.
pub fn f_vector(complex: &Complex) -> Vec<i64> {
  (0..complex.d() + usize::from(!complex.is_void())).map(|k| complex.face_count(k as i32 - 1) as i64).collect()
}

/// `h` from `f` for a complex of "rank" `d`, via
/// `Σ h_j λ^{d-j} = Σ f_{i-1} (λ-1)^{d-i}`. Missing `f` entries count as 0.
pub fn h_from_f(f: &[i64], d: usize) -> Vec<i64> {
  let fi = |i: usize| f.get(i).copied().unwrap_or(0);
  (0..=d)
    .map(|j| {
      (0..=j)
        .map(|i| {
          let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
          sign * binomial((d - i) as i64, (j - i) as i64) * fi(i)
        })
        .sum()
    })
    .collect()
}

/// Inverse of [`h_from_f`]: `f_{j-1} = Σ_{i≤j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Vec<i64> {
  let hi = |i: usize| h.get(i).copied().unwrap_or(0);
  (0..=d).map(|j| (0..=j).map(|i| binomial((d - i) as i64, (j - i) as i64) * hi(i)).sum()).collect()
}

/// `h_0..h_d` with `d = dim + 1`. Non-pure input is computed the same way;
/// callers that care should check [`Complex::is_pure`].
pub fn h_vector(complex: &Complex) -> Vec<i64> {
  if complex.is_void() {
    return Vec::new();
  }
  h_from_f(&f_vector(complex), complex.d())
}

/// `χ̃ = Σ_{i ≥ -1} (-1)^i f_i`.
pub fn reduced_euler_characteristic(complex: &Complex) -> i64 {
  f_vector(complex).iter().enumerate().map(|(k, &x)| if k % 2 == 1 { x } else { -x }).sum()
}

/// `h'` numbers together with the field their Betti corrections came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPrime {
  pub field:  CoefficientField,
  pub values: Vec<i64>,
}

impl HPrime {
  /// Coefficients of `h'_Δ(t) = Σ h'_j t^j`.
  pub fn polynomial(&self) -> &[i64] { &self.values }
}

/// `h'_j = h_j + C(d, j) Σ_{i=0}^{j-1} (-1)^{j-i-1} β̃_{i-1}`.
pub fn h_prime_vector(complex: &Complex, field: CoefficientField) -> Result<HPrime> {
  if complex.is_void() {
    return Err(Error::VoidComplex);
  }
  let d = complex.d();
  let h = h_vector(complex);
  let betti = reduced_betti(complex, field)?;
  let values = (0..=d)
    .map(|j| {
      let correction: i64 = (0..j)
        .map(|i| {
          let sign = if (j - i - 1) % 2 == 0 { 1 } else { -1 };
          sign * betti.get(i as i32 - 1) as i64
        })
        .sum();
      h[j] + binomial(d as i64, j as i64) * correction
    })
    .collect();
  Ok(HPrime { field, values })
}

/// `h̃_j = Σ_v h_j(lk v)` for `j = 0..d`, each link read with `d - 1`.
pub fn short_simplicial_h(complex: &Complex) -> Vec<i64> {
  let d = complex.d();
  if d == 0 {
    return Vec::new();
  }
  let mut out = vec![0i64; d];
  for &v in complex.vertices() {
    let link = complex.link_unchecked(&crate::complex::Face::vertex(v));
    for (j, x) in h_from_f(&f_vector(&link), d - 1).into_iter().enumerate() {
      out[j] += x;
    }
  }
  if cfg!(debug_assertions) && complex.is_pure() {
    let h = h_vector(complex);
    for j in 1..=d {
      debug_assert_eq!(
        out[j - 1],
        j as i64 * h[j] + (d - j + 1) as i64 * h[j - 1],
        "short h identity fails at j = {j} for {complex}"
      );
    }
  }
  out
}

/// Coefficientwise `a ≥ b`, padding the shorter sequence with zeros.
pub fn poly_geq(a: &[i64], b: &[i64]) -> bool {
  (0..a.len().max(b.len())).all(|j| a.get(j).copied().unwrap_or(0) >= b.get(j).copied().unwrap_or(0))
}

/// Everything countable about one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceVectors {
  pub f:           Vec<i64>,
  pub h:           Vec<i64>,
  pub h_prime:     HPrime,
  pub short_h:     Vec<i64>,
  pub chi_reduced: i64,
  pub pure:        bool,
}

impl FaceVectors {
  pub fn compute(complex: &Complex, field: CoefficientField) -> Result<FaceVectors> {
    if complex.is_void() {
      return Err(Error::VoidComplex);
    }
    Ok(FaceVectors {
      f:           f_vector(complex),
      h:           h_vector(complex),
      h_prime:     h_prime_vector(complex, field)?,
      short_h:     short_simplicial_h(complex),
      chi_reduced: reduced_euler_characteristic(complex),
      pure:        complex.is_pure(),
    })
  }
}

#[cfg(test)]
mod tests {
  use proptest::prelude::*;

  use super::*;
  use crate::constructions::{self, cross_polytope, multi_point_join};

  fn cx(facets: &[&[u32]]) -> Complex { Complex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap() }

  /// Independent expansion of `Σ f_{i-1} (λ-1)^{d-i}` as a polynomial in λ,
  /// read off from highest to lowest power.
  fn h_by_polynomial_expansion(f: &[i64], d: usize) -> Vec<i64> {
    let mut poly = vec![0i64; d + 1]; // poly[k] = coefficient of λ^k
    for i in 0..=d {
      // (λ-1)^{d-i}
      let mut term = vec![1i64];
      for _ in 0..d - i {
        let mut next = vec![0i64; term.len() + 1];
        for (k, c) in term.iter().enumerate() {
          next[k + 1] += c;
          next[k] -= c;
        }
        term = next;
      }
      for (k, c) in term.iter().enumerate() {
        poly[k] += f.get(i).copied().unwrap_or(0) * c;
      }
    }
    (0..=d).map(|j| poly[d - j]).collect()
  }

  #[test]
  fn f_vector_examples() {
    assert_eq!(f_vector(&cross_polytope(3).0), vec![1, 6, 12, 8]);
    assert_eq!(f_vector(&constructions::simplex_boundary(3)), vec![1, 4, 6, 4]);
    assert_eq!(f_vector(&multi_point_join(3, 2).0), vec![1, 6, 9]);
  }

  #[test]
  fn h_vector_examples() {
    let oct = cross_polytope(3).0;
    assert_eq!(h_vector(&oct), vec![1, 3, 3, 1]);
    assert_eq!(h_by_polynomial_expansion(&[1, 6, 12, 8], 3), vec![1, 3, 3, 1]);
    let st = constructions::stacked_cross_polytopal_sphere(9, 3).unwrap().0;
    assert_eq!(f_vector(&st), vec![1, 9, 21, 14]);
    assert_eq!(h_vector(&st), vec![1, 6, 6, 1]);
    for d in 1..=5 {
      let b = constructions::simplex_boundary(d);
      assert_eq!(h_vector(&b), vec![1; d + 1], "boundary of the {d}-simplex");
    }
  }

  #[test]
  fn h_prime_examples() {
    let oct = cross_polytope(3).0;
    assert_eq!(h_prime_vector(&oct, CoefficientField::Q).unwrap().values, h_vector(&oct));

    let two = cx(&[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
    assert_eq!(h_vector(&two), vec![1, 4, 1]);
    assert_eq!(h_prime_vector(&two, CoefficientField::Q).unwrap().values, vec![1, 4, 2]);

    let k33 = multi_point_join(3, 2).0;
    for field in [CoefficientField::Q, CoefficientField::F2] {
      let hp = h_prime_vector(&k33, field).unwrap();
      assert_eq!(hp.values, vec![1, 4, 4]);
      assert_eq!(hp.values, one_plus_mt_pow(2, 2));
      assert_eq!(hp.field, field);
    }
  }

  #[test]
  fn short_h_examples() {
    let oct = cross_polytope(3).0;
    let sh = short_simplicial_h(&oct);
    assert_eq!(sh, vec![6, 12, 6]);
    let h = h_vector(&oct);
    assert_eq!(sh[1], 2 * h[2] + 2 * h[1]);
    for d in 1..=4usize {
      let s = constructions::simplex(d - 1);
      let mut expect = vec![0; d];
      expect[0] = d as i64 + 0;
      // d vertices, each link a (d-2)-simplex with h = (1, 0, …)
      assert_eq!(short_simplicial_h(&s), expect);
    }
  }

  #[test]
  fn poly_geq_examples() {
    assert!(poly_geq(&[1, 6, 12, 8], &[1, 6, 12, 8]));
    assert!(!poly_geq(&[1, 3, 3, 1], &[1, 3, 4, 1]));
    let p33 = multi_point_join(3, 3).0;
    let hp = h_prime_vector(&p33, CoefficientField::Q).unwrap();
    assert_eq!(hp.values, vec![1, 6, 12, 8]);
    assert!(poly_geq(&hp.values, &one_plus_mt_pow(2, 3)));
    assert!(poly_geq(&[1, 2], &[1]));
    assert!(!poly_geq(&[1], &[1, 1]));
  }

  #[test]
  fn binomials() {
    assert_eq!(binomial(5, 2), 10);
    assert_eq!(binomial(4, 0), 1);
    assert_eq!(binomial(3, 4), 0);
    assert_eq!(one_plus_mt_pow(2, 3), vec![1, 6, 12, 8]);
  }

  proptest! {
    #[test]
    fn h_matches_polynomial_expansion(f in proptest::collection::vec(0i64..50, 1..7)) {
      let d = f.len() - 1;
      prop_assert_eq!(h_from_f(&f, d), h_by_polynomial_expansion(&f, d));
    }

    #[test]
    fn f_h_round_trip(f in proptest::collection::vec(-50i64..50, 1..8)) {
      let d = f.len() - 1;
      prop_assert_eq!(f_from_h(&h_from_f(&f, d), d), f);
    }
  }
}
