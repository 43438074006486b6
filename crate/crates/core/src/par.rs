//! Data-parallel helpers used by the classifiers and the verification suites.
//!
//! With the `parallel` feature (on by default) these fan out over rayon's
//! global pool; without it they run the same closures sequentially. Results
//! never depend on scheduling: searches return the match with the smallest
//! index, and maps preserve input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First `Some` produced by `f`, in input order.
#[cfg(feature = "parallel")]
pub fn find_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
  T: Sync,
  R: Send,
  F: Fn(&T) -> Option<R> + Sync + Send,
{
  items.par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn find_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
  F: Fn(&T) -> Option<R>,
{
  items.iter().find_map(f)
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
  T: Sync,
  R: Send,
  F: Fn(&T) -> R + Sync + Send,
{
  items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
  F: Fn(&T) -> R,
{
  items.iter().map(f).collect()
}

/// Maps over `0..n` in order.
#[cfg(feature = "parallel")]
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
  R: Send,
  F: Fn(usize) -> R + Sync + Send,
{
  (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
  F: Fn(usize) -> R,
{
  (0..n).map(f).collect()
}

pub fn all<T, F>(items: &[T], f: F) -> bool
where
  T: Sync,
  F: Fn(&T) -> bool + Sync + Send,
{
  find_first(items, |x| (!f(x)).then_some(())).is_none()
}

/// Whether this build fans out across threads.
pub const fn is_parallel() -> bool { cfg!(feature = "parallel") }

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn find_first_returns_smallest_index() {
    let xs: Vec<u32> = (0..10_000).collect();
    let hit = find_first(&xs, |&x| (x % 997 == 3 && x > 100).then_some(x));
    assert_eq!(hit, Some(1000));
  }

  #[test]
  fn map_preserves_order() {
    let xs: Vec<u32> = (0..1000).collect();
    assert_eq!(map(&xs, |x| x * 2), xs.iter().map(|x| x * 2).collect::<Vec<_>>());
    assert_eq!(map_range(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
    assert!(all(&xs, |&x| x < 1000));
    assert!(!all(&xs, |&x| x < 999));
  }
}
