//! Data-parallel bridges. With the `parallel` feature (default) the subset
//! and tuple scans fan out over rayon; without it the same code runs
//! sequentially. Results are deterministic either way: maps preserve input
//! order and first-hit scans return the leftmost match.

#[cfg(feature = "parallel")]
pub fn filter_map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn filter_map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> Option<U>,
{
    items.iter().filter_map(f).collect()
}

/// Leftmost `Some` over `0..count`, identical to a sequential scan.
#[cfg(feature = "parallel")]
pub fn find_map_first<U, F>(count: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn find_map_first<U, F>(count: usize, f: F) -> Option<U>
where
    F: Fn(usize) -> Option<U>,
{
    (0..count).find_map(f)
}
