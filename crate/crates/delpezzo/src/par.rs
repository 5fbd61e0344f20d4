//! Data-parallel map with a sequential fallback.
//!
//! Batch verification (report rows, stability batches, classification
//! scans) is embarrassingly parallel over immutable inputs. With the
//! `parallel` feature the maps run on rayon; without it they degrade to
//! plain iterators. Output order matches input order either way.

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential variant kept callable for benchmarking against the
/// parallel path.
pub(crate) fn map_vec_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
