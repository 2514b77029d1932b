//! Exhaustive enumeration of small residuated lattices up to isomorphism,
//! and corpus-wide verification of every construction in the crate.

mod canon;
mod corpus;
mod lattices;
mod otimes;

pub use canon::{
    canonical_form, canonical_key, generic_names, is_isomorphic, lattice_key, CanonicalKey,
};
pub use corpus::{build_corpus, verify_corpus, Corpus, CorpusEntry, CorpusVerification, Tallies};
pub use lattices::enumerate_bounded_lattices;
pub use otimes::enumerate_residuated;

/// Smallest and largest carrier sizes the enumerators accept.
pub const MIN_SIZE: usize = 2;
pub const MAX_SIZE: usize = 6;
/// Default size cap for corpus runs.
pub const DEFAULT_CORPUS_SIZE: usize = 5;

/// Runs `f` on a pool of `jobs` threads, or on the caller's thread when `jobs <= 1`.
pub(crate) fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
