//! Fixed inputs shared by the benchmarks.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trivext::algebra::{Algebra, LeftModule};
use trivext::catalog;
use trivext::linalg::{FieldSpec, FpMatrix};
use trivext::sample::random_module;
use trivext::trivext::TrivialExtension;

pub fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

/// Square matrix with seeded entries.
pub fn matrix(p: u32, n: usize, seed: u64) -> FpMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FpMatrix::random(gf(p), n, n, &mut rng)
}

pub fn module(a: &Arc<Algebra>, max_dim: usize, seed: u64) -> LeftModule {
    random_module(a, max_dim, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn triangular() -> TrivialExtension {
    catalog::triangular_extension(gf(3))
}

pub fn local_two_loops() -> Arc<Algebra> {
    Arc::new(catalog::local_two_loops(gf(2)))
}
