//! Random instance generators for the benchmarks.

use mrsd_core::DissimilarityMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Symmetric weights drawn uniformly from `[0, 1)`. Generally not metric.
pub fn uniform_weights(n: usize, seed: u64) -> DissimilarityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let x: f64 = rng.gen();
            w[i * n + j] = x;
            w[j * n + i] = x;
        }
    }
    DissimilarityMatrix::from_vec(n, w).expect("valid weights")
}

/// Euclidean distances between points uniform in the unit square.
pub fn square_points(n: usize, seed: u64) -> DissimilarityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
    DissimilarityMatrix::from_points(&pts, |a, b| (a.0 - b.0).hypot(a.1 - b.1))
        .expect("valid points")
}
