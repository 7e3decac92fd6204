#![allow(dead_code)]

use mrsd_core::DissimilarityMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent uniform weights in [0, 1); generally not metric.
pub fn uniform_weights(n: usize, rng: &mut ChaCha8Rng) -> DissimilarityMatrix {
    DissimilarityMatrix::from_fn(n, |_, _| rng.gen::<f64>()).unwrap()
}

#[derive(Debug, Clone, Copy)]
pub enum Norm {
    Manhattan,
    Euclidean,
}

/// Points uniform in the unit square.
pub fn square_points(n: usize, norm: Norm, rng: &mut ChaCha8Rng) -> DissimilarityMatrix {
    let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
    DissimilarityMatrix::from_points(&pts, |a, b| {
        let (dx, dy) = ((a.0 - b.0).abs(), (a.1 - b.1).abs());
        match norm {
            Norm::Manhattan => dx + dy,
            Norm::Euclidean => dx.hypot(dy),
        }
    })
    .unwrap()
}

pub fn line(xs: &[f64]) -> DissimilarityMatrix {
    DissimilarityMatrix::from_points(xs, |a, b| (a - b).abs()).unwrap()
}

pub fn instance_a() -> DissimilarityMatrix {
    line(&[0.0, 1.0, 10.0, 11.0])
}

/// Relative comparison that treats two infinities as equal.
pub fn close(a: f64, b: f64, rel: f64) -> bool {
    if a == b {
        return true;
    }
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

/// The (k-1)-th largest minimum-spanning-tree weight, computed with Prim's
/// algorithm so it does not depend on the library's Kruskal.
pub fn kth_largest_mst_weight(d: &DissimilarityMatrix, k: usize) -> f64 {
    let mut w = prim_weights(d);
    w.sort_by(|a, b| b.total_cmp(a));
    w[k - 2]
}

pub fn prim_weights(d: &DissimilarityMatrix) -> Vec<f64> {
    let n = d.len();
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    best[0] = 0.0;
    let mut out = Vec::with_capacity(n - 1);
    for step in 0..n {
        let u = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&a, &b| best[a].total_cmp(&best[b]))
            .unwrap();
        in_tree[u] = true;
        if step > 0 {
            out.push(best[u]);
        }
        for v in 0..n {
            if !in_tree[v] && d.get(u, v) < best[v] {
                best[v] = d.get(u, v);
            }
        }
    }
    out
}

pub fn report(name: &str, ok: bool, detail: &str) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name} failed: {detail}");
}
