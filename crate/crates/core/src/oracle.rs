//! Exhaustive ground truth. Everything here evaluates split and diameter
//! straight from the matrix over enumerated label strings and shares no code
//! with the contraction-based solvers.

use crate::error::{Error, Result};
use crate::metric::{cost, ClusteringResult, DissimilarityMatrix, Partition};

/// Largest number of partitions [`brute_force_mrsd`] will evaluate.
pub const MAX_ENUMERATION: u128 = 10_000_000;

/// Largest `n` accepted by [`brute_force_min_diameter_bipartition`].
pub const MAX_BIPARTITION_OBJECTS: usize = 20;

/// Stirling number of the second kind, `S(n, k)`, saturating at
/// `u128::MAX`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = (j as u128)
                .saturating_mul(row[j])
                .saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

/// Restricted-growth strings of length `n` with exactly `k` distinct
/// values, in lexicographic order. Each one is a canonical partition label
/// vector.
#[derive(Debug, Clone)]
pub struct PartitionEnumerator {
    n: usize,
    k: usize,
    state: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionEnumerator {
    pub fn new(n: usize, k: usize) -> Self {
        let done = k == 0 || k > n;
        let mut state = vec![0; n];
        if !done {
            // Smallest string: zeros, then 1..k-1 packed at the end.
            for (slot, label) in state[n - (k - 1)..].iter_mut().zip(1..) {
                *slot = label;
            }
        }
        Self {
            n,
            k,
            state,
            started: false,
            done,
        }
    }

    /// Advances to the next string and returns it.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.state);
        }
        let (n, k) = (self.n, self.k);
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.state[i]);
        }
        for i in (1..n).rev() {
            let before = prefix_max[i - 1];
            let cap = (before + 1).min(k - 1);
            let next = self.state[i] + 1;
            if next > cap {
                continue;
            }
            let top = before.max(next);
            let missing = k - 1 - top;
            if missing > n - 1 - i {
                continue;
            }
            self.state[i] = next;
            let tail = &mut self.state[i + 1..];
            let zeros = tail.len() - missing;
            tail[..zeros].fill(0);
            for (slot, label) in tail[zeros..].iter_mut().zip(top + 1..) {
                *slot = label;
            }
            return Some(&self.state);
        }
        self.done = true;
        None
    }
}

impl Iterator for PartitionEnumerator {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

fn split_of(labels: &[usize], d: &DissimilarityMatrix) -> f64 {
    let mut s = f64::INFINITY;
    for i in 0..labels.len() {
        for j in (i + 1)..labels.len() {
            if labels[i] != labels[j] {
                s = s.min(d.get(i, j));
            }
        }
    }
    s
}

fn diameter_of(labels: &[usize], d: &DissimilarityMatrix) -> f64 {
    let mut m = 0.0f64;
    for i in 0..labels.len() {
        for j in (i + 1)..labels.len() {
            if labels[i] == labels[j] {
                m = m.max(d.get(i, j));
            }
        }
    }
    m
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        Err(Error::InvalidK { k, n })
    } else {
        Ok(())
    }
}

fn guard(n: usize, k: usize) -> Result<()> {
    let count = stirling2(n, k);
    if count > MAX_ENUMERATION {
        return Err(Error::SizeGuard(format!(
            "S({n}, {k}) = {count} partitions exceeds the limit of {MAX_ENUMERATION}"
        )));
    }
    Ok(())
}

/// Exact optimum of split/diameter over all partitions into `k` clusters.
/// Among equal costs the lexicographically largest canonical label string
/// wins.
pub fn brute_force_mrsd(d: &DissimilarityMatrix, k: usize) -> Result<ClusteringResult> {
    let n = d.len();
    check_k(k, n)?;
    guard(n, k)?;
    let mut best: Option<(f64, f64, f64, Vec<usize>)> = None;
    let mut it = PartitionEnumerator::new(n, k);
    while let Some(labels) = it.advance() {
        let s = split_of(labels, d);
        let dia = diameter_of(labels, d);
        let c = cost(s, dia);
        // Enumeration is lexicographic, so `>=` keeps the largest string.
        if best.as_ref().is_none_or(|b| c >= b.0) {
            best = Some((c, s, dia, labels.to_vec()));
        }
    }
    let (c, s, dia, labels) = best.expect("S(n, k) >= 1 for 2 <= k <= n");
    Ok(ClusteringResult {
        partition: Partition::from_labels(labels)?,
        split: s,
        diameter: dia,
        cost: c,
        split_trace: Vec::new(),
        iterations: Vec::new(),
    })
}

/// Largest split achievable with `k` clusters, by enumeration.
pub fn brute_force_max_split(d: &DissimilarityMatrix, k: usize) -> Result<f64> {
    let n = d.len();
    check_k(k, n)?;
    guard(n, k)?;
    let mut best = f64::NEG_INFINITY;
    let mut it = PartitionEnumerator::new(n, k);
    while let Some(labels) = it.advance() {
        best = best.max(split_of(labels, d));
    }
    Ok(best)
}

/// Bipartition with the smallest diameter, by enumerating all
/// `2^(n-1) - 1` bipartitions. The first minimum in mask order is returned.
pub fn brute_force_min_diameter_bipartition(d: &DissimilarityMatrix) -> Result<(Partition, f64)> {
    let n = d.len();
    if n > MAX_BIPARTITION_OBJECTS {
        return Err(Error::SizeGuard(format!(
            "{n} objects exceeds the bipartition enumeration limit of {MAX_BIPARTITION_OBJECTS}"
        )));
    }
    let mut labels = vec![0usize; n];
    let mut best: Option<(f64, Vec<usize>)> = None;
    // Object 0 stays in cluster 0; bit i-1 of the mask places object i.
    for mask in 1u32..(1u32 << (n - 1)) {
        for (i, l) in labels.iter_mut().enumerate().skip(1) {
            *l = ((mask >> (i - 1)) & 1) as usize;
        }
        let dia = diameter_of(&labels, d);
        if best.as_ref().is_none_or(|b| dia < b.0) {
            best = Some((dia, labels.clone()));
        }
    }
    let (dia, labels) = best.expect("n >= 2 gives at least one bipartition");
    Ok((Partition::from_labels(labels)?, dia))
}
