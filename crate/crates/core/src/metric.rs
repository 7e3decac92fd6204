//! Dissimilarity matrices, partitions and the quantities the clustering
//! objective is built from: `dmin`, split, diameter and the split/diameter
//! cost.

use crate::error::{Error, Result};

/// Additive slack used by [`validate_metric`].
pub const METRIC_TOLERANCE: f64 = 1e-9;

/// Symmetric matrix of nonnegative dissimilarities over `n >= 2` objects,
/// i.e. the weights of a complete graph.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DissimilarityMatrix {
    /// Builds a matrix from a row-major buffer of `n * n` entries.
    ///
    /// The diagonal must be exactly zero, the matrix exactly symmetric and
    /// every entry finite and nonnegative.
    pub fn from_vec(n: usize, data: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewObjects(n));
        }
        if data.len() != n * n {
            return Err(Error::Dimension(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                data.len()
            )));
        }
        let m = Self { n, data };
        m.validate()?;
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Self::from_vec(n, data)
    }

    /// Builds the matrix by evaluating `f(i, j)` for every `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let w = f(i, j);
                data[i * n + j] = w;
                data[j * n + i] = w;
            }
        }
        Self::from_vec(n, data)
    }

    /// Distances between points under a caller-supplied metric.
    pub fn from_points<P>(points: &[P], dist: impl Fn(&P, &P) -> f64) -> Result<Self> {
        Self::from_fn(points.len(), |i, j| dist(&points[i], &points[j]))
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let v = self.data[i * n + j];
                if !v.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if v < 0.0 {
                    return Err(Error::Negative {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
            }
        }
        for i in 0..n {
            let v = self.data[i * n + i];
            if v != 0.0 {
                return Err(Error::NonzeroDiagonal { index: i, value: v });
            }
            for j in 0..i {
                let (a, b) = (self.data[i * n + j], self.data[j * n + i]);
                if a != b {
                    return Err(Error::Asymmetric {
                        row: i,
                        col: j,
                        value: a,
                        mirror: b,
                    });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Writes `w` to both `(i, j)` and `(j, i)`.
    pub(crate) fn set_pair(&mut self, i: usize, j: usize, w: f64) {
        self.data[i * self.n + j] = w;
        self.data[j * self.n + i] = w;
    }

    /// Principal submatrix over `indices`, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    n: self.n,
                });
            }
        }
        Self::from_fn(indices.len(), |a, b| self.get(indices[a], indices[b]))
    }

    /// Every weight multiplied by `c`. `c` must be finite and nonnegative.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::from_vec(self.n, self.data.iter().map(|w| w * c).collect())
    }
}

/// Assignment of `n` objects to `k` non-empty clusters, stored in canonical
/// first-occurrence form: object 0 has label 0 and each new label is one
/// more than the largest label seen so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
    k: usize,
}

impl Partition {
    /// Canonicalizes arbitrary cluster ids. Any distinct values are accepted;
    /// the cluster count is the number of distinct ids.
    pub fn from_labels(labels: impl Into<Vec<usize>>) -> Result<Self> {
        let mut labels = labels.into();
        if labels.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let k = canonicalize(&mut labels);
        Ok(Self { labels, k })
    }

    /// Partition with every object in its own cluster.
    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (0..n).collect(),
            k: n,
        }
    }

    #[inline]
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Members of each cluster in ascending object order.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (obj, &l) in self.labels.iter().enumerate() {
            out[l].push(obj);
        }
        out
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }
}

/// Relabels in first-occurrence order and returns the number of clusters.
pub(crate) fn canonicalize(labels: &mut [usize]) -> usize {
    let mut map = std::collections::HashMap::new();
    for l in labels.iter_mut() {
        let next = map.len();
        *l = *map.entry(*l).or_insert(next);
    }
    map.len()
}

/// Outcome of a clustering run.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult {
    pub partition: Partition,
    pub split: f64,
    pub diameter: f64,
    pub cost: f64,
    /// Split of every partition evaluated by the run, in evaluation order.
    pub split_trace: Vec<f64>,
    /// Per-iteration details of the run that produced `partition`.
    pub iterations: Vec<Iteration>,
}

/// One outer iteration of a contraction-driven run.
#[derive(Debug, Clone, PartialEq)]
pub struct Iteration {
    /// Supervertices present when the partition was built.
    pub supervertices: usize,
    pub split: f64,
    pub diameter: f64,
    /// Diameter of the partition of supervertices under contracted distances.
    pub contracted_diameter: f64,
    /// Distance from the would-be next representative to the chosen set
    /// (farthest-point runs only, when such a vertex exists).
    pub delta: Option<f64>,
    /// Schedule edges consumed after evaluating the partition.
    pub merged: usize,
}

impl ClusteringResult {
    /// Evaluates `partition` on `d` with an empty trace.
    pub fn evaluate(partition: Partition, d: &DissimilarityMatrix) -> Result<Self> {
        let s = split(&partition, d)?;
        let dia = diameter(&partition, d)?;
        Ok(Self {
            partition,
            split: s,
            diameter: dia,
            cost: cost(s, dia),
            split_trace: Vec::new(),
            iterations: Vec::new(),
        })
    }
}

/// Smallest dissimilarity between object `p` and the objects in `set`.
pub fn dmin(p: usize, set: &[usize], d: &DissimilarityMatrix) -> Result<f64> {
    check_index(p, d)?;
    if set.is_empty() {
        return Err(Error::EmptyReferenceSet);
    }
    let mut best = f64::INFINITY;
    for &q in set {
        check_index(q, d)?;
        best = best.min(d.get(p, q));
    }
    Ok(best)
}

fn check_index(i: usize, d: &DissimilarityMatrix) -> Result<()> {
    if i >= d.len() {
        Err(Error::IndexOutOfRange {
            index: i,
            n: d.len(),
        })
    } else {
        Ok(())
    }
}

fn check_partition(p: &Partition, d: &DissimilarityMatrix) -> Result<()> {
    if p.len() != d.len() {
        return Err(Error::LabelCount {
            expected: d.len(),
            got: p.len(),
        });
    }
    Ok(())
}

/// Minimum dissimilarity between two objects in different clusters.
pub fn split(p: &Partition, d: &DissimilarityMatrix) -> Result<f64> {
    check_partition(p, d)?;
    if p.k() < 2 {
        return Err(Error::SingleCluster);
    }
    let labels = p.labels();
    let mut s = f64::INFINITY;
    for i in 0..labels.len() {
        let row = d.row(i);
        for j in (i + 1)..labels.len() {
            if labels[i] != labels[j] && row[j] < s {
                s = row[j];
            }
        }
    }
    Ok(s)
}

/// Maximum dissimilarity between two objects in the same cluster; zero when
/// every cluster is a singleton.
pub fn diameter(p: &Partition, d: &DissimilarityMatrix) -> Result<f64> {
    check_partition(p, d)?;
    let labels = p.labels();
    let mut m = 0.0f64;
    for i in 0..labels.len() {
        let row = d.row(i);
        for j in (i + 1)..labels.len() {
            if labels[i] == labels[j] && row[j] > m {
                m = row[j];
            }
        }
    }
    Ok(m)
}

/// Split over diameter. A zero diameter yields `+inf` when the split is
/// positive and zero otherwise.
pub fn cost(split: f64, diameter: f64) -> f64 {
    if split == 0.0 {
        0.0
    } else if diameter == 0.0 {
        f64::INFINITY
    } else {
        split / diameter
    }
}

/// Every ordered triple `(i, j, w)` with `d(i,j) > d(i,w) + d(w,j) + 1e-9`.
pub fn validate_metric(d: &DissimilarityMatrix) -> Vec<(usize, usize, usize)> {
    let n = d.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let dij = d.get(i, j);
            for w in 0..n {
                if dij > d.get(i, w) + d.get(w, j) + METRIC_TOLERANCE {
                    out.push((i, j, w));
                }
            }
        }
    }
    out
}
