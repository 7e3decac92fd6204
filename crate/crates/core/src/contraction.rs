//! The contracted graph: vertices joined along minimum-spanning-tree edges
//! become supervertices, and the distance between two supervertices is the
//! largest distance between their original members.
//!
//! The full `n x n` matrix is kept and addressed by representative index;
//! after a merge only the survivor's row and column are rewritten, so each
//! merge costs `O(n)`. Entries involving non-representatives go stale and
//! must not be read.

use crate::error::{Error, Result};
use crate::metric::{DissimilarityMatrix, Partition};
use crate::spanning::{Edge, SpanningTree};
use crate::union_find::DisjointSet;

#[derive(Debug, Clone)]
pub struct MergeState {
    sets: DisjointSet,
    contracted: DissimilarityMatrix,
    sv_diameter: Vec<f64>,
    schedule: Vec<Edge>,
    next: usize,
    active_count: usize,
}

impl MergeState {
    /// Identity state: every vertex is its own supervertex and the schedule
    /// holds the tree's edges in ascending order.
    pub fn new(d: &DissimilarityMatrix, mst: &SpanningTree) -> Result<Self> {
        if mst.vertex_count() != d.len() {
            return Err(Error::Dimension(format!(
                "tree spans {} vertices, matrix has {}",
                mst.vertex_count(),
                d.len()
            )));
        }
        let mut schedule = mst.edges().to_vec();
        schedule.sort_by(|a, b| a.w.total_cmp(&b.w).then(a.u.cmp(&b.u)).then(a.v.cmp(&b.v)));
        Ok(Self {
            sets: DisjointSet::new(d.len()),
            contracted: d.clone(),
            sv_diameter: vec![0.0; d.len()],
            schedule,
            next: 0,
            active_count: d.len(),
        })
    }

    /// Number of original objects.
    pub fn len(&self) -> usize {
        self.contracted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Current number of supervertices.
    pub fn active_count(&self) -> usize {
        self.active_count
    }

    /// Schedule edges not yet merged, ascending by weight.
    pub fn schedule(&self) -> &[Edge] {
        &self.schedule[self.next..]
    }

    pub fn is_representative(&self, v: usize) -> bool {
        v < self.len() && self.sets.is_root(v)
    }

    /// Current representatives, ascending.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.sets.is_root(v)).collect()
    }

    /// Representative of the supervertex containing original vertex `v`.
    pub fn representative_of(&self, v: usize) -> usize {
        self.sets.root(v)
    }

    /// Max-linkage distance between two representatives.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        debug_assert!(self.sets.is_root(a) && self.sets.is_root(b));
        self.contracted.get(a, b)
    }

    /// Diameter of the original vertices merged into representative `a`.
    pub fn supervertex_diameter(&self, a: usize) -> f64 {
        self.sv_diameter[a]
    }

    /// Largest supervertex diameter; zero before any merge.
    pub fn max_supervertex_diameter(&self) -> f64 {
        (0..self.len())
            .filter(|&v| self.sets.is_root(v))
            .map(|v| self.sv_diameter[v])
            .fold(0.0, f64::max)
    }

    /// The contracted distance matrix. Only entries between current
    /// representatives are meaningful.
    pub fn contracted(&self) -> &DissimilarityMatrix {
        &self.contracted
    }

    /// Merges schedule edges from the front while their weight is at most
    /// `threshold`. Returns the number of edges consumed.
    pub fn merge_front(&mut self, threshold: f64) -> usize {
        let mut merged = 0;
        while let Some(&edge) = self.schedule.get(self.next) {
            if edge.w > threshold {
                break;
            }
            let s1 = self.sets.find(edge.u);
            let s2 = self.sets.find(edge.v);
            // An ascending prefix of a spanning tree never revisits a
            // component it already joined.
            assert_ne!(
                s1, s2,
                "schedule edge ({}, {}) inside one supervertex",
                edge.u, edge.v
            );
            self.merge(s1, s2);
            self.next += 1;
            merged += 1;
        }
        merged
    }

    fn merge(&mut self, s1: usize, s2: usize) {
        let inner = self.contracted.get(s1, s2);
        let dia = self.sv_diameter[s1].max(self.sv_diameter[s2]).max(inner);
        let survivor = self.sets.link(s1, s2);
        for w in 0..self.len() {
            if w == s1 || w == s2 || !self.sets.is_root(w) {
                continue;
            }
            let m = self.contracted.get(s1, w).max(self.contracted.get(s2, w));
            self.contracted.set_pair(survivor, w, m);
        }
        self.sv_diameter[survivor] = dia;
        self.active_count -= 1;
    }

    /// Expands a partition of the current representatives (labels aligned
    /// with [`MergeState::representatives`]) to the original objects.
    pub fn induced_partition(&self, reps: &Partition) -> Result<Partition> {
        let order = self.representatives();
        if reps.len() != order.len() {
            let missing = order.get(reps.len()).copied().unwrap_or(0);
            return Err(if reps.len() < order.len() {
                Error::UnlabeledRepresentative(missing)
            } else {
                Error::LabelCount {
                    expected: order.len(),
                    got: reps.len(),
                }
            });
        }
        let mut by_rep = vec![usize::MAX; self.len()];
        for (&r, &l) in order.iter().zip(reps.labels()) {
            by_rep[r] = l;
        }
        let labels: Vec<usize> = (0..self.len()).map(|v| by_rep[self.sets.root(v)]).collect();
        Partition::from_labels(labels)
    }

    /// Diameter of a partition of representatives under contracted
    /// distances.
    pub fn contracted_diameter(&self, reps: &Partition) -> f64 {
        let order = self.representatives();
        let labels = reps.labels();
        let mut m = 0.0f64;
        for a in 0..order.len() {
            for b in (a + 1)..order.len() {
                if labels[a] == labels[b] {
                    m = m.max(self.contracted.get(order[a], order[b]));
                }
            }
        }
        m
    }
}
