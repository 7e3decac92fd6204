//! Minimum and maximum spanning trees of a complete weighted graph, tree
//! bicoloring, and the minimum-diameter bipartition built from them.
//!
//! Both trees come from Kruskal's algorithm over a fully sorted edge list.
//! Ties are broken by `(min index, max index)` ascending, so the output is
//! fully determined by the weights.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::metric::{DissimilarityMatrix, Partition};
use crate::union_find::DisjointSet;

/// Weighted edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl Edge {
    pub fn new(a: usize, b: usize, w: f64) -> Self {
        Self {
            u: a.min(b),
            v: a.max(b),
            w,
        }
    }

    fn ascending(&self, other: &Self) -> Ordering {
        self.w
            .total_cmp(&other.w)
            .then(self.u.cmp(&other.u))
            .then(self.v.cmp(&other.v))
    }

    fn descending(&self, other: &Self) -> Ordering {
        other
            .w
            .total_cmp(&self.w)
            .then(self.u.cmp(&other.u))
            .then(self.v.cmp(&other.v))
    }
}

/// Spanning tree over a set of vertex indices.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTree {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl SpanningTree {
    /// Checks that `edges` form a tree spanning exactly `vertices`.
    pub fn new(vertices: Vec<usize>, edges: Vec<Edge>) -> Result<Self> {
        let vertices = sorted_unique(vertices)?;
        if vertices.is_empty() {
            return Err(Error::TooFewObjects(0));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(Error::Dimension(format!(
                "{} edges cannot span {} vertices",
                edges.len(),
                vertices.len()
            )));
        }
        let max = *vertices.last().unwrap();
        let mut ds = DisjointSet::new(max + 1);
        for e in &edges {
            for x in [e.u, e.v] {
                if vertices.binary_search(&x).is_err() {
                    return Err(Error::NotRepresentative(x));
                }
            }
            if !ds.union(e.u, e.v) {
                return Err(Error::Dimension(format!(
                    "edge ({}, {}) closes a cycle",
                    e.u, e.v
                )));
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Spanned vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges in the order Kruskal accepted them.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum()
    }
}

fn sorted_unique(mut v: Vec<usize>) -> Result<Vec<usize>> {
    v.sort_unstable();
    if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Dimension(format!("vertex {} listed twice", w[0])));
    }
    Ok(v)
}

fn kruskal(
    d: &DissimilarityMatrix,
    vertices: Vec<usize>,
    order: fn(&Edge, &Edge) -> Ordering,
) -> SpanningTree {
    let mut edges = Vec::with_capacity(vertices.len() * (vertices.len() - 1) / 2);
    for (a, &u) in vertices.iter().enumerate() {
        let row = d.row(u);
        for &v in &vertices[a + 1..] {
            edges.push(Edge { u, v, w: row[v] });
        }
    }
    edges.sort_unstable_by(order);

    let mut ds = DisjointSet::new(d.len());
    let mut tree = Vec::with_capacity(vertices.len() - 1);
    for e in edges {
        if ds.union(e.u, e.v) {
            tree.push(e);
            if tree.len() + 1 == vertices.len() {
                break;
            }
        }
    }
    SpanningTree {
        vertices,
        edges: tree,
    }
}

/// Minimum spanning tree of the complete graph. Edges come out sorted by
/// `(w, u, v)` ascending, which makes the edge list usable directly as a
/// merge schedule.
pub fn minimum_spanning_tree(d: &DissimilarityMatrix) -> SpanningTree {
    kruskal(d, (0..d.len()).collect(), Edge::ascending)
}

/// Maximum spanning tree of the subgraph induced by `active`.
pub fn maximum_spanning_tree(d: &DissimilarityMatrix, active: &[usize]) -> Result<SpanningTree> {
    let vertices = check_active(d, active)?;
    Ok(kruskal(d, vertices, Edge::descending))
}

fn check_active(d: &DissimilarityMatrix, active: &[usize]) -> Result<Vec<usize>> {
    if active.len() < 2 {
        return Err(Error::TooFewObjects(active.len()));
    }
    if let Some(&bad) = active.iter().find(|&&v| v >= d.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            n: d.len(),
        });
    }
    sorted_unique(active.to_vec())
}

/// Proper 2-coloring of a tree's vertices, aligned with
/// [`SpanningTree::vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicoloring {
    vertices: Vec<usize>,
    colors: Vec<u8>,
}

impl Bicoloring {
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_of(&self, vertex: usize) -> Option<u8> {
        self.vertices
            .binary_search(&vertex)
            .ok()
            .map(|i| self.colors[i])
    }
}

/// Colors the lowest-index vertex 0 and propagates alternating colors
/// breadth-first.
pub fn bicolor(tree: &SpanningTree) -> Bicoloring {
    let vs = &tree.vertices;
    let pos = |v: usize| vs.binary_search(&v).expect("edge endpoint in tree");
    let mut adj = vec![Vec::new(); vs.len()];
    for e in &tree.edges {
        let (a, b) = (pos(e.u), pos(e.v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    const UNSET: u8 = u8::MAX;
    let mut colors = vec![UNSET; vs.len()];
    let mut queue = VecDeque::new();
    colors[0] = 0;
    queue.push_back(0);
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if colors[b] == UNSET {
                colors[b] = 1 - colors[a];
                queue.push_back(b);
            }
        }
    }
    debug_assert!(colors.iter().all(|&c| c != UNSET));
    Bicoloring {
        vertices: vs.clone(),
        colors,
    }
}

/// Bipartition of `active` with the smallest possible diameter: bicolor a
/// maximum spanning tree. Labels follow `active` sorted ascending.
pub fn min_diameter_bipartition(d: &DissimilarityMatrix, active: &[usize]) -> Result<Partition> {
    let tree = maximum_spanning_tree(d, active)?;
    let coloring = bicolor(&tree);
    Partition::from_labels(
        coloring
            .colors
            .iter()
            .map(|&c| c as usize)
            .collect::<Vec<_>>(),
    )
}
