//! Clustering that maximizes the ratio of the minimum split between clusters
//! to the maximum cluster diameter.
//!
//! Objects are described by a [`DissimilarityMatrix`], the weights of a
//! complete graph. For two clusters [`mrsd_bipartition`] returns the exact
//! optimum on any nonnegative weights. For `k >= 3` the problem is NP-hard
//! and [`mrsd_multipartition`] returns a partition whose ratio is at least
//! half the optimum whenever the weights obey the triangle inequality.
//!
//! ```
//! use mrsd_core::{mrsd_bipartition, DissimilarityMatrix};
//!
//! let xs = [0.0f64, 1.0, 10.0, 11.0];
//! let d = DissimilarityMatrix::from_points(&xs, |a, b| (a - b).abs()).unwrap();
//! let r = mrsd_bipartition(&d).unwrap();
//! assert_eq!(r.partition.labels(), &[0, 0, 1, 1]);
//! assert_eq!(r.cost, 9.0);
//! ```
//!
//! The [`oracle`] module holds exhaustive reference solvers and [`baseline`]
//! the single- and complete-linkage comparisons.

pub mod baseline;
pub mod contraction;
pub mod error;
pub mod image;
pub mod io;
pub mod metric;
pub mod mrsd;
pub mod oracle;
pub mod spanning;
pub mod union_find;

pub use baseline::{complete_linkage, single_linkage};
pub use contraction::MergeState;
pub use error::{Error, Result};
pub use image::{build_image_matrix, pixel_dissimilarity, PixelGrid};
pub use metric::{
    cost, diameter, dmin, split, validate_metric, ClusteringResult, DissimilarityMatrix, Iteration,
    Partition,
};
pub use mrsd::{
    assign_to_representatives, farthest_point_representatives, mrsd_bipartition,
    mrsd_multipartition, MetricCheck, MrsdConfig,
};
pub use oracle::{brute_force_min_diameter_bipartition, brute_force_mrsd, PartitionEnumerator};
pub use spanning::{
    bicolor, maximum_spanning_tree, min_diameter_bipartition, minimum_spanning_tree, Bicoloring,
    Edge, SpanningTree,
};
