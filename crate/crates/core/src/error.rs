use thiserror::Error;

/// Errors produced by the clustering library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty reference set")]
    EmptyReferenceSet,

    #[error("split undefined for a single cluster")]
    SingleCluster,

    #[error("partition has no objects")]
    EmptyPartition,

    #[error("partition has {got} labels but {expected} objects")]
    LabelCount { expected: usize, got: usize },

    #[error("need at least 2 objects, got {0}")]
    TooFewObjects(usize),

    #[error("index {index} out of range for {n} objects")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("asymmetric entry at ({row},{col}): {value} != {mirror}")]
    Asymmetric {
        row: usize,
        col: usize,
        value: f64,
        mirror: f64,
    },

    #[error("negative entry at ({row},{col}): {value}")]
    Negative { row: usize, col: usize, value: f64 },

    #[error("non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },

    #[error("nonzero diagonal entry at ({index},{index}): {value}")]
    NonzeroDiagonal { index: usize, value: f64 },

    #[error("cannot parse entry at ({row},{col}): {token:?}")]
    BadNumber {
        row: usize,
        col: usize,
        token: String,
    },

    #[error("k = {k} out of range for {n} objects (need 2 <= k <= {n})")]
    InvalidK { k: usize, n: usize },

    #[error("restarts must be at least 1")]
    InvalidRestarts,

    #[error("representative {0} is not an active supervertex")]
    NotRepresentative(usize),

    #[error("representative {0} has no label")]
    UnlabeledRepresentative(usize),

    #[error("triangle inequality violated by {count} triples, first d({i},{j}) > d({i},{w}) + d({w},{j})")]
    NotMetric {
        count: usize,
        i: usize,
        j: usize,
        w: usize,
    },

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error(
        "image has {pixels} pixels, cap is {cap}; downsample the image or raise the pixel cap"
    )]
    ImageTooLarge { pixels: usize, cap: usize },

    #[error("image format error: {0}")]
    Format(String),

    #[error("result file error: {0}")]
    ResultFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
