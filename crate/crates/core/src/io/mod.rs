//! File formats: the plain-text matrix format, JSON result files and
//! Netpbm images.

pub mod matrix;
pub mod pnm;
pub mod result;

pub use matrix::{parse_matrix, serialize_matrix};
pub use pnm::{parse_pnm, write_pgm, write_ppm};
pub use result::ResultFile;
