//! Pixel grids, the color-plus-position Manhattan dissimilarity between
//! pixels, and rendering of segmentation labels back to images.

use crate::error::{Error, Result};
use crate::metric::{DissimilarityMatrix, Partition};

/// Default cap on the pixel count accepted by [`build_image_matrix`]. The
/// matrix holds `pixels^2` eight-byte weights.
pub const DEFAULT_MAX_PIXELS: usize = 4096;

/// Overlay colors, cycled for more than eight clusters.
pub const PALETTE: [[u8; 3]; 8] = [
    [0, 0, 0],
    [255, 255, 255],
    [255, 0, 0],
    [0, 255, 0],
    [0, 0, 255],
    [255, 255, 0],
    [255, 0, 255],
    [0, 255, 255],
];

/// Row-major raster with 1 (gray) or 3 (RGB) 8-bit channels. Pixel `i` sits
/// at row `i / width`, column `i % width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelGrid {
    height: usize,
    width: usize,
    channels: usize,
    values: Vec<u8>,
}

impl PixelGrid {
    pub fn new(height: usize, width: usize, channels: usize, values: Vec<u8>) -> Result<Self> {
        if channels != 1 && channels != 3 {
            return Err(Error::Format(format!(
                "{channels} channels; expected 1 or 3"
            )));
        }
        if height * width < 2 {
            return Err(Error::Format(format!(
                "{width}x{height} image has fewer than 2 pixels"
            )));
        }
        if values.len() != height * width * channels {
            return Err(Error::Format(format!(
                "{} samples for a {width}x{height}x{channels} image",
                values.len()
            )));
        }
        Ok(Self {
            height,
            width,
            channels,
            values,
        })
    }

    pub fn from_fn_rgb(
        height: usize,
        width: usize,
        f: impl Fn(usize, usize) -> [u8; 3],
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(height * width * 3);
        for r in 0..height {
            for c in 0..width {
                values.extend_from_slice(&f(r, c));
            }
        }
        Self::new(height, width, 3, values)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn pixel_count(&self) -> usize {
        self.height * self.width
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Channel samples of pixel `i`.
    pub fn pixel(&self, i: usize) -> &[u8] {
        &self.values[i * self.channels..(i + 1) * self.channels]
    }
}

/// Sum of absolute channel differences plus the city-block distance between
/// pixel positions. Gray images contribute their single channel once.
pub fn pixel_dissimilarity(img: &PixelGrid, i: usize, j: usize) -> f64 {
    let color: u32 = img
        .pixel(i)
        .iter()
        .zip(img.pixel(j))
        .map(|(&a, &b)| a.abs_diff(b) as u32)
        .sum();
    let (ri, ci) = (i / img.width, i % img.width);
    let (rj, cj) = (j / img.width, j % img.width);
    (color as usize + ri.abs_diff(rj) + ci.abs_diff(cj)) as f64
}

/// Complete pixel dissimilarity matrix, refusing images above `max_pixels`.
pub fn build_image_matrix(img: &PixelGrid, max_pixels: usize) -> Result<DissimilarityMatrix> {
    let pixels = img.pixel_count();
    if pixels > max_pixels {
        return Err(Error::ImageTooLarge {
            pixels,
            cap: max_pixels,
        });
    }
    DissimilarityMatrix::from_fn(pixels, |i, j| pixel_dissimilarity(img, i, j))
}

/// Gray level for each cluster, spread evenly over 0..=255.
pub fn label_gray(label: usize, k: usize) -> u8 {
    if k < 2 {
        return 0;
    }
    ((label * 255) as f64 / (k - 1) as f64).round() as u8
}

/// Gray label map, one sample per pixel.
pub fn label_map(p: &Partition) -> Vec<u8> {
    p.labels().iter().map(|&l| label_gray(l, p.k())).collect()
}

/// RGB overlay using [`PALETTE`].
pub fn color_overlay(p: &Partition) -> Vec<u8> {
    p.labels()
        .iter()
        .flat_map(|&l| PALETTE[l % PALETTE.len()])
        .collect()
}
