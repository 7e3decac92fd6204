//! Netpbm gray (PGM) and color (PPM) images, ASCII (`P2`/`P3`) and binary
//! (`P5`/`P6`), 8-bit with a maximum value of 255.

use crate::error::{Error, Result};
use crate::image::PixelGrid;

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Header<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let tok = self
            .token()
            .ok_or_else(|| Error::Format(format!("missing {what}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Format(format!("bad {what}: {:?}", String::from_utf8_lossy(tok))))
    }
}

/// Decodes a P2, P3, P5 or P6 image.
pub fn parse_pnm(bytes: &[u8]) -> Result<PixelGrid> {
    let mut h = Header { bytes, pos: 0 };
    let magic = h
        .token()
        .ok_or_else(|| Error::Format("empty file".into()))?;
    let (channels, binary) = match magic {
        b"P2" => (1, false),
        b"P3" => (3, false),
        b"P5" => (1, true),
        b"P6" => (3, true),
        other => {
            return Err(Error::Format(format!(
                "unsupported magic {:?}; expected P2, P3, P5 or P6",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let width = h.number("width")?;
    let height = h.number("height")?;
    let maxval = h.number("maximum value")?;
    if maxval != 255 {
        return Err(Error::Format(format!(
            "maximum value {maxval} not supported; only 255"
        )));
    }
    let count = width
        .checked_mul(height)
        .and_then(|p| p.checked_mul(channels))
        .ok_or_else(|| Error::Format("image dimensions overflow".into()))?;

    let values = if binary {
        // Exactly one whitespace byte separates the header from the raster.
        match bytes.get(h.pos) {
            Some(b) if b.is_ascii_whitespace() => h.pos += 1,
            _ => return Err(Error::Format("missing whitespace before raster".into())),
        }
        let raster = &bytes[h.pos..];
        if raster.len() < count {
            return Err(Error::Format(format!(
                "raster has {} bytes, expected {count}",
                raster.len()
            )));
        }
        raster[..count].to_vec()
    } else {
        let mut values = Vec::with_capacity(count);
        for _ in 0..count {
            let v = h.number("sample")?;
            if v > maxval {
                return Err(Error::Format(format!("sample {v} exceeds {maxval}")));
            }
            values.push(v as u8);
        }
        values
    };
    PixelGrid::new(height, width, channels, values)
}

fn write_binary(magic: &str, width: usize, height: usize, data: &[u8]) -> Vec<u8> {
    let mut out = format!("{magic}\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(data);
    out
}

/// Binary (`P5`) gray image from row-major samples.
pub fn write_pgm(width: usize, height: usize, gray: &[u8]) -> Vec<u8> {
    assert_eq!(gray.len(), width * height);
    write_binary("P5", width, height, gray)
}

/// Binary (`P6`) color image from row-major RGB triples.
pub fn write_ppm(width: usize, height: usize, rgb: &[u8]) -> Vec<u8> {
    assert_eq!(rgb.len(), width * height * 3);
    write_binary("P6", width, height, rgb)
}
