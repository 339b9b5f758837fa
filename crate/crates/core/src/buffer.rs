use crate::error::{Error, Result};

/// An 8-bit gray image scanned in raster order (row-major, top-left origin).
///
/// Pixel `(row, col)` lives at index `row * width + col`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelBuffer {
    pixels: Vec<u8>,
    width: usize,
    height: usize,
}

impl PixelBuffer {
    pub fn new(pixels: Vec<u8>, width: usize, height: usize) -> Result<Self> {
        if pixels.is_empty() || width.checked_mul(height) != Some(pixels.len()) {
            return Err(Error::Dimensions {
                width,
                height,
                len: pixels.len(),
            });
        }
        Ok(Self {
            pixels,
            width,
            height,
        })
    }

    /// Builds a `width x height` image from `f(row, col)`.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width.saturating_mul(height));
        for row in 0..height {
            for col in 0..width {
                pixels.push(f(row, col));
            }
        }
        Self::new(pixels, width, height)
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(vec![value; width.saturating_mul(height)], width, height)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    /// Always false; a buffer holds at least one pixel.
    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u8> {
        (row < self.height && col < self.width).then(|| self.pixels[row * self.width + col])
    }

    /// `(row, col)` of raster index `i`.
    pub fn position(&self, i: usize) -> (usize, usize) {
        (i / self.width, i % self.width)
    }

    /// Same dimensions, new pixel data.
    pub fn with_pixels(&self, pixels: Vec<u8>) -> Result<Self> {
        Self::new(pixels, self.width, self.height)
    }

    pub fn same_shape(&self, other: &PixelBuffer) -> bool {
        self.width == other.width && self.height == other.height
    }
}
