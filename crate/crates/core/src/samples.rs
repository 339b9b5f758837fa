//! Deterministic test images.
//!
//! [`natural`] produces a smooth scene-like picture (gradients, low-frequency
//! waves, soft blobs and a little sensor noise) with the strong neighbour
//! correlation and uneven histogram of a photograph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::buffer::PixelBuffer;
use crate::error::Result;

struct Blob {
    row: f64,
    col: f64,
    radius: f64,
    amplitude: f64,
}

struct Wave {
    freq_r: f64,
    freq_c: f64,
    phase: f64,
    amplitude: f64,
}

/// Scene-like gray image of the given size, reproducible from `seed`.
pub fn natural(width: usize, height: usize, seed: u64) -> Result<PixelBuffer> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = std::f64::consts::TAU;
    let waves: Vec<Wave> = (0..5)
        .map(|_| Wave {
            freq_r: rng.random_range(0.3..3.0) * tau,
            freq_c: rng.random_range(0.3..3.0) * tau,
            phase: rng.random_range(0.0..tau),
            amplitude: rng.random_range(8.0..28.0),
        })
        .collect();
    let blobs: Vec<Blob> = (0..8)
        .map(|_| Blob {
            row: rng.random_range(0.0..1.0),
            col: rng.random_range(0.0..1.0),
            radius: rng.random_range(0.05..0.25),
            amplitude: rng.random_range(-70.0..70.0),
        })
        .collect();
    let tilt_r = rng.random_range(-60.0..60.0);
    let tilt_c = rng.random_range(-60.0..60.0);

    let (w, h) = (width.max(1) as f64, height.max(1) as f64);
    PixelBuffer::from_fn(width, height, |r, c| {
        let (u, v) = (r as f64 / h, c as f64 / w);
        let mut value = 120.0 + tilt_r * (u - 0.5) + tilt_c * (v - 0.5);
        for wave in &waves {
            value += wave.amplitude * (wave.freq_r * u + wave.freq_c * v + wave.phase).sin();
        }
        for blob in &blobs {
            let d2 = (u - blob.row).powi(2) + (v - blob.col).powi(2);
            value += blob.amplitude * (-d2 / (2.0 * blob.radius * blob.radius)).exp();
        }
        value += rng.random_range(-3.0..3.0);
        value.round().clamp(0.0, 255.0) as u8
    })
}

/// Independent uniform pixels.
pub fn uniform(width: usize, height: usize, seed: u64) -> Result<PixelBuffer> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PixelBuffer::from_fn(width, height, |_, _| rng.random())
}
