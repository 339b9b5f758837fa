//! Wall-clock timing of encryption and decryption on synthetic images.

use std::time::Instant;

use crate::cipher::{decrypt, encrypt};
use crate::error::{Error, Result};
use crate::key::SecretKey;
use crate::samples;

/// Image sizes (width, height) timed by default.
pub const DEFAULT_SIZES: [(usize, usize); 3] = [(256, 256), (512, 512), (1024, 1024)];

pub const DEFAULT_REPETITIONS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub width: usize,
    pub height: usize,
    pub repetitions: usize,
    pub mean_encrypt_ms: f64,
    pub mean_decrypt_ms: f64,
}

impl BenchResult {
    pub fn pixels(&self) -> usize {
        self.width * self.height
    }

    /// Encryption throughput in megapixels per second.
    pub fn encrypt_mpix_per_s(&self) -> f64 {
        self.pixels() as f64 / (self.mean_encrypt_ms * 1e3)
    }
}

/// Times `repetitions` encryptions and decryptions of a uniform random image
/// for each size. Every decryption is checked against its plaintext.
pub fn run(sizes: &[(usize, usize)], repetitions: usize, key: &SecretKey, seed: u64) -> Result<Vec<BenchResult>> {
    if repetitions == 0 {
        return Err(Error::Domain {
            value: 0.0,
            domain: "repetitions >= 1",
        });
    }
    sizes
        .iter()
        .map(|&(width, height)| {
            let plain = samples::uniform(width, height, seed)?;
            let (mut enc, mut dec) = (0.0, 0.0);
            for _ in 0..repetitions {
                let t = Instant::now();
                let cipher = encrypt(&plain, key)?;
                enc += t.elapsed().as_secs_f64();
                let t = Instant::now();
                let back = decrypt(&cipher, key)?;
                dec += t.elapsed().as_secs_f64();
                assert_eq!(back, plain, "decryption mismatch during benchmark");
            }
            let reps = repetitions as f64;
            Ok(BenchResult {
                width,
                height,
                repetitions,
                mean_encrypt_ms: enc / reps * 1e3,
                mean_decrypt_ms: dec / reps * 1e3,
            })
        })
        .collect()
}

pub fn to_csv(results: &[BenchResult]) -> String {
    let mut out = String::from("width,height,pixels,repetitions,mean_encrypt_ms,mean_decrypt_ms,encrypt_mpix_per_s\n");
    for r in results {
        out.push_str(&format!(
            "{},{},{},{},{:.3},{:.3},{:.3}\n",
            r.width,
            r.height,
            r.pixels(),
            r.repetitions,
            r.mean_encrypt_ms,
            r.mean_decrypt_ms,
            r.encrypt_mpix_per_s()
        ));
    }
    out
}
