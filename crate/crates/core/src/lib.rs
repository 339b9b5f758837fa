//! A single-round permutation-diffusion cipher for 8-bit gray images.
//!
//! Encryption derives an 8-bit keystream from the Chen system, permutes the
//! pixels with a Logistic-map sequence seeded by the image itself, and runs
//! two feedback diffusion passes (left to right, then right to left) whose
//! round keys are re-derived for every pixel from the data being encrypted.
//!
//! ```
//! use chaoscrypt::{decrypt, encrypt, PixelBuffer, SecretKey};
//!
//! let key: SecretKey = "3.0 4.0 5.0 3.999".parse()?;
//! let plain = PixelBuffer::from_fn(16, 8, |r, c| (r * 16 + c) as u8)?;
//! let cipher = encrypt(&plain, &key)?;
//! assert_ne!(cipher, plain);
//! assert_eq!(decrypt(&cipher, &key)?, plain);
//! # Ok::<(), chaoscrypt::Error>(())
//! ```
//!
//! The [`analysis`] module holds the statistical test suite (NPCR, UACI,
//! entropy, chi-square, adjacent-pixel correlation), and [`imageio`] reads
//! and writes binary PGM files.

pub mod analysis;
pub mod bench;
pub mod bitops;
pub mod buffer;
pub mod chaos;
pub mod cipher;
pub mod cli;
pub mod diffusion;
pub mod error;
pub mod imageio;
pub mod key;
pub mod permutation;
pub mod samples;

pub use buffer::PixelBuffer;
pub use chaos::{generate_keystream, ChenState, Keystream, LogisticParams};
pub use cipher::{decrypt, decrypt_pixels, encrypt, encrypt_pixels};
pub use error::{Error, Result};
pub use key::{key_space_report, KeySpace, SecretKey};
