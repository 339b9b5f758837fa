//! Encryption and decryption pipelines.
//!
//! Encryption: keystream → permutation (seeded by the plaintext) → forward
//! diffusion → backward diffusion. Decryption runs the inverse stages in the
//! opposite order and recomputes the permutation seed from the recovered
//! permuted buffer, which has the same sum and maximum as the plaintext.
//!
//! There is no integrity protection: decrypting with the wrong key or a
//! tampered ciphertext silently yields a wrong image.

use crate::buffer::PixelBuffer;
use crate::chaos::{generate_keystream, Keystream};
use crate::diffusion::{
    diffuse_backward, diffuse_forward, undiffuse_backward, undiffuse_forward, DiffusionContext,
};
use crate::error::Result;
use crate::key::SecretKey;
use crate::permutation::{self, compute_seed, generate_sequence};

/// Encrypts a raster-ordered pixel sequence.
pub fn encrypt_pixels(plain: &[u8], key: &SecretKey) -> Result<Vec<u8>> {
    let keystream = generate_keystream(key, plain.len())?;
    encrypt_with_keystream(plain, key, &keystream)
}

/// Decrypts a raster-ordered pixel sequence.
pub fn decrypt_pixels(cipher: &[u8], key: &SecretKey) -> Result<Vec<u8>> {
    let keystream = generate_keystream(key, cipher.len())?;
    decrypt_with_keystream(cipher, key, &keystream)
}

/// Encryption with a precomputed keystream for `plain.len()` pixels.
///
/// Useful when many images of one size are encrypted under one key, as in
/// the differential test.
pub fn encrypt_with_keystream(plain: &[u8], key: &SecretKey, keystream: &Keystream) -> Result<Vec<u8>> {
    let ctx = DiffusionContext::new(keystream, key.logistic());
    let seed = compute_seed(plain);
    let permuted = if seed.is_degenerate() {
        plain.to_vec()
    } else {
        let seq = generate_sequence(seed, plain.len(), key.logistic());
        permutation::apply(plain, &seq)?
    };
    let m = diffuse_forward(&permuted, &ctx)?;
    diffuse_backward(&m, &ctx)
}

pub fn decrypt_with_keystream(cipher: &[u8], key: &SecretKey, keystream: &Keystream) -> Result<Vec<u8>> {
    let ctx = DiffusionContext::new(keystream, key.logistic());
    let m = undiffuse_backward(cipher, &ctx)?;
    let permuted = undiffuse_forward(&m, &ctx)?;
    let seed = compute_seed(&permuted);
    if seed.is_degenerate() {
        return Ok(permuted);
    }
    let seq = generate_sequence(seed, permuted.len(), key.logistic());
    permutation::invert(&permuted, &seq)
}

/// Encrypts an image; the output has the same dimensions.
pub fn encrypt(plain: &PixelBuffer, key: &SecretKey) -> Result<PixelBuffer> {
    plain.with_pixels(encrypt_pixels(plain.pixels(), key)?)
}

pub fn decrypt(cipher: &PixelBuffer, key: &SecretKey) -> Result<PixelBuffer> {
    cipher.with_pixels(decrypt_pixels(cipher.pixels(), key)?)
}
