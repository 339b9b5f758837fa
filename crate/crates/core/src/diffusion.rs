//! Two-pass feedback diffusion and its inverse.
//!
//! The forward pass walks the buffer left to right. For each pixel the
//! Logistic map is re-seeded from one keystream byte and the previous
//! *input* pixel (plaintext feedback), iterated twice, and the two values are
//! quantized to 9-bit round keys. The output pixel mixes the current input
//! and the previous *output* (ciphertext feedback) through [`exor`] and
//! mod-256 addition. The backward pass is the same recurrence run right to
//! left with its own boundary bytes.
//!
//! With a keystream `x_0 .. x_{n+3}`:
//!
//! | pass     | initial input feedback | initial output feedback |
//! |----------|------------------------|-------------------------|
//! | forward  | `x_n`                  | `x_{n+1}`               |
//! | backward | `x_{n+3}`              | `x_{n+2}`               |
//!
//! Both passes consume `x_0, x_1, ..` in processing order.

use crate::bitops::{add_mod256, exor, sub_mod256, NineBitKey};
use crate::chaos::{quantize, Keystream, LogisticParams};
use crate::error::{Error, Result};

/// Keystream plus the Logistic parameter shared by all four passes.
#[derive(Debug, Clone, Copy)]
pub struct DiffusionContext<'a> {
    keystream: &'a [u8],
    mu: LogisticParams,
    n: usize,
}

impl<'a> DiffusionContext<'a> {
    pub fn new(keystream: &'a Keystream, mu: LogisticParams) -> Self {
        Self {
            keystream: keystream.as_bytes(),
            mu,
            n: keystream.image_len(),
        }
    }

    /// Number of pixels the context can process.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn check(&self, input: &[u8]) -> Result<()> {
        if input.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: input.len(),
            });
        }
        Ok(())
    }

    #[inline(always)]
    fn keys(&self, keystream_byte: u8, feedback: u8) -> RoundKeys {
        derive_round_keys(derive_r0(keystream_byte, feedback), self.mu)
    }
}

/// Logistic re-seed from a keystream byte `a` and a feedback pixel `b`:
/// `(a+127)/(b+255)` when `a <= b`, otherwise `(b+127)/(a+255)`.
/// Always in [127/510, 382/510].
#[inline(always)]
pub fn derive_r0(a: u8, b: u8) -> f64 {
    let (a, b) = (a as f64, b as f64);
    if a <= b {
        (a + 127.0) / (b + 255.0)
    } else {
        (b + 127.0) / (a + 255.0)
    }
}

/// The pair of 9-bit keys used for one pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundKeys {
    pub r: NineBitKey,
    pub r_prime: NineBitKey,
}

/// `⌊x·10^8⌋ mod 512` for x in [0, 1).
#[inline(always)]
pub fn quantize_nine_bit(x: f64) -> NineBitKey {
    NineBitKey::from_low_bits(quantize(x, 512))
}

/// Two Logistic iterations from `r0`, each quantized to nine bits.
#[inline(always)]
pub fn derive_round_keys(r0: f64, mu: LogisticParams) -> RoundKeys {
    let first = mu.iterate(r0);
    let second = mu.iterate(first);
    RoundKeys {
        r: quantize_nine_bit(first),
        r_prime: quantize_nine_bit(second),
    }
}

/// Forward pass: `m_i = exor(p_i, r) + exor(m_{i-1}, r')`.
pub fn diffuse_forward(input: &[u8], ctx: &DiffusionContext<'_>) -> Result<Vec<u8>> {
    ctx.check(input)?;
    let (n, ks) = (ctx.n, ctx.keystream);
    let mut prev_in = ks[n];
    let mut prev_out = ks[n + 1];
    let mut out = Vec::with_capacity(n);
    for (i, &p) in input.iter().enumerate() {
        let k = ctx.keys(ks[i], prev_in);
        let m = add_mod256(exor(p, k.r), exor(prev_out, k.r_prime));
        out.push(m);
        prev_in = p;
        prev_out = m;
    }
    Ok(out)
}

/// Backward pass: `c_i = exor(m_i, r) + exor(c_{i+1}, r')`, i from n down to 1.
pub fn diffuse_backward(input: &[u8], ctx: &DiffusionContext<'_>) -> Result<Vec<u8>> {
    ctx.check(input)?;
    let (n, ks) = (ctx.n, ctx.keystream);
    let mut next_in = ks[n + 3];
    let mut next_out = ks[n + 2];
    let mut out = vec![0u8; n];
    for j in (0..n).rev() {
        let k = ctx.keys(ks[n - 1 - j], next_in);
        let c = add_mod256(exor(input[j], k.r), exor(next_out, k.r_prime));
        out[j] = c;
        next_in = input[j];
        next_out = c;
    }
    Ok(out)
}

/// Inverse of [`diffuse_forward`]: `p_i = exor(m_i - exor(m_{i-1}, r'), r)`.
pub fn undiffuse_forward(m: &[u8], ctx: &DiffusionContext<'_>) -> Result<Vec<u8>> {
    ctx.check(m)?;
    let (n, ks) = (ctx.n, ctx.keystream);
    let mut prev_plain = ks[n];
    let mut prev_m = ks[n + 1];
    let mut out = Vec::with_capacity(n);
    for (i, &mi) in m.iter().enumerate() {
        let k = ctx.keys(ks[i], prev_plain);
        let p = exor(sub_mod256(mi, exor(prev_m, k.r_prime)), k.r);
        out.push(p);
        prev_plain = p;
        prev_m = mi;
    }
    Ok(out)
}

/// Inverse of [`diffuse_backward`]: `m_i = exor(c_i - exor(c_{i+1}, r'), r)`.
pub fn undiffuse_backward(c: &[u8], ctx: &DiffusionContext<'_>) -> Result<Vec<u8>> {
    ctx.check(c)?;
    let (n, ks) = (ctx.n, ctx.keystream);
    let mut next_m = ks[n + 3];
    let mut next_c = ks[n + 2];
    let mut out = vec![0u8; n];
    for j in (0..n).rev() {
        let k = ctx.keys(ks[n - 1 - j], next_m);
        let m = exor(sub_mod256(c[j], exor(next_c, k.r_prime)), k.r);
        out[j] = m;
        next_m = m;
        next_c = c[j];
    }
    Ok(out)
}
