//! Expanded XOR and the mod-256 arithmetic used by diffusion.
//!
//! Bits are numbered LSB-first. Pixel values are plain `u8`.

/// A 9-bit round key `r = Σ r_i·2^i`, i = 0..8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NineBitKey(u16);

impl NineBitKey {
    pub const MAX: u16 = 511;

    pub const fn new(value: u16) -> Option<Self> {
        if value <= Self::MAX {
            Some(Self(value))
        } else {
            None
        }
    }

    /// Keeps the low nine bits of `value`.
    pub const fn from_low_bits(value: u64) -> Self {
        Self((value & Self::MAX as u64) as u16)
    }

    pub const fn value(self) -> u16 {
        self.0
    }
}

/// Expanded XOR: bit i of the result is `NOT(x_i ^ r_i ^ r_{i+1})`.
#[inline(always)]
pub fn exor(x: u8, r: NineBitKey) -> u8 {
    let r = r.0;
    // bit i of the mask is r_i ^ r_{i+1}; the cast drops the lone r_8 term
    let mask = (r ^ (r >> 1)) as u8;
    !(x ^ mask)
}

/// `exor(exor(x, r), r)`, which is always `x`.
pub fn exor_inverse_check(x: u8, r: NineBitKey) -> u8 {
    exor(exor(x, r), r)
}

#[inline(always)]
pub fn add_mod256(a: u8, b: u8) -> u8 {
    a.wrapping_add(b)
}

#[inline(always)]
pub fn sub_mod256(a: u8, b: u8) -> u8 {
    a.wrapping_sub(b)
}
