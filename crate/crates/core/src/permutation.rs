//! Plaintext-feedback permutation.
//!
//! The Logistic seed is derived from the sum and maximum of the buffer, both
//! of which survive any reordering, so a decryptor holding only the permuted
//! buffer recomputes the same seed and therefore the same sequence.
//!
//! Indices are stored zero-based: slot `k` corresponds to position `k + 1`
//! in the usual 1-based notation.

use crate::chaos::LogisticParams;
use crate::error::{Error, Result};

/// Logistic initial value `y0 = Σa / (n · max a)`, or 0 for an all-zero buffer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermutationSeed(f64);

impl PermutationSeed {
    pub fn new(y0: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&y0) {
            Ok(Self(y0))
        } else {
            Err(Error::Domain {
                value: y0,
                domain: "[0, 1]",
            })
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// True for 0 or 1, which happens exactly when the buffer is constant.
    pub fn is_degenerate(&self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }
}

/// Seed for `data`. Sum and max are exact integers, so the result is
/// bit-identical for every reordering of `data`. An empty slice yields 0.
pub fn compute_seed(data: &[u8]) -> PermutationSeed {
    let max = data.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return PermutationSeed(0.0);
    }
    let sum: u64 = data.iter().map(|&p| p as u64).sum();
    PermutationSeed(sum as f64 / (data.len() as f64 * max as f64))
}

/// Maximum number of Logistic iterations spent drawing candidates for a
/// sequence of length `n`: `⌈7·n·⌈log2(n+2)⌉ / 4⌉`, roughly `2.5·n·ln n`.
///
/// Integer-only so every platform agrees on where the fallback starts.
pub fn iteration_budget(n: usize) -> u64 {
    let n = n as u64;
    // ⌈log2(n+2)⌉ = bit length of n+1
    let log2_ceil = (u64::BITS - (n + 1).leading_zeros()) as u64;
    (7 * n * log2_ceil).div_ceil(4)
}

/// A bijection on `0..n` plus bookkeeping about how it was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSequence {
    indices: Vec<u32>,
    iterations_used: u64,
    fallback_filled: usize,
}

impl PermutationSequence {
    pub fn identity(n: usize) -> Self {
        Self {
            indices: (0..n as u32).collect(),
            iterations_used: 0,
            fallback_filled: 0,
        }
    }

    /// Builds a sequence from explicit zero-based indices after checking bijectivity.
    pub fn from_indices(indices: Vec<u32>) -> Result<Self> {
        let n = indices.len();
        let mut seen = vec![false; n];
        for &s in &indices {
            let s = s as usize;
            if s >= n || seen[s] {
                return Err(Error::Domain {
                    value: s as f64,
                    domain: "bijection on 0..n",
                });
            }
            seen[s] = true;
        }
        Ok(Self {
            indices,
            iterations_used: 0,
            fallback_filled: 0,
        })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Logistic iterations consumed while drawing candidates.
    pub fn iterations_used(&self) -> u64 {
        self.iterations_used
    }

    /// Slots filled in ascending order after the iteration budget ran out.
    pub fn fallback_filled(&self) -> usize {
        self.fallback_filled
    }
}

/// Coupon-collector construction: iterate the Logistic map from the seed,
/// map each value to the candidate `⌈y·n⌉` (clamped into `1..=n`), and keep
/// it if that slot is still free. Stops when every slot is taken or the
/// [`iteration_budget`] is spent; leftover slots are appended in ascending order.
pub fn generate_sequence(
    seed: PermutationSeed,
    n: usize,
    params: LogisticParams,
) -> PermutationSequence {
    let budget = iteration_budget(n);
    let scale = n as f64;
    let mut taken = vec![false; n];
    let mut indices = Vec::with_capacity(n);
    let mut y = seed.0;
    let mut iterations = 0u64;

    while indices.len() < n && iterations < budget {
        y = params.iterate(y);
        iterations += 1;
        // `as usize` saturates at 0 for negative or NaN input
        let candidate = ((y * scale).ceil() as usize).clamp(1, n) - 1;
        if !taken[candidate] {
            taken[candidate] = true;
            indices.push(candidate as u32);
        }
    }

    let drawn = indices.len();
    indices.extend(
        taken
            .iter()
            .enumerate()
            .filter(|(_, &t)| !t)
            .map(|(k, _)| k as u32),
    );

    PermutationSequence {
        fallback_filled: n - drawn,
        indices,
        iterations_used: iterations,
    }
}

fn check_len(data: &[u8], perm: &PermutationSequence) -> Result<()> {
    if data.len() != perm.len() {
        return Err(Error::LengthMismatch {
            expected: perm.len(),
            actual: data.len(),
        });
    }
    Ok(())
}

/// Gathers `out[i] = data[s_i]`.
pub fn apply(data: &[u8], perm: &PermutationSequence) -> Result<Vec<u8>> {
    check_len(data, perm)?;
    Ok(perm.indices.iter().map(|&s| data[s as usize]).collect())
}

/// Scatters `out[s_i] = data[i]`, undoing [`apply`].
pub fn invert(data: &[u8], perm: &PermutationSequence) -> Result<Vec<u8>> {
    check_len(data, perm)?;
    let mut out = vec![0u8; data.len()];
    for (&s, &v) in perm.indices.iter().zip(data) {
        out[s as usize] = v;
    }
    Ok(out)
}
