//! Chaotic trajectory generators: the Chen system integrated with fixed-step
//! RK4, the Logistic map, and the quantizers that turn real-valued states
//! into keystream bytes.
//!
//! All arithmetic is plain IEEE-754 double precision. Rust never contracts
//! `a * b + c` into a fused multiply-add on its own, so the expression order
//! written here is the order executed on every target, and keystreams are
//! bit-identical across machines.

use crate::error::{Error, Result};
use crate::key::SecretKey;

pub const CHEN_A: f64 = 35.0;
pub const CHEN_B: f64 = 3.0;
pub const CHEN_C: f64 = 28.0;

/// RK4 step size used by the cipher.
pub const STEP_SIZE: f64 = 0.001;

/// Integration steps discarded before any state is emitted.
pub const BURN_IN_STEPS: usize = 1000;

/// Open interval of admissible Logistic control parameters.
pub const MU_MIN: f64 = 3.5699456;
pub const MU_MAX: f64 = 4.0;

/// A point in the Chen system's phase space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChenState {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ChenState {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Right-hand side of the Chen system with a = 35, b = 3, c = 28.
    #[inline]
    fn derivative(&self) -> ChenState {
        ChenState {
            x: CHEN_A * (self.y - self.x),
            y: (CHEN_C - CHEN_A) * self.x - self.x * self.z + CHEN_C * self.y,
            z: self.x * self.y - CHEN_B * self.z,
        }
    }

    /// `self + scale * k`, component-wise.
    #[inline]
    fn offset(&self, scale: f64, k: &ChenState) -> ChenState {
        ChenState {
            x: self.x + scale * k.x,
            y: self.y + scale * k.y,
            z: self.z + scale * k.z,
        }
    }

    /// One classical RK4 step without validation.
    ///
    /// Slopes are evaluated as k1 = f(s), k2 = f(s + h/2·k1),
    /// k3 = f(s + h/2·k2), k4 = f(s + h·k3), and each coordinate is updated as
    /// `s + h/6 * (((k1 + 2*k2) + 2*k3) + k4)`, summed left to right.
    #[inline]
    pub(crate) fn advance(&self, h: f64) -> ChenState {
        let half = h / 2.0;
        let k1 = self.derivative();
        let k2 = self.offset(half, &k1).derivative();
        let k3 = self.offset(half, &k2).derivative();
        let k4 = self.offset(h, &k3).derivative();
        let sixth = h / 6.0;
        ChenState {
            x: self.x + sixth * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            y: self.y + sixth * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
            z: self.z + sixth * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
        }
    }
}

/// Advances `state` by one RK4 step of size `h`.
///
/// Fails with [`Error::Domain`] for a non-finite input or non-positive `h`,
/// and with [`Error::Divergence`] if the step produces a non-finite state.
pub fn rk4_step(state: ChenState, h: f64) -> Result<ChenState> {
    if !state.is_finite() {
        return Err(Error::Domain {
            value: f64::NAN,
            domain: "finite Chen state",
        });
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain {
            value: h,
            domain: "h > 0",
        });
    }
    let next = state.advance(h);
    if next.is_finite() {
        Ok(next)
    } else {
        Err(Error::Divergence { step: 1 })
    }
}

/// Control parameter of the Logistic map, restricted to its chaotic range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticParams {
    mu: f64,
}

impl LogisticParams {
    /// Accepts `mu` strictly inside (3.5699456, 4).
    pub fn new(mu: f64) -> Result<Self> {
        if mu > MU_MIN && mu < MU_MAX {
            Ok(Self { mu })
        } else {
            Err(Error::InvalidKey(format!(
                "mu = {mu} outside ({MU_MIN}, {MU_MAX})"
            )))
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `mu * y * (1 - y)` without a domain check; used in the hot loops.
    #[inline(always)]
    pub fn iterate(&self, y: f64) -> f64 {
        logistic_map(y, self.mu)
    }
}

/// The raw Logistic map `mu * y * (1 - y)`, evaluated as `(mu * y) * (1 - y)`.
#[inline(always)]
pub fn logistic_map(y: f64, mu: f64) -> f64 {
    mu * y * (1.0 - y)
}

/// One Logistic iteration with the input checked against [0, 1].
pub fn logistic_step(y: f64, params: LogisticParams) -> Result<f64> {
    if (0.0..=1.0).contains(&y) {
        Ok(params.iterate(y))
    } else {
        Err(Error::Domain {
            value: y,
            domain: "[0, 1]",
        })
    }
}

/// `⌊frac(|v|) · 10^8⌋ mod modulus`.
///
/// The product is formed with one double multiplication and truncated to
/// `u64` before the modulus; `frac(a) = a - ⌊a⌋`.
#[inline(always)]
pub fn quantize(v: f64, modulus: u64) -> u64 {
    let a = v.abs();
    let frac = a - a.floor();
    ((frac * 1e8).floor() as u64) % modulus
}

/// Keystream byte quantizer (`modulus = 256`).
#[inline(always)]
pub fn quantize_byte(v: f64) -> u8 {
    quantize(v, 256) as u8
}

/// The 8-bit pseudorandom sequence `x_0 .. x_{n+3}` for an image of n pixels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Keystream(Vec<u8>);

impl Keystream {
    /// Integrates from `initial` for `1000 + ⌈(n+4)/3⌉` RK4 steps, drops the
    /// first 1000 states, flattens the rest as x, y, z per step, keeps the
    /// first n + 4 values and quantizes each to a byte.
    pub fn generate(initial: ChenState, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::LengthMismatch {
                expected: 1,
                actual: 0,
            });
        }
        if !initial.is_finite() {
            return Err(Error::InvalidKey("non-finite Chen initial condition".into()));
        }
        let len = n + 4;
        let emitted_steps = len.div_ceil(3);
        let mut state = initial;
        for step in 1..=BURN_IN_STEPS {
            state = state.advance(STEP_SIZE);
            if !state.is_finite() {
                return Err(Error::Divergence { step });
            }
        }
        let mut bytes = Vec::with_capacity(emitted_steps * 3);
        for step in BURN_IN_STEPS + 1..=BURN_IN_STEPS + emitted_steps {
            state = state.advance(STEP_SIZE);
            if !state.is_finite() {
                return Err(Error::Divergence { step });
            }
            bytes.push(quantize_byte(state.x));
            bytes.push(quantize_byte(state.y));
            bytes.push(quantize_byte(state.z));
        }
        bytes.truncate(len);
        Ok(Self(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of pixels this keystream was generated for (`len - 4`).
    pub fn image_len(&self) -> usize {
        self.0.len().saturating_sub(4)
    }

    /// Wraps raw bytes; used to drive diffusion with hand-made streams.
    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self> {
        if bytes.len() < 5 {
            return Err(Error::LengthMismatch {
                expected: 5,
                actual: bytes.len(),
            });
        }
        Ok(Self(bytes))
    }
}

/// Keystream for `n` pixels under `key`.
pub fn generate_keystream(key: &SecretKey, n: usize) -> Result<Keystream> {
    Keystream::generate(key.chen_state(), n)
}
