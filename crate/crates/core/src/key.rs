//! Secret keys, their text form, and the nominal key-space size.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::chaos::{ChenState, LogisticParams};
use crate::error::{Error, Result};

/// Significant decimal digits carried by each key component.
pub const SIGNIFICANT_DIGITS: u32 = 15;

/// `(x, y, z, mu)`: the Chen initial condition and the Logistic parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecretKey {
    x: f64,
    y: f64,
    z: f64,
    logistic: LogisticParams,
}

impl SecretKey {
    pub fn new(x: f64, y: f64, z: f64, mu: f64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y), ("z", z)] {
            if !v.is_finite() {
                return Err(Error::InvalidKey(format!("{name} = {v} is not finite")));
            }
        }
        Ok(Self {
            x,
            y,
            z,
            logistic: LogisticParams::new(mu)?,
        })
    }

    pub fn chen_state(&self) -> ChenState {
        ChenState::new(self.x, self.y, self.z)
    }

    pub fn logistic(&self) -> LogisticParams {
        self.logistic
    }

    pub fn mu(&self) -> f64 {
        self.logistic.mu()
    }

    pub fn components(&self) -> [f64; 4] {
        [self.x, self.y, self.z, self.logistic.mu()]
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        std::fs::read_to_string(path)?.parse()
    }

    /// Writes the canonical single-line form followed by a newline.
    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, format!("{self}\n"))?;
        Ok(())
    }
}

/// Parses `x y z mu` separated by whitespace. Surrounding blank space and a
/// trailing newline are ignored; exactly four components are required.
impl FromStr for SecretKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let line = lines
            .next()
            .ok_or_else(|| Error::InvalidKey("empty key".into()))?;
        if lines.next().is_some() {
            return Err(Error::InvalidKey("key must be a single line".into()));
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::InvalidKey(format!(
                "expected 4 components `x y z mu`, found {}",
                parts.len()
            )));
        }
        let mut values = [0.0; 4];
        for (slot, part) in values.iter_mut().zip(&parts) {
            *slot = part
                .parse::<f64>()
                .map_err(|_| Error::InvalidKey(format!("`{part}` is not a decimal number")))?;
        }
        let [x, y, z, mu] = values;
        Self::new(x, y, z, mu)
    }
}

impl fmt::Display for SecretKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, mu] = self.components();
        write!(
            f,
            "{} {} {} {}",
            significant(x),
            significant(y),
            significant(z),
            significant(mu)
        )
    }
}

/// Formats `v` with exactly 15 significant digits, positional when the
/// decimal exponent is in -5..15 and scientific otherwise.
pub fn significant(v: f64) -> String {
    let precision = (SIGNIFICANT_DIGITS - 1) as usize;
    let sci = format!("{:.*e}", precision, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if !(-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        return sci;
    }
    if exp >= 0 {
        let split = exp as usize + 1;
        let (int, frac) = digits.split_at(split);
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    }
}

/// Nominal key-space size: `(10^digits)^params`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeySpace {
    pub parameters: u32,
    pub digits_per_parameter: u32,
}

impl KeySpace {
    pub fn log10(&self) -> u32 {
        self.parameters * self.digits_per_parameter
    }

    pub fn log2(&self) -> f64 {
        self.log10() as f64 * std::f64::consts::LOG2_10
    }

    pub fn exceeds_bits(&self, bits: u32) -> bool {
        self.log2() > bits as f64
    }

    /// The cardinality written out in full (`1` followed by `log10` zeros).
    pub fn cardinality(&self) -> String {
        format!("1{}", "0".repeat(self.log10() as usize))
    }
}

impl fmt::Display for KeySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(10^{})^{} = 10^{} ≈ 2^{:.1}",
            self.digits_per_parameter,
            self.parameters,
            self.log10(),
            self.log2()
        )
    }
}

/// Four double parameters with 15 significant digits each.
pub fn key_space_report() -> KeySpace {
    KeySpace {
        parameters: 4,
        digits_per_parameter: SIGNIFICANT_DIGITS,
    }
}
