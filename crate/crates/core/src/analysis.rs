//! Statistical evaluation of cipher-images: NPCR/UACI, the one-pixel
//! differential protocol, histograms, Shannon entropy, chi-square uniformity
//! and adjacent-pixel correlation.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::buffer::PixelBuffer;
use crate::chaos::generate_keystream;
use crate::cipher::encrypt_with_keystream;
use crate::error::{Error, Result};
use crate::key::SecretKey;

/// NPCR between two independent uniform 8-bit images: 255/256 · 100.
pub const EXPECTED_NPCR: f64 = 255.0 / 256.0 * 100.0;

/// UACI between two independent uniform 8-bit images:
/// E|X − Y| / 255 · 100 with E|X − Y| = (256² − 1) / (3 · 256).
pub const EXPECTED_UACI: f64 = (65535.0 / 768.0) / 255.0 * 100.0;

fn check_shape(a: &PixelBuffer, b: &PixelBuffer) -> Result<()> {
    if a.same_shape(b) {
        Ok(())
    } else {
        Err(Error::ShapeMismatch {
            left: (a.width(), a.height()),
            right: (b.width(), b.height()),
        })
    }
}

/// Percentage of positions at which the two images differ.
pub fn npcr(c1: &PixelBuffer, c2: &PixelBuffer) -> Result<f64> {
    check_shape(c1, c2)?;
    let changed = c1
        .pixels()
        .iter()
        .zip(c2.pixels())
        .filter(|(a, b)| a != b)
        .count();
    Ok(changed as f64 / c1.len() as f64 * 100.0)
}

/// Mean absolute difference normalised by 255, as a percentage.
pub fn uaci(c1: &PixelBuffer, c2: &PixelBuffer) -> Result<f64> {
    check_shape(c1, c2)?;
    let total: u64 = c1
        .pixels()
        .iter()
        .zip(c2.pixels())
        .map(|(&a, &b)| a.abs_diff(b) as u64)
        .sum();
    Ok(total as f64 / (255.0 * c1.len() as f64) * 100.0)
}

/// One-pixel modification used by the differential test: add one, or set
/// to 254 when the pixel is already 255.
pub fn perturb_value(v: u8) -> u8 {
    if v < 255 {
        v + 1
    } else {
        254
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DifferentialSummary {
    pub trials: usize,
    pub mean_npcr: f64,
    pub mean_uaci: f64,
    /// Standard error of the mean NPCR across trials (0 for a single trial).
    pub npcr_std_error: f64,
    pub uaci_std_error: f64,
    /// Raster index modified in each trial, in trial order.
    pub positions: Vec<usize>,
}

fn mean_and_std_error(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Encrypts `plain` and, for each trial, a copy with one randomly chosen
/// pixel perturbed by [`perturb_value`]; averages NPCR and UACI between the
/// two cipher-images.
///
/// Positions come from a ChaCha8 stream seeded with `seed`. Trials run in
/// parallel but are reduced in trial order, so results are reproducible.
pub fn differential_test(
    plain: &PixelBuffer,
    key: &SecretKey,
    trials: usize,
    seed: u64,
) -> Result<DifferentialSummary> {
    if trials == 0 {
        return Err(Error::Domain {
            value: 0.0,
            domain: "trials >= 1",
        });
    }
    let keystream = generate_keystream(key, plain.len())?;
    let c1 = plain.with_pixels(encrypt_with_keystream(plain.pixels(), key, &keystream)?)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions: Vec<usize> = (0..trials).map(|_| rng.random_range(0..plain.len())).collect();

    let results: Vec<(f64, f64)> = positions
        .par_iter()
        .map(|&pos| {
            let mut modified = plain.pixels().to_vec();
            modified[pos] = perturb_value(modified[pos]);
            let c2 = plain.with_pixels(encrypt_with_keystream(&modified, key, &keystream)?)?;
            Ok((npcr(&c1, &c2)?, uaci(&c1, &c2)?))
        })
        .collect::<Result<_>>()?;

    let npcrs: Vec<f64> = results.iter().map(|r| r.0).collect();
    let uacis: Vec<f64> = results.iter().map(|r| r.1).collect();
    let (mean_npcr, npcr_std_error) = mean_and_std_error(&npcrs);
    let (mean_uaci, uaci_std_error) = mean_and_std_error(&uacis);
    Ok(DifferentialSummary {
        trials,
        mean_npcr,
        mean_uaci,
        npcr_std_error,
        uaci_std_error,
        positions,
    })
}

/// Count of each gray level.
pub fn histogram(img: &PixelBuffer) -> [u64; 256] {
    let mut counts = [0u64; 256];
    for &p in img.pixels() {
        counts[p as usize] += 1;
    }
    counts
}

/// Shannon entropy in bits of a histogram; empty bins contribute nothing.
pub fn histogram_entropy(counts: &[u64; 256]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    -counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            p * p.log2()
        })
        .sum::<f64>()
}

pub fn shannon_entropy(img: &PixelBuffer) -> f64 {
    histogram_entropy(&histogram(img))
}

/// Pearson chi-square statistic of a histogram against the uniform distribution.
pub fn chi_square_statistic(counts: &[u64; 256]) -> f64 {
    let total: u64 = counts.iter().sum();
    let expected = total as f64 / 256.0;
    counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    /// Upper critical value at the requested significance, 255 degrees of freedom.
    pub critical: f64,
    pub alpha: f64,
}

impl ChiSquareTest {
    pub fn passed(&self) -> bool {
        self.statistic <= self.critical
    }
}

/// Chi-square uniformity test of the gray-level histogram at significance `alpha`.
pub fn chi_square_uniformity(img: &PixelBuffer, alpha: f64) -> ChiSquareTest {
    let dist = ChiSquared::new(255.0).expect("positive degrees of freedom");
    ChiSquareTest {
        statistic: chi_square_statistic(&histogram(img)),
        critical: dist.inverse_cdf(1.0 - alpha),
        alpha,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
    /// Down-right neighbour.
    Diagonal,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::Horizontal, Direction::Vertical, Direction::Diagonal];

    fn offset(self) -> (usize, usize) {
        match self {
            Direction::Horizontal => (0, 1),
            Direction::Vertical => (1, 0),
            Direction::Diagonal => (1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Horizontal => "horizontal",
            Direction::Vertical => "vertical",
            Direction::Diagonal => "diagonal",
        }
    }
}

/// Pearson correlation over every pair of adjacent pixels in `direction`.
///
/// Fails with [`Error::UndefinedCorrelation`] if there are fewer than two
/// pairs or either series has zero variance.
pub fn adjacent_correlation(img: &PixelBuffer, direction: Direction) -> Result<f64> {
    let (dr, dc) = direction.offset();
    let (w, h) = (img.width(), img.height());
    if w <= dc || h <= dr {
        return Err(Error::UndefinedCorrelation("fewer than two pixel pairs"));
    }
    let rows = h - dr;
    let cols = w - dc;
    let count = rows * cols;
    if count < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two pixel pairs"));
    }
    let px = img.pixels();
    let pairs = || {
        (0..rows).flat_map(move |r| {
            (0..cols).map(move |c| (px[r * w + c] as f64, px[(r + dr) * w + c + dc] as f64))
        })
    };

    let n = count as f64;
    let (sum_x, sum_y) = pairs().fold((0.0, 0.0), |(sx, sy), (x, y)| (sx + x, sy + y));
    let (mean_x, mean_y) = (sum_x / n, sum_y / n);
    let (mut cov, mut var_x, mut var_y) = (0.0, 0.0, 0.0);
    for (x, y) in pairs() {
        let (dx, dy) = (x - mean_x, y - mean_y);
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == 0.0 || var_y == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok((cov / (var_x * var_y).sqrt()).clamp(-1.0, 1.0))
}

/// Metrics for one image, optionally against a second image of the same shape.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub npcr: Option<f64>,
    pub uaci: Option<f64>,
    pub entropy: f64,
    pub corr_h: Option<f64>,
    pub corr_v: Option<f64>,
    pub corr_d: Option<f64>,
    pub chi_square: ChiSquareTest,
    pub histogram: [u64; 256],
}

impl AnalysisReport {
    pub fn of(img: &PixelBuffer, compare: Option<&PixelBuffer>) -> Result<Self> {
        let (npcr, uaci) = match compare {
            Some(other) => (Some(npcr(img, other)?), Some(uaci(img, other)?)),
            None => (None, None),
        };
        let histogram = histogram(img);
        let corr = |d| adjacent_correlation(img, d).ok();
        Ok(Self {
            npcr,
            uaci,
            entropy: histogram_entropy(&histogram),
            corr_h: corr(Direction::Horizontal),
            corr_v: corr(Direction::Vertical),
            corr_d: corr(Direction::Diagonal),
            chi_square: chi_square_uniformity(img, 0.01),
            histogram,
        })
    }

    fn metrics(&self) -> Vec<(&'static str, Option<f64>)> {
        vec![
            ("npcr", self.npcr),
            ("uaci", self.uaci),
            ("entropy", Some(self.entropy)),
            ("corr_horizontal", self.corr_h),
            ("corr_vertical", self.corr_v),
            ("corr_diagonal", self.corr_d),
            ("chi_square", Some(self.chi_square.statistic)),
            ("chi_square_critical_0.01", Some(self.chi_square.critical)),
        ]
    }

    /// `name,value` rows; undefined values are written as `undefined` and
    /// metrics that were not requested are omitted.
    pub fn metrics_csv(&self) -> String {
        let mut out = String::from("name,value\n");
        for (name, value) in self.metrics() {
            match value {
                Some(v) => out.push_str(&format!("{name},{v}\n")),
                None if name.starts_with("corr") => out.push_str(&format!("{name},undefined\n")),
                None => {}
            }
        }
        out
    }

    /// 256 rows of `value,count`.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("value,count\n");
        for (v, c) in self.histogram.iter().enumerate() {
            out.push_str(&format!("{v},{c}\n"));
        }
        out
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<f64>, digits: usize| match v {
            Some(v) => format!("{v:.digits$}"),
            None => "undefined".to_string(),
        };
        if self.npcr.is_some() {
            writeln!(f, "NPCR                 {}%", show(self.npcr, 4))?;
            writeln!(f, "UACI                 {}%", show(self.uaci, 4))?;
        }
        writeln!(f, "entropy              {:.4} bits", self.entropy)?;
        writeln!(f, "correlation (h)      {}", show(self.corr_h, 5))?;
        writeln!(f, "correlation (v)      {}", show(self.corr_v, 5))?;
        writeln!(f, "correlation (d)      {}", show(self.corr_d, 5))?;
        write!(
            f,
            "chi-square           {:.2} (critical {:.2} at alpha {}, {})",
            self.chi_square.statistic,
            self.chi_square.critical,
            self.chi_square.alpha,
            if self.chi_square.passed() { "uniform" } else { "not uniform" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(pixels: Vec<u8>, w: usize, h: usize) -> PixelBuffer {
        PixelBuffer::new(pixels, w, h).unwrap()
    }

    #[test]
    fn expectations_match_enumeration() {
        let (mut diff, mut abs) = (0u64, 0u64);
        for a in 0..=255u32 {
            for b in 0..=255u32 {
                diff += (a != b) as u64;
                abs += a.abs_diff(b) as u64;
            }
        }
        let npcr = diff as f64 / 65536.0 * 100.0;
        let uaci = abs as f64 / 65536.0 / 255.0 * 100.0;
        assert!((npcr - EXPECTED_NPCR).abs() < 1e-12);
        assert!((uaci - EXPECTED_UACI).abs() < 1e-12);
        assert!((EXPECTED_NPCR - 99.6094).abs() < 5e-5);
        assert!((EXPECTED_UACI - 33.4635).abs() < 5e-5);
    }

    #[test]
    fn npcr_uaci_extremes() {
        let zero = img(vec![0; 16], 4, 4);
        let full = img(vec![255; 16], 4, 4);
        assert_eq!(npcr(&zero, &zero).unwrap(), 0.0);
        assert_eq!(uaci(&zero, &zero).unwrap(), 0.0);
        assert_eq!(npcr(&zero, &full).unwrap(), 100.0);
        assert_eq!(uaci(&zero, &full).unwrap(), 100.0);
        assert_eq!(uaci(&full, &zero).unwrap(), 100.0);
        let other = img(vec![0; 16], 2, 8);
        assert!(matches!(npcr(&zero, &other), Err(Error::ShapeMismatch { .. })));
        assert!(uaci(&zero, &other).is_err());
    }

    #[test]
    fn perturbation_rule() {
        assert_eq!(perturb_value(0), 1);
        assert_eq!(perturb_value(254), 255);
        assert_eq!(perturb_value(255), 254);
    }

    #[test]
    fn entropy_bounds() {
        assert_eq!(shannon_entropy(&img(vec![9; 100], 10, 10)), 0.0);
        let all: Vec<u8> = (0..512).map(|i| i as u8).collect();
        assert_eq!(shannon_entropy(&img(all, 32, 16)), 8.0);
        let two = img(vec![0, 1, 0, 1], 2, 2);
        assert_eq!(shannon_entropy(&two), 1.0);
    }

    #[test]
    fn histogram_counts() {
        let h = histogram(&img(vec![7; 30], 5, 6));
        assert_eq!(h[7], 30);
        assert_eq!(h.iter().sum::<u64>(), 30);
        assert_eq!(h.iter().filter(|&&c| c > 0).count(), 1);
    }

    #[test]
    fn chi_square_critical_value() {
        let uniform: Vec<u8> = (0..256 * 4).map(|i| i as u8).collect();
        let t = chi_square_uniformity(&img(uniform, 32, 32), 0.01);
        assert_eq!(t.statistic, 0.0);
        assert!(t.passed());
        // tabulated 99th percentile of chi-square with 255 degrees of freedom
        assert!((t.critical - 310.457).abs() < 0.01, "{}", t.critical);
        assert!(!chi_square_uniformity(&img(vec![3; 1024], 32, 32), 0.01).passed());
    }

    #[test]
    fn correlation_examples() {
        let alt = PixelBuffer::from_fn(8, 4, |_, c| (c % 2) as u8).unwrap();
        assert!((adjacent_correlation(&alt, Direction::Horizontal).unwrap() + 1.0).abs() < 1e-12);
        let ramp = PixelBuffer::from_fn(8, 8, |r, c| (r * 8 + c) as u8).unwrap();
        for d in Direction::ALL {
            assert!((adjacent_correlation(&ramp, d).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((adjacent_correlation(&alt, Direction::Vertical).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(
            adjacent_correlation(&img(vec![4; 64], 8, 8), Direction::Diagonal),
            Err(Error::UndefinedCorrelation(_))
        ));
        assert!(adjacent_correlation(&img(vec![1, 2], 2, 1), Direction::Horizontal).is_err());
        assert!(adjacent_correlation(&img(vec![1, 2, 3], 3, 1), Direction::Vertical).is_err());
    }

    #[test]
    fn report_csv_shapes() {
        let a = PixelBuffer::from_fn(16, 16, |r, c| (r * 16 + c) as u8).unwrap();
        let b = PixelBuffer::from_fn(16, 16, |r, c| (c * 16 + r) as u8).unwrap();
        let report = AnalysisReport::of(&a, Some(&b)).unwrap();
        assert_eq!(report.histogram_csv().lines().count(), 257);
        let metrics = report.metrics_csv();
        assert!(metrics.starts_with("name,value\nnpcr,"));
        assert!(metrics.contains("\nentropy,8\n"));
        let solo = AnalysisReport::of(&a, None).unwrap();
        assert!(!solo.metrics_csv().contains("npcr"));
        assert!(solo.to_string().contains("entropy"));
    }
}
