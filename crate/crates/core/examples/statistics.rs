//! Entropy, chi-square and adjacent-pixel correlation before and after encryption.

use chaoscrypt::analysis::AnalysisReport;
use chaoscrypt::{encrypt, samples, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let key = SecretKey::new(3.0, 4.0, 5.0, 3.999)?;
    let plain = samples::natural(256, 256, 4)?;
    let cipher = encrypt(&plain, &key)?;
    println!("plain image\n{}", AnalysisReport::of(&plain, None)?);
    println!("cipher image\n{}", AnalysisReport::of(&cipher, None)?);
    Ok(())
}
