//! Encryption and decryption timings at a few image sizes.

use chaoscrypt::{bench, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let key = SecretKey::new(3.0, 4.0, 5.0, 3.999)?;
    let results = bench::run(&[(128, 128), (256, 256), (512, 512)], 3, &key, 0)?;
    print!("{}", bench::to_csv(&results));
    Ok(())
}
