//! Encrypt and decrypt a PGM file.
//!
//! cargo run --example encrypt_pgm -- [input.pgm] [output-dir]
//!
//! Without arguments a synthetic 256x256 image is used.

use std::path::PathBuf;

use chaoscrypt::imageio::{read_pgm, write_pgm};
use chaoscrypt::{decrypt, encrypt, samples, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let mut args = std::env::args().skip(1);
    let plain = match args.next() {
        Some(path) => read_pgm(path)?,
        None => samples::natural(256, 256, 1)?,
    };
    let dir = args.next().map(PathBuf::from).unwrap_or_else(std::env::temp_dir);

    let key = SecretKey::new(3.0, 4.0, 5.0, 3.999)?;
    let key_path = dir.join("chaoscrypt-example.key");
    key.write_file(&key_path)?;

    let cipher = encrypt(&plain, &key)?;
    let cipher_path = dir.join("chaoscrypt-example-cipher.pgm");
    write_pgm(&cipher, &cipher_path)?;

    let restored = decrypt(&read_pgm(&cipher_path)?, &SecretKey::from_file(&key_path)?)?;
    assert_eq!(restored, plain);
    println!("{}x{} image encrypted to {}", plain.width(), plain.height(), cipher_path.display());
    println!("key written to {}: {key}", key_path.display());
    Ok(())
}
