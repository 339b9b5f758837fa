//! Key-file round trip and the nominal key-space size.

use chaoscrypt::{key_space_report, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let key = SecretKey::new(-7.125, 0.1, 19.999999, 3.7)?;
    let dir = std::env::temp_dir();
    let path = dir.join("chaoscrypt-key-example.key");
    key.write_file(&path)?;
    println!("{}: {}", path.display(), std::fs::read_to_string(&path)?.trim_end());
    assert_eq!(SecretKey::from_file(&path)?, key);

    match "1 2 3 4.2".parse::<SecretKey>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let space = key_space_report();
    println!("key space {space}, above 2^100: {}", space.exceeds_bits(100));
    Ok(())
}
