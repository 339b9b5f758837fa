//! Chen-system keystream for a key, plus a look at its byte distribution.

use chaoscrypt::analysis::histogram_entropy;
use chaoscrypt::{generate_keystream, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let key: SecretKey = "3.0 4.0 5.0 3.999".parse()?;
    let ks = generate_keystream(&key, 8)?;
    println!("first {} bytes: {:?}", ks.len(), ks.as_bytes());

    let long = generate_keystream(&key, 1 << 20)?;
    let mut counts = [0u64; 256];
    for &b in long.as_bytes() {
        counts[b as usize] += 1;
    }
    println!("entropy of {} bytes: {:.5} bits", long.len(), histogram_entropy(&counts));
    Ok(())
}
