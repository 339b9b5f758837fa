//! Forward and backward diffusion passes, their inverses, and the spread
//! of a single flipped bit.

use chaoscrypt::diffusion::{diffuse_backward, diffuse_forward, undiffuse_backward, undiffuse_forward, DiffusionContext};
use chaoscrypt::{generate_keystream, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let key: SecretKey = "1.5 -2.25 10 3.9".parse()?;
    let n = 16;
    let ks = generate_keystream(&key, n)?;
    let ctx = DiffusionContext::new(&ks, key.logistic());

    let input: Vec<u8> = vec![0; n];
    let m = diffuse_forward(&input, &ctx)?;
    let c = diffuse_backward(&m, &ctx)?;
    println!("input     {input:?}\nforward   {m:?}\nbackward  {c:?}");
    assert_eq!(undiffuse_forward(&undiffuse_backward(&c, &ctx)?, &ctx)?, input);

    let mut flipped = input.clone();
    flipped[n / 2] ^= 1;
    let c2 = diffuse_backward(&diffuse_forward(&flipped, &ctx)?, &ctx)?;
    let changed = c.iter().zip(&c2).filter(|(a, b)| a != b).count();
    println!("one bit flipped at {}: {changed}/{n} output bytes change", n / 2);
    Ok(())
}
