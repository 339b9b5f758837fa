//! NPCR and UACI over repeated one-pixel modifications.

use chaoscrypt::analysis::{differential_test, EXPECTED_NPCR, EXPECTED_UACI};
use chaoscrypt::{samples, SecretKey};

fn main() -> chaoscrypt::Result<()> {
    let key = SecretKey::new(3.0, 4.0, 5.0, 3.999)?;
    let plain = samples::natural(256, 256, 1)?;
    let d = differential_test(&plain, &key, 100, 0)?;
    println!("trials {}", d.trials);
    println!("NPCR {:.4}% ± {:.4} (ideal {EXPECTED_NPCR:.4})", d.mean_npcr, d.npcr_std_error);
    println!("UACI {:.4}% ± {:.4} (ideal {EXPECTED_UACI:.4})", d.mean_uaci, d.uaci_std_error);
    Ok(())
}
