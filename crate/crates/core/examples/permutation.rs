//! Plaintext-seeded coupon-collector permutation.

use chaoscrypt::permutation::{apply, compute_seed, generate_sequence, invert, iteration_budget};
use chaoscrypt::LogisticParams;

fn main() {
    let mu = LogisticParams::new(3.999).unwrap();
    let data: Vec<u8> = (0..12u8).map(|i| i * 20 + 3).collect();
    let seed = compute_seed(&data);
    let perm = generate_sequence(seed, data.len(), mu);
    println!("seed {:.6}, indices {:?}", seed.value(), perm.indices());
    println!("{} draws (budget {}), {} filled by fallback", perm.iterations_used(), iteration_budget(data.len()), perm.fallback_filled());

    let shuffled = apply(&data, &perm).unwrap();
    println!("shuffled {shuffled:?}");
    assert_eq!(compute_seed(&shuffled), seed);
    assert_eq!(invert(&shuffled, &perm).unwrap(), data);

    for n in [256usize, 4096, 65536] {
        let p = generate_sequence(compute_seed(&[1, 2, 3]), n, mu);
        let nlogn = n as f64 * (n as f64).ln();
        println!("n={n:5}: {:.2}·n·ln n draws, fallback {}", p.iterations_used() as f64 / nlogn, p.fallback_filled());
    }
}
