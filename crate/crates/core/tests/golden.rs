mod common;

use chaoscrypt::analysis::{self, Direction};
use chaoscrypt::chaos::{rk4_step, STEP_SIZE};
use chaoscrypt::permutation::{compute_seed, generate_sequence, PermutationSeed};
use chaoscrypt::{encrypt_pixels, generate_keystream, samples, ChenState, LogisticParams, PixelBuffer, SecretKey};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn key() -> SecretKey {
    SecretKey::new(3.0, 4.0, 5.0, 3.999).unwrap()
}

fn fixture() -> Vec<u8> {
    (0..64usize).map(|i| ((i * 37 + (i / 8) * 11) % 256) as u8).collect()
}

#[test]
fn rk4_single_step_is_bit_exact() {
    let s = rk4_step(ChenState::new(3.0, 4.0, 5.0), STEP_SIZE).unwrap();
    assert_eq!(s.x, 3.0357191742483893);
    assert_eq!(s.y, 4.0768635160869415);
    assert_eq!(s.z, 4.997191038198901);
    let o = common::rk4((3.0, 4.0, 5.0), STEP_SIZE);
    assert_eq!((s.x, s.y, s.z), o);
}

#[test]
fn rk4_two_steps_compose() {
    let one = rk4_step(ChenState::new(1.0, 1.0, 1.0), STEP_SIZE).unwrap();
    let two = rk4_step(one, STEP_SIZE).unwrap();
    let o = common::rk4(common::rk4((1.0, 1.0, 1.0), STEP_SIZE), STEP_SIZE);
    assert_eq!((two.x, two.y, two.z), o);
}

#[test]
fn keystream_golden() {
    let ks = generate_keystream(&key(), 8).unwrap();
    assert_eq!(ks.as_bytes(), &[176, 146, 218, 126, 73, 255, 158, 59, 188, 242, 103, 44]);
    let o: Vec<u8> = common::keystream(3.0, 4.0, 5.0, 8).iter().map(|&v| v as u8).collect();
    assert_eq!(ks.as_bytes(), o.as_slice());
}

#[test]
fn fixture_seed_and_sequence() {
    let plain = fixture();
    let seed = compute_seed(&plain);
    assert_eq!(seed.value(), 0.48627450980392156);
    let p = generate_sequence(seed, 64, LogisticParams::new(3.999).unwrap());
    assert_eq!(p.iterations_used(), 302);
    assert_eq!(&p.indices()[..6], &[63, 0, 1, 4, 15, 46]);
}

#[test]
fn fixture_ciphertext_golden() {
    let expected: [u8; 64] = [
        133, 76, 4, 120, 75, 100, 93, 71, 2, 240, 11, 4, 85, 95, 99, 10, 252, 122, 64, 207, 78, 126, 94, 87, 100,
        137, 226, 10, 145, 104, 99, 167, 59, 138, 107, 191, 126, 175, 133, 121, 12, 226, 4, 172, 8, 107, 48, 96,
        240, 28, 9, 103, 177, 88, 246, 135, 28, 43, 158, 2, 0, 31, 215, 137,
    ];
    let plain = fixture();
    assert_eq!(encrypt_pixels(&plain, &key()).unwrap(), expected);
    assert_eq!(common::encrypt(&plain, (3.0, 4.0, 5.0, 3.999)), expected);
}

#[test]
fn library_matches_reference_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let n = rng.random_range(1..300);
        let plain: Vec<u8> = (0..n).map(|_| rng.random()).collect();
        let k = (
            rng.random_range(-20.0..20.0),
            rng.random_range(-20.0..20.0),
            rng.random_range(-20.0..20.0),
            rng.random_range(3.57..3.9999),
        );
        let key = SecretKey::new(k.0, k.1, k.2, k.3).unwrap();
        assert_eq!(encrypt_pixels(&plain, &key).unwrap(), common::encrypt(&plain, k));
    }
}

#[test]
fn reference_permutation_matches_library() {
    let mu = LogisticParams::new(3.999).unwrap();
    for (y0, n) in [(0.3, 10), (0.77, 256), (0.123456, 4096)] {
        let lib = generate_sequence(PermutationSeed::new(y0).unwrap(), n, mu);
        let (s, j) = common::permutation_sequence(y0, n, 3.999);
        let shifted: Vec<u32> = s.iter().map(|&k| k as u32 - 1).collect();
        assert_eq!(lib.indices(), shifted.as_slice());
        assert_eq!(lib.iterations_used(), j);
    }
}

#[test]
fn long_keystream_statistics() {
    let ks = generate_keystream(&key(), 1_000_000).unwrap();
    let mut counts = [0u64; 256];
    for &b in ks.as_bytes() {
        counts[b as usize] += 1;
    }
    assert!(counts.iter().all(|&c| c > 0));
    assert!(analysis::histogram_entropy(&counts) > 7.99);
}

/// Draws needed to fill every index the attractor can reach, against 3·n·ln n.
#[test]
fn reachable_fill_is_within_coupon_collector_bound() {
    let mu = 3.999f64;
    for n in [256usize, 4096, 65536] {
        let lo = mu * mu * (4.0 - mu) / 16.0;
        let hi = mu / 4.0;
        let reachable: Vec<bool> = (1..=n)
            .map(|k| ((k as f64) / n as f64) > lo && ((k - 1) as f64 / n as f64) < hi)
            .collect();
        let target = reachable.iter().filter(|&&r| r).count();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut total = 0u64;
        let runs = 20;
        for _ in 0..runs {
            let mut y: f64 = rng.random_range(0.01..0.99);
            let mut taken = vec![false; n];
            let mut got = 0;
            let mut draws = 0u64;
            while got < target && draws < 100 * n as u64 * 20 {
                y = mu * y * (1.0 - y);
                draws += 1;
                let k = ((y * n as f64).ceil() as usize).clamp(1, n) - 1;
                if reachable[k] && !taken[k] {
                    taken[k] = true;
                    got += 1;
                }
            }
            total += draws;
        }
        let mean = total as f64 / runs as f64;
        let bound = 3.0 * n as f64 * (n as f64).ln();
        assert!(mean < bound, "n={n}: {mean} >= {bound}");
    }
}

#[test]
fn differential_standard_error_scales_with_trials() {
    let plain = samples::natural(64, 64, 3).unwrap();
    let small = analysis::differential_test(&plain, &key(), 50, 1).unwrap();
    let large = analysis::differential_test(&plain, &key(), 200, 1).unwrap();
    let ratio = large.npcr_std_error / small.npcr_std_error;
    assert!((0.3..0.75).contains(&ratio), "ratio {ratio}");
}

#[test]
fn single_trial_npcr_is_high() {
    let plain = samples::natural(128, 128, 5).unwrap();
    let d = analysis::differential_test(&plain, &key(), 1, 9).unwrap();
    assert!(d.mean_npcr > 90.0, "{}", d.mean_npcr);
    assert_eq!(d.npcr_std_error, 0.0);
}

#[test]
fn differential_is_reproducible() {
    let plain = samples::natural(32, 32, 1).unwrap();
    let a = analysis::differential_test(&plain, &key(), 20, 42).unwrap();
    let b = analysis::differential_test(&plain, &key(), 20, 42).unwrap();
    assert_eq!(a, b);
}

#[test]
fn histogram_and_chi_square_of_uniform_counts() {
    let img = PixelBuffer::from_fn(256, 4, |r, c| (c + r) as u8).unwrap();
    let h = analysis::histogram(&img);
    assert!(h.iter().all(|&c| c == 4));
    assert!((analysis::shannon_entropy(&img) - 8.0).abs() < 1e-12);
    let t = analysis::chi_square_uniformity(&img, 0.01);
    assert_eq!(t.statistic, 0.0);
    assert!((t.critical - 310.457).abs() < 0.01, "{}", t.critical);
    assert!(t.passed());

    let flat = PixelBuffer::filled(16, 16, 9).unwrap();
    assert!(!analysis::chi_square_uniformity(&flat, 0.01).passed());
    assert_eq!(analysis::shannon_entropy(&flat), 0.0);
}

#[test]
fn cipher_image_looks_random() {
    let plain = samples::natural(256, 256, 2).unwrap();
    let cipher = chaoscrypt::encrypt(&plain, &key()).unwrap();
    assert!(analysis::shannon_entropy(&cipher) > 7.99);
    for d in Direction::ALL {
        let r = analysis::adjacent_correlation(&cipher, d).unwrap();
        assert!(r.abs() < 0.02, "{}: {r}", d.name());
    }
}
