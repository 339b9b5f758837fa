//! Straight-line reference implementation of the whole cipher, written
//! without touching the library. Arrays are 1-based where the algorithm is
//! (slot 0 unused or holding a boundary value) so the indices read exactly
//! like the recurrences.

#![allow(dead_code, clippy::manual_div_ceil, clippy::needless_range_loop)]

pub const H: f64 = 0.001;

pub fn chen(x: f64, y: f64, z: f64) -> (f64, f64, f64) {
    let (a, b, c) = (35.0, 3.0, 28.0);
    (a * (y - x), (c - a) * x - x * z + c * y, x * y - b * z)
}

pub fn rk4(s: (f64, f64, f64), h: f64) -> (f64, f64, f64) {
    let (x, y, z) = s;
    let k1 = chen(x, y, z);
    let k2 = chen(x + h / 2.0 * k1.0, y + h / 2.0 * k1.1, z + h / 2.0 * k1.2);
    let k3 = chen(x + h / 2.0 * k2.0, y + h / 2.0 * k2.1, z + h / 2.0 * k2.2);
    let k4 = chen(x + h * k3.0, y + h * k3.1, z + h * k3.2);
    (
        x + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        y + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        z + h / 6.0 * (k1.2 + 2.0 * k2.2 + 2.0 * k3.2 + k4.2),
    )
}

fn frac_digits(v: f64, modulus: i64) -> i64 {
    let a = if v < 0.0 { -v } else { v };
    let f = a - a.floor();
    ((f * 100_000_000.0).floor() as i64) % modulus
}

/// x_0 .. x_{n+3}
pub fn keystream(x: f64, y: f64, z: f64, n: usize) -> Vec<i64> {
    let steps = (n + 4 + 2) / 3;
    let mut s = (x, y, z);
    for _ in 0..1000 {
        s = rk4(s, H);
    }
    let mut reals = Vec::new();
    for _ in 0..steps {
        s = rk4(s, H);
        reals.push(s.0);
        reals.push(s.1);
        reals.push(s.2);
    }
    reals.iter().take(n + 4).map(|&v| frac_digits(v, 256)).collect()
}

pub fn logistic(mu: f64, y: f64) -> f64 {
    mu * y * (1.0 - y)
}

pub fn exor(x: i64, r: i64) -> i64 {
    let mut t = 0;
    for i in 0..8 {
        let xi = (x >> i) & 1;
        let ri = (r >> i) & 1;
        let ri1 = (r >> (i + 1)) & 1;
        let bit = if (xi ^ ri ^ ri1) == 1 { 0 } else { 1 };
        t += bit << i;
    }
    t
}

fn r0(a: i64, b: i64) -> f64 {
    if a <= b {
        (a as f64 + 127.0) / (b as f64 + 255.0)
    } else {
        (b as f64 + 127.0) / (a as f64 + 255.0)
    }
}

fn g(x: f64) -> i64 {
    ((x * 100_000_000.0).floor() as i64) % 512
}

fn keys(mu: f64, r0: f64) -> (i64, i64) {
    let rh = logistic(mu, r0);
    let rh2 = logistic(mu, rh);
    (g(rh), g(rh2))
}

/// ⌈7·n·⌈log2(n+2)⌉/4⌉ computed by repeated doubling.
pub fn budget(n: usize) -> u64 {
    let mut bits = 0u64;
    let mut p = 1usize;
    while p < n + 2 {
        p *= 2;
        bits += 1;
    }
    let num = 7 * n as u64 * bits;
    (num + 3) / 4
}

/// Returns the 1-based sequence s_1..s_n and the draw count.
pub fn permutation_sequence(y0: f64, n: usize, mu: f64) -> (Vec<usize>, u64) {
    let mut f = vec![0u8; n + 1];
    let mut s = Vec::new();
    let mut y = y0;
    let mut j = 0u64;
    let limit = budget(n);
    while s.len() < n && j < limit {
        y = logistic(mu, y);
        j += 1;
        let mut k = (y * n as f64).ceil() as i64;
        if k < 1 {
            k = 1;
        }
        if k > n as i64 {
            k = n as i64;
        }
        let k = k as usize;
        if f[k] == 0 {
            f[k] = 1;
            s.push(k);
        }
    }
    for k in 1..=n {
        if f[k] == 0 {
            s.push(k);
        }
    }
    (s, j)
}

pub fn seed(p: &[i64]) -> f64 {
    let mut max = 0;
    let mut sum = 0i64;
    for &v in p {
        sum += v;
        if v > max {
            max = v;
        }
    }
    if max == 0 {
        0.0
    } else {
        sum as f64 / (p.len() as f64 * max as f64)
    }
}

/// Diffusion I on p_1..p_n (given 0-based), returns m_1..m_n.
pub fn diffusion_one(p0: &[i64], x: &[i64], mu: f64) -> Vec<i64> {
    let n = p0.len();
    let mut p = vec![x[n]];
    p.extend_from_slice(p0);
    let mut m = vec![0i64; n + 1];
    m[0] = x[n + 1];
    for i in 1..=n {
        let (r, rp) = keys(mu, r0(x[i - 1], p[i - 1]));
        m[i] = (exor(p[i], r) + exor(m[i - 1], rp)) % 256;
    }
    m[1..].to_vec()
}

/// Diffusion II on m_1..m_n, returns c_1..c_n.
pub fn diffusion_two(m0: &[i64], x: &[i64], mu: f64) -> Vec<i64> {
    let n = m0.len();
    let mut m = vec![0i64; n + 2];
    m[1..=n].copy_from_slice(m0);
    m[n + 1] = x[n + 3];
    let mut c = vec![0i64; n + 2];
    c[n + 1] = x[n + 2];
    for i in (1..=n).rev() {
        let (r, rp) = keys(mu, r0(x[n - i], m[i + 1]));
        c[i] = (exor(m[i], r) + exor(c[i + 1], rp)) % 256;
    }
    c[1..=n].to_vec()
}

pub fn encrypt(plain: &[u8], key: (f64, f64, f64, f64)) -> Vec<u8> {
    let (x, y, z, mu) = key;
    let n = plain.len();
    let p: Vec<i64> = plain.iter().map(|&v| v as i64).collect();
    let ks = keystream(x, y, z, n);
    let y0 = seed(&p);
    let permuted: Vec<i64> = if y0 == 0.0 || y0 == 1.0 {
        p.clone()
    } else {
        let (s, _) = permutation_sequence(y0, n, mu);
        s.iter().map(|&k| p[k - 1]).collect()
    };
    let m = diffusion_one(&permuted, &ks, mu);
    diffusion_two(&m, &ks, mu).iter().map(|&v| v as u8).collect()
}
