//! The 9-bit-key eXOR operation and its involution property.

use chaoscrypt::bitops::{add_mod256, exor, sub_mod256, NineBitKey};

fn main() {
    let r = NineBitKey::new(0b1_0110_1101).unwrap();
    for x in [0u8, 1, 170, 255] {
        let y = exor(x, r);
        println!("exor({x:3}, {}) = {y:3}, back = {}", r.value(), exor(y, r));
    }

    let all = (0..=NineBitKey::MAX)
        .flat_map(|k| (0..=255u8).map(move |x| (x, NineBitKey::new(k).unwrap())))
        .all(|(x, k)| exor(exor(x, k), k) == x);
    println!("involution holds for all 131072 pairs: {all}");
    println!("200 + 100 = {} (mod 256), minus 100 = {}", add_mod256(200, 100), sub_mod256(add_mod256(200, 100), 100));
}
