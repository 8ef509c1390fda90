//! Classification of levels up to braided equivalence: every coprime pair
//! (p, q') reduces to a canonical level with 1 <= q <= p-1 together with one
//! of the eight braided ribbon structures.
//!
//! Run with: `cargo run --example level_classification`

use fusionkl::level::classify_level;

fn main() {
    println!("{:>8} {:>10} {:>18} {:>6}", "level", "canonical", "braiding", "twist");
    for p in [3i64, 5] {
        for q_prime in 1..=40 {
            let Ok((canonical, variant)) = classify_level(p, q_prime) else {
                continue; // not coprime
            };
            println!(
                "{:>8} {:>10} {:>18} {:>6}",
                format!("{p}/{q_prime}"),
                canonical.to_string(),
                variant.flavor.to_string(),
                variant.sign.to_string()
            );
        }
        println!();
    }
}
