//! The one-parameter deformation of the vertex weights: closed forms,
//! their recursions, and the limit back to the crystal weights as the
//! deformation parameter goes to zero.
//!
//! Run with: `cargo run --example deformed_weights`

use verlinde::lattice::boltzmann;
use verlinde::lattice::deformed::{check_deformed_weights, rtilde};

fn name(i: usize) -> String {
    ["z", "u", "v", "s"][i].to_string()
}

fn main() {
    println!("deformed weights with charge a+b = c+d <= 2 (nonzero only):");
    for total in 0..=2u32 {
        for a in 0..=total {
            let b = total - a;
            for c in 0..=total {
                let d = total - c;
                let w = rtilde(a, b, c, d);
                if !w.is_zero() {
                    println!(
                        "  ({a},{b} -> {c},{d}):  {}",
                        w.to_string_with(&name)
                    );
                }
            }
        }
    }

    // The s -> 0 limit of s^{-d} times the deformed weight is the plain
    // crystal weight u^a.
    let (a, b, c, d) = (1, 1, 0, 2);
    println!(
        "\nexample limit: weight ({a},{b} -> {c},{d}) = {}, crystal weight = {}",
        rtilde(a, b, c, d).to_string_with(&name),
        boltzmann(a, b, c, d).to_string_with(&name)
    );

    check_deformed_weights(6).unwrap();
    println!("recursions and limits verified for all indices <= 6");
}
