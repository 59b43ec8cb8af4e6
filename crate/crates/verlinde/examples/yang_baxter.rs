//! Exact Yang-Baxter identities on charge sectors of tensor-product spaces,
//! plus one concrete vertex-operator action.
//!
//! Run with: `cargo run --example yang_baxter`

use verlinde::lattice::tensor::{apply_s, check_phase_ybe, check_s_inverse, check_ybe, TensorVec};
use verlinde::mvpoly::var;
use verlinde::MPoly;

fn name(i: usize) -> String {
    ["z", "u", "v", "s"][i].to_string()
}

fn main() {
    // One application of the S-operator on a two-factor basis vector: the
    // occupation pair (2, 1) scatters into every charge-3 distribution.
    let u = MPoly::variable(var::NVARS, var::U);
    let x = TensorVec::basis(&[2, 1]);
    println!("S(u) applied to occupations (2, 1):");
    for (occ, c) in apply_s(&x, 0, 1, &u).iter() {
        println!("  ({}, {}) with weight {}", occ[0], occ[1], c.to_string_with(&name));
    }

    for cmax in [0, 2, 4] {
        check_ybe(cmax).unwrap();
        check_phase_ybe(cmax).unwrap();
        check_s_inverse(cmax).unwrap();
        println!("Yang-Baxter, mixed Yang-Baxter, and S-inverse hold on charge <= {cmax}");
    }
}
