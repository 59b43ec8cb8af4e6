//! The operator Cauchy identity: a product of row transfer matrices
//! expands as a sum of commutative Schur polynomials in the spectral
//! parameters times noncommutative Schur operators, over partitions inside
//! a box.
//!
//! Run with: `cargo run --example cauchy_identity`

use verlinde::fusion::cauchy_check;
use verlinde::fusion::lr::partitions_in_box;

fn main() -> Result<(), verlinde::Error> {
    let (n, k) = (3, 2);
    let rows = 2;
    println!("partitions inside the {rows} x {k} box:");
    for lam in partitions_in_box(rows, k) {
        println!("  ({lam})");
    }
    cauchy_check(n, k, rows)?;
    println!("\nQ(u1)...Q(u{rows}) expands exactly over these partitions at n={n}, k={k}");
    Ok(())
}
