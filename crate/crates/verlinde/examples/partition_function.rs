//! Evaluate a lattice partition function between two boundary labels and
//! expand it into Schur polynomials; the expansion coefficients are fusion
//! numbers.
//!
//! Run with: `cargo run --example partition_function`

use verlinde::fusion::{csym, fuse, partition_function};
use verlinde::{LevelBasis, MPoly, PartitionLabel};

fn main() -> Result<(), verlinde::Error> {
    let (n, k) = (3, 2);
    let mu: PartitionLabel = "1".parse()?;
    let nu: PartitionLabel = "2,1".parse()?;
    let z = partition_function(&mu, &nu, n, k)?;
    let uname = |i: usize| format!("u{}", i + 1);
    println!("Z[{mu} -> {nu}](u1, u2) = {}", z.to_string_with(&uname));

    println!("\nSchur expansion:");
    let mut total = MPoly::zero(n - 1);
    for lam in LevelBasis::new(n, k).labels() {
        let c = fuse(&lam, &mu, n, k)?
            .get(&nu.to_level(n, k)?)
            .copied()
            .unwrap_or(0);
        if c == 0 {
            continue;
        }
        let stripped = lam.strip_full_columns(n);
        let s = csym::commutative_schur(&stripped, n - 1);
        println!(
            "  {c} * s_({stripped})  [label ({lam})]  where s_({stripped}) = {}",
            s.to_string_with(&uname)
        );
        total = &total + &s.mul_monomial(&vec![0; n - 1], c as i64);
    }
    assert_eq!(total, z);
    println!("\nexpansion reproduces the polynomial exactly");
    Ok(())
}
