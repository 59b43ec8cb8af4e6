//! Noncommutative Schur polynomials acting on sector states: the structure
//! constants of the fusion ring appear directly as matrix elements, with
//! the twist variable `z` counting absorbed full-height columns.
//!
//! Run with: `cargo run --example schur_action`

use verlinde::ncsym::{apply_schur, apply_schur_finite};
use verlinde::{Composition, PartitionLabel};

fn main() -> Result<(), verlinde::Error> {
    let (n, k) = (3, 2);
    let lambda: PartitionLabel = "2,1".parse()?;
    let lambda_level = lambda.to_level(n, k)?;
    let mu: PartitionLabel = "2,1".parse()?;
    let m: Composition = mu.to_level(n, k)?.to_composition(n);

    println!("s_({lambda_level}) acting on ({mu}) in the cyclic alphabet:");
    for (t, c) in apply_schur(&lambda_level, &m).iter() {
        println!("  -> ({}) with coefficient {}", t.to_partition(), c);
    }

    println!("\nsame label in the open alphabet (twist set to zero):");
    let v = apply_schur_finite(&lambda, &m);
    if v.is_zero() {
        println!("  (annihilated)");
    } else {
        for (t, c) in v.iter() {
            println!("  -> ({}) with coefficient {}", t.to_partition(), c);
        }
    }
    Ok(())
}
