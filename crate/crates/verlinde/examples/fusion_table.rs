//! Compute a full fusion table and print it as CSV, then look one product
//! up by its labels.
//!
//! Run with: `cargo run --example fusion_table`

use verlinde::fusion::{fuse, fuse_formal, FusionTable};
use verlinde::PartitionLabel;

fn main() -> Result<(), verlinde::Error> {
    let (n, k) = (3, 2);
    let table = FusionTable::build(n, k)?;
    println!("fusion table for n={n}, k={k} ({} labels):\n", table.dim());
    print!("{}", table.to_csv());

    // A single product, with and without the twist variable: the power of
    // z counts how many full-height columns were absorbed.
    let lhs: PartitionLabel = "2,1".parse()?;
    let rhs: PartitionLabel = "2,2".parse()?;
    println!("\n({lhs}) * ({rhs}):");
    for (nu, c) in fuse(&lhs, &rhs, n, k)? {
        println!("  -> ({nu}) with coefficient {c}");
    }
    println!("with the twist kept formal:");
    for (nu, c) in fuse_formal(&lhs, &rhs, n, k)? {
        println!("  -> ({nu}) with coefficient {c}");
    }
    Ok(())
}
