//! The level-lowering recursion: a fusion coefficient with a
//! near-rectangular left factor splits into a horizontal-strip indicator
//! plus a lower-level coefficient with one column removed from each side.
//!
//! Run with: `cargo run --example fusion_recursion`

use verlinde::fusion::lr::is_horizontal_strip;
use verlinde::fusion::{fuse, fusion_recursion_check};
use verlinde::{Composition, PartitionLabel};

fn lower(m: &Composition, site: usize) -> Option<Composition> {
    (m.get(site) > 0).then(|| {
        let mut v = m.0.clone();
        v[site] -= 1;
        Composition::new(v)
    })
}

fn main() -> Result<(), verlinde::Error> {
    let (n, k, r) = (3, 2, 1u32);
    let lam: PartitionLabel = "2,1,1".parse()?; // the (k, (k-r)^{n-1}) label
    let mu: PartitionLabel = "2,1".parse()?;
    let nu: PartitionLabel = "2,2".parse()?;

    let lhs = fuse(&lam, &mu, n, k)?.get(&nu).copied().unwrap_or(0);
    println!("({lam}) * ({mu}) -> ({nu}) at level {k}: coefficient {lhs}");

    let strip = u64::from(nu.size() == mu.size() + r && is_horizontal_strip(&mu, &nu));
    println!("horizontal-strip indicator: {strip}");

    let lowered = match (
        lower(&nu.to_composition(n), 0),
        lower(&mu.to_composition(n), n - 1),
    ) {
        (Some(numm), Some(mumm)) => {
            let lam_prev: PartitionLabel = "1,1,1".parse()?;
            fuse(&lam_prev, &mumm.to_partition(), n, k - 1)?
                .get(&numm.to_partition())
                .copied()
                .unwrap_or(0)
        }
        _ => 0,
    };
    println!("level-{} term: {lowered}", k - 1);
    assert_eq!(lhs, strip + lowered);
    println!("recursion instance confirmed: {lhs} = {strip} + {lowered}");

    fusion_recursion_check(n, 3)?;
    println!("\nfull recursion verified for all labels and r at n={n}, levels 1..=3");
    Ok(())
}
