//! At twist zero the plactic Schur action reproduces classical
//! Littlewood-Richardson numbers, including genuine multiplicities.
//!
//! Run with: `cargo run --example littlewood_richardson`

use verlinde::fusion::grassmannian_check;
use verlinde::fusion::lr::lr_coefficient;
use verlinde::ncsym::apply_schur_finite;
use verlinde::PartitionLabel;

fn main() -> Result<(), verlinde::Error> {
    // A multiplicity-2 instance: two lattice-word tableaux fill the skew
    // shape (3,3,2,1)/(3,2,1) with content (2,1).
    let lambda: PartitionLabel = "2,1".parse()?;
    let mu: PartitionLabel = "3,2,1".parse()?;
    let nu: PartitionLabel = "3,3,2,1".parse()?;
    let c = lr_coefficient(&lambda, &mu, &nu);
    println!("c^({nu})_({lambda}),({mu}) = {c}");
    assert_eq!(c, 2);

    // The same number as a matrix element of the open-alphabet Schur
    // operator on the level-3 sector with four sites.
    let (n, k) = (4, 3);
    let action = apply_schur_finite(&lambda, &mu.to_level(n, k)?.to_composition(n));
    let elem = action
        .coeff(&nu.to_level(n, k)?.to_composition(n))
        .map(|z| z.coeff(0))
        .unwrap_or(0);
    println!("matrix element of s_({lambda}) from ({mu}) to ({nu}): {elem}");
    assert_eq!(elem, 2);

    // Exhaustive agreement on a smaller sector.
    grassmannian_check(3, 2)?;
    println!("all open-alphabet products match tableau counts at n=3, k=2");
    Ok(())
}
