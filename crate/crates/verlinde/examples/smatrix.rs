//! Build the modular S-matrix of a sector, confirm it is unitary and
//! symmetric, and recover fusion coefficients from the diagonalization
//! formula.
//!
//! Run with: `cargo run --example smatrix`

use verlinde::fusion::smatrix::smatrix;
use verlinde::fusion::fuse;

fn main() -> Result<(), verlinde::Error> {
    let (n, k) = (3, 2);
    let s = smatrix(n, k);
    println!("S-matrix for n={n}, k={k}: {} x {}", s.dim(), s.dim());
    println!("unitarity defect:  {:.3e}", s.unitarity_defect());
    println!("symmetry defect:   {:.3e}", s.symmetry_defect());
    println!("min |vacuum row|:  {:.6}", s.min_vacuum_modulus());

    println!("\nlabels: {:?}", s.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>());
    println!("\ndiagonalization route vs plactic route:");
    let labels = s.labels().to_vec();
    for li in 0..s.dim() {
        for mi in li..s.dim() {
            let plactic = fuse(&labels[li], &labels[mi], n, k)?;
            for (ni, nu) in labels.iter().enumerate() {
                let rounded = s
                    .fusion_coefficient(li, mi, ni)
                    .map_err(verlinde::Error::CheckFailed)?;
                let direct = plactic.get(nu).copied().unwrap_or(0);
                assert_eq!(rounded, direct);
                if rounded > 0 {
                    println!(
                        "  ({}) * ({}) -> ({}): {rounded}",
                        labels[li], labels[mi], nu
                    );
                }
            }
        }
    }
    println!("all coefficients agree");
    Ok(())
}
