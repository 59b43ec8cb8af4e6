//! Row transfer matrices as generating functions: the coefficient of `u^r`
//! in `Q(u)` is the complete symmetric operator `h_r`, and in `T(u)` the
//! elementary symmetric operator `e_r` (with top term `z` times the
//! identity at degree `n`).
//!
//! Run with: `cargo run --example transfer_matrices`

use verlinde::lattice::{transfer_q, transfer_t};
use verlinde::ncsym::{apply_h, e_operator, h_operator};
use verlinde::{Composition, LevelBasis, LevelOperator, StateVec, ZPoly};

fn main() {
    let (n, k) = (3, 2);
    let basis = LevelBasis::new(n, k);

    let q = transfer_q(&basis);
    for r in 0..=k {
        let from_q = q.coeff(r).cloned().unwrap_or_else(|| LevelOperator::zero(&basis));
        assert!((&from_q - &h_operator(&basis, r)).is_zero());
        println!("coefficient of u^{r} in Q(u) equals h_{r}");
    }
    assert!(q.coeff(k + 1).is_none(), "Q(u) truncates at degree k");

    let t = transfer_t(&basis);
    for r in 0..n as u32 {
        let from_t = t.coeff(r).cloned().unwrap_or_else(|| LevelOperator::zero(&basis));
        assert!((&from_t - &e_operator(&basis, r)).is_zero());
        println!("coefficient of u^{r} in T(u) equals e_{r}");
    }
    let top = LevelOperator::identity(&basis).scaled(&ZPoly::z());
    assert!((&top - t.coeff(n as u32).unwrap()).is_zero());
    println!("coefficient of u^{n} in T(u) equals z * identity");

    // The same operator on one concrete state, with the wrap visible as z.
    let m = Composition::new(vec![1, 0, 1]);
    println!("\nh_1 applied to occupation {:?}:", m.0);
    let v = StateVec::basis_state(m).then(|s| apply_h(1, s));
    for (t, c) in v.iter() {
        println!("  {:?} with coefficient {}", t.0, c);
    }
}
