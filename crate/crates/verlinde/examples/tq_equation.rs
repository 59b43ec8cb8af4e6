//! The functional equation between the two transfer matrices: multiplying
//! `T(-u)` and `Q(u)` collapses the whole spectral-parameter dependence to
//! two terms — the identity, and a single top-degree term proportional to
//! the highest complete symmetric operator times the twist.
//!
//! Run with: `cargo run --example tq_equation`

use verlinde::lattice::{transfer_q, transfer_t};
use verlinde::ncsym::h_operator;
use verlinde::{LevelBasis, LevelOperator, ZPoly};

fn main() {
    let (n, k) = (3, 2);
    let basis = LevelBasis::new(n, k);
    let product = transfer_t(&basis).negate_u().mul(&transfer_q(&basis));

    let degrees: Vec<u32> = product.degrees().collect();
    println!("surviving powers of u in T(-u)Q(u) at n={n}, k={k}: {degrees:?}");
    assert_eq!(degrees, vec![0, (n as u32) + k]);

    let id = LevelOperator::identity(&basis);
    assert!((&id - product.coeff(0).unwrap()).is_zero());
    println!("coefficient of u^0 is the identity");

    let sign = if n % 2 == 0 { 1 } else { -1 };
    let top = h_operator(&basis, k).scaled(&ZPoly::monomial(1, sign));
    assert!((&top - product.coeff(n as u32 + k).unwrap()).is_zero());
    println!(
        "coefficient of u^{} is {}z * h_{k}",
        n as u32 + k,
        if sign < 0 { "-" } else { "" }
    );
}
