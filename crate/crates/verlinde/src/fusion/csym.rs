//! Ordinary (commutative) symmetric polynomials in finitely many variables,
//! with exact integer coefficients: complete homogeneous sums, Schur
//! polynomials via the determinant formula, and an independent tableau
//! expansion used to cross-check it.

use crate::mvpoly::MPoly;
use crate::util::signed_permutations;
use crate::weights::PartitionLabel;

/// The complete homogeneous symmetric polynomial `h_r(x_1..x_l)`: the sum of
/// every degree-`r` monomial, each with coefficient 1.
pub fn complete_homogeneous(r: u32, l: usize) -> MPoly {
    let mut out = MPoly::zero(l);
    let mut exps = vec![0i32; l];
    fn rec(var: usize, left: u32, exps: &mut Vec<i32>, out: &mut MPoly) {
        let l = exps.len();
        if var + 1 == l {
            exps[var] = left as i32;
            out.add_term(exps, 1);
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e as i32;
            rec(var + 1, left - e, exps, out);
            exps[var] = 0;
        }
    }
    if l == 0 {
        return if r == 0 { MPoly::one(0) } else { MPoly::zero(0) };
    }
    rec(0, r, &mut exps, &mut out);
    out
}

/// The Schur polynomial `s_lambda(x_1..x_l)` from the determinant
/// `det[h_{lambda_i - i + j}]` expanded by permutations (the entries
/// commute).  Vanishes identically when `lambda` has more than `l` rows.
pub fn commutative_schur(lambda: &PartitionLabel, l: usize) -> MPoly {
    let size = lambda.len();
    if size == 0 {
        return MPoly::one(l);
    }
    let mut out = MPoly::zero(l);
    'perm: for (perm, sign) in signed_permutations(size) {
        let mut term = MPoly::constant(l, sign);
        for (i, &j) in perm.iter().enumerate() {
            let deg = lambda.part(i + 1) as i64 - (i as i64) + (j as i64);
            if deg < 0 {
                continue 'perm;
            }
            term = &term * &complete_homogeneous(deg as u32, l);
        }
        out = &out + &term;
    }
    out
}

/// The Schur polynomial by direct enumeration of column-strict tableaux of
/// shape `lambda` with entries in `1..=l`, summing `x^content`.
pub fn schur_by_tableaux(lambda: &PartitionLabel, l: usize) -> MPoly {
    let rows = lambda.len();
    if rows == 0 {
        return MPoly::one(l);
    }
    if rows > l {
        return MPoly::zero(l);
    }
    let mut out = MPoly::zero(l);
    let mut fill: Vec<Vec<u32>> = (1..=rows).map(|r| vec![0; lambda.part(r) as usize]).collect();
    let mut content = vec![0i32; l];
    fn rec(
        lambda: &PartitionLabel,
        r: usize,
        c: usize,
        l: usize,
        fill: &mut Vec<Vec<u32>>,
        content: &mut Vec<i32>,
        out: &mut MPoly,
    ) {
        let rows = lambda.len();
        if r >= rows {
            out.add_term(content, 1);
            return;
        }
        let width = lambda.part(r + 1) as usize;
        if c >= width {
            rec(lambda, r + 1, 0, l, fill, content, out);
            return;
        }
        let min_row = if c > 0 { fill[r][c - 1] } else { 1 };
        let min_col = if r > 0 && c < lambda.part(r) as usize { fill[r - 1][c] + 1 } else { 1 };
        for v in min_row.max(min_col)..=l as u32 {
            fill[r][c] = v;
            content[(v - 1) as usize] += 1;
            rec(lambda, r, c + 1, l, fill, content, out);
            content[(v - 1) as usize] -= 1;
            fill[r][c] = 0;
        }
    }
    rec(lambda, 0, 0, l, &mut fill, &mut content, &mut out);
    out
}

/// Verify the defining properties on all shapes inside a `rows x width`
/// box: the determinant and tableau expansions agree, the recursion
/// `h_r(x_1..x_m) = h_r(x_1..x_{m-1}) + x_m h_{r-1}(x_1..x_m)` holds, and
/// every expansion is symmetric under swapping the last two variables.
pub fn check_commutative_schur(rows: usize, width: u32, l: usize) -> Result<(), String> {
    for r in 1..=width {
        for m in 1..=l {
            let lhs = complete_homogeneous(r, m);
            let smaller = complete_homogeneous(r, m - 1).remap_vars(m, &identity_map(m - 1));
            let mut xm = vec![0i32; m];
            xm[m - 1] = 1;
            let rhs = &smaller + &complete_homogeneous(r - 1, m).mul_monomial(&xm, 1);
            if lhs != rhs {
                return Err(format!("h recursion fails at r={r}, m={m}"));
            }
        }
    }
    for lambda in super::lr::partitions_in_box(rows, width) {
        let det = commutative_schur(&lambda, l);
        let tab = schur_by_tableaux(&lambda, l);
        if det != tab {
            return Err(format!("determinant and tableau expansions differ at {lambda}"));
        }
        if l >= 2 {
            let mut swap: Vec<usize> = (0..l).collect();
            swap.swap(l - 1, l - 2);
            if det.remap_vars(l, &swap) != det {
                return Err(format!("expansion of {lambda} is not symmetric"));
            }
        }
    }
    Ok(())
}

fn identity_map(l: usize) -> Vec<usize> {
    (0..l).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> PartitionLabel {
        PartitionLabel::new(parts.to_vec())
    }

    #[test]
    fn h_small_values() {
        // h_2(x, y) = x^2 + xy + y^2.
        let h2 = complete_homogeneous(2, 2);
        assert_eq!(h2.coeff(&[2, 0]), 1);
        assert_eq!(h2.coeff(&[1, 1]), 1);
        assert_eq!(h2.coeff(&[0, 2]), 1);
        assert_eq!(h2.iter().count(), 3);
        assert_eq!(complete_homogeneous(0, 3), MPoly::one(3));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(commutative_schur(&p(&[]), 2), MPoly::one(2));
        // s_(1)(x, y) = x + y.
        let s1 = commutative_schur(&p(&[1]), 2);
        assert_eq!(s1, &MPoly::variable(2, 0) + &MPoly::variable(2, 1));
        // s_(2,1)(x, y) = x^2 y + x y^2: exactly the two column-strict
        // tableaux.
        let s21 = commutative_schur(&p(&[2, 1]), 2);
        assert_eq!(s21.coeff(&[2, 1]), 1);
        assert_eq!(s21.coeff(&[1, 2]), 1);
        assert_eq!(s21.iter().count(), 2);
    }

    #[test]
    fn too_many_rows_vanish() {
        assert!(commutative_schur(&p(&[1, 1]), 1).is_zero());
        assert!(schur_by_tableaux(&p(&[2, 1, 1]), 2).is_zero());
    }

    #[test]
    fn determinant_matches_tableaux() {
        check_commutative_schur(3, 3, 3).unwrap();
        check_commutative_schur(2, 2, 4).unwrap();
    }
}
