//! Complete, elementary and Schur polynomials in the hopping generators.
//!
//! The hopping generators `a_0, ..., a_{n-1}` play the role of a
//! noncommutative alphabet.  Symmetric polynomials in this alphabet act on
//! the level-`k` sectors:
//!
//! * the complete polynomial `h_r` sums all weakly cyclically ordered words
//!   of length `r`, with an equivalent closed description as a single sweep
//!   that removes `eps_i` particles from site `i` and re-inserts `eps_{i-1}`
//!   (indices cyclic, `z` per particle through the boundary);
//! * the elementary polynomial `e_r` sums all strictly cyclically decreasing
//!   words of length `r`, with the recursion
//!   `e_r = e_r' + z phi_n e'_{r-1} phi*_1` reducing to the open chain;
//! * Schur polynomials are determinants of `h`'s (the entries commute, which
//!   [`check_commutativity`] verifies).
//!
//! Primed (`*_finite`) variants use only `a_1, ..., a_{n-1}` — the open
//! chain, equivalently the `z = 0` part of the full operators.

use crate::fock::{LevelOperator, StateVec};
use crate::phase::{gen_a, phi, phi_star};
use crate::util::signed_permutations;
use crate::weights::{Composition, LevelBasis, PartitionLabel};
use crate::zpoly::ZPoly;

/// Complete polynomial `h_r` in the full cyclic alphabet.
///
/// Closed form of the action: choose `eps = (eps_0, ..., eps_{n-1})` with
/// `|eps| = r`, remove `eps_i` particles from site `i` for `i >= 1` and
/// `eps_0` from site `n`, then put `eps_{i-1}` back at site `i` (`eps_0` at
/// site 1); each boundary passage contributes `z`.
pub fn apply_h(r: u32, m: &Composition) -> StateVec {
    h_sweep(r, m, true)
}

/// Complete polynomial `h_r` in the open alphabet `a_1, ..., a_{n-1}`.
pub fn apply_h_finite(r: u32, m: &Composition) -> StateVec {
    h_sweep(r, m, false)
}

fn h_sweep(r: u32, m: &Composition, wrap: bool) -> StateVec {
    let n = m.rank();
    let mut out = StateVec::zero(n);
    let eps0_max = if wrap { r.min(m.get(n - 1)) } else { 0 };
    let mut eps = vec![0u32; n];
    for eps0 in 0..=eps0_max {
        eps[0] = eps0;
        h_rec(m, r - eps0, 1, &mut eps, &mut out);
    }
    out
}

// Fill eps[site..] subject to eps[i] <= m_i, total = rest, then emit the
// resulting state.  eps[0] is the boundary flux (annihilated at site n,
// created at site 1).
fn h_rec(m: &Composition, rest: u32, site: usize, eps: &mut Vec<u32>, out: &mut StateVec) {
    let n = m.rank();
    if site == n {
        if rest != 0 {
            return;
        }
        let mut parts = Vec::with_capacity(n);
        for i in 0..n {
            let removed = if i == n - 1 { eps[0] } else { eps[i + 1] };
            let added = eps[i];
            parts.push(m.get(i) - removed + added);
        }
        out.add_term(Composition::new(parts), ZPoly::monomial(eps[0], 1));
        return;
    }
    // eps[site] is removed from site `site` (1-based), capped by occupancy.
    for e in 0..=rest.min(m.get(site - 1)) {
        eps[site] = e;
        h_rec(m, rest - e, site + 1, eps, out);
        eps[site] = 0;
    }
}

/// Elementary polynomial `e_r` in the open alphabet: the sum of all products
/// `a_{i_1} ... a_{i_r}` with strictly decreasing indices in `1..n`, the
/// smallest index acting first.
pub fn apply_e_finite(r: u32, m: &Composition) -> StateVec {
    let n = m.rank();
    let mut out = StateVec::zero(n);
    if r as usize > n - 1 {
        return out;
    }
    // Iterate over r-element subsets of {1, ..., n-1} as bitmasks.
    let letters = n - 1;
    for mask in 0u32..(1 << letters) {
        if mask.count_ones() != r {
            continue;
        }
        let mut v = StateVec::basis_state(m.clone());
        for j in 1..=letters {
            if mask & (1 << (j - 1)) != 0 {
                v = v.then(|s| gen_a(j, s));
                if v.is_zero() {
                    break;
                }
            }
        }
        out = &out + &v;
    }
    out
}

/// Elementary polynomial `e_r` in the full cyclic alphabet via the boundary
/// recursion `e_r = e'_r + z phi_n e'_{r-1} phi*_1`.  In particular `e_n`
/// acts as multiplication by `z` and `e_r = 0` for `r > n`.
pub fn apply_e(r: u32, m: &Composition) -> StateVec {
    let n = m.rank();
    let mut out = apply_e_finite(r, m);
    if r >= 1 {
        let boundary = StateVec::basis_state(m.clone())
            .then(|s| phi_star(1, s))
            .then(|s| apply_e_finite(r - 1, s))
            .then(|s| phi(n, s))
            .scaled(&ZPoly::z());
        out = &out + &boundary;
    }
    out
}

/// `h_r` as a sum over cyclic words, one per multiset: arrange the letters
/// weakly increasing clockwise starting just past the first absent letter.
/// Agrees with [`apply_h`] for `r < n`, where every multiset has a gap.
pub fn apply_h_cyclic(r: u32, m: &Composition) -> StateVec {
    let n = m.rank();
    assert!((r as usize) < n, "cyclic word form needs r < n");
    let mut out = StateVec::zero(n);
    let mut eps = vec![0u32; n];
    cyclic_h_rec(m, r, 0, &mut eps, &mut out);
    out
}

fn cyclic_h_rec(m: &Composition, rest: u32, letter: usize, eps: &mut Vec<u32>, out: &mut StateVec) {
    let n = m.rank();
    if letter == n {
        if rest != 0 {
            return;
        }
        let gap = (0..n).find(|&j| eps[j] == 0).expect("r < n forces a gap");
        // Clockwise from the gap: letters gap+1, gap+2, ..., applied
        // rightmost first (the letter nearest the far side of the gap).
        let mut word = Vec::new();
        for t in 1..n {
            let j = (gap + t) % n;
            for _ in 0..eps[j] {
                word.push(j);
            }
        }
        let mut v = StateVec::basis_state(m.clone());
        for &j in word.iter().rev() {
            v = v.then(|s| gen_a(j, s));
            if v.is_zero() {
                break;
            }
        }
        *out = &*out + &v;
        return;
    }
    for e in 0..=rest {
        eps[letter] = e;
        cyclic_h_rec(m, rest - e, letter + 1, eps, out);
        eps[letter] = 0;
    }
}

/// `e_r` as a sum over cyclic words, one per `r`-element subset of the
/// letters: arrange the subset strictly decreasing anticlockwise starting
/// just below the first absent letter.  Agrees with [`apply_e`] for `r < n`.
pub fn apply_e_cyclic(r: u32, m: &Composition) -> StateVec {
    let n = m.rank();
    assert!((r as usize) < n, "cyclic word form needs r < n");
    let mut out = StateVec::zero(n);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != r {
            continue;
        }
        let member = |j: usize| mask & (1 << j) != 0;
        let gap = (0..n).find(|&j| !member(j)).expect("r < n forces a gap");
        let mut word = Vec::new();
        for t in 1..n {
            let j = (gap + n - t) % n;
            if member(j) {
                word.push(j);
            }
        }
        let mut v = StateVec::basis_state(m.clone());
        for &j in word.iter().rev() {
            v = v.then(|s| gen_a(j, s));
            if v.is_zero() {
                break;
            }
        }
        out = &out + &v;
    }
    out
}

// Apply the determinant det[op_{deg(i,j)}] to a state by Leibniz expansion;
// degree 0 is the identity, negative degrees give zero.
fn det_apply(
    size: usize,
    deg: &dyn Fn(usize, usize) -> i64,
    m: &Composition,
    op: &dyn Fn(u32, &Composition) -> StateVec,
) -> StateVec {
    let n = m.rank();
    let mut out = StateVec::zero(n);
    'perms: for (perm, sign) in signed_permutations(size) {
        let mut degs = Vec::with_capacity(size);
        for (i, &pi) in perm.iter().enumerate() {
            let d = deg(i, pi);
            if d < 0 {
                continue 'perms;
            }
            degs.push(d as u32);
        }
        let mut v = StateVec::basis_state(m.clone());
        for &d in degs.iter().rev() {
            if d == 0 {
                continue;
            }
            v = v.then(|s| op(d, s));
            if v.is_zero() {
                break;
            }
        }
        let signed = v.scaled(&ZPoly::constant(sign));
        out = &out + &signed;
    }
    out
}

/// Schur polynomial `s_lambda` in the full alphabet, as the determinant
/// `det[h_{lambda_i - i + j}]` over the nonzero rows of `lambda`.
pub fn apply_schur(lambda: &PartitionLabel, m: &Composition) -> StateVec {
    let rows = lambda.parts().to_vec();
    if rows.is_empty() {
        return StateVec::basis_state(m.clone());
    }
    det_apply(
        rows.len(),
        &|i, j| rows[i] as i64 - i as i64 + j as i64,
        m,
        &apply_h,
    )
}

/// Schur polynomial in the open alphabet (the `z = 0` specialisation).
pub fn apply_schur_finite(lambda: &PartitionLabel, m: &Composition) -> StateVec {
    let rows = lambda.parts().to_vec();
    if rows.is_empty() {
        return StateVec::basis_state(m.clone());
    }
    det_apply(
        rows.len(),
        &|i, j| rows[i] as i64 - i as i64 + j as i64,
        m,
        &apply_h_finite,
    )
}

/// Matrix of `h_r` on a sector.
pub fn h_operator(basis: &LevelBasis, r: u32) -> LevelOperator {
    LevelOperator::from_fn(basis, |m| apply_h(r, m))
}

/// Matrix of `e_r` on a sector.
pub fn e_operator(basis: &LevelBasis, r: u32) -> LevelOperator {
    LevelOperator::from_fn(basis, |m| apply_e(r, m))
}

/// Matrix of `s_lambda` on a sector.
pub fn schur_operator(basis: &LevelBasis, lambda: &PartitionLabel) -> LevelOperator {
    LevelOperator::from_fn(basis, |m| apply_schur(lambda, m))
}

/// Verify that the cyclic word forms of `h_r` and `e_r` agree with the sweep
/// and recursion implementations for all `r < n` on every sector up to level
/// `kmax`.
pub fn check_cyclic_forms(n: usize, kmax: u32) -> Result<(), String> {
    for k in 0..=kmax {
        for m in LevelBasis::new(n, k).states() {
            for r in 0..n as u32 {
                let a = apply_h(r, m);
                let b = apply_h_cyclic(r, m);
                if a != b {
                    return Err(format!(
                        "h_{r} sweep vs cyclic words differ on {m}: {a} vs {b}"
                    ));
                }
                let a = apply_e(r, m);
                let b = apply_e_cyclic(r, m);
                if a != b {
                    return Err(format!(
                        "e_{r} recursion vs cyclic words differ on {m}: {a} vs {b}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Verify that all `h_r` and `e_s` commute pairwise on the level-`k` sector:
/// `[h_r, h_s] = [e_r, e_s] = [h_r, e_s] = 0` for `r, s` up to the largest
/// degrees that act nontrivially (`k` for `h`, `n` for `e`).
pub fn check_commutativity(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let hmax = k;
    let emax = n as u32;
    let pairs = |amax: u32, bmax: u32| {
        let mut v = Vec::new();
        for r in 1..=amax {
            for s in 1..=bmax {
                v.push((r, s));
            }
        }
        v
    };
    for m in basis.states() {
        let v = StateVec::basis_state(m.clone());
        for (r, s) in pairs(hmax, hmax) {
            if s <= r {
                continue;
            }
            let ab = v.then(|x| apply_h(s, x)).then(|x| apply_h(r, x));
            let ba = v.then(|x| apply_h(r, x)).then(|x| apply_h(s, x));
            if ab != ba {
                return Err(format!("[h_{r}, h_{s}] != 0 on {m}"));
            }
        }
        for (r, s) in pairs(emax, emax) {
            if s <= r {
                continue;
            }
            let ab = v.then(|x| apply_e(s, x)).then(|x| apply_e(r, x));
            let ba = v.then(|x| apply_e(r, x)).then(|x| apply_e(s, x));
            if ab != ba {
                return Err(format!("[e_{r}, e_{s}] != 0 on {m}"));
            }
        }
        for (r, s) in pairs(hmax, emax) {
            let ab = v.then(|x| apply_e(s, x)).then(|x| apply_h(r, x));
            let ba = v.then(|x| apply_h(r, x)).then(|x| apply_e(s, x));
            if ab != ba {
                return Err(format!("[h_{r}, e_{s}] != 0 on {m}"));
            }
        }
    }
    Ok(())
}

/// Verify the determinant identities relating `h` and `e` on the level-`k`
/// sector for all degrees `1 <= r <= rmax`:
///
/// * `h_r = det[e_{1 - i + j}]` (an `r x r` determinant), and
/// * `e_r = det[h_{1 - i + j}]`,
///
/// in both the full and the open alphabet.
pub fn check_jacobi_trudi(n: usize, k: u32, rmax: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    for m in basis.states() {
        for r in 1..=rmax {
            let size = r as usize;
            let deg = |i: usize, j: usize| 1 - i as i64 + j as i64;

            let direct = apply_h(r, m);
            let det = det_apply(size, &deg, m, &apply_e);
            if direct != det {
                return Err(format!("h_{r} != det of e's on {m}: {direct} vs {det}"));
            }

            let direct = apply_e(r, m);
            let det = det_apply(size, &deg, m, &apply_h);
            if direct != det {
                return Err(format!("e_{r} != det of h's on {m}: {direct} vs {det}"));
            }

            let direct = apply_h_finite(r, m);
            let det = det_apply(size, &deg, m, &apply_e_finite);
            if direct != det {
                return Err(format!("open h_{r} != det of e's on {m}"));
            }

            let direct = apply_e_finite(r, m);
            let det = det_apply(size, &deg, m, &apply_h_finite);
            if direct != det {
                return Err(format!("open e_{r} != det of h's on {m}"));
            }
        }
    }
    Ok(())
}

/// Verify the top-degree specialisations on the level-`k` sector: `h_k` acts
/// as the twisted cyclic shift `m -> z^{m_n} (m_n, m_1, ..., m_{n-1})`,
/// `h_r = 0` for `r > k`, `e_n = z`, and `e_r = 0` for `r > n`.
pub fn check_top_degrees(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    for m in basis.states() {
        let got = apply_h(k, m);
        let want = StateVec::from_term(m.rotated(), ZPoly::monomial(m.get(n - 1), 1));
        if got != want {
            return Err(format!("h_{k} on {m}: got {got}, want twisted rotation {want}"));
        }
        for r in k + 1..=k + 2 {
            if !apply_h(r, m).is_zero() {
                return Err(format!("h_{r} does not vanish on {m} at level {k}"));
            }
        }
        let got = apply_e(n as u32, m);
        let want = StateVec::from_term(m.clone(), ZPoly::z());
        if got != want {
            return Err(format!("e_{n} on {m}: got {got}, want z"));
        }
        for r in n as u32 + 1..=n as u32 + 2 {
            if !apply_e(r, m).is_zero() {
                return Err(format!("e_{r} does not vanish on {m}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn lam(parts: &[u32]) -> PartitionLabel {
        PartitionLabel::new(parts.to_vec())
    }

    #[test]
    fn h1_equals_sum_of_generators() {
        let s = m(&[1, 0, 1]);
        let mut want = StateVec::zero(3);
        for j in 0..3 {
            want = &want + &gen_a(j, &s);
        }
        assert_eq!(apply_h(1, &s), want);
        // Explicitly: a_1 moves 1->2, a_2 kills, a_0 wraps with z.
        let mut expect = StateVec::basis_state(m(&[0, 1, 1]));
        expect.add_term(m(&[2, 0, 0]), ZPoly::z());
        assert_eq!(apply_h(1, &s), expect);
    }

    #[test]
    fn h2_worked_example() {
        // On (0,1,1) the only sweeps of size two are eps = (1,0,1), giving
        // z * (1,0,1); this also matches the twisted rotation at top degree.
        let got = apply_h(2, &m(&[0, 1, 1]));
        assert_eq!(got, StateVec::from_term(m(&[1, 0, 1]), ZPoly::z()));
        assert_eq!(apply_h(2, &m(&[1, 1, 0])), StateVec::basis_state(m(&[0, 1, 1])));
    }

    #[test]
    fn e2_worked_example() {
        // e_2 = a_2 a_1 + a_1 a_0 + a_0 a_2 on three sites.
        let got = apply_e(2, &m(&[1, 0, 1]));
        let mut want = StateVec::basis_state(m(&[0, 0, 2]));
        want.add_term(m(&[1, 1, 0]), ZPoly::z());
        assert_eq!(got, want);
    }

    #[test]
    fn degree_zero_is_identity() {
        let s = m(&[2, 1, 0]);
        assert_eq!(apply_h(0, &s), StateVec::basis_state(s.clone()));
        assert_eq!(apply_e(0, &s), StateVec::basis_state(s.clone()));
    }

    #[test]
    fn top_degrees_all_small_sectors() {
        for n in 2..=4 {
            for k in 0..=3 {
                check_top_degrees(n, k).unwrap();
            }
        }
    }

    #[test]
    fn cyclic_forms_agree() {
        for n in 3..=4 {
            check_cyclic_forms(n, 3).unwrap();
        }
    }

    #[test]
    fn h_and_e_commute_small() {
        check_commutativity(3, 3).unwrap();
        check_commutativity(4, 2).unwrap();
    }

    #[test]
    fn jacobi_trudi_small() {
        check_jacobi_trudi(3, 2, 4).unwrap();
    }

    #[test]
    fn schur_of_row_and_column() {
        for n in 3..=4 {
            let basis = LevelBasis::new(n, 2);
            for s in basis.states() {
                for r in 1..=3u32 {
                    assert_eq!(apply_schur(&lam(&[r]), s), apply_h(r, s));
                    let col = lam(&vec![1; r as usize]);
                    assert_eq!(apply_schur(&col, s), apply_e(r, s));
                }
            }
        }
    }

    #[test]
    fn schur_operator_matches_functional_form() {
        let basis = LevelBasis::new(3, 2);
        let lambda = lam(&[2, 1]);
        let op = schur_operator(&basis, &lambda);
        for s in basis.states() {
            let via_matrix = op.apply(&StateVec::basis_state(s.clone()));
            assert_eq!(via_matrix, apply_schur(&lambda, s));
        }
    }

    #[test]
    fn open_alphabet_is_z_zero_part() {
        // Dropping every term with a positive power of z from the full h_r
        // leaves exactly the open-chain h_r; likewise for e_r.
        let basis = LevelBasis::new(4, 3);
        for s in basis.states() {
            for r in 0..=3u32 {
                let full = apply_h(r, s);
                let mut z0 = StateVec::zero(4);
                for (t, c) in full.iter() {
                    let c0 = ZPoly::constant(c.coeff(0));
                    z0.add_term(t.clone(), c0);
                }
                assert_eq!(z0, apply_h_finite(r, s));

                let full = apply_e(r, s);
                let mut z0 = StateVec::zero(4);
                for (t, c) in full.iter() {
                    let c0 = ZPoly::constant(c.coeff(0));
                    z0.add_term(t.clone(), c0);
                }
                assert_eq!(z0, apply_e_finite(r, s));
            }
        }
    }
}
