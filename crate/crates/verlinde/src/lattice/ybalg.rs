//! Matrix elements of the monodromy in the auxiliary space, and the exchange
//! relations between the two transfer matrices' building blocks.
//!
//! The two-dimensional auxiliary line gives four operators `A, B, C, D`
//! (with the boundary twist `z` attached to the occupied-auxiliary row, so
//! `C` and `D` carry one power of `z`); the unbounded auxiliary line gives a
//! family `Q_{e', e}` carrying `z^{e'}`.  All of them act between level
//! sectors, so the checks here are functional: operators are composed by
//! linear extension and compared on basis states, with exact Laurent
//! coefficients in `u` (the two-dimensional line) and `v` (the unbounded
//! one).

use crate::fock::StateVec;
use crate::mvpoly::{var, MPoly};
use crate::ncsym::apply_h_finite;
use crate::weights::{Composition, LevelBasis};
use crate::zpoly::ZPoly;

use super::{transfer_q, transfer_t};

/// Lift integer-in-`z` coefficients into the multivariate Laurent ring.
pub fn to_mpoly(v: &StateVec<ZPoly>) -> StateVec<MPoly> {
    let mut out = StateVec::zero(v.rank());
    for (m, c) in v.iter() {
        out.add_term(m.clone(), MPoly::from_zpoly(c, var::NVARS, var::Z));
    }
    out
}

fn lower(site: usize, m: &Composition) -> StateVec<MPoly> {
    let occ = m.get(site - 1);
    if occ == 0 {
        return StateVec::zero(m.rank());
    }
    let mut parts = m.0.clone();
    parts[site - 1] = occ - 1;
    StateVec::from_term(Composition::new(parts), MPoly::one(var::NVARS))
}

fn raise(site: usize, m: &Composition) -> StateVec<MPoly> {
    let mut parts = m.0.clone();
    parts[site - 1] += 1;
    StateVec::from_term(Composition::new(parts), MPoly::one(var::NVARS))
}

/// Matrix element `(s_out, s_in)` of the two-dimensional-auxiliary monodromy
/// (without the boundary twist), as a functional operator.  Site 1 acts
/// first; the spectral parameter is the variable `uvar`.
pub fn monodromy_entry(s_out: u8, s_in: u8, uvar: usize, m: &Composition) -> StateVec<MPoly> {
    let n = m.rank();
    let u = MPoly::variable(var::NVARS, uvar);
    // One partial sum per current auxiliary state.
    let mut empty = StateVec::zero(n);
    let mut occupied = StateVec::zero(n);
    match s_in {
        0 => empty.add_term(m.clone(), MPoly::one(var::NVARS)),
        1 => occupied.add_term(m.clone(), MPoly::one(var::NVARS)),
        _ => panic!("auxiliary index out of range"),
    }
    for site in 1..=n {
        // entries: to-empty gets (1 from empty) + (u phi* from occupied);
        //          to-occupied gets (phi from empty) + (u from occupied).
        let next_empty = &empty + &occupied.then(|t| raise(site, t)).scaled(&u);
        let next_occupied = &empty.then(|t| lower(site, t)) + &occupied.scaled(&u);
        empty = next_empty;
        occupied = next_occupied;
    }
    match s_out {
        0 => empty,
        1 => occupied,
        _ => panic!("auxiliary index out of range"),
    }
}

/// Matrix element `(eps_out, eps_in)` of the unbounded-auxiliary monodromy,
/// including its boundary twist `z^{eps_out}`.  The auxiliary occupancy
/// follows a chain starting at `eps_in` before site 1; at each site the
/// outgoing auxiliary occupancy is bounded by the site occupancy, and the
/// vertex contributes the incoming auxiliary occupancy as a power of the
/// spectral parameter.  Maps a level-`k` state to level `k + eps_in -
/// eps_out`.
pub fn q_element(eps_out: u32, eps_in: u32, uvar: usize, m: &Composition) -> StateVec<MPoly> {
    let n = m.rank();
    let mut out = StateVec::zero(n);
    let mut parts = Vec::with_capacity(n);
    fn rec(
        m: &Composition,
        site: usize,
        eps_prev: u32,
        u_exp: u32,
        eps_out: u32,
        uvar: usize,
        parts: &mut Vec<u32>,
        out: &mut StateVec<MPoly>,
    ) {
        let n = m.rank();
        if site > n {
            if eps_prev == eps_out {
                let mut exps = vec![0; var::NVARS];
                exps[uvar] = u_exp as i32;
                exps[var::Z] = eps_out as i32;
                out.add_term(Composition::new(parts.clone()), MPoly::monomial(&exps, 1));
            }
            return;
        }
        let b = m.get(site - 1);
        for eps in 0..=b {
            parts.push(b - eps + eps_prev);
            rec(m, site + 1, eps, u_exp + eps_prev, eps_out, uvar, parts, out);
            parts.pop();
        }
    }
    rec(m, 1, eps_in, 0, eps_out, uvar, &mut parts, &mut out);
    out
}

fn prod<F, G>(outer: &F, inner: &G, m: &Composition) -> StateVec<MPoly>
where
    F: Fn(&Composition) -> StateVec<MPoly>,
    G: Fn(&Composition) -> StateVec<MPoly>,
{
    inner(m).then(|t| outer(t))
}

/// Verify the structural identities of the two-dimensional-auxiliary
/// monodromy on every state of level at most `kmax`:
///
/// * `T(u) = A(u) + z D(u)` with `D` the untwisted occupied-corner element;
/// * `C(u) = phi_n A(u)` and `B(u) = u A(u) phi*_1` (untwisted corners);
/// * the degree-0 coefficient of `A(u)` is the identity and `A(u)` equals
///   the ordered product `(1 + u a_{n-1}) ... (1 + u a_1)`.
pub fn check_caba(n: usize, kmax: u32) -> Result<(), String> {
    let u = MPoly::variable(var::NVARS, var::U);
    let z = MPoly::variable(var::NVARS, var::Z);
    for k in 0..=kmax {
        let basis = LevelBasis::new(n, k);
        let t = transfer_t(&basis);
        for m in basis.states() {
            let a = monodromy_entry(0, 0, var::U, m);
            let b = monodromy_entry(0, 1, var::U, m);
            let c = monodromy_entry(1, 0, var::U, m);
            let d = monodromy_entry(1, 1, var::U, m);

            // C = phi_n A: the last site's lowering operator after A.
            let want_c = a.then(|x| lower(n, x));
            if c != want_c {
                return Err(format!("C != phi_n A on {m} at n={n}"));
            }
            // B = u A phi*_1: raise site 1 first, then A, then scale by u.
            let want_b = raise(1, m).then(|x| monodromy_entry(0, 0, var::U, x)).scaled(&u);
            if b != want_b {
                return Err(format!("B != u A phi*_1 on {m} at n={n}"));
            }
            // T = A + z D.
            let want_t = &a + &d.scaled(&z);
            if t.apply_mpoly(m) != want_t {
                return Err(format!("T != A + zD on {m} at n={n}"));
            }
            // A(u) = (1 + u a_{n-1}) ... (1 + u a_1), rightmost factor first.
            let mut prod_a = StateVec::from_term(m.clone(), MPoly::one(var::NVARS));
            for j in 1..n {
                let hop = prod_a.then(|x| lower(j, x)).then(|y| raise(j + 1, y));
                prod_a = &prod_a + &hop.scaled(&u);
            }
            if a != prod_a {
                return Err(format!("A is not the ordered hop product on {m} at n={n}"));
            }
        }
    }
    Ok(())
}

/// Verify how the unbounded-auxiliary matrix elements assemble:
///
/// * the twist-weighted diagonal sum over `eps <= k` reproduces the row
///   transfer matrix `Q(u)`;
/// * `Q_{0,0}(v)` is `z`-free and equals the generating function of the
///   open-boundary complete homogeneous operators;
/// * `Q_{eps', eps}` vanishes on a state whose last site holds fewer than
///   `eps'` particles (the outgoing auxiliary occupancy is trapped below
///   it).
pub fn check_q_assembly(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let q = transfer_q(&basis);
    for m in basis.states() {
        let mut diag = StateVec::zero(n);
        for eps in 0..=k {
            diag = &diag + &q_element(eps, eps, var::U, m);
        }
        if diag != q.apply_mpoly(m) {
            return Err(format!("diagonal sum differs from Q(u) on {m} at n={n}, k={k}"));
        }

        let q00 = q_element(0, 0, var::V, m);
        let mut open = StateVec::zero(n);
        for r in 0..=k {
            let mut vexp = vec![0; var::NVARS];
            vexp[var::V] = r as i32;
            open = &open + &to_mpoly(&apply_h_finite(r, m)).scaled(&MPoly::monomial(&vexp, 1));
        }
        if q00 != open {
            return Err(format!(
                "Q_00 differs from open-boundary h generating function on {m} at n={n}, k={k}"
            ));
        }

        for eps_out in m.get(n - 1) + 1..=k + 2 {
            for eps_in in 0..=k + 2 {
                if !q_element(eps_out, eps_in, var::V, m).is_zero() {
                    return Err(format!(
                        "Q_{{{eps_out},{eps_in}}} should vanish on {m} at n={n}, k={k}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Verify the five exchange relations between the two-dimensional-auxiliary
/// elements `A(u), B(u), C(u), D(u)` (twist included: `C` and `D` carry `z`)
/// and the unbounded-auxiliary family `Q_{e',e}(v)`, on every level-`k`
/// basis state, for all `e, e' <= k + 1`.  Negative indices denote the zero
/// operator.  Products read right to left.
pub fn check_exchange_relations(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let z = MPoly::variable(var::NVARS, var::Z);
    let mut exps = vec![0; var::NVARS];
    exps[var::U] = 1;
    exps[var::V] = -1;
    let u_over_v = MPoly::monomial(&exps, 1);
    exps[var::U] = -1;
    exps[var::V] = 1;
    let v_over_u = MPoly::monomial(&exps, 1);

    let a = |m: &Composition| monodromy_entry(0, 0, var::U, m);
    let b = |m: &Composition| monodromy_entry(0, 1, var::U, m);
    let c = |m: &Composition| monodromy_entry(1, 0, var::U, m).scaled(&z);
    let d = |m: &Composition| monodromy_entry(1, 1, var::U, m).scaled(&z);
    let q = |eo: i64, ei: i64| {
        move |m: &Composition| -> StateVec<MPoly> {
            if eo < 0 || ei < 0 {
                StateVec::zero(m.rank())
            } else {
                q_element(eo as u32, ei as u32, var::V, m)
            }
        }
    };

    for m in basis.states() {
        for eo in 0..=(k as i64 + 1) {
            for ei in 0..=(k as i64 + 1) {
                // [A(u), Q_{e',e}(v)] = Q_{e',e-1} B - (u/v) C Q_{e'-1,e}
                //   + (u/v) (d_{e,0} Q_{e',0} A - d_{e',0} A Q_{0,e}).
                let mut res = prod(&a, &q(eo, ei), m);
                res = &res - &prod(&q(eo, ei), &a, m);
                res = &res - &prod(&q(eo, ei - 1), &b, m);
                res = &res + &prod(&c, &q(eo - 1, ei), m).scaled(&u_over_v);
                if ei == 0 {
                    res = &res - &prod(&q(eo, 0), &a, m).scaled(&u_over_v);
                }
                if eo == 0 {
                    res = &res + &prod(&a, &q(0, ei), m).scaled(&u_over_v);
                }
                if !res.is_zero() {
                    return Err(format!(
                        "A-exchange fails at e'={eo}, e={ei} on {m}, n={n}, k={k}"
                    ));
                }

                // Q_{e',e} B - (v/u) B Q_{e',e} = D Q_{e'-1,e} - Q_{e',e+1} A
                //   + d_{e',0} B Q_{0,e}.
                let mut res = prod(&q(eo, ei), &b, m);
                res = &res - &prod(&b, &q(eo, ei), m).scaled(&v_over_u);
                res = &res - &prod(&d, &q(eo - 1, ei), m);
                res = &res + &prod(&q(eo, ei + 1), &a, m);
                if eo == 0 {
                    res = &res - &prod(&b, &q(0, ei), m);
                }
                if !res.is_zero() {
                    return Err(format!(
                        "B-exchange fails at e'={eo}, e={ei} on {m}, n={n}, k={k}"
                    ));
                }

                // Q_{e',e} C - (u/v) C Q_{e',e} = A Q_{e'+1,e} - Q_{e',e-1} D
                //   - d_{e,0} (u/v) Q_{e',0} C.
                let mut res = prod(&q(eo, ei), &c, m);
                res = &res - &prod(&c, &q(eo, ei), m).scaled(&u_over_v);
                res = &res - &prod(&a, &q(eo + 1, ei), m);
                res = &res + &prod(&q(eo, ei - 1), &d, m);
                if ei == 0 {
                    res = &res + &prod(&q(eo, 0), &c, m).scaled(&u_over_v);
                }
                if !res.is_zero() {
                    return Err(format!(
                        "C-exchange fails at e'={eo}, e={ei} on {m}, n={n}, k={k}"
                    ));
                }

                // [D(u), Q_{e',e}(v)] = Q_{e',e+1} C - (v/u) B Q_{e'+1,e}.
                let mut res = prod(&d, &q(eo, ei), m);
                res = &res - &prod(&q(eo, ei), &d, m);
                res = &res - &prod(&q(eo, ei + 1), &c, m);
                res = &res + &prod(&b, &q(eo + 1, ei), m).scaled(&v_over_u);
                if !res.is_zero() {
                    return Err(format!(
                        "D-exchange fails at e'={eo}, e={ei} on {m}, n={n}, k={k}"
                    ));
                }

                // [D(u), Q_{e',e}(v)] = [Q_{e'+1,e+1}(v), A(u)].
                let mut res = prod(&d, &q(eo, ei), m);
                res = &res - &prod(&q(eo, ei), &d, m);
                res = &res - &prod(&q(eo + 1, ei + 1), &a, m);
                res = &res + &prod(&a, &q(eo + 1, ei + 1), m);
                if !res.is_zero() {
                    return Err(format!(
                        "D/A pairing fails at e'={eo}, e={ei} on {m}, n={n}, k={k}"
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monodromy_corner_on_vacuum() {
        // On the empty state, A(u) = 1 and D(u) = u^n (all pass-throughs).
        let m = Composition::new(vec![0, 0, 0]);
        let a = monodromy_entry(0, 0, var::U, &m);
        assert_eq!(a, StateVec::from_term(m.clone(), MPoly::one(var::NVARS)));
        let d = monodromy_entry(1, 1, var::U, &m);
        assert_eq!(
            d,
            StateVec::from_term(m.clone(), MPoly::variable(var::NVARS, var::U).pow(3))
        );
    }

    #[test]
    fn caba_identities_small() {
        check_caba(3, 2).unwrap();
        check_caba(4, 2).unwrap();
    }

    #[test]
    fn q_assembly_small() {
        check_q_assembly(3, 2).unwrap();
        check_q_assembly(4, 2).unwrap();
    }

    #[test]
    fn q_element_shifts_level() {
        // Q_{0,1} raises the level by one: the auxiliary line dumps its
        // particle onto the lattice.
        let m = Composition::new(vec![1, 0, 0]);
        let v = q_element(0, 1, var::V, &m);
        assert!(!v.is_zero());
        for (t, _) in v.iter() {
            assert_eq!(t.level(), 2);
        }
    }

    #[test]
    fn exchange_relations_smallest_sector() {
        check_exchange_relations(3, 1).unwrap();
    }

    #[test]
    fn d_exchange_on_level_two() {
        // The D relation on the ten level-2 states of the three-site chain.
        check_exchange_relations(3, 2).unwrap();
    }
}
