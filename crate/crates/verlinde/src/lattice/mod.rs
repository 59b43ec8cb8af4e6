//! The integrable vertex model behind the symmetric polynomials: vertex
//! weights, row transfer matrices, and the functional equation relating them.
//!
//! Two transfer matrices act on each level sector.  `Q(u)` sums over row
//! configurations of an unbounded-occupancy vertex (auxiliary space a full
//! bosonic line), `T(u)` is the trace of a two-dimensional auxiliary chain.
//! Their coefficient operators reproduce the complete and elementary
//! polynomials of [`crate::ncsym`] — verified here entry by entry — and they
//! satisfy `T(-u)Q(u) = 1 + z(-u)^n u^k h_k` on the level-`k` sector.

pub mod deformed;
pub mod tensor;
pub mod ybalg;

use std::collections::BTreeMap;

use crate::fock::{LevelOperator, StateVec};
use crate::mvpoly::{var, MPoly};
use crate::ncsym::{apply_e, apply_h};
use crate::weights::{Composition, LevelBasis};
use crate::zpoly::ZPoly;

/// The vertex weight: `u^a` when `d = a + b - c` and `b >= c`, else zero.
/// `a, b` are the incoming auxiliary/site occupancies, `c, d` outgoing.
pub fn boltzmann(a: u32, b: u32, c: u32, d: u32) -> MPoly {
    match boltzmann_exponent(a, b, c, d) {
        Some(e) => {
            let mut exps = vec![0; var::NVARS];
            exps[var::U] = e as i32;
            MPoly::monomial(&exps, 1)
        }
        None => MPoly::zero(var::NVARS),
    }
}

/// The exponent of the nonzero weight `u^a`, or `None` for a forbidden
/// vertex.
pub fn boltzmann_exponent(a: u32, b: u32, c: u32, d: u32) -> Option<u32> {
    if b >= c && a + b == c + d {
        Some(a)
    } else {
        None
    }
}

/// One allowed periodic row of the vertex model.  `eps[i]` is the occupancy
/// of the auxiliary line entering site `i`; `eps[0]` also closes the loop
/// after the last site, so it is the flux wrapping around the boundary.  The
/// row carries weight `z^{eps[0]} u^{eps[0] + ... + eps[n-1]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowConfig {
    pub eps: Vec<u32>,
    pub input: Composition,
    pub output: Composition,
}

impl RowConfig {
    pub fn u_degree(&self) -> u32 {
        self.eps.iter().sum()
    }

    pub fn z_degree(&self) -> u32 {
        self.eps[0]
    }
}

/// All allowed periodic row configurations with the given input state.  Site
/// `i` releases `eps[i+1]` particles into the auxiliary line (so the row is
/// allowed iff `eps[i+1] <= m_i`, indices cyclic) and gains the `eps[i]`
/// arriving from its left neighbour.
pub fn row_configs(m: &Composition) -> Vec<RowConfig> {
    let n = m.rank();
    let mut out = Vec::new();
    let mut eps = vec![0u32; n];
    fn rec(m: &Composition, j: usize, eps: &mut Vec<u32>, out: &mut Vec<RowConfig>) {
        let n = m.rank();
        if j == n {
            let mut parts = Vec::with_capacity(n);
            for i in 0..n {
                parts.push(m.get(i) - eps[(i + 1) % n] + eps[i]);
            }
            out.push(RowConfig {
                eps: eps.clone(),
                input: m.clone(),
                output: Composition::new(parts),
            });
            return;
        }
        for e in 0..=m.get((j + n - 1) % n) {
            eps[j] = e;
            rec(m, j + 1, eps, out);
            eps[j] = 0;
        }
    }
    rec(m, 0, &mut eps, &mut out);
    out
}

/// A polynomial in the spectral parameter `u` whose coefficients are exact
/// operators on one level sector.
#[derive(Clone, Debug)]
pub struct UPolyOp {
    coeffs: BTreeMap<u32, LevelOperator>,
}

impl UPolyOp {
    pub fn new() -> Self {
        UPolyOp { coeffs: BTreeMap::new() }
    }

    pub fn add_coeff(&mut self, degree: u32, op: &LevelOperator) {
        if op.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&degree) {
            Some(existing) => {
                let sum = &*existing + op;
                if sum.is_zero() {
                    self.coeffs.remove(&degree);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(degree, op.clone());
            }
        }
    }

    pub fn coeff(&self, degree: u32) -> Option<&LevelOperator> {
        self.coeffs.get(&degree)
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn mul(&self, other: &UPolyOp) -> UPolyOp {
        let mut out = UPolyOp::new();
        for (&r, a) in &self.coeffs {
            for (&s, b) in &other.coeffs {
                out.add_coeff(r + s, &(a * b));
            }
        }
        out
    }

    /// Substitute `u -> -u`: negate the odd-degree coefficients.
    pub fn negate_u(&self) -> UPolyOp {
        let mut out = UPolyOp::new();
        for (&r, op) in &self.coeffs {
            if r % 2 == 1 {
                out.add_coeff(r, &op.scaled(&ZPoly::constant(-1)));
            } else {
                out.add_coeff(r, op);
            }
        }
        out
    }

    /// Apply to a basis state, returning coefficients over `(z, u)`.
    pub fn apply_mpoly(&self, m: &Composition) -> StateVec<MPoly> {
        let mut out = StateVec::zero(m.rank());
        let v = StateVec::basis_state(m.clone());
        for (&r, op) in &self.coeffs {
            for (t, c) in op.apply(&v).iter() {
                let mut p = MPoly::from_zpoly(c, var::NVARS, var::Z);
                let mut uexp = vec![0; var::NVARS];
                uexp[var::U] = r as i32;
                p = p.mul_monomial(&uexp, 1);
                out.add_term(t.clone(), p);
            }
        }
        out
    }
}

impl Default for UPolyOp {
    fn default() -> Self {
        Self::new()
    }
}

impl PartialEq for UPolyOp {
    fn eq(&self, other: &Self) -> bool {
        // add_coeff never stores zero operators, so the maps are canonical.
        self.coeffs == other.coeffs
    }
}

/// The row transfer matrix `Q(u)` on a sector, by direct enumeration of
/// allowed row configurations.
pub fn transfer_q(basis: &LevelBasis) -> UPolyOp {
    let mut per_degree: BTreeMap<u32, LevelOperator> = BTreeMap::new();
    for (j, m) in basis.states().iter().enumerate() {
        for cfg in row_configs(m) {
            let i = basis.index_of(&cfg.output).expect("row output stays in the sector");
            let op = per_degree
                .entry(cfg.u_degree())
                .or_insert_with(|| LevelOperator::zero(basis));
            let w = op.entry(i, j) + &ZPoly::monomial(cfg.z_degree(), 1);
            op.set_entry(i, j, w);
        }
    }
    let mut out = UPolyOp::new();
    for (d, op) in per_degree {
        out.add_coeff(d, &op);
    }
    out
}

/// The phase-model transfer matrix `T(u)` on a sector: the trace over a
/// two-dimensional auxiliary line, where at each site the auxiliary state
/// either passes through (weight `1` when empty, `u` when occupied), is
/// filled by absorbing a particle, or empties by releasing one (weight `u`);
/// closing the loop in the occupied state costs `z`.
pub fn transfer_t(basis: &LevelBasis) -> UPolyOp {
    let n = basis.n;
    let mut per_degree: BTreeMap<u32, LevelOperator> = BTreeMap::new();
    for (j, m) in basis.states().iter().enumerate() {
        for aux_in in 0u8..2 {
            // frontier entries: (aux, output so far, accumulated u-degree)
            let mut frontier: Vec<(u8, Vec<u32>, u32)> = vec![(aux_in, Vec::new(), 0)];
            for i in 0..n {
                let occ = m.get(i);
                let mut next = Vec::new();
                for (aux, out, udeg) in frontier {
                    // pass through
                    {
                        let mut o = out.clone();
                        o.push(occ);
                        next.push((aux, o, udeg + aux as u32));
                    }
                    if aux == 0 && occ > 0 {
                        // absorb a particle into the auxiliary line
                        let mut o = out.clone();
                        o.push(occ - 1);
                        next.push((1, o, udeg));
                    }
                    if aux == 1 {
                        // release the particle back onto the lattice
                        let mut o = out.clone();
                        o.push(occ + 1);
                        next.push((0, o, udeg + 1));
                    }
                }
                frontier = next;
            }
            for (aux, out, udeg) in frontier {
                if aux != aux_in {
                    continue;
                }
                let target = Composition::new(out);
                let i = basis.index_of(&target).expect("trace preserves the level");
                let op = per_degree
                    .entry(udeg)
                    .or_insert_with(|| LevelOperator::zero(basis));
                let w = op.entry(i, j) + &ZPoly::monomial(aux_in as u32, 1);
                op.set_entry(i, j, w);
            }
        }
    }
    let mut out = UPolyOp::new();
    for (d, op) in per_degree {
        out.add_coeff(d, &op);
    }
    out
}

/// Verify that the coefficient of `u^r` in `Q(u)` is exactly the matrix of
/// `h_r`, and that nothing survives beyond degree `k`.
pub fn check_q_equals_h(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let q = transfer_q(&basis);
    for r in 0..=k {
        let want = LevelOperator::from_fn(&basis, |m| apply_h(r, m));
        let got = q.coeff(r).cloned().unwrap_or_else(|| LevelOperator::zero(&basis));
        if got != want {
            return Err(format!("Q(u) coefficient u^{r} differs from h_{r} at n={n}, k={k}"));
        }
    }
    if let Some(d) = q.degrees().find(|&d| d > k) {
        return Err(format!("Q(u) has unexpected degree {d} > k = {k}"));
    }
    Ok(())
}

/// Verify that the coefficient of `u^r` in `T(u)` is exactly the matrix of
/// `e_r`, with top coefficient `z` at degree `n` and nothing beyond.
pub fn check_t_equals_e(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let t = transfer_t(&basis);
    for r in 0..=n as u32 {
        let want = LevelOperator::from_fn(&basis, |m| apply_e(r, m));
        let got = t.coeff(r).cloned().unwrap_or_else(|| LevelOperator::zero(&basis));
        if got != want {
            return Err(format!("T(u) coefficient u^{r} differs from e_{r} at n={n}, k={k}"));
        }
    }
    if let Some(d) = extra_degree(&t, n as u32) {
        return Err(format!("T(u) has unexpected degree {d} > n = {n}"));
    }
    let top = t.coeff(n as u32).cloned().unwrap_or_else(|| LevelOperator::zero(&basis));
    if top != LevelOperator::identity(&basis).scaled(&ZPoly::z()) {
        return Err(format!("top coefficient of T(u) is not z at n={n}, k={k}"));
    }
    Ok(())
}

fn extra_degree(p: &UPolyOp, cap: u32) -> Option<u32> {
    p.degrees().find(|&d| d > cap)
}

/// Verify the functional equation `T(-u) Q(u) = 1 + z (-u)^n u^k h_k` on the
/// level-`k` sector.
pub fn check_tq(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let product = transfer_t(&basis).negate_u().mul(&transfer_q(&basis));
    let mut want = UPolyOp::new();
    want.add_coeff(0, &LevelOperator::identity(&basis));
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let hk = LevelOperator::from_fn(&basis, |m| apply_h(k, m));
    let tail = hk.scaled(&(&ZPoly::z() * &ZPoly::constant(sign)));
    want.add_coeff(n as u32 + k, &tail);
    if product != want {
        return Err(format!("T(-u)Q(u) functional equation fails at n={n}, k={k}"));
    }
    Ok(())
}

/// Verify `[Q(u), Q(v)] = [T(u), T(v)] = [T(u), Q(v)] = 0` on the level-`k`
/// sector, coefficient by coefficient.
pub fn check_transfer_commutativity(n: usize, k: u32) -> Result<(), String> {
    let basis = LevelBasis::new(n, k);
    let q = transfer_q(&basis);
    let t = transfer_t(&basis);
    let qs: Vec<(u32, &LevelOperator)> = q.degrees().map(|d| (d, q.coeff(d).unwrap())).collect();
    let ts: Vec<(u32, &LevelOperator)> = t.degrees().map(|d| (d, t.coeff(d).unwrap())).collect();
    for (i, (r, a)) in qs.iter().enumerate() {
        for (s, b) in qs.iter().skip(i + 1) {
            if !a.commutes_with(b) {
                return Err(format!("[Q_{r}, Q_{s}] != 0 at n={n}, k={k}"));
            }
        }
    }
    for (i, (r, a)) in ts.iter().enumerate() {
        for (s, b) in ts.iter().skip(i + 1) {
            if !a.commutes_with(b) {
                return Err(format!("[T_{r}, T_{s}] != 0 at n={n}, k={k}"));
            }
        }
    }
    for (r, a) in &ts {
        for (s, b) in &qs {
            if !a.commutes_with(b) {
                return Err(format!("[T_{r}, Q_{s}] != 0 at n={n}, k={k}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::gen_a;

    #[test]
    fn boltzmann_examples() {
        assert_eq!(boltzmann_exponent(0, 3, 1, 2), Some(0));
        assert_eq!(boltzmann_exponent(2, 1, 0, 3), Some(2));
        assert_eq!(boltzmann_exponent(0, 1, 2, 3), None); // b < c
        assert_eq!(boltzmann_exponent(1, 1, 1, 2), None); // charge violated
        assert!(boltzmann(0, 1, 2, 3).is_zero());
        assert_eq!(boltzmann(2, 1, 0, 3), MPoly::monomial(&[0, 2, 0, 0], 1));
    }

    #[test]
    fn row_configs_respect_occupancy() {
        let m = Composition::new(vec![1, 0, 2]);
        let cfgs = row_configs(&m);
        // eps[0] <= m_3 = 2, eps[1] <= m_1 = 1, eps[2] <= m_2 = 0.
        assert_eq!(cfgs.len(), 6);
        for cfg in &cfgs {
            assert_eq!(cfg.output.level(), 3);
        }
    }

    #[test]
    fn q_at_level_one_is_identity_plus_hops() {
        // On the three level-1 states of a three-site lattice,
        // Q(u) = 1 + u (a_0 + a_1 + a_2).
        let basis = LevelBasis::new(3, 1);
        let q = transfer_q(&basis);
        assert_eq!(q.coeff(0).unwrap(), &LevelOperator::identity(&basis));
        let hops = LevelOperator::from_fn(&basis, |m| {
            let mut v = StateVec::zero(3);
            for j in 0..3 {
                v = &v + &gen_a(j, m);
            }
            v
        });
        assert_eq!(q.coeff(1).unwrap(), &hops);
        assert!(q.coeff(2).is_none());
    }

    #[test]
    fn q_matches_h_and_t_matches_e() {
        for n in 3..=4 {
            for k in 0..=2 {
                check_q_equals_h(n, k).unwrap();
                check_t_equals_e(n, k).unwrap();
            }
        }
    }

    #[test]
    fn tq_functional_equation_small() {
        for n in 3..=4 {
            for k in 0..=2 {
                check_tq(n, k).unwrap();
            }
        }
    }

    #[test]
    fn tq_on_empty_sector() {
        // k = 0: T(-u)Q(u) = 1 + z(-u)^n on the vacuum alone.
        check_tq(3, 0).unwrap();
        let basis = LevelBasis::new(3, 0);
        let product = transfer_t(&basis).negate_u().mul(&transfer_q(&basis));
        assert_eq!(product.coeff(0).unwrap(), &LevelOperator::identity(&basis));
        let top = product.coeff(3).unwrap();
        assert_eq!(top.entry(0, 0), &(-&ZPoly::z()));
    }

    #[test]
    fn transfer_matrices_commute_small() {
        check_transfer_commutativity(3, 2).unwrap();
        check_transfer_commutativity(4, 2).unwrap();
    }

    #[test]
    fn upoly_apply_tracks_degrees() {
        let basis = LevelBasis::new(3, 1);
        let q = transfer_q(&basis);
        let m = Composition::new(vec![0, 0, 1]);
        let v = q.apply_mpoly(&m);
        // Q(u)|vacuum> = |vacuum> + u z |1,0,0>.
        assert_eq!(v.coeff(&m), Some(&MPoly::one(var::NVARS)));
        assert_eq!(
            v.coeff(&Composition::new(vec![1, 0, 0])),
            Some(&MPoly::monomial(&[1, 1, 0, 0], 1))
        );
    }
}
