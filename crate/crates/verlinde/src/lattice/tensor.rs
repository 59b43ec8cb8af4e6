//! Finite tensor products of occupancy spaces and the local intertwiners
//! acting on them: the vertex weight `R`, its completed invertible form `S`,
//! the factor swap `P`, and the two-dimensional-auxiliary operators `L` and
//! `L'`.
//!
//! Every operator here conserves the total occupancy, so all identities are
//! verified charge sector by charge sector; a sector of charge `C` on three
//! factors is finite-dimensional.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::mvpoly::{var, MPoly};

/// A vector in a tensor product of occupancy spaces, with exact multivariate
/// Laurent coefficients.  Basis states are tuples of occupation numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVec {
    factors: usize,
    terms: BTreeMap<Vec<u32>, MPoly>,
}

impl TensorVec {
    pub fn zero(factors: usize) -> Self {
        TensorVec { factors, terms: BTreeMap::new() }
    }

    pub fn basis(occ: &[u32]) -> Self {
        TensorVec::from_term(occ.to_vec(), MPoly::one(var::NVARS))
    }

    pub fn from_term(occ: Vec<u32>, c: MPoly) -> Self {
        let mut v = TensorVec::zero(occ.len());
        v.add_term(occ, c);
        v
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, occ: Vec<u32>, c: MPoly) {
        assert_eq!(occ.len(), self.factors, "tensor factor count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&occ) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&occ);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(occ, c);
            }
        }
    }

    pub fn coeff(&self, occ: &[u32]) -> MPoly {
        self.terms.get(occ).cloned().unwrap_or_else(|| MPoly::zero(var::NVARS))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &MPoly)> + '_ {
        self.terms.iter()
    }

    pub fn scaled(&self, c: &MPoly) -> TensorVec {
        let mut out = TensorVec::zero(self.factors);
        for (occ, a) in &self.terms {
            out.add_term(occ.clone(), a * c);
        }
        out
    }

    /// Linear extension of a map defined on basis states.
    pub fn then(&self, op: impl Fn(&[u32]) -> TensorVec) -> TensorVec {
        let mut out = TensorVec::zero(self.factors);
        for (occ, c) in &self.terms {
            for (t, a) in op(occ).terms {
                out.add_term(t, &a * c);
            }
        }
        out
    }
}

impl Add for &TensorVec {
    type Output = TensorVec;
    fn add(self, rhs: &TensorVec) -> TensorVec {
        assert_eq!(self.factors, rhs.factors);
        let mut out = self.clone();
        for (occ, c) in &rhs.terms {
            out.add_term(occ.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorVec {
    type Output = TensorVec;
    fn sub(self, rhs: &TensorVec) -> TensorVec {
        self + &(-rhs)
    }
}

impl Neg for &TensorVec {
    type Output = TensorVec;
    fn neg(self) -> TensorVec {
        let mut out = TensorVec::zero(self.factors);
        for (occ, c) in &self.terms {
            out.add_term(occ.clone(), -c);
        }
        out
    }
}

/// Apply a general charge-conserving vertex `weight(a, b, c, d)` to factors
/// `(i, j)`: the incoming pair `(a, b)` scatters into every `(c, d)` with
/// `c + d = a + b`, weighted by the given function.
pub fn apply_vertex(
    x: &TensorVec,
    i: usize,
    j: usize,
    weight: &dyn Fn(u32, u32, u32, u32) -> MPoly,
) -> TensorVec {
    x.then(|occ| {
        let (a, b) = (occ[i], occ[j]);
        let mut out = TensorVec::zero(occ.len());
        for c in 0..=a + b {
            let d = a + b - c;
            let w = weight(a, b, c, d);
            if w.is_zero() {
                continue;
            }
            let mut t = occ.to_vec();
            t[i] = c;
            t[j] = d;
            out.add_term(t, w);
        }
        out
    })
}

/// The vertex weight acting on factors `(i, j)` with the given spectral
/// parameter: `v_a (x) v_b` maps to `sum_{c <= b} u^a v_c (x) v_{a+b-c}`.
pub fn apply_r(x: &TensorVec, i: usize, j: usize, spectral: &MPoly) -> TensorVec {
    apply_vertex(x, i, j, &|a, b, c, _d| {
        if c <= b {
            spectral.pow(a)
        } else {
            MPoly::zero(var::NVARS)
        }
    })
}

/// Swap tensor factors `i` and `j`.
pub fn apply_p(x: &TensorVec, i: usize, j: usize) -> TensorVec {
    x.then(|occ| {
        let mut t = occ.to_vec();
        t.swap(i, j);
        TensorVec::basis(&t)
    })
}

/// The completed, invertible vertex operator
/// `S(u) = (1 - u) R(u) + P (u^{N+1} (x) 1)` on factors `(i, j)`.
pub fn apply_s(x: &TensorVec, i: usize, j: usize, spectral: &MPoly) -> TensorVec {
    let one_minus = &MPoly::one(var::NVARS) - spectral;
    let r_part = apply_r(x, i, j, spectral).scaled(&one_minus);
    let p_part = x.then(|occ| {
        let mut t = occ.to_vec();
        t.swap(i, j);
        TensorVec::from_term(t, spectral.pow(occ[i] + 1))
    });
    &r_part + &p_part
}

/// The inverse of `S`: conjugating `S` at the reciprocal spectral parameter
/// by the factor swap, `S^{-1}(u) = P S(u^{-1}) P`.
pub fn apply_s_inverse(x: &TensorVec, i: usize, j: usize, spectral_inv: &MPoly) -> TensorVec {
    apply_p(&apply_s(&apply_p(x, i, j), i, j, spectral_inv), i, j)
}

/// The two-dimensional-auxiliary operator `L(u)` on (auxiliary factor `aux`,
/// occupancy factor `site`).  Entries, indexed by (auxiliary out, auxiliary
/// in): `L_00 = 1`, `L_01 = u phi*`, `L_10 = phi`, `L_11 = u`, where `phi`
/// and `phi*` lower/raise the site occupancy.
pub fn apply_l(x: &TensorVec, aux: usize, site: usize, spectral: &MPoly) -> TensorVec {
    x.then(|occ| {
        let s = occ[aux];
        assert!(s <= 1, "two-dimensional auxiliary factor holds occupancy {s}");
        let m = occ[site];
        let mut out = TensorVec::zero(occ.len());
        if s == 0 {
            out.add_term(occ.to_vec(), MPoly::one(var::NVARS));
            if m > 0 {
                let mut t = occ.to_vec();
                t[aux] = 1;
                t[site] = m - 1;
                out.add_term(t, MPoly::one(var::NVARS));
            }
        } else {
            let mut t = occ.to_vec();
            t[aux] = 0;
            t[site] = m + 1;
            out.add_term(t, spectral.clone());
            out.add_term(occ.to_vec(), spectral.clone());
        }
        out
    })
}

/// The modified operator `L'(u) = L(u) + u (P_0 (x) vacancy)`: on top of
/// `L(u)`, a doubly-empty pair `(aux, site) = (0, 0)` gains an extra weight
/// `u`.
pub fn apply_l_prime(x: &TensorVec, aux: usize, site: usize, spectral: &MPoly) -> TensorVec {
    let base = apply_l(x, aux, site, spectral);
    let extra = x.then(|occ| {
        if occ[aux] == 0 && occ[site] == 0 {
            TensorVec::from_term(occ.to_vec(), spectral.clone())
        } else {
            TensorVec::zero(occ.len())
        }
    });
    &base + &extra
}

/// All occupancy triples of total charge `c`, with factor 0 optionally
/// restricted to a two-dimensional auxiliary space.
fn charge_sector(c: u32, binary_first: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let amax = if binary_first { c.min(1) } else { c };
    for a in 0..=amax {
        for b in 0..=c - a {
            out.push(vec![a, b, c - a - b]);
        }
    }
    out
}

/// Verify the Yang-Baxter equation
/// `S_12(u) R_13(uv) R_23(v) = R_23(v) R_13(uv) S_12(u)`
/// on every charge sector up to `cmax`.
pub fn check_ybe(cmax: u32) -> Result<(), String> {
    let u = MPoly::variable(var::NVARS, var::U);
    let v = MPoly::variable(var::NVARS, var::V);
    let uv = &u * &v;
    for c in 0..=cmax {
        for occ in charge_sector(c, false) {
            let x = TensorVec::basis(&occ);
            let lhs = apply_s(&apply_r(&apply_r(&x, 1, 2, &v), 0, 2, &uv), 0, 1, &u);
            let rhs = apply_r(&apply_r(&apply_s(&x, 0, 1, &u), 0, 2, &uv), 1, 2, &v);
            if lhs != rhs {
                return Err(format!("Yang-Baxter equation fails on {occ:?}"));
            }
        }
    }
    Ok(())
}

/// Verify the mixed relation
/// `L'_12(u/v) L_13(u) R_23(v) = R_23(v) L_13(u) L'_12(u/v)`
/// on every charge sector up to `cmax` (factor 0 two-dimensional).
pub fn check_phase_ybe(cmax: u32) -> Result<(), String> {
    let u = MPoly::variable(var::NVARS, var::U);
    let v = MPoly::variable(var::NVARS, var::V);
    let mut uv_exps = vec![0; var::NVARS];
    uv_exps[var::U] = 1;
    uv_exps[var::V] = -1;
    let u_over_v = MPoly::monomial(&uv_exps, 1);
    for c in 0..=cmax {
        for occ in charge_sector(c, true) {
            let x = TensorVec::basis(&occ);
            let lhs = apply_l_prime(&apply_l(&apply_r(&x, 1, 2, &v), 0, 2, &u), 0, 1, &u_over_v);
            let rhs = apply_r(&apply_l(&apply_l_prime(&x, 0, 1, &u_over_v), 0, 2, &u), 1, 2, &v);
            if lhs != rhs {
                return Err(format!("mixed Yang-Baxter relation fails on {occ:?}"));
            }
        }
    }
    Ok(())
}

/// Verify `S^{-1}(u) S(u) = S(u) S^{-1}(u) = 1` on every two-factor charge
/// sector up to `cmax`.
pub fn check_s_inverse(cmax: u32) -> Result<(), String> {
    let u = MPoly::variable(var::NVARS, var::U);
    let mut inv_exps = vec![0; var::NVARS];
    inv_exps[var::U] = -1;
    let u_inv = MPoly::monomial(&inv_exps, 1);
    for c in 0..=cmax {
        for a in 0..=c {
            let x = TensorVec::basis(&[a, c - a]);
            let forward = apply_s_inverse(&apply_s(&x, 0, 1, &u), 0, 1, &u_inv);
            let backward = apply_s(&apply_s_inverse(&x, 0, 1, &u_inv), 0, 1, &u);
            if forward != x || backward != x {
                return Err(format!("S(u) is not inverted by P S(1/u) P on {:?}", [a, c - a]));
            }
        }
    }
    Ok(())
}

/// The kernel vector `w_m` of `L'(-1)` on the pair (two-dimensional factor,
/// occupancy factor), extended by `v_extra` in a third factor.
fn kernel_vector(m: u32, extra: u32) -> TensorVec {
    let mut x = TensorVec::basis(&[0, m, extra]);
    if m > 0 {
        x = &x + &TensorVec::basis(&[1, m - 1, extra]);
    }
    x
}

/// Verify the two halves of the kernel decomposition of `L_13(-u) R_23(u)`:
///
/// * vectors `w_m (x) v_a` map to `delta_{m,0} sum_{b <= a} w_b (x) v_{a-b}`
///   — the kernel family is preserved and annihilated for `m > 0`;
/// * complement vectors `x_j (x) v_a` (with `x_j = v_0 (x) v_j`, `j >= 1`)
///   map to `-u^j x_{a+1} (x) v_{j-1}` modulo the span of the kernel family.
pub fn check_w_decomposition(cmax: u32) -> Result<(), String> {
    let u = MPoly::variable(var::NVARS, var::U);
    let minus_u = -&u;
    for c in 0..=cmax {
        // Kernel half: w_m (x) v_a for m + a = c.
        for m in 0..=c {
            let a = c - m;
            let image = apply_l(&apply_r(&kernel_vector(m, a), 1, 2, &u), 0, 2, &minus_u);
            let mut want = TensorVec::zero(3);
            if m == 0 {
                for b in 0..=a {
                    want = &want + &kernel_vector(b, a - b);
                }
            }
            if image != want {
                return Err(format!("kernel family is not preserved at m={m}, a={a}"));
            }
        }
        // Complement half: x_j (x) v_a for j >= 1, j + a = c.
        for j in 1..=c {
            let a = c - j;
            let x = TensorVec::basis(&[0, j, a]);
            let image = apply_l(&apply_r(&x, 1, 2, &u), 0, 2, &minus_u);
            // Component along x_p (x) v_q in the quotient by the kernel
            // family: coefficient of (0, p, q) minus coefficient of
            // (1, p - 1, q).
            for p in 1..=c {
                for q in 0..=c - p {
                    let comp = &image.coeff(&[0, p, q]) - &image.coeff(&[1, p - 1, q]);
                    let want = if (p, q) == (a + 1, j - 1) {
                        -&u.pow(j)
                    } else {
                        MPoly::zero(var::NVARS)
                    };
                    if comp != want {
                        return Err(format!(
                            "complement action wrong at j={j}, a={a}: component ({p}, {q})"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> MPoly {
        MPoly::variable(var::NVARS, var::U)
    }

    #[test]
    fn vertex_on_empty_auxiliary_spreads() {
        // v_0 (x) v_b maps to sum_{c <= b} v_c (x) v_{b-c}, all weight 1.
        let x = TensorVec::basis(&[0, 3]);
        let y = apply_r(&x, 0, 1, &u());
        for c in 0..=3 {
            assert_eq!(y.coeff(&[c, 3 - c]), MPoly::one(var::NVARS));
        }
        assert_eq!(y.iter().count(), 4);
    }

    #[test]
    fn vertex_on_empty_site_dumps_auxiliary() {
        // v_a (x) v_0 maps to u^a v_0 (x) v_a alone.
        let x = TensorVec::basis(&[2, 0]);
        let y = apply_r(&x, 0, 1, &u());
        assert_eq!(y.coeff(&[0, 2]), u().pow(2));
        assert_eq!(y.iter().count(), 1);
    }

    #[test]
    fn s_is_identity_on_charge_zero() {
        let x = TensorVec::basis(&[0, 0]);
        assert_eq!(apply_s(&x, 0, 1, &u()), x);
    }

    #[test]
    fn kernel_of_modified_l_at_minus_one() {
        let minus_one = MPoly::constant(var::NVARS, -1);
        for m in 0..5 {
            let mut w = TensorVec::basis(&[0, m]);
            if m > 0 {
                w = &w + &TensorVec::basis(&[1, m - 1]);
            }
            assert!(apply_l_prime(&w, 0, 1, &minus_one).is_zero(), "w_{m} not annihilated");
            // The plain L does not annihilate them: the modification matters.
            if m == 0 {
                assert!(!apply_l(&w, 0, 1, &minus_one).is_zero());
            }
        }
    }

    #[test]
    fn ybe_and_inverse_small_charge() {
        check_ybe(4).unwrap();
        check_s_inverse(4).unwrap();
        check_phase_ybe(4).unwrap();
        check_w_decomposition(4).unwrap();
    }

    #[test]
    fn corrupted_weight_breaks_ybe() {
        // Negative control: perturbing a single vertex weight must violate
        // the Yang-Baxter equation.
        let u = u();
        let v = MPoly::variable(var::NVARS, var::V);
        let uv = &u * &v;
        let bad = |a: u32, b: u32, c: u32, _d: u32| -> MPoly {
            if c > b {
                MPoly::zero(var::NVARS)
            } else if (a, b, c) == (1, 1, 0) {
                v.pow(2)
            } else {
                v.pow(a)
            }
        };
        let mut found_violation = false;
        for c in 0..=3 {
            for occ in charge_sector(c, false) {
                let x = TensorVec::basis(&occ);
                let lhs = apply_s(
                    &apply_r(&apply_vertex(&x, 1, 2, &bad), 0, 2, &uv),
                    0,
                    1,
                    &u,
                );
                let rhs = apply_vertex(
                    &apply_r(&apply_s(&x, 0, 1, &u), 0, 2, &uv),
                    1,
                    2,
                    &bad,
                );
                if lhs != rhs {
                    found_violation = true;
                }
            }
        }
        assert!(found_violation);
    }
}
