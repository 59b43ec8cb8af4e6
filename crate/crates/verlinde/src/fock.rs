//! Vectors in the bosonic state space and exact matrices of level-preserving
//! operators.
//!
//! The full space is graded by particle number (the level); a vector is a
//! finite sum of occupation states with polynomial coefficients.  Operators
//! are applied functionally — a closure maps a basis state to its image
//! vector and [`StateVec::then`] extends it linearly — so level-changing
//! operators need no matrix representation.  Level-preserving operators can
//! be materialised as square [`LevelOperator`] matrices over a fixed sector
//! basis when products or traces are needed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::mvpoly::MPoly;
use crate::weights::{Composition, LevelBasis};
use crate::zpoly::ZPoly;

/// Coefficient rings usable in state vectors.
pub trait Scalar: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Scalar for ZPoly {
    fn is_zero(&self) -> bool {
        ZPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Scalar for MPoly {
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// A finite linear combination of occupation states on `rank` sites.
#[derive(Clone, PartialEq)]
pub struct StateVec<C: Scalar = ZPoly> {
    rank: usize,
    terms: BTreeMap<Composition, C>,
}

impl<C: Scalar> StateVec<C> {
    pub fn zero(rank: usize) -> Self {
        StateVec { rank, terms: BTreeMap::new() }
    }

    /// A single state with the given coefficient.
    pub fn from_term(m: Composition, c: C) -> Self {
        let mut v = StateVec::zero(m.rank());
        v.add_term(m, c);
        v
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Composition, c: C) {
        assert_eq!(m.rank(), self.rank, "occupation vector has wrong rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, m: &Composition) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &C)> + '_ {
        self.terms.iter()
    }

    pub fn scaled(&self, c: &C) -> Self {
        let mut out = StateVec::zero(self.rank);
        for (m, k) in self.iter() {
            out.add_term(m.clone(), k.mul_ref(c));
        }
        out
    }

    /// Apply a linear operator given by its action on basis states.
    pub fn then(&self, op: impl Fn(&Composition) -> StateVec<C>) -> StateVec<C> {
        let mut out = StateVec::zero(self.rank);
        for (m, c) in self.iter() {
            let image = op(m);
            for (m2, c2) in image.iter() {
                out.add_term(m2.clone(), c2.mul_ref(c));
            }
        }
        out
    }

    /// Bilinear overlap with the basis states orthonormal; `None` means zero.
    pub fn overlap(&self, other: &StateVec<C>) -> Option<C> {
        let mut acc: Option<C> = None;
        for (m, c) in self.iter() {
            if let Some(d) = other.coeff(m) {
                let p = c.mul_ref(d);
                acc = Some(match acc {
                    None => p,
                    Some(a) => a.add_ref(&p),
                });
            }
        }
        acc.filter(|a| !a.is_zero())
    }

    /// Restrict to the terms with the given particle number.
    pub fn project_level(&self, k: u32) -> StateVec<C> {
        let mut out = StateVec::zero(self.rank);
        for (m, c) in self.iter() {
            if m.level() == k {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// All particle numbers present in the support.
    pub fn levels(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|m| m.level()).collect()
    }
}

impl StateVec<ZPoly> {
    /// A single state with coefficient one.
    pub fn basis_state(m: Composition) -> Self {
        StateVec::from_term(m, ZPoly::one())
    }
}

impl<C: Scalar> Add for &StateVec<C> {
    type Output = StateVec<C>;
    fn add(self, rhs: &StateVec<C>) -> StateVec<C> {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &StateVec<C> {
    type Output = StateVec<C>;
    fn sub(self, rhs: &StateVec<C>) -> StateVec<C> {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }
}

impl<C: Scalar> Neg for &StateVec<C> {
    type Output = StateVec<C>;
    fn neg(self) -> StateVec<C> {
        let mut out = StateVec::zero(self.rank);
        for (m, c) in self.iter() {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for StateVec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})|{m}>")?;
        }
        Ok(())
    }
}

impl<C: Scalar + fmt::Display> fmt::Debug for StateVec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A square matrix over the level-`k` sector basis with exact polynomial
/// entries; rows index outputs, columns inputs.
#[derive(Clone)]
pub struct LevelOperator {
    basis: LevelBasis,
    entries: Vec<ZPoly>,
}

impl LevelOperator {
    pub fn zero(basis: &LevelBasis) -> Self {
        let dim = basis.dimension();
        LevelOperator { basis: basis.clone(), entries: vec![ZPoly::zero(); dim * dim] }
    }

    pub fn identity(basis: &LevelBasis) -> Self {
        let mut op = LevelOperator::zero(basis);
        for i in 0..basis.dimension() {
            op.set_entry(i, i, ZPoly::one());
        }
        op
    }

    /// Materialise an operator from its action on basis states.  Panics if
    /// the action leaves the sector: an image state with a different particle
    /// number means the operator is not level-preserving and needs the
    /// functional representation instead.
    pub fn from_fn(basis: &LevelBasis, op: impl Fn(&Composition) -> StateVec) -> Self {
        let mut mat = LevelOperator::zero(basis);
        for (j, m) in basis.states().iter().enumerate() {
            let image = op(m);
            for (m2, c) in image.iter() {
                let i = basis.index_of(m2).unwrap_or_else(|| {
                    panic!(
                        "operator leaves the level-{} sector: {} (level {}) appears \
                         in the image of {} (level {})",
                        basis.k,
                        m2,
                        m2.level(),
                        m,
                        m.level()
                    )
                });
                mat.set_entry(i, j, c.clone());
            }
        }
        mat
    }

    pub fn basis(&self) -> &LevelBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dimension()
    }

    pub fn entry(&self, i: usize, j: usize) -> &ZPoly {
        &self.entries[i * self.dim() + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, c: ZPoly) {
        let d = self.dim();
        self.entries[i * d + j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn apply(&self, v: &StateVec) -> StateVec {
        let mut out = StateVec::zero(self.basis.n);
        for (m, c) in v.iter() {
            let j = self
                .basis
                .index_of(m)
                .expect("vector lies outside the operator's sector");
            for i in 0..self.dim() {
                let e = self.entry(i, j);
                if !e.is_zero() {
                    out.add_term(self.basis.state(i).clone(), e * c);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LevelOperator {
        let d = self.dim();
        let mut out = LevelOperator::zero(&self.basis);
        for i in 0..d {
            for j in 0..d {
                out.set_entry(j, i, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn scaled(&self, c: &ZPoly) -> LevelOperator {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = &*e * c;
        }
        out
    }

    /// Substitute a numeric value for `z` in every entry.
    pub fn eval_z(&self, z: i64) -> LevelOperator {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = ZPoly::constant(e.eval(z));
        }
        out
    }

    pub fn commutes_with(&self, other: &LevelOperator) -> bool {
        self * other == other * self
    }
}

impl PartialEq for LevelOperator {
    fn eq(&self, other: &Self) -> bool {
        self.basis.n == other.basis.n
            && self.basis.k == other.basis.k
            && self.entries == other.entries
    }
}

impl Add for &LevelOperator {
    type Output = LevelOperator;
    fn add(self, rhs: &LevelOperator) -> LevelOperator {
        assert_eq!(self.dim(), rhs.dim());
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a + b;
        }
        out
    }
}

impl Sub for &LevelOperator {
    type Output = LevelOperator;
    fn sub(self, rhs: &LevelOperator) -> LevelOperator {
        assert_eq!(self.dim(), rhs.dim());
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a - b;
        }
        out
    }
}

impl Mul for &LevelOperator {
    type Output = LevelOperator;
    fn mul(self, rhs: &LevelOperator) -> LevelOperator {
        assert_eq!(self.dim(), rhs.dim(), "operator dimensions differ");
        let d = self.dim();
        let mut out = LevelOperator::zero(&self.basis);
        for i in 0..d {
            for l in 0..d {
                let a = self.entry(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.entry(l, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        out.set_entry(i, j, out.entry(i, j) + &prod);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for LevelOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LevelOperator(n={}, k={}):", self.basis.n, self.basis.k)?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim()).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn add_and_cancel() {
        let v = StateVec::basis_state(m(&[1, 0, 1]));
        let w = StateVec::basis_state(m(&[0, 2, 0]));
        let sum = &v + &w;
        assert_eq!(sum.len(), 2);
        assert!((&sum - &sum).is_zero());
        assert_eq!((&sum - &w), v);
    }

    #[test]
    fn linear_extension() {
        // The operator that moves one particle from site 1 to site 2,
        // killing states with an empty first site.
        let hop = |m: &Composition| -> StateVec {
            if m.get(0) == 0 {
                return StateVec::zero(m.rank());
            }
            let mut parts = m.0.clone();
            parts[0] -= 1;
            parts[1] += 1;
            StateVec::basis_state(Composition::new(parts))
        };
        let v = &StateVec::basis_state(m(&[2, 0, 0]))
            + &StateVec::from_term(m(&[0, 1, 1]), ZPoly::z());
        let w = v.then(hop);
        assert_eq!(w.coeff(&m(&[1, 1, 0])), Some(&ZPoly::one()));
        assert_eq!(w.coeff(&m(&[0, 1, 1])), None);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn overlap_is_bilinear() {
        let v = &StateVec::basis_state(m(&[1, 1])).scaled(&ZPoly::z())
            + &StateVec::basis_state(m(&[0, 2]));
        let w = &StateVec::basis_state(m(&[1, 1]))
            + &StateVec::basis_state(m(&[2, 0])).scaled(&ZPoly::z());
        assert_eq!(v.overlap(&w), Some(ZPoly::z()));
        assert_eq!(StateVec::basis_state(m(&[1, 1])).overlap(&StateVec::basis_state(m(&[2, 0]))), None);
    }

    #[test]
    fn project_and_levels() {
        let v = &StateVec::basis_state(m(&[1, 0])) + &StateVec::basis_state(m(&[1, 1]));
        assert_eq!(v.levels().into_iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(v.project_level(2), StateVec::basis_state(m(&[1, 1])));
    }

    #[test]
    fn matrix_of_composition_is_product() {
        let basis = LevelBasis::new(3, 2);
        // Cyclic shift of the occupation numbers is level-preserving.
        let rot = LevelOperator::from_fn(&basis, |m| StateVec::basis_state(m.rotated()));
        let rot2 = LevelOperator::from_fn(&basis, |m| {
            StateVec::basis_state(m.rotated().rotated())
        });
        assert_eq!(&rot * &rot, rot2);
        let id = LevelOperator::identity(&basis);
        assert_eq!(&(&rot * &rot) * &rot, id);
        assert!(rot.commutes_with(&rot2));
    }

    #[test]
    fn apply_matches_functional_action() {
        let basis = LevelBasis::new(3, 2);
        let rot = LevelOperator::from_fn(&basis, |m| StateVec::basis_state(m.rotated()));
        for st in basis.states() {
            let v = StateVec::basis_state(st.clone());
            assert_eq!(rot.apply(&v), v.then(|m| StateVec::basis_state(m.rotated())));
        }
    }

    #[test]
    fn transpose_is_adjoint_for_overlap() {
        let basis = LevelBasis::new(3, 2);
        let rot = LevelOperator::from_fn(&basis, |m| StateVec::basis_state(m.rotated()));
        let tr = rot.transpose();
        for a in basis.states() {
            for b in basis.states() {
                let va = StateVec::basis_state(a.clone());
                let vb = StateVec::basis_state(b.clone());
                assert_eq!(va.overlap(&rot.apply(&vb)), tr.apply(&va).overlap(&vb));
            }
        }
    }

    #[test]
    #[should_panic(expected = "leaves the level-2 sector")]
    fn level_escape_is_diagnosed() {
        let basis = LevelBasis::new(3, 2);
        let _ = LevelOperator::from_fn(&basis, |m| {
            let mut parts = m.0.clone();
            parts[0] += 1;
            StateVec::basis_state(Composition::new(parts))
        });
    }
}
