//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Verification routines for the lattice model need exact arithmetic in
//! several formal variables at once (spectral parameters `u`, `v`, the twist
//! `z`, the regularisation parameter `s`), including negative exponents such
//! as `u/v`. Partition functions need one variable per lattice row. `MPoly`
//! covers both: a term map from integer exponent vectors to `i64`
//! coefficients, with overflow-checked arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::zpoly::ZPoly;

/// Conventional variable indices for four-variable lattice arithmetic.
pub mod var {
    /// Twist variable `z`.
    pub const Z: usize = 0;
    /// First spectral parameter `u`.
    pub const U: usize = 1;
    /// Second spectral parameter `v`.
    pub const V: usize = 2;
    /// Crystal-limit regularisation parameter `s`.
    pub const S: usize = 3;
    /// Number of variables in the lattice convention.
    pub const NVARS: usize = 4;
}

/// A Laurent polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(&vec![0; nvars], c);
        p
    }

    /// The variable with the given index.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(&e, 1)
    }

    /// The monomial `c * x^exps` (exponents may be negative).
    pub fn monomial(exps: &[i32], c: i64) -> Self {
        let mut p = MPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: &[i32], c: i64) {
        assert_eq!(exps.len(), self.nvars, "exponent vector has wrong arity");
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exps.to_vec()).or_insert(0);
        *entry = entry.checked_add(c).expect("integer overflow in polynomial addition");
        if *entry == 0 {
            self.terms.remove(exps);
        }
    }

    pub fn coeff(&self, exps: &[i32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiply by a single monomial.
    /// Embed into a ring with `nvars` variables, sending variable `i` of
    /// `self` to variable `map[i]` of the target.  A non-injective map
    /// identifies variables.
    pub fn remap_vars(&self, nvars: usize, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.nvars, "variable map arity mismatch");
        let mut out = MPoly::zero(nvars);
        for (exps, c) in self.iter() {
            let mut e = vec![0i32; nvars];
            for (i, &target) in map.iter().enumerate() {
                assert!(target < nvars, "variable map out of range");
                e[target] += exps[i];
            }
            out.add_term(&e, c);
        }
        out
    }

    pub fn mul_monomial(&self, exps: &[i32], c: i64) -> MPoly {
        assert_eq!(exps.len(), self.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e, k) in self.iter() {
            let ne: Vec<i32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.add_term(&ne, k.checked_mul(c).expect("integer overflow"));
        }
        out
    }

    /// Smallest exponent of variable `i` appearing in any term.
    pub fn min_exponent(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    /// Collect the coefficient of `x_i^e` as a polynomial in the remaining
    /// variables (arity is unchanged; variable `i` is zeroed out).
    pub fn coeff_of(&self, i: usize, e: i32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (exps, c) in self.iter() {
            if exps[i] == e {
                let mut r = exps.clone();
                r[i] = 0;
                out.add_term(&r, c);
            }
        }
        out
    }

    /// Substitute an integer value for variable `i` (requires nonnegative
    /// exponents for that variable).
    pub fn subst(&self, i: usize, value: i64) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (exps, c) in self.iter() {
            assert!(exps[i] >= 0, "cannot substitute into a negative exponent");
            let mut p: i64 = 1;
            for _ in 0..exps[i] {
                p = p.checked_mul(value).expect("integer overflow");
            }
            let mut r = exps.clone();
            r[i] = 0;
            out.add_term(&r, c.checked_mul(p).expect("integer overflow"));
        }
        out
    }

    /// Embed a `ZPoly` using variable `zi` for `z`.
    pub fn from_zpoly(p: &ZPoly, nvars: usize, zi: usize) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (e, c) in p.iter() {
            let mut exps = vec![0; nvars];
            exps[zi] = e as i32;
            out.add_term(&exps, c);
        }
        out
    }

    /// Render with caller-supplied variable names, in deterministic term order.
    pub fn to_string_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        // Sort terms by total degree then reverse-lex so that the output reads
        // naturally, e.g. "u1^2 + u1*u2 + u2^2".
        let mut terms: Vec<(&Vec<i32>, i64)> = self.iter().collect();
        terms.sort_by(|a, b| {
            let da: i32 = a.0.iter().sum();
            let db: i32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (i, (exps, c)) in terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(v)),
                    _ => factors.push(format!("{}^{}", name(v), e)),
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c.checked_neg().expect("integer overflow"));
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in self.iter() {
            out.add_term(e, c.checked_neg().expect("integer overflow"));
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(&e, c1.checked_mul(c2).expect("integer overflow"));
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["z", "u", "v", "s"];
        write!(
            f,
            "{}",
            self.to_string_with(&|i| {
                if self.nvars == var::NVARS {
                    names[i].to_string()
                } else {
                    format!("x{}", i + 1)
                }
            })
        )
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> MPoly {
        MPoly::variable(var::NVARS, var::U)
    }

    fn v() -> MPoly {
        MPoly::variable(var::NVARS, var::V)
    }

    #[test]
    fn laurent_arithmetic() {
        // (u/v) * v = u
        let u_over_v = MPoly::monomial(&[0, 1, -1, 0], 1);
        assert_eq!(&u_over_v * &v(), u());
    }

    #[test]
    fn add_sub_cancel() {
        let p = &(&u() * &u()) + &v();
        assert!((&p - &p).is_zero());
        assert_eq!(&p + &MPoly::zero(var::NVARS), p);
    }

    #[test]
    fn coeff_extraction() {
        // p = 3 u^2 v - v
        let mut p = MPoly::zero(var::NVARS);
        p.add_term(&[0, 2, 1, 0], 3);
        p.add_term(&[0, 0, 1, 0], -1);
        let c2 = p.coeff_of(var::U, 2);
        assert_eq!(c2, MPoly::monomial(&[0, 0, 1, 0], 3));
        assert_eq!(p.min_exponent(var::U), Some(0));
    }

    #[test]
    fn substitution() {
        // p = z u + u^2 at z = 1 -> u + u^2
        let mut p = MPoly::zero(var::NVARS);
        p.add_term(&[1, 1, 0, 0], 1);
        p.add_term(&[0, 2, 0, 0], 1);
        let q = p.subst(var::Z, 1);
        assert_eq!(q.coeff(&[0, 1, 0, 0]), 1);
        assert_eq!(q.coeff(&[0, 2, 0, 0]), 1);
        let r = p.subst(var::Z, 0);
        assert_eq!(r, MPoly::monomial(&[0, 2, 0, 0], 1));
    }

    #[test]
    fn display_two_rows() {
        let mut p = MPoly::zero(2);
        p.add_term(&[1, 0], 1);
        p.add_term(&[0, 1], 1);
        assert_eq!(p.to_string_with(&|i| format!("u{}", i + 1)), "u1 + u2");
    }
}
