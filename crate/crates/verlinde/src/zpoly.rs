//! Exact polynomials in the loop variable `z` with integer coefficients.
//!
//! `ZPoly` is the coefficient ring for every state vector and operator matrix
//! in this crate. All arithmetic is exact: coefficients are `i64` and every
//! operation panics on overflow rather than silently wrapping. Specialising
//! `z = 0` (finite alphabet) and `z = 1` (fusion ring) are ring homomorphisms.

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A polynomial in `z` over the integers, stored as a sorted list of
/// `(exponent, coefficient)` pairs with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct ZPoly {
    terms: Vec<(u32, i64)>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in z-polynomial addition")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in z-polynomial multiplication")
}

impl ZPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        ZPoly { terms: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        ZPoly::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: i64) -> Self {
        if c == 0 {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(0, c)] }
        }
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        ZPoly::monomial(1, 1)
    }

    /// The monomial `c * z^e`.
    pub fn monomial(e: u32, c: i64) -> Self {
        if c == 0 {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(e, c)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    /// Coefficient of `z^e`.
    pub fn coeff(&self, e: u32) -> i64 {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0)
    }

    /// Iterate over `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.terms.iter().copied()
    }

    /// Evaluate at an integer value of `z`. Evaluation is a ring homomorphism.
    pub fn eval(&self, z: i64) -> i64 {
        let mut acc: i64 = 0;
        for &(e, c) in &self.terms {
            let mut p: i64 = 1;
            for _ in 0..e {
                p = checked_mul(p, z);
            }
            acc = checked_add(acc, checked_mul(c, p));
        }
        acc
    }

    /// Substitute a fixed integer for `z`, returning a constant polynomial.
    pub fn subst(&self, z: i64) -> ZPoly {
        ZPoly::constant(self.eval(z))
    }

    /// Multiply by `z^e`.
    pub fn shift(&self, e: u32) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|&(d, c)| (d + e, c)).collect(),
        }
    }

    fn add_term(&mut self, e: u32, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => {
                let s = checked_add(self.terms[i].1, c);
                if s == 0 {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = s;
                }
            }
            Err(i) => self.terms.insert(i, (e, c)),
        }
    }
}

impl From<i64> for ZPoly {
    fn from(c: i64) -> Self {
        ZPoly::constant(c)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for &(e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl AddAssign<&ZPoly> for ZPoly {
    fn add_assign(&mut self, rhs: &ZPoly) {
        for &(e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for &(e, c) in &rhs.terms {
            out.add_term(e, c.checked_neg().expect("integer overflow"));
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e, c.checked_neg().expect("integer overflow")))
                .collect(),
        }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, checked_mul(c1, c2));
            }
        }
        out
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "z")?,
                (1, m) => write!(f, "{m}*z")?,
                (e, 1) => write!(f, "z^{e}")?,
                (e, m) => write!(f, "{m}*z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Serialized as an exponent -> coefficient map (JSON object keys are strings).
impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.terms.len()))?;
        for &(e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ZPoly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from z-exponents to integer coefficients")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<ZPoly, A::Error> {
                let mut p = ZPoly::zero();
                while let Some((k, v)) = access.next_entry::<String, i64>()? {
                    let e: u32 = k.parse().map_err(serde::de::Error::custom)?;
                    p.add_term(e, v);
                }
                Ok(p)
            }
        }
        de.deserialize_map(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constants_and_monomials() {
        assert!(ZPoly::zero().is_zero());
        assert!(ZPoly::one().is_one());
        assert!(ZPoly::constant(0).is_zero());
        assert!(ZPoly::monomial(3, 0).is_zero());
        assert_eq!(ZPoly::z().coeff(1), 1);
        assert_eq!(ZPoly::z().degree(), Some(1));
    }

    #[test]
    fn arithmetic_examples() {
        let p = &ZPoly::constant(2) + &ZPoly::z(); // 2 + z
        let q = &ZPoly::z() * &ZPoly::z(); // z^2
        assert_eq!((&p * &q).coeff(2), 2);
        assert_eq!((&p * &q).coeff(3), 1);
        assert_eq!(&p - &p, ZPoly::zero());
        assert_eq!(p.to_string(), "2 + z");
        assert_eq!((-&p).to_string(), "-2 - z");
    }

    #[test]
    fn display_forms() {
        assert_eq!(ZPoly::zero().to_string(), "0");
        assert_eq!(ZPoly::monomial(2, -3).to_string(), "-3*z^2");
        let p = &ZPoly::one() - &ZPoly::monomial(2, 1);
        assert_eq!(p.to_string(), "1 - z^2");
    }

    #[test]
    fn evaluation_at_0_and_1() {
        let p = &(&ZPoly::constant(2) + &ZPoly::z()) * &ZPoly::z(); // 2z + z^2
        assert_eq!(p.eval(0), 0);
        assert_eq!(p.eval(1), 3);
        assert_eq!(p.subst(1), ZPoly::constant(3));
    }

    #[test]
    fn serde_round_trip() {
        let p = &ZPoly::constant(-2) + &ZPoly::monomial(4, 7);
        let s = serde_json::to_string(&p).unwrap();
        let q: ZPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    fn arb_poly() -> impl Strategy<Value = ZPoly> {
        proptest::collection::vec((0u32..6, -20i64..20), 0..5).prop_map(|ts| {
            let mut p = ZPoly::zero();
            for (e, c) in ts {
                p.add_term(e, c);
            }
            p
        })
    }

    proptest! {
        // Evaluation at any integer point is a ring homomorphism; in particular
        // the z = 0 and z = 1 specialisations used throughout the crate are.
        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), z in -3i64..=3) {
            prop_assert_eq!((&a + &b).eval(z), a.eval(z) + b.eval(z));
            prop_assert_eq!((&a * &b).eval(z), a.eval(z) * b.eval(z));
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &ZPoly::one(), a.clone());
        }

        #[test]
        fn no_zero_terms_stored(a in arb_poly(), b in arb_poly()) {
            let s = &a - &a;
            prop_assert!(s.is_zero());
            for (_, c) in (&a * &b).iter() {
                prop_assert!(c != 0);
            }
        }
    }
}
