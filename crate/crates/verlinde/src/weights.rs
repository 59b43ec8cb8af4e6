//! Labels for the level-`k` state spaces: occupation vectors, partition
//! labels, and the exact weight-space coordinates used by the modular
//! S-matrix.
//!
//! A basis state of the level-`k` sector on `n` sites is an occupation vector
//! `m = (m_1, ..., m_n)` of nonnegative integers summing to `k`.  The same
//! state can be written as a partition with at most `n` rows whose first row
//! equals `k`: `m_i` counts the columns of height exactly `i`.  The vacuum
//! `m = (0, ..., 0, k)` corresponds to the rectangle `(k, k, ..., k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::Error;

/// Occupation vector `(m_1, ..., m_n)`; the level is the sum of the entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    /// Number of sites `n`.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The level `k = m_1 + ... + m_n`.
    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// The vacuum of the level-`k` sector: all particles on the last site.
    pub fn vacuum(n: usize, k: u32) -> Self {
        let mut parts = vec![0; n];
        parts[n - 1] = k;
        Composition(parts)
    }

    /// Cyclic shift moving the last entry to the front:
    /// `(m_1, ..., m_n) -> (m_n, m_1, ..., m_{n-1})`.
    pub fn rotated(&self) -> Self {
        let n = self.rank();
        let mut parts = Vec::with_capacity(n);
        parts.push(self.0[n - 1]);
        parts.extend_from_slice(&self.0[..n - 1]);
        Composition(parts)
    }

    /// The partition with `m_i` columns of height `i`, padded to `n` rows.
    pub fn to_partition(&self) -> PartitionLabel {
        let n = self.rank();
        let mut rows = vec![0u32; n];
        let mut acc = 0;
        for i in (0..n).rev() {
            acc += self.0[i];
            rows[i] = acc;
        }
        PartitionLabel::new(rows)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionLabel(Vec<u32>);

impl PartitionLabel {
    /// Build from parts; trailing zeros are removed, order is validated.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        PartitionLabel(parts)
    }

    pub fn empty() -> Self {
        PartitionLabel(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The part `lambda_i` (1-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `n`; panics if there are more rows.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.0.len() <= n, "partition {self} has more than {n} rows");
        let mut rows = self.0.clone();
        rows.resize(n, 0);
        rows
    }

    /// Conjugate partition (transpose of the diagram).
    pub fn conjugate(&self) -> PartitionLabel {
        let cols = self.part(1) as usize;
        let mut rows = vec![0u32; cols];
        for (j, row) in rows.iter_mut().enumerate() {
            *row = self.0.iter().filter(|&&p| p as usize > j).count() as u32;
        }
        PartitionLabel::new(rows)
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &PartitionLabel) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// Whether the diagram fits inside an `n x k` rectangle.
    pub fn fits_in_box(&self, n: usize, k: u32) -> bool {
        self.len() <= n && self.part(1) <= k
    }

    /// Occupation vector on `n` sites for a level label (first row must be
    /// exactly `k` once padded to `n` rows, i.e. `m_i = lambda_i -
    /// lambda_{i+1}` with `lambda_{n+1} = 0`).
    pub fn to_composition(&self, n: usize) -> Composition {
        let rows = self.padded(n);
        let mut m = vec![0u32; n];
        for i in 0..n {
            let next = if i + 1 < n { rows[i + 1] } else { 0 };
            m[i] = rows[i] - next;
        }
        Composition(m)
    }

    /// Extend a label with `lambda_1 <= k` to the level-`k` representative by
    /// prepending `k - lambda_1` columns of full height `n`.
    pub fn to_level(&self, n: usize, k: u32) -> Result<PartitionLabel, Error> {
        if !self.fits_in_box(n, k) {
            return Err(Error::LabelOutOfRange { label: self.to_string(), n, k });
        }
        let pad = k - self.part(1);
        let rows: Vec<u32> = self.padded(n).iter().map(|r| r + pad).collect();
        Ok(PartitionLabel::new(rows))
    }

    /// Remove all full-height columns: the inverse of [`to_level`] for rank
    /// `n`.  Returns the finite label with fewer than `n` rows.
    ///
    /// [`to_level`]: PartitionLabel::to_level
    pub fn strip_full_columns(&self, n: usize) -> PartitionLabel {
        let rows = self.padded(n);
        let full = rows[n - 1];
        PartitionLabel::new(rows.iter().map(|r| r - full).collect())
    }
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for PartitionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(PartitionLabel::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(s.to_string()))?;
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(s.to_string()));
        }
        Ok(PartitionLabel::new(parts))
    }
}

/// The ordered basis of the level-`k` sector on `n` sites.
///
/// States are listed so that the padded partition rows decrease
/// lexicographically; the vacuum rectangle `(k, ..., k)` is index 0.
#[derive(Clone, Debug)]
pub struct LevelBasis {
    pub n: usize,
    pub k: u32,
    states: Vec<Composition>,
    index: BTreeMap<Composition, usize>,
}

impl LevelBasis {
    pub fn new(n: usize, k: u32) -> Self {
        assert!(n >= 2, "need at least two sites");
        let mut labels: Vec<Vec<u32>> = Vec::new();
        let mut rows = vec![k; 1];
        enumerate_rows(&mut rows, n, k, &mut labels);
        // Lexicographically descending on the padded rows.
        labels.sort_by(|a, b| b.cmp(a));
        let states: Vec<Composition> = labels
            .iter()
            .map(|rows| PartitionLabel::new(rows.clone()).to_composition(n))
            .collect();
        let index = states
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        LevelBasis { n, k, states, index }
    }

    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[Composition] {
        &self.states
    }

    pub fn state(&self, i: usize) -> &Composition {
        &self.states[i]
    }

    pub fn index_of(&self, m: &Composition) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn labels(&self) -> Vec<PartitionLabel> {
        self.states.iter().map(|m| m.to_partition()).collect()
    }
}

fn enumerate_rows(rows: &mut Vec<u32>, n: usize, _k: u32, out: &mut Vec<Vec<u32>>) {
    if rows.len() == n {
        out.push(rows.clone());
        return;
    }
    let cap = *rows.last().unwrap();
    for next in 0..=cap {
        rows.push(next);
        enumerate_rows(rows, n, _k, out);
        rows.pop();
    }
}

/// `C(k + n - 1, n - 1)`: the dimension of the level-`k` sector on `n` sites.
pub fn sector_dimension(n: usize, k: u32) -> usize {
    binomial(k as u64 + n as u64 - 1, n as u64 - 1) as usize
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Half the sum of positive roots in orthonormal coordinates:
/// `rho_j = (n - 2j + 1) / 2` for `j = 1, ..., n`.  The entries sum to zero.
pub fn rho(n: usize) -> Vec<Ratio<i64>> {
    (1..=n)
        .map(|j| Ratio::new(n as i64 - 2 * j as i64 + 1, 2))
        .collect()
}

/// Fundamental weight `omega_i` in orthonormal coordinates:
/// `e_1 + ... + e_i - (i/n)(e_1 + ... + e_n)`.
pub fn fundamental_weight(i: usize, n: usize) -> Vec<Ratio<i64>> {
    assert!(i >= 1 && i < n);
    (1..=n)
        .map(|j| {
            let ind = if j <= i { Ratio::from_integer(1) } else { Ratio::from_integer(0) };
            ind - Ratio::new(i as i64, n as i64)
        })
        .collect()
}

/// Traceless orthonormal coordinates of a partition label: subtract the mean
/// so the entries sum to zero.  Full-height columns drop out, so level
/// representatives and their stripped finite labels give the same vector.
pub fn traceless_coords(label: &PartitionLabel, n: usize) -> Vec<Ratio<i64>> {
    let rows = label.padded(n);
    let mean = Ratio::new(label.size() as i64, n as i64);
    rows.iter().map(|&r| Ratio::from_integer(r as i64) - mean).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn partition_composition_round_trip() {
        let m = Composition::new(vec![1, 0, 2, 1]);
        let lam = m.to_partition();
        assert_eq!(lam.parts(), &[4, 3, 3, 1]);
        assert_eq!(lam.to_composition(4), m);
    }

    #[test]
    fn vacuum_is_full_rectangle() {
        let vac = Composition::vacuum(3, 2);
        assert_eq!(vac.0, vec![0, 0, 2]);
        assert_eq!(vac.to_partition().parts(), &[2, 2, 2]);
    }

    #[test]
    fn basis_order_rank4_level2() {
        // All ten level-2 labels on four sites, vacuum first, in
        // lexicographically descending row order.
        let basis = LevelBasis::new(4, 2);
        let rows: Vec<Vec<u32>> =
            basis.labels().iter().map(|l| l.padded(4)).collect();
        assert_eq!(
            rows,
            vec![
                vec![2, 2, 2, 2],
                vec![2, 2, 2, 1],
                vec![2, 2, 2, 0],
                vec![2, 2, 1, 1],
                vec![2, 2, 1, 0],
                vec![2, 2, 0, 0],
                vec![2, 1, 1, 1],
                vec![2, 1, 1, 0],
                vec![2, 1, 0, 0],
                vec![2, 0, 0, 0],
            ]
        );
        assert_eq!(basis.index_of(&Composition::vacuum(4, 2)), Some(0));
    }

    #[test]
    fn dimension_matches_enumeration() {
        for n in 2..=5 {
            for k in 0..=4 {
                let basis = LevelBasis::new(n, k);
                assert_eq!(basis.dimension(), sector_dimension(n, k), "n={n} k={k}");
                // Every state really has level k and rank n.
                for m in basis.states() {
                    assert_eq!(m.level(), k);
                    assert_eq!(m.rank(), n);
                }
            }
        }
        assert_eq!(sector_dimension(4, 2), 10);
        assert_eq!(sector_dimension(3, 1), 3);
    }

    #[test]
    fn rho_values() {
        let r3 = rho(3);
        assert_eq!(r3, vec![Ratio::from_integer(1), Ratio::from_integer(0), Ratio::from_integer(-1)]);
        let r4 = rho(4);
        assert_eq!(
            r4,
            vec![Ratio::new(3, 2), Ratio::new(1, 2), Ratio::new(-1, 2), Ratio::new(-3, 2)]
        );
        for n in 2..=6 {
            let sum: Ratio<i64> = rho(n).into_iter().sum();
            assert_eq!(sum, Ratio::from_integer(0));
        }
    }

    #[test]
    fn fundamental_weights_are_traceless() {
        for n in 2..=5 {
            for i in 1..n {
                let w = fundamental_weight(i, n);
                let sum: Ratio<i64> = w.iter().cloned().sum();
                assert_eq!(sum, Ratio::from_integer(0));
                // (omega_i, alpha_j) = delta_ij for the simple roots
                // alpha_j = e_j - e_{j+1}.
                for j in 1..n {
                    let pairing = w[j - 1] - w[j];
                    let expect = if i == j { 1 } else { 0 };
                    assert_eq!(pairing, Ratio::from_integer(expect), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn traceless_coords_ignore_full_columns() {
        let lam = PartitionLabel::new(vec![3, 2, 1]);
        let finite = lam.strip_full_columns(3);
        assert_eq!(finite.parts(), &[2, 1]);
        assert_eq!(traceless_coords(&lam, 3), traceless_coords(&finite, 3));
    }

    #[test]
    fn conjugate_and_containment() {
        let lam = PartitionLabel::new(vec![4, 2, 1]);
        assert_eq!(lam.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert!(PartitionLabel::new(vec![2, 1]).contained_in(&lam));
        assert!(!PartitionLabel::new(vec![5]).contained_in(&lam));
        assert!(lam.fits_in_box(3, 4));
        assert!(!lam.fits_in_box(2, 4));
    }

    #[test]
    fn parse_and_display() {
        let lam: PartitionLabel = "2,1,1".parse().unwrap();
        assert_eq!(lam.parts(), &[2, 1, 1]);
        assert_eq!(lam.to_string(), "2,1,1");
        assert_eq!("0".parse::<PartitionLabel>().unwrap(), PartitionLabel::empty());
        assert_eq!("".parse::<PartitionLabel>().unwrap(), PartitionLabel::empty());
        assert!("1,2".parse::<PartitionLabel>().is_err());
        assert!("a,b".parse::<PartitionLabel>().is_err());
    }

    #[test]
    fn level_extension() {
        let lam = PartitionLabel::new(vec![2, 1]);
        let lifted = lam.to_level(3, 3).unwrap();
        assert_eq!(lifted.parts(), &[3, 2, 1]);
        assert_eq!(lifted.strip_full_columns(3), lam);
        assert!(PartitionLabel::new(vec![4]).to_level(3, 3).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_any_composition(parts in proptest::collection::vec(0u32..5, 2..6)) {
            let m = Composition::new(parts);
            let n = m.rank();
            let lam = m.to_partition();
            prop_assert_eq!(lam.to_composition(n), m.clone());
            prop_assert_eq!(lam.part(1), m.level());
        }

        #[test]
        fn rotation_has_period_n(parts in proptest::collection::vec(0u32..5, 2..6)) {
            let m = Composition::new(parts);
            let mut r = m.clone();
            for _ in 0..m.rank() {
                r = r.rotated();
            }
            prop_assert_eq!(r, m);
        }
    }
}
