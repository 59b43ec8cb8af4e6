//! The modular S-matrix on a level sector, built from exact rational weight
//! geometry: phases are computed from `Ratio<i64>` inner products and only
//! then converted to double precision.  Unitarity and symmetry are the
//! oracle that the conventions are right; fusion coefficients come out of
//! the diagonalization formula by integer rounding with a hard residual
//! bound.

use std::f64::consts::PI;

use num::complex::Complex64;
use num::rational::Ratio;

use crate::util::signed_permutations;
use crate::weights::{rho, traceless_coords, LevelBasis, PartitionLabel};
use crate::{ROUNDING_TOL, SMATRIX_TOL};

/// The unitary symmetric matrix diagonalizing the level-`k` fusion ring,
/// indexed by the canonical label order of the sector.
#[derive(Clone, Debug)]
pub struct SMatrix {
    pub n: usize,
    pub k: u32,
    labels: Vec<PartitionLabel>,
    entries: Vec<Complex64>,
}

/// Build the S-matrix: entry `(lambda, sigma)` is
/// `e^{i pi n(n-1)/4} / sqrt(n (k+n)^{n-1})` times the signed sum over
/// permutations `w` of `exp(-2 pi i (sigma+rho, w(lambda+rho)) / (k+n))`.
pub fn smatrix(n: usize, k: u32) -> SMatrix {
    assert!(n > 2, "the weight geometry needs at least three sites");
    let basis = LevelBasis::new(n, k);
    let labels = basis.labels();
    let dim = labels.len();
    let level_shift = k as i64 + n as i64;
    let rho_vec = rho(n);
    let shifted: Vec<Vec<Ratio<i64>>> = labels
        .iter()
        .map(|l| {
            traceless_coords(l, n)
                .iter()
                .zip(&rho_vec)
                .map(|(a, b)| a + b)
                .collect()
        })
        .collect();
    let perms = signed_permutations(n);
    let modulus = (n as f64 * (level_shift as f64).powi(n as i32 - 1)).sqrt();
    let prefactor = Complex64::from_polar(1.0 / modulus, PI * (n * (n - 1)) as f64 / 4.0);
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (i, row) in shifted.iter().enumerate() {
        for (j, col) in shifted.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (perm, sign) in &perms {
                let mut ip = Ratio::new(0i64, 1);
                for (t, &pt) in perm.iter().enumerate() {
                    ip += row[t] * col[pt];
                }
                let angle = -2.0 * PI * ratio_to_f64(ip) / level_shift as f64;
                acc += Complex64::from_polar(*sign as f64, angle);
            }
            entries[i * dim + j] = prefactor * acc;
        }
    }
    SMatrix { n, k, labels, entries }
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl SMatrix {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[PartitionLabel] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim() + j]
    }

    /// Largest modulus among the entries of `S S^dagger - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..dim {
                    acc += self.entry(i, t) * self.entry(j, t).conj();
                }
                if i == j {
                    acc -= Complex64::new(1.0, 0.0);
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    /// Largest modulus among the entries of `S - S^T`.
    pub fn symmetry_defect(&self) -> f64 {
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                worst = worst.max((self.entry(i, j) - self.entry(j, i)).norm());
            }
        }
        worst
    }

    /// Smallest modulus in the vacuum row; must stay well away from zero
    /// for the diagonalization formula to make sense.
    pub fn min_vacuum_modulus(&self) -> f64 {
        (0..self.dim())
            .map(|j| self.entry(0, j).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// The fusion coefficient from the diagonalization formula, rounded to
    /// the nearest integer; errors if the residual exceeds the pinned
    /// tolerance or the rounded value is negative.
    pub fn fusion_coefficient(&self, li: usize, mi: usize, ni: usize) -> Result<u64, String> {
        let mut acc = Complex64::new(0.0, 0.0);
        for s in 0..self.dim() {
            acc += self.entry(li, s) * self.entry(mi, s) * self.entry(ni, s).conj()
                / self.entry(0, s);
        }
        let rounded = acc.re.round();
        let residual = (acc - Complex64::new(rounded, 0.0)).norm();
        if residual >= ROUNDING_TOL {
            return Err(format!(
                "fusion coefficient ({li},{mi},{ni}) residual {residual:.3e} exceeds {ROUNDING_TOL:.0e}"
            ));
        }
        if rounded < 0.0 {
            return Err(format!(
                "fusion coefficient ({li},{mi},{ni}) rounds to the negative value {rounded}"
            ));
        }
        Ok(rounded as u64)
    }

    /// CSV export: one row per entry with real and imaginary parts.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row_label,col_label,re,im\n");
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let e = self.entry(i, j);
                out.push_str(&format!(
                    "\"{}\",\"{}\",{:.15e},{:.15e}\n",
                    self.labels[i], self.labels[j], e.re, e.im
                ));
            }
        }
        out
    }
}

/// Verify unitarity, symmetry, and vacuum-row non-vanishing within the
/// pinned tolerance.
pub fn check_smatrix(n: usize, k: u32) -> Result<(), String> {
    let s = smatrix(n, k);
    let u = s.unitarity_defect();
    if u > SMATRIX_TOL {
        return Err(format!("unitarity defect {u:.3e} exceeds {SMATRIX_TOL:.0e} at n={n}, k={k}"));
    }
    let y = s.symmetry_defect();
    if y > SMATRIX_TOL {
        return Err(format!("symmetry defect {y:.3e} exceeds {SMATRIX_TOL:.0e} at n={n}, k={k}"));
    }
    if s.min_vacuum_modulus() <= SMATRIX_TOL {
        return Err(format!("vacuum row vanishes at n={n}, k={k}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_and_symmetric_small() {
        for (n, k) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] {
            check_smatrix(n, k).unwrap();
        }
    }

    #[test]
    fn cyclic_group_fourier_structure() {
        // At n=3, k=1 the ring is the group ring of Z_3: every S-matrix
        // entry has modulus 1/sqrt(3).
        let s = smatrix(3, 1);
        assert_eq!(s.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert!((s.entry(i, j).norm() - 1.0 / 3.0f64.sqrt()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn vacuum_column_fuses_trivially() {
        let s = smatrix(3, 2);
        for m in 0..s.dim() {
            for n_idx in 0..s.dim() {
                let want = u64::from(m == n_idx);
                assert_eq!(s.fusion_coefficient(0, m, n_idx).unwrap(), want);
            }
        }
    }

    #[test]
    fn level_one_fusion_is_cyclic() {
        // n=3, k=1: labels are the rectangle (vacuum), (1,1), (1); the ring
        // is Z_3 so (1) * (1) = (1,1).
        let s = smatrix(3, 1);
        let one = s
            .labels()
            .iter()
            .position(|l| l.parts() == [1])
            .unwrap();
        let oneone = s
            .labels()
            .iter()
            .position(|l| l.parts() == [1, 1])
            .unwrap();
        for t in 0..3 {
            let want = u64::from(t == oneone);
            assert_eq!(s.fusion_coefficient(one, one, t).unwrap(), want);
        }
        assert_eq!(s.fusion_coefficient(one, oneone, 0).unwrap(), 1);
    }
}
