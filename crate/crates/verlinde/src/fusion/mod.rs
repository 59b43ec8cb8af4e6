//! The level-`k` fusion ring on rank-`n` labels, computed three independent
//! ways and cross-checked:
//!
//! 1. **Plactic route** — act with a noncommutative Schur polynomial in the
//!    cyclic hopping alphabet on a sector basis state and read off the
//!    structure constants, which land as single powers of the twist
//!    variable `z`.
//! 2. **Diagonalization route** — round the complex diagonalization formula
//!    built from the unitary S-matrix ([`smatrix`]).
//! 3. **Lattice route** — expand row-to-row partition functions of the
//!    crystal vertex model into commutative Schur polynomials.
//!
//! [`check_fusion_three_way`] ties the three together; [`grassmannian_check`]
//! pins the `z = 0` specialisation to a Littlewood–Richardson oracle, and
//! [`cauchy_check`] verifies the operator Cauchy identity that powers the
//! lattice expansion.

pub mod csym;
pub mod lr;
pub mod smatrix;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::fock::{LevelOperator, StateVec};
use crate::lattice::{row_configs, transfer_q};
use crate::mvpoly::MPoly;
use crate::ncsym;
use crate::weights::{Composition, LevelBasis, PartitionLabel};
use crate::zpoly::ZPoly;
use crate::Error;

/// Fusion product with the twist variable kept formal: the map
/// `result label -> coefficient in ZZ[z]`.
///
/// Both labels are normalised to level `k` (prepending full-height columns),
/// the Schur operator of the left label acts on the basis state of the
/// right, and every structure constant is required to be a single monomial
/// `c z^d` with `c > 0` and `n d = |lambda| + |mu| - |nu|`; anything else is
/// reported as a hard failure.
pub fn fuse_formal(
    lambda: &PartitionLabel,
    mu: &PartitionLabel,
    n: usize,
    k: u32,
) -> Result<BTreeMap<PartitionLabel, ZPoly>, Error> {
    let lh = lambda.to_level(n, k)?;
    let mh = mu.to_level(n, k)?;
    let m = mh.to_composition(n);
    let action = ncsym::apply_schur(&lh, &m);
    let total = i64::from(lh.size()) + i64::from(mh.size());
    let mut out = BTreeMap::new();
    for (t, c) in action.iter() {
        let nu = t.to_partition();
        let mut terms = c.iter();
        let (d, coeff) = terms.next().expect("state coefficients are nonzero");
        if terms.next().is_some() {
            return Err(Error::CheckFailed(format!(
                "product {lh} * {mh} -> {nu} has mixed twist degrees: {c}"
            )));
        }
        if coeff < 0 {
            return Err(Error::CheckFailed(format!(
                "product {lh} * {mh} -> {nu} has negative coefficient {coeff}"
            )));
        }
        if i64::from(d) * n as i64 != total - i64::from(nu.size()) {
            return Err(Error::CheckFailed(format!(
                "product {lh} * {mh} -> {nu} has twist degree {d}, \
                 incompatible with the label sizes"
            )));
        }
        out.insert(nu, c.clone());
    }
    Ok(out)
}

/// Fusion product evaluated at `z = 1`: the nonnegative integer structure
/// constants of the fusion ring.
pub fn fuse(
    lambda: &PartitionLabel,
    mu: &PartitionLabel,
    n: usize,
    k: u32,
) -> Result<BTreeMap<PartitionLabel, u64>, Error> {
    let formal = fuse_formal(lambda, mu, n, k)?;
    Ok(formal
        .into_iter()
        .map(|(nu, c)| {
            let v = c.eval(1);
            debug_assert!(v > 0);
            (nu, v as u64)
        })
        .collect())
}

/// All structure constants of one fusion ring at `z = 1`, stored once per
/// unordered pair of factors.
#[derive(Clone, Debug)]
pub struct FusionTable {
    pub n: usize,
    pub k: u32,
    labels: Vec<PartitionLabel>,
    coeffs: BTreeMap<(usize, usize), BTreeMap<usize, u64>>,
}

#[derive(Serialize)]
struct TableDoc {
    n: usize,
    k: u32,
    dimension: usize,
    labels: Vec<String>,
    products: Vec<ProductDoc>,
}

#[derive(Serialize)]
struct ProductDoc {
    lhs: String,
    rhs: String,
    result: String,
    coefficient: u64,
}

impl FusionTable {
    /// Compute every product via the plactic route.
    pub fn build(n: usize, k: u32) -> Result<FusionTable, Error> {
        let basis = LevelBasis::new(n, k);
        let labels = basis.labels();
        let dim = labels.len();
        let mut coeffs = BTreeMap::new();
        for li in 0..dim {
            for mi in li..dim {
                let by_label = fuse(&labels[li], &labels[mi], n, k)?;
                let mut by_index = BTreeMap::new();
                for (nu, c) in by_label {
                    let ni = labels
                        .iter()
                        .position(|l| *l == nu)
                        .expect("products stay inside the sector");
                    by_index.insert(ni, c);
                }
                coeffs.insert((li, mi), by_index);
            }
        }
        Ok(FusionTable { n, k, labels, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[PartitionLabel] {
        &self.labels
    }

    pub fn label_index(&self, label: &PartitionLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Structure constant by indices; the factor pair is order-insensitive.
    pub fn coefficient(&self, li: usize, mi: usize, ni: usize) -> u64 {
        let key = (li.min(mi), li.max(mi));
        self.coeffs
            .get(&key)
            .and_then(|row| row.get(&ni))
            .copied()
            .unwrap_or(0)
    }

    /// The full product of two basis labels as an index map.
    pub fn product(&self, li: usize, mi: usize) -> &BTreeMap<usize, u64> {
        let key = (li.min(mi), li.max(mi));
        &self.coeffs[&key]
    }

    fn docs(&self) -> Vec<ProductDoc> {
        let mut products = Vec::new();
        for ((li, mi), row) in &self.coeffs {
            for (ni, c) in row {
                products.push(ProductDoc {
                    lhs: self.labels[*li].to_string(),
                    rhs: self.labels[*mi].to_string(),
                    result: self.labels[*ni].to_string(),
                    coefficient: *c,
                });
            }
        }
        products
    }

    /// Deterministic JSON export: one entry per unordered factor pair.
    pub fn to_json(&self) -> Result<String, Error> {
        let doc = TableDoc {
            n: self.n,
            k: self.k,
            dimension: self.dim(),
            labels: self.labels.iter().map(|l| l.to_string()).collect(),
            products: self.docs(),
        };
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }

    /// Deterministic CSV export with quoted labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lhs,rhs,result,coefficient\n");
        for doc in self.docs() {
            out.push_str(&format!(
                "\"{}\",\"{}\",\"{}\",{}\n",
                doc.lhs, doc.rhs, doc.result, doc.coefficient
            ));
        }
        out
    }
}

/// One lattice row applied to a basis state: sum over allowed row
/// configurations with the row's spectral weight on variable `uvar` and,
/// when requested, the wrap weight on variable `zvar`.
fn q_row(m: &Composition, uvar: usize, nvars: usize, zvar: Option<usize>) -> StateVec<MPoly> {
    let mut out = StateVec::zero(m.rank());
    for cfg in row_configs(m) {
        let mut e = vec![0i32; nvars];
        e[uvar] += cfg.u_degree() as i32;
        if let Some(zi) = zvar {
            e[zi] += cfg.z_degree() as i32;
        }
        out.add_term(cfg.output.clone(), MPoly::monomial(&e, 1));
    }
    out
}

/// The operator product `Q(u_1) ... Q(u_l)` (rightmost factor acting
/// first), materialised as matrices per multidegree in `(u_1, ..., u_l)`.
/// Entries stay polynomial in the twist variable.
fn q_product_matrix(basis: &LevelBasis, l: usize) -> BTreeMap<Vec<u32>, LevelOperator> {
    let q = transfer_q(basis);
    let mut acc = BTreeMap::from([(vec![0u32; l], LevelOperator::identity(basis))]);
    for i in 0..l {
        let mut next: BTreeMap<Vec<u32>, LevelOperator> = BTreeMap::new();
        for (d, a) in &acc {
            for r in q.degrees() {
                let b = q.coeff(r).expect("listed degree");
                let prod = a * b;
                if prod.is_zero() {
                    continue;
                }
                let mut nd = d.clone();
                nd[i] += r;
                match next.get_mut(&nd) {
                    Some(existing) => *existing = &*existing + &prod,
                    None => {
                        next.insert(nd, prod);
                    }
                }
            }
        }
        next.retain(|_, op| !op.is_zero());
        acc = next;
    }
    acc
}

/// Lattice partition function with domain wall rows: the matrix element of
/// `Q(u_1) ... Q(u_{n-1})` between two sector labels, with the twist set to
/// one.  Computed twice — matrix products and direct configuration sums —
/// and returned only when both agree.  Variable `i` of the result is
/// `u_{i+1}`.
pub fn partition_function(
    mu: &PartitionLabel,
    nu: &PartitionLabel,
    n: usize,
    k: u32,
) -> Result<MPoly, Error> {
    let l = n - 1;
    let mh = mu.to_level(n, k)?;
    let nh = nu.to_level(n, k)?;
    let basis = LevelBasis::new(n, k);
    let mm = mh.to_composition(n);
    let nm = nh.to_composition(n);
    let mi = basis.index_of(&mm).expect("level label lies in the sector");
    let ni = basis.index_of(&nm).expect("level label lies in the sector");

    let prod = q_product_matrix(&basis, l);
    let mut by_matrix = MPoly::zero(l);
    for (d, op) in &prod {
        let c = op.entry(ni, mi).eval(1);
        if c != 0 {
            let exps: Vec<i32> = d.iter().map(|&x| x as i32).collect();
            by_matrix.add_term(&exps, c);
        }
    }

    let mut v = StateVec::<MPoly>::from_term(mm, MPoly::one(l));
    for i in (0..l).rev() {
        v = v.then(|t| q_row(t, i, l, None));
    }
    let by_rows = v.coeff(&nm).cloned().unwrap_or_else(|| MPoly::zero(l));

    if by_matrix != by_rows {
        return Err(Error::CheckFailed(format!(
            "partition function {mh} -> {nh} differs between matrix and \
             configuration routes"
        )));
    }
    Ok(by_matrix)
}

/// Operator Cauchy identity: for every `l <= lmax`, the product
/// `Q(u_1) ... Q(u_l)` equals the sum over partitions `lambda` inside the
/// `l x k` box of `s_lambda(u_1..u_l)` times the noncommutative Schur
/// operator of `lambda`, as an identity with the twist kept formal.
pub fn cauchy_check(n: usize, k: u32, lmax: usize) -> Result<(), Error> {
    let basis = LevelBasis::new(n, k);
    for l in 1..=lmax {
        let nv = l + 1; // variable 0 is the twist, 1..=l the spectral parameters
        let shift: Vec<usize> = (1..=l).collect();
        let schurs: Vec<(PartitionLabel, MPoly)> = lr::partitions_in_box(l, k)
            .into_iter()
            .map(|lam| {
                let s = csym::commutative_schur(&lam, l).remap_vars(nv, &shift);
                (lam, s)
            })
            .collect();
        for m in basis.states() {
            let mut lhs = StateVec::<MPoly>::from_term(m.clone(), MPoly::one(nv));
            for i in (1..=l).rev() {
                lhs = lhs.then(|t| q_row(t, i, nv, Some(0)));
            }
            let mut rhs = StateVec::<MPoly>::zero(n);
            for (lam, s_u) in &schurs {
                for (t, c) in ncsym::apply_schur(lam, m).iter() {
                    let p = &MPoly::from_zpoly(c, nv, 0) * s_u;
                    rhs.add_term(t.clone(), p);
                }
            }
            if !(&lhs - &rhs).is_zero() {
                return Err(Error::CheckFailed(format!(
                    "Cauchy expansion of {l} rows fails on {m:?} at n={n}, k={k}"
                )));
            }
        }
    }
    Ok(())
}

fn lower_site(m: &Composition, site: usize) -> Option<Composition> {
    if m.get(site) == 0 {
        return None;
    }
    let mut v = m.0.clone();
    v[site] -= 1;
    Some(Composition::new(v))
}

fn rectangle_label(n: usize, k: u32, r: u32) -> PartitionLabel {
    let mut parts = vec![k];
    parts.extend(std::iter::repeat(k - r).take(n - 1));
    PartitionLabel::new(parts)
}

/// Level-lowering recursion for products with the near-rectangular labels
/// `(k, (k-r)^{n-1})`: the structure constant at level `k` splits into a
/// horizontal-strip indicator plus a structure constant at level `k - 1`
/// with one full-height column removed from one factor and one unit column
/// removed from the result.  Verified for every `r` and every label pair at
/// each level up to `k`.
pub fn fusion_recursion_check(n: usize, k: u32) -> Result<(), Error> {
    for level in 1..=k {
        let basis = LevelBasis::new(n, level);
        let labels = basis.labels();
        for r in 1..=level {
            let lam = rectangle_label(n, level, r);
            let lam_prev = rectangle_label(n, level - 1, r - 1);
            for mu in &labels {
                let prods = fuse(&lam, mu, n, level)?;
                for nu in &labels {
                    let lhs = prods.get(nu).copied().unwrap_or(0);
                    let strip = u64::from(
                        nu.size() == mu.size() + r && lr::is_horizontal_strip(mu, nu),
                    );
                    let mut lowered = 0;
                    if let (Some(numm), Some(mumm)) = (
                        lower_site(&nu.to_composition(n), 0),
                        lower_site(&mu.to_composition(n), n - 1),
                    ) {
                        let nu_prev = numm.to_partition();
                        let mu_prev = mumm.to_partition();
                        lowered = fuse(&lam_prev, &mu_prev, n, level - 1)?
                            .get(&nu_prev)
                            .copied()
                            .unwrap_or(0);
                    }
                    if lhs != strip + lowered {
                        return Err(Error::CheckFailed(format!(
                            "level-lowering recursion fails at n={n}, level={level}, \
                             r={r}: ({lam}) * ({mu}) -> ({nu}) gives {lhs}, \
                             expected {strip} + {lowered}"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The `z = 0` specialisation: Schur operators in the open hopping alphabet
/// reproduce classical Littlewood–Richardson numbers for every partition
/// `lambda` in the `n x k` box and every pair of sector labels.
pub fn grassmannian_check(n: usize, k: u32) -> Result<(), Error> {
    if n as u32 * k > lr::ORACLE_BOX_CAP {
        return Err(Error::Unsupported(format!(
            "tableau oracle is capped at boxes of size {}, got {}",
            lr::ORACLE_BOX_CAP,
            n as u32 * k
        )));
    }
    let basis = LevelBasis::new(n, k);
    let labels = basis.labels();
    for mu in &labels {
        let m = mu.to_composition(n);
        for lam in lr::partitions_in_box(n, k) {
            let action = ncsym::apply_schur_finite(&lam, &m);
            for nu in &labels {
                let got = match action.coeff(&nu.to_composition(n)) {
                    Some(c) => {
                        if c.degree() > Some(0) {
                            return Err(Error::CheckFailed(format!(
                                "open alphabet produced a twist weight in \
                                 ({lam}) * ({mu}) -> ({nu})"
                            )));
                        }
                        c.coeff(0)
                    }
                    None => 0,
                };
                let want = lr::lr_coefficient(&lam, mu, nu) as i64;
                if got != want {
                    return Err(Error::CheckFailed(format!(
                        "open-alphabet product ({lam}) * ({mu}) -> ({nu}) gives \
                         {got}, tableau count gives {want}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Cross-validate the three computation routes on one sector:
/// plactic structure constants, rounded diagonalization numbers, and the
/// Schur expansion of lattice partition functions, plus symmetry of the
/// product in its two factors.
pub fn check_fusion_three_way(n: usize, k: u32) -> Result<(), Error> {
    let basis = LevelBasis::new(n, k);
    let labels = basis.labels();
    let dim = labels.len();
    let table = FusionTable::build(n, k)?;

    for li in 0..dim {
        for mi in li + 1..dim {
            let reversed = fuse(&labels[mi], &labels[li], n, k)?;
            for (ni, nu) in labels.iter().enumerate() {
                let direct = table.coefficient(li, mi, ni);
                let rev = reversed.get(nu).copied().unwrap_or(0);
                if direct != rev {
                    return Err(Error::CheckFailed(format!(
                        "product of ({}) and ({}) is not symmetric at ({})",
                        labels[li], labels[mi], nu
                    )));
                }
            }
        }
    }

    smatrix::check_smatrix(n, k).map_err(Error::CheckFailed)?;
    let s = smatrix::smatrix(n, k);
    assert_eq!(s.labels(), labels.as_slice(), "label orders must agree");
    for li in 0..dim {
        for mi in li..dim {
            for ni in 0..dim {
                let plactic = table.coefficient(li, mi, ni);
                let rounded = s.fusion_coefficient(li, mi, ni).map_err(Error::CheckFailed)?;
                if plactic != rounded {
                    return Err(Error::CheckFailed(format!(
                        "plactic and diagonalization routes disagree on \
                         ({}) * ({}) -> ({}): {plactic} vs {rounded}",
                        labels[li], labels[mi], labels[ni]
                    )));
                }
            }
        }
    }

    let l = n - 1;
    let prod = q_product_matrix(&basis, l);
    let schurs: Vec<MPoly> = labels
        .iter()
        .map(|lab| csym::commutative_schur(&lab.strip_full_columns(n), l))
        .collect();
    for (mi, mu_m) in basis.states().iter().enumerate() {
        let mut v = StateVec::<MPoly>::from_term(mu_m.clone(), MPoly::one(l));
        for i in (0..l).rev() {
            v = v.then(|t| q_row(t, i, l, None));
        }
        for (ni, nu_m) in basis.states().iter().enumerate() {
            let mut by_matrix = MPoly::zero(l);
            for (d, op) in &prod {
                let c = op.entry(ni, mi).eval(1);
                if c != 0 {
                    let exps: Vec<i32> = d.iter().map(|&x| x as i32).collect();
                    by_matrix.add_term(&exps, c);
                }
            }
            let by_rows = v.coeff(nu_m).cloned().unwrap_or_else(|| MPoly::zero(l));
            if by_matrix != by_rows {
                return Err(Error::CheckFailed(format!(
                    "partition function ({}) -> ({}) differs between routes",
                    labels[mi], labels[ni]
                )));
            }
            let mut expansion = MPoly::zero(l);
            for (li, s_u) in schurs.iter().enumerate() {
                let c = table.coefficient(li, mi, ni);
                if c > 0 {
                    expansion = &expansion + &s_u.mul_monomial(&vec![0; l], c as i64);
                }
            }
            if by_matrix != expansion {
                return Err(Error::CheckFailed(format!(
                    "partition function ({}) -> ({}) does not match its \
                     Schur expansion",
                    labels[mi], labels[ni]
                )));
            }
        }
    }
    Ok(())
}
