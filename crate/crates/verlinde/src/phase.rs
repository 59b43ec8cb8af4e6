//! Creation, annihilation and hopping operators on the occupation basis, the
//! relations they satisfy, and the directed graph of hopping moves.
//!
//! Site indices are 1-based (`1..=n`, matching the labels `m_1..m_n`);
//! hopping generator indices are 0-based (`0..n`), with generator `0` the
//! cyclic one that wraps from the last site to the first and picks up one
//! power of the twist variable `z`.

use serde::Serialize;

use crate::fock::StateVec;
use crate::weights::{Composition, LevelBasis};
use crate::zpoly::ZPoly;

/// Annihilation at `site` (1-based): removes a particle or kills the state.
pub fn phi(site: usize, m: &Composition) -> StateVec {
    let i = site - 1;
    if m.get(i) == 0 {
        return StateVec::zero(m.rank());
    }
    let mut parts = m.0.clone();
    parts[i] -= 1;
    StateVec::basis_state(Composition::new(parts))
}

/// Creation at `site` (1-based): adds a particle.
pub fn phi_star(site: usize, m: &Composition) -> StateVec {
    let i = site - 1;
    let mut parts = m.0.clone();
    parts[i] += 1;
    StateVec::basis_state(Composition::new(parts))
}

/// Number operator at `site` (1-based): scales by the occupation number.
pub fn number(site: usize, m: &Composition) -> StateVec {
    StateVec::from_term(m.clone(), ZPoly::constant(m.get(site - 1) as i64))
}

/// Projector onto states with an empty `site` (1-based).
pub fn vacancy(site: usize, m: &Composition) -> StateVec {
    if m.get(site - 1) == 0 {
        StateVec::basis_state(m.clone())
    } else {
        StateVec::zero(m.rank())
    }
}

/// Hopping generator `a_j` for `j = 0, ..., n-1`.
///
/// For `j >= 1` it moves one particle from site `j` to site `j+1`; generator
/// `0` moves one particle from site `n` to site `1` and multiplies by `z`.
/// States without a particle at the source site are killed.
pub fn gen_a(j: usize, m: &Composition) -> StateVec {
    let n = m.rank();
    assert!(j < n, "generator index out of range");
    let (src, dst, coeff) = if j == 0 {
        (n - 1, 0, ZPoly::z())
    } else {
        (j - 1, j, ZPoly::one())
    };
    if m.get(src) == 0 {
        return StateVec::zero(n);
    }
    let mut parts = m.0.clone();
    parts[src] -= 1;
    parts[dst] += 1;
    StateVec::from_term(Composition::new(parts), coeff)
}

fn for_all_states(
    n: usize,
    kmax: u32,
    mut check: impl FnMut(&Composition) -> Result<(), String>,
) -> Result<(), String> {
    for k in 0..=kmax {
        for m in LevelBasis::new(n, k).states() {
            check(m)?;
        }
    }
    Ok(())
}

fn expect_eq(lhs: &StateVec, rhs: &StateVec, what: &str, m: &Composition) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what} fails on {m}: lhs = {lhs}, rhs = {rhs}"))
    }
}

/// Verify the defining relations of the creation/annihilation/number algebra
/// on every state of level at most `kmax`:
///
/// * `phi_i phi*_i = 1` and `phi*_i phi_i = 1 - pi_i` with `pi_i` the
///   projector onto an empty site `i`;
/// * `N_i pi_i = pi_i N_i = 0`;
/// * `N_i phi_i = phi_i (N_i - 1)` and `N_i phi*_i = phi*_i (N_i + 1)`;
/// * operators at distinct sites commute.
pub fn check_phase_relations(n: usize, kmax: u32) -> Result<(), String> {
    for_all_states(n, kmax, |m| {
        let v = StateVec::basis_state(m.clone());
        for i in 1..=n {
            // phi_i phi*_i = 1
            let lhs = v.then(|s| phi_star(i, s)).then(|s| phi(i, s));
            expect_eq(&lhs, &v, &format!("phi_{i} phi*_{i} = 1"), m)?;

            // phi*_i phi_i = 1 - pi_i
            let lhs = v.then(|s| phi(i, s)).then(|s| phi_star(i, s));
            let rhs = &v - &v.then(|s| vacancy(i, s));
            expect_eq(&lhs, &rhs, &format!("phi*_{i} phi_{i} = 1 - pi_{i}"), m)?;

            // N_i pi_i = pi_i N_i = 0
            let a = v.then(|s| vacancy(i, s)).then(|s| number(i, s));
            let b = v.then(|s| number(i, s)).then(|s| vacancy(i, s));
            expect_eq(&a, &StateVec::zero(n), &format!("N_{i} pi_{i} = 0"), m)?;
            expect_eq(&b, &StateVec::zero(n), &format!("pi_{i} N_{i} = 0"), m)?;

            // N_i phi_i = phi_i (N_i - 1)
            let lhs = v.then(|s| phi(i, s)).then(|s| number(i, s));
            let rhs = &v.then(|s| number(i, s)).then(|s| phi(i, s)) - &v.then(|s| phi(i, s));
            expect_eq(&lhs, &rhs, &format!("N_{i} phi_{i} = phi_{i} (N_{i} - 1)"), m)?;

            // N_i phi*_i = phi*_i (N_i + 1)
            let lhs = v.then(|s| phi_star(i, s)).then(|s| number(i, s));
            let rhs =
                &v.then(|s| number(i, s)).then(|s| phi_star(i, s)) + &v.then(|s| phi_star(i, s));
            expect_eq(&lhs, &rhs, &format!("N_{i} phi*_{i} = phi*_{i} (N_{i} + 1)"), m)?;

            for j in 1..=n {
                if i == j {
                    continue;
                }
                // Cross-site commutativity for every pair of operator kinds.
                let ops: [(&str, fn(usize, &Composition) -> StateVec); 3] =
                    [("phi", phi), ("phi*", phi_star), ("N", number)];
                for (na, fa) in ops {
                    for (nb, fb) in ops {
                        let lhs = v.then(|s| fb(j, s)).then(|s| fa(i, s));
                        let rhs = v.then(|s| fa(i, s)).then(|s| fb(j, s));
                        expect_eq(&lhs, &rhs, &format!("[{na}_{i}, {nb}_{j}] = 0"), m)?;
                    }
                }
            }
        }
        Ok(())
    })
}

/// Verify that each hopping generator equals its creation/annihilation
/// composite, in both orders (the factors act on distinct sites, so they
/// commute): `a_j = phi*_{j+1} phi_j = phi_j phi*_{j+1}` for `j >= 1`, and
/// `a_0 = z phi*_1 phi_n = z phi_n phi*_1`.
pub fn check_hop_is_phase_composite(n: usize, kmax: u32) -> Result<(), String> {
    for_all_states(n, kmax, |m| {
        let v = StateVec::basis_state(m.clone());
        for j in 0..n {
            let (src, dst) = if j == 0 { (n, 1) } else { (j, j + 1) };
            let direct = v.then(|s| gen_a(j, s));
            let mut composite = v.then(|s| phi(src, s)).then(|s| phi_star(dst, s));
            let mut swapped = v.then(|s| phi_star(dst, s)).then(|s| phi(src, s));
            if j == 0 {
                composite = composite.scaled(&ZPoly::z());
                swapped = swapped.scaled(&ZPoly::z());
            }
            expect_eq(&direct, &composite, &format!("a_{j} = phi*_{dst} phi_{src}"), m)?;
            expect_eq(&direct, &swapped, &format!("a_{j} = phi_{src} phi*_{dst}"), m)?;
        }
        Ok(())
    })
}

/// Verify the cyclic plactic relations for a family of hopping generators on
/// every state of level at most `kmax` (indices mod `n`, which must be at
/// least 3 so that no pair of generators is adjacent on both sides):
///
/// * `a_i a_j = a_j a_i` whenever `i - j` is not `±1 mod n`;
/// * `a_{i+1} a_i a_i = a_i a_{i+1} a_i`;
/// * `a_{i+1} a_i a_{i+1} = a_{i+1} a_{i+1} a_i`.
pub fn check_plactic_relations_for(
    gen: &dyn Fn(usize, &Composition) -> StateVec,
    n: usize,
    kmax: u32,
) -> Result<(), String> {
    assert!(n >= 3, "cyclic plactic relations need at least three sites");
    for_all_states(n, kmax, |m| {
        let v = StateVec::basis_state(m.clone());
        let ap = |j: usize| move |s: &Composition| gen(j, s);
        for i in 0..n {
            for j in 0..n {
                let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                if i == j || adjacent {
                    continue;
                }
                let lhs = v.then(ap(j)).then(ap(i));
                let rhs = v.then(ap(i)).then(ap(j));
                expect_eq(&lhs, &rhs, &format!("a_{i} a_{j} = a_{j} a_{i}"), m)?;
            }
            let i1 = (i + 1) % n;
            // Products are read right to left: the rightmost factor acts first.
            let lhs = v.then(ap(i)).then(ap(i)).then(ap(i1));
            let rhs = v.then(ap(i)).then(ap(i1)).then(ap(i));
            expect_eq(&lhs, &rhs, &format!("a_{i1} a_{i} a_{i} = a_{i} a_{i1} a_{i}"), m)?;

            let lhs = v.then(ap(i1)).then(ap(i)).then(ap(i1));
            let rhs = v.then(ap(i)).then(ap(i1)).then(ap(i1));
            expect_eq(&lhs, &rhs, &format!("a_{i1} a_{i} a_{i1} = a_{i1} a_{i1} a_{i}"), m)?;
        }
        Ok(())
    })
}

/// [`check_plactic_relations_for`] applied to the standard generators.
pub fn check_plactic_relations(n: usize, kmax: u32) -> Result<(), String> {
    check_plactic_relations_for(&gen_a, n, kmax)
}

/// A directed edge of the hopping graph: generator `generator` maps vertex
/// `from` to vertex `to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub generator: usize,
}

/// The coloured directed graph of all hopping moves on the level-`k` sector:
/// one vertex per basis state, one edge per generator that acts without
/// killing.  Vertices are in canonical basis order (vacuum first).
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub n: usize,
    pub k: u32,
    pub vertices: Vec<Composition>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn new(n: usize, k: u32) -> Self {
        let basis = LevelBasis::new(n, k);
        let mut edges = Vec::new();
        for (from, m) in basis.states().iter().enumerate() {
            for j in 0..n {
                let image = gen_a(j, m);
                for (m2, _) in image.iter() {
                    let to = basis.index_of(m2).expect("hop stays in the sector");
                    edges.push(CrystalEdge { from, to, generator: j });
                }
            }
        }
        edges.sort_by_key(|e| (e.from, e.generator));
        CrystalGraph { n, k, vertices: basis.states().to_vec(), edges }
    }

    /// Graphviz DOT rendering; vertices are labelled by their partitions.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph crystal {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=box];\n");
        for (i, m) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i, m.to_partition()));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  v{} -> v{} [label=\"a{}\"{}];\n",
                e.from,
                e.to,
                e.generator,
                if e.generator == 0 { ", style=dashed" } else { "" }
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rank": self.n,
            "level": self.k,
            "vertices": self.vertices.iter().enumerate().map(|(i, m)| {
                serde_json::json!({
                    "index": i,
                    "occupation": m.0,
                    "partition": m.to_partition().to_string(),
                })
            }).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn explicit_actions() {
        let s = m(&[1, 0, 2]);
        assert_eq!(phi(1, &s), StateVec::basis_state(m(&[0, 0, 2])));
        assert!(phi(2, &s).is_zero());
        assert_eq!(phi_star(2, &s), StateVec::basis_state(m(&[1, 1, 2])));
        assert_eq!(number(3, &s), StateVec::from_term(s.clone(), ZPoly::constant(2)));
        assert!(number(2, &s).is_zero());
        assert_eq!(vacancy(2, &s), StateVec::basis_state(s.clone()));
        assert!(vacancy(1, &s).is_zero());
    }

    #[test]
    fn hop_moves_one_particle() {
        assert_eq!(gen_a(1, &m(&[1, 0, 2])), StateVec::basis_state(m(&[0, 1, 2])));
        assert!(gen_a(2, &m(&[1, 0, 2])).is_zero());
        // The cyclic generator wraps and carries z.
        assert_eq!(gen_a(0, &m(&[0, 0, 1])), StateVec::from_term(m(&[1, 0, 0]), ZPoly::z()));
        assert!(gen_a(0, &m(&[1, 1, 0])).is_zero());
    }

    #[test]
    fn phase_relations_hold() {
        for n in 2..=4 {
            check_phase_relations(n, 3).unwrap();
        }
    }

    #[test]
    fn hops_match_phase_composites() {
        for n in 2..=4 {
            check_hop_is_phase_composite(n, 3).unwrap();
        }
    }

    #[test]
    fn plactic_relations_hold() {
        for n in 3..=4 {
            check_plactic_relations(n, 3).unwrap();
        }
    }

    #[test]
    fn corrupted_generators_fail_plactic_check() {
        // Hop across two sites instead of one: the relations must break, so
        // the checker is demonstrably able to fail.
        let bad = |j: usize, m: &Composition| -> StateVec {
            let n = m.rank();
            let (src, dst) = if j == 0 { (n - 1, 1 % n) } else { (j - 1, (j + 1) % n) };
            if m.get(src) == 0 {
                return StateVec::zero(n);
            }
            let mut parts = m.0.clone();
            parts[src] -= 1;
            parts[dst] += 1;
            StateVec::basis_state(Composition::new(parts))
        };
        assert!(check_plactic_relations_for(&bad, 4, 2).is_err());
    }

    #[test]
    fn triangle_graph_at_level_one() {
        let g = CrystalGraph::new(3, 1);
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.edges.len(), 3);
        // Each vertex has exactly one outgoing edge and the edges close a
        // directed cycle through all three vertices.
        let mut seen = vec![false; 3];
        let mut cur = 0;
        for _ in 0..3 {
            let e = g.edges.iter().find(|e| e.from == cur).unwrap();
            seen[cur] = true;
            cur = e.to;
        }
        assert_eq!(cur, 0);
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn graph_size_rank4_level2() {
        let g = CrystalGraph::new(4, 2);
        assert_eq!(g.vertices.len(), 10);
        assert_eq!(g.edges.len(), 16);
        // Vacuum sits at index 0 and its only outgoing edge is the cyclic
        // generator.
        let out0: Vec<&CrystalEdge> = g.edges.iter().filter(|e| e.from == 0).collect();
        assert_eq!(out0.len(), 1);
        assert_eq!(out0[0].generator, 0);
    }

    #[test]
    fn dot_and_json_are_well_formed() {
        let g = CrystalGraph::new(3, 1);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("v0 [label=\"1,1,1\"];"));
        assert!(dot.contains("label=\"a0\", style=dashed"));
        let json = g.to_json();
        assert_eq!(json["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(json["edges"].as_array().unwrap().len(), 3);
        assert_eq!(json["level"], 1);
    }
}
