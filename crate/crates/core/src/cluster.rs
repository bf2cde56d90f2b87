//! The cluster complex on almost-positive roots: rotation maps, compatibility
//! degrees, face enumeration and the `F` polynomial.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{format_rational, int, BiPoly};
use crate::error::{CoxError, Result};
use crate::root_poset::{self, RootPoset};
use crate::root_system::RootSystem;

/// Face enumeration above this rank needs an explicit opt-in.
pub const DEFAULT_MAX_RANK: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlmostPositiveRoot {
    /// Index into the canonical positive roots.
    Positive(usize),
    /// `-alpha_i`
    NegativeSimple(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Precomputed data for the rotation maps of one crystallographic system.
#[derive(Clone, Debug)]
pub struct ClusterData {
    rank: usize,
    num_positive: usize,
    coxeter_number: u32,
    coords: Vec<Vec<i64>>,
    simple_indices: Vec<usize>,
    /// Product of the commuting simple reflections in `I+` (resp. `I-`), as
    /// permutations of the full root list.
    products: [Vec<usize>; 2],
    in_plus: Vec<bool>,
}

impl ClusterData {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        if !rs.datum.crystallographic {
            return Err(CoxError::NonCrystallographic(rs.label()));
        }
        let n = rs.rank();
        let total = rs.num_roots();
        let product = |plus: bool| -> Vec<usize> {
            let mut p: Vec<usize> = (0..total).collect();
            for i in (0..n).filter(|&i| rs.datum.bipartition[i] == plus) {
                let t = &rs.simple_reflection_tables[i];
                p = p.iter().map(|&r| t[r] as usize).collect();
            }
            p
        };
        Ok(Self {
            rank: n,
            num_positive: rs.num_positive(),
            coxeter_number: rs.coxeter_number,
            coords: rs
                .positive_roots
                .iter()
                .map(|r| r.int_coords().expect("integral roots"))
                .collect(),
            simple_indices: (0..n).map(|i| rs.simple_index(i)).collect(),
            products: [product(true), product(false)],
            in_plus: rs.datum.bipartition.clone(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.rank + self.num_positive
    }

    /// Vertex order: negative simples first, then positive roots.
    pub fn vertex(&self, idx: usize) -> AlmostPositiveRoot {
        if idx < self.rank {
            AlmostPositiveRoot::NegativeSimple(idx)
        } else {
            AlmostPositiveRoot::Positive(idx - self.rank)
        }
    }

    pub fn vertex_index(&self, v: AlmostPositiveRoot) -> usize {
        match v {
            AlmostPositiveRoot::NegativeSimple(i) => i,
            AlmostPositiveRoot::Positive(k) => self.rank + k,
        }
    }

    fn in_class(&self, i: usize, sign: Sign) -> bool {
        self.in_plus[i] == (sign == Sign::Plus)
    }

    /// `tau_sign`: fixes `-alpha_i` for `i` outside `I_sign`, otherwise applies
    /// the product of the simple reflections in `I_sign`.
    pub fn tau(&self, sign: Sign, v: AlmostPositiveRoot) -> Result<AlmostPositiveRoot> {
        let table = &self.products[(sign == Sign::Minus) as usize];
        let root = match v {
            AlmostPositiveRoot::NegativeSimple(i) if !self.in_class(i, sign) => return Ok(v),
            AlmostPositiveRoot::NegativeSimple(i) => self.simple_indices[i] + self.num_positive,
            AlmostPositiveRoot::Positive(k) => k,
        };
        let image = table[root];
        if image < self.num_positive {
            return Ok(AlmostPositiveRoot::Positive(image));
        }
        let neg = image - self.num_positive;
        match self.simple_indices.iter().position(|&s| s == neg) {
            Some(i) => Ok(AlmostPositiveRoot::NegativeSimple(i)),
            None => Err(CoxError::InvariantBroken(format!(
                "tau maps {v:?} to a negative non-simple root"
            ))),
        }
    }

    /// Compatibility degree `(u || v)`, by rotating the pair until `u` is a
    /// negative simple root `-alpha_i` and reading the positive part of the
    /// `alpha_i` coefficient of `v`.
    pub fn compatibility_degree(&self, u: AlmostPositiveRoot, v: AlmostPositiveRoot) -> Result<u32> {
        let bound = 2 * (self.coxeter_number as usize + 2);
        let (mut u, mut v) = (u, v);
        let mut sign = Sign::Plus;
        for _ in 0..=bound {
            if let AlmostPositiveRoot::NegativeSimple(i) = u {
                return Ok(match v {
                    AlmostPositiveRoot::NegativeSimple(_) => 0,
                    AlmostPositiveRoot::Positive(k) => self.coords[k][i].max(0) as u32,
                });
            }
            u = self.tau(sign, u)?;
            v = self.tau(sign, v)?;
            sign = sign.flip();
        }
        Err(CoxError::NonTermination(bound))
    }

    pub fn compatibility_graph(&self, with_degrees: bool) -> Result<CompatibilityGraph> {
        let nv = self.num_vertices();
        let mut degrees = vec![vec![0u32; nv]; nv];
        for (a, row) in degrees.iter_mut().enumerate() {
            for (b, d) in row.iter_mut().enumerate() {
                if a != b {
                    *d = self.compatibility_degree(self.vertex(a), self.vertex(b))?;
                }
            }
        }
        let adjacency = (0..nv)
            .map(|a| {
                (0..nv)
                    .filter(|&b| a != b && degrees[a][b] == 0 && degrees[b][a] == 0)
                    .fold(0u128, |acc, b| acc | 1 << b)
            })
            .collect();
        Ok(CompatibilityGraph {
            num_negative: self.rank,
            adjacency,
            degree_table: with_degrees.then_some(degrees),
        })
    }
}

#[derive(Clone, Debug)]
pub struct CompatibilityGraph {
    num_negative: usize,
    /// Bit `b` of `adjacency[a]` is set iff `a` and `b` are compatible.
    pub adjacency: Vec<u128>,
    pub degree_table: Option<Vec<Vec<u32>>>,
}

impl CompatibilityGraph {
    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.adjacency[a] >> b & 1 == 1
    }

    /// Counts every clique (the empty one included) by number of positive and
    /// negative-simple vertices, fanned out by first vertex.
    pub fn faces(&self) -> FaceCount {
        let nv = self.num_vertices();
        let negative_mask: u128 = (1u128 << self.num_negative) - 1;
        let all: u128 = if nv == 128 { u128::MAX } else { (1u128 << nv) - 1 };
        let branches: Vec<FaceCount> = (0..nv)
            .into_par_iter()
            .map(|v| {
                let mut local = FaceCount::default();
                let later = if v == 127 { 0 } else { all & !((1u128 << (v + 1)) - 1) };
                self.dfs(
                    later & self.adjacency[v],
                    1u128 << v,
                    self.adjacency[v],
                    negative_mask,
                    &mut local,
                );
                local
            })
            .collect();
        let mut total = FaceCount::default();
        total.record(0, 0, all == 0);
        for b in &branches {
            total.merge(b);
        }
        total
    }

    fn dfs(&self, candidates: u128, members: u128, common: u128, negative: u128, out: &mut FaceCount) {
        let l = (members & negative).count_ones();
        let k = members.count_ones() - l;
        out.record(k, l, common == 0);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let adj = self.adjacency[v as usize];
            self.dfs(rest & adj, members | 1u128 << v, common & adj, negative, out);
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceCount {
    /// `(#positive, #negative simple) -> count`
    pub by_kind: BTreeMap<(u32, u32), u64>,
    /// Maximal faces by dimension (size).
    pub maximal_by_size: BTreeMap<u32, u64>,
}

impl FaceCount {
    fn record(&mut self, k: u32, l: u32, maximal: bool) {
        *self.by_kind.entry((k, l)).or_default() += 1;
        if maximal {
            *self.maximal_by_size.entry(k + l).or_default() += 1;
        }
    }

    fn merge(&mut self, other: &FaceCount) {
        for (&key, &c) in &other.by_kind {
            *self.by_kind.entry(key).or_default() += c;
        }
        for (&key, &c) in &other.maximal_by_size {
            *self.maximal_by_size.entry(key).or_default() += c;
        }
    }

    pub fn f_polynomial(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (&(k, l), &c) in &self.by_kind {
            p.add_term(k, l, int(c as i64));
        }
        p
    }

    pub fn total(&self) -> u64 {
        self.by_kind.values().sum()
    }

    pub fn facets(&self) -> u64 {
        self.maximal_by_size.values().sum()
    }
}

fn check_rank(rs: &RootSystem, allow_large: bool) -> Result<()> {
    let cap = if allow_large { root_poset::MAX_RANK } else { DEFAULT_MAX_RANK };
    if rs.rank() > cap {
        return Err(CoxError::RankTooLarge {
            label: rs.label(),
            rank: rs.rank(),
            cap,
        });
    }
    Ok(())
}

/// Faces of the cluster complex of `rs`.
pub fn cluster_faces(rs: &RootSystem, allow_large: bool) -> Result<FaceCount> {
    check_rank(rs, allow_large)?;
    let data = ClusterData::new(rs)?;
    Ok(data.compatibility_graph(false)?.faces())
}

pub fn f_polynomial(rs: &RootSystem, allow_large: bool) -> Result<BiPoly> {
    Ok(cluster_faces(rs, allow_large)?.f_polynomial())
}

#[derive(Clone, Debug, Serialize)]
pub struct HfReport {
    pub type_label: String,
    pub h: crate::arith::bipoly::BiPolyJson,
    pub f: crate::arith::bipoly::BiPolyJson,
    pub rhs: crate::arith::bipoly::BiPolyJson,
    pub h_display: String,
    pub f_display: String,
}

/// Checks `H(x,y) = (1-x)^n F(x/(1-x), xy/(1-x))` exactly.
pub fn verify_hf_conjecture(rs: &RootSystem, allow_large: bool) -> Result<HfReport> {
    let poset = RootPoset::new(rs)?;
    let h = root_poset::h_polynomial(&poset.enumerate_antichains());
    let f = f_polynomial(rs, allow_large)?;
    let rhs = f.substitute(rs.rank() as u32)?;
    if rhs != h {
        let diff = &h - &rhs;
        let witness = diff
            .terms()
            .map(|(k, l, c)| format!("[{k},{l},\"{}\"]", format_rational(c)))
            .collect::<Vec<_>>()
            .join(",");
        return Err(CoxError::ConjectureFails {
            witness: format!("{} H - rhs = [{witness}]", rs.label()),
        });
    }
    Ok(HfReport {
        type_label: rs.label(),
        h_display: h.to_string(),
        f_display: f.to_string(),
        h: h.to_json(),
        f: f.to_json(),
        rhs: rhs.to_json(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use AlmostPositiveRoot::*;

    fn data(label: &str) -> (RootSystem, ClusterData) {
        let rs = RootSystem::build(label).unwrap();
        let d = ClusterData::new(&rs).unwrap();
        (rs, d)
    }

    #[test]
    fn tau_examples() {
        let (_, d) = data("A2");
        assert_eq!(d.tau(Sign::Plus, NegativeSimple(0)).unwrap(), Positive(0));
        assert_eq!(d.tau(Sign::Plus, NegativeSimple(1)).unwrap(), NegativeSimple(1));
    }

    #[test]
    fn tau_orbits_a2() {
        let (rs, d) = data("A2");
        let period = rs.coxeter_number as usize + 2;
        let mut covered = vec![false; d.num_vertices()];
        for start in 0..d.num_vertices() {
            let v0 = d.vertex(start);
            let mut v = v0;
            let mut len = 0;
            loop {
                v = d.tau(Sign::Minus, d.tau(Sign::Plus, v).unwrap()).unwrap();
                covered[d.vertex_index(v)] = true;
                len += 1;
                if v == v0 {
                    break;
                }
            }
            assert_eq!(period % len, 0);
        }
        assert!(covered.iter().all(|&c| c));
    }

    #[test]
    fn taus_are_involutions() {
        for label in ["A4", "B3", "C3", "D4", "G2", "F4"] {
            let (_, d) = data(label);
            for idx in 0..d.num_vertices() {
                let v = d.vertex(idx);
                for s in [Sign::Plus, Sign::Minus] {
                    assert_eq!(d.tau(s, d.tau(s, v).unwrap()).unwrap(), v, "{label}");
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        let (_, d) = data("A2");
        // alpha1 + alpha2 is positive root 2
        assert_eq!(d.compatibility_degree(NegativeSimple(0), Positive(2)).unwrap(), 1);
        assert_eq!(d.compatibility_degree(NegativeSimple(0), Positive(1)).unwrap(), 0);
        assert_eq!(d.compatibility_degree(Positive(1), NegativeSimple(0)).unwrap(), 0);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn compatibility_is_symmetric() {
        for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let (_, d) = data(label);
            let g = d.compatibility_graph(true).unwrap();
            let deg = g.degree_table.as_ref().unwrap();
            for a in 0..g.num_vertices() {
                for b in 0..g.num_vertices() {
                    if a != b {
                        assert_eq!(deg[a][b] == 0, deg[b][a] == 0, "{label} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn f_polynomial_examples() {
        let a1 = RootSystem::build("A1").unwrap();
        assert_eq!(f_polynomial(&a1, false).unwrap(), BiPoly::from_ints(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
        let a2 = RootSystem::build("A2").unwrap();
        assert_eq!(
            f_polynomial(&a2, false).unwrap(),
            BiPoly::from_ints(&[(0, 0, 1), (1, 0, 3), (0, 1, 2), (2, 0, 2), (1, 1, 2), (0, 2, 1)])
        );
        let a3 = RootSystem::build("A3").unwrap();
        let faces = cluster_faces(&a3, false).unwrap();
        assert_eq!(faces.maximal_by_size.get(&3), Some(&14));
    }

    #[test]
    fn complex_is_pure_with_catalan_facets() {
        for label in ["A4", "B3", "C4", "D4", "G2", "F4", "E6"] {
            let rs = RootSystem::build(label).unwrap();
            let faces = cluster_faces(&rs, false).unwrap();
            let n = rs.rank() as u32;
            assert_eq!(faces.maximal_by_size.keys().copied().collect::<Vec<_>>(), vec![n], "{label}");
            assert_eq!(int(faces.facets() as i64), rs.catalan_number(), "{label}");
            let f = faces.f_polynomial();
            for l in 0..=n {
                assert_eq!(f.coeff(0, l), int(binomial(n as u64, l as u64) as i64));
            }
        }
    }

    #[test]
    fn large_rank_needs_opt_in() {
        let e7 = RootSystem::build("E7").unwrap();
        assert!(matches!(f_polynomial(&e7, false), Err(CoxError::RankTooLarge { .. })));
    }

    #[test]
    fn hf_small_types() {
        let a2 = RootSystem::build("A2").unwrap();
        let r = verify_hf_conjecture(&a2, false).unwrap();
        assert_eq!(r.h_display, "1 + x + 2*xy + x^2y^2");
        for label in ["A1", "B3", "D4", "G2", "F4"] {
            verify_hf_conjecture(&RootSystem::build(label).unwrap(), false).unwrap();
        }
    }
}
