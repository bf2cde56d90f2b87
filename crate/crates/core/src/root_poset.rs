//! The root poset on positive roots, antichain enumeration by bitmask DFS, and
//! the `N`, `H` and `P` polynomials.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{int, BiPoly, Rational};
use crate::error::{CoxError, Result};
use crate::root_system::RootSystem;

/// Largest rank the antichain enumeration accepts.
pub const MAX_RANK: usize = 8;

#[derive(Clone, Debug)]
pub struct RootPoset {
    label: String,
    rank: usize,
    num_roots: usize,
    /// `comparable[i]` has bit `j` set iff roots `i` and `j` are comparable
    /// (including `i == j`).
    comparable: Vec<u128>,
    simple_mask: u128,
    /// Dynkin edges covered by each root's support.
    edge_cover: Vec<u32>,
    supports: Vec<u32>,
    num_edges: usize,
    dynkin_edges: Vec<(usize, usize)>,
    coords: Vec<Vec<i64>>,
}

impl RootPoset {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        if !rs.datum.crystallographic {
            return Err(CoxError::NonCrystallographic(rs.label()));
        }
        if rs.rank() > MAX_RANK || rs.num_positive() > 128 {
            return Err(CoxError::RankTooLarge {
                label: rs.label(),
                rank: rs.rank(),
                cap: MAX_RANK,
            });
        }
        let coords: Vec<Vec<i64>> = rs
            .positive_roots
            .iter()
            .map(|r| r.int_coords().expect("crystallographic roots are integral"))
            .collect();
        let npos = coords.len();
        let leq = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
        let comparable = (0..npos)
            .map(|i| {
                (0..npos)
                    .filter(|&j| leq(&coords[i], &coords[j]) || leq(&coords[j], &coords[i]))
                    .fold(0u128, |acc, j| acc | 1 << j)
            })
            .collect();
        let simple_mask = (0..rs.rank()).fold(0u128, |acc, i| acc | 1 << rs.simple_index(i));
        let supports: Vec<u32> = (0..npos).map(|k| rs.support(k)).collect();
        let edge_cover = supports.iter().map(|&s| rs.datum.edges_within(s)).collect();
        Ok(Self {
            label: rs.label(),
            rank: rs.rank(),
            num_roots: npos,
            comparable,
            simple_mask,
            edge_cover,
            supports,
            num_edges: rs.datum.dynkin_edges.len(),
            dynkin_edges: rs.datum.dynkin_edges.clone(),
            coords,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    pub fn all_roots(&self) -> u128 {
        if self.num_roots == 128 {
            u128::MAX
        } else {
            (1u128 << self.num_roots) - 1
        }
    }

    pub fn full_edge_mask(&self) -> u32 {
        (1u32 << self.num_edges) - 1
    }

    pub fn simple_mask(&self) -> u128 {
        self.simple_mask
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.coords[i].iter().zip(&self.coords[j]).all(|(a, b)| a <= b)
    }

    pub fn is_antichain(&self, members: u128) -> bool {
        bits(members).all(|i| self.comparable[i] & members == 1u128 << i)
    }

    /// Edges covered by an antichain (its type).
    pub fn antichain_type(&self, members: u128) -> u32 {
        bits(members).fold(0, |acc, i| acc | self.edge_cover[i])
    }

    /// Roots whose support lies inside the node set `nodes`.
    pub fn roots_supported_in(&self, nodes: u32) -> u128 {
        (0..self.num_roots)
            .filter(|&k| self.supports[k] & !nodes == 0)
            .fold(0, |acc, k| acc | 1 << k)
    }

    /// Visits every antichain drawn from `allowed`, the empty one included,
    /// exactly once.
    pub fn for_each_antichain<F: FnMut(u128, u32)>(&self, allowed: u128, mut f: F) {
        self.dfs(allowed, 0, 0, &mut f);
    }

    fn dfs<F: FnMut(u128, u32)>(&self, candidates: u128, members: u128, edges: u32, f: &mut F) {
        f(members, edges);
        let mut rest = candidates;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only roots after i, so each antichain is built in increasing order
            self.dfs(
                rest & !self.comparable[i],
                members | 1 << i,
                edges | self.edge_cover[i],
                f,
            );
        }
    }

    /// Full tally over all antichains, fanned out by first chosen root.
    pub fn enumerate_antichains(&self) -> AntichainTally {
        let all = self.all_roots();
        let mut tally = AntichainTally::default();
        tally.record(0, 0, 0);
        let branches: Vec<AntichainTally> = (0..self.num_roots)
            .into_par_iter()
            .map(|i| {
                let mut local = AntichainTally::default();
                let above = if i == 127 { 0 } else { all & !((1u128 << (i + 1)) - 1) };
                self.dfs(
                    above & !self.comparable[i],
                    1 << i,
                    self.edge_cover[i],
                    &mut |members, edges| {
                        local.record(
                            members.count_ones(),
                            (members & self.simple_mask).count_ones(),
                            edges,
                        )
                    },
                );
                local
            })
            .collect();
        for b in branches {
            tally.merge(&b);
        }
        tally
    }

    /// Antichain counts by cardinality inside `allowed`.
    pub fn count_by_cardinality(&self, allowed: u128) -> Vec<u64> {
        let mut counts = vec![0u64; self.rank + 1];
        self.for_each_antichain(allowed, |members, _| {
            counts[members.count_ones() as usize] += 1;
        });
        counts
    }

    pub fn describe(&self, members: u128) -> Vec<Vec<i64>> {
        bits(members).map(|i| self.coords[i].clone()).collect()
    }

    fn find_antichain<P: Fn(u128, u32) -> bool>(&self, pred: P) -> Option<u128> {
        let mut found = None;
        self.for_each_antichain(self.all_roots(), |members, edges| {
            if found.is_none() && pred(members, edges) {
                found = Some(members);
            }
        });
        found
    }

    fn witness(&self, members: u128) -> String {
        serde_json::to_string(&self.describe(members)).unwrap()
    }
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Antichain counts keyed jointly by cardinality, number of simple roots and
/// covered-edge set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntichainTally {
    joint: BTreeMap<(u32, u32, u32), u64>,
}

impl AntichainTally {
    fn record(&mut self, k: u32, l: u32, edges: u32) {
        *self.joint.entry((k, l, edges)).or_default() += 1;
    }

    pub fn merge(&mut self, other: &AntichainTally) {
        for (&key, &c) in &other.joint {
            *self.joint.entry(key).or_default() += c;
        }
    }

    pub fn total(&self) -> u64 {
        self.joint.values().sum()
    }

    pub fn joint(&self) -> &BTreeMap<(u32, u32, u32), u64> {
        &self.joint
    }

    /// `(k, l) -> count`
    pub fn by_card_simple(&self) -> BTreeMap<(u32, u32), u64> {
        let mut out = BTreeMap::new();
        for (&(k, l, _), &c) in &self.joint {
            *out.entry((k, l)).or_default() += c;
        }
        out
    }

    /// `(k, covered edges) -> count`
    pub fn by_card_type(&self) -> BTreeMap<(u32, u32), u64> {
        let mut out = BTreeMap::new();
        for (&(k, _, e), &c) in &self.joint {
            *out.entry((k, e)).or_default() += c;
        }
        out
    }

    pub fn by_card(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (&(k, _, _), &c) in &self.joint {
            *out.entry(k).or_default() += c;
        }
        out
    }

    pub fn max_cardinality(&self) -> u32 {
        self.joint.keys().map(|&(k, _, _)| k).max().unwrap_or(0)
    }
}

/// `N(x) = sum_k n_k x^k`
pub fn narayana_polynomial(tally: &AntichainTally) -> BiPoly {
    let mut p = BiPoly::zero();
    for (k, c) in tally.by_card() {
        p.add_term(k, 0, int(c as i64));
    }
    p
}

/// `H(x, y) = sum h_{k,l} x^k y^l`
pub fn h_polynomial(tally: &AntichainTally) -> BiPoly {
    let mut p = BiPoly::zero();
    for ((k, l), c) in tally.by_card_simple() {
        p.add_term(k, l, int(c as i64));
    }
    p
}

/// Full-type antichains by cardinality.
pub fn p_polynomial_direct(tally: &AntichainTally, full_edges: u32) -> BiPoly {
    let mut p = BiPoly::zero();
    for ((k, e), c) in tally.by_card_type() {
        if e == full_edges {
            p.add_term(k, 0, int(c as i64));
        }
    }
    p
}

/// `P = sum_{E} (-1)^{|edges| - |E|} N_{Phi[E]}` over edge subsets, each
/// `N_{Phi[E]}` a product over connected components of parabolic Narayana
/// polynomials.
pub fn p_polynomial_mobius(poset: &RootPoset) -> BiPoly {
    let n = poset.rank;
    let m = poset.num_edges;
    let mut cache: HashMap<u32, BiPoly> = HashMap::new();
    let mut total = BiPoly::zero();
    for subset in 0u32..1 << m {
        // union-find over nodes using the kept edges
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (e, &(i, j)) in poset.dynkin_edges.iter().enumerate() {
            if subset >> e & 1 == 1 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
        let mut components: BTreeMap<usize, u32> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            *components.entry(r).or_default() |= 1 << v;
        }
        let mut term = BiPoly::one();
        for &nodes in components.values() {
            let nk = cache.entry(nodes).or_insert_with(|| {
                let counts = poset.count_by_cardinality(poset.roots_supported_in(nodes));
                BiPoly::from_x_coeffs(counts.into_iter().map(|c| int(c as i64)))
            });
            term = &term * nk;
        }
        if (m - subset.count_ones() as usize) % 2 == 1 {
            term = -&term;
        }
        total = &total + &term;
    }
    total
}

#[derive(Clone, Debug, Serialize)]
pub struct AntichainLemmaReport {
    pub type_label: String,
    pub rank: usize,
    pub total_antichains: u64,
    pub max_cardinality: u32,
    pub full_reflections: u64,
    pub p_n_minus_1: String,
    pub h_n_minus_1_0: String,
    pub clauses: Vec<String>,
}

/// Checks the antichain lemmas:
/// (a) the maximum cardinality is `n`, reached only by the simple roots;
/// (b) a cardinality `n-1` antichain is full-type iff it has no simple root;
/// (c) `N` is palindromic; (d) `P` is palindromic;
/// (e) `p_{n-1} = f_W`; (f) `h_{n-1,0} = f_W`.
pub fn check_antichain_lemmas(
    poset: &RootPoset,
    tally: &AntichainTally,
    full_reflections: u64,
) -> Result<AntichainLemmaReport> {
    let n = poset.rank as u32;
    let full = poset.full_edge_mask();
    let fail = |clause: &str, witness: String| CoxError::LemmaViolation {
        clause: format!("{} {clause}", poset.label),
        witness,
    };

    // (a)
    let max = tally.max_cardinality();
    let top: Vec<(&(u32, u32, u32), &u64)> = tally.joint.iter().filter(|(key, _)| key.0 == n).collect();
    if max != n || top.len() != 1 || *top[0].1 != 1 || top[0].0 .1 != n {
        let w = poset
            .find_antichain(|m, _| m.count_ones() == max && m != poset.simple_mask)
            .map(|m| poset.witness(m))
            .unwrap_or_else(|| format!("max cardinality {max}"));
        return Err(fail("(a) maximal antichain", w));
    }

    // (b)
    let bad_b = tally
        .joint
        .keys()
        .any(|&(k, l, e)| k + 1 == n && (e == full) != (l == 0));
    if bad_b {
        let w = poset
            .find_antichain(|m, e| {
                m.count_ones() + 1 == n && (e == full) != (m & poset.simple_mask == 0)
            })
            .unwrap();
        return Err(fail("(b) full type iff no simple root", poset.witness(w)));
    }

    // (c)
    let np = narayana_polynomial(tally);
    if np.reverse_x(n).as_ref() != Some(&np) {
        return Err(fail("(c) Narayana symmetry", np.to_string()));
    }

    // (d)
    let pp = p_polynomial_direct(tally, full);
    if pp.reverse_x(n).as_ref() != Some(&pp) {
        return Err(fail("(d) P symmetry", pp.to_string()));
    }

    let f = int(full_reflections as i64);
    // (e)
    let p_top = pp.coeff(n - 1, 0);
    if p_top != f {
        return Err(fail(
            "(e) p_{n-1} = f_W",
            format!("p_(n-1) = {p_top}, f_W = {full_reflections}"),
        ));
    }

    // (f)
    let h = h_polynomial(tally);
    let h_top = h.coeff(n - 1, 0);
    if h_top != f {
        return Err(fail(
            "(f) h_{n-1,0} = f_W",
            format!("h_(n-1,0) = {h_top}, f_W = {full_reflections}"),
        ));
    }

    Ok(AntichainLemmaReport {
        type_label: poset.label.clone(),
        rank: poset.rank,
        total_antichains: tally.total(),
        max_cardinality: max,
        full_reflections,
        p_n_minus_1: crate::arith::format_rational(&p_top),
        h_n_minus_1_0: crate::arith::format_rational(&h_top),
        clauses: ["a", "b", "c", "d", "e", "f"].iter().map(|c| format!("({c}) pass")).collect(),
    })
}

/// Everything the `antichains` command reports for one type.
#[derive(Clone, Debug)]
pub struct AntichainSummary {
    pub tally: AntichainTally,
    pub narayana: BiPoly,
    pub h: BiPoly,
    pub p_direct: BiPoly,
    pub p_mobius: BiPoly,
    pub catalan: Rational,
}

pub fn summarize(rs: &RootSystem) -> Result<(RootPoset, AntichainSummary)> {
    let poset = RootPoset::new(rs)?;
    let tally = poset.enumerate_antichains();
    let summary = AntichainSummary {
        narayana: narayana_polynomial(&tally),
        h: h_polynomial(&tally),
        p_direct: p_polynomial_direct(&tally, poset.full_edge_mask()),
        p_mobius: p_polynomial_mobius(&poset),
        catalan: rs.catalan_number(),
        tally,
    };
    Ok((poset, summary))
}
