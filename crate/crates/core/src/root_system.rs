//! Finite root systems: Cartan data, positive roots by reflection closure,
//! exponents, and the full-reflection count.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{format_rational, int, GoldenNumber, Rational};
use crate::error::{CoxError, Result};
use crate::perm::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

/// A type label such as `A3`, `E8` or `I2(7)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
    /// Dihedral order parameter; only meaningful for `I2(m)`.
    pub m: u32,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let t = Self { family, rank, m: 0 };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::H => rank == 3 || rank == 4,
            Family::I => false,
        };
        if ok {
            Ok(t)
        } else {
            Err(CoxError::UnsupportedType(t.to_string()))
        }
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        if m < 5 {
            return Err(CoxError::UnsupportedType(format!("I2({m})")));
        }
        Ok(Self {
            family: Family::I,
            rank: 2,
            m,
        })
    }

    pub fn is_crystallographic(&self) -> bool {
        !matches!(self.family, Family::H | Family::I)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::I {
            return write!(f, "I2({})", self.m);
        }
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CoxeterType {
    type Err = CoxError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CoxError::UnsupportedType(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?;
            if m.is_empty() || !m.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            return Self::dihedral(m.parse().map_err(|_| bad())?).map_err(|_| bad());
        }
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            Some('H') => Family::H,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0')
        {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        if rank > 64 {
            return Err(bad());
        }
        Self::new(family, rank).map_err(|_| bad())
    }
}

#[derive(Clone, Debug)]
pub struct CartanDatum {
    pub kind: CoxeterType,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`; absent for the dihedral family,
    /// which is handled combinatorially.
    pub cartan_matrix: Option<Vec<Vec<GoldenNumber>>>,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub dynkin_edges: Vec<(usize, usize)>,
    /// `true` for nodes in `I+`. Node 0 is always in `I+`.
    pub bipartition: Vec<bool>,
    pub crystallographic: bool,
}

impl CartanDatum {
    pub fn new(kind: CoxeterType) -> Self {
        let n = kind.rank;
        let mut links: Vec<(usize, usize, u32)> = Vec::new();
        let chain = |links: &mut Vec<(usize, usize, u32)>, len: usize| {
            for i in 0..len.saturating_sub(1) {
                links.push((i, i + 1, 3));
            }
        };
        match kind.family {
            Family::A => chain(&mut links, n),
            Family::B | Family::C => {
                chain(&mut links, n - 1);
                links.push((n - 2, n - 1, 4));
            }
            Family::D => {
                chain(&mut links, n - 1);
                links.push((n - 3, n - 1, 3));
            }
            Family::E => {
                links.push((0, 2, 3));
                links.push((1, 3, 3));
                for i in 2..n - 1 {
                    links.push((i, i + 1, 3));
                }
            }
            Family::F => links.extend([(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            Family::G => links.push((0, 1, 6)),
            Family::H => {
                chain(&mut links, n);
                links[0].2 = 5;
            }
            Family::I => links.push((0, 1, kind.m)),
        }

        let mut coxeter_matrix = vec![vec![2u32; n]; n];
        for (i, row) in coxeter_matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in &links {
            coxeter_matrix[i][j] = m;
            coxeter_matrix[j][i] = m;
        }

        let cartan_matrix = (kind.family != Family::I).then(|| {
            let mut a = vec![vec![GoldenNumber::from_int(0); n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = GoldenNumber::from_int(2);
            }
            for &(i, j, m) in &links {
                let (aij, aji) = match (kind.family, m) {
                    (_, 3) => (GoldenNumber::from_int(-1), GoldenNumber::from_int(-1)),
                    // short root at the higher index for B, long for C
                    (Family::B, 4) | (Family::F, 4) => {
                        (GoldenNumber::from_int(-1), GoldenNumber::from_int(-2))
                    }
                    (Family::C, 4) => (GoldenNumber::from_int(-2), GoldenNumber::from_int(-1)),
                    // alpha_0 short
                    (Family::G, 6) => (GoldenNumber::from_int(-3), GoldenNumber::from_int(-1)),
                    (Family::H, 5) => (-GoldenNumber::phi(), -GoldenNumber::phi()),
                    _ => unreachable!("unexpected link {m} in {kind}"),
                };
                a[i][j] = aij;
                a[j][i] = aji;
            }
            a
        });

        let dynkin_edges: Vec<(usize, usize)> = links.iter().map(|&(i, j, _)| (i.min(j), i.max(j))).collect();
        let mut bipartition = vec![false; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        bipartition[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(i, j) in &dynkin_edges {
                let v = if i == u {
                    j
                } else if j == u {
                    i
                } else {
                    continue;
                };
                if !seen[v] {
                    seen[v] = true;
                    bipartition[v] = !bipartition[u];
                    queue.push_back(v);
                }
            }
        }

        Self {
            kind,
            rank: n,
            cartan_matrix,
            coxeter_matrix,
            dynkin_edges,
            bipartition,
            crystallographic: kind.is_crystallographic(),
        }
    }

    pub fn is_tree(&self) -> bool {
        self.dynkin_edges.len() + 1 == self.rank
    }

    /// Bitmask of the Dynkin edges with both ends in `support`.
    pub fn edges_within(&self, support: u32) -> u32 {
        self.dynkin_edges
            .iter()
            .enumerate()
            .filter(|&(_, &(i, j))| support >> i & 1 == 1 && support >> j & 1 == 1)
            .fold(0, |acc, (e, _)| acc | 1 << e)
    }
}

/// Coefficients of a root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<GoldenNumber>,
}

impl Root {
    pub fn height(&self) -> GoldenNumber {
        self.coords
            .iter()
            .fold(GoldenNumber::from_int(0), |acc, c| &acc + c)
    }

    pub fn support(&self) -> u32 {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(GoldenNumber::is_nonnegative) && !self.coords.iter().all(GoldenNumber::is_zero)
    }

    /// Integer coordinates, when every coefficient is an integer.
    pub fn int_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if !c.is_rational() || !c.a.is_integer() {
                    return None;
                }
                c.a.to_integer().to_i64()
            })
            .collect()
    }

    fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub datum: CartanDatum,
    /// Canonically ordered positive roots. Empty for the dihedral family.
    pub positive_roots: Vec<Root>,
    num_positive: usize,
    supports: Vec<u32>,
    /// `simple_reflection_tables[i][r]` is the index of `s_i(root r)` in the
    /// full list (positives, then negatives).
    pub simple_reflection_tables: Vec<Vec<u16>>,
    pub exponents: Vec<u32>,
    pub coxeter_number: u32,
    pub group_order: u64,
    /// `(i, parent)` with `root = s_i(parent)`; `None` for simple roots.
    parents: Vec<Option<(usize, usize)>>,
    simple_indices: Vec<usize>,
}

impl RootSystem {
    pub fn build(label: &str) -> Result<Self> {
        Self::from_type(label.parse()?)
    }

    pub fn from_type(kind: CoxeterType) -> Result<Self> {
        let datum = CartanDatum::new(kind);
        if kind.family == Family::I {
            return Ok(Self::dihedral(datum));
        }
        let node_order: Vec<usize> = (0..kind.rank).collect();
        Self::from_datum(datum, &node_order)
    }

    /// Reflection closure. `node_order` only changes the order simple roots
    /// are seeded in; the canonical result does not depend on it.
    pub fn from_datum(datum: CartanDatum, node_order: &[usize]) -> Result<Self> {
        let n = datum.rank;
        let cartan = datum
            .cartan_matrix
            .clone()
            .ok_or_else(|| CoxError::InvariantBroken("closure needs a Cartan matrix".into()))?;
        let simple = |i: usize| Root {
            coords: (0..n)
                .map(|j| GoldenNumber::from_int((i == j) as i64))
                .collect(),
        };
        let reflect = |root: &Root, i: usize| -> Root {
            let pairing = (0..n).fold(GoldenNumber::from_int(0), |acc, j| {
                &acc + &(&cartan[i][j] * &root.coords[j])
            });
            let mut coords = root.coords.clone();
            coords[i] = &coords[i] - &pairing;
            Root { coords }
        };

        let mut found: Vec<Root> = Vec::new();
        let mut parents_raw: Vec<Option<(usize, usize)>> = Vec::new();
        let mut index: HashMap<Root, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for &i in node_order {
            let r = simple(i);
            index.insert(r.clone(), found.len());
            queue.push_back(found.len());
            found.push(r);
            parents_raw.push(None);
        }
        while let Some(k) = queue.pop_front() {
            for i in 0..n {
                let image = reflect(&found[k], i);
                if image.is_positive() && !index.contains_key(&image) {
                    index.insert(image.clone(), found.len());
                    queue.push_back(found.len());
                    found.push(image);
                    parents_raw.push(Some((i, k)));
                }
            }
            if found.len() > 4096 {
                return Err(CoxError::InvariantBroken(format!(
                    "{} produced an infinite root closure",
                    datum.kind
                )));
            }
        }

        // canonical order: height, then coordinates lexicographically
        // descending, so that simple root i lands at index i
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| {
            found[a]
                .height()
                .cmp(&found[b].height())
                .then_with(|| found[b].coords.cmp(&found[a].coords))
        });
        let mut rank_of = vec![0; found.len()];
        for (new, &old) in order.iter().enumerate() {
            rank_of[old] = new;
        }
        let positive_roots: Vec<Root> = order.iter().map(|&o| found[o].clone()).collect();
        let parents: Vec<Option<(usize, usize)>> = order
            .iter()
            .map(|&o| parents_raw[o].map(|(i, p)| (i, rank_of[p])))
            .collect();

        let npos = positive_roots.len();
        let mut full_index: HashMap<Root, usize> = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            full_index.insert(r.clone(), k);
            full_index.insert(r.negated(), k + npos);
        }
        let root_at = |k: usize| -> Root {
            if k < npos {
                positive_roots[k].clone()
            } else {
                positive_roots[k - npos].negated()
            }
        };
        let mut tables = Vec::with_capacity(n);
        for i in 0..n {
            let mut table = Vec::with_capacity(2 * npos);
            for k in 0..2 * npos {
                let image = reflect(&root_at(k), i);
                let idx = *full_index.get(&image).ok_or_else(|| {
                    CoxError::InvariantBroken(format!("s_{i} leaves the root set"))
                })?;
                table.push(idx as u16);
            }
            tables.push(table);
        }
        let simple_indices: Vec<usize> = (0..n).map(|i| full_index[&simple(i)]).collect();
        let supports = positive_roots.iter().map(Root::support).collect();

        let exponents = match datum.kind.family {
            Family::H if n == 3 => vec![1, 5, 9],
            Family::H => vec![1, 11, 19, 29],
            Family::I => vec![1, datum.kind.m - 1],
            _ => exponents_from_heights(&positive_roots)?,
        };
        let coxeter_number = (2 * npos / n) as u32;
        let group_order = exponents.iter().map(|&e| e as u64 + 1).product();

        Ok(Self {
            datum,
            positive_roots,
            num_positive: npos,
            supports,
            simple_reflection_tables: tables,
            exponents,
            coxeter_number,
            group_order,
            parents,
            simple_indices,
        })
    }

    /// `I2(m)` without coordinates: root `k` sits at angle `k pi / m`,
    /// `0 <= k < 2m`; `k < m` are positive, the simple roots are `0` and `m-1`,
    /// and `-root k = root k+m`.
    fn dihedral(datum: CartanDatum) -> Self {
        let m = datum.kind.m as usize;
        let reflect_in = |j: usize| -> Vec<u16> {
            (0..2 * m).map(|k| ((2 * j + 3 * m - k) % (2 * m)) as u16).collect()
        };
        let tables = vec![reflect_in(0), reflect_in(m - 1)];
        let supports = (0..m)
            .map(|k| match k {
                0 => 0b01,
                k if k == m - 1 => 0b10,
                _ => 0b11,
            })
            .collect();
        Self {
            datum,
            positive_roots: Vec::new(),
            num_positive: m,
            supports,
            simple_reflection_tables: tables,
            exponents: vec![1, m as u32 - 1],
            coxeter_number: m as u32,
            group_order: 2 * m as u64,
            parents: Vec::new(),
            simple_indices: vec![0, m - 1],
        }
    }

    pub fn kind(&self) -> CoxeterType {
        self.datum.kind
    }

    pub fn label(&self) -> String {
        self.datum.kind.to_string()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive
    }

    pub fn has_coordinates(&self) -> bool {
        !self.positive_roots.is_empty()
    }

    /// Support bitmask of positive root `k`.
    pub fn support(&self, k: usize) -> u32 {
        self.supports[k]
    }

    /// Index of `alpha_i` among the positive roots.
    pub fn simple_index(&self, i: usize) -> usize {
        self.simple_indices[i]
    }

    pub fn full_support(&self) -> u32 {
        (1u32 << self.rank()) - 1
    }

    pub fn negate_index(&self, k: usize) -> usize {
        (k + self.num_positive) % (2 * self.num_positive)
    }

    pub fn simple_reflection(&self, i: usize) -> GroupElement {
        GroupElement::from_images(self.simple_reflection_tables[i].clone())
    }

    /// Reflection through the hyperplane of positive root `k`.
    pub fn reflection_of_root(&self, k: usize) -> GroupElement {
        if self.positive_roots.is_empty() {
            let m = self.num_positive;
            return GroupElement::from_images(
                (0..2 * m).map(|r| ((2 * k + 3 * m - r) % (2 * m)) as u16).collect(),
            );
        }
        match self.parents[k] {
            None => {
                let i = self.simple_indices.iter().position(|&s| s == k).unwrap();
                self.simple_reflection(i)
            }
            Some((i, parent)) => {
                let s = self.simple_reflection(i);
                s.compose(&self.reflection_of_root(parent)).compose(&s)
            }
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of positive roots with full support, i.e. full reflections.
    pub fn full_reflection_count(&self) -> u64 {
        let full = self.full_support();
        self.supports.iter().filter(|&&s| s == full).count() as u64
    }

    /// `(n h / |W|) prod_{i>=2} (e_i - 1)`
    pub fn formula_value(&self) -> Rational {
        let n = self.rank() as i64;
        let h = self.coxeter_number as i64;
        let prod = self.exponents[1..]
            .iter()
            .fold(BigInt::from(1), |acc, &e| acc * BigInt::from(e as i64 - 1));
        Rational::new(prod * BigInt::from(n * h), BigInt::from(self.group_order))
    }

    /// `prod_i (e_i + h + 1) / (e_i + 1)`
    pub fn catalan_number(&self) -> Rational {
        let h = self.coxeter_number as i64;
        self.exponents.iter().fold(int(1), |acc, &e| {
            acc * Rational::new(BigInt::from(e as i64 + h + 1), BigInt::from(e as i64 + 1))
        })
    }

    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            type_label: self.label(),
            rank: self.rank(),
            coxeter_number: self.coxeter_number,
            group_order: self.group_order,
            exponents: self.exponents.clone(),
            num_positive_roots: self.num_positive,
            positive_roots: self
                .positive_roots
                .iter()
                .map(|r| r.coords.iter().map(golden_json).collect())
                .collect(),
            full_reflections: self.full_reflection_count(),
            formula_value: format_rational(&self.formula_value()),
        }
    }
}

fn golden_json(g: &GoldenNumber) -> String {
    if g.is_rational() {
        format_rational(&g.a)
    } else {
        format!("{}+{}*phi", format_rational(&g.a), format_rational(&g.b))
    }
}

/// Exponents as the conjugate of the height distribution
/// `(#roots of height 1, #roots of height 2, ...)`.
pub fn exponents_from_heights(roots: &[Root]) -> Result<Vec<u32>> {
    let mut counts: Vec<u32> = Vec::new();
    for r in roots {
        let h = r.height();
        if !h.is_rational() || !h.a.is_integer() || h.a <= Rational::zero() {
            return Err(CoxError::NonCrystallographic(format!("height {h}")));
        }
        let h = h.a.to_integer().to_usize().unwrap();
        if counts.len() < h {
            counts.resize(h, 0);
        }
        counts[h - 1] += 1;
    }
    // #{i : e_i >= k} = counts[k-1]
    let n = counts.first().copied().unwrap_or(0) as usize;
    let mut exps: Vec<u32> = (0..n)
        .map(|i| counts.iter().filter(|&&c| c as usize > i).count() as u32)
        .collect();
    exps.sort_unstable();
    Ok(exps)
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemSummary {
    pub type_label: String,
    pub rank: usize,
    pub coxeter_number: u32,
    pub group_order: u64,
    pub exponents: Vec<u32>,
    pub num_positive_roots: usize,
    pub positive_roots: Vec<Vec<String>>,
    pub full_reflections: u64,
    pub formula_value: String,
}

/// The full-reflection counts listed for each family.
pub fn tabulated_full_reflections(kind: CoxeterType) -> u64 {
    let n = kind.rank as u64;
    match kind.family {
        Family::A => 1,
        Family::B | Family::C => n,
        Family::D => n - 2,
        Family::E => match n {
            6 => 7,
            7 => 16,
            _ => 44,
        },
        Family::F => 10,
        Family::G => 4,
        Family::H if n == 3 => 8,
        Family::H => 42,
        Family::I => kind.m as u64 - 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_roots(rs: &RootSystem) -> Vec<Vec<i64>> {
        rs.positive_roots.iter().map(|r| r.int_coords().unwrap()).collect()
    }

    #[test]
    fn parse_labels() {
        for s in ["A1", "B2", "C3", "D4", "E6", "E8", "F4", "G2", "H3", "H4", "I2(5)", "I2(12)"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        for s in ["A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H2", "I2(4)", "I3(5)", "X2", "A", "a2", "A02", "I2()", "I2(5"] {
            assert!(s.parse::<CoxeterType>().is_err(), "{s}");
        }
    }

    #[test]
    fn a2_roots() {
        let rs = RootSystem::build("A2").unwrap();
        assert_eq!(int_roots(&rs), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs.exponents(), &[1, 2]);
        assert_eq!(rs.group_order, 6);
    }

    #[test]
    fn root_counts_and_exponents() {
        let cases: &[(&str, usize, &[u32])] = &[
            ("A3", 6, &[1, 2, 3]),
            ("B3", 9, &[1, 3, 5]),
            ("C3", 9, &[1, 3, 5]),
            ("D4", 12, &[1, 3, 3, 5]),
            ("G2", 6, &[1, 5]),
            ("F4", 24, &[1, 5, 7, 11]),
            ("E6", 36, &[1, 4, 5, 7, 8, 11]),
            ("E7", 63, &[1, 5, 7, 9, 11, 13, 17]),
            ("E8", 120, &[1, 7, 11, 13, 17, 19, 23, 29]),
            ("H3", 15, &[1, 5, 9]),
            ("H4", 60, &[1, 11, 19, 29]),
        ];
        for &(label, npos, exps) in cases {
            let rs = RootSystem::build(label).unwrap();
            assert_eq!(rs.num_positive(), npos, "{label}");
            assert_eq!(rs.exponents(), exps, "{label}");
            let sum: u32 = exps.iter().sum();
            assert_eq!(sum as usize, npos, "{label}");
            assert_eq!(rs.coxeter_number, exps.last().unwrap() + 1, "{label}");
        }
    }

    #[test]
    fn b2_long_and_short() {
        let rs = RootSystem::build("B2").unwrap();
        assert_eq!(int_roots(&rs), vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        let rs = RootSystem::build("C3").unwrap();
        assert_eq!(int_roots(&rs).last().unwrap(), &vec![2, 2, 1]);
        let rs = RootSystem::build("B3").unwrap();
        assert_eq!(int_roots(&rs).last().unwrap(), &vec![1, 2, 2]);
    }

    #[test]
    fn supports_are_connected() {
        for label in ["A4", "B4", "C4", "D5", "E6", "F4", "G2", "H3", "H4"] {
            let rs = RootSystem::build(label).unwrap();
            for k in 0..rs.num_positive() {
                let s = rs.support(k);
                let nodes = s.count_ones() as usize;
                let edges = rs.datum.edges_within(s).count_ones() as usize;
                assert_eq!(edges + 1, nodes, "{label} root {k}");
            }
        }
    }

    #[test]
    fn closure_is_order_independent() {
        for label in ["B3", "D4", "F4", "H3"] {
            let base = RootSystem::build(label).unwrap();
            let kind: CoxeterType = label.parse().unwrap();
            let rev: Vec<usize> = (0..kind.rank).rev().collect();
            let other = RootSystem::from_datum(CartanDatum::new(kind), &rev).unwrap();
            assert_eq!(base.positive_roots, other.positive_roots, "{label}");
            assert_eq!(base.simple_reflection_tables, other.simple_reflection_tables);
        }
    }

    #[test]
    fn bipartition_is_proper() {
        for label in ["A5", "D5", "E7", "F4"] {
            let d = CartanDatum::new(label.parse().unwrap());
            assert!(d.is_tree());
            assert!(d.bipartition[0]);
            for &(i, j) in &d.dynkin_edges {
                assert_ne!(d.bipartition[i], d.bipartition[j]);
            }
        }
    }

    #[test]
    fn full_reflection_examples() {
        assert_eq!(RootSystem::build("A5").unwrap().full_reflection_count(), 1);
        assert_eq!(RootSystem::build("E8").unwrap().full_reflection_count(), 44);
        assert_eq!(RootSystem::build("I2(10)").unwrap().full_reflection_count(), 8);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(RootSystem::build("B3").unwrap().formula_value(), int(3));
        assert_eq!(RootSystem::build("H4").unwrap().formula_value(), int(42));
        assert_eq!(RootSystem::build("A1").unwrap().formula_value(), int(1));
    }

    #[test]
    fn reflections_match_roots() {
        let rs = RootSystem::build("A2").unwrap();
        assert_eq!(rs.reflection_of_root(rs.simple_index(0)), rs.simple_reflection(0));
        // alpha1 + alpha2 is index 2; its reflection swaps alpha1 <-> -alpha2
        let s = rs.reflection_of_root(2);
        assert_eq!(s.apply(2), 5);
        assert_eq!(s.apply(0), rs.negate_index(1));
        assert_eq!(s.compose(&s), GroupElement::identity(6));
        assert_eq!(s.fixed_points(), 0);

        for label in ["B3", "D4", "H3", "I2(7)", "I2(8)"] {
            let rs = RootSystem::build(label).unwrap();
            let mut all: Vec<GroupElement> =
                (0..rs.num_positive()).map(|k| rs.reflection_of_root(k)).collect();
            for (k, s) in all.iter().enumerate() {
                assert_eq!(s.apply(k), rs.negate_index(k), "{label}");
                assert!(s.compose(s).is_identity());
                assert!(s.commutes_with_negation());
            }
            all.sort();
            all.dedup();
            assert_eq!(all.len(), rs.num_positive(), "{label}");
        }
    }

    #[test]
    fn reflection_matches_bilinear_form_oracle() {
        // B3 with symmetrised form (alpha_i, alpha_j) = d_i a_ij, d = (2,2,1)
        let rs = RootSystem::build("B3").unwrap();
        let a = [[2i64, -1, 0], [-1, 2, -1], [0, -2, 2]];
        let d = [2i64, 2, 1];
        let form = |x: &[i64], y: &[i64]| -> i64 {
            (0..3).map(|i| (0..3).map(|j| x[i] * d[i] * a[i][j] * y[j]).sum::<i64>()).sum()
        };
        let pos = int_roots(&rs);
        let mut all = pos.clone();
        all.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        for (k, beta) in pos.iter().enumerate() {
            let s = rs.reflection_of_root(k);
            let bb = form(beta, beta);
            for (r, x) in all.iter().enumerate() {
                let c = 2 * form(x, beta) / bb;
                let image: Vec<i64> = x.iter().zip(beta).map(|(xi, bi)| xi - c * bi).collect();
                assert_eq!(all[s.apply(r)], image);
            }
        }
    }

    #[test]
    fn dihedral_coordinate_cross_check() {
        // I2(5) through the golden-ratio coordinates and I2(6) through G2
        let mut d = CartanDatum::new(CoxeterType::dihedral(5).unwrap());
        d.cartan_matrix = Some(vec![
            vec![GoldenNumber::from_int(2), -GoldenNumber::phi()],
            vec![-GoldenNumber::phi(), GoldenNumber::from_int(2)],
        ]);
        let coords = RootSystem::from_datum(d, &[0, 1]).unwrap();
        assert_eq!(coords.num_positive(), 5);
        assert_eq!(coords.full_reflection_count(), 3);
        assert_eq!(coords.formula_value(), int(3));
        let closed = RootSystem::build("I2(5)").unwrap();
        assert_eq!(closed.num_positive(), 5);
        let g2 = RootSystem::build("G2").unwrap();
        let i6 = RootSystem::build("I2(6)").unwrap();
        assert_eq!(g2.full_reflection_count(), i6.full_reflection_count());
        assert_eq!(g2.formula_value(), i6.formula_value());
    }

    #[test]
    fn height_exponents_a3() {
        let rs = RootSystem::build("A3").unwrap();
        assert_eq!(exponents_from_heights(&rs.positive_roots).unwrap(), vec![1, 2, 3]);
    }
}
