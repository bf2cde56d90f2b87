use std::collections::{HashMap, VecDeque};

use crate::arith::Partition;
use crate::error::{CoxError, Result};
use crate::perm::GroupElement;
use crate::root_system::{Family, RootSystem};

/// Generation cap on `|W|`.
pub const MAX_GROUP_ORDER: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: u64,
    pub label: String,
    /// Smallest Coxeter length in the class.
    pub min_length: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn is_identity(&self) -> bool {
        self.representative.is_identity()
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClassTable {
    pub classes: Vec<ConjugacyClass>,
}

impl ConjugacyClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn identity_class(&self) -> usize {
        self.classes.iter().position(ConjugacyClass::is_identity).unwrap()
    }
}

/// Brute-force group generated by the simple reflection tables.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    pub elements: Vec<GroupElement>,
    pub classes: ConjugacyClassTable,
}

impl CoxeterGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn generate_group(rs: &RootSystem) -> Result<CoxeterGroup> {
    if rs.group_order > MAX_GROUP_ORDER {
        return Err(CoxError::GroupTooLarge {
            order: rs.group_order,
            cap: MAX_GROUP_ORDER,
        });
    }
    let gens: Vec<GroupElement> = (0..rs.rank()).map(|i| rs.simple_reflection(i)).collect();
    let id = GroupElement::identity(rs.num_roots());
    let mut index: HashMap<GroupElement, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for s in &gens {
            let next = s.compose(&elements[k]);
            if !index.contains_key(&next) {
                if elements.len() as u64 >= MAX_GROUP_ORDER {
                    return Err(CoxError::GroupTooLarge {
                        order: elements.len() as u64 + 1,
                        cap: MAX_GROUP_ORDER,
                    });
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }

    let mut assigned = vec![false; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for s in &gens {
                let conj = s.compose(&elements[k]).compose(s);
                let j = index[&conj];
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let representative = members
            .iter()
            .map(|&m| &elements[m])
            .min()
            .unwrap()
            .clone();
        let min_length = members.iter().map(|&m| elements[m].length()).min().unwrap();
        classes.push(ConjugacyClass {
            representative,
            size: members.len() as u64,
            label: String::new(),
            min_length,
            members,
        });
    }
    classes.sort_by(|a, b| {
        (a.min_length, a.size, &a.representative).cmp(&(b.min_length, b.size, &b.representative))
    });
    label_classes(rs, &mut classes);
    Ok(CoxeterGroup {
        elements,
        classes: ConjugacyClassTable { classes },
    })
}

fn label_classes(rs: &RootSystem, classes: &mut [ConjugacyClass]) {
    let ambient = AmbientCoords::new(rs);
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (i, class) in classes.iter_mut().enumerate() {
        let base = match &ambient {
            Some(amb) if rs.kind().family == Family::A => amb.cycle_type(&class.representative).to_string(),
            Some(amb) => {
                let (pos, neg) = amb.signed_cycle_type(&class.representative);
                format!("{pos}|{neg}")
            }
            None => format!("c{i}"),
        };
        let count = seen.entry(base.clone()).or_default();
        class.label = if *count == 0 { base.clone() } else { format!("{base}{}", "'".repeat(*count)) };
        *count += 1;
    }
}

/// Roots of `A`, `B`, `C`, `D` written in the orthonormal `epsilon` basis.
#[derive(Clone, Debug)]
pub struct AmbientCoords {
    family: Family,
    rank: usize,
    dim: usize,
    roots: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, usize>,
}

impl AmbientCoords {
    pub fn new(rs: &RootSystem) -> Option<Self> {
        let family = rs.kind().family;
        let n = rs.rank();
        let dim = match family {
            Family::A => n + 1,
            Family::B | Family::C | Family::D => n,
            _ => return None,
        };
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|k| {
                let mut v = vec![0i64; dim];
                let last = k + 1 == n;
                match (family, last) {
                    (Family::B, true) => v[k] = 1,
                    (Family::C, true) => v[k] = 2,
                    (Family::D, true) => {
                        v[k - 1] = 1;
                        v[k] = 1;
                    }
                    _ => {
                        v[k] = 1;
                        v[k + 1] = -1;
                    }
                }
                v
            })
            .collect();
        let npos = rs.num_positive();
        let mut roots = Vec::with_capacity(2 * npos);
        for r in &rs.positive_roots {
            let c = r.int_coords()?;
            let mut v = vec![0i64; dim];
            for (k, ck) in c.iter().enumerate() {
                for (vi, si) in v.iter_mut().zip(&simple[k]) {
                    *vi += ck * si;
                }
            }
            roots.push(v);
        }
        for k in 0..npos {
            let neg: Vec<i64> = roots[k].iter().map(|x| -x).collect();
            roots.push(neg);
        }
        let lookup = roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Some(Self {
            family,
            rank: n,
            dim,
            roots,
            lookup,
        })
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.roots[idx]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    fn eps_combo(&self, i: usize, a: i64, j: usize, b: i64) -> Vec<i64> {
        let mut v = vec![0i64; self.dim];
        v[i] += a;
        v[j] += b;
        v
    }

    /// Letter permutation of an element of `A_n = S_{n+1}`.
    pub fn letter_permutation(&self, g: &GroupElement) -> Vec<usize> {
        assert_eq!(self.family, Family::A);
        (0..self.dim)
            .map(|i| {
                let j = if i == 0 { 1 } else { 0 };
                let r = self.index_of(&self.eps_combo(i, 1, j, -1)).unwrap();
                let image = &self.roots[g.apply(r)];
                image.iter().position(|&x| x == 1).unwrap()
            })
            .collect()
    }

    pub fn cycle_type(&self, g: &GroupElement) -> Partition {
        let sigma = self.letter_permutation(g);
        let mut seen = vec![false; sigma.len()];
        let mut parts = Vec::new();
        for s in 0..sigma.len() {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = sigma[x];
                len += 1;
            }
            if len > 0 {
                parts.push(len);
            }
        }
        Partition::new(parts)
    }

    /// Signed permutation `i -> sign * sigma(i)` of a `B`/`C`/`D` element,
    /// read off from the images of `e_i - e_j` and `e_i + e_j`.
    pub fn signed_permutation(&self, g: &GroupElement) -> Vec<(usize, i64)> {
        assert!(matches!(self.family, Family::B | Family::C | Family::D));
        (0..self.rank)
            .map(|i| {
                let j = if i == 0 { 1 } else { 0 };
                let r1 = self.index_of(&self.eps_combo(i, 1, j, -1)).unwrap();
                let r2 = self.index_of(&self.eps_combo(i, 1, j, 1)).unwrap();
                let sum: Vec<i64> = self.roots[g.apply(r1)]
                    .iter()
                    .zip(&self.roots[g.apply(r2)])
                    .map(|(a, b)| a + b)
                    .collect();
                let pos = sum.iter().position(|&x| x != 0).unwrap();
                (pos, sum[pos].signum())
            })
            .collect()
    }

    /// Cycle lengths of the underlying permutation, split by whether the
    /// product of signs along the cycle is `+1` or `-1`.
    pub fn signed_cycle_type(&self, g: &GroupElement) -> (Partition, Partition) {
        let w = self.signed_permutation(g);
        let mut seen = vec![false; w.len()];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for s in 0..w.len() {
            if seen[s] {
                continue;
            }
            let (mut x, mut len, mut sign) = (s, 0, 1);
            while !seen[x] {
                seen[x] = true;
                sign *= w[x].1;
                x = w[x].0;
                len += 1;
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        (Partition::new(pos), Partition::new(neg))
    }
}

/// `chi_R(g)`: number of roots fixed by `g`.
pub fn chi_r(g: &GroupElement) -> i64 {
    g.fixed_points() as i64
}

pub fn chi_r_by_class(group: &CoxeterGroup) -> Vec<i64> {
    group.classes.classes.iter().map(|c| chi_r(&c.representative)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> (RootSystem, CoxeterGroup) {
        let rs = RootSystem::build(label).unwrap();
        let g = generate_group(&rs).unwrap();
        (rs, g)
    }

    #[test]
    fn orders() {
        for (label, order) in [("A2", 6), ("B3", 48), ("H3", 120), ("D4", 192), ("I2(7)", 14), ("B4", 384)] {
            let (rs, g) = group(label);
            assert_eq!(g.order(), order, "{label}");
            assert_eq!(g.order() as u64, rs.group_order);
            let total: u64 = g.classes.classes.iter().map(|c| c.size).sum();
            assert_eq!(total, rs.group_order);
            assert!(g.elements.iter().all(GroupElement::commutes_with_negation));
        }
    }

    #[test]
    fn a2_classes() {
        let (_, g) = group("A2");
        let sizes: Vec<u64> = g.classes.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let labels: Vec<&str> = g.classes.classes.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, vec!["(1,1,1)", "(2,1)", "(3)"]);
    }

    #[test]
    fn class_counts() {
        // number of partitions / bipartitions / known class numbers
        for (label, count) in [("A3", 5), ("A4", 7), ("B2", 5), ("B3", 10), ("B4", 20), ("D4", 13), ("H3", 10), ("I2(6)", 6), ("I2(7)", 5)] {
            let (_, g) = group(label);
            assert_eq!(g.classes.len(), count, "{label}");
        }
    }

    #[test]
    fn representatives_are_not_conjugate() {
        let (_, g) = group("B3");
        let mut owner = vec![usize::MAX; g.order()];
        for (ci, c) in g.classes.classes.iter().enumerate() {
            for &m in &c.members {
                assert_eq!(owner[m], usize::MAX);
                owner[m] = ci;
            }
        }
        // class of every conjugate x g x^-1 matches
        for (ci, c) in g.classes.classes.iter().enumerate() {
            for x in &g.elements {
                let conj = x.compose(&c.representative).compose(&x.inverse());
                let k = g.elements.iter().position(|e| *e == conj).unwrap();
                assert_eq!(owner[k], ci);
            }
        }
    }

    #[test]
    fn group_too_large() {
        let rs = RootSystem::build("E6").unwrap();
        assert!(matches!(generate_group(&rs), Err(CoxError::GroupTooLarge { .. })));
    }

    #[test]
    fn chi_r_examples() {
        let (_, a2) = group("A2");
        assert_eq!(chi_r(&a2.classes.classes[0].representative), 6);
        let (_, a3) = group("A3");
        let amb = AmbientCoords::new(&RootSystem::build("A3").unwrap()).unwrap();
        for c in &a3.classes.classes {
            let m = amb.cycle_type(&c.representative).ones() as i64;
            assert_eq!(chi_r(&c.representative), m * m - m, "{}", c.label);
        }
        let (_, b2) = group("B2");
        assert_eq!(chi_r(&b2.classes.classes[0].representative), 8);
    }

    #[test]
    fn ambient_roots_have_expected_shape() {
        for label in ["B3", "C3", "D4"] {
            let rs = RootSystem::build(label).unwrap();
            let amb = AmbientCoords::new(&rs).unwrap();
            for k in 0..rs.num_roots() {
                let v = amb.root(k);
                let nz: Vec<i64> = v.iter().copied().filter(|&x| x != 0).collect();
                assert!(nz.len() == 1 || (nz.len() == 2 && nz.iter().all(|x| x.abs() == 1)), "{label} {v:?}");
            }
        }
    }

    #[test]
    fn signed_cycle_examples() {
        let rs = RootSystem::build("B3").unwrap();
        let amb = AmbientCoords::new(&rs).unwrap();
        let id = GroupElement::identity(rs.num_roots());
        let p = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(amb.signed_cycle_type(&id), (p(&[1, 1, 1]), p(&[])));
        // reflection in e_1 (a short root) flips coordinate 1
        let e1 = amb.index_of(&[1, 0, 0]).unwrap();
        let flip = rs.reflection_of_root(e1);
        assert_eq!(amb.signed_cycle_type(&flip), (p(&[1, 1]), p(&[1])));
        assert_eq!(amb.signed_cycle_type(&rs.simple_reflection(0)), (p(&[2, 1]), p(&[])));
    }

    #[test]
    fn dihedral_odd_root_character_is_regular() {
        for m in [5, 7] {
            let (rs, g) = group(&format!("I2({m})"));
            for c in &g.classes.classes {
                let expected = if c.is_identity() { rs.group_order as i64 } else { 0 };
                assert_eq!(chi_r(&c.representative), expected);
            }
        }
    }
}
