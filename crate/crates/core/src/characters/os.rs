//! Orlik-Solomon algebra of a reflection arrangement through its
//! no-broken-circuit basis, with a straightening map for arbitrary monomials.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::arith::GoldenNumber;
use crate::perm::GroupElement;
use crate::root_system::RootSystem;

/// Independence oracle on the hyperplanes `0..size`.
#[derive(Clone, Debug)]
pub enum HyperplaneMatroid {
    /// Normal vectors with exact coordinates.
    Vectors(Vec<Vec<GoldenNumber>>),
    /// `m` lines through the origin of a plane: every pair is independent.
    UniformRank2(usize),
}

impl HyperplaneMatroid {
    pub fn for_root_system(rs: &RootSystem) -> Self {
        if rs.has_coordinates() {
            Self::Vectors(rs.positive_roots.iter().map(|r| r.coords.clone()).collect())
        } else {
            Self::UniformRank2(rs.num_positive())
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Self::Vectors(v) => v.len(),
            Self::UniformRank2(m) => *m,
        }
    }

    pub fn rank(&self, set: &[usize]) -> usize {
        match self {
            Self::UniformRank2(_) => set.len().min(2),
            Self::Vectors(v) => vector_rank(set.iter().map(|&i| v[i].clone()).collect()),
        }
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.rank(set) == set.len()
    }
}

/// Rank by Gaussian elimination over `Q(phi)`.
fn vector_rank(mut rows: Vec<Vec<GoldenNumber>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r][col..width].iter_mut().zip(&pivot_row[col..width]) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Sorted union of two disjoint sorted sets with the sign of the shuffle
/// `e_a ∧ e_b = sign * e_{a ∪ b}`; `None` if they overlap.
pub fn wedge(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut inversions = 0usize;
    for &x in a {
        for &y in b {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    Some((out, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

/// Sorts a sequence of distinct hyperplanes, returning the permutation sign;
/// `None` if some hyperplane repeats.
pub fn sort_with_sign(seq: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return None;
            }
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    let mut out = seq.to_vec();
    out.sort_unstable();
    Some((out, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |acc, &i| acc | 1 << i)
}

/// Linear combination of NBC basis monomials of one degree.
pub type Combination = Vec<(usize, i64)>;

#[derive(Debug)]
pub struct OsAlgebra {
    matroid: HyperplaneMatroid,
    /// `nbc[k]` = sorted NBC sets of size `k`, in lexicographic order.
    nbc: Vec<Vec<Vec<usize>>>,
    nbc_index: HashMap<u64, usize>,
    straighten_cache: Mutex<HashMap<u64, Combination>>,
}

impl OsAlgebra {
    pub fn new(matroid: HyperplaneMatroid, max_degree: usize) -> Self {
        let size = matroid.size();
        let mut nbc: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        for k in 1..=max_degree {
            let mut level = Vec::new();
            for set in combinations(size, k) {
                if matroid.is_independent(&set) && Self::no_broken_circuit(&matroid, &set) {
                    level.push(set);
                }
            }
            if level.is_empty() {
                break;
            }
            nbc.push(level);
        }
        let nbc_index = nbc
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, s)| (mask(s), i)))
            .collect();
        Self {
            matroid,
            nbc,
            nbc_index,
            straighten_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn for_root_system(rs: &RootSystem) -> Self {
        Self::new(HyperplaneMatroid::for_root_system(rs), rs.rank())
    }

    /// An independent sorted set has no broken circuit iff no hyperplane
    /// smaller than the head of a suffix lies in that suffix's closure.
    fn no_broken_circuit(matroid: &HyperplaneMatroid, set: &[usize]) -> bool {
        Self::find_broken_circuit(matroid, set).is_none()
    }

    /// Returns `(c, T)` with `T ⊆ set` and `{c} ∪ T` a circuit whose minimum is `c`.
    fn find_broken_circuit(matroid: &HyperplaneMatroid, set: &[usize]) -> Option<(usize, Vec<usize>)> {
        for j in 0..set.len() {
            let suffix = &set[j..];
            for c in 0..set[j] {
                let mut ext = suffix.to_vec();
                ext.push(c);
                if matroid.rank(&ext) == suffix.len() {
                    // fundamental circuit of c in the independent suffix
                    let t: Vec<usize> = suffix
                        .iter()
                        .copied()
                        .filter(|&x| {
                            let mut swapped: Vec<usize> =
                                suffix.iter().copied().filter(|&y| y != x).collect();
                            swapped.push(c);
                            matroid.is_independent(&swapped)
                        })
                        .collect();
                    return Some((c, t));
                }
            }
        }
        None
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.matroid.size()
    }

    pub fn top_degree(&self) -> usize {
        self.nbc.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.nbc.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, k: usize) -> &[Vec<usize>] {
        &self.nbc[k]
    }

    /// Expresses `e_S` (sorted `S`) in the NBC basis of degree `|S|`.
    pub fn straighten(&self, set: &[usize]) -> Combination {
        let key = mask(set);
        if let Some(c) = self.straighten_cache.lock().unwrap().get(&key) {
            return c.clone();
        }
        let result = self.straighten_uncached(set);
        self.straighten_cache.lock().unwrap().insert(key, result.clone());
        result
    }

    fn straighten_uncached(&self, set: &[usize]) -> Combination {
        if let Some(&i) = self.nbc_index.get(&mask(set)) {
            if self.nbc.get(set.len()).is_some_and(|l| l.get(i).is_some_and(|s| s == set)) {
                return vec![(i, 1)];
            }
        }
        if !self.matroid.is_independent(set) {
            return Vec::new();
        }
        let (c, broken) = Self::find_broken_circuit(&self.matroid, set)
            .expect("independent non-NBC set has a broken circuit");
        let rest: Vec<usize> = set.iter().copied().filter(|x| !broken.contains(x)).collect();
        let (_, sign) = wedge(&broken, &rest).unwrap();
        // circuit c < t_1 < ... < t_r; e_T = sum_{i>=1} (-1)^{i+1} e_{C \ t_i}
        let mut circuit = broken.clone();
        circuit.insert(0, c);
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for i in 1..circuit.len() {
            let face: Vec<usize> = circuit
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            let coeff = if i % 2 == 1 { 1 } else { -1 } * sign;
            let Some((merged, s)) = wedge(&face, &rest) else {
                continue;
            };
            for (b, v) in self.straighten(&merged) {
                *acc.entry(b).or_default() += coeff * s * v;
            }
        }
        let mut out: Combination = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        out.sort_unstable();
        out
    }

    /// Image of basis monomial `basis(k)[b]` under a hyperplane permutation.
    pub fn act_on_basis(&self, hyperplane_perm: &[usize], k: usize, b: usize) -> Combination {
        let image: Vec<usize> = self.nbc[k][b].iter().map(|&h| hyperplane_perm[h]).collect();
        let (sorted, sign) = sort_with_sign(&image).expect("permutation keeps sets distinct");
        self.straighten(&sorted)
            .into_iter()
            .map(|(i, v)| (i, v * sign))
            .collect()
    }

    /// Trace of the hyperplane permutation on degree `k`.
    pub fn trace(&self, hyperplane_perm: &[usize], k: usize) -> i64 {
        (0..self.nbc[k].len())
            .map(|b| {
                self.act_on_basis(hyperplane_perm, k, b)
                    .into_iter()
                    .find(|&(i, _)| i == b)
                    .map_or(0, |(_, v)| v)
            })
            .sum()
    }
}

/// Permutation of hyperplanes (positive-root indices) induced by `g`.
pub fn hyperplane_permutation(rs: &RootSystem, g: &GroupElement) -> Vec<usize> {
    let npos = rs.num_positive();
    (0..npos).map(|k| g.apply(k) % npos).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
