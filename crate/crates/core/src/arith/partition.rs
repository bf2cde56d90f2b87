use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    /// Number of fixed points of a permutation of this cycle type.
    pub fn ones(&self) -> u32 {
        self.multiplicity(1)
    }

    /// Centralizer order `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut run = 0u32;
        for (idx, &p) in self.0.iter().enumerate() {
            run = if idx > 0 && self.0[idx - 1] == p { run + 1 } else { 1 };
            z *= BigInt::from(p) * BigInt::from(run);
        }
        z
    }

    /// Union of parts (the partition of a product `p_a p_b`).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Every part multiplied by `d`.
    pub fn scale(&self, d: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * d).collect())
    }

    /// Removes one part equal to 1, if present.
    pub fn remove_one(&self) -> Option<Partition> {
        let pos = self.0.iter().rposition(|&p| p == 1)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=max)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn small_partitions() {
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn counts_match_brute_force() {
        // compositions filtered to weakly decreasing sequences
        fn brute(n: u32) -> usize {
            (0u32..1 << n.saturating_sub(1))
                .filter(|mask| {
                    let mut parts = vec![];
                    let mut cur = 1;
                    for i in 0..n.saturating_sub(1) {
                        if mask >> i & 1 == 1 {
                            parts.push(cur);
                            cur = 1;
                        } else {
                            cur += 1;
                        }
                    }
                    parts.push(cur);
                    parts.windows(2).all(|w| w[0] >= w[1])
                })
                .count()
        }
        for n in 1..=10 {
            assert_eq!(partitions_of(n).len(), brute(n), "n={n}");
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(p(&[3, 1, 1]).ones(), 2);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).remove_one(), Some(p(&[2, 1])));
        assert_eq!(p(&[2]).remove_one(), None);
        // sum over partitions of n of 1/z = 1
        use num_rational::BigRational;
        use num_traits::Zero;
        for n in 1..=7 {
            let s = partitions_of(n)
                .iter()
                .fold(BigRational::zero(), |acc, l| {
                    acc + BigRational::new(BigInt::one(), l.z())
                });
            assert!(s.is_one());
        }
    }
}
