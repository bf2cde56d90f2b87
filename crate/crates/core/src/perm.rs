use std::fmt;

/// A permutation of the full root list (positive roots first, then their
/// negatives in the same order) representing one element of `W`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Vec<u16>,
}

impl GroupElement {
    pub fn identity(len: usize) -> Self {
        Self {
            perm: (0..len as u16).collect(),
        }
    }

    pub fn from_images(perm: Vec<u16>) -> Self {
        debug_assert!({
            let mut seen = vec![false; perm.len()];
            perm.iter().all(|&p| !std::mem::replace(&mut seen[p as usize], true))
        });
        Self { perm }
    }

    pub fn images(&self) -> &[u16] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            perm: other.perm.iter().map(|&i| self.perm[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        GroupElement { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.perm
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i == p as usize)
            .count()
    }

    /// Number of positive roots sent to negative roots (the Coxeter length).
    pub fn length(&self) -> usize {
        let npos = self.perm.len() / 2;
        self.perm[..npos].iter().filter(|&&p| p as usize >= npos).count()
    }

    /// Checks the element commutes with negation `i <-> i + N`.
    pub fn commutes_with_negation(&self) -> bool {
        let npos = self.perm.len() / 2;
        (0..npos).all(|i| {
            let p = self.perm[i] as usize;
            let q = self.perm[i + npos] as usize;
            q == (p + npos) % (2 * npos)
        })
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = GroupElement::from_images(vec![1, 0, 3, 2]);
        let b = GroupElement::from_images(vec![2, 3, 0, 1]);
        assert_eq!(a.compose(&a), GroupElement::identity(4));
        assert_eq!(a.compose(&b).apply(0), 3);
        assert_eq!(b.compose(&b.inverse()), GroupElement::identity(4));
        assert!(b.commutes_with_negation());
        assert_eq!(b.length(), 2);
    }
}
