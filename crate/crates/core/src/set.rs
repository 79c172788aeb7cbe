//! Bitset over element indices of a single algebra.

use std::fmt;

use crate::algebra::Elem;

/// A subset of `0..universe`, stored as packed membership bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(universe: usize, elems: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// Size of the ambient universe, not of the set.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, e: Elem) -> bool {
        e < self.universe && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    /// Returns `true` if `e` was not already present.
    pub fn insert(&mut self, e: Elem) -> bool {
        assert!(e < self.universe, "element {e} outside universe of size {}", self.universe);
        let fresh = !self.contains(e);
        self.words[e / 64] |= 1 << (e % 64);
        fresh
    }

    pub fn remove(&mut self, e: Elem) {
        if e < self.universe {
            self.words[e / 64] &= !(1 << (e % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.universe).filter(move |&e| self.contains(e))
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<Elem> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = ElemSet::empty(70);
        assert!(s.is_empty());
        assert!(s.insert(3));
        assert!(s.insert(65));
        assert!(!s.insert(3));
        assert_eq!(s.to_vec(), vec![3, 65]);
        assert_eq!(s.len(), 2);
        s.remove(3);
        assert_eq!(s.first(), Some(65));
    }

    #[test]
    fn subset_and_meet() {
        let a = ElemSet::from_elems(5, [0, 1, 2]);
        let b = ElemSet::from_elems(5, [1, 2]);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.union(&b), a);
        assert!(ElemSet::full(5).is_full());
    }
}
