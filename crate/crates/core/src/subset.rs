//! Index subsets of a finite carrier and partitions into classes.

use serde::Serialize;

/// A sorted set of carrier indices with O(1) membership.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subset {
    #[serde(skip)]
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl Subset {
    /// Builds a subset of `0..universe`. Duplicates are dropped; out of range
    /// indices are rejected.
    pub fn new(universe: usize, items: impl IntoIterator<Item = usize>) -> Option<Subset> {
        let mut mask = vec![false; universe];
        for i in items {
            if i >= universe {
                return None;
            }
            mask[i] = true;
        }
        Some(Subset::from_mask(mask))
    }

    pub fn from_mask(mask: Vec<bool>) -> Subset {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        Subset { mask, members }
    }

    pub fn full(universe: usize) -> Subset {
        Subset::from_mask(vec![true; universe])
    }

    pub fn singleton(universe: usize, i: usize) -> Subset {
        Subset::new(universe, [i]).expect("singleton index in range")
    }

    /// The subset encoded by the low `universe` bits of `bits`.
    pub fn from_bits(universe: usize, bits: u64) -> Subset {
        Subset::from_mask((0..universe).map(|i| bits >> i & 1 == 1).collect())
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask.get(i).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn first(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.members.iter().all(|&i| !other.contains(i))
    }

    /// Image of the subset under `f`, inside a carrier of size `universe`.
    pub fn map(&self, universe: usize, f: impl Fn(usize) -> usize) -> Subset {
        Subset::new(universe, self.members.iter().map(|&i| f(i))).expect("image in range")
    }
}

/// A partition of `0..n` into classes, numbered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Subset>,
}

impl Partition {
    /// Normalizes an arbitrary class labelling so classes are ordered by
    /// first appearance.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let n = labels.len();
        let mut renumber = std::collections::HashMap::new();
        let mut class_of = Vec::with_capacity(n);
        for &l in labels {
            let next = renumber.len();
            class_of.push(*renumber.entry(l).or_insert(next));
        }
        let k = renumber.len();
        let mut masks = vec![vec![false; n]; k];
        for (i, &c) in class_of.iter().enumerate() {
            masks[c][i] = true;
        }
        Partition {
            class_of,
            classes: masks.into_iter().map(Subset::from_mask).collect(),
        }
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn projection(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].members()[0]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_is_ordered_by_first_appearance() {
        let p = Partition::from_labels(&[7, 3, 7, 3, 1]);
        assert_eq!(p.projection(), &[0, 1, 0, 1, 2]);
        assert_eq!(p.classes()[1].members(), &[1, 3]);
        assert_eq!(p.representative(2), 4);
    }

    #[test]
    fn subset_rejects_out_of_range() {
        assert!(Subset::new(3, [0, 3]).is_none());
        let s = Subset::new(4, [2, 0, 2]).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        assert!(!s.contains(9));
    }

    #[test]
    fn bits_round_trip() {
        let s = Subset::from_bits(5, 0b10110);
        assert_eq!(s.members(), &[1, 2, 4]);
    }
}
