//! Ordered ground sets and bitmask subsets.
//!
//! A ground set fixes both the universe of element labels and the linear
//! order used everywhere downstream (tie-breaking in the greedy comparator,
//! descent positions, deterministic output). Every subset is a 16-bit mask
//! over positions in that order, so ground sets are capped at 16 elements.

use crate::error::Error;
use std::fmt;

pub const MAX_GROUND_SIZE: usize = 16;

/// A subset of a ground set, stored as a bitmask over ground positions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u16) -> Subset {
        Subset(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND_SIZE);
        if n == 0 {
            Subset(0)
        } else {
            Subset(u16::MAX >> (16 - n))
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        let mut mask = 0u16;
        for i in indices {
            mask |= 1 << i;
        }
        Subset(mask)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Positions of the members, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..MAX_GROUND_SIZE).filter(move |i| mask & (1 << i) != 0)
    }

    /// All submasks of `self`, including the empty set and `self` itself.
    /// Enumerated in descending mask order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            universe: self.0,
            next: Some(self.0),
        }
    }
}

pub struct Submasks {
    universe: u16,
    next: Option<u16>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            Some((current - 1) & self.universe)
        };
        Some(Subset(current))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered ground set of distinct, nonempty string labels.
///
/// The stored order is the linear order of the structure; two ground sets
/// with the same labels in different orders are different values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<GroundSet, Error> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND_SIZE {
            return Err(Error::GroundTooLarge { size: labels.len() });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::BadGroundLabels {
                    reason: "empty label".into(),
                });
            }
            if labels[..i].contains(label) {
                return Err(Error::BadGroundLabels {
                    reason: format!("duplicate label `{label}`"),
                });
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn empty() -> GroundSet {
        GroundSet { labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn contains_mask(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    pub fn subset_of_labels<S: AsRef<str>, I: IntoIterator<Item = S>>(
        &self,
        labels: I,
    ) -> Result<Subset, Error> {
        let mut mask = Subset::EMPTY;
        for label in labels {
            let label = label.as_ref();
            match self.position(label) {
                Some(i) => mask = mask.with(i),
                None => {
                    return Err(Error::UnknownLabel {
                        label: label.to_string(),
                    })
                }
            }
        }
        Ok(mask)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Render a subset as `{a,f}` with labels in ground order.
    pub fn format_subset(&self, s: Subset) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i]);
        }
        out.push('}');
        out
    }

    /// Sub-ground-set of the members of `s`, preserving the current order.
    pub fn restrict_to(&self, s: Subset) -> GroundSet {
        GroundSet {
            labels: s.iter().map(|i| self.labels[i].clone()).collect(),
        }
    }

    /// Concatenation: `self`'s order followed by `other`'s. The label sets
    /// must be disjoint.
    pub fn concat(&self, other: &GroundSet) -> Result<GroundSet, Error> {
        for label in &other.labels {
            if self.labels.contains(label) {
                return Err(Error::LabelCollision {
                    label: label.clone(),
                });
            }
        }
        if self.len() + other.len() > MAX_GROUND_SIZE {
            return Err(Error::GroundTooLarge {
                size: self.len() + other.len(),
            });
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Ok(GroundSet { labels })
    }

    /// Same labels, sorted lexicographically.
    pub fn sorted(&self) -> GroundSet {
        let mut labels = self.labels.clone();
        labels.sort();
        GroundSet { labels }
    }

    pub fn same_label_set(&self, other: &GroundSet) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut a = self.labels.clone();
        let mut b = other.labels.clone();
        a.sort();
        b.sort();
        a == b
    }
}
