use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finite set kept as a strictly increasing vector.
///
/// Because the representation is canonical, derived equality is set equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSet<T> {
    members: Vec<T>,
}

impl<T> FiniteSet<T> {
    pub fn empty() -> Self {
        FiniteSet { members: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.members.iter()
    }

    pub fn first(&self) -> Option<&T> {
        self.members.first()
    }

    pub fn into_vec(self) -> Vec<T> {
        self.members
    }
}

impl<T: Ord> FiniteSet<T> {
    /// Builds a set from arbitrary input, sorting and dropping duplicates.
    pub fn new(items: impl IntoIterator<Item = T>) -> Self {
        let mut members: Vec<T> = items.into_iter().collect();
        members.sort();
        members.dedup();
        FiniteSet { members }
    }

    pub fn singleton(item: T) -> Self {
        FiniteSet { members: vec![item] }
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(members: Vec<T>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        FiniteSet { members }
    }

    pub fn contains(&self, item: &T) -> bool {
        self.members.binary_search(item).is_ok()
    }

    pub fn position(&self, item: &T) -> Option<usize> {
        self.members.binary_search(item).ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }
}

impl<T: Ord + Clone> FiniteSet<T> {
    pub fn union(&self, other: &Self) -> Self {
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        FiniteSet { members: out }
    }

    pub fn difference(&self, other: &Self) -> Self {
        FiniteSet {
            members: self.members.iter().filter(|m| !other.contains(m)).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        FiniteSet {
            members: self.members.iter().filter(|m| other.contains(m)).cloned().collect(),
        }
    }

    pub fn without(&self, item: &T) -> Self {
        FiniteSet {
            members: self.members.iter().filter(|m| *m != item).cloned().collect(),
        }
    }
}

impl<T: Ord> FromIterator<T> for FiniteSet<T> {
    fn from_iter<It: IntoIterator<Item = T>>(iter: It) -> Self {
        FiniteSet::new(iter)
    }
}

impl<T> IntoIterator for FiniteSet<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a FiniteSet<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl<T> Default for FiniteSet<T> {
    fn default() -> Self {
        FiniteSet::empty()
    }
}

impl<T: fmt::Debug> fmt::Debug for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

impl<T: fmt::Display> fmt::Display for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl<T: Serialize> Serialize for FiniteSet<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de> + Ord> Deserialize<'de> for FiniteSet<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<T>::deserialize(deserializer).map(FiniteSet::new)
    }
}
