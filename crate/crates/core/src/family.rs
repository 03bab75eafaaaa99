//! Indexed families of finite sets, transversals and the Hall condition.

use std::collections::BTreeMap;
use std::fmt;

use crate::dense::{self, BitSet};
use crate::error::{Error, Result};
use crate::set::FiniteSet;
use crate::solver;
use crate::token::Label;

/// Families with at most this many indices are checked by enumerating every
/// index subset; larger ones go through a maximum matching.
pub const EXHAUSTIVE_CAP: usize = 20;

/// A finite map from indices to finite subsets of a declared value universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedFamily<I, E> {
    indices: FiniteSet<I>,
    // aligned with `indices`
    sets: Vec<FiniteSet<E>>,
    universe: FiniteSet<E>,
}

impl<I: Label, E: Label> IndexedFamily<I, E> {
    /// Builds a family whose universe is the union of its sets.
    pub fn new<S>(entries: impl IntoIterator<Item = (I, S)>) -> Result<Self>
    where
        S: IntoIterator<Item = E>,
    {
        let mut pairs: Vec<(I, FiniteSet<E>)> = entries
            .into_iter()
            .map(|(i, s)| (i, FiniteSet::new(s)))
            .collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateIndex(w[0].0.to_string()));
        }
        let universe = pairs.iter().flat_map(|(_, s)| s.iter().cloned()).collect();
        let (indices, sets): (Vec<I>, Vec<FiniteSet<E>>) = pairs.into_iter().unzip();
        Ok(IndexedFamily {
            indices: FiniteSet::from_sorted(indices),
            sets,
            universe,
        })
    }

    /// Builds a family over an explicit universe; members outside it are
    /// rejected.
    pub fn with_universe<S>(
        universe: impl IntoIterator<Item = E>,
        entries: impl IntoIterator<Item = (I, S)>,
    ) -> Result<Self>
    where
        S: IntoIterator<Item = E>,
    {
        let universe = FiniteSet::new(universe);
        let mut family = Self::new(entries)?;
        if let Some(stray) = family.universe.iter().find(|e| !universe.contains(e)) {
            return Err(Error::UnknownElement(stray.to_string()));
        }
        family.universe = universe;
        Ok(family)
    }

    pub(crate) fn from_parts(
        indices: FiniteSet<I>,
        sets: Vec<FiniteSet<E>>,
        universe: FiniteSet<E>,
    ) -> Self {
        debug_assert_eq!(indices.len(), sets.len());
        IndexedFamily {
            indices,
            sets,
            universe,
        }
    }

    pub fn indices(&self) -> &FiniteSet<I> {
        &self.indices
    }

    pub fn universe(&self) -> &FiniteSet<E> {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn set(&self, index: &I) -> Option<&FiniteSet<E>> {
        self.indices.position(index).map(|p| &self.sets[p])
    }

    pub(crate) fn set_at(&self, pos: usize) -> &FiniteSet<E> {
        &self.sets[pos]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&I, &FiniteSet<E>)> {
        self.indices.iter().zip(&self.sets)
    }

    pub(crate) fn positions<'a>(&self, subset: impl IntoIterator<Item = &'a I>) -> Result<Vec<usize>>
    where
        I: 'a,
    {
        subset
            .into_iter()
            .map(|i| {
                self.indices
                    .position(i)
                    .ok_or_else(|| Error::UnknownIndex(i.to_string()))
            })
            .collect()
    }

    /// The union of the sets indexed by `subset`.
    pub fn bind_union<'a>(&self, subset: impl IntoIterator<Item = &'a I>) -> Result<FiniteSet<E>>
    where
        I: 'a,
    {
        let positions = self.positions(subset)?;
        Ok(positions
            .into_iter()
            .flat_map(|p| self.sets[p].iter().cloned())
            .collect())
    }

    /// Each set as a bitset over universe positions.
    pub(crate) fn dense_sets(&self) -> Vec<BitSet> {
        self.sets
            .iter()
            .map(|s| {
                let mut bits = BitSet::new(self.universe.len());
                for e in s {
                    bits.insert(self.universe.position(e).expect("members lie in the universe"));
                }
                bits
            })
            .collect()
    }

    /// Element lists per index as universe positions, ascending.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        self.sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|e| self.universe.position(e).expect("members lie in the universe"))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn subset_from_positions(&self, positions: &[usize]) -> FiniteSet<I> {
        FiniteSet::new(positions.iter().map(|&p| self.indices.as_slice()[p].clone()))
    }

    /// Decides the marriage condition: every index subset J has at least |J|
    /// elements in its union.
    ///
    /// Up to [`EXHAUSTIVE_CAP`] indices every subset is examined, and a
    /// violation is reported by the smallest failing subset (ties broken by
    /// lexicographically least index sequence). Larger families are decided
    /// by a maximum matching and report the alternating-path witness.
    pub fn check_hall_condition(&self) -> HallReport<I> {
        if self.len() <= EXHAUSTIVE_CAP {
            match self.first_exhaustive_violation() {
                Some(w) => HallReport::Violated(w),
                None => HallReport::Satisfied,
            }
        } else {
            match solver::deficiency_witness(self) {
                Some(subset) => {
                    let union_cardinality = self
                        .bind_union(&subset)
                        .expect("witness indices come from the family")
                        .len();
                    HallReport::Violated(HallWitness {
                        subset,
                        union_cardinality,
                    })
                }
                None => HallReport::Satisfied,
            }
        }
    }

    pub(crate) fn first_exhaustive_violation(&self) -> Option<HallWitness<I>> {
        let sets = self.dense_sets();
        dense::first_subset(&sets, 1..=sets.len(), |k, u| u < k).map(|(chosen, union)| HallWitness {
            subset: self.subset_from_positions(&chosen),
            union_cardinality: union.count(),
        })
    }

    /// Checks a candidate choice function. Indices are examined in order;
    /// the first failing clause is reported.
    pub fn verify_transversal(
        &self,
        candidate: &BTreeMap<I, E>,
    ) -> Result<Transversal<I, E>, TransversalViolation<I, E>> {
        let mut owner: BTreeMap<&E, &I> = BTreeMap::new();
        for (index, set) in self.iter() {
            let Some(element) = candidate.get(index) else {
                return Err(TransversalViolation::MissingIndex(index.clone()));
            };
            if !set.contains(element) {
                return Err(TransversalViolation::NotMember {
                    index: index.clone(),
                    element: element.clone(),
                });
            }
            if let Some(earlier) = owner.insert(element, index) {
                return Err(TransversalViolation::Collision(earlier.clone(), index.clone()));
            }
        }
        if let Some(extra) = candidate.keys().find(|i| !self.indices.contains(i)) {
            return Err(TransversalViolation::UnknownIndex(extra.clone()));
        }
        Ok(Transversal {
            assignment: candidate.clone(),
        })
    }
}

/// Index subset whose union is smaller than the subset itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallWitness<I> {
    pub subset: FiniteSet<I>,
    pub union_cardinality: usize,
}

impl<I: Label> HallWitness<I> {
    pub fn subset_cardinality(&self) -> usize {
        self.subset.len()
    }

    /// Recomputes the union against `family` and confirms the deficiency.
    pub fn is_genuine<E: Label>(&self, family: &IndexedFamily<I, E>) -> bool {
        match family.bind_union(&self.subset) {
            Ok(union) => union.len() == self.union_cardinality && self.subset.len() > union.len(),
            Err(_) => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallReport<I> {
    Satisfied,
    Violated(HallWitness<I>),
}

impl<I> HallReport<I> {
    pub fn verdict(&self) -> Verdict {
        match self {
            HallReport::Satisfied => Verdict::Satisfied,
            HallReport::Violated(_) => Verdict::Violated,
        }
    }

    pub fn is_satisfied(&self) -> bool {
        matches!(self, HallReport::Satisfied)
    }

    pub fn witness(&self) -> Option<&HallWitness<I>> {
        match self {
            HallReport::Satisfied => None,
            HallReport::Violated(w) => Some(w),
        }
    }
}

/// An injective choice of one member per index. Only obtainable through
/// [`IndexedFamily::verify_transversal`] or the solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal<I, E> {
    assignment: BTreeMap<I, E>,
}

impl<I: Label, E: Label> Transversal<I, E> {
    pub(crate) fn from_assignment(assignment: BTreeMap<I, E>) -> Self {
        Transversal { assignment }
    }

    pub fn get(&self, index: &I) -> Option<&E> {
        self.assignment.get(index)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&I, &E)> {
        self.assignment.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<I, E> {
        &self.assignment
    }

    pub fn into_map(self) -> BTreeMap<I, E> {
        self.assignment
    }

    /// The same choice on a subset of the indices.
    pub fn restrict(&self, keep: impl Fn(&I) -> bool) -> Self {
        Transversal {
            assignment: self
                .assignment
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, e)| (i.clone(), e.clone()))
                .collect(),
        }
    }
}

/// First clause a candidate transversal breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransversalViolation<I, E> {
    MissingIndex(I),
    UnknownIndex(I),
    NotMember { index: I, element: E },
    Collision(I, I),
}

impl<I: fmt::Display, E: fmt::Display> fmt::Display for TransversalViolation<I, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransversalViolation::MissingIndex(i) => write!(f, "index {i} has no assigned element"),
            TransversalViolation::UnknownIndex(i) => write!(f, "index {i} is not in the family"),
            TransversalViolation::NotMember { index, element } => {
                write!(f, "element {element} is not in the set of index {index}")
            }
            TransversalViolation::Collision(a, b) => {
                write!(f, "indices {a} and {b} share an element")
            }
        }
    }
}
