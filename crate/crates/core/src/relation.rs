//! Hall's theorem for finite relations: a saturating matching of the left
//! side exists iff every left subset relates to at least as many right
//! elements.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::IndexedFamily;
use crate::set::FiniteSet;
use crate::solver::{self, Method, SolveOutcome};
use crate::token::Label;

/// A relation between two declared finite universes, stored as its sorted
/// set of related pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRelation<A, B> {
    left: FiniteSet<A>,
    right: FiniteSet<B>,
    pairs: FiniteSet<(A, B)>,
}

impl<A: Label, B: Label> FiniteRelation<A, B> {
    pub fn new(
        left: impl IntoIterator<Item = A>,
        right: impl IntoIterator<Item = B>,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self> {
        let left = FiniteSet::new(left);
        let right = FiniteSet::new(right);
        let pairs = FiniteSet::new(pairs);
        for (a, b) in &pairs {
            if !left.contains(a) {
                return Err(Error::UnknownIndex(a.to_string()));
            }
            if !right.contains(b) {
                return Err(Error::UnknownElement(b.to_string()));
            }
        }
        Ok(FiniteRelation { left, right, pairs })
    }

    pub fn left(&self) -> &FiniteSet<A> {
        &self.left
    }

    pub fn right(&self) -> &FiniteSet<B> {
        &self.right
    }

    pub fn pairs(&self) -> &FiniteSet<(A, B)> {
        &self.pairs
    }

    pub fn relates(&self, a: &A, b: &B) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    /// Right elements related to some member of `subset`.
    pub fn image_rel<'a>(&self, subset: impl IntoIterator<Item = &'a A>) -> Result<FiniteSet<B>>
    where
        A: 'a,
    {
        let subset = subset
            .into_iter()
            .map(|a| {
                if self.left.contains(a) {
                    Ok(a)
                } else {
                    Err(Error::UnknownIndex(a.to_string()))
                }
            })
            .collect::<Result<FiniteSet<&A>>>()?;
        Ok(self
            .pairs
            .iter()
            .filter(|(a, _)| subset.contains(&a))
            .map(|(_, b)| b.clone())
            .collect())
    }

    /// The family indexed by the left universe whose set at `a` is the image
    /// of `{a}`; its universe is the right universe.
    pub fn family_of_relation(&self) -> IndexedFamily<A, B> {
        let mut grouped: BTreeMap<&A, Vec<B>> = self.left.iter().map(|a| (a, Vec::new())).collect();
        for (a, b) in &self.pairs {
            grouped.get_mut(a).expect("pairs lie in the left universe").push(b.clone());
        }
        IndexedFamily::with_universe(
            self.right.iter().cloned(),
            grouped.into_iter().map(|(a, bs)| (a.clone(), bs)),
        )
        .expect("pairs lie in the declared universes")
    }

    /// Saturating matching of the left universe, or a deficient left subset.
    pub fn solve_relation(&self) -> Result<SolveOutcome<A, B>> {
        self.solve_relation_with(Method::Inductive)
    }

    pub fn solve_relation_with(&self, method: Method) -> Result<SolveOutcome<A, B>> {
        solver::solve(&self.family_of_relation(), method)
    }
}
