//! Transversal construction.
//!
//! [`solve_inductive`] follows the classical strong induction on the number
//! of indices: when every proper nonempty index subset has strictly more
//! elements than indices, the least index takes its least element and the
//! rest is solved with that element removed; otherwise a tight subset (one
//! whose union has exactly its size) is solved on its own union, and the
//! remaining indices are solved with that union removed.
//!
//! [`solve_augmenting`] is an independent Hopcroft-Karp maximum matching,
//! which also yields deficiency witnesses for large families.

use std::collections::{BTreeMap, VecDeque};

use crate::dense::{self, BitSet};
use crate::error::{Error, Result};
use crate::family::{HallReport, HallWitness, IndexedFamily, Transversal};
use crate::set::FiniteSet;
use crate::token::Label;

/// Largest family [`solve_inductive`] accepts; the tight-set search is
/// exponential in the number of indices.
pub const INDUCTIVE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Inductive,
    Augmenting,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome<I, E> {
    Matching(Transversal<I, E>),
    Violation(HallWitness<I>),
}

impl<I, E> SolveOutcome<I, E> {
    pub fn matching(&self) -> Option<&Transversal<I, E>> {
        match self {
            SolveOutcome::Matching(t) => Some(t),
            SolveOutcome::Violation(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&HallWitness<I>> {
        match self {
            SolveOutcome::Matching(_) => None,
            SolveOutcome::Violation(w) => Some(w),
        }
    }

    pub fn is_matching(&self) -> bool {
        matches!(self, SolveOutcome::Matching(_))
    }
}

/// Nonempty proper index subset whose union has exactly its cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightSet<I, E> {
    pub subset: FiniteSet<I>,
    pub image: FiniteSet<E>,
}

pub fn solve<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
    method: Method,
) -> Result<SolveOutcome<I, E>> {
    match method {
        Method::Inductive => solve_inductive(family),
        Method::Augmenting => Ok(match solve_augmenting(family) {
            Some(t) => SolveOutcome::Matching(t),
            None => {
                let subset = deficiency_witness(family).expect("unsaturated family has a witness");
                let union_cardinality = family.bind_union(&subset)?.len();
                SolveOutcome::Violation(HallWitness {
                    subset,
                    union_cardinality,
                })
            }
        }),
    }
}

/// Builds a transversal by the strong-induction argument, or returns the
/// minimal violating subset when the Hall condition fails.
///
/// Choices are deterministic: least index, least element, and the tight set
/// that comes first in (size, lex) order.
pub fn solve_inductive<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
) -> Result<SolveOutcome<I, E>> {
    if family.len() > INDUCTIVE_CAP {
        return Err(Error::CapExceeded {
            what: "inductive solver input",
            size: family.len(),
            cap: INDUCTIVE_CAP,
        });
    }
    if let HallReport::Violated(w) = family.check_hall_condition() {
        return Ok(SolveOutcome::Violation(w));
    }

    let mut chosen: Vec<Option<usize>> = vec![None; family.len()];
    let mut work = vec![SubFamily {
        members: (0..family.len()).collect(),
        sets: family.dense_sets(),
    }];
    while let Some(sub) = work.pop() {
        match sub.members.len() {
            0 => {}
            1 => {
                let b = sub.sets[0].first().expect("Hall condition gives a nonempty set");
                chosen[sub.members[0]] = Some(b);
            }
            m => match dense::first_subset(&sub.sets, 1..=m - 1, |k, u| u == k) {
                None => {
                    // every proper subset has slack: fix the least index on its least element
                    let b = sub.sets[0].first().expect("Hall condition gives a nonempty set");
                    chosen[sub.members[0]] = Some(b);
                    let mut removed = BitSet::new(family.universe().len());
                    removed.insert(b);
                    work.push(sub.split(1..m, &removed));
                }
                Some((tight, image)) => {
                    let rest: Vec<usize> = (0..m).filter(|p| !tight.contains(p)).collect();
                    work.push(sub.split(rest, &image));
                    work.push(sub.split(tight, &BitSet::new(family.universe().len())));
                }
            },
        }
    }

    let universe = family.universe().as_slice();
    let assignment = family
        .indices()
        .iter()
        .zip(chosen)
        .map(|(i, b)| (i.clone(), universe[b.expect("every index is assigned")].clone()))
        .collect();
    Ok(SolveOutcome::Matching(Transversal::from_assignment(assignment)))
}

struct SubFamily {
    // positions in the original family, ascending
    members: Vec<usize>,
    sets: Vec<BitSet>,
}

impl SubFamily {
    fn split(&self, keep: impl IntoIterator<Item = usize>, forbid: &BitSet) -> SubFamily {
        let (members, sets) = keep
            .into_iter()
            .map(|p| {
                let mut s = self.sets[p].clone();
                s.difference_with(forbid);
                (self.members[p], s)
            })
            .unzip();
        SubFamily { members, sets }
    }
}

/// The (size, lex)-least tight set, or `None` when every proper nonempty
/// subset has strictly more elements than indices.
///
/// Requires at least two indices and a family satisfying the Hall condition.
pub fn find_tight_set<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
) -> Result<Option<TightSet<I, E>>> {
    if family.len() < 2 {
        return Err(Error::TooFewIndices {
            needed: 2,
            got: family.len(),
        });
    }
    if family.len() > INDUCTIVE_CAP {
        return Err(Error::CapExceeded {
            what: "tight-set search input",
            size: family.len(),
            cap: INDUCTIVE_CAP,
        });
    }
    if let HallReport::Violated(w) = family.check_hall_condition() {
        return Err(Error::PreconditionViolated(w.subset.to_string()));
    }
    let sets = family.dense_sets();
    let universe = family.universe().as_slice();
    Ok(
        dense::first_subset(&sets, 1..=sets.len() - 1, |k, u| u == k).map(|(chosen, image)| {
            TightSet {
                subset: family.subset_from_positions(&chosen),
                image: FiniteSet::new(image.iter().map(|b| universe[b].clone())),
            }
        }),
    )
}

/// The family on `keep` with `forbid` removed from every set and from the
/// universe.
pub fn restrict_family<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
    keep: &FiniteSet<I>,
    forbid: &FiniteSet<E>,
) -> Result<IndexedFamily<I, E>> {
    let positions = family.positions(keep)?;
    let sets = positions
        .iter()
        .map(|&p| family.set_at(p).difference(forbid))
        .collect();
    Ok(IndexedFamily::from_parts(
        keep.clone(),
        sets,
        family.universe().difference(forbid),
    ))
}

/// Maximum bipartite matching between index positions and element positions.
pub(crate) struct MaximumMatching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

const UNREACHED: usize = usize::MAX;

/// Hopcroft-Karp. Neighbours are tried in the order given, so the result is
/// a deterministic function of `adj`.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], right_len: usize) -> MaximumMatching {
    let n = adj.len();
    let mut left: Vec<Option<usize>> = vec![None; n];
    let mut right: Vec<Option<usize>> = vec![None; right_len];
    let mut dist = vec![UNREACHED; n];
    let mut next_edge = vec![0usize; n];
    let mut queue = VecDeque::new();
    let mut stack = Vec::new();

    loop {
        queue.clear();
        for u in 0..n {
            if left[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = UNREACHED;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &r in &adj[u] {
                match right[r] {
                    None => found = true,
                    Some(w) if dist[w] == UNREACHED => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }

        next_edge.iter_mut().for_each(|e| *e = 0);
        for root in 0..n {
            if left[root].is_some() || dist[root] != 0 {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                if next_edge[u] == adj[u].len() {
                    dist[u] = UNREACHED;
                    stack.pop();
                    continue;
                }
                let r = adj[u][next_edge[u]];
                next_edge[u] += 1;
                match right[r] {
                    None => {
                        // each stack entry leaves through the edge just before its cursor
                        for &x in &stack {
                            let via = adj[x][next_edge[x] - 1];
                            left[x] = Some(via);
                            right[via] = Some(x);
                        }
                        for &x in &stack {
                            dist[x] = UNREACHED;
                        }
                        break;
                    }
                    Some(w) if dist[w] != UNREACHED && dist[w] == dist[u] + 1 => stack.push(w),
                    Some(_) => {}
                }
            }
        }
    }
    MaximumMatching { left, right }
}

/// Transversal from a maximum matching, or `None` when some index stays
/// unmatched.
pub fn solve_augmenting<I: Label, E: Label>(family: &IndexedFamily<I, E>) -> Option<Transversal<I, E>> {
    let matching = hopcroft_karp(&family.adjacency(), family.universe().len());
    let universe = family.universe().as_slice();
    let assignment: Option<BTreeMap<I, E>> = family
        .indices()
        .iter()
        .zip(&matching.left)
        .map(|(i, r)| r.map(|r| (i.clone(), universe[r].clone())))
        .collect();
    assignment.map(Transversal::from_assignment)
}

/// Indices reachable by alternating paths from the least unmatched index of
/// a maximum matching. Every element they reach is matched back into the
/// set, so the union is one smaller than the subset.
pub fn deficiency_witness<I: Label, E: Label>(family: &IndexedFamily<I, E>) -> Option<FiniteSet<I>> {
    let adj = family.adjacency();
    let matching = hopcroft_karp(&adj, family.universe().len());
    let root = matching.left.iter().position(Option::is_none)?;
    let reached = alternating_reach(&adj, &matching, [root]);
    Some(family.subset_from_positions(&reached))
}

/// Indices reachable by alternating paths from every unmatched index of a
/// maximum matching.
///
/// Its deficiency (subset size minus union size) equals the number of
/// indices no matching can cover, the largest possible; it is also the
/// union of all such maximum-deficiency subsets, so it does not depend on
/// which maximum matching was found.
pub fn maximum_deficiency_witness<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
) -> Option<FiniteSet<I>> {
    let adj = family.adjacency();
    let matching = hopcroft_karp(&adj, family.universe().len());
    let roots: Vec<usize> = (0..adj.len()).filter(|&p| matching.left[p].is_none()).collect();
    if roots.is_empty() {
        return None;
    }
    let reached = alternating_reach(&adj, &matching, roots);
    Some(family.subset_from_positions(&reached))
}

fn alternating_reach(
    adj: &[Vec<usize>],
    matching: &MaximumMatching,
    roots: impl IntoIterator<Item = usize>,
) -> Vec<usize> {
    let mut seen_left = vec![false; adj.len()];
    let mut seen_right = vec![false; matching.right.len()];
    let mut queue: VecDeque<usize> = roots.into_iter().collect();
    for &r in &queue {
        seen_left[r] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &r in &adj[u] {
            if std::mem::replace(&mut seen_right[r], true) {
                continue;
            }
            let w = matching.right[r].expect("a maximum matching has no augmenting path");
            if !std::mem::replace(&mut seen_left[w], true) {
                queue.push_back(w);
            }
        }
    }
    (0..adj.len()).filter(|&p| seen_left[p]).collect()
}
