//! Simple graphs over a finite vertex universe: neighbourhoods, colourings,
//! bipartitions, edge matchings, the bipartite form of Hall's theorem and
//! the carried-function test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::family::IndexedFamily;
use crate::relation::FiniteRelation;
use crate::set::FiniteSet;
use crate::solver::{self, Method, SolveOutcome};
use crate::token::Label;

/// Unordered pair of distinct vertices, stored smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePair<V> {
    low: V,
    high: V,
}

impl<V: Ord> EdgePair<V> {
    /// `None` for a loop.
    pub fn new(a: V, b: V) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(EdgePair { low: a, high: b }),
            std::cmp::Ordering::Greater => Some(EdgePair { low: b, high: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn low(&self) -> &V {
        &self.low
    }

    pub fn high(&self) -> &V {
        &self.high
    }

    pub fn contains(&self, v: &V) -> bool {
        self.low == *v || self.high == *v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: &V) -> Option<&V> {
        if self.low == *v {
            Some(&self.high)
        } else if self.high == *v {
            Some(&self.low)
        } else {
            None
        }
    }
}

impl<V: fmt::Display> fmt::Display for EdgePair<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}", self.low, self.high)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph<V> {
    vertices: FiniteSet<V>,
    edges: FiniteSet<EdgePair<V>>,
    // aligned with `vertices`
    neighbors: Vec<FiniteSet<V>>,
}

impl<V: Label> SimpleGraph<V> {
    /// Reversed and repeated edges collapse; loops and edges leaving the
    /// vertex set are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (V, V)>,
    ) -> Result<Self> {
        let vertices = FiniteSet::new(vertices);
        let mut pairs = Vec::new();
        for (a, b) in edges {
            for v in [&a, &b] {
                if !vertices.contains(v) {
                    return Err(Error::UnknownVertex(v.to_string()));
                }
            }
            let loop_vertex = a.to_string();
            pairs.push(EdgePair::new(a, b).ok_or(Error::SelfLoop(loop_vertex))?);
        }
        let edges = FiniteSet::new(pairs);
        let mut adjacency: Vec<Vec<V>> = vec![Vec::new(); vertices.len()];
        for e in &edges {
            let lo = vertices.position(e.low()).expect("checked above");
            let hi = vertices.position(e.high()).expect("checked above");
            adjacency[lo].push(e.high().clone());
            adjacency[hi].push(e.low().clone());
        }
        Ok(SimpleGraph {
            vertices,
            edges,
            neighbors: adjacency.into_iter().map(FiniteSet::new).collect(),
        })
    }

    pub fn vertices(&self) -> &FiniteSet<V> {
        &self.vertices
    }

    pub fn edges(&self) -> &FiniteSet<EdgePair<V>> {
        &self.edges
    }

    pub fn adjacent(&self, v: &V, w: &V) -> bool {
        match EdgePair::new(v.clone(), w.clone()) {
            Some(e) => self.edges.contains(&e),
            None => false,
        }
    }

    fn position(&self, v: &V) -> Result<usize> {
        self.vertices
            .position(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn neighbor_set(&self, v: &V) -> Result<&FiniteSet<V>> {
        Ok(&self.neighbors[self.position(v)?])
    }

    pub fn degree(&self, v: &V) -> Result<usize> {
        self.neighbor_set(v).map(FiniteSet::len)
    }

    /// Vertices adjacent to at least one member of `subset`.
    pub fn neighbor_set_image<'a>(&self, subset: impl IntoIterator<Item = &'a V>) -> Result<FiniteSet<V>>
    where
        V: 'a,
    {
        let mut out = BTreeSet::new();
        for v in subset {
            out.extend(self.neighbor_set(v)?.iter().cloned());
        }
        Ok(FiniteSet::new(out))
    }

    /// Edges containing `v`.
    pub fn incidence_set(&self, v: &V) -> Result<FiniteSet<EdgePair<V>>> {
        Ok(self
            .neighbor_set(v)?
            .iter()
            .map(|w| EdgePair::new(v.clone(), w.clone()).expect("graphs have no loops"))
            .collect())
    }

    /// The family sending each vertex to its incidence set, over the edge
    /// universe.
    pub fn incidence_family(&self) -> IndexedFamily<V, EdgePair<V>> {
        IndexedFamily::with_universe(
            self.edges.iter().cloned(),
            self.vertices
                .iter()
                .map(|v| (v.clone(), self.incidence_set(v).expect("own vertex"))),
        )
        .expect("incident edges are edges")
    }

    /// Accepts a total colouring with no monochromatic edge. Missing or
    /// foreign vertices are reported first, then the least offending edge.
    pub fn validate_coloring<C: Label>(
        &self,
        colors: &BTreeMap<V, C>,
    ) -> Result<Coloring<V, C>, ColoringViolation<V, C>> {
        if let Some(v) = self.vertices.iter().find(|v| !colors.contains_key(v)) {
            return Err(ColoringViolation::MissingVertex(v.clone()));
        }
        if let Some(v) = colors.keys().find(|v| !self.vertices.contains(v)) {
            return Err(ColoringViolation::UnknownVertex(v.clone()));
        }
        for e in &self.edges {
            if colors[e.low()] == colors[e.high()] {
                return Err(ColoringViolation::Monochromatic {
                    edge: e.clone(),
                    color: colors[e.low()].clone(),
                });
            }
        }
        Ok(Coloring {
            colors: colors.clone(),
        })
    }

    /// Accepts a set of graph edges that pairwise share no vertex.
    pub fn validate_matching(
        &self,
        edges: impl IntoIterator<Item = EdgePair<V>>,
    ) -> Result<GraphMatching<V>, MatchingViolation<V>> {
        let edges = FiniteSet::new(edges);
        let mut covered = BTreeSet::new();
        for e in &edges {
            if !self.edges.contains(e) {
                return Err(MatchingViolation::NotAnEdge(e.clone()));
            }
            for v in [e.low(), e.high()] {
                if !covered.insert(v) {
                    return Err(MatchingViolation::SharedVertex(v.clone()));
                }
            }
        }
        Ok(GraphMatching { edges })
    }

    /// Matching saturating colour class 0, or a subset of class 0 with a
    /// smaller neighbourhood. The reported subset has the largest possible
    /// deficiency, so `|subset| - |neighborhood|` class-0 vertices must stay
    /// unmatched in any matching.
    pub fn hall_bipartite(&self, bipartition: &Bipartition<V>) -> Result<BipartiteOutcome<V>> {
        self.hall_bipartite_with(bipartition, Method::Inductive)
    }

    pub fn hall_bipartite_with(
        &self,
        bipartition: &Bipartition<V>,
        method: Method,
    ) -> Result<BipartiteOutcome<V>> {
        bipartition.check_against(self)?;
        let left = bipartition.color_set(0);
        let right = bipartition.color_set(1);
        let pairs = self.edges.iter().map(|e| {
            if left.contains(e.low()) {
                (e.low().clone(), e.high().clone())
            } else {
                (e.high().clone(), e.low().clone())
            }
        });
        let relation = FiniteRelation::new(left.clone(), right, pairs)?;
        Ok(match relation.solve_relation_with(method)? {
            SolveOutcome::Matching(f) => {
                let edges = f
                    .iter()
                    .map(|(a, b)| EdgePair::new(a.clone(), b.clone()).expect("classes are disjoint"));
                let matching = self
                    .validate_matching(edges)
                    .expect("an injective relation matching is a graph matching");
                debug_assert!(matching.saturates(&left));
                BipartiteOutcome::Matching(matching)
            }
            SolveOutcome::Violation(_) => {
                let subset = solver::maximum_deficiency_witness(&relation.family_of_relation())
                    .expect("a failed Hall condition leaves an index unmatched");
                BipartiteOutcome::Violation {
                    neighborhood: self.neighbor_set_image(&subset)?,
                    subset,
                }
            }
        })
    }

    /// A self-map sending every vertex to a neighbour through pairwise
    /// distinct edges, found as a transversal of the incidence family; on
    /// failure, a vertex set touching fewer edges than it has vertices (of
    /// largest deficiency, as in [`SimpleGraph::hall_bipartite`]).
    pub fn find_carried_function(&self) -> Result<CarriedOutcome<V>> {
        self.find_carried_function_with(Method::Inductive)
    }

    pub fn find_carried_function_with(&self, method: Method) -> Result<CarriedOutcome<V>> {
        let family = self.incidence_family();
        Ok(match solver::solve(&family, method)? {
            SolveOutcome::Matching(t) => {
                let next = t
                    .iter()
                    .map(|(v, e)| (v.clone(), e.other(v).expect("incident edge").clone()))
                    .collect();
                CarriedOutcome::Carried(
                    CarriedFunction::verify(self, &next).expect("distinct incident edges carry a function"),
                )
            }
            SolveOutcome::Violation(_) => {
                let subset = solver::maximum_deficiency_witness(&family)
                    .expect("a failed Hall condition leaves a vertex unmatched");
                CarriedOutcome::Violation {
                    incident_edges: family.bind_union(&subset)?.len(),
                    subset,
                }
            }
        })
    }
}

/// A total vertex colouring in which adjacent vertices differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring<V, C> {
    colors: BTreeMap<V, C>,
}

impl<V: Label, C: Label> Coloring<V, C> {
    pub fn color(&self, v: &V) -> Option<&C> {
        self.colors.get(v)
    }

    pub fn as_map(&self) -> &BTreeMap<V, C> {
        &self.colors
    }

    /// Preimage of `c`.
    pub fn color_set(&self, c: &C) -> FiniteSet<V> {
        self.colors
            .iter()
            .filter(|(_, k)| *k == c)
            .map(|(v, _)| v.clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringViolation<V, C> {
    MissingVertex(V),
    UnknownVertex(V),
    Monochromatic { edge: EdgePair<V>, color: C },
}

impl<V: fmt::Display, C: fmt::Display> fmt::Display for ColoringViolation<V, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringViolation::MissingVertex(v) => write!(f, "vertex {v} has no color"),
            ColoringViolation::UnknownVertex(v) => write!(f, "colored vertex {v} is not in the graph"),
            ColoringViolation::Monochromatic { edge, color } => {
                write!(f, "edge {edge} has both endpoints colored {color}")
            }
        }
    }
}

/// A proper colouring with colours drawn from {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition<V> {
    coloring: Coloring<V, u8>,
}

impl<V: Label> Bipartition<V> {
    pub fn new(graph: &SimpleGraph<V>, sides: &BTreeMap<V, u8>) -> Result<Self> {
        if let Some((v, c)) = sides.iter().find(|(_, &c)| c > 1) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c}, expected 0 or 1"
            )));
        }
        let coloring = graph
            .validate_coloring(sides)
            .map_err(|violation| Error::InvalidColoring(violation.to_string()))?;
        Ok(Bipartition { coloring })
    }

    pub fn side(&self, v: &V) -> Option<u8> {
        self.coloring.color(v).copied()
    }

    pub fn color_set(&self, side: u8) -> FiniteSet<V> {
        self.coloring.color_set(&side)
    }

    pub fn coloring(&self) -> &Coloring<V, u8> {
        &self.coloring
    }

    fn check_against(&self, graph: &SimpleGraph<V>) -> Result<()> {
        graph
            .validate_coloring(self.coloring.as_map())
            .map(drop)
            .map_err(|violation| Error::InvalidColoring(violation.to_string()))
    }
}

/// Pairwise vertex-disjoint edges of some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMatching<V> {
    edges: FiniteSet<EdgePair<V>>,
}

impl<V: Label> GraphMatching<V> {
    pub fn edges(&self) -> &FiniteSet<EdgePair<V>> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn partner(&self, v: &V) -> Option<&V> {
        self.edges.iter().find_map(|e| e.other(v))
    }

    /// First member of `subset` not covered by a matching edge.
    pub fn first_unsaturated<'a>(&self, subset: impl IntoIterator<Item = &'a V>) -> Option<&'a V>
    where
        V: 'a,
    {
        subset.into_iter().find(|v| self.partner(v).is_none())
    }

    pub fn saturates<'a>(&self, subset: impl IntoIterator<Item = &'a V>) -> bool
    where
        V: 'a,
    {
        self.first_unsaturated(subset).is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingViolation<V> {
    NotAnEdge(EdgePair<V>),
    SharedVertex(V),
}

impl<V: fmt::Display> fmt::Display for MatchingViolation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingViolation::NotAnEdge(e) => write!(f, "{e} is not an edge of the graph"),
            MatchingViolation::SharedVertex(v) => write!(f, "vertex {v} lies on two matching edges"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteOutcome<V> {
    Matching(GraphMatching<V>),
    Violation {
        subset: FiniteSet<V>,
        neighborhood: FiniteSet<V>,
    },
}

impl<V> BipartiteOutcome<V> {
    pub fn is_matching(&self) -> bool {
        matches!(self, BipartiteOutcome::Matching(_))
    }
}

/// A map sending each vertex to a neighbour such that the edges
/// `{v, next(v)}` are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarriedFunction<V> {
    next: BTreeMap<V, V>,
}

impl<V: Label> CarriedFunction<V> {
    pub fn verify(graph: &SimpleGraph<V>, next: &BTreeMap<V, V>) -> Result<Self, CarriedViolation<V>> {
        for v in graph.vertices() {
            let Some(w) = next.get(v) else {
                return Err(CarriedViolation::MissingVertex(v.clone()));
            };
            if !graph.adjacent(v, w) {
                return Err(CarriedViolation::NotAdjacent(v.clone(), w.clone()));
            }
            // {v, w} is reused exactly when w maps back to v
            if next.get(w) == Some(v) {
                return Err(CarriedViolation::SharedEdge(v.clone(), w.clone()));
            }
        }
        if let Some(v) = next.keys().find(|v| !graph.vertices().contains(v)) {
            return Err(CarriedViolation::UnknownVertex(v.clone()));
        }
        Ok(CarriedFunction { next: next.clone() })
    }

    pub fn next(&self, v: &V) -> Option<&V> {
        self.next.get(v)
    }

    pub fn as_map(&self) -> &BTreeMap<V, V> {
        &self.next
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarriedViolation<V> {
    MissingVertex(V),
    UnknownVertex(V),
    NotAdjacent(V, V),
    SharedEdge(V, V),
}

impl<V: fmt::Display> fmt::Display for CarriedViolation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarriedViolation::MissingVertex(v) => write!(f, "vertex {v} has no image"),
            CarriedViolation::UnknownVertex(v) => write!(f, "mapped vertex {v} is not in the graph"),
            CarriedViolation::NotAdjacent(v, w) => write!(f, "{v} is not adjacent to its image {w}"),
            CarriedViolation::SharedEdge(v, w) => write!(f, "{v} and {w} map to each other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarriedOutcome<V> {
    Carried(CarriedFunction<V>),
    Violation {
        subset: FiniteSet<V>,
        incident_edges: usize,
    },
}

impl<V> CarriedOutcome<V> {
    pub fn is_carried(&self) -> bool {
        matches!(self, CarriedOutcome::Carried(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vs: &[char], es: &[(char, char)]) -> SimpleGraph<char> {
        SimpleGraph::new(vs.iter().copied(), es.iter().copied()).unwrap()
    }

    fn k3() -> SimpleGraph<char> {
        graph(&['u', 'v', 'w'], &[('u', 'v'), ('v', 'w'), ('u', 'w')])
    }

    fn path() -> SimpleGraph<char> {
        graph(&['u', 'v', 'w'], &[('u', 'v'), ('v', 'w')])
    }

    fn set(vs: &[char]) -> FiniteSet<char> {
        FiniteSet::new(vs.iter().copied())
    }

    fn edge(a: char, b: char) -> EdgePair<char> {
        EdgePair::new(a, b).unwrap()
    }

    #[test]
    fn edge_pairs_are_unordered() {
        assert_eq!(EdgePair::new(2, 1), EdgePair::new(1, 2));
        assert_eq!(EdgePair::new(3, 3), None);
        assert_eq!(edge('b', 'a').other(&'a'), Some(&'b'));
        assert_eq!(edge('a', 'b').to_string(), "a~b");
    }

    #[test]
    fn make_graph_examples() {
        let g = graph(&['u', 'v'], &[('u', 'v'), ('v', 'u')]);
        assert_eq!(g.edges().as_slice(), [edge('u', 'v')]);
        assert_eq!(
            SimpleGraph::new(['u'], [('u', 'u')]),
            Err(Error::SelfLoop("u".into()))
        );
        assert_eq!(
            SimpleGraph::new(['u'], [('u', 'x')]),
            Err(Error::UnknownVertex("x".into()))
        );
        assert_eq!(k3().edges().len(), 3);
    }

    #[test]
    fn neighbor_examples() {
        let g = graph(&['u', 'v', 'x'], &[('u', 'v')]);
        assert!(g.neighbor_set(&'x').unwrap().is_empty());
        assert_eq!(k3().neighbor_set(&'u').unwrap(), &set(&['v', 'w']));
        assert_eq!(path().neighbor_set(&'v').unwrap(), &set(&['u', 'w']));
        assert_eq!(path().degree(&'v').unwrap(), 2);
        assert_eq!(path().neighbor_set(&'z'), Err(Error::UnknownVertex("z".into())));

        assert!(k3().neighbor_set_image(&[]).unwrap().is_empty());
        assert_eq!(k3().neighbor_set_image(&['u']).unwrap(), set(&['v', 'w']));
        assert_eq!(path().neighbor_set_image(&['u', 'w']).unwrap(), set(&['v']));
    }

    #[test]
    fn coloring_examples() {
        let edgeless = graph(&['a', 'b'], &[]);
        let constant: BTreeMap<char, u8> = [('a', 0), ('b', 0)].into();
        assert!(edgeless.validate_coloring(&constant).is_ok());

        let two: BTreeMap<char, u8> = [('u', 0), ('v', 1), ('w', 0)].into();
        assert_eq!(
            k3().validate_coloring(&two),
            Err(ColoringViolation::Monochromatic { edge: edge('u', 'w'), color: 0 })
        );
        let c = path().validate_coloring(&two).unwrap();
        assert_eq!(c.color_set(&0), set(&['u', 'w']));

        let partial: BTreeMap<char, u8> = [('u', 0)].into();
        assert_eq!(path().validate_coloring(&partial), Err(ColoringViolation::MissingVertex('v')));
    }

    #[test]
    fn bipartition_rejects_bad_colors() {
        let three: BTreeMap<char, u8> = [('u', 0), ('v', 2), ('w', 0)].into();
        assert!(matches!(Bipartition::new(&path(), &three), Err(Error::InvalidColoring(_))));
        let mono: BTreeMap<char, u8> = [('u', 0), ('v', 0), ('w', 1)].into();
        let err = Bipartition::new(&path(), &mono).unwrap_err();
        assert_eq!(err, Error::InvalidColoring("edge u~v has both endpoints colored 0".into()));
    }

    #[test]
    fn matching_examples() {
        assert!(path().validate_matching([]).is_ok());
        assert_eq!(
            path().validate_matching([edge('u', 'v'), edge('v', 'w')]),
            Err(MatchingViolation::SharedVertex('v'))
        );
        assert_eq!(
            path().validate_matching([edge('u', 'w')]),
            Err(MatchingViolation::NotAnEdge(edge('u', 'w')))
        );
        let c4 = graph(&['a', 'b', 'c', 'd'], &[('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')]);
        let m = c4.validate_matching([edge('a', 'b'), edge('c', 'd')]).unwrap();
        assert!(m.saturates(c4.vertices()));
    }

    #[test]
    fn saturation_examples() {
        let g = graph(&['u', 'v'], &[('u', 'v')]);
        let m = g.validate_matching([edge('u', 'v')]).unwrap();
        assert!(m.saturates(&[]));
        assert!(m.saturates(&['u', 'v']));
        let none = g.validate_matching([]).unwrap();
        assert_eq!(none.first_unsaturated(&['u']), Some(&'u'));
    }

    #[test]
    fn hall_bipartite_examples() {
        let edgeless = graph(&['a', 'b'], &[]);
        let all_one = Bipartition::new(&edgeless, &[('a', 1), ('b', 1)].into()).unwrap();
        match edgeless.hall_bipartite(&all_one).unwrap() {
            BipartiteOutcome::Matching(m) => assert!(m.is_empty()),
            other => panic!("{other:?}"),
        }

        let single = graph(&['u', 'v'], &[('u', 'v')]);
        let b = Bipartition::new(&single, &[('u', 0), ('v', 1)].into()).unwrap();
        match single.hall_bipartite(&b).unwrap() {
            BipartiteOutcome::Matching(m) => assert_eq!(m.edges().as_slice(), [edge('u', 'v')]),
            other => panic!("{other:?}"),
        }

        let star = graph(&['c', 'x', 'y', 'z'], &[('c', 'x'), ('c', 'y'), ('c', 'z')]);
        let b = Bipartition::new(&star, &[('c', 1), ('x', 0), ('y', 0), ('z', 0)].into()).unwrap();
        match star.hall_bipartite(&b).unwrap() {
            BipartiteOutcome::Violation { subset, neighborhood } => {
                assert_eq!(subset, set(&['x', 'y', 'z']));
                assert_eq!(neighborhood, set(&['c']));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hall_bipartite_rechecks_foreign_bipartition() {
        let single = graph(&['u', 'v'], &[('u', 'v')]);
        let b = Bipartition::new(&single, &[('u', 0), ('v', 1)].into()).unwrap();
        let other = graph(&['u', 'v', 'w'], &[('u', 'v')]);
        assert!(matches!(other.hall_bipartite(&b), Err(Error::InvalidColoring(_))));
    }

    #[test]
    fn carried_examples() {
        let empty = graph(&[], &[]);
        match empty.find_carried_function().unwrap() {
            CarriedOutcome::Carried(f) => assert!(f.as_map().is_empty()),
            other => panic!("{other:?}"),
        }

        let single = graph(&['u', 'v'], &[('u', 'v')]);
        match single.find_carried_function().unwrap() {
            CarriedOutcome::Violation { subset, incident_edges } => {
                assert_eq!(subset, set(&['u', 'v']));
                assert_eq!(incident_edges, 1);
            }
            other => panic!("{other:?}"),
        }

        match k3().find_carried_function().unwrap() {
            CarriedOutcome::Carried(f) => {
                let images: FiniteSet<char> = f.as_map().values().copied().collect();
                assert_eq!(images.len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn carried_verification_clauses() {
        let g = path();
        let back_and_forth: BTreeMap<char, char> = [('u', 'v'), ('v', 'u'), ('w', 'v')].into();
        assert_eq!(
            CarriedFunction::verify(&g, &back_and_forth),
            Err(CarriedViolation::SharedEdge('u', 'v'))
        );
        let far: BTreeMap<char, char> = [('u', 'w'), ('v', 'u'), ('w', 'v')].into();
        assert_eq!(CarriedFunction::verify(&g, &far), Err(CarriedViolation::NotAdjacent('u', 'w')));
    }
}
