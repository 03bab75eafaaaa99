//! Systems of distinct representatives and Hall's marriage theorem in its
//! three forms (indexed families, relations, bipartite graphs), the
//! carried-function test for simple graphs, and König's lemma for inverse
//! systems of finite sets with the countable Hall solver it supports.
//!
//! Every operation is generic over its labels ([`Label`]); the aliases below
//! fix them to [`Token`], which is what the JSON formats and the CLI use.

mod dense;
pub mod error;
pub mod family;
pub mod formats;
pub mod graph;
pub mod koenig;
pub mod oracle;
pub mod relation;
pub mod set;
pub mod solver;
pub mod token;

pub use error::{Error, Result};
pub use family::{
    HallReport, HallWitness, IndexedFamily, Transversal, TransversalViolation, Verdict, EXHAUSTIVE_CAP,
};
pub use graph::{
    BipartiteOutcome, CarriedFunction, CarriedOutcome, Coloring, ColoringViolation, EdgePair, GraphMatching,
    MatchingViolation, SimpleGraph,
};
pub use koenig::{infinite_hall_prefix, matching_system, Chain, Generator, InverseSystem, LazyFamily};
pub use relation::FiniteRelation;
pub use set::FiniteSet;
pub use solver::{
    deficiency_witness, find_tight_set, maximum_deficiency_witness, restrict_family, solve, solve_augmenting, solve_inductive, Method,
    SolveOutcome, TightSet, INDUCTIVE_CAP,
};
pub use token::{Label, Token};

pub type Family = IndexedFamily<Token, Token>;
pub type Relation = FiniteRelation<Token, Token>;
pub type Graph = SimpleGraph<Token>;
pub type Bipartition = graph::Bipartition<Token>;
pub type System = InverseSystem<Token>;
pub type Matching = Transversal<Token, Token>;
pub type Witness = HallWitness<Token>;
pub type Outcome = SolveOutcome<Token, Token>;
