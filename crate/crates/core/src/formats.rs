//! JSON documents for families, relations, graphs and inverse systems.
//!
//! ```json
//! {"universe": ["a","b","c"], "family": {"0": ["a","b"], "1": ["b"]}}
//! {"left": ["0","1"], "right": ["a","b"], "pairs": [["0","a"],["1","b"]]}
//! {"vertices": ["u","v"], "edges": [["u","v"]], "colors": {"u": 0, "v": 1}}
//! {"levels": [["a","b"],["a"]], "step": {"a":"a","b":"a"}}
//! ```
//!
//! Object keys are read in order with duplicates preserved, so a repeated
//! index is reported instead of silently overwritten.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};
use thiserror::Error;

use crate::error::Error;
use crate::set::FiniteSet;
use crate::token::Token;
use crate::{Bipartition, Family, Graph, Relation, System};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// Entries of a JSON object in document order, duplicates included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entries<K, V>(pub Vec<(K, V)>);

impl<K: Ord + fmt::Display, V> Entries<K, V> {
    fn into_unique_map(self) -> Result<BTreeMap<K, V>, Error> {
        let mut map = BTreeMap::new();
        for (k, v) in self.0 {
            let shown = k.to_string();
            if map.insert(k, v).is_some() {
                return Err(Error::DuplicateKey(shown));
            }
        }
        Ok(map)
    }
}

impl<'de, K: Deserialize<'de>, V: Deserialize<'de>> Deserialize<'de> for Entries<K, V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor<K, V>(PhantomData<(K, V)>);

        impl<'de, K: Deserialize<'de>, V: Deserialize<'de>> Visitor<'de> for EntriesVisitor<K, V> {
            type Value = Entries<K, V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a JSON object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut entries = Vec::new();
                while let Some(entry) = access.next_entry()? {
                    entries.push(entry);
                }
                Ok(Entries(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor(PhantomData))
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    #[serde(default)]
    pub universe: Option<Vec<Token>>,
    pub family: Entries<Token, Vec<Token>>,
}

impl FamilyDoc {
    pub fn into_family(self) -> Result<Family, Error> {
        match self.universe {
            Some(universe) => Family::with_universe(universe, self.family.0),
            None => Family::new(self.family.0),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub left: Vec<Token>,
    pub right: Vec<Token>,
    pub pairs: Vec<(Token, Token)>,
}

impl RelationDoc {
    pub fn into_relation(self) -> Result<Relation, Error> {
        Relation::new(self.left, self.right, self.pairs)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<Token>,
    pub edges: Vec<(Token, Token)>,
    #[serde(default)]
    pub colors: Option<Entries<Token, Token>>,
}

/// A graph together with the colours its document declared, if any.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub colors: Option<BTreeMap<Token, Token>>,
}

impl ColoredGraph {
    /// Reads the declared colours as a bipartition; they must be 0 or 1.
    pub fn bipartition(&self) -> Result<Bipartition, Error> {
        let colors = self
            .colors
            .as_ref()
            .ok_or_else(|| Error::InvalidColoring("the graph declares no colors".into()))?;
        let mut sides = BTreeMap::new();
        for (v, c) in colors {
            let side = match c {
                Token::Int(0) => 0,
                Token::Int(1) => 1,
                other => {
                    return Err(Error::InvalidColoring(format!(
                        "vertex {v} has color {other}, expected 0 or 1"
                    )))
                }
            };
            sides.insert(v.clone(), side);
        }
        Bipartition::new(&self.graph, &sides)
    }
}

impl GraphDoc {
    pub fn into_graph(self) -> Result<ColoredGraph, Error> {
        let graph = Graph::new(self.vertices, self.edges)?;
        let colors = self.colors.map(Entries::into_unique_map).transpose()?;
        Ok(ColoredGraph { graph, colors })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub levels: Vec<Vec<Token>>,
    pub step: Entries<Token, Token>,
}

impl SystemDoc {
    pub fn into_system(self) -> Result<System, Error> {
        let levels = self.levels.into_iter().map(FiniteSet::new).collect();
        System::new(levels, self.step.into_unique_map()?)
    }
}

pub fn parse_family(text: &str) -> Result<Family, FormatError> {
    Ok(serde_json::from_str::<FamilyDoc>(text)?.into_family()?)
}

pub fn parse_relation(text: &str) -> Result<Relation, FormatError> {
    Ok(serde_json::from_str::<RelationDoc>(text)?.into_relation()?)
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph, FormatError> {
    Ok(serde_json::from_str::<GraphDoc>(text)?.into_graph()?)
}

pub fn parse_system(text: &str) -> Result<System, FormatError> {
    Ok(serde_json::from_str::<SystemDoc>(text)?.into_system()?)
}

/// The family document for `family`, with its universe spelled out.
pub fn family_to_json(family: &Family) -> serde_json::Value {
    let sets: serde_json::Map<String, serde_json::Value> = family
        .iter()
        .map(|(i, s)| (i.to_string(), serde_json::json!(s)))
        .collect();
    serde_json::json!({ "universe": family.universe(), "family": sets })
}
