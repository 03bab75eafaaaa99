//! Naive exhaustive oracles and seeded instance generators.
//!
//! Nothing here shares code with the solvers; the oracles only use the
//! public accessors and validators of the types they inspect.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{IndexedFamily, Transversal};
use crate::graph::{Bipartition, CarriedFunction, EdgePair, SimpleGraph};
use crate::koenig::{Chain, InverseSystem};
use crate::set::FiniteSet;
use crate::token::{Label, Token};

pub const TRANSVERSAL_CAP: usize = 8;
pub const SUBSET_CAP: usize = 20;
pub const CHAIN_PRODUCT_CAP: usize = 100_000;
pub const CARRIED_CAP: usize = 5;

fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

/// Lexicographically least transversal, comparing assignments index by
/// index, found by trying every injective assignment.
pub fn brute_force_transversal<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
) -> Result<Option<Transversal<I, E>>> {
    cap("brute-force index count", family.len(), TRANSVERSAL_CAP)?;
    cap("brute-force universe", family.universe().len(), TRANSVERSAL_CAP)?;
    let sets: Vec<&FiniteSet<E>> = family.iter().map(|(_, s)| s).collect();
    let mut picked: Vec<&E> = Vec::new();
    if !extend(&sets, &mut picked) {
        return Ok(None);
    }
    let candidate: BTreeMap<I, E> = family
        .indices()
        .iter()
        .cloned()
        .zip(picked.into_iter().cloned())
        .collect();
    Ok(family.verify_transversal(&candidate).ok())
}

fn extend<'a, E: Eq>(sets: &[&'a FiniteSet<E>], picked: &mut Vec<&'a E>) -> bool {
    let Some(set) = sets.get(picked.len()) else {
        return true;
    };
    for e in set.iter() {
        if picked.contains(&e) {
            continue;
        }
        picked.push(e);
        if extend(sets, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// Every index subset whose union is smaller than itself, by size and then
/// lexicographically.
pub fn enumerate_subset_violations<I: Label, E: Label>(
    family: &IndexedFamily<I, E>,
) -> Result<Vec<FiniteSet<I>>> {
    cap("subset enumeration index count", family.len(), SUBSET_CAP)?;
    let entries: Vec<(&I, &FiniteSet<E>)> = family.iter().collect();
    let mut out = Vec::new();
    for size in 1..=entries.len() {
        let mut combo = Vec::with_capacity(size);
        combinations(entries.len(), size, 0, &mut combo, &mut |c| {
            let union: BTreeSet<&E> = c.iter().flat_map(|&p| entries[p].1.iter()).collect();
            if union.len() < c.len() {
                out.push(c.iter().map(|&p| entries[p].0.clone()).collect());
            }
        });
    }
    Ok(out)
}

fn combinations(n: usize, k: usize, start: usize, combo: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if combo.len() == k {
        visit(combo);
        return;
    }
    for p in start..n {
        combo.push(p);
        combinations(n, k, p + 1, combo, visit);
        combo.pop();
    }
}

/// Lexicographically least coherent chain among all tuples of the levels'
/// product.
pub fn brute_force_chain<T: Label>(system: &InverseSystem<T>) -> Result<Option<Chain<T>>> {
    let levels = system.levels();
    let product = levels
        .iter()
        .try_fold(1usize, |acc, l| acc.checked_mul(l.len()))
        .unwrap_or(usize::MAX);
    cap("chain product", product, CHAIN_PRODUCT_CAP)?;
    if product == 0 {
        return Ok(None);
    }
    let mut digits = vec![0usize; levels.len()];
    loop {
        let tuple: Vec<&T> = digits.iter().zip(levels).map(|(&d, l)| &l.as_slice()[d]).collect();
        let coherent = tuple
            .windows(2)
            .all(|w| system.step(w[1]) == Some(w[0]));
        if coherent {
            let entries: Vec<T> = tuple.into_iter().cloned().collect();
            return Ok(system.check_chain(&entries).ok());
        }
        if !odometer(&mut digits, |p| levels[p].len()) {
            return Ok(None);
        }
    }
}

/// Advances the last-fastest counter; false after the final value.
fn odometer(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for p in (0..digits.len()).rev() {
        digits[p] += 1;
        if digits[p] < radix(p) {
            return true;
        }
        digits[p] = 0;
    }
    false
}

/// Lexicographically least carried function among all maps sending each
/// vertex to a neighbour.
pub fn brute_force_carried<V: Label>(graph: &SimpleGraph<V>) -> Result<Option<CarriedFunction<V>>> {
    let vertices = graph.vertices().as_slice();
    cap("brute-force vertex count", vertices.len(), CARRIED_CAP)?;
    let options: Vec<Vec<V>> = vertices
        .iter()
        .map(|v| graph.neighbor_set(v).map(|n| n.as_slice().to_vec()))
        .collect::<Result<_>>()?;
    if options.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut digits = vec![0usize; vertices.len()];
    loop {
        let edges: BTreeSet<EdgePair<V>> = vertices
            .iter()
            .zip(&digits)
            .zip(&options)
            .filter_map(|((v, &d), opts)| EdgePair::new(v.clone(), opts[d].clone()))
            .collect();
        if edges.len() == vertices.len() {
            let next: BTreeMap<V, V> = vertices
                .iter()
                .zip(&digits)
                .zip(&options)
                .map(|((v, &d), opts)| (v.clone(), opts[d].clone()))
                .collect();
            return Ok(CarriedFunction::verify(graph, &next).ok());
        }
        if !odometer(&mut digits, |p| options[p].len()) {
            return Ok(None);
        }
    }
}

/// Seed for the instance generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seed(pub u64);

impl Seed {
    fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// Indices `0..indices` over the universe `0..universe`; each pair is
/// included independently with probability `density`.
pub fn random_family(seed: Seed, indices: usize, universe: usize, density: f64) -> IndexedFamily<Token, Token> {
    let mut rng = seed.rng();
    let entries: Vec<(Token, Vec<Token>)> = (0..indices)
        .map(|i| {
            let set = (0..universe)
                .filter(|_| rng.random_bool(density))
                .map(Token::from)
                .collect();
            (Token::from(i), set)
        })
        .collect();
    IndexedFamily::with_universe((0..universe).map(Token::from), entries).expect("generated members lie in the universe")
}

/// A family guaranteed to have a transversal: a random injection of the
/// indices into the universe, plus independent extra members so that the
/// expected set size is about `degree`.
pub fn planted_family(seed: Seed, indices: usize, universe: usize, degree: f64) -> IndexedFamily<Token, Token> {
    assert!(indices <= universe, "a planted transversal needs indices <= universe");
    let mut rng = seed.rng();
    let mut values: Vec<usize> = (0..universe).collect();
    values.shuffle(&mut rng);
    let extra = ((degree - 1.0) / universe as f64).clamp(0.0, 1.0);
    let entries: Vec<(Token, Vec<Token>)> = (0..indices)
        .map(|i| {
            let mut set = vec![values[i]];
            // geometric skips keep this linear in the number of extras
            let mut e = 0usize;
            while extra > 0.0 && e < universe {
                let u: f64 = rng.random();
                e += if extra >= 1.0 { 0 } else { ((1.0 - u).ln() / (1.0 - extra).ln()) as usize };
                if e < universe {
                    set.push(e);
                }
                e += 1;
            }
            (Token::from(i), set.into_iter().map(Token::from).collect())
        })
        .collect();
    IndexedFamily::with_universe((0..universe).map(Token::from), entries).expect("generated members lie in the universe")
}

/// Vertices `0..left` coloured 0 and `left..left + right` coloured 1; each
/// cross pair becomes an edge with probability `density`.
pub fn random_bipartite(
    seed: Seed,
    left: usize,
    right: usize,
    density: f64,
) -> (SimpleGraph<Token>, Bipartition<Token>) {
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for a in 0..left {
        for b in left..left + right {
            if rng.random_bool(density) {
                edges.push((Token::from(a), Token::from(b)));
            }
        }
    }
    let graph = SimpleGraph::new((0..left + right).map(Token::from), edges).expect("generated edges are valid");
    let sides: BTreeMap<Token, u8> = (0..left + right)
        .map(|v| (Token::from(v), u8::from(v >= left)))
        .collect();
    let bipartition = Bipartition::new(&graph, &sides).expect("all edges cross the sides");
    (graph, bipartition)
}
