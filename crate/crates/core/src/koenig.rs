//! Inverse systems of finite sets over a finite horizon, and the countable
//! Hall solver built on them.
//!
//! A system has levels `X_0, ..., X_H` and a single step map sending
//! `X_{n+1}` into `X_n`. A chain picks one element per level, each the step
//! of the next. Chains are found by first keeping only the elements that
//! lift all the way to level `H` (after which every step between
//! consecutive levels is onto) and then lifting the least surviving element
//! of `X_0` one level at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::IndexedFamily;
use crate::set::FiniteSet;
use crate::solver::{self, Method, SolveOutcome, INDUCTIVE_CAP};
use crate::token::{Label, Token};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSystem<T> {
    levels: Vec<FiniteSet<T>>,
    step: BTreeMap<T, T>,
}

impl<T: Label> InverseSystem<T> {
    /// Validates that the step sends every element of each level into the
    /// level below.
    pub fn new(levels: Vec<FiniteSet<T>>, step: BTreeMap<T, T>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::NoLevels);
        }
        for n in 0..levels.len() - 1 {
            for x in &levels[n + 1] {
                match step.get(x) {
                    None => {
                        return Err(Error::StepUndefined {
                            level: n + 1,
                            element: x.to_string(),
                        })
                    }
                    Some(y) if !levels[n].contains(y) => {
                        return Err(Error::FpropViolation {
                            level: n,
                            element: x.to_string(),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(InverseSystem { levels, step })
    }

    /// Index of the last level.
    pub fn horizon(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[FiniteSet<T>] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> Option<&FiniteSet<T>> {
        self.levels.get(n)
    }

    pub fn step(&self, x: &T) -> Option<&T> {
        self.step.get(x)
    }

    pub fn step_map(&self) -> &BTreeMap<T, T> {
        &self.step
    }

    fn image(&self, set: &FiniteSet<T>) -> FiniteSet<T> {
        set.iter()
            .map(|x| self.step[x].clone())
            .collect()
    }

    /// Elements of level `n` that are the `k`-fold step of something in
    /// level `n + k`.
    pub fn extendable_set(&self, n: usize, k: usize) -> Result<FiniteSet<T>> {
        if n + k > self.horizon() {
            return Err(Error::HorizonExceeded {
                level: n,
                lookahead: k,
                horizon: self.horizon(),
            });
        }
        Ok((0..k).fold(self.levels[n + k].clone(), |set, _| self.image(&set)))
    }

    /// Restricts every level to the elements extendable up to the horizon.
    pub fn prune_to_extendable(&self) -> InverseSystem<T> {
        let h = self.horizon();
        // walking down from the horizon: X'_H = X_H, X'_n = step(X'_{n+1})
        let mut levels = vec![FiniteSet::empty(); h + 1];
        levels[h] = self.levels[h].clone();
        for n in (0..h).rev() {
            levels[n] = self.image(&levels[n + 1]);
        }
        let step = levels[1..]
            .iter()
            .flatten()
            .map(|x| (x.clone(), self.step[x].clone()))
            .collect();
        InverseSystem { levels, step }
    }

    /// Whether each step maps level `n + 1` onto level `n`.
    pub fn is_surjective(&self) -> bool {
        (0..self.horizon()).all(|n| self.image(&self.levels[n + 1]) == self.levels[n])
    }

    /// A chain through all levels, or `None` when some level is empty.
    pub fn find_chain(&self) -> Option<Chain<T>> {
        let pruned = self.prune_to_extendable();
        if pruned.levels.iter().any(FiniteSet::is_empty) {
            return None;
        }
        let mut entries = vec![pruned.levels[0].first()?.clone()];
        for n in 0..pruned.horizon() {
            let below = entries.last().expect("nonempty");
            let lift = pruned.levels[n + 1]
                .iter()
                .find(|y| self.step[*y] == *below)
                .expect("pruned steps are onto");
            entries.push(lift.clone());
        }
        debug_assert!(self.check_chain(&entries).is_ok());
        Some(Chain { entries })
    }

    /// Checks membership in every level and coherence under the step.
    pub fn check_chain(&self, entries: &[T]) -> Result<Chain<T>, ChainViolation<T>> {
        if entries.len() != self.levels.len() {
            return Err(ChainViolation::Length {
                expected: self.levels.len(),
                got: entries.len(),
            });
        }
        for (n, (s, level)) in entries.iter().zip(&self.levels).enumerate() {
            if !level.contains(s) {
                return Err(ChainViolation::NotInLevel { level: n, element: s.clone() });
            }
        }
        for n in 0..self.horizon() {
            if self.step.get(&entries[n + 1]) != Some(&entries[n]) {
                return Err(ChainViolation::Incoherent { level: n });
            }
        }
        Ok(Chain {
            entries: entries.to_vec(),
        })
    }
}

/// One element per level, each the step of the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain<T> {
    entries: Vec<T>,
}

impl<T> Chain<T> {
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainViolation<T> {
    Length { expected: usize, got: usize },
    NotInLevel { level: usize, element: T },
    Incoherent { level: usize },
}

/// A family indexed by the natural numbers, queried on demand. Queries must
/// be deterministic.
pub trait LazyFamily {
    type Element: Label;

    fn set_at(&self, index: usize) -> FiniteSet<Self::Element>;

    /// The finite family on indices `0..len`.
    fn prefix(&self, len: usize) -> IndexedFamily<usize, Self::Element> {
        IndexedFamily::new((0..len).map(|i| (i, self.set_at(i)))).expect("indices are distinct")
    }
}

impl<E: Label, F: Fn(usize) -> FiniteSet<E>> LazyFamily for F {
    type Element = E;

    fn set_at(&self, index: usize) -> FiniteSet<E> {
        self(index)
    }
}

/// Lazy families available by name on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `i -> {i, i + 1}`
    Interval,
    /// `i -> {a}`
    Constant(Token),
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None if s == "interval" => Ok(Generator::Interval),
            Some(("interval", "i,i+1")) => Ok(Generator::Interval),
            Some(("constant", a)) if !a.is_empty() => Ok(Generator::Constant(Token::from(a))),
            _ => Err(Error::UnknownGenerator(s.to_owned())),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Interval => f.write_str("interval:i,i+1"),
            Generator::Constant(a) => write!(f, "constant:{a}"),
        }
    }
}

impl LazyFamily for Generator {
    type Element = Token;

    fn set_at(&self, index: usize) -> FiniteSet<Token> {
        match self {
            Generator::Interval => FiniteSet::new([Token::from(index), Token::from(index + 1)]),
            Generator::Constant(a) => FiniteSet::singleton(a.clone()),
        }
    }
}

/// A transversal of the first `prefix` indices that extends to one of the
/// first `horizon` indices.
///
/// The finite family on `0..horizon` is solved and the result restricted,
/// which is the image of a matching at level `horizon` in the inverse system
/// of prefix matchings (see [`matching_system`]). If that family fails the
/// Hall condition the violating subset is returned instead.
pub fn infinite_hall_prefix<L: LazyFamily>(
    family: &L,
    prefix: usize,
    horizon: usize,
) -> Result<SolveOutcome<usize, L::Element>> {
    if prefix > horizon {
        return Err(Error::HorizonExceeded {
            level: prefix,
            lookahead: 0,
            horizon,
        });
    }
    let finite = family.prefix(horizon);
    let method = if horizon <= INDUCTIVE_CAP {
        Method::Inductive
    } else {
        Method::Augmenting
    };
    Ok(match solver::solve(&finite, method)? {
        SolveOutcome::Matching(t) => SolveOutcome::Matching(t.restrict(|i| *i < prefix)),
        violation => violation,
    })
}

/// Injective choice on indices `0..len`, listed by index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrefixMatching<E>(pub Vec<E>);

impl<E: fmt::Display> fmt::Display for PrefixMatching<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Largest number of prefix matchings [`matching_system`] will enumerate.
pub const MATCHING_SYSTEM_CAP: usize = 100_000;

/// The inverse system whose level `k` holds every matching of indices
/// `0..k`, with restriction (dropping the last index) as the step.
pub fn matching_system<L: LazyFamily>(
    family: &L,
    horizon: usize,
) -> Result<InverseSystem<PrefixMatching<L::Element>>> {
    let sets: Vec<FiniteSet<L::Element>> = (0..horizon).map(|i| family.set_at(i)).collect();
    let mut levels: Vec<FiniteSet<PrefixMatching<L::Element>>> =
        vec![FiniteSet::singleton(PrefixMatching(Vec::new()))];
    let mut step = BTreeMap::new();
    let mut total = 1;
    for set in &sets {
        let mut next = Vec::new();
        for m in levels.last().expect("nonempty") {
            for e in set.iter().filter(|e| !m.0.contains(e)) {
                let mut longer = m.0.clone();
                longer.push(e.clone());
                let longer = PrefixMatching(longer);
                step.insert(longer.clone(), m.clone());
                next.push(longer);
            }
        }
        total += next.len();
        if total > MATCHING_SYSTEM_CAP {
            return Err(Error::CapExceeded {
                what: "prefix matching system",
                size: total,
                cap: MATCHING_SYSTEM_CAP,
            });
        }
        levels.push(FiniteSet::new(next));
    }
    InverseSystem::new(levels, step)
}
