use std::collections::{BTreeMap, BTreeSet};

use hall_core::oracle::{
    brute_force_carried, brute_force_chain, brute_force_transversal, enumerate_subset_violations, random_family, Seed,
};
use hall_core::{
    deficiency_witness, find_tight_set, infinite_hall_prefix, solve_augmenting, solve_inductive, Bipartition,
    BipartiteOutcome, CarriedOutcome, FiniteRelation, FiniteSet, Generator, IndexedFamily, InverseSystem, SimpleGraph,
    Token,
};
use proptest::prelude::*;

type Fam = IndexedFamily<u8, u8>;

fn family_strategy(max_indices: usize, universe: u8) -> impl Strategy<Value = Fam> {
    prop::collection::vec(prop::collection::vec(0..universe, 0..=universe as usize), 0..=max_indices).prop_map(
        move |sets| {
            IndexedFamily::with_universe(0..universe, sets.into_iter().enumerate().map(|(i, s)| (i as u8, s))).unwrap()
        },
    )
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1u32 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Every injective total assignment respecting membership, by enumeration.
fn all_transversals(f: &Fam) -> BTreeSet<BTreeMap<u8, u8>> {
    let entries: Vec<(u8, Vec<u8>)> = f.iter().map(|(i, s)| (*i, s.as_slice().to_vec())).collect();
    let mut out = BTreeSet::new();
    let mut current = BTreeMap::new();
    fn go(entries: &[(u8, Vec<u8>)], current: &mut BTreeMap<u8, u8>, out: &mut BTreeSet<BTreeMap<u8, u8>>) {
        let Some(((i, set), rest)) = entries.split_first() else {
            out.insert(current.clone());
            return;
        };
        for &e in set {
            if current.values().any(|&v| v == e) {
                continue;
            }
            current.insert(*i, e);
            go(rest, current, out);
            current.remove(i);
        }
    }
    go(&entries, &mut current, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bind_union_is_monotone(f in family_strategy(6, 6), mask_a in 0u32..64, mask_b in 0u32..64) {
        let indices = f.indices().as_slice();
        let pick = |mask: u32| -> Vec<u8> {
            indices.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, i)| *i).collect()
        };
        let small = pick(mask_a & mask_b);
        let large = pick(mask_a);
        let u_small = f.bind_union(&small).unwrap();
        let u_large = f.bind_union(&large).unwrap();
        prop_assert!(u_small.is_subset(&u_large));
    }

    #[test]
    fn hall_check_matches_subset_exhaustion(f in family_strategy(9, 7)) {
        let report = f.check_hall_condition();
        let violations = enumerate_subset_violations(&f).unwrap();
        prop_assert_eq!(report.is_satisfied(), violations.is_empty());
        if let Some(w) = report.witness() {
            prop_assert!(w.is_genuine(&f));
            // smallest, then lex-least: the oracle lists violations in that order
            prop_assert_eq!(&w.subset, &violations[0]);
        }
    }

    #[test]
    fn verify_accepts_exactly_the_enumerated_transversals(f in family_strategy(4, 4)) {
        let valid = all_transversals(&f);
        let indices = f.indices().as_slice().to_vec();
        let mut digits = vec![0u8; indices.len()];
        loop {
            let candidate: BTreeMap<u8, u8> = indices.iter().copied().zip(digits.iter().copied()).collect();
            prop_assert_eq!(f.verify_transversal(&candidate).is_ok(), valid.contains(&candidate));
            let Some(p) = (0..digits.len()).rev().find(|&p| digits[p] < 3) else { break };
            digits[p] += 1;
            digits[p + 1..].iter_mut().for_each(|d| *d = 0);
        }
    }

    #[test]
    fn solvers_agree_with_brute_force(f in family_strategy(6, 6)) {
        let inductive = solve_inductive(&f).unwrap();
        let augmenting = solve_augmenting(&f);
        let brute = brute_force_transversal(&f).unwrap();
        prop_assert_eq!(inductive.is_matching(), augmenting.is_some());
        prop_assert_eq!(inductive.is_matching(), brute.is_some());
        if let Some(t) = inductive.matching() {
            prop_assert!(f.verify_transversal(t.as_map()).is_ok());
            // easy direction
            for j in subsets(f.indices().as_slice()) {
                prop_assert!(j.len() <= f.bind_union(&j).unwrap().len());
            }
        }
        if let Some(w) = inductive.violation() {
            prop_assert!(w.is_genuine(&f));
        }
        if let Some(t) = &augmenting {
            prop_assert!(f.verify_transversal(t.as_map()).is_ok());
        }
    }

    #[test]
    fn deficiency_witness_is_genuine(f in family_strategy(7, 6)) {
        match deficiency_witness(&f) {
            None => prop_assert!(solve_augmenting(&f).is_some()),
            Some(j) => {
                prop_assert!(solve_augmenting(&f).is_none());
                prop_assert!(j.len() > f.bind_union(&j).unwrap().len());
            }
        }
    }

    #[test]
    fn absent_tight_set_means_every_proper_subset_has_slack(f in family_strategy(6, 6)) {
        prop_assume!(f.len() >= 2 && f.check_hall_condition().is_satisfied());
        let tight = find_tight_set(&f).unwrap();
        let indices = f.indices().as_slice();
        let proper: Vec<Vec<u8>> = subsets(indices)
            .into_iter()
            .filter(|j| !j.is_empty() && j.len() < indices.len())
            .collect();
        match tight {
            None => {
                for j in proper {
                    prop_assert!(j.len() < f.bind_union(&j).unwrap().len());
                }
            }
            Some(t) => {
                prop_assert!(!t.subset.is_empty() && t.subset.len() < indices.len());
                prop_assert_eq!(&t.image, &f.bind_union(&t.subset).unwrap());
                prop_assert_eq!(t.subset.len(), t.image.len());
            }
        }
    }

    #[test]
    fn relation_forms_agree(
        left in 0u8..=5,
        right in 0u8..=5,
        bits in prop::collection::vec(any::<bool>(), 25),
    ) {
        let pairs: Vec<(u8, u8)> = (0..left)
            .flat_map(|a| (0..right).map(move |b| (a, b)))
            .filter(|&(a, b)| bits[(a * 5 + b) as usize])
            .collect();
        let r = FiniteRelation::new(0..left, 0..right, pairs).unwrap();
        let family = r.family_of_relation();
        let lefts: Vec<u8> = (0..left).collect();
        let mut exhaustive = true;
        for a in subsets(&lefts) {
            let image = r.image_rel(&a).unwrap();
            prop_assert_eq!(&image, &family.bind_union(&a).unwrap());
            exhaustive &= a.len() <= image.len();
        }
        let solved = r.solve_relation().unwrap();
        prop_assert_eq!(solved.is_matching(), family.check_hall_condition().is_satisfied());
        prop_assert_eq!(solved.is_matching(), exhaustive);
        if let Some(m) = solved.matching() {
            prop_assert!(m.iter().all(|(a, b)| r.relates(a, b)));
        }
    }

    #[test]
    fn neighborhoods_agree_across_layers(n in 0u8..=6, bits in prop::collection::vec(any::<bool>(), 15), mask in 0u32..64) {
        let edges: Vec<(u8, u8)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| bits[(a * 6 + b) as usize % 15])
            .collect();
        let g = SimpleGraph::new(0..n, edges).unwrap();
        let s: Vec<u8> = (0..n).filter(|v| mask >> v & 1 == 1).collect();

        let image = g.neighbor_set_image(&s).unwrap();
        let adjacency = FiniteRelation::new(
            0..n,
            0..n,
            g.edges().iter().flat_map(|e| [(*e.low(), *e.high()), (*e.high(), *e.low())]),
        ).unwrap();
        prop_assert_eq!(&image, &adjacency.image_rel(&s).unwrap());
        let incident = g.incidence_family().bind_union(&s).unwrap();
        let projected: FiniteSet<u8> = s
            .iter()
            .flat_map(|v| incident.iter().filter_map(move |e| e.other(v).copied()))
            .collect();
        prop_assert_eq!(&image, &projected);
    }

    #[test]
    fn bipartite_hall_matches_exhaustion(left in 0u8..=3, right in 0u8..=3, bits in prop::collection::vec(any::<bool>(), 9)) {
        let edges: Vec<(u8, u8)> = (0..left)
            .flat_map(|a| (0..right).map(move |b| (a, 10 + b)))
            .filter(|&(a, b)| bits[(a * 3 + b - 10) as usize])
            .collect();
        let vertices = (0..left).chain(10..10 + right);
        let g = SimpleGraph::new(vertices, edges).unwrap();
        let sides: BTreeMap<u8, u8> = g.vertices().iter().map(|&v| (v, u8::from(v >= 10))).collect();
        let b = hall_core::graph::Bipartition::new(&g, &sides).unwrap();
        let class0 = b.color_set(0);
        let exhaustive = subsets(class0.as_slice())
            .iter()
            .all(|s| s.len() <= g.neighbor_set_image(s).unwrap().len());
        match g.hall_bipartite(&b).unwrap() {
            BipartiteOutcome::Matching(m) => {
                prop_assert!(exhaustive);
                prop_assert!(g.validate_matching(m.edges().iter().cloned()).is_ok());
                prop_assert!(m.saturates(&class0));
            }
            BipartiteOutcome::Violation { subset, neighborhood } => {
                prop_assert!(!exhaustive);
                prop_assert!(subset.is_subset(&class0));
                prop_assert_eq!(&neighborhood, &g.neighbor_set_image(&subset).unwrap());
                prop_assert!(subset.len() > neighborhood.len());
            }
        }
    }

    #[test]
    fn chains_agree_with_brute_force(
        levels in prop::collection::vec(prop::collection::btree_set(0u8..4, 0..=3), 1..=5),
        step in prop::collection::vec(0u8..4, 4),
    ) {
        // force the step into the level below by construction where possible
        let levels: Vec<FiniteSet<u8>> = levels.into_iter().map(FiniteSet::new).collect();
        let map: BTreeMap<u8, u8> = (0..4).map(|x| (x, step[x as usize])).collect();
        let Ok(sys) = InverseSystem::new(levels, map) else { return Ok(()) };
        let chain = sys.find_chain();
        prop_assert_eq!(chain.is_some(), brute_force_chain(&sys).unwrap().is_some());
        if let Some(c) = chain {
            prop_assert!(sys.check_chain(c.entries()).is_ok());
        }
        let pruned = sys.prune_to_extendable();
        prop_assert!(InverseSystem::new(pruned.levels().to_vec(), pruned.step_map().clone()).is_ok());
        if pruned.levels().iter().all(|l| !l.is_empty()) {
            prop_assert!(pruned.is_surjective());
        }
        let h = sys.horizon();
        for n in 0..=h {
            for k in 0..h - n {
                let wide = sys.extendable_set(n, k).unwrap();
                let narrow = sys.extendable_set(n, k + 1).unwrap();
                prop_assert!(narrow.is_subset(&wide));
            }
        }
    }
}

#[test]
fn all_3x3_relations_satisfy_hall_equivalence() {
    for mask in 0u32..512 {
        let pairs = (0..9u8).filter(|k| mask >> k & 1 == 1).map(|k| (k / 3, k % 3));
        let r = FiniteRelation::new(0..3u8, 0..3u8, pairs).unwrap();
        let f = r.family_of_relation();
        let solved = solve_inductive(&f).unwrap();
        assert_eq!(solved.is_matching(), enumerate_subset_violations(&f).unwrap().is_empty(), "mask {mask}");
    }
}

#[test]
fn seeded_random_families_satisfy_hall_equivalence() {
    for k in 0..500u64 {
        let n = 1 + (k % 6) as usize;
        let u = 1 + (k / 6 % 6) as usize;
        let density = [0.2, 0.4, 0.6][(k % 3) as usize];
        let f = random_family(Seed(k), n, u, density);
        let solved = solve_inductive(&f).unwrap();
        assert_eq!(solved.is_matching(), enumerate_subset_violations(&f).unwrap().is_empty(), "seed {k}");
        assert_eq!(solved.is_matching(), brute_force_transversal(&f).unwrap().is_some(), "seed {k}");
    }
}

#[test]
fn carried_functions_match_brute_force_on_small_graphs() {
    for n in 0u8..=4 {
        let pairs: Vec<(u8, u8)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| *e);
            let g = SimpleGraph::new(0..n, edges).unwrap();
            let found = g.find_carried_function().unwrap();
            assert_eq!(found.is_carried(), brute_force_carried(&g).unwrap().is_some());
            if let CarriedOutcome::Violation { subset, incident_edges } = found {
                assert_eq!(incident_edges, g.incidence_family().bind_union(&subset).unwrap().len());
                assert!(subset.len() > incident_edges);
            }
        }
    }
}

#[test]
fn cycles_carry_a_rotation() {
    for n in 3u8..=8 {
        let g = SimpleGraph::new(0..n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        assert!(g.find_carried_function().unwrap().is_carried(), "C_{n}");
    }
}

#[test]
fn prefixes_restrict_to_valid_transversals() {
    let generator = Generator::Interval;
    for h in 2..9 {
        for n in 0..=h {
            let t = infinite_hall_prefix(&generator, n, h).unwrap();
            let t = t.matching().unwrap();
            for m in 0..=n {
                let sub = t.restrict(|i| *i < m);
                assert!(hall_core::LazyFamily::prefix(&generator, m).verify_transversal(sub.as_map()).is_ok());
            }
        }
    }
}

#[test]
fn interval_prefix_is_stable_across_horizons() {
    for n in 1..6 {
        let reference = infinite_hall_prefix(&Generator::Interval, n, n).unwrap();
        for h in n..=n + 4 {
            let t = infinite_hall_prefix(&Generator::Interval, n, h).unwrap();
            assert_eq!(t, reference, "n = {n}, horizon = {h}");
        }
        // each index takes its own value under least-element tie-breaking
        let values: Vec<Token> = reference.matching().unwrap().as_map().values().cloned().collect();
        assert_eq!(values, (0..n).map(Token::from).collect::<Vec<_>>());
    }
}

#[test]
fn random_bipartite_graphs_are_bipartitioned() {
    for k in 0..20 {
        let (g, b): (hall_core::Graph, Bipartition) = hall_core::oracle::random_bipartite(Seed(k), 4, 3, 0.5);
        let outcome = g.hall_bipartite(&b).unwrap();
        let exhaustive = subsets(b.color_set(0).as_slice())
            .iter()
            .all(|s| s.len() <= g.neighbor_set_image(s).unwrap().len());
        assert_eq!(outcome.is_matching(), exhaustive);
    }
}
