mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use starcolor::ovs::{realize, realize_constrained, realize_traced, Ovs};
use starcolor::Error;

/// Outdegree vectors of every oriented graph on `n` labeled vertices:
/// each unordered pair is absent, `i -> j`, or `j -> i`.
fn achievable_outdegrees(n: usize) -> HashSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = HashSet::new();
    let total = 3usize.pow(pairs.len() as u32);
    for mut code in 0..total {
        let mut deg = vec![0; n];
        for &(i, j) in &pairs {
            match code % 3 {
                1 => deg[i] += 1,
                2 => deg[j] += 1,
                _ => {}
            }
            code /= 3;
        }
        out.insert(deg);
    }
    out
}

fn all_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut result = vec![vec![]];
    for _ in 0..n {
        result = result
            .into_iter()
            .flat_map(|v| (0..=max).map(move |d| [v.clone(), vec![d]].concat()))
            .collect();
    }
    result
}

fn labeled(degrees: &[usize]) -> Ovs {
    // labels deliberately not in sequence order
    Ovs::new(degrees.iter().enumerate().map(|(i, &d)| (d, 100 - 7 * i)).collect()).unwrap()
}

#[test]
fn completeness_against_exhaustive_enumeration() {
    let mut checked = 0;
    for n in 0..=5 {
        let achievable = achievable_outdegrees(n);
        for degrees in all_vectors(n, 4) {
            let expected = achievable.contains(&degrees);
            let result = realize(&labeled(&degrees));
            assert_eq!(result.is_ok(), expected, "outdegrees {degrees:?}");
            if let Err(e) = result {
                assert!(matches!(e, Error::NotRealizable(_)));
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 5 + 25 + 125 + 625 + 3125);
}

#[test]
fn t233_sequence_realization_is_replayable() {
    let ovs = Ovs::new(vec![(2, 1), (3, 2), (3, 3), (0, 4), (0, 5)]).unwrap();
    let (g, trace) = realize_traced(&ovs).unwrap();
    assert_eq!(g.arc_count(), 8);
    assert_eq!(trace.iter().map(|s| s.vertex).collect::<Vec<_>>(), vec![1, 2, 3]);
    check_replay(&ovs, &g, &trace);
}

/// Every step's chosen set equals the first admissible vertices of a
/// G_W-normal arrangement, recomputed from the arcs of earlier steps.
fn check_replay(ovs: &Ovs, g: &starcolor::OrientedGraph, trace: &[starcolor::ovs::TraceStep]) {
    let degree: std::collections::HashMap<usize, usize> =
        ovs.entries().iter().map(|&(d, v)| (v, d)).collect();
    let mut placed: Vec<(usize, usize)> = Vec::new();
    for step in trace {
        let indeg = |v: usize| placed.iter().filter(|a| a.1 == v).count();
        let fixed = &step.arrangement[..step.fixed];
        assert_eq!(step.arrangement[step.fixed], step.vertex);
        assert!(!fixed.contains(&step.vertex));
        let keys: Vec<(usize, usize)> = step.arrangement[step.fixed..]
            .iter()
            .map(|&v| (degree[&v] + indeg(v), degree[&v]))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]), "suffix not normal: {keys:?}");
        let expected: Vec<usize> = step
            .arrangement
            .iter()
            .copied()
            .filter(|&w| w != step.vertex && !placed.contains(&(w, step.vertex)))
            .take(degree[&step.vertex])
            .collect();
        assert_eq!(step.chosen, expected);
        let mut actual: Vec<usize> = g.out_neighbors(step.vertex).collect();
        let mut chosen = step.chosen.clone();
        actual.sort_unstable();
        chosen.sort_unstable();
        assert_eq!(actual, chosen);
        placed.extend(step.chosen.iter().map(|&w| (step.vertex, w)));
    }
    assert_eq!(placed.len(), g.arc_count());
}

fn ovs_strategy() -> impl Strategy<Value = Ovs> {
    prop::collection::vec(0usize..8, 0..12).prop_map(|d| labeled(&d))
}

proptest! {
    #[test]
    fn successful_realizations_are_oriented_and_replayable(ovs in ovs_strategy()) {
        if let Ok((g, trace)) = realize_traced(&ovs) {
            g.check_invariants().unwrap();
            prop_assert!(g.realizes(&ovs));
            check_replay(&ovs, &g, &trace);
        }
    }

    #[test]
    fn appending_a_sink_keeps_realizability(ovs in ovs_strategy()) {
        if realize(&ovs).is_ok() {
            let mut longer = ovs.clone();
            longer.push(0, 1000).unwrap();
            prop_assert!(realize(&longer).is_ok());
        }
    }

    #[test]
    fn realization_is_deterministic(ovs in ovs_strategy()) {
        let a = realize(&ovs).ok().map(|g| g.arcs().collect::<Vec<_>>());
        let b = realize(&ovs).ok().map(|g| g.arcs().collect::<Vec<_>>());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn empty_preset_matches_plain_realize(ovs in ovs_strategy()) {
        prop_assert_eq!(realize_constrained(&ovs, &[], &[]).ok(), realize(&ovs).ok());
    }
}
