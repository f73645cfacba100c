mod common;

use proptest::prelude::*;
use starcolor::bounds::{lower_bound_2h, upper_bound_2h};
use starcolor::oracle::{exact_index_bruteforce, validate_coloring, BRUTEFORCE_EDGE_LIMIT};
use starcolor::ovs::realize;
use starcolor::two_h::{
    coloring_from_realization, extended_sequence, min_k, realization_from_coloring,
};
use starcolor::{color_2h, TwoHProfile};

/// Sorted profiles with `t` entries in `0..=max`.
fn profiles(t: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(t: usize, lo: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == t {
            out.push(prefix.clone());
            return;
        }
        for x in lo..=max {
            prefix.push(x);
            rec(t, x, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, 0, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn index_matches_bruteforce_on_small_profiles() {
    let mut compared = 0;
    for t in 1..=6 {
        for n in profiles(t, 4) {
            let profile = TwoHProfile::new(n.clone());
            if t + profile.sigma() > BRUTEFORCE_EDGE_LIMIT {
                continue;
            }
            let result = color_2h(&profile).unwrap();
            let tree = result.tree.as_ref().unwrap();
            let verdict = validate_coloring(tree, &result.coloring).unwrap();
            assert!(verdict.valid, "{n:?}: {verdict:?}");
            assert_eq!(result.coloring.palette_size(), result.index);
            let exact = exact_index_bruteforce(tree, 3 * profile.max_degree() / 2).unwrap();
            assert_eq!(result.index, exact, "profile {n:?}");
            compared += 1;
        }
    }
    assert!(compared > 150, "only {compared} profiles compared");
}

#[test]
fn named_profiles() {
    assert_eq!(color_2h(&TwoHProfile::new(vec![2, 2, 2])).unwrap().index, 4);
    assert_eq!(color_2h(&TwoHProfile::new(vec![0, 0, 4])).unwrap().index, 5);
    assert_eq!(color_2h(&TwoHProfile::new(vec![1, 1, 1, 1, 1])).unwrap().index, 5);
}

#[test]
fn two_ball_profile_colors_the_tree_itself() {
    let tree = starcolor::Tree::from_edges(&[(5, 0), (5, 1), (1, 2), (1, 3), (5, 4), (4, 6)]).unwrap();
    let result = color_2h(&tree.two_ball(5).unwrap()).unwrap();
    assert!(result.tree.is_none());
    assert!(validate_coloring(&tree, &result.coloring).unwrap().valid);
    assert_eq!(result.index, exact_index_bruteforce(&tree, 6).unwrap());
}

fn profile_strategy(max_t: usize, max_n: usize) -> impl Strategy<Value = TwoHProfile> {
    prop::collection::vec(0..=max_n, 1..=max_t).prop_map(TwoHProfile::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bounds_sandwich_the_index(profile in profile_strategy(30, 30)) {
        let index = color_2h(&profile).unwrap().index;
        prop_assert!(lower_bound_2h(&profile).unwrap() <= index);
        prop_assert!(index <= upper_bound_2h(&profile).unwrap());
    }

    #[test]
    fn emitted_colorings_validate(profile in profile_strategy(8, 8)) {
        let result = color_2h(&profile).unwrap();
        let verdict = validate_coloring(result.tree.as_ref().unwrap(), &result.coloring).unwrap();
        prop_assert!(verdict.valid);
        prop_assert_eq!(result.coloring.palette_size(), result.index);
    }

    #[test]
    fn k_is_minimal(profile in profile_strategy(12, 12)) {
        let k = min_k(&profile).unwrap();
        prop_assert!(realize(&extended_sequence(&profile, k)).is_ok());
        if k > 0 {
            prop_assert!(realize(&extended_sequence(&profile, k - 1)).is_err());
        }
    }

    #[test]
    fn realization_coloring_round_trip(profile in profile_strategy(10, 10)) {
        let result = color_2h(&profile).unwrap();
        let back = realization_from_coloring(&result.coloring, &result.profile).unwrap();
        let mut a: Vec<usize> = back.vertices().map(|v| back.out_degree(v)).collect();
        let mut b: Vec<usize> =
            result.realization.vertices().map(|v| result.realization.out_degree(v)).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        let again = coloring_from_realization(&back, &result.profile).unwrap();
        prop_assert_eq!(again, result.coloring);
    }
}
