//! Property suites for the algorithms on small random instances, checked
//! against brute force.

use proptest::prelude::*;

use quickswap::algorithms::{check_lemma_nm, check_lemmas_msm, DEFAULT_EPSILON};
use quickswap::instances::{
    build_tight, sample_random_instance, Instance, ObjectiveFamily, RngStream, SamplerConfig,
};
use quickswap::{
    brute_force_opt, ck, lazy_greedy, naive_greedy, threshold_greedy, Beta, CountingOracle,
    Matroid, QuickSwap, QuickSwapNm, SetFunction,
};

fn instance(seed: u64, objective: ObjectiveFamily, max_n: usize) -> Instance {
    let cfg = SamplerConfig::new(0).sizes(0, max_n).objective(objective);
    sample_random_instance(&cfg, &mut RngStream::new(seed, "tests/algorithms", 0).rng()).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut RngStream::new(seed, "tests/order", 0).rng());
    order
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn quickswap_spends_exactly_n_queries(seed in any::<u64>(), beta in 0.05f64..8.0) {
        let inst = instance(seed, ObjectiveFamily::Either, 12);
        let n = inst.ground_size();
        let mut oracle = CountingOracle::new(&inst.objective);
        let run = QuickSwap::new(Beta::new(beta).unwrap())
            .run(&mut oracle, &inst.matroid, &shuffled(n, seed))
            .unwrap();
        prop_assert_eq!(run.result.queries, n as u64);
        prop_assert!(inst.matroid.independent(&run.result.solution));
        prop_assert!(run.state.a_prime.is_subset(&run.state.a));
        prop_assert_eq!(run.state.a_value, inst.objective.value(&run.state.a));
    }

    #[test]
    fn quickswap_nm_spends_exactly_2n_queries(seed in any::<u64>()) {
        let inst = instance(seed, ObjectiveFamily::Either, 12);
        let n = inst.ground_size();
        let mut oracle = CountingOracle::new(&inst.objective);
        let run = QuickSwapNm::new(Beta::NON_MONOTONE)
            .run(&mut oracle, &inst.matroid, &shuffled(n, seed))
            .unwrap();
        prop_assert_eq!(run.result.queries, 2 * n as u64);
        prop_assert!(run.disjoint_throughout);
        prop_assert!(inst.matroid.independent(&run.result.solution));
        let best = inst.objective.value(&run.a.a_prime).max(inst.objective.value(&run.b.a_prime));
        prop_assert_eq!(run.result.value, best);
    }

    #[test]
    fn msm_lemmas_hold_for_any_beta(seed in any::<u64>(), beta in 0.05f64..8.0) {
        let inst = instance(seed, ObjectiveFamily::Coverage, 9);
        let f = &inst.objective;
        let (opt, _) = brute_force_opt(f, &inst.matroid).unwrap();
        let mut oracle = CountingOracle::new(f);
        let run = QuickSwap::new(Beta::new(beta).unwrap())
            .run(&mut oracle, &inst.matroid, &shuffled(inst.ground_size(), seed))
            .unwrap();
        let r = check_lemmas_msm(f, &run, &opt);
        prop_assert!(r.all_hold(), "{:?}", r);
        prop_assert!(r.ratio_holds, "{:?}", r);
    }

    #[test]
    fn nm_lemma_holds_on_cuts(seed in any::<u64>()) {
        let inst = instance(seed, ObjectiveFamily::Cut, 9);
        let f = &inst.objective;
        let (opt, _) = brute_force_opt(f, &inst.matroid).unwrap();
        let mut oracle = CountingOracle::new(f);
        let run = QuickSwapNm::new(Beta::NON_MONOTONE)
            .run(&mut oracle, &inst.matroid, &shuffled(inst.ground_size(), seed))
            .unwrap();
        let r = check_lemma_nm(f, &run, &opt);
        prop_assert!(r.all_hold(), "{:?}", r);
    }

    #[test]
    fn ck_is_feasible_and_within_2n(seed in any::<u64>()) {
        let inst = instance(seed, ObjectiveFamily::Coverage, 12);
        let n = inst.ground_size();
        let (_, opt) = brute_force_opt(&inst.objective, &inst.matroid).unwrap();
        let mut oracle = CountingOracle::new(&inst.objective);
        let r = ck(&mut oracle, &inst.matroid, &shuffled(n, seed)).unwrap();
        prop_assert!(r.queries >= n as u64 && r.queries <= 2 * n as u64);
        prop_assert!(inst.matroid.independent(&r.solution));
        prop_assert!(4 * r.value >= opt);
    }

    #[test]
    fn lazy_greedy_matches_naive_greedy(seed in any::<u64>()) {
        let inst = instance(seed, ObjectiveFamily::Either, 12);
        let mut oracle = CountingOracle::new(&inst.objective);
        let lazy = lazy_greedy(&mut oracle, &inst.matroid).unwrap();
        let (set, value) = naive_greedy(&inst.objective, &inst.matroid);
        prop_assert_eq!(lazy.value, value);
        prop_assert_eq!(lazy.solution, set);
    }

    #[test]
    fn threshold_greedy_bound(seed in any::<u64>()) {
        let inst = instance(seed, ObjectiveFamily::Coverage, 10);
        let n = inst.ground_size();
        let (_, opt) = brute_force_opt(&inst.objective, &inst.matroid).unwrap();
        let mut oracle = CountingOracle::new(&inst.objective);
        let r = threshold_greedy(&mut oracle, &inst.matroid, &shuffled(n, seed), DEFAULT_EPSILON)
            .unwrap();
        prop_assert!(inst.matroid.independent(&r.solution));
        prop_assert!(r.value as f64 >= (0.5 - DEFAULT_EPSILON) * opt as f64);
    }

    #[test]
    fn brute_force_is_optimal_and_feasible(seed in any::<u64>()) {
        let inst = instance(seed, ObjectiveFamily::Either, 8);
        let (set, value) = brute_force_opt(&inst.objective, &inst.matroid).unwrap();
        prop_assert!(inst.matroid.independent(&set));
        prop_assert_eq!(inst.objective.value(&set), value);
        let mut oracle = CountingOracle::new(&inst.objective);
        let greedy = lazy_greedy(&mut oracle, &inst.matroid).unwrap();
        prop_assert!(greedy.value <= value);
    }
}

#[test]
fn tight_family_for_small_m() {
    for m in 1..=20u32 {
        let inst = build_tight(m).unwrap();
        let mut oracle = CountingOracle::new(&inst.objective);
        let run = QuickSwap::new(Beta::MONOTONE)
            .run(&mut oracle, &inst.matroid, &inst.order())
            .unwrap();
        assert_eq!(run.result.solution.to_vec(), vec![m as usize]);
        assert_eq!(run.result.value, 1 << m);
        assert_eq!(run.result.queries, m as u64 + 2);
    }
}

#[test]
fn swap_threshold_shrinks_with_beta() {
    // with a tiny β every heavier arrival displaces the current element
    let inst = build_tight(3).unwrap();
    let mut oracle = CountingOracle::new(&inst.objective);
    let run = QuickSwap::new(Beta::new(0.01).unwrap())
        .run(&mut oracle, &inst.matroid, &inst.order())
        .unwrap();
    assert_eq!(run.result.solution.to_vec(), vec![4]);
    assert_eq!(run.result.value, 30);
}
