use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle::{CountingOracle, Value};
use crate::set::{validate_permutation, Element, ElementSet};

use super::AlgoResult;

/// `ε = 1/6`, the setting matching a 1/4 guarantee.
pub const DEFAULT_EPSILON: f64 = 1.0 / 6.0;

/// Descending-threshold greedy.
///
/// Starts at `τ = d`, the best singleton value, and scans the elements in
/// `order` once per threshold, adding any addable element whose marginal is
/// at least `τ`. Then `τ ← (1 - ε) τ` until `τ < ε d / r` with `r` the
/// matroid rank. Each element keeps its last queried marginal as an upper
/// bound and is only re-queried while that bound is at least `τ`.
pub fn threshold_greedy<M: Matroid + ?Sized>(
    oracle: &mut CountingOracle<'_>,
    matroid: &M,
    order: &[Element],
    epsilon: f64,
) -> Result<AlgoResult> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let n = oracle.ground_size();
    validate_permutation(order, n)?;
    let mut solution = ElementSet::new();
    let mut current = oracle.empty_value();

    let mut bound: Vec<Value> = vec![0; n];
    for &e in order {
        bound[e] = oracle.marginal(e, &solution, current)?;
    }
    let d = bound.iter().copied().max().unwrap_or(0);
    let rank = matroid.rank();
    if d <= 0 || rank == 0 {
        return Ok(AlgoResult::finish(oracle, solution, 1, None));
    }

    let floor = epsilon * d as f64 / rank as f64;
    let mut tau = d as f64;
    while tau >= floor && solution.len() < rank {
        for &e in order {
            if solution.contains(e) || (bound[e] as f64) < tau || !matroid.can_add(&solution, e) {
                continue;
            }
            let gain = oracle.marginal(e, &solution, current)?;
            bound[e] = gain;
            if gain as f64 >= tau {
                solution.insert(e);
                current += gain;
            }
        }
        tau *= 1.0 - epsilon;
    }
    Ok(AlgoResult::finish(oracle, solution, 1, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::UniformMatroid;
    use crate::objective::ModularObjective;

    #[test]
    fn modular_full_rank_takes_everything() {
        let f = ModularObjective::new(vec![4, 4, 3, 1, 2]);
        let mut o = CountingOracle::new(&f);
        let r = threshold_greedy(
            &mut o,
            &UniformMatroid::new(5, 5),
            &[0, 1, 2, 3, 4],
            1.0 / 6.0,
        )
        .unwrap();
        assert_eq!(r.solution, ElementSet::full(5));
        assert_eq!(r.value, 14);
    }

    #[test]
    fn single_element_added_at_top_threshold() {
        let f = ModularObjective::new(vec![7]);
        let mut o = CountingOracle::new(&f);
        let r =
            threshold_greedy(&mut o, &UniformMatroid::new(1, 1), &[0], DEFAULT_EPSILON).unwrap();
        assert_eq!(r.solution.to_vec(), vec![0]);
        assert_eq!(r.queries, 1);
    }

    #[test]
    fn epsilon_out_of_range() {
        let f = ModularObjective::new(vec![1]);
        let m = UniformMatroid::new(1, 1);
        for eps in [0.0, 1.0, -0.5, f64::NAN] {
            let mut o = CountingOracle::new(&f);
            assert!(matches!(
                threshold_greedy(&mut o, &m, &[0], eps),
                Err(Error::InvalidParameter(_))
            ));
        }
    }
}
