use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::Result;
use crate::matroid::Matroid;
use crate::oracle::{CountingOracle, SetFunction, Value};
use crate::set::{Element, ElementSet};

use super::AlgoResult;

/// Lazy greedy over a max-heap of stale marginal gains.
///
/// All singletons are queried up front. Each step pops the top element; if
/// it is the element popped immediately before, its priority is fresh and
/// it is committed. Otherwise, if it can still be added, its marginal to the
/// current solution is recomputed (one query for `f(S + e)`) and it is pushed
/// back; if it cannot be added it is dropped. Heap ties favour the smaller
/// id, which makes the output identical to [`naive_greedy`].
pub fn lazy_greedy<M: Matroid + ?Sized>(
    oracle: &mut CountingOracle<'_>,
    matroid: &M,
) -> Result<AlgoResult> {
    let n = oracle.ground_size();
    let mut solution = ElementSet::new();
    let mut current = oracle.empty_value();

    let mut heap: BinaryHeap<(Value, Reverse<Element>)> = BinaryHeap::with_capacity(n);
    for e in 0..n {
        let gain = oracle.marginal(e, &solution, current)?;
        heap.push((gain, Reverse(e)));
    }

    let mut last_popped = None;
    while let Some((priority, Reverse(e))) = heap.pop() {
        if last_popped == Some(e) {
            solution.insert(e);
            current += priority;
        } else if matroid.can_add(&solution, e) {
            let gain = oracle.marginal(e, &solution, current)?;
            heap.push((gain, Reverse(e)));
        }
        last_popped = Some(e);
    }
    debug_assert_eq!(current, oracle.evaluate_uncounted(&solution));
    Ok(AlgoResult::finish(oracle, solution, 1, None))
}

/// Textbook greedy: every round rescans all addable elements and takes the
/// largest marginal gain (smallest id on ties) until nothing can be added.
///
/// Evaluates `f` directly with no accounting; it exists as a reference for
/// [`lazy_greedy`].
pub fn naive_greedy<F, M>(f: &F, matroid: &M) -> (ElementSet, Value)
where
    F: SetFunction + ?Sized,
    M: Matroid + ?Sized,
{
    let n = f.ground_size();
    let mut solution = ElementSet::new();
    let mut current = f.value(&solution);
    loop {
        let mut best: Option<(Value, Element)> = None;
        for e in (0..n).filter(|&e| !solution.contains(e) && matroid.can_add(&solution, e)) {
            let gain = f.value(&solution.with(e)) - current;
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, e));
            }
        }
        let Some((gain, e)) = best else {
            break;
        };
        solution.insert(e);
        current += gain;
    }
    (solution, current)
}
