use crate::error::Result;
use crate::matroid::Matroid;
use crate::oracle::{swap_candidate, CountingOracle, Value};
use crate::set::{validate_permutation, Element, ElementSet};

use super::{AlgoResult, Decision, TraceEntry};

/// Single-pass swap baseline weighting each arrival by its marginal gain to
/// the current feasible solution `S`.
///
/// Weights are fixed at arrival. A feasible arrival is added; otherwise it
/// replaces the lightest exchangeable member `a` when `w_e >= 2 w_a`. The
/// weight needs `f(S)` and `f(S + e)`; after a swap `f(S)` is a fresh set,
/// so the query count is `n` plus the number of swaps, at most `2n`.
pub fn ck<M: Matroid + ?Sized>(
    oracle: &mut CountingOracle<'_>,
    matroid: &M,
    order: &[Element],
) -> Result<AlgoResult> {
    ck_impl(oracle, matroid, order, false)
}

pub(crate) fn ck_impl<M: Matroid + ?Sized>(
    oracle: &mut CountingOracle<'_>,
    matroid: &M,
    order: &[Element],
    with_trace: bool,
) -> Result<AlgoResult> {
    let n = oracle.ground_size();
    validate_permutation(order, n)?;
    let mut weights: Vec<Value> = vec![0; n];
    let mut solution = ElementSet::new();
    let mut trace = with_trace.then(Vec::new);
    oracle.empty_value();

    for &e in order {
        let current = oracle.value(&solution)?;
        let w = oracle.marginal(e, &solution, current)?;
        weights[e] = w;
        let decision = if matroid.can_add(&solution, e) {
            solution.insert(e);
            Decision::Added
        } else {
            match swap_candidate(matroid, &solution, e, |a| weights[a])? {
                Some(out) if w as i128 >= 2 * weights[out] as i128 => {
                    solution.remove(out);
                    solution.insert(e);
                    Decision::Swapped { out }
                }
                _ => Decision::Rejected,
            }
        };
        if let Some(t) = trace.as_mut() {
            t.push(TraceEntry {
                element: e,
                weight: w,
                side: None,
                decision,
            });
        }
    }
    Ok(AlgoResult::finish(oracle, solution, 1, trace))
}
