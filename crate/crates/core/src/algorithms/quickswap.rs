//! Single-pass swap algorithm with exactly one value query per element.
//!
//! The run keeps two sets, `A' ⊆ A`. `A'` is the feasible solution; `A`
//! holds every element that was ever admitted to `A'`. An arriving element
//! `e` is weighted once by `δ_e = f(e | A)`. Since `f(A)` is maintained
//! incrementally as the sum of admitted weights, that weight costs the single
//! query `f(A + e)`, and `A + e` is new at every step.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle::{swap_candidate, CountingOracle, Scope, Value};
use crate::set::{validate_permutation, Element, ElementSet};

use super::{AlgoResult, Beta, Decision, TraceEntry};

/// Mutable state of one solution copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapState {
    /// Every element ever admitted.
    pub a: ElementSet,
    /// `f(A)`, maintained as the running sum of admitted weights.
    pub a_value: Value,
    /// The feasible solution.
    pub a_prime: ElementSet,
    delta: Vec<Option<Value>>,
}

impl SwapState {
    pub fn new(n: usize, empty_value: Value) -> Self {
        SwapState {
            a: ElementSet::new(),
            a_value: empty_value,
            a_prime: ElementSet::new(),
            delta: vec![None; n],
        }
    }

    /// Weight fixed for `e` at arrival, if `e` was admitted.
    pub fn weight(&self, e: Element) -> Option<Value> {
        self.delta.get(e).copied().flatten()
    }

    /// `Σ_{e ∈ A} δ_e`.
    pub fn weight_sum(&self) -> Value {
        self.a.iter().filter_map(|e| self.weight(e)).sum()
    }
}

/// Applies the per-element rule to one copy, given the already-charged
/// weight `delta_e`. Performs no value queries.
///
/// If `A' + e` is independent and `δ_e ≥ 0`, `e` joins both sets. Otherwise
/// the cheapest exchangeable `a* ∈ A'` is found and `e` replaces it when
/// `δ_e ≥ (1 + β) δ_{a*}`. Anything else rejects `e`.
pub fn process<M: Matroid + ?Sized>(
    matroid: &M,
    e: Element,
    state: &mut SwapState,
    delta_e: Value,
    beta: Beta,
) -> Result<Decision> {
    if state.a.contains(e) {
        return Err(Error::Contract(format!("element {e} processed twice")));
    }
    if e >= state.delta.len() {
        return Err(Error::ElementOutOfRange {
            element: e,
            ground_size: state.delta.len(),
        });
    }
    debug_assert!(state.a_prime.is_subset(&state.a));

    let decision = if delta_e >= 0 && matroid.can_add(&state.a_prime, e) {
        state.a_prime.insert(e);
        Decision::Added
    } else {
        let weight = |a: Element| state.delta[a].expect("members of A' carry weights");
        match swap_candidate(matroid, &state.a_prime, e, weight)? {
            Some(out) if beta.admits_swap(delta_e, weight(out)) => {
                state.a_prime.remove(out);
                state.a_prime.insert(e);
                Decision::Swapped { out }
            }
            _ => Decision::Rejected,
        }
    };
    if decision != Decision::Rejected {
        state.a.insert(e);
        state.a_value += delta_e;
        state.delta[e] = Some(delta_e);
    }
    Ok(decision)
}

/// Weighs `e` against copy `state` with one query charged to `scope`.
pub(crate) fn arrival_weight(
    oracle: &mut CountingOracle<'_>,
    scope: Scope,
    e: Element,
    state: &SwapState,
) -> Result<Value> {
    oracle.marginal_scoped(scope, e, &state.a, state.a_value)
}

/// Configured single-copy runner.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuickSwap {
    pub beta: Beta,
    pub trace: bool,
}

/// Final state of a run alongside its result.
#[derive(Debug, Clone)]
pub struct SwapRun {
    pub result: AlgoResult,
    pub state: SwapState,
    pub beta: Beta,
}

impl QuickSwap {
    pub fn new(beta: Beta) -> Self {
        QuickSwap { beta, trace: false }
    }

    pub fn traced(mut self) -> Self {
        self.trace = true;
        self
    }

    pub fn run<M: Matroid + ?Sized>(
        &self,
        oracle: &mut CountingOracle<'_>,
        matroid: &M,
        order: &[Element],
    ) -> Result<SwapRun> {
        let n = oracle.ground_size();
        validate_permutation(order, n)?;
        let mut state = SwapState::new(n, oracle.empty_value());
        let mut trace = self.trace.then(|| Vec::with_capacity(n));

        for &e in order {
            let delta_e = arrival_weight(oracle, 0, e, &state)?;
            let decision = process(matroid, e, &mut state, delta_e, self.beta)?;
            if let Some(t) = trace.as_mut() {
                t.push(TraceEntry {
                    element: e,
                    weight: delta_e,
                    side: None,
                    decision,
                });
            }
        }
        debug_assert_eq!(state.a_value, oracle.evaluate_uncounted(&state.a));

        let result = AlgoResult::finish(oracle, state.a_prime.clone(), 1, trace);
        Ok(SwapRun {
            result,
            state,
            beta: self.beta,
        })
    }
}

pub fn quickswap<M: Matroid + ?Sized>(
    oracle: &mut CountingOracle<'_>,
    matroid: &M,
    order: &[Element],
    beta: Beta,
) -> Result<AlgoResult> {
    Ok(QuickSwap::new(beta).run(oracle, matroid, order)?.result)
}
