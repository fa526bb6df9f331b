//! Two-copy variant for non-monotone objectives.
//!
//! Each element is weighed against both copies (`f(e | A)` and `f(e | B)`)
//! and handed to the copy that values it strictly more; ties go to `B`. The
//! copies therefore stay disjoint. Each copy's queries are charged to its own
//! oracle scope, so every element costs exactly two queries.

use crate::error::Result;
use crate::matroid::Matroid;
use crate::oracle::CountingOracle;
use crate::set::{validate_permutation, Element};

use super::quickswap::{arrival_weight, process, SwapState};
use super::{AlgoResult, Beta, Side, TraceEntry};

const SCOPE_A: u8 = 0;
const SCOPE_B: u8 = 1;

#[derive(Debug, Clone, Copy, Default)]
pub struct QuickSwapNm {
    pub beta: Beta,
    pub trace: bool,
}

/// Final states of both copies alongside the result.
#[derive(Debug, Clone)]
pub struct NmRun {
    pub result: AlgoResult,
    pub a: SwapState,
    pub b: SwapState,
    /// `A ∩ B = ∅` held after every step.
    pub disjoint_throughout: bool,
    pub beta: Beta,
}

impl QuickSwapNm {
    pub fn new(beta: Beta) -> Self {
        QuickSwapNm { beta, trace: false }
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
    ) -> Result<NmRun> {
        let n = oracle.ground_size();
        validate_permutation(order, n)?;
        let mut a = SwapState::new(n, oracle.empty_value_scoped(SCOPE_A));
        let mut b = SwapState::new(n, oracle.empty_value_scoped(SCOPE_B));
        let mut trace = self.trace.then(|| Vec::with_capacity(n));
        let mut disjoint_throughout = true;

        for &e in order {
            let gain_a = arrival_weight(oracle, SCOPE_A, e, &a)?;
            let gain_b = arrival_weight(oracle, SCOPE_B, e, &b)?;
            let (side, state, weight) = if gain_a > gain_b {
                (Side::A, &mut a, gain_a)
            } else {
                (Side::B, &mut b, gain_b)
            };
            let decision = process(matroid, e, state, weight, self.beta)?;
            disjoint_throughout &= a.a.is_disjoint(&b.a);
            debug_assert!(disjoint_throughout, "copies overlap after element {e}");
            if let Some(t) = trace.as_mut() {
                t.push(TraceEntry {
                    element: e,
                    weight,
                    side: Some(side),
                    decision,
                });
            }
        }

        let value_a = oracle.evaluate_uncounted(&a.a_prime);
        let value_b = oracle.evaluate_uncounted(&b.a_prime);
        let best = if value_a > value_b { &a } else { &b };
        let result = AlgoResult::finish(oracle, best.a_prime.clone(), 2, trace);
        Ok(NmRun {
            result,
            a,
            b,
            disjoint_throughout,
            beta: self.beta,
        })
    }
}

pub fn quickswap_nm<M: Matroid + ?Sized>(
    oracle: &mut CountingOracle<'_>,
    matroid: &M,
    order: &[Element],
    beta: Beta,
) -> Result<AlgoResult> {
    Ok(QuickSwapNm::new(beta).run(oracle, matroid, order)?.result)
}
