//! Runtime checks of the inequalities behind the approximation guarantees.
//!
//! For a single-copy run with final sets `A' ⊆ A` and any optimum `O`:
//!
//! ```text
//! f(A') >= β f(A) / (1 + β)                 (feasible set keeps a share of A)
//! f(O ∪ A) <= f(A) + (1 + β) f(A')           (rejected optimum elements are paid for)
//! ```
//!
//! For the two-copy run, with `A` and `B` disjoint:
//!
//! ```text
//! max{f(O ∪ B) - f(B), f(O ∪ A) - f(A)} <= (1 + β)(f(B') + f(A'))
//! max{f(A'), f(B')} >= f(O) / (2(2(1 + β) + (1 + β)/β))
//! ```
//!
//! All evaluations bypass query accounting.

use crate::oracle::{SetFunction, Value};
use crate::set::ElementSet;

use super::nonmonotone::NmRun;
use super::quickswap::{SwapRun, SwapState};
use super::Beta;

#[derive(Debug, Clone, PartialEq)]
pub struct MsmLemmaReport {
    pub beta: f64,
    pub f_a_prime: Value,
    pub f_a: Value,
    pub f_opt: Value,
    pub f_opt_union_a: Value,
    /// `f(A') - β f(A) / (1 + β)`.
    pub share_slack: f64,
    /// `f(A) + (1 + β) f(A') - f(O ∪ A)`.
    pub union_slack: f64,
    pub share_holds: bool,
    pub union_holds: bool,
    /// `f(A') >= β/(1+β)^2 · f(O)`; meaningful for monotone objectives.
    pub ratio_holds: bool,
    /// Incremental `f(A)` bookkeeping agrees with a fresh evaluation.
    pub telescoping_holds: bool,
}

impl MsmLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.share_holds && self.union_holds && self.telescoping_holds
    }
}

fn share_holds(beta: Beta, f_a_prime: Value, f_a: Value) -> bool {
    let b = beta.get();
    (1.0 + b) * f_a_prime as f64 >= b * f_a as f64
}

fn share_slack(beta: Beta, f_a_prime: Value, f_a: Value) -> f64 {
    let b = beta.get();
    f_a_prime as f64 - b * f_a as f64 / (1.0 + b)
}

fn union_bound(beta: Beta, f_a: Value, f_a_prime: Value) -> f64 {
    f_a as f64 + (1.0 + beta.get()) * f_a_prime as f64
}

/// Checks both single-copy inequalities and the `β/(1+β)^2` ratio for `run`
/// against the optimum `opt`.
pub fn check_lemmas_msm<F>(f: &F, run: &SwapRun, opt: &ElementSet) -> MsmLemmaReport
where
    F: SetFunction + ?Sized,
{
    let beta = run.beta;
    let state: &SwapState = &run.state;
    let f_a_prime = f.value(&state.a_prime);
    let f_a = f.value(&state.a);
    let f_opt = f.value(opt);
    let f_opt_union_a = f.value(&opt.union(&state.a));
    let bound = union_bound(beta, f_a, f_a_prime);
    let ratio = beta.monotone_ratio();
    MsmLemmaReport {
        beta: beta.get(),
        f_a_prime,
        f_a,
        f_opt,
        f_opt_union_a,
        share_slack: share_slack(beta, f_a_prime, f_a),
        union_slack: bound - f_opt_union_a as f64,
        share_holds: share_holds(beta, f_a_prime, f_a),
        union_holds: f_opt_union_a as f64 <= bound,
        ratio_holds: f_a_prime as f64 >= ratio * f_opt as f64,
        telescoping_holds: state.a_value == f_a
            && state.weight_sum() + f.value(&ElementSet::new()) == f_a,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NmLemmaReport {
    pub beta: f64,
    pub disjoint: bool,
    /// `(1 + β)(f(B') + f(A')) - max{f(O ∪ B) - f(B), f(O ∪ A) - f(A)}`.
    pub union_slack: f64,
    pub union_holds: bool,
    /// Single-copy share inequality on each copy.
    pub share_holds: bool,
    pub best_value: Value,
    pub f_opt: Value,
    pub ratio_holds: bool,
}

impl NmLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.disjoint && self.union_holds && self.share_holds && self.ratio_holds
    }
}

/// Checks disjointness, the two-copy union inequality, per-copy shares and
/// the final ratio for `run` against the optimum `opt`.
pub fn check_lemma_nm<F>(f: &F, run: &NmRun, opt: &ElementSet) -> NmLemmaReport
where
    F: SetFunction + ?Sized,
{
    let beta = run.beta;
    let b = beta.get();
    let (a, bb) = (&run.a, &run.b);
    let f_a = f.value(&a.a);
    let f_b = f.value(&bb.a);
    let f_a_prime = f.value(&a.a_prime);
    let f_b_prime = f.value(&bb.a_prime);
    let f_opt = f.value(opt);
    let gap_a = f.value(&opt.union(&a.a)) - f_a;
    let gap_b = f.value(&opt.union(&bb.a)) - f_b;
    let bound = (1.0 + b) * (f_a_prime + f_b_prime) as f64;
    let worst = gap_a.max(gap_b) as f64;
    let best_value = f_a_prime.max(f_b_prime);
    NmLemmaReport {
        beta: b,
        disjoint: run.disjoint_throughout && a.a.is_disjoint(&bb.a),
        union_slack: bound - worst,
        union_holds: worst <= bound,
        share_holds: share_holds(beta, f_a_prime, f_a) && share_holds(beta, f_b_prime, f_b),
        best_value,
        f_opt,
        ratio_holds: best_value as f64 * beta.non_monotone_denominator() >= f_opt as f64,
    }
}
