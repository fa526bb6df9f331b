//! Tight-family report and randomized lemma verification.

use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::algorithms::{
    brute_force_opt, check_lemma_nm, check_lemmas_msm, Beta, MsmLemmaReport, QuickSwap, QuickSwapNm,
};
use crate::error::{Error, Result};
use crate::instances::{
    build_tight, sample_random_instance, MatroidFamily, ObjectiveFamily, RngStream, SamplerConfig,
};
use crate::oracle::{CountingOracle, SetFunction, Value};
use crate::set::{Element, ElementSet};

/// Outcome of QuickSwap on the tight instance with parameter `m`.
#[derive(Debug, Clone)]
pub struct TightReport {
    pub m: u32,
    pub solution: Vec<Element>,
    pub f_a_prime: Value,
    pub opt: Value,
    pub queries: u64,
    /// `OPT / f(A')`.
    pub ratio: Ratio<i128>,
    /// `4 - 2^(1-m)`.
    pub expected: Ratio<i128>,
    pub lemmas: MsmLemmaReport,
}

impl TightReport {
    /// Solution is `{x_m}` and the ratio matches exactly.
    pub fn exact(&self) -> bool {
        self.solution == [self.m as usize]
            && self.f_a_prime == 1 << self.m
            && self.opt == (1 << (self.m + 2)) - 2
            && self.ratio == self.expected
    }
}

impl fmt::Display for TightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m = {}", self.m)?;
        writeln!(f, "solution = {:?}", self.solution)?;
        writeln!(f, "f(A') = {}", self.f_a_prime)?;
        writeln!(f, "OPT = {}", self.opt)?;
        writeln!(f, "queries = {}", self.queries)?;
        writeln!(
            f,
            "OPT / f(A') = {} (expected 4 - 2^(1-m) = {})",
            self.ratio, self.expected
        )?;
        write!(
            f,
            "share slack = {}, union slack = {}",
            self.lemmas.share_slack, self.lemmas.union_slack
        )
    }
}

/// Runs QuickSwap with `β = 1` on the tight instance in canonical order and
/// compares the ratio against `4 - 2^(1-m)` in exact rational arithmetic.
pub fn tight_report(m: u32) -> Result<TightReport> {
    let inst = build_tight(m)?;
    let f = &inst.objective;
    let mut oracle = CountingOracle::new(f);
    let run = QuickSwap::new(Beta::MONOTONE).run(&mut oracle, &inst.matroid, &inst.order())?;
    // rank one, so the optimum is the best singleton
    let (opt_element, opt) = (0..inst.ground_size())
        .map(|e| (e, f.value(&ElementSet::singleton(e))))
        .max_by_key(|&(e, v)| (v, std::cmp::Reverse(e)))
        .expect("tight instances are non-empty");
    let f_a_prime = run.result.value;
    if f_a_prime <= 0 {
        return Err(Error::Contract(format!(
            "tight run returned value {f_a_prime}"
        )));
    }
    let ratio = Ratio::new(opt as i128, f_a_prime as i128);
    let expected = Ratio::from_integer(4) - Ratio::new(2, 1i128 << m);
    let lemmas = check_lemmas_msm(f, &run, &ElementSet::singleton(opt_element));
    Ok(TightReport {
        m,
        solution: run.result.solution.to_vec(),
        f_a_prime,
        opt,
        queries: run.result.queries,
        ratio,
        expected,
        lemmas,
    })
}

/// Largest ground set drawn by [`run_verify`].
pub const VERIFY_MAX_N: usize = 10;

/// Swap parameters exercised on every monotone instance.
pub const VERIFY_BETAS: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialKind {
    Monotone,
    NonMonotone,
}

impl TrialKind {
    fn stream(self) -> &'static str {
        match self {
            TrialKind::Monotone => "verify/monotone",
            TrialKind::NonMonotone => "verify/non-monotone",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub kind: TrialKind,
    pub seed: u64,
    pub trial: u64,
    pub beta: f64,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} trial {} (seed {}, beta {}): {}; replay with `verify --seed {} --trials {}`",
            self.kind,
            self.trial,
            self.seed,
            self.beta,
            self.detail,
            self.seed,
            self.trial + 1
        )
    }
}

/// Draws the monotone instance of trial `trial`: coverage with a uniform or
/// partition matroid on at most [`VERIFY_MAX_N`] elements.
pub fn monotone_trial_instance(seed: u64, trial: u64) -> Result<crate::instances::Instance> {
    let config = SamplerConfig::new(0)
        .sizes(0, VERIFY_MAX_N)
        .objective(ObjectiveFamily::Coverage)
        .matroid(MatroidFamily::Either);
    sample_random_instance(
        &config,
        &mut RngStream::new(seed, TrialKind::Monotone.stream(), trial).rng(),
    )
}

/// Draws the cut instance of trial `trial`.
pub fn non_monotone_trial_instance(seed: u64, trial: u64) -> Result<crate::instances::Instance> {
    let config = SamplerConfig::new(0)
        .sizes(0, VERIFY_MAX_N)
        .objective(ObjectiveFamily::Cut)
        .matroid(MatroidFamily::Either);
    sample_random_instance(
        &config,
        &mut RngStream::new(seed, TrialKind::NonMonotone.stream(), trial).rng(),
    )
}

fn order_for(seed: u64, kind: TrialKind, trial: u64, n: usize) -> Vec<Element> {
    use rand::seq::SliceRandom;
    let mut order: Vec<Element> = (0..n).collect();
    let purpose = format!("{}/order", kind.stream());
    order.shuffle(&mut RngStream::new(seed, purpose, trial).rng());
    order
}

/// Checks query count, both single-copy inequalities and the ratio for every
/// β in [`VERIFY_BETAS`].
pub fn monotone_trial(seed: u64, trial: u64) -> Result<Vec<Violation>> {
    let inst = monotone_trial_instance(seed, trial)?;
    let f = &inst.objective;
    let n = inst.ground_size();
    let order = order_for(seed, TrialKind::Monotone, trial, n);
    let (opt, _) = brute_force_opt(f, &inst.matroid)?;
    let mut out = Vec::new();
    for beta in VERIFY_BETAS {
        let beta = Beta::new(beta)?;
        let mut oracle = CountingOracle::new(f);
        let run = QuickSwap::new(beta).run(&mut oracle, &inst.matroid, &order)?;
        let r = check_lemmas_msm(f, &run, &opt);
        let mut fail = |detail: String| {
            out.push(Violation {
                kind: TrialKind::Monotone,
                seed,
                trial,
                beta: beta.get(),
                detail,
            })
        };
        if run.result.queries != n as u64 {
            fail(format!("{} queries on n = {n}", run.result.queries));
        }
        if !r.share_holds {
            fail(format!("share slack {}", r.share_slack));
        }
        if !r.union_holds {
            fail(format!("union slack {}", r.union_slack));
        }
        if !r.telescoping_holds {
            fail("cached f(A) disagrees with a fresh evaluation".into());
        }
        if !r.ratio_holds {
            fail(format!("f(A') = {} against OPT = {}", r.f_a_prime, r.f_opt));
        }
    }
    Ok(out)
}

/// Checks query count, disjointness, the two-copy inequality and the ratio
/// with `β = 1/√2`.
pub fn non_monotone_trial(seed: u64, trial: u64) -> Result<Vec<Violation>> {
    let inst = non_monotone_trial_instance(seed, trial)?;
    let f = &inst.objective;
    let n = inst.ground_size();
    let order = order_for(seed, TrialKind::NonMonotone, trial, n);
    let (opt, _) = brute_force_opt(f, &inst.matroid)?;
    let beta = Beta::NON_MONOTONE;
    let mut oracle = CountingOracle::new(f);
    let run = QuickSwapNm::new(beta).run(&mut oracle, &inst.matroid, &order)?;
    let r = check_lemma_nm(f, &run, &opt);
    let mut out = Vec::new();
    let mut fail = |detail: String| {
        out.push(Violation {
            kind: TrialKind::NonMonotone,
            seed,
            trial,
            beta: beta.get(),
            detail,
        })
    };
    if run.result.queries != 2 * n as u64 {
        fail(format!("{} queries on n = {n}", run.result.queries));
    }
    if !r.disjoint {
        fail("copies overlap".into());
    }
    if !r.union_holds {
        fail(format!("two-copy union slack {}", r.union_slack));
    }
    if !r.share_holds {
        fail("per-copy share inequality fails".into());
    }
    if !r.ratio_holds {
        fail(format!(
            "best copy {} against OPT = {}",
            r.best_value, r.f_opt
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub trials: u64,
    pub seed: u64,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `trials` monotone and `trials` non-monotone trials.
pub fn run_verify(trials: u64, seed: u64) -> Result<VerifyReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let per_trial: Vec<Vec<Violation>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut v = monotone_trial(seed, t)?;
            v.extend(non_monotone_trial(seed, t)?);
            Ok(v)
        })
        .collect::<Result<_>>()?;
    Ok(VerifyReport {
        trials,
        seed,
        violations: per_trial.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_small_cases() {
        let r = tight_report(1).unwrap();
        assert_eq!((r.f_a_prime, r.opt), (2, 6));
        assert_eq!(r.ratio, Ratio::from_integer(3));
        assert!(r.exact());

        let r = tight_report(2).unwrap();
        assert_eq!((r.f_a_prime, r.opt), (4, 14));
        assert_eq!(r.lemmas.share_slack, 0.5);
        assert_eq!(r.lemmas.union_slack, 1.0);

        let r = tight_report(10).unwrap();
        assert_eq!((r.f_a_prime, r.opt, r.queries), (1024, 4094, 12));
        assert!(r.exact());
    }

    #[test]
    fn tight_range() {
        assert!(tight_report(0).is_err());
        assert!(tight_report(61).is_err());
        assert!(tight_report(60).unwrap().exact());
    }

    #[test]
    fn zero_trials_is_an_error() {
        assert!(run_verify(0, 1).is_err());
    }

    #[test]
    fn a_few_trials_pass() {
        let r = run_verify(20, 42).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn trials_are_replayable() {
        let a = monotone_trial_instance(5, 3).unwrap();
        let b = monotone_trial_instance(5, 3).unwrap();
        assert_eq!(a.matroid, b.matroid);
        assert_eq!(
            order_for(5, TrialKind::Monotone, 3, 8),
            order_for(5, TrialKind::Monotone, 3, 8)
        );
    }
}
