//! Maximization algorithms and their shared result types.
//!
//! Every algorithm consumes a [`CountingOracle`] and reports the number of
//! distinct value queries it spent. Reporting the objective value of the
//! returned set uses separate, uncounted evaluations.

mod brute;
mod ck;
mod greedy;
mod lemmas;
mod nonmonotone;
mod quickswap;
mod threshold;

use std::fmt;
use std::str::FromStr;

pub use brute::{brute_force_opt, MAX_BRUTE_FORCE};
pub use ck::ck;
pub use greedy::{lazy_greedy, naive_greedy};
pub use lemmas::{check_lemma_nm, check_lemmas_msm, MsmLemmaReport, NmLemmaReport};
pub use nonmonotone::{quickswap_nm, NmRun, QuickSwapNm};
pub use quickswap::{process, quickswap, QuickSwap, SwapRun, SwapState};
pub use threshold::{threshold_greedy, DEFAULT_EPSILON};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle::{CountingOracle, SetFunction, Value};
use crate::set::{Element, ElementSet};

/// What happened to one element during a single-pass run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Added,
    Swapped { out: Element },
    Rejected,
}

/// Which solution copy processed an element in the two-copy algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub element: Element,
    /// Weight fixed at arrival.
    pub weight: Value,
    pub side: Option<Side>,
    pub decision: Decision,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgoResult {
    pub solution: ElementSet,
    /// Uncounted evaluation of `f(solution)`.
    pub value: Value,
    /// Distinct value queries charged by the algorithm itself.
    pub queries: u64,
    /// Uncounted evaluations spent reporting values of candidate solutions.
    pub reporting_queries: u64,
    /// Queries spent learning `f(∅)` for a non-normalized objective.
    pub bootstrap_queries: u64,
    pub trace: Option<Vec<TraceEntry>>,
}

impl AlgoResult {
    fn finish(
        oracle: &CountingOracle<'_>,
        solution: ElementSet,
        reporting_queries: u64,
        trace: Option<Vec<TraceEntry>>,
    ) -> Self {
        let value = oracle.evaluate_uncounted(&solution);
        AlgoResult {
            solution,
            value,
            queries: oracle.queries(),
            reporting_queries,
            bootstrap_queries: oracle.bootstrap_queries(),
            trace,
        }
    }
}

/// Swap aggressiveness `β > 0`: an arriving element displaces `a` only if
/// its weight is at least `(1 + β)` times `a`'s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beta(f64);

impl Beta {
    /// Ratio-optimal for monotone objectives.
    pub const MONOTONE: Beta = Beta(1.0);
    /// Ratio-optimal for the two-copy non-monotone algorithm.
    pub const NON_MONOTONE: Beta = Beta(std::f64::consts::FRAC_1_SQRT_2);

    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && beta > 0.0 {
            Ok(Beta(beta))
        } else {
            Err(Error::InvalidParameter(format!(
                "beta must be positive and finite, got {beta}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `incoming >= (1 + β) * outgoing`, inclusive.
    ///
    /// Exact integer arithmetic whenever `2(1 + β)` is a small integer
    /// (β ∈ {1/2, 1, 3/2, 2, ..}); otherwise a plain IEEE comparison.
    pub fn admits_swap(self, incoming: Value, outgoing: Value) -> bool {
        let twice = 2.0 * (1.0 + self.0);
        if twice.fract() == 0.0 && twice <= (1u64 << 20) as f64 {
            2 * incoming as i128 >= twice as i128 * outgoing as i128
        } else {
            incoming as f64 >= (1.0 + self.0) * outgoing as f64
        }
    }

    /// Guaranteed ratio `β / (1 + β)^2` of the single-copy algorithm on
    /// monotone objectives; `1/4` at `β = 1`.
    pub fn monotone_ratio(self) -> f64 {
        self.0 / ((1.0 + self.0) * (1.0 + self.0))
    }

    /// Denominator `2(2(1 + β) + (1 + β)/β)` of the two-copy algorithm's
    /// guarantee; `6 + 4√2` at `β = 1/√2`.
    pub fn non_monotone_denominator(self) -> f64 {
        let b = self.0;
        2.0 * (2.0 * (1.0 + b) + (1.0 + b) / b)
    }
}

impl Default for Beta {
    fn default() -> Self {
        Beta::MONOTONE
    }
}

/// The algorithms the benchmark harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmKind {
    QuickSwap,
    QuickSwapNm,
    Ck,
    LazyGreedy,
    ThresholdGreedy,
}

impl AlgorithmKind {
    /// The four algorithms compared on monotone coverage instances.
    pub const PAPER_SET: [AlgorithmKind; 4] = [
        AlgorithmKind::QuickSwap,
        AlgorithmKind::Ck,
        AlgorithmKind::LazyGreedy,
        AlgorithmKind::ThresholdGreedy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmKind::QuickSwap => "quickswap",
            AlgorithmKind::QuickSwapNm => "quickswap-nm",
            AlgorithmKind::Ck => "ck",
            AlgorithmKind::LazyGreedy => "lazy-greedy",
            AlgorithmKind::ThresholdGreedy => "threshold-greedy",
        }
    }

    /// Whether the algorithm reads the processing order. The greedy variants
    /// other than threshold greedy ignore it.
    pub fn uses_order(self) -> bool {
        !matches!(self, AlgorithmKind::LazyGreedy)
    }

    /// Runs on a fresh oracle with the default parameters.
    pub fn run(
        self,
        f: &dyn SetFunction,
        matroid: &dyn Matroid,
        order: &[Element],
    ) -> Result<AlgoResult> {
        let mut oracle = CountingOracle::new(f);
        match self {
            AlgorithmKind::QuickSwap => quickswap(&mut oracle, matroid, order, Beta::MONOTONE),
            AlgorithmKind::QuickSwapNm => {
                quickswap_nm(&mut oracle, matroid, order, Beta::NON_MONOTONE)
            }
            AlgorithmKind::Ck => ck(&mut oracle, matroid, order),
            AlgorithmKind::LazyGreedy => lazy_greedy(&mut oracle, matroid),
            AlgorithmKind::ThresholdGreedy => {
                threshold_greedy(&mut oracle, matroid, order, DEFAULT_EPSILON)
            }
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(
            match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
                "quickswap" => AlgorithmKind::QuickSwap,
                "quickswap-nm" | "quickswapnm" => AlgorithmKind::QuickSwapNm,
                "ck" => AlgorithmKind::Ck,
                "lazy-greedy" | "lazy" => AlgorithmKind::LazyGreedy,
                "threshold-greedy" | "threshold" => AlgorithmKind::ThresholdGreedy,
                _ => return Err(Error::UnknownAlgorithm(s.to_string())),
            },
        )
    }
}
