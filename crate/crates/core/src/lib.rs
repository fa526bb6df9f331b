//! Single-pass swap algorithms for submodular maximization under matroid
//! constraints, together with the baselines, instances and harness used to
//! evaluate them.
//!
//! Every algorithm talks to the objective through a [`CountingOracle`],
//! which memoizes evaluations and counts each distinct set it is asked about.
//!
//! ```
//! use quickswap::{quickswap, Beta, CountingOracle, ModularObjective, UniformMatroid};
//!
//! let f = ModularObjective::new(vec![3, 1, 4, 1, 5]);
//! let m = UniformMatroid::new(5, 2);
//! let mut oracle = CountingOracle::new(&f);
//! let r = quickswap(&mut oracle, &m, &[0, 1, 2, 3, 4], Beta::MONOTONE).unwrap();
//! assert_eq!(r.queries, 5);
//! assert_eq!(r.value, 7);
//! ```

pub mod algorithms;
pub mod bench;
pub mod error;
pub mod instances;
pub mod matroid;
pub mod objective;
pub mod oracle;
pub mod set;
pub mod verify;

pub use algorithms::{
    brute_force_opt, ck, lazy_greedy, naive_greedy, quickswap, quickswap_nm, threshold_greedy,
    AlgoResult, AlgorithmKind, Beta, Decision, QuickSwap, QuickSwapNm,
};
pub use error::{Error, Result};
pub use matroid::{Matroid, MatroidKind, PartitionMatroid, UniformMatroid};
pub use objective::{
    CoverageObjective, CutObjective, DirectedGraph, ModularObjective, Objective, TightObjective,
};
pub use oracle::{CountingOracle, SetFunction, Value};
pub use set::{Element, ElementSet, GroundSet};
