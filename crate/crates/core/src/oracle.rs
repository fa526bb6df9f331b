//! Value oracles with exact query accounting.
//!
//! A *query* is one evaluation of the objective on a set that has not been
//! evaluated before. [`CountingOracle`] memoizes every set it evaluates, so
//! repeating a computation never increases the count.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{Element, ElementSet};

/// Objective values. All objectives here are integer valued; keeping them as
/// integers makes every accept/reject comparison exact.
pub type Value = i64;

/// A set function over the ground set `0..ground_size()`.
pub trait SetFunction {
    fn ground_size(&self) -> usize;

    /// `f(set)`. Callers guarantee every member is `< ground_size()`.
    fn value(&self, set: &ElementSet) -> Value;

    /// Whether `f(∅) = 0` holds. Normalized objectives get `f(∅)` for free.
    fn is_normalized(&self) -> bool {
        true
    }
}

impl<F: SetFunction + ?Sized> SetFunction for &F {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn value(&self, set: &ElementSet) -> Value {
        (**self).value(set)
    }

    fn is_normalized(&self) -> bool {
        (**self).is_normalized()
    }
}

/// Identifies an independent query ledger inside one oracle.
///
/// Algorithms that run several solution copies side by side charge each
/// copy's queries to its own scope; a set shared by two scopes is charged
/// once per scope.
pub type Scope = u8;

/// Memoizing, counting wrapper around a [`SetFunction`].
pub struct CountingOracle<'f> {
    inner: &'f dyn SetFunction,
    memo: HashMap<(Scope, ElementSet), Value>,
    queries: u64,
    bootstrap_queries: u64,
    free_entries: u64,
}

impl<'f> CountingOracle<'f> {
    pub fn new(inner: &'f dyn SetFunction) -> Self {
        CountingOracle {
            inner,
            memo: HashMap::new(),
            queries: 0,
            bootstrap_queries: 0,
            free_entries: 0,
        }
    }

    pub fn function(&self) -> &'f dyn SetFunction {
        self.inner
    }

    pub fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    /// Distinct sets evaluated so far, excluding the `f(∅)` bootstrap.
    pub fn queries(&self) -> u64 {
        self.queries
    }

    /// Queries spent learning `f(∅)` for non-normalized objectives.
    pub fn bootstrap_queries(&self) -> u64 {
        self.bootstrap_queries
    }

    /// `f(s)`, charging one query the first time `s` is seen.
    pub fn value(&mut self, s: &ElementSet) -> Result<Value> {
        self.value_scoped(0, s)
    }

    pub fn value_scoped(&mut self, scope: Scope, s: &ElementSet) -> Result<Value> {
        self.check_range(s)?;
        let key = (scope, s.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = self.inner.value(s);
        self.memo.insert(key, v);
        self.queries += 1;
        self.debug_check_ledger();
        Ok(v)
    }

    /// `f(e | s) = f(s + e) - f(s)`, where the caller already knows
    /// `f(s) = cached_fs`. Costs at most the single query `f(s + e)`.
    pub fn marginal(&mut self, e: Element, s: &ElementSet, cached_fs: Value) -> Result<Value> {
        self.marginal_scoped(0, e, s, cached_fs)
    }

    pub fn marginal_scoped(
        &mut self,
        scope: Scope,
        e: Element,
        s: &ElementSet,
        cached_fs: Value,
    ) -> Result<Value> {
        if s.contains(e) {
            return Err(Error::ElementPresent(e));
        }
        Ok(self.value_scoped(scope, &s.with(e))? - cached_fs)
    }

    /// `f(∅)` as the starting value of an incremental run.
    ///
    /// Free for normalized objectives. Otherwise one query is spent and
    /// reported through [`bootstrap_queries`](Self::bootstrap_queries)
    /// rather than [`queries`](Self::queries).
    pub fn empty_value(&mut self) -> Value {
        self.empty_value_scoped(0)
    }

    pub fn empty_value_scoped(&mut self, scope: Scope) -> Value {
        let key = (scope, ElementSet::new());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = if self.inner.is_normalized() {
            self.free_entries += 1;
            0
        } else {
            self.bootstrap_queries += 1;
            self.inner.value(&ElementSet::new())
        };
        self.memo.insert(key, v);
        self.debug_check_ledger();
        v
    }

    /// Evaluates `f(s)` without touching the memo or the counters. Used for
    /// reporting and verification only.
    pub fn evaluate_uncounted(&self, s: &ElementSet) -> Value {
        self.inner.value(s)
    }

    fn check_range(&self, s: &ElementSet) -> Result<()> {
        match s.max_element() {
            Some(e) if e >= self.inner.ground_size() => Err(Error::ElementOutOfRange {
                element: e,
                ground_size: self.inner.ground_size(),
            }),
            _ => Ok(()),
        }
    }

    fn debug_check_ledger(&self) {
        debug_assert_eq!(
            self.memo.len() as u64,
            self.queries + self.bootstrap_queries + self.free_entries,
            "memo entries and query ledger disagree"
        );
    }
}

/// Cheapest element of `sol` that can be exchanged for `e`:
/// `argmin { weight(a) : a ∈ sol, sol - a + e independent }`, ties broken by
/// the smaller id. `None` when no exchange keeps `sol` independent, which
/// happens exactly when `e` is a loop.
pub fn swap_candidate<M, W>(
    matroid: &M,
    sol: &ElementSet,
    e: Element,
    weight: W,
) -> Result<Option<Element>>
where
    M: Matroid + ?Sized,
    W: Fn(Element) -> Value,
{
    if !matroid.independent(sol) {
        return Err(Error::Contract(
            "swap candidate requested for a dependent solution".into(),
        ));
    }
    // candidates arrive in increasing id order, so strict `<` keeps the
    // smallest id among equal weights
    let mut best: Option<(Value, Element)> = None;
    for a in matroid.exchange_candidates(sol, e) {
        let w = weight(a);
        if best.is_none_or(|(bw, _)| w < bw) {
            best = Some((w, a));
        }
    }
    Ok(best.map(|(_, a)| a))
}
