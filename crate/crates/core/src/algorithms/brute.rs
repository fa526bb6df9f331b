use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle::{SetFunction, Value};
use crate::set::ElementSet;

/// Largest ground set [`brute_force_opt`] will enumerate.
pub const MAX_BRUTE_FORCE: usize = 20;

/// Exact maximizer of `f` over the independent sets of `matroid`.
///
/// Independent sets are enumerated depth-first in lexicographic order of
/// their sorted members, pruning at dependent sets. Only a strictly better
/// value replaces the incumbent, so ties resolve to the lexicographically
/// smallest set.
pub fn brute_force_opt<F, M>(f: &F, matroid: &M) -> Result<(ElementSet, Value)>
where
    F: SetFunction + ?Sized,
    M: Matroid + ?Sized,
{
    let n = f.ground_size();
    if n > MAX_BRUTE_FORCE {
        return Err(Error::TooLarge {
            n,
            max: MAX_BRUTE_FORCE,
        });
    }
    let empty = ElementSet::new();
    let mut best = (empty.clone(), f.value(&empty));
    let mut current = empty;
    extend(f, matroid, n, 0, &mut current, &mut best);
    Ok(best)
}

fn extend<F, M>(
    f: &F,
    matroid: &M,
    n: usize,
    from: usize,
    current: &mut ElementSet,
    best: &mut (ElementSet, Value),
) where
    F: SetFunction + ?Sized,
    M: Matroid + ?Sized,
{
    for e in from..n {
        if !matroid.can_add(current, e) {
            continue;
        }
        current.insert(e);
        let v = f.value(current);
        if v > best.1 {
            *best = (current.clone(), v);
        }
        extend(f, matroid, n, e + 1, current, best);
        current.remove(e);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::UniformMatroid;
    use crate::objective::{ModularObjective, TightObjective};

    #[test]
    fn tight_optimum_is_heavy_singleton() {
        let f = TightObjective::new(2).unwrap();
        let (s, v) = brute_force_opt(&f, &UniformMatroid::new(4, 1)).unwrap();
        assert_eq!(s, ElementSet::singleton(3));
        assert_eq!(v, 14);
    }

    #[test]
    fn empty_ground_set() {
        let f = ModularObjective::new(vec![]);
        let (s, v) = brute_force_opt(&f, &UniformMatroid::new(0, 0)).unwrap();
        assert!(s.is_empty());
        assert_eq!(v, 0);
    }

    #[test]
    fn monotone_full_rank_takes_everything() {
        let f = ModularObjective::new(vec![1, 0, 2, 5]);
        let (s, v) = brute_force_opt(&f, &UniformMatroid::new(4, 4)).unwrap();
        // ties with {0,2,3}; (0,1,2,3) is lexicographically smaller
        assert_eq!(s, ElementSet::full(4));
        assert_eq!(v, 8);
        let g = ModularObjective::new(vec![1, 3, 2, 5]);
        let (s, _) = brute_force_opt(&g, &UniformMatroid::new(4, 4)).unwrap();
        assert_eq!(s, ElementSet::full(4));
    }

    #[test]
    fn ties_pick_lexicographically_smallest() {
        let f = ModularObjective::new(vec![2, 2, 2]);
        let (s, _) = brute_force_opt(&f, &UniformMatroid::new(3, 2)).unwrap();
        assert_eq!(s.to_vec(), vec![0, 1]);
    }

    #[test]
    fn refuses_large_ground_sets() {
        let f = ModularObjective::new(vec![1; 21]);
        assert!(matches!(
            brute_force_opt(&f, &UniformMatroid::new(21, 2)),
            Err(Error::TooLarge { n: 21, max: 20 })
        ));
    }
}
