//! The finite part F(D) (states reached by finitely many words) and the
//! infinite part I(D), by two independent characterizations.

use crate::dfa::{Dfa, StateId};
use crate::graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartsPartition {
    infinite: Vec<bool>,
}

impl PartsPartition {
    pub fn from_mask(infinite: Vec<bool>) -> Self {
        PartsPartition { infinite }
    }

    pub fn is_infinite(&self, q: StateId) -> bool {
        self.infinite[q]
    }

    pub fn is_finite(&self, q: StateId) -> bool {
        !self.infinite[q]
    }

    pub fn infinite_mask(&self) -> &[bool] {
        &self.infinite
    }

    /// F(D), ascending.
    pub fn finite_part(&self) -> Vec<StateId> {
        (0..self.infinite.len()).filter(|&q| !self.infinite[q]).collect()
    }

    /// I(D), ascending.
    pub fn infinite_part(&self) -> Vec<StateId> {
        (0..self.infinite.len()).filter(|&q| self.infinite[q]).collect()
    }
}

/// I(D) = states on a directed cycle or reachable from one.
pub fn compute_parts(d: &Dfa) -> PartsPartition {
    let cyclic = graph::cyclic_states(d, None);
    PartsPartition {
        infinite: graph::reachable_from_set(d, &cyclic, None),
    }
}

/// I(D) = states reached by some word of length in `[|Q|, 2|Q|)`.
///
/// A word of length at least |Q| repeats a state on its run, so the state
/// it reaches is reached by infinitely many words. Conversely a state below
/// a cycle is reached by words of every length from some point on with gaps
/// smaller than the cycle length, so one lands in the window.
pub fn compute_parts_by_counting(d: &Dfa) -> PartsPartition {
    let n = d.num_states();
    let mut layer = vec![false; n];
    layer[d.start()] = true;
    let mut infinite = vec![false; n];
    for len in 0..2 * n {
        if len >= n {
            for q in 0..n {
                infinite[q] |= layer[q];
            }
        }
        let mut next = vec![false; n];
        for q in (0..n).filter(|&q| layer[q]) {
            for &t in d.row(q) {
                next[t] = true;
            }
        }
        layer = next;
    }
    PartsPartition { infinite }
}

/// Number of words w with δ(q₀, w) = q, or `None` when q is in the infinite
/// part.
///
/// Inbound edges of finite-part states come only from the finite part, which
/// is acyclic, so the count is a path count over a DAG.
pub fn words_reaching(d: &Dfa, parts: &PartsPartition, q: StateId) -> Option<u128> {
    if parts.is_infinite(q) {
        return None;
    }
    let finite = parts.finite_part();
    let n = d.num_states();
    let mut indegree = vec![0usize; n];
    for &p in &finite {
        for &t in d.row(p) {
            if parts.is_finite(t) {
                indegree[t] += 1;
            }
        }
    }
    let mut order: Vec<StateId> = finite.iter().copied().filter(|&p| indegree[p] == 0).collect();
    let mut count = vec![0u128; n];
    count[d.start()] = 1;
    let mut i = 0;
    while i < order.len() {
        let p = order[i];
        i += 1;
        for &t in d.row(p) {
            if parts.is_finite(t) {
                count[t] = count[t].saturating_add(count[p]);
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    order.push(t);
                }
            }
        }
    }
    Some(count[q])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn split(p: &PartsPartition) -> (Vec<StateId>, Vec<StateId>) {
        (p.finite_part(), p.infinite_part())
    }

    #[test]
    fn parts_examples() {
        assert_eq!(split(&compute_parts(&fixtures::zstar())), (vec![], vec![0, 1]));
        assert_eq!(split(&compute_parts(&fixtures::onezstar())), (vec![0], vec![1, 2]));
        assert_eq!(split(&compute_parts(&fixtures::sigplus())), (vec![0], vec![1]));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(
            split(&compute_parts_by_counting(&fixtures::onezstar())),
            (vec![0], vec![1, 2])
        );
        assert_eq!(split(&compute_parts_by_counting(&fixtures::all())), (vec![], vec![0]));
        assert_eq!(
            split(&compute_parts_by_counting(&fixtures::single_zero())),
            (vec![0, 1], vec![2])
        );
    }

    #[test]
    fn words_reaching_counts_paths() {
        let d = fixtures::zero_or_oneone();
        let parts = compute_parts(&d);
        // 0: ε; 1: "0", "11"; 2: "1"; 3: sink
        assert_eq!(words_reaching(&d, &parts, 0), Some(1));
        assert_eq!(words_reaching(&d, &parts, 1), Some(2));
        assert_eq!(words_reaching(&d, &parts, 2), Some(1));
        assert_eq!(words_reaching(&d, &parts, 3), None);
    }
}
