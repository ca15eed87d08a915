//! The finite-difference relation `~` on states and machines, state-class
//! partitions and the class signature S(D).

use std::collections::HashMap;
use std::sync::RwLock;

use crate::dfa::{Dfa, StateId};
use crate::error::DfaError;
use crate::language::{language_is_infinite, state_difference, symmetric_difference, DiffResult};
use crate::minimize::minimize;
use crate::parts::compute_parts;
use crate::product::product_xor_from;

/// Decides `p ~ q` and returns L(p) △ L(q): finite iff the states are
/// finitely different.
pub fn states_finitely_different(d: &Dfa, p: StateId, q: StateId) -> Result<DiffResult, DfaError> {
    state_difference(d, p, d, q)
}

/// The same decision by the product characterization: `p ~ q` iff the
/// minimized xor product has an infinite part consisting of one
/// non-accepting state whose transitions all loop back to itself.
pub fn finitely_different_by_minimized_product(
    d: &Dfa,
    p: StateId,
    q: StateId,
) -> Result<bool, DfaError> {
    d.check_state(p)?;
    d.check_state(q)?;
    let product = minimize(&product_xor_from(d, p, d, q).dfa).dfa;
    let infinite = compute_parts(&product).infinite_part();
    Ok(match infinite[..] {
        [sink] => !product.is_accepting(sink) && product.row(sink).iter().all(|&t| t == sink),
        _ => false,
    })
}

/// `p ~ q` for a state `p` of `a` and a state `q` of `b` (same alphabet).
pub(crate) fn related_across(a: &Dfa, p: StateId, b: &Dfa, q: StateId) -> bool {
    !language_is_infinite(&product_xor_from(a, p, b, q).dfa)
}

/// `a ~ b`; the verdict is `DiffResult::is_finite`.
pub fn dfas_finitely_different(a: &Dfa, b: &Dfa) -> Result<DiffResult, DfaError> {
    symmetric_difference(a, b)
}

/// Memoized pairwise `~` verdicts for one automaton.
///
/// The table may be shared between threads; verdicts are deterministic, so
/// concurrent inserts of the same key store the same value.
#[derive(Debug)]
pub struct FinDiffTable<'a> {
    dfa: &'a Dfa,
    memo: RwLock<HashMap<(StateId, StateId), bool>>,
}

impl<'a> FinDiffTable<'a> {
    pub fn new(dfa: &'a Dfa) -> Self {
        FinDiffTable {
            dfa,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn dfa(&self) -> &'a Dfa {
        self.dfa
    }

    /// `p ~ q`. Panics on ids outside the automaton.
    pub fn related(&self, p: StateId, q: StateId) -> bool {
        if p == q {
            return true;
        }
        let key = (p.min(q), p.max(q));
        if let Some(&v) = self.memo.read().expect("memo lock poisoned").get(&key) {
            return v;
        }
        let verdict = related_across(self.dfa, key.0, self.dfa, key.1);
        self.memo
            .write()
            .expect("memo lock poisoned")
            .insert(key, verdict);
        verdict
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock poisoned").len()
    }
}

/// Partition of states into state-classes. A class is identified by its
/// smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateClassPartition {
    class_of: Vec<StateId>,
    classes: Vec<Vec<StateId>>,
}

impl StateClassPartition {
    /// Class id (smallest member) of `q`.
    pub fn class_of(&self, q: StateId) -> StateId {
        self.class_of[q]
    }

    pub fn same_class(&self, p: StateId, q: StateId) -> bool {
        self.class_of[p] == self.class_of[q]
    }

    /// Member lists in ascending order of class id.
    pub fn classes(&self) -> &[Vec<StateId>] {
        &self.classes
    }

    pub fn members(&self, q: StateId) -> &[StateId] {
        let id = self.class_of[q];
        let i = self
            .classes
            .binary_search_by_key(&id, |c| c[0])
            .expect("class id is the first member of its class");
        &self.classes[i]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

/// Groups states by `~`. Each state is tested against one representative
/// per existing class; transitivity of `~` makes that sufficient. Debug
/// builds additionally verify every pair.
pub fn state_class_partition(d: &Dfa) -> StateClassPartition {
    state_class_partition_with(&FinDiffTable::new(d))
}

pub fn state_class_partition_with(table: &FinDiffTable<'_>) -> StateClassPartition {
    let d = table.dfa();
    let mut class_of = vec![usize::MAX; d.num_states()];
    let mut classes: Vec<Vec<StateId>> = Vec::new();
    for q in d.states() {
        match classes.iter_mut().find(|c| table.related(c[0], q)) {
            Some(c) => {
                class_of[q] = c[0];
                c.push(q);
            }
            None => {
                class_of[q] = q;
                classes.push(vec![q]);
            }
        }
    }
    #[cfg(debug_assertions)]
    for p in d.states() {
        for q in p + 1..d.num_states() {
            assert_eq!(
                table.related(p, q),
                class_of[p] == class_of[q],
                "finite difference is not transitive on states {p}, {q}"
            );
        }
    }
    StateClassPartition { class_of, classes }
}

/// S(D): one entry per language-class represented among D's states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSignature {
    /// `(representative, Q_C)` per class, ascending by representative.
    pub classes: Vec<(StateId, Vec<StateId>)>,
}

impl ClassSignature {
    pub fn from_partition(p: &StateClassPartition) -> Self {
        ClassSignature {
            classes: p.classes().iter().map(|c| (c[0], c.clone())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn signature(d: &Dfa) -> ClassSignature {
    ClassSignature::from_partition(&state_class_partition(d))
}

/// Outcome of comparing S(a) with S(b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureComparison {
    pub equal: bool,
    /// Matched classes as `(class of a, class of b)`, by class id.
    pub matching: Vec<(StateId, StateId)>,
    /// Classes of `a` with no finitely different state in `b`.
    pub unmatched_left: Vec<StateId>,
    /// Classes of `b` with no finitely different state in `a`.
    pub unmatched_right: Vec<StateId>,
}

/// Decides S(a) = S(b) and, when equal, the bijection between the classes
/// of `a` and those of `b`.
pub fn signature_equal(a: &Dfa, b: &Dfa) -> Result<SignatureComparison, DfaError> {
    a.check_same_alphabet(b)?;
    let left = state_class_partition(a);
    let right = state_class_partition(b);
    let related = |p: StateId, q: StateId| related_across(a, p, b, q);
    let mut matching = Vec::new();
    let mut unmatched_left = Vec::new();
    let mut right_hit = vec![false; right.num_classes()];
    for class in left.classes() {
        match right.classes().iter().position(|rc| related(class[0], rc[0])) {
            Some(j) => {
                matching.push((class[0], right.classes()[j][0]));
                right_hit[j] = true;
            }
            None => unmatched_left.push(class[0]),
        }
    }
    let unmatched_right: Vec<StateId> = right
        .classes()
        .iter()
        .zip(&right_hit)
        .filter(|(_, &hit)| !hit)
        .map(|(c, _)| c[0])
        .collect();
    Ok(SignatureComparison {
        equal: unmatched_left.is_empty() && unmatched_right.is_empty(),
        matching,
        unmatched_left,
        unmatched_right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::Word;
    use crate::fixtures;

    #[test]
    fn state_relation_examples() {
        let s = fixtures::sigplus();
        assert_eq!(
            states_finitely_different(&s, 0, 1).unwrap(),
            DiffResult::Finite(vec![Word::empty()])
        );
        let o = fixtures::onezstar();
        let DiffResult::Infinite(lasso) = states_finitely_different(&o, 0, 1).unwrap() else {
            panic!("10* vs 0* is infinite");
        };
        for k in 0..4 {
            let w = lasso.word(k);
            assert_ne!(
                o.accepts(&w).unwrap(),
                o.run_from(1, &w).map(|q| o.is_accepting(q)).unwrap()
            );
        }
        assert_eq!(
            states_finitely_different(&o, 2, 2).unwrap(),
            DiffResult::Finite(vec![])
        );
        assert!(states_finitely_different(&o, 0, 9).is_err());
    }

    #[test]
    fn minimized_product_route_agrees() {
        for d in [
            fixtures::sigplus(),
            fixtures::onezstar(),
            fixtures::single_zero(),
            fixtures::odd(),
        ] {
            for p in d.states() {
                for q in d.states() {
                    assert_eq!(
                        finitely_different_by_minimized_product(&d, p, q).unwrap(),
                        states_finitely_different(&d, p, q).unwrap().is_finite()
                    );
                }
            }
        }
    }

    #[test]
    fn partition_examples() {
        let p = state_class_partition(&fixtures::onezstar());
        assert_eq!(p.classes(), &[vec![0], vec![1], vec![2]]);
        let p = state_class_partition(&fixtures::sigplus());
        assert_eq!(p.classes(), &[vec![0, 1]]);
        let p = state_class_partition(&fixtures::single_zero());
        assert_eq!(p.classes(), &[vec![0, 1, 2]]);
        assert_eq!(p.members(2), &[0, 1, 2]);
        assert_eq!(p.class_of(2), 0);
    }

    #[test]
    fn signature_examples() {
        let c = signature_equal(&fixtures::odd(), &fixtures::even()).unwrap();
        assert!(c.equal);
        assert_eq!(c.matching, vec![(0, 1), (1, 0)]);
        let c = signature_equal(&fixtures::zstar(), &fixtures::onezstar()).unwrap();
        assert!(!c.equal);
        assert_eq!(c.unmatched_right, vec![0]);
        assert!(c.unmatched_left.is_empty());
        let o = fixtures::onezstar();
        assert!(signature_equal(&o, &o).unwrap().equal);
        assert_eq!(signature(&o).len(), 3);
    }

    #[test]
    fn machine_relation_examples() {
        assert!(dfas_finitely_different(&fixtures::sigplus(), &fixtures::all()).unwrap().is_finite());
        assert!(!dfas_finitely_different(&fixtures::odd(), &fixtures::even()).unwrap().is_finite());
        assert!(!dfas_finitely_different(&fixtures::zstar(), &fixtures::onezstar()).unwrap().is_finite());
    }

    #[test]
    fn memo_is_shared_across_threads() {
        let d = fixtures::zero_or_oneone();
        let table = FinDiffTable::new(&d);
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for p in d.states() {
                        for q in d.states() {
                            let _ = table.related(p, q);
                        }
                    }
                });
            }
        });
        assert_eq!(table.cached(), 6);
        assert!(table.related(0, 3));
    }
}
