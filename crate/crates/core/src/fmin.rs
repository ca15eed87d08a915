//! f-merging and greedy f-minimization.
//!
//! An f-merge deletes a finite-part state `p` and sends its inbound edges to
//! a state `q ~ p`. Because only finitely many words reach `p` and L(p) and
//! L(q) differ on finitely many words, the language changes finitely.
//! Starting from a minimized DFA, merging until no pair is left yields a DFA
//! with the fewest states in its class.

use std::fmt;

use thiserror::Error;

use crate::classes::{state_class_partition, FinDiffTable, StateClassPartition};
use crate::dfa::{Dfa, Relabeled, StateId};
use crate::error::DfaError;
use crate::language::count_finite_language;
use crate::minimize::{is_minimized, minimize, moore_partition};
use crate::parts::{compute_parts, words_reaching, PartsPartition};
use crate::product::product_xor_from;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FMergeError {
    #[error(transparent)]
    Dfa(#[from] DfaError),
    #[error("cannot merge state {0} into itself")]
    SameState(StateId),
    #[error("state {0} is in the infinite part")]
    InfinitePart(StateId),
    #[error("states {p} and {q} are not finitely different (p ≁ q)")]
    NotRelated { p: StateId, q: StateId },
    #[error("target {q} reaches merged state {p}; the merge would close a cycle")]
    TargetReachesMerged { p: StateId, q: StateId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RedirectError {
    #[error(transparent)]
    Dfa(#[from] DfaError),
    #[error("source state {0} is in the infinite part")]
    SourceInfinite(StateId),
    #[error("current target {0} is in the finite part")]
    TargetFinite(StateId),
    #[error("new target {0} is in the finite part")]
    NewTargetFinite(StateId),
    #[error("new target {new} is not finitely different from current target {old}")]
    NotRelated { old: StateId, new: StateId },
}

/// One f-merge as performed by [`f_minimize`], in the numbering of the
/// automaton it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeRecord {
    pub merged: StateId,
    pub target: StateId,
    /// State-class id (smallest member) at merge time.
    pub class: StateId,
    /// |X|: words reaching the merged state.
    pub words_into_merged: u128,
    /// |Z|: size of L(p) △ L(q).
    pub diff_size: u128,
}

impl fmt::Display for MergeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "merge p={} into q={} class={} bound={}x{}",
            self.merged, self.target, self.class, self.words_into_merged, self.diff_size
        )
    }
}

pub type MergeTrace = Vec<MergeRecord>;

/// f-merge `p` into `q`: delete `p`, redirect every edge into `p` to `q`,
/// move the start to `q` if it was `p`, and drop states left unreachable.
///
/// `q` must not reach `p`. Otherwise the redirected edges close a cycle
/// through `q`, L(q) itself changes, and the language can change on
/// infinitely many words: in the minimal DFA of {ε, 0}, merging the state
/// after `0` into the start yields 0*. Some legal direction always exists,
/// since the finite part is acyclic.
///
/// `origin` maps result states back to states of `d`.
pub fn f_merge(d: &Dfa, p: StateId, q: StateId) -> Result<Relabeled, FMergeError> {
    d.check_state(p)?;
    d.check_state(q)?;
    if p == q {
        return Err(FMergeError::SameState(p));
    }
    let parts = compute_parts(d);
    if parts.is_infinite(p) {
        return Err(FMergeError::InfinitePart(p));
    }
    if !FinDiffTable::new(d).related(p, q) {
        return Err(FMergeError::NotRelated { p, q });
    }
    if d.reachable_from(q)[p] {
        return Err(FMergeError::TargetReachesMerged { p, q });
    }
    Ok(merge_unchecked(d, p, q))
}

fn merge_unchecked(d: &Dfa, p: StateId, q: StateId) -> Relabeled {
    let (alphabet, start, accepting, mut delta) = d.clone().into_parts();
    for t in delta.iter_mut() {
        if *t == p {
            *t = q;
        }
    }
    let start = if start == p { q } else { start };
    // p now has no inbound edges and is not the start, so trimming deletes it.
    Dfa::trimmed(alphabet, start, accepting, delta).expect("merge keeps the table well-formed")
}

/// Tie-break used by the greedy loop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MergeOrder {
    /// Largest-id mergeable finite-part state first; target is the
    /// smallest-id infinite-part state of its class, else the smallest-id
    /// other finite-part state.
    #[default]
    Canonical,
    /// Smallest-id mergeable state first; largest-id targets.
    Reversed,
}

/// Picks the next f-mergeable pair `(p, q)` under `order`, if any. Targets
/// that reach `p` are skipped.
fn next_merge(
    d: &Dfa,
    parts: &PartsPartition,
    classes: &StateClassPartition,
    order: MergeOrder,
) -> Option<(StateId, StateId)> {
    let mut finite = parts.finite_part();
    if order == MergeOrder::Canonical {
        finite.reverse();
    }
    finite.into_iter().find_map(|p| {
        let others = classes
            .members(p)
            .iter()
            .copied()
            .filter(|&x| x != p && !d.reachable_from(x)[p]);
        let (mut inf, mut fin): (Vec<StateId>, Vec<StateId>) =
            others.partition(|&x| parts.is_infinite(x));
        if order == MergeOrder::Reversed {
            inf.reverse();
            fin.reverse();
        }
        inf.first().or(fin.first()).map(|&q| (p, q))
    })
}

#[derive(Clone, Debug)]
pub struct FMinimized {
    pub dfa: Dfa,
    pub trace: MergeTrace,
}

/// Greedy f-minimization with the canonical tie-break.
pub fn f_minimize(d: &Dfa) -> FMinimized {
    f_minimize_with(d, MergeOrder::Canonical)
}

/// Minimizes, then repeatedly recomputes parts and state-classes and
/// f-merges one pair until none is left. The result is in breadth-first
/// numbering; trace records use the numbering of the automaton each merge
/// was applied to.
pub fn f_minimize_with(d: &Dfa, order: MergeOrder) -> FMinimized {
    let mut current = minimize(d).dfa;
    let mut trace = Vec::new();
    loop {
        let parts = compute_parts(&current);
        let classes = state_class_partition(&current);
        let Some((p, q)) = next_merge(&current, &parts, &classes, order) else {
            break;
        };
        let words_into_merged = words_reaching(&current, &parts, p).expect("p is in the finite part");
        let diff_size = count_finite_language(&product_xor_from(&current, p, &current, q).dfa)
            .expect("p ~ q");
        trace.push(MergeRecord {
            merged: p,
            target: q,
            class: classes.class_of(p),
            words_into_merged,
            diff_size,
        });
        current = merge_unchecked(&current, p, q).dfa;
    }
    assert!(
        is_minimized(&current),
        "f-minimization fixpoint is not minimized"
    );
    FMinimized {
        dfa: current.canonical().dfa,
        trace,
    }
}

/// Why an automaton is not f-minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FMinimality {
    FMinimal,
    /// Two states with equal languages.
    NotMinimized { p: StateId, q: StateId },
    /// A finite-part state `p` sharing its state-class with `q`.
    Mergeable { p: StateId, q: StateId },
}

impl FMinimality {
    pub fn holds(&self) -> bool {
        matches!(self, FMinimality::FMinimal)
    }
}

/// f-minimal iff minimized and every finite-part state is alone in its
/// state-class.
pub fn is_f_minimal(d: &Dfa) -> FMinimality {
    let blocks = moore_partition(d).blocks();
    if let Some(b) = blocks.iter().find(|b| b.len() > 1) {
        return FMinimality::NotMinimized { p: b[0], q: b[1] };
    }
    let parts = compute_parts(d);
    let classes = state_class_partition(d);
    match next_merge(d, &parts, &classes, MergeOrder::Reversed) {
        Some((p, q)) => FMinimality::Mergeable { p, q },
        None => FMinimality::FMinimal,
    }
}

/// Toggles acceptance of the given finite-part states.
pub fn flip_finite_acceptance(d: &Dfa, states: &[StateId]) -> Result<Dfa, FMergeError> {
    let parts = compute_parts(d);
    let mut accepting = d.accepting_mask().to_vec();
    for &q in states {
        d.check_state(q)?;
        if parts.is_infinite(q) {
            return Err(FMergeError::InfinitePart(q));
        }
    }
    let mut flip = vec![false; d.num_states()];
    for &q in states {
        flip[q] = true;
    }
    for q in d.states().filter(|&q| flip[q]) {
        accepting[q] = !accepting[q];
    }
    Ok(d.with_accepting(accepting))
}

/// Retargets the boundary edge `from --c--> t` (finite part into infinite
/// part) to another infinite-part state in the same state-class as `t`.
pub fn redirect_boundary_transition(
    d: &Dfa,
    from: StateId,
    symbol: char,
    new_target: StateId,
) -> Result<Relabeled, RedirectError> {
    d.check_state(from)?;
    d.check_state(new_target)?;
    let s = d
        .alphabet()
        .index_of(symbol)
        .ok_or(DfaError::SymbolNotInAlphabet(symbol))?;
    let parts = compute_parts(d);
    let old = d.next(from, s);
    if parts.is_infinite(from) {
        return Err(RedirectError::SourceInfinite(from));
    }
    if parts.is_finite(old) {
        return Err(RedirectError::TargetFinite(old));
    }
    if parts.is_finite(new_target) {
        return Err(RedirectError::NewTargetFinite(new_target));
    }
    if !FinDiffTable::new(d).related(old, new_target) {
        return Err(RedirectError::NotRelated { old, new: new_target });
    }
    let k = d.alphabet().len();
    let (alphabet, start, accepting, mut delta) = d.clone().into_parts();
    delta[from * k + s] = new_target;
    Ok(Dfa::trimmed(alphabet, start, accepting, delta).expect("redirect keeps the table well-formed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::dfas_finitely_different;
    use crate::dfa::Alphabet;
    use crate::fixtures;

    #[test]
    fn merge_examples() {
        let all = f_merge(&fixtures::sigplus(), 0, 1).unwrap();
        assert_eq!(all.dfa, fixtures::all());
        assert_eq!(all.origin, vec![1]);

        let single = fixtures::single_zero();
        let merged = f_merge(&single, 0, 2).unwrap().dfa;
        assert!(dfas_finitely_different(&single, &merged).unwrap().is_finite());
        assert!(crate::language::enumerate_finite_language(&merged).is_ok());

        assert_eq!(
            f_merge(&fixtures::onezstar(), 0, 1),
            Err(FMergeError::NotRelated { p: 0, q: 1 })
        );
        assert_eq!(f_merge(&fixtures::sigplus(), 0, 0), Err(FMergeError::SameState(0)));
        assert_eq!(f_merge(&fixtures::sigplus(), 1, 0), Err(FMergeError::InfinitePart(1)));
    }

    #[test]
    fn merge_into_an_ancestor_is_rejected() {
        // {ε, 0}: merging the state after `0` into the start would give 0*
        let ab = Alphabet::new("01".chars()).unwrap();
        let d = Dfa::new(ab, 0, vec![true, true, false], vec![1, 2, 2, 2, 2, 2]).unwrap();
        assert_eq!(
            f_merge(&d, 1, 0),
            Err(FMergeError::TargetReachesMerged { p: 1, q: 0 })
        );
        let merged = f_merge(&d, 0, 1).unwrap().dfa;
        assert!(dfas_finitely_different(&d, &merged).unwrap().is_finite());
    }

    #[test]
    fn f_minimize_examples() {
        let r = f_minimize(&fixtures::sigplus());
        assert_eq!(r.dfa, fixtures::all());
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.trace[0].to_string(), "merge p=0 into q=1 class=0 bound=1x1");

        let r = f_minimize(&fixtures::single_zero());
        assert_eq!(r.dfa, fixtures::empty());
        assert_eq!(r.trace.len(), 2);

        let r = f_minimize(&fixtures::onezstar());
        assert_eq!(r.dfa, fixtures::onezstar().canonical().dfa);
        assert!(r.trace.is_empty());
    }

    #[test]
    fn f_minimality_examples() {
        assert!(is_f_minimal(&fixtures::all()).holds());
        assert_eq!(is_f_minimal(&fixtures::sigplus()), FMinimality::Mergeable { p: 0, q: 1 });
        assert!(is_f_minimal(&fixtures::onezstar()).holds());
        let ab = Alphabet::new("01".chars()).unwrap();
        let dup = Dfa::new(ab, 0, vec![true, true], vec![1, 1, 0, 0]).unwrap();
        assert_eq!(is_f_minimal(&dup), FMinimality::NotMinimized { p: 0, q: 1 });
    }

    #[test]
    fn flip_examples() {
        let o = fixtures::onezstar();
        assert_eq!(flip_finite_acceptance(&o, &[]).unwrap(), o);
        let flipped = flip_finite_acceptance(&o, &[0]).unwrap();
        assert!(flipped.accepts(&crate::Word::empty()).unwrap());
        assert!(is_f_minimal(&flipped).holds());
        assert_eq!(
            dfas_finitely_different(&o, &flipped).unwrap().words().unwrap(),
            &[crate::Word::empty()]
        );
        assert_eq!(
            flip_finite_acceptance(&fixtures::zstar(), &[0]),
            Err(FMergeError::InfinitePart(0))
        );
    }

    #[test]
    fn redirect_examples() {
        let o = fixtures::onezstar();
        let same = redirect_boundary_transition(&o, 0, '1', 1).unwrap();
        assert_eq!(same.dfa, o);
        assert_eq!(
            redirect_boundary_transition(&o, 0, '1', 2),
            Err(RedirectError::NotRelated { old: 1, new: 2 })
        );
        assert_eq!(
            redirect_boundary_transition(&o, 1, '0', 1),
            Err(RedirectError::SourceInfinite(1))
        );
        assert!(matches!(
            redirect_boundary_transition(&o, 0, '2', 1),
            Err(RedirectError::Dfa(DfaError::SymbolNotInAlphabet('2')))
        ));
    }
}
