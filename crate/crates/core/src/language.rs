//! Emptiness and finiteness of DFA languages, exhaustive enumeration of
//! finite languages, and symmetric differences with checkable witnesses.

use std::fmt;

use thiserror::Error;

use crate::dfa::{Dfa, StateId, Word};
use crate::error::DfaError;
use crate::graph::{self, ShortlexTree};
use crate::product::{product_xor, product_xor_from};

/// A pumpable family `prefix · pumpᵏ · suffix`, every member of which is in
/// the language it was extracted from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lasso {
    pub prefix: Word,
    pub pump: Word,
    pub suffix: Word,
}

impl Lasso {
    /// `prefix · pumpᵏ · suffix`.
    pub fn word(&self, k: usize) -> Word {
        self.prefix.concat(&self.pump.repeat(k)).concat(&self.suffix)
    }
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} v={} x={}", self.prefix, self.pump, self.suffix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageClass {
    Empty,
    Finite,
    Infinite(Lasso),
}

impl LanguageClass {
    pub fn is_infinite(&self) -> bool {
        matches!(self, LanguageClass::Infinite(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error("language is infinite (witness {0})")]
    Infinite(Lasso),
}

/// Symmetric difference of two languages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffResult {
    /// The complete difference, shortlex-sorted.
    Finite(Vec<Word>),
    /// Every `u·vᵏ·x` is in exactly one of the two languages.
    Infinite(Lasso),
}

impl DiffResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, DiffResult::Finite(_))
    }

    pub fn words(&self) -> Option<&[Word]> {
        match self {
            DiffResult::Finite(ws) => Some(ws),
            DiffResult::Infinite(_) => None,
        }
    }
}

/// States that can reach an accepting state.
fn useful_states(d: &Dfa) -> Vec<bool> {
    graph::coreachable(d, d.accepting_mask())
}

pub fn language_is_empty(d: &Dfa) -> bool {
    !useful_states(d)[d.start()]
}

/// Finiteness test without building a witness.
pub fn language_is_infinite(d: &Dfa) -> bool {
    let useful = useful_states(d);
    useful[d.start()] && graph::cyclic_states(d, Some(&useful)).contains(&true)
}

/// Classifies L(d) as empty, finite or infinite.
///
/// Infinite iff some state that can reach acceptance lies on a cycle of such
/// states. The witness pumps the first such state in breadth-first order
/// from the start, using shortlex-least connecting words.
pub fn classify_language(d: &Dfa) -> LanguageClass {
    let useful = useful_states(d);
    if !useful[d.start()] {
        return LanguageClass::Empty;
    }
    let cyclic = graph::cyclic_states(d, Some(&useful));
    let Some(entry) = graph::bfs_order(d, d.start())
        .into_iter()
        .find(|&q| useful[q] && cyclic[q])
    else {
        return LanguageClass::Finite;
    };
    let alphabet = d.alphabet();
    let prefix = ShortlexTree::new(d, d.start(), None)
        .path(entry)
        .expect("entry is reachable");
    let pump = graph::shortest_cycle(d, entry, Some(&useful)).expect("entry lies on a cycle");
    let to_accept = ShortlexTree::new(d, entry, None);
    let target = graph::bfs_order(d, entry)
        .into_iter()
        .filter(|&q| d.is_accepting(q))
        .min_by_key(|&q| alphabet.decode(&to_accept.path(q).expect("reachable")))
        .expect("entry is useful");
    let suffix = to_accept.path(target).expect("reachable");
    LanguageClass::Infinite(Lasso {
        prefix: alphabet.decode(&prefix),
        pump: alphabet.decode(&pump),
        suffix: alphabet.decode(&suffix),
    })
}

/// The useful states in a topological order of the (acyclic) useful
/// subgraph, or `None` if that subgraph has a cycle.
fn useful_topological_order(d: &Dfa, useful: &[bool]) -> Option<Vec<StateId>> {
    let n = d.num_states();
    let mut indegree = vec![0usize; n];
    for q in d.states().filter(|&q| useful[q]) {
        for &t in d.row(q) {
            if useful[t] {
                indegree[t] += 1;
            }
        }
    }
    let mut order: Vec<StateId> = d.states().filter(|&q| useful[q] && indegree[q] == 0).collect();
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        i += 1;
        for &t in d.row(q) {
            if useful[t] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    order.push(t);
                }
            }
        }
    }
    (order.len() == useful.iter().filter(|&&u| u).count()).then_some(order)
}

/// Every word of a finite language, shortlex-sorted.
///
/// Accepted words are shorter than the state count, since a longer accepting
/// run repeats a state and could be pumped.
pub fn enumerate_finite_language(d: &Dfa) -> Result<Vec<Word>, LanguageError> {
    if let LanguageClass::Infinite(lasso) = classify_language(d) {
        return Err(LanguageError::Infinite(lasso));
    }
    let useful = useful_states(d);
    let mut words = Vec::new();
    if !useful[d.start()] {
        return Ok(words);
    }
    let k = d.alphabet().len();
    let mut path: Vec<usize> = Vec::new();
    // (state, next symbol)
    let mut stack = vec![(d.start(), 0usize)];
    if d.is_accepting(d.start()) {
        words.push(Word::empty());
    }
    while let Some(top) = stack.last_mut() {
        let (q, s) = *top;
        if s == k {
            stack.pop();
            path.pop();
            continue;
        }
        top.1 += 1;
        let t = d.next(q, s);
        if !useful[t] {
            continue;
        }
        path.push(s);
        if d.is_accepting(t) {
            words.push(d.alphabet().decode(&path));
        }
        stack.push((t, 0));
    }
    words.sort();
    words.dedup();
    Ok(words)
}

/// Number of words in a finite language, without materializing them.
pub fn count_finite_language(d: &Dfa) -> Result<u128, LanguageError> {
    let useful = useful_states(d);
    let Some(order) = useful_topological_order(d, &useful) else {
        let LanguageClass::Infinite(lasso) = classify_language(d) else {
            unreachable!("cyclic useful subgraph means an infinite language");
        };
        return Err(LanguageError::Infinite(lasso));
    };
    // words accepted from q
    let mut count = vec![0u128; d.num_states()];
    for &q in order.iter().rev() {
        let mut c = u128::from(d.is_accepting(q));
        for &t in d.row(q) {
            if useful[t] {
                c = c.saturating_add(count[t]);
            }
        }
        count[q] = c;
    }
    Ok(count[d.start()])
}

fn diff_of(product: &Dfa) -> DiffResult {
    match enumerate_finite_language(product) {
        Ok(words) => DiffResult::Finite(words),
        Err(LanguageError::Infinite(lasso)) => DiffResult::Infinite(lasso),
    }
}

/// L(a) △ L(b), as an explicit list or an infiniteness witness. Finite iff
/// `a ~ b`.
pub fn symmetric_difference(a: &Dfa, b: &Dfa) -> Result<DiffResult, DfaError> {
    Ok(diff_of(&product_xor(a, b)?.dfa))
}

/// L(p) △ L(q) for a state `p` of `a` and a state `q` of `b`.
pub fn state_difference(a: &Dfa, p: StateId, b: &Dfa, q: StateId) -> Result<DiffResult, DfaError> {
    a.check_same_alphabet(b)?;
    a.check_state(p)?;
    b.check_state(q)?;
    Ok(diff_of(&product_xor_from(a, p, b, q).dfa))
}

/// Parses a word list: one word per line, `@` for ε, `#` comments.
/// The result is shortlex-sorted and deduplicated.
pub fn parse_word_list(text: &str) -> Result<Vec<Word>, DfaError> {
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        words.push(content.parse::<Word>().map_err(|e| e.at_line(i + 1))?);
    }
    words.sort();
    words.dedup();
    Ok(words)
}

/// One word per line, `@` for ε.
pub fn format_word_list(words: &[Word]) -> String {
    words.iter().map(|w| format!("{w}\n")).collect()
}
