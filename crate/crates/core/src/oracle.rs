//! Brute-force ground truth for tests: word-by-word membership, exhaustive
//! enumeration of small automata, and f-minimality by definition.
//!
//! Nothing here builds a product or reuses the language analysis; words are
//! fed through each automaton symbol by symbol.

use crate::dfa::{Alphabet, Dfa, Word};
use crate::language::symmetric_difference;

/// Every word of length ≤ `bound`, shortlex-ordered.
pub fn all_words(alphabet: &Alphabet, bound: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..bound {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|w| {
                (0..alphabet.len()).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.iter().map(|w| alphabet.decode(w)).collect()
}

/// Membership of every word up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipTable {
    pub bound: usize,
    /// `(word, accepted)` in shortlex order.
    pub entries: Vec<(Word, bool)>,
}

impl MembershipTable {
    pub fn new(d: &Dfa, bound: usize) -> Self {
        let entries = all_words(d.alphabet(), bound)
            .into_iter()
            .map(|w| {
                let accepted = simulate(d, &w);
                (w, accepted)
            })
            .collect();
        MembershipTable { bound, entries }
    }

    pub fn accepted(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().filter(|(_, a)| *a).map(|(w, _)| w)
    }
}

fn simulate(d: &Dfa, w: &Word) -> bool {
    let mut q = d.start();
    for c in w.chars() {
        let s = d.alphabet().index_of(c).expect("word over the alphabet");
        q = d.row(q)[s];
    }
    d.is_accepting(q)
}

/// Every word of length ≤ `bound` accepted by exactly one of `a`, `b`,
/// shortlex-sorted. Both machines are driven along a depth-first walk of
/// all words, so shared prefixes are simulated once.
pub fn oracle_diff(a: &Dfa, b: &Dfa, bound: usize) -> Vec<Word> {
    assert_eq!(a.alphabet(), b.alphabet(), "oracle needs a shared alphabet");
    let k = a.alphabet().len();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    // (state of a, state of b, next symbol)
    let mut stack = vec![(a.start(), b.start(), 0usize)];
    if a.is_accepting(a.start()) != b.is_accepting(b.start()) {
        out.push(Word::empty());
    }
    while let Some(top) = stack.last_mut() {
        let (p, q, s) = *top;
        if s == k || path.len() == bound {
            stack.pop();
            path.pop();
            continue;
        }
        top.2 += 1;
        let (p, q) = (a.row(p)[s], b.row(q)[s]);
        path.push(s);
        if a.is_accepting(p) != b.is_accepting(q) {
            out.push(a.alphabet().decode(&path));
        }
        stack.push((p, q, 0));
    }
    out.sort();
    out
}

/// Whether every state is reachable from `start`, by plain graph search.
fn all_reachable(n: usize, k: usize, start: usize, delta: &[usize]) -> bool {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut todo = vec![start];
    while let Some(q) = todo.pop() {
        for &t in &delta[q * k..(q + 1) * k] {
            if !seen[t] {
                seen[t] = true;
                todo.push(t);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Every complete automaton with exactly `n` states over `alphabet` (any
/// start, any accepting set) whose states are all reachable.
pub fn enumerate_all_dfas(n: usize, alphabet: &Alphabet) -> impl Iterator<Item = Dfa> + '_ {
    let k = alphabet.len();
    let cells = n * k;
    let tables = n.pow(cells as u32);
    (0..tables).flat_map(move |t| {
        let mut delta = Vec::with_capacity(cells);
        let mut x = t;
        for _ in 0..cells {
            delta.push(x % n);
            x /= n;
        }
        let starts: Vec<usize> = (0..n)
            .filter(|&start| all_reachable(n, k, start, &delta))
            .collect();
        starts
            .into_iter()
            .flat_map(move |start| {
                let delta = delta.clone();
                (0..1usize << n).map(move |mask| {
                    let accepting = (0..n).map(|q| mask >> q & 1 == 1).collect();
                    Dfa::new(alphabet.clone(), start, accepting, delta.clone())
                        .expect("reachability checked")
                })
            })
            .collect::<Vec<_>>()
    })
}

/// All machines with fewer than `n` states, for repeated minimality checks.
pub fn machines_below(n: usize, alphabet: &Alphabet) -> Vec<Dfa> {
    (1..n).flat_map(|m| enumerate_all_dfas(m, alphabet)).collect()
}

/// f-minimality by definition: no machine with fewer states is finitely
/// different from `d`.
pub fn oracle_is_f_minimal(d: &Dfa) -> bool {
    oracle_is_f_minimal_among(d, &machines_below(d.num_states(), d.alphabet()))
}

/// As [`oracle_is_f_minimal`], searching only `smaller`, which should hold
/// every machine with fewer states than `d`.
pub fn oracle_is_f_minimal_among(d: &Dfa, smaller: &[Dfa]) -> bool {
    smaller
        .iter()
        .filter(|e| e.num_states() < d.num_states())
        .all(|e| !symmetric_difference(d, e).expect("shared alphabet").is_finite())
}
