//! Pairs of automata with empty finite parts whose languages differ on a
//! prescribed finite word set.
//!
//! For W with longest word length n, both machines run on
//! (words of length ≤ n) × {0, 1}. Reading c from (w, i) moves to (wc, i)
//! while |w| < n; from a full-length w the pair jumps back to (ε, 0) or
//! (ε, 1) depending on the first symbol of wc. Only copy 1 accepts, and only
//! at the words of W, so starting in copy 0 versus copy 1 changes exactly
//! the answers on W. Every state lies on a cycle through both starts, which
//! leaves the finite parts empty.

use thiserror::Error;

use crate::dfa::{Alphabet, Dfa, StateId, Word};
use crate::error::DfaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("alphabet needs at least two symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error(transparent)]
    Dfa(#[from] DfaError),
}

/// The parameters of one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    /// W, shortlex-sorted and deduplicated.
    pub words: Vec<Word>,
    /// Longest length in W; 0 when W is empty.
    pub n: usize,
    pub alphabet: Alphabet,
}

impl ConstructionSpec {
    pub fn new(words: &[Word], alphabet: &Alphabet) -> Result<Self, ConstructionError> {
        if alphabet.len() < 2 {
            return Err(ConstructionError::AlphabetTooSmall(alphabet.len()));
        }
        for w in words {
            alphabet.encode(w)?;
        }
        let mut words = words.to_vec();
        words.sort();
        words.dedup();
        let n = words.iter().map(Word::len).max().unwrap_or(0);
        Ok(ConstructionSpec {
            words,
            n,
            alphabet: alphabet.clone(),
        })
    }

    /// Copy (0 or 1) a word of length n+1 returns to: copy 0 iff it starts
    /// with the smallest symbol.
    pub fn phi(&self, first_symbol: usize) -> usize {
        usize::from(first_symbol != 0)
    }

    /// Number of words of length ≤ n.
    fn prefix_count(&self) -> usize {
        let k = self.alphabet.len();
        (0..=self.n).map(|l| k.pow(l as u32)).sum()
    }

    /// Builds both machines. State `2·j + i` is (w_j, i), where w_j is the
    /// j-th word of length ≤ n in shortlex order.
    pub fn build(&self) -> (Dfa, Dfa) {
        let k = self.alphabet.len();
        let m = self.prefix_count();
        // In shortlex order the children of word j are k·j + 1 + s, and the
        // words of length n occupy the last k^n indices.
        let full_from = m - k.pow(self.n as u32);
        let mut delta = vec![0; 2 * m * k];
        let mut first = vec![0usize; m];
        for j in 0..m {
            for s in 0..k {
                let child = k * j + 1 + s;
                if j < full_from {
                    first[child] = if j == 0 { s } else { first[j] };
                }
                for i in 0..2 {
                    let to = if j < full_from {
                        2 * child + i
                    } else {
                        let lead = if self.n == 0 { s } else { first[j] };
                        self.phi(lead)
                    };
                    delta[(2 * j + i) * k + s] = to;
                }
            }
        }
        let mut accepting = vec![false; 2 * m];
        for w in &self.words {
            let symbols = self.alphabet.encode(w).expect("checked in new");
            let j = symbols.iter().fold(0, |j, &s| k * j + 1 + s);
            accepting[2 * j + 1] = true;
        }
        let make = |start: StateId| {
            Dfa::new(self.alphabet.clone(), start, accepting.clone(), delta.clone())
                .expect("every state lies on a cycle through both starts")
        };
        (make(0), make(1))
    }
}

/// Two machines, identical except for their start states, with empty
/// finite parts and L(D) △ L(D') = W.
pub fn construct_pair(words: &[Word], alphabet: &Alphabet) -> Result<(Dfa, Dfa), ConstructionError> {
    Ok(ConstructionSpec::new(words, alphabet)?.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::{symmetric_difference, DiffResult};
    use crate::minimize::minimize;
    use crate::parts::compute_parts;

    fn binary() -> Alphabet {
        Alphabet::new("01".chars()).unwrap()
    }

    fn check(words: &[Word]) -> (Dfa, Dfa) {
        let (d, e) = construct_pair(words, &binary()).unwrap();
        let mut expected = words.to_vec();
        expected.sort();
        expected.dedup();
        for (x, y) in [(d.clone(), e.clone()), (minimize(&d).dfa, minimize(&e).dfa)] {
            assert!(compute_parts(&x).finite_part().is_empty());
            assert!(compute_parts(&y).finite_part().is_empty());
            assert_eq!(
                symmetric_difference(&x, &y).unwrap(),
                DiffResult::Finite(expected.clone())
            );
        }
        (d, e)
    }

    #[test]
    fn epsilon_only() {
        let (d, e) = check(&[Word::empty()]);
        assert_eq!(d.num_states(), 2);
        assert_eq!((d.start(), e.start()), (0, 1));
        assert_eq!(d.row(0), &[0, 1]);
        assert_eq!(d.row(1), &[0, 1]);
        assert_eq!(d.accepting_states().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn empty_set() {
        let (d, _) = check(&[]);
        assert_eq!(d.num_states(), 2);
    }

    #[test]
    fn two_words() {
        let (d, e) = check(&["0".into(), "11".into()]);
        assert_eq!(d.num_states(), 14);
        assert_eq!(e.num_states(), 14);
        for w in ["000", "100", "1111", "0110"] {
            let w = Word::from(w);
            assert_eq!(d.run(&w).unwrap(), e.run(&w).unwrap());
        }
    }

    #[test]
    fn starts_lie_on_cycles() {
        let (d, _) = check(&["01".into(), "1".into()]);
        assert_eq!(d.run(&"000".into()).unwrap(), d.start());
        assert_eq!(d.run(&"100".into()).unwrap(), 1);
    }

    #[test]
    fn errors() {
        let unary = Alphabet::new("0".chars()).unwrap();
        assert_eq!(
            construct_pair(&[], &unary),
            Err(ConstructionError::AlphabetTooSmall(1))
        );
        assert!(matches!(
            construct_pair(&["2".into()], &binary()),
            Err(ConstructionError::Dfa(_))
        ));
    }
}
