//! The DFA data model: alphabets, words, complete reachable automata and
//! induced automata.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::DfaError;

/// Dense state identifier, `0..n`.
pub type StateId = usize;

const NO_SYMBOL: u8 = u8::MAX;

/// Sorted, duplicate-free set of single-character symbols.
///
/// Symbols are printable ASCII, excluding whitespace, `#` (comments) and `@`
/// (the empty word).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
    index: [u8; 128],
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self, DfaError> {
        let mut symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(DfaError::EmptyAlphabet);
        }
        for &c in &symbols {
            if !c.is_ascii_graphic() || c == '#' || c == '@' {
                return Err(DfaError::InvalidSymbol(c));
            }
        }
        symbols.sort_unstable();
        if let Some(w) = symbols.windows(2).find(|w| w[0] == w[1]) {
            return Err(DfaError::DuplicateSymbol(w[0]));
        }
        if symbols.len() >= NO_SYMBOL as usize {
            return Err(DfaError::InvalidSymbol(symbols[NO_SYMBOL as usize]));
        }
        let mut index = [NO_SYMBOL; 128];
        for (i, &c) in symbols.iter().enumerate() {
            index[c as usize] = i as u8;
        }
        Ok(Alphabet { symbols, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// The `i`-th symbol in sorted order.
    pub fn symbol(&self, i: usize) -> char {
        self.symbols[i]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        if !c.is_ascii() {
            return None;
        }
        match self.index[c as usize] {
            NO_SYMBOL => None,
            i => Some(i as usize),
        }
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    /// Converts a word into symbol indices.
    pub fn encode(&self, w: &Word) -> Result<Vec<usize>, DfaError> {
        w.chars()
            .map(|c| self.index_of(c).ok_or(DfaError::SymbolNotInAlphabet(c)))
            .collect()
    }

    /// Converts symbol indices back into a word.
    pub fn decode(&self, symbols: &[usize]) -> Word {
        Word(symbols.iter().map(|&i| self.symbols[i]).collect())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word. Rendered as `@` when empty.
///
/// Words are ordered shortlex: shorter words first, equal lengths compared
/// symbol by symbol.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(String);

impl Word {
    pub fn empty() -> Self {
        Word(String::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.0.chars()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut s = self.0.clone();
        s.push_str(&other.0);
        Word(s)
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("@")
        } else {
            f.write_str(&self.0)
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = DfaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "@" {
            return Ok(Word::empty());
        }
        if let Some(c) = s.chars().find(|c| !c.is_ascii_graphic() || *c == '@' || *c == '#') {
            return Err(DfaError::InvalidSymbol(c));
        }
        Ok(Word(s.to_owned()))
    }
}

impl From<&str> for Word {
    /// Panics on characters that can never be symbols; use `parse` for
    /// untrusted input.
    fn from(s: &str) -> Self {
        s.parse().expect("invalid word literal")
    }
}

/// A complete deterministic finite automaton in which every state is
/// reachable from the start state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    start: StateId,
    accepting: Vec<bool>,
    /// Row-major transition table, `delta[q * |Σ| + s]`.
    delta: Vec<StateId>,
}

/// An automaton produced from another one together with the origin of each
/// of its states: `origin[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub dfa: Dfa,
    pub origin: Vec<StateId>,
}

impl Relabeled {
    /// Inverse of `origin`, sized to the original state count.
    pub fn renumbering(&self, original_states: usize) -> Vec<Option<StateId>> {
        let mut map = vec![None; original_states];
        for (new, &old) in self.origin.iter().enumerate() {
            map[old] = Some(new);
        }
        map
    }
}

impl Dfa {
    /// Builds a DFA from a flat row-major transition table, rejecting
    /// automata with unreachable states.
    pub fn new(
        alphabet: Alphabet,
        start: StateId,
        accepting: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Result<Self, DfaError> {
        let raw = Self::unchecked(alphabet, start, accepting, delta)?;
        let reach = raw.reachable_from(start);
        if let Some(q) = reach.iter().position(|r| !r) {
            return Err(DfaError::Unreachable(q));
        }
        Ok(raw)
    }

    /// Builds a DFA from a flat transition table, dropping unreachable states
    /// and renumbering the survivors densely in their original order.
    pub fn trimmed(
        alphabet: Alphabet,
        start: StateId,
        accepting: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Result<Relabeled, DfaError> {
        let raw = Self::unchecked(alphabet, start, accepting, delta)?;
        let reach = raw.reachable_from(start);
        Ok(raw.restrict(&reach))
    }

    /// Builds a DFA from per-state rows and a list of accepting ids.
    pub fn from_rows(
        alphabet: Alphabet,
        start: StateId,
        accepting: &[StateId],
        rows: &[Vec<StateId>],
    ) -> Result<Self, DfaError> {
        let n = rows.len();
        let mut acc = vec![false; n];
        for &q in accepting {
            if q >= n {
                return Err(DfaError::StateOutOfRange { id: q, states: n });
            }
            acc[q] = true;
        }
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(n * k);
        for (q, row) in rows.iter().enumerate() {
            if row.len() != k {
                let missing = row.len().min(k);
                return Err(DfaError::IncompleteTable {
                    state: q,
                    symbol: alphabet.symbol(missing),
                });
            }
            delta.extend_from_slice(row);
        }
        Self::new(alphabet, start, acc, delta)
    }

    fn unchecked(
        alphabet: Alphabet,
        start: StateId,
        accepting: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Result<Self, DfaError> {
        let n = accepting.len();
        if n == 0 {
            return Err(DfaError::NoStates);
        }
        if delta.len() != n * alphabet.len() {
            let q = delta.len() / alphabet.len();
            return Err(DfaError::IncompleteTable {
                state: q.min(n - 1),
                symbol: alphabet.symbol(delta.len() % alphabet.len()),
            });
        }
        if start >= n {
            return Err(DfaError::StateOutOfRange { id: start, states: n });
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= n) {
            return Err(DfaError::StateOutOfRange { id: bad, states: n });
        }
        Ok(Dfa {
            alphabet,
            start,
            accepting,
            delta,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.num_states()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_mask(&self) -> &[bool] {
        &self.accepting
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    /// δ(q, s) for a symbol index `s`.
    #[inline]
    pub fn next(&self, q: StateId, s: usize) -> StateId {
        self.delta[q * self.alphabet.len() + s]
    }

    /// All successors of `q` in symbol order.
    #[inline]
    pub fn row(&self, q: StateId) -> &[StateId] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    pub fn table(&self) -> &[StateId] {
        &self.delta
    }

    pub fn check_state(&self, q: StateId) -> Result<(), DfaError> {
        if q < self.num_states() {
            Ok(())
        } else {
            Err(DfaError::UnknownState(q))
        }
    }

    pub fn check_same_alphabet(&self, other: &Dfa) -> Result<(), DfaError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(DfaError::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            })
        }
    }

    /// Follows a sequence of symbol indices from `from`.
    pub fn run_symbols(&self, from: StateId, symbols: &[usize]) -> StateId {
        symbols.iter().fold(from, |q, &s| self.next(q, s))
    }

    /// Extended transition function from an arbitrary state.
    pub fn run_from(&self, from: StateId, w: &Word) -> Result<StateId, DfaError> {
        self.check_state(from)?;
        let mut q = from;
        for c in w.chars() {
            let s = self
                .alphabet
                .index_of(c)
                .ok_or(DfaError::SymbolNotInAlphabet(c))?;
            q = self.next(q, s);
        }
        Ok(q)
    }

    /// δ(q₀, w).
    pub fn run(&self, w: &Word) -> Result<StateId, DfaError> {
        self.run_from(self.start, w)
    }

    pub fn accepts(&self, w: &Word) -> Result<bool, DfaError> {
        Ok(self.accepting[self.run(w)?])
    }

    /// The automaton started at `q`, trimmed to the states reachable from it.
    /// Its language is L(q).
    pub fn induce(&self, q: StateId) -> Result<Relabeled, DfaError> {
        self.check_state(q)?;
        let reach = self.reachable_from(q);
        let mut relabeled = self.restrict(&reach);
        let renumber = relabeled.renumbering(self.num_states());
        relabeled.dfa.start = renumber[q].expect("start is reachable from itself");
        Ok(relabeled)
    }

    /// Reachability mask from `from`.
    pub fn reachable_from(&self, from: StateId) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(q) = queue.pop_front() {
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Keeps the states flagged in `keep` (which must be closed under
    /// transitions and contain the start), renumbering in original order.
    fn restrict(&self, keep: &[bool]) -> Relabeled {
        let origin: Vec<StateId> = (0..self.num_states()).filter(|&q| keep[q]).collect();
        let mut renumber = vec![usize::MAX; self.num_states()];
        for (new, &old) in origin.iter().enumerate() {
            renumber[old] = new;
        }
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(origin.len() * k);
        for &old in &origin {
            delta.extend(self.row(old).iter().map(|&t| renumber[t]));
        }
        let accepting = origin.iter().map(|&q| self.accepting[q]).collect();
        let start = if keep[self.start] {
            renumber[self.start]
        } else {
            0
        };
        Relabeled {
            dfa: Dfa {
                alphabet: self.alphabet.clone(),
                start,
                accepting,
                delta,
            },
            origin,
        }
    }

    /// Renumbers states in breadth-first discovery order from the start,
    /// exploring symbols in alphabet order.
    pub fn canonical(&self) -> Relabeled {
        let n = self.num_states();
        let mut renumber = vec![usize::MAX; n];
        let mut origin = Vec::with_capacity(n);
        let mut queue = VecDeque::from([self.start]);
        renumber[self.start] = 0;
        origin.push(self.start);
        while let Some(q) = queue.pop_front() {
            for &t in self.row(q) {
                if renumber[t] == usize::MAX {
                    renumber[t] = origin.len();
                    origin.push(t);
                    queue.push_back(t);
                }
            }
        }
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(n * k);
        for &old in &origin {
            delta.extend(self.row(old).iter().map(|&t| renumber[t]));
        }
        let accepting = origin.iter().map(|&q| self.accepting[q]).collect();
        Relabeled {
            dfa: Dfa {
                alphabet: self.alphabet.clone(),
                start: 0,
                accepting,
                delta,
            },
            origin,
        }
    }

    /// Copy of this automaton with acceptance replaced.
    pub(crate) fn with_accepting(&self, accepting: Vec<bool>) -> Dfa {
        debug_assert_eq!(accepting.len(), self.num_states());
        Dfa {
            accepting,
            ..self.clone()
        }
    }

    /// Decomposes into `(alphabet, start, accepting, delta)`.
    pub fn into_parts(self) -> (Alphabet, StateId, Vec<bool>, Vec<StateId>) {
        (self.alphabet, self.start, self.accepting, self.delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn alphabet_is_sorted_and_validated() {
        let a = Alphabet::new("10".chars()).unwrap();
        assert_eq!(a.symbols(), &['0', '1']);
        assert_eq!(a.index_of('1'), Some(1));
        assert_eq!(a.index_of('2'), None);
        assert!(matches!(Alphabet::new("".chars()), Err(DfaError::EmptyAlphabet)));
        assert!(matches!(Alphabet::new("0#".chars()), Err(DfaError::InvalidSymbol('#'))));
        assert!(matches!(Alphabet::new("0@".chars()), Err(DfaError::InvalidSymbol('@'))));
        assert!(matches!(Alphabet::new("0 ".chars()), Err(DfaError::InvalidSymbol(' '))));
        assert!(matches!(Alphabet::new("00".chars()), Err(DfaError::DuplicateSymbol('0'))));
    }

    #[test]
    fn words_order_shortlex_and_print_epsilon() {
        let mut ws: Vec<Word> = ["11", "0", "@", "10", "1"].iter().map(|s| Word::from(*s)).collect();
        ws.sort();
        let printed: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, ["@", "0", "1", "10", "11"]);
    }

    #[test]
    fn run_examples() {
        let zstar = fixtures::zstar();
        assert_eq!(zstar.run(&Word::empty()).unwrap(), 0);
        assert!(zstar.accepts(&Word::empty()).unwrap());
        assert_eq!(zstar.run(&"01".into()).unwrap(), 1);
        assert!(!zstar.accepts(&"01".into()).unwrap());

        let onezstar = fixtures::onezstar();
        assert_eq!(onezstar.run(&"100".into()).unwrap(), 1);
        assert!(onezstar.accepts(&"100".into()).unwrap());

        assert!(matches!(
            zstar.run(&"0a".into()),
            Err(DfaError::SymbolNotInAlphabet('a'))
        ));
    }

    #[test]
    fn induce_examples() {
        let zstar = fixtures::zstar();
        let same = zstar.induce(zstar.start()).unwrap();
        assert_eq!(same.dfa, zstar);

        // L(B) in 10* is 0*
        let onezstar = fixtures::onezstar();
        let b = onezstar.induce(1).unwrap();
        assert_eq!(b.dfa.num_states(), 2);
        assert_eq!(b.origin, vec![1, 2]);
        for w in ["@", "0", "00", "000", "0000"] {
            assert!(b.dfa.accepts(&w.into()).unwrap(), "{w}");
        }
        for w in ["1", "01", "10", "0010"] {
            assert!(!b.dfa.accepts(&w.into()).unwrap(), "{w}");
        }

        let sigplus = fixtures::sigplus();
        let p = sigplus.induce(1).unwrap();
        assert_eq!(p.dfa.num_states(), 1);
        assert!(p.dfa.is_accepting(0));

        assert!(matches!(sigplus.induce(7), Err(DfaError::UnknownState(7))));
    }

    #[test]
    fn new_rejects_unreachable_and_trimmed_drops() {
        let ab = Alphabet::new("01".chars()).unwrap();
        let delta = vec![0, 0, 1, 1, 2, 2];
        assert!(matches!(
            Dfa::new(ab.clone(), 0, vec![true, false, false], delta.clone()),
            Err(DfaError::Unreachable(1))
        ));
        let t = Dfa::trimmed(ab, 2, vec![true, false, false], delta).unwrap();
        assert_eq!(t.origin, vec![2]);
        assert_eq!(t.dfa.num_states(), 1);
    }

    #[test]
    fn canonical_is_bfs_order() {
        let ab = Alphabet::new("01".chars()).unwrap();
        // start 2 → (0: 1, 1: 0)
        let d = Dfa::new(ab, 2, vec![true, false, false], vec![0, 0, 1, 1, 1, 0]).unwrap();
        let c = d.canonical();
        assert_eq!(c.origin, vec![2, 1, 0]);
        assert_eq!(c.dfa.start(), 0);
        assert_eq!(c.dfa.row(0), &[1, 2]);
    }
}
