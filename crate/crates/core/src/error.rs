use thiserror::Error;

use crate::dfa::StateId;

/// Errors raised while building, parsing or querying automata.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DfaError {
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("invalid symbol {0:?}: symbols must be printable, non-whitespace, not '#' or '@'")]
    InvalidSymbol(char),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} not in alphabet")]
    SymbolNotInAlphabet(char),
    #[error("automaton has no states")]
    NoStates,
    #[error("incomplete transition table: no transition for state {state} on {symbol:?}")]
    IncompleteTable { state: StateId, symbol: char },
    #[error("state id {id} out of range (automaton has {states} states)")]
    StateOutOfRange { id: StateId, states: usize },
    #[error("state {0} is unreachable from the start state")]
    Unreachable(StateId),
    #[error("unknown state {0}")]
    UnknownState(StateId),
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: String, right: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<DfaError>,
    },
}

impl DfaError {
    pub(crate) fn at_line(self, line: usize) -> DfaError {
        match self {
            e @ (DfaError::Syntax { .. } | DfaError::AtLine { .. }) => e,
            e => DfaError::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }
}
