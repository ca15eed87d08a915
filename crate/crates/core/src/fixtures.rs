//! The named example automata shipped in `fixtures/`, all over `{0,1}`.

use crate::dfa::Dfa;
use crate::format::parse_dfa;

fn load(text: &str) -> Dfa {
    parse_dfa(text).expect("bundled fixture is valid").dfa
}

/// 0*: A=0 (accepting), X=1 (sink).
pub fn zstar() -> Dfa {
    load(include_str!("../fixtures/zstar.dfa"))
}

/// 10*: S=0, B=1 (accepting), X=2 (sink).
pub fn onezstar() -> Dfa {
    load(include_str!("../fixtures/onezstar.dfa"))
}

/// Σ⁺: E=0, P=1 (accepting).
pub fn sigplus() -> Dfa {
    load(include_str!("../fixtures/sigplus.dfa"))
}

/// Σ*.
pub fn all() -> Dfa {
    load(include_str!("../fixtures/all.dfa"))
}

/// ∅.
pub fn empty() -> Dfa {
    load(include_str!("../fixtures/empty.dfa"))
}

/// Odd-length words.
pub fn odd() -> Dfa {
    load(include_str!("../fixtures/odd.dfa"))
}

/// Even-length words.
pub fn even() -> Dfa {
    load(include_str!("../fixtures/even.dfa"))
}

/// Minimal DFA of {"0"}: q₀=0, q_"0"=1, sink=2.
pub fn single_zero() -> Dfa {
    load(include_str!("../fixtures/single_zero.dfa"))
}

/// Minimal DFA of {"0", "11"}.
pub fn zero_or_oneone() -> Dfa {
    load(include_str!("../fixtures/zero_or_oneone.dfa"))
}
