//! Seeded random automata.
//!
//! The generator is a 64-bit linear congruential generator,
//!
//! ```text
//! state ← state · 6364136223846793005 + 1442695040888963407  (mod 2⁶⁴)
//! output = state >> 33
//! ```
//!
//! seeded with the state equal to the seed. The output has 31 bits; a draw
//! below `n` is `(output · n) >> 31`, which takes the high bits (the low bits
//! of an LCG cycle quickly). A random automaton draws, for each state in
//! order, its acceptance bit (a draw below 2) followed by one target per
//! symbol in alphabet order; the start is state 0. Candidates with unreachable states
//! are rejected and drawing continues from the same generator, so a seed
//! fixes the output on every platform.

use crate::dfa::{Alphabet, Dfa};
use crate::error::DfaError;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 33) as u32
    }

    /// A draw in `0..n`; `n` must be positive and below 2³¹.
    pub fn below(&mut self, n: usize) -> usize {
        ((u64::from(self.next_u32()) * n as u64) >> 31) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.below(2) == 1
    }
}

/// A complete automaton with `states` states, all reachable from state 0.
pub fn random_dfa(states: usize, alphabet: &Alphabet, seed: u64) -> Result<Dfa, DfaError> {
    random_dfa_from(states, alphabet, &mut Lcg::new(seed))
}

/// As [`random_dfa`], drawing from an existing generator.
pub fn random_dfa_from(states: usize, alphabet: &Alphabet, rng: &mut Lcg) -> Result<Dfa, DfaError> {
    if states == 0 {
        return Err(DfaError::NoStates);
    }
    let k = alphabet.len();
    loop {
        let mut accepting = Vec::with_capacity(states);
        let mut delta = Vec::with_capacity(states * k);
        for _ in 0..states {
            accepting.push(rng.coin());
            for _ in 0..k {
                delta.push(rng.below(states));
            }
        }
        match Dfa::new(alphabet.clone(), 0, accepting, delta) {
            Ok(d) => return Ok(d),
            Err(DfaError::Unreachable(_)) => continue,
            Err(e) => return Err(e),
        }
    }
}
