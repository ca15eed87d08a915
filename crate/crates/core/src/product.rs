//! The xor product: an automaton over reachable state pairs recognizing the
//! symmetric difference of two languages.

use std::collections::VecDeque;

use crate::dfa::{Dfa, StateId};
use crate::error::DfaError;

/// Product automaton with the origin pair of every state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDfa {
    pub dfa: Dfa,
    /// `pairs[s] = (left state, right state)` for product state `s`.
    pub pairs: Vec<(StateId, StateId)>,
}

impl ProductDfa {
    pub fn pair(&self, s: StateId) -> (StateId, StateId) {
        self.pairs[s]
    }
}

/// Reachable product of `a` and `b` where a pair accepts iff exactly one
/// component accepts. Recognizes L(a) △ L(b).
pub fn product_xor(a: &Dfa, b: &Dfa) -> Result<ProductDfa, DfaError> {
    a.check_same_alphabet(b)?;
    Ok(product_xor_from(a, a.start(), b, b.start()))
}

/// Product started at the pair `(p, q)`, recognizing L(p) △ L(q). The
/// alphabets must already be known to match.
pub(crate) fn product_xor_from(a: &Dfa, p: StateId, b: &Dfa, q: StateId) -> ProductDfa {
    debug_assert_eq!(a.alphabet(), b.alphabet());
    let k = a.alphabet().len();
    let nb = b.num_states();
    let mut index = vec![usize::MAX; a.num_states() * nb];
    let mut pairs = vec![(p, q)];
    index[p * nb + q] = 0;
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        let (x, y) = pairs[s];
        debug_assert_eq!(delta.len(), s * k);
        for c in 0..k {
            let (tx, ty) = (a.next(x, c), b.next(y, c));
            let slot = &mut index[tx * nb + ty];
            if *slot == usize::MAX {
                *slot = pairs.len();
                pairs.push((tx, ty));
                queue.push_back(*slot);
            }
            delta.push(*slot);
        }
    }
    let accepting = pairs
        .iter()
        .map(|&(x, y)| a.is_accepting(x) != b.is_accepting(y))
        .collect();
    let dfa = Dfa::new(a.alphabet().clone(), 0, accepting, delta)
        .expect("product over reachable pairs is complete and reachable");
    ProductDfa { dfa, pairs }
}
