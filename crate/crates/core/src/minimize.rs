//! Moore partition refinement and shortest distinguishing words.

use std::collections::{HashMap, VecDeque};

use crate::dfa::{Dfa, StateId, Word};
use crate::error::DfaError;

/// Blocks of language-equivalent states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatePartition {
    block_of: Vec<usize>,
    blocks: usize,
}

impl StatePartition {
    pub fn block_of(&self, q: StateId) -> usize {
        self.block_of[q]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn same_block(&self, p: StateId, q: StateId) -> bool {
        self.block_of[p] == self.block_of[q]
    }

    /// Member lists, indexed by block id.
    pub fn blocks(&self) -> Vec<Vec<StateId>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (q, &b) in self.block_of.iter().enumerate() {
            out[b].push(q);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Minimized {
    /// The quotient automaton, numbered in breadth-first order.
    pub dfa: Dfa,
    /// Block ids coincide with state ids of `dfa`, so this is also the
    /// quotient map from input states to result states.
    pub partition: StatePartition,
}

/// Coarsest partition of `d`'s states by language equality.
pub fn moore_partition(d: &Dfa) -> StatePartition {
    let n = d.num_states();
    let mut block_of: Vec<usize> = d.accepting_mask().iter().map(|&a| usize::from(a)).collect();
    let mut blocks = renumber(&mut block_of);
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![0; n];
        for q in 0..n {
            let mut sig = Vec::with_capacity(d.alphabet().len() + 1);
            sig.push(block_of[q]);
            sig.extend(d.row(q).iter().map(|&t| block_of[t]));
            let fresh = ids.len();
            next[q] = *ids.entry(sig).or_insert(fresh);
        }
        let count = ids.len();
        block_of = next;
        if count == blocks {
            return StatePartition { block_of, blocks };
        }
        blocks = count;
    }
}

/// Renumbers block ids by first appearance; returns the block count.
fn renumber(block_of: &mut [usize]) -> usize {
    let mut map = HashMap::new();
    for b in block_of.iter_mut() {
        let fresh = map.len();
        *b = *map.entry(*b).or_insert(fresh);
    }
    map.len()
}

/// Language-preserving quotient of `d` with pairwise distinct state
/// languages, in canonical breadth-first numbering.
pub fn minimize(d: &Dfa) -> Minimized {
    let partition = moore_partition(d);
    let k = d.alphabet().len();
    let mut rep = vec![usize::MAX; partition.blocks];
    for q in d.states() {
        let b = partition.block_of[q];
        if rep[b] == usize::MAX {
            rep[b] = q;
        }
    }
    let mut delta = Vec::with_capacity(partition.blocks * k);
    for &q in &rep {
        delta.extend(d.row(q).iter().map(|&t| partition.block_of[t]));
    }
    let accepting = rep.iter().map(|&q| d.is_accepting(q)).collect();
    let quotient = Dfa::new(
        d.alphabet().clone(),
        partition.block_of[d.start()],
        accepting,
        delta,
    )
    .expect("quotient of a reachable DFA is reachable");
    let canon = quotient.canonical();
    let renumber = canon.renumbering(partition.blocks);
    let block_of = partition
        .block_of
        .iter()
        .map(|&b| renumber[b].expect("every block is reachable"))
        .collect();
    Minimized {
        dfa: canon.dfa,
        partition: StatePartition {
            block_of,
            blocks: partition.blocks,
        },
    }
}

pub fn is_minimized(d: &Dfa) -> bool {
    moore_partition(d).num_blocks() == d.num_states()
}

/// Shortest distinguishing words for every pair of states, computed by
/// backward breadth-first search over state pairs from the pairs that
/// disagree on acceptance.
///
/// Among equally short candidates the shortlex-least word is kept: a pair
/// found at level `k + 1` takes the smallest first symbol leading to a pair
/// resolved at level `k`, and that pair's word is already shortlex-least.
#[derive(Clone, Debug)]
pub struct DistinguishingTable {
    n: usize,
    /// For `p < q`: `None` if equivalent, otherwise (first symbol or none
    /// for ε, length).
    entries: Vec<Option<(Option<usize>, usize)>>,
    dfa: Dfa,
}

impl DistinguishingTable {
    pub fn new(d: &Dfa) -> Self {
        let n = d.num_states();
        let k = d.alphabet().len();
        let mut preds: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); k]; n];
        for q in d.states() {
            for (s, &t) in d.row(q).iter().enumerate() {
                preds[t][s].push(q);
            }
        }
        let idx = |p: usize, q: usize| if p < q { p * n + q } else { q * n + p };
        let mut entries: Vec<Option<(Option<usize>, usize)>> = vec![None; n * n];
        let mut frontier = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                if d.is_accepting(p) != d.is_accepting(q) {
                    entries[idx(p, q)] = Some((None, 0));
                    frontier.push((p, q));
                }
            }
        }
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut found: HashMap<(usize, usize), usize> = HashMap::new();
            for &(p, q) in &frontier {
                for (s, (into_p, into_q)) in preds[p].iter().zip(&preds[q]).enumerate() {
                    for &pp in into_p {
                        for &qq in into_q {
                            if pp == qq {
                                continue;
                            }
                            let key = (pp.min(qq), pp.max(qq));
                            if entries[idx(key.0, key.1)].is_some() {
                                continue;
                            }
                            found
                                .entry(key)
                                .and_modify(|best| *best = (*best).min(s))
                                .or_insert(s);
                        }
                    }
                }
            }
            let mut next: Vec<(usize, usize)> = found.keys().copied().collect();
            next.sort_unstable();
            for &(p, q) in &next {
                entries[idx(p, q)] = Some((Some(found[&(p, q)]), level));
            }
            frontier = next;
        }
        DistinguishingTable {
            n,
            entries,
            dfa: d.clone(),
        }
    }

    pub fn are_equivalent(&self, p: StateId, q: StateId) -> bool {
        p == q || self.entries[p.min(q) * self.n + p.max(q)].is_none()
    }

    /// Shortlex-least word accepted from exactly one of `p`, `q`.
    pub fn word(&self, p: StateId, q: StateId) -> Option<Word> {
        let mut symbols = Vec::new();
        let (mut p, mut q) = (p, q);
        loop {
            if p == q {
                return None;
            }
            let (first, _) = self.entries[p.min(q) * self.n + p.max(q)]?;
            match first {
                None => return Some(self.dfa.alphabet().decode(&symbols)),
                Some(s) => {
                    symbols.push(s);
                    p = self.dfa.next(p, s);
                    q = self.dfa.next(q, s);
                }
            }
        }
    }
}

/// Shortest (then shortlex-least) word distinguishing `p` from `q`, or
/// `None` iff L(p) = L(q).
pub fn distinguishing_word(d: &Dfa, p: StateId, q: StateId) -> Result<Option<Word>, DfaError> {
    d.check_state(p)?;
    d.check_state(q)?;
    if p == q {
        return Ok(None);
    }
    // Forward search from the single pair; the table above answers all pairs.
    let n = d.num_states();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * n];
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::from([(p, q)]);
    seen[p * n + q] = true;
    while let Some((x, y)) = queue.pop_front() {
        if d.is_accepting(x) != d.is_accepting(y) {
            let mut symbols = Vec::new();
            let mut cur = x * n + y;
            while let Some((prev, s)) = parent[cur] {
                symbols.push(s);
                cur = prev;
            }
            symbols.reverse();
            return Ok(Some(d.alphabet().decode(&symbols)));
        }
        for s in 0..d.alphabet().len() {
            let (tx, ty) = (d.next(x, s), d.next(y, s));
            let key = tx * n + ty;
            if !seen[key] {
                seen[key] = true;
                parent[key] = Some((x * n + y, s));
                queue.push_back((tx, ty));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::Alphabet;
    use crate::fixtures;

    fn odd_with_duplicate() -> Dfa {
        // ODD where the second visit to the even state lands on a copy (2)
        let ab = Alphabet::new("01".chars()).unwrap();
        Dfa::new(ab, 0, vec![false, true, false], vec![1, 1, 2, 2, 1, 1]).unwrap()
    }

    #[test]
    fn minimize_examples() {
        let z = minimize(&fixtures::zstar());
        assert_eq!(z.dfa, fixtures::zstar());
        let o = minimize(&odd_with_duplicate());
        assert_eq!(o.dfa, fixtures::odd());
        assert_eq!(o.partition.block_of(0), o.partition.block_of(2));
        let p = crate::product::product_xor(&fixtures::sigplus(), &fixtures::all()).unwrap();
        let m = minimize(&p.dfa);
        assert_eq!(m.dfa.num_states(), 2);
        assert!(m.dfa.is_accepting(0));
    }

    #[test]
    fn is_minimized_examples() {
        assert!(is_minimized(&fixtures::onezstar()));
        assert!(!is_minimized(&odd_with_duplicate()));
        assert!(is_minimized(&fixtures::all()));
    }

    #[test]
    fn distinguishing_examples() {
        let z = fixtures::zstar();
        assert_eq!(distinguishing_word(&z, 0, 1).unwrap(), Some(Word::empty()));
        let o = fixtures::onezstar();
        assert_eq!(distinguishing_word(&o, 1, 2).unwrap(), Some(Word::empty()));
        assert_eq!(distinguishing_word(&o, 0, 2).unwrap(), Some("1".into()));
        assert_eq!(distinguishing_word(&o, 2, 2).unwrap(), None);
        let dup = odd_with_duplicate();
        assert_eq!(distinguishing_word(&dup, 0, 2).unwrap(), None);
        assert!(matches!(distinguishing_word(&o, 0, 3), Err(DfaError::UnknownState(3))));
    }

    #[test]
    fn table_agrees_with_forward_search() {
        for d in [
            fixtures::onezstar(),
            fixtures::zero_or_oneone(),
            odd_with_duplicate(),
            fixtures::single_zero(),
        ] {
            let t = DistinguishingTable::new(&d);
            for p in d.states() {
                for q in d.states() {
                    assert_eq!(t.word(p, q), distinguishing_word(&d, p, q).unwrap(), "{p} {q}");
                }
            }
        }
    }
}
