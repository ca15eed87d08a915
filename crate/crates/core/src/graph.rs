//! Graph algorithms over a DFA's transition graph.
//!
//! An optional `allowed` mask restricts every search to a subgraph; nodes
//! outside it are neither entered nor reported.

use std::collections::VecDeque;

use crate::dfa::{Dfa, StateId};

#[inline]
fn ok(allowed: Option<&[bool]>, q: StateId) -> bool {
    allowed.is_none_or(|m| m[q])
}

/// States lying on a directed cycle: members of a strongly connected
/// component with at least two states, or states with a self-loop.
///
/// Iterative Tarjan, so deep automata cannot overflow the stack.
pub(crate) fn cyclic_states(d: &Dfa, allowed: Option<&[bool]>) -> Vec<bool> {
    let n = d.num_states();
    let k = d.alphabet().len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<StateId> = Vec::new();
    let mut cyclic = vec![false; n];
    let mut next_index = 0;
    // (node, next symbol to explore)
    let mut call: Vec<(StateId, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN || !ok(allowed, root) {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < k {
                let w = d.next(v, top.1);
                top.1 += 1;
                if !ok(allowed, w) {
                    continue;
                }
                if w == v {
                    cyclic[v] = true;
                }
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                if component.len() > 1 {
                    for w in component {
                        cyclic[w] = true;
                    }
                }
            }
        }
    }
    cyclic
}

/// States reachable (in zero or more steps) from any state in `sources`.
pub(crate) fn reachable_from_set(d: &Dfa, sources: &[bool], allowed: Option<&[bool]>) -> Vec<bool> {
    let mut seen = vec![false; d.num_states()];
    let mut queue = VecDeque::new();
    for q in d.states() {
        if sources[q] && ok(allowed, q) {
            seen[q] = true;
            queue.push_back(q);
        }
    }
    while let Some(q) = queue.pop_front() {
        for &t in d.row(q) {
            if !seen[t] && ok(allowed, t) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    seen
}

/// States from which some state in `targets` is reachable.
pub(crate) fn coreachable(d: &Dfa, targets: &[bool]) -> Vec<bool> {
    let n = d.num_states();
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for q in d.states() {
        for &t in d.row(q) {
            preds[t].push(q);
        }
    }
    let mut seen = targets.to_vec();
    let mut queue: VecDeque<StateId> = (0..n).filter(|&q| targets[q]).collect();
    while let Some(q) = queue.pop_front() {
        for &p in &preds[q] {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    seen
}

/// Breadth-first search tree from `from`, exploring symbols in alphabet
/// order. The path it records to each state is the shortlex-least word
/// leading there.
pub(crate) struct ShortlexTree {
    parent: Vec<Option<(StateId, usize)>>,
    seen: Vec<bool>,
    root: StateId,
}

impl ShortlexTree {
    pub(crate) fn new(d: &Dfa, from: StateId, allowed: Option<&[bool]>) -> Self {
        let n = d.num_states();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            for (s, &t) in d.row(q).iter().enumerate() {
                if !seen[t] && ok(allowed, t) {
                    seen[t] = true;
                    parent[t] = Some((q, s));
                    queue.push_back(t);
                }
            }
        }
        ShortlexTree { parent, seen, root: from }
    }

    pub(crate) fn reaches(&self, q: StateId) -> bool {
        self.seen[q]
    }

    /// Symbol path from the root to `q`, if reachable.
    pub(crate) fn path(&self, q: StateId) -> Option<Vec<usize>> {
        if !self.seen[q] {
            return None;
        }
        let mut out = Vec::new();
        let mut cur = q;
        while cur != self.root {
            let (p, s) = self.parent[cur].expect("non-root node has a parent");
            out.push(s);
            cur = p;
        }
        out.reverse();
        Some(out)
    }
}

/// States reachable from `from` in breadth-first discovery order.
pub(crate) fn bfs_order(d: &Dfa, from: StateId) -> Vec<StateId> {
    let mut seen = vec![false; d.num_states()];
    seen[from] = true;
    let mut order = vec![from];
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        i += 1;
        for &t in d.row(q) {
            if !seen[t] {
                seen[t] = true;
                order.push(t);
            }
        }
    }
    order
}

/// Shortlex-least non-empty word leading from `c` back to `c` inside the
/// allowed subgraph.
pub(crate) fn shortest_cycle(d: &Dfa, c: StateId, allowed: Option<&[bool]>) -> Option<Vec<usize>> {
    let n = d.num_states();
    let mut parent: Vec<Option<(Option<StateId>, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    // Layer one hangs off a virtual root so that `c` itself can be
    // rediscovered.
    for (s, &t) in d.row(c).iter().enumerate() {
        if !seen[t] && ok(allowed, t) {
            seen[t] = true;
            parent[t] = Some((None, s));
            queue.push_back(t);
        }
    }
    while !seen[c] {
        let q = queue.pop_front()?;
        for (s, &t) in d.row(q).iter().enumerate() {
            if !seen[t] && ok(allowed, t) {
                seen[t] = true;
                parent[t] = Some((Some(q), s));
                queue.push_back(t);
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = Some(c);
    while let Some(q) = cur {
        let (p, s) = parent[q].expect("discovered node has a parent");
        out.push(s);
        cur = p;
    }
    out.reverse();
    Some(out)
}
