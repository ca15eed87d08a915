//! Infinite-part isomorphisms and finite-part isomorphisms up to acceptance.
//!
//! Two constructions exist for the infinite part. The primary one matches
//! every infinite-part state of `a` with the infinite-part state of `b` that
//! has exactly the same language. The second one transports states through
//! long representative words: when `a ~ b`, a word longer than the point
//! where both machines sit in their infinite parts and agree on every
//! continuation reaches corresponding states in both.

use std::fmt;

use thiserror::Error;

use crate::classes::{dfas_finitely_different, related_across};
use crate::dfa::{Dfa, StateId, Word};
use crate::error::DfaError;
use crate::fmin::is_f_minimal;
use crate::graph::{self, ShortlexTree};
use crate::language::language_is_empty;
use crate::minimize::is_minimized;
use crate::parts::{compute_parts, PartsPartition};
use crate::product::product_xor_from;

/// Which part of each machine a bijection relates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartKind {
    Infinite,
    Finite,
}

impl fmt::Display for PartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartKind::Infinite => "infinite",
            PartKind::Finite => "finite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateBijection {
    pub part: PartKind,
    /// `(state of a, state of b)`, ascending by the first component.
    pub pairs: Vec<(StateId, StateId)>,
}

impl StateBijection {
    pub fn new(part: PartKind, mut pairs: Vec<(StateId, StateId)>) -> Self {
        pairs.sort_unstable();
        StateBijection { part, pairs }
    }

    pub fn image(&self, q: StateId) -> Option<StateId> {
        self.pairs
            .binary_search_by_key(&q, |&(x, _)| x)
            .ok()
            .map(|i| self.pairs[i].1)
    }
}

impl fmt::Display for StateBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, y) in &self.pairs {
            writeln!(f, "{x} -> {y}")?;
        }
        Ok(())
    }
}

/// Representative words for the infinite part of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeAssignment {
    pub threshold: usize,
    /// `(q, w_q)` with `|w_q| > threshold` and δ(q₀, w_q) = q.
    pub words: Vec<(StateId, Word)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error(transparent)]
    Dfa(#[from] DfaError),
    #[error("{0} automaton is not minimized")]
    NotMinimized(Side),
    #[error("{0} automaton is not f-minimal")]
    NotFMinimal(Side),
    #[error("automata are not finitely different")]
    NotFinitelyDifferent,
    #[error("constructed map failed verification: {0}")]
    VerificationFailed(Violation),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "first",
            Side::Right => "second",
        })
    }
}

/// First condition a claimed bijection violates.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("domain differs from the {0} part of the first automaton")]
    Domain(PartKind),
    #[error("range differs from the {0} part of the second automaton")]
    Range(PartKind),
    #[error("map is not injective at {0}")]
    NotInjective(StateId),
    #[error("acceptance differs at {0}")]
    Acceptance(StateId),
    #[error("transition from {state} on {symbol:?} does not commute")]
    Transition { state: StateId, symbol: char },
    #[error("map is not total on the domain")]
    Partial,
}

/// Checks a claimed bijection against the conditions for its part kind.
///
/// Infinite part: acceptance is preserved and f(δ(q,c)) = δ'(f(q),c).
/// Finite part: δ(p,c) = r ⇒ δ'(f(p),c) = f(r) whenever r is also in the
/// finite part; acceptance is ignored.
pub fn verify_bijection(a: &Dfa, b: &Dfa, f: &StateBijection) -> Result<(), Violation> {
    let pa = compute_parts(a);
    let pb = compute_parts(b);
    verify_with_parts(a, &pa, b, &pb, f)
}

fn part_of(parts: &PartsPartition, kind: PartKind) -> Vec<StateId> {
    match kind {
        PartKind::Infinite => parts.infinite_part(),
        PartKind::Finite => parts.finite_part(),
    }
}

fn verify_with_parts(
    a: &Dfa,
    pa: &PartsPartition,
    b: &Dfa,
    pb: &PartsPartition,
    f: &StateBijection,
) -> Result<(), Violation> {
    let mut domain: Vec<StateId> = f.pairs.iter().map(|&(x, _)| x).collect();
    domain.sort_unstable();
    domain.dedup();
    if domain.len() != f.pairs.len() {
        return Err(Violation::Partial);
    }
    if domain != part_of(pa, f.part) {
        return Err(Violation::Domain(f.part));
    }
    let mut range: Vec<StateId> = f.pairs.iter().map(|&(_, y)| y).collect();
    range.sort_unstable();
    if let Some(w) = range.windows(2).find(|w| w[0] == w[1]) {
        return Err(Violation::NotInjective(w[0]));
    }
    if range != part_of(pb, f.part) {
        return Err(Violation::Range(f.part));
    }
    let image = |q: StateId| f.image(q);
    for &(x, y) in &f.pairs {
        if f.part == PartKind::Infinite && a.is_accepting(x) != b.is_accepting(y) {
            return Err(Violation::Acceptance(x));
        }
        for s in 0..a.alphabet().len() {
            let target = a.next(x, s);
            let expected = match f.part {
                PartKind::Infinite => image(target),
                PartKind::Finite if pa.is_finite(target) => image(target),
                PartKind::Finite => continue,
            };
            if expected != Some(b.next(y, s)) {
                return Err(Violation::Transition {
                    state: x,
                    symbol: a.alphabet().symbol(s),
                });
            }
        }
    }
    Ok(())
}

fn require_minimized(a: &Dfa, b: &Dfa) -> Result<(), IsoError> {
    a.check_same_alphabet(b)?;
    if !is_minimized(a) {
        return Err(IsoError::NotMinimized(Side::Left));
    }
    if !is_minimized(b) {
        return Err(IsoError::NotMinimized(Side::Right));
    }
    Ok(())
}

/// The infinite-part isomorphism between minimized `a` and `b`, if one
/// exists.
///
/// An isomorphism preserves acceptance and commutes with transitions on the
/// transition-closed infinite parts, so it maps every state to one with the
/// same language; minimality makes that state unique. Matching by exact
/// language equality therefore finds the isomorphism whenever there is one.
pub fn infinite_part_iso(a: &Dfa, b: &Dfa) -> Result<Option<StateBijection>, IsoError> {
    require_minimized(a, b)?;
    let pa = compute_parts(a);
    let pb = compute_parts(b);
    let right = pb.infinite_part();
    let left = pa.infinite_part();
    if left.len() != right.len() {
        return Ok(None);
    }
    let mut used = vec![false; b.num_states()];
    let mut pairs = Vec::with_capacity(left.len());
    for &q in &left {
        let partner = right.iter().copied().find(|&r| {
            !used[r] && language_is_empty(&product_xor_from(a, q, b, r).dfa)
        });
        match partner {
            Some(r) => {
                used[r] = true;
                pairs.push((q, r));
            }
            None => return Ok(None),
        }
    }
    let f = StateBijection::new(PartKind::Infinite, pairs);
    match verify_with_parts(a, &pa, b, &pb, &f) {
        Ok(()) => Ok(Some(f)),
        Err(_) => Ok(None),
    }
}

/// The infinite-part isomorphism obtained by following representative words
/// of length above N = |Q|·|Q'| in both machines. Requires minimized,
/// finitely different inputs.
///
/// Each representative is built from a cycle above `q`: the shortlex path
/// from the start to the smallest-id cycle state `c` that reaches `q`, the
/// shortlex cycle at `c` pumped until the word is long enough, then the
/// shortlex path from `c` to `q`.
pub fn iso_from_representatives(
    a: &Dfa,
    b: &Dfa,
) -> Result<(StateBijection, RepresentativeAssignment), IsoError> {
    require_minimized(a, b)?;
    if !dfas_finitely_different(a, b)?.is_finite() {
        return Err(IsoError::NotFinitelyDifferent);
    }
    let threshold = a.num_states() * b.num_states();
    let pa = compute_parts(a);
    let pb = compute_parts(b);
    let cyclic = graph::cyclic_states(a, None);
    let from_start = ShortlexTree::new(a, a.start(), None);
    let mut trees: Vec<Option<ShortlexTree>> = (0..a.num_states()).map(|_| None).collect();
    let mut words = Vec::new();
    let mut pairs = Vec::new();
    for q in pa.infinite_part() {
        let entry = (0..a.num_states())
            .filter(|&c| cyclic[c])
            .find(|&c| {
                trees[c]
                    .get_or_insert_with(|| ShortlexTree::new(a, c, None))
                    .reaches(q)
            })
            .expect("infinite-part state lies below a cycle");
        let prefix = from_start.path(entry).expect("all states are reachable");
        let pump = graph::shortest_cycle(a, entry, None).expect("entry lies on a cycle");
        let suffix = trees[entry]
            .as_ref()
            .and_then(|t| t.path(q))
            .expect("entry reaches q");
        let fixed = prefix.len() + suffix.len();
        let reps = (threshold + 1).saturating_sub(fixed).div_ceil(pump.len());
        let mut symbols = prefix;
        for _ in 0..reps {
            symbols.extend_from_slice(&pump);
        }
        symbols.extend_from_slice(&suffix);
        debug_assert!(symbols.len() > threshold);
        debug_assert_eq!(a.run_symbols(a.start(), &symbols), q);
        let image = b.run_symbols(b.start(), &symbols);
        pairs.push((q, image));
        words.push((q, a.alphabet().decode(&symbols)));
    }
    let f = StateBijection::new(PartKind::Infinite, pairs);
    verify_with_parts(a, &pa, b, &pb, &f).map_err(IsoError::VerificationFailed)?;
    Ok((f, RepresentativeAssignment { threshold, words }))
}

/// The finite-part isomorphism up to acceptance between f-minimal,
/// finitely different `a` and `b`: each finite-part state maps to the unique
/// finite-part state of `b` in the same state-class.
pub fn finite_part_iso(a: &Dfa, b: &Dfa) -> Result<StateBijection, IsoError> {
    a.check_same_alphabet(b)?;
    if !is_f_minimal(a).holds() {
        return Err(IsoError::NotFMinimal(Side::Left));
    }
    if !is_f_minimal(b).holds() {
        return Err(IsoError::NotFMinimal(Side::Right));
    }
    if !dfas_finitely_different(a, b)?.is_finite() {
        return Err(IsoError::NotFinitelyDifferent);
    }
    let pa = compute_parts(a);
    let pb = compute_parts(b);
    let right = pb.finite_part();
    let mut pairs = Vec::new();
    for p in pa.finite_part() {
        let partner = right.iter().copied().find(|&r| related_across(a, p, b, r));
        match partner {
            Some(r) => pairs.push((p, r)),
            None => return Err(IsoError::VerificationFailed(Violation::Domain(PartKind::Finite))),
        }
    }
    let f = StateBijection::new(PartKind::Finite, pairs);
    verify_with_parts(a, &pa, b, &pb, &f).map_err(IsoError::VerificationFailed)?;
    Ok(f)
}
