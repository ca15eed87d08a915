#![allow(dead_code)]

use fdfa::oracle::{enumerate_all_dfas, oracle_diff};
use fdfa::random::{random_dfa_from, Lcg};
use fdfa::{
    flip_finite_acceptance, f_minimize, compute_parts, minimize, Alphabet, Dfa, Word,
};

pub fn binary() -> Alphabet {
    Alphabet::new("01".chars()).unwrap()
}

/// Every complete reachable DFA over {0,1} with 1..=max states.
pub fn exhaustive(max: usize) -> Vec<Dfa> {
    let ab = binary();
    (1..=max).flat_map(|n| enumerate_all_dfas(n, &ab).collect::<Vec<_>>()).collect()
}

pub fn exhaustive_minimized(max: usize) -> Vec<Dfa> {
    exhaustive(max).into_iter().filter(fdfa::is_minimized).collect()
}

/// Seeded pairs of minimized DFAs with at most `max` states. Independent
/// random pairs are almost never finitely different, so most second
/// components are derived from the first: f-minimized, acceptance-flipped
/// on the finite part, or minimized from a one-edge perturbation.
pub fn random_minimized_pairs(count: usize, max: usize, seed: u64) -> Vec<(Dfa, Dfa)> {
    let ab = binary();
    let mut rng = Lcg::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 1 + rng.below(max);
        let a = minimize(&random_dfa_from(n, &ab, &mut rng).unwrap()).dfa;
        let b = match rng.below(4) {
            0 => f_minimize(&a).dfa,
            1 => {
                let finite = compute_parts(&a).finite_part();
                let pick: Vec<usize> = finite.into_iter().filter(|_| rng.coin()).collect();
                minimize(&flip_finite_acceptance(&a, &pick).unwrap()).dfa
            }
            2 => {
                let (alphabet, start, accepting, mut delta) = a.clone().into_parts();
                let cell = rng.below(delta.len());
                delta[cell] = rng.below(accepting.len());
                minimize(&Dfa::trimmed(alphabet, start, accepting, delta).unwrap().dfa).dfa
            }
            _ => {
                let m = 1 + rng.below(max);
                minimize(&random_dfa_from(m, &ab, &mut rng).unwrap()).dfa
            }
        };
        if a.num_states() <= max && b.num_states() <= max {
            out.push((a, b));
        }
    }
    out
}

/// Seeded finite word sets over {0,1} with words of length ≤ `max_len`.
pub fn random_word_sets(count: usize, max_len: usize, seed: u64) -> Vec<Vec<Word>> {
    let ab = binary();
    let mut rng = Lcg::new(seed);
    (0..count)
        .map(|_| {
            let size = rng.below(6);
            let mut ws: Vec<Word> = (0..size)
                .map(|_| {
                    let len = rng.below(max_len + 1);
                    let symbols: Vec<usize> = (0..len).map(|_| rng.below(2)).collect();
                    ab.decode(&symbols)
                })
                .collect();
            ws.sort();
            ws.dedup();
            ws
        })
        .collect()
}

/// Oracle disagreements between `a` and `b` up to `bound`, provided none is
/// as long as |Q|·|Q'| (the most states the pair can jointly occupy);
/// `None` signals a difference that is still growing. With `bound` at least
/// 2·|Q|·|Q'| − 1 the check is conclusive: an infinite difference always
/// has a member with length in [|Q|·|Q'|, 2·|Q|·|Q'|).
pub fn oracle_finite_diff(a: &Dfa, b: &Dfa, bound: usize) -> Option<Vec<Word>> {
    let n = a.num_states() * b.num_states();
    let diff = oracle_diff(a, b, bound);
    diff.iter().all(|w| w.len() < n).then_some(diff)
}

/// Prints one acceptance line and passes the verdict through.
pub fn report(criterion: usize, name: &str, ok: bool, detail: &str) -> bool {
    println!(
        "criterion {criterion} [{}] {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}
