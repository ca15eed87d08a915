//! The line-oriented `dfa v1` text format.
//!
//! ```text
//! dfa v1
//! alphabet 01
//! states 2
//! start 0
//! accept 0
//! 0 0 0
//! 0 1 1
//! 1 0 1
//! 1 1 1
//! ```
//!
//! `#` starts a comment and blank lines are ignored. `accept -` declares no
//! accepting states. The transition section must hold exactly one line per
//! (state, symbol) pair.

use std::fmt;

use crate::dfa::{Alphabet, Dfa, StateId};
use crate::error::DfaError;

/// Options for [`parse_dfa_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Route every missing transition to a fresh rejecting sink instead of
    /// rejecting the input.
    pub complete: bool,
}

/// A parsed automaton plus what had to be done to make it valid.
#[derive(Clone, Debug)]
pub struct ParsedDfa {
    pub dfa: Dfa,
    /// Ids (in the input numbering) of unreachable states that were dropped.
    pub trimmed: Vec<StateId>,
    /// Id of the sink added by [`ParseOptions::complete`], if one was needed.
    pub added_sink: Option<StateId>,
}

impl ParsedDfa {
    /// Human-readable warnings, one per line.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(s) = self.added_sink {
            out.push(format!("added rejecting sink state {s} to complete the table"));
        }
        if !self.trimmed.is_empty() {
            let n = self.trimmed.len();
            let ids: Vec<String> = self.trimmed.iter().map(|q| q.to_string()).collect();
            out.push(format!(
                "trimmed {n} unreachable state{} ({})",
                if n == 1 { "" } else { "s" },
                ids.join(" ")
            ));
        }
        out
    }
}

pub fn parse_dfa(text: &str) -> Result<ParsedDfa, DfaError> {
    parse_dfa_with(text, ParseOptions::default())
}

pub fn parse_dfa_with(text: &str, options: ParseOptions) -> Result<ParsedDfa, DfaError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let syntax = |line: usize, message: &str| DfaError::Syntax {
        line,
        message: message.to_owned(),
    };

    match lines.next() {
        Some((_, "dfa v1")) => {}
        Some((line, _)) => return Err(syntax(line, "expected header `dfa v1`")),
        None => return Err(syntax(1, "empty input, expected header `dfa v1`")),
    }

    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut start: Option<(usize, StateId)> = None;
    let mut accept: Option<(usize, Vec<StateId>)> = None;
    let mut table: Vec<Option<StateId>> = Vec::new();
    let mut last_line = 1;

    for (line, content) in lines {
        last_line = line;
        let mut words = content.split_whitespace();
        let head = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        match head {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax(line, "duplicate `alphabet` line"));
                }
                let [symbols] = rest[..] else {
                    return Err(syntax(line, "expected `alphabet <symbols>`"));
                };
                alphabet = Some(Alphabet::new(symbols.chars()).map_err(|e| e.at_line(line))?);
            }
            "states" => {
                if states.is_some() {
                    return Err(syntax(line, "duplicate `states` line"));
                }
                let [n] = rest[..] else {
                    return Err(syntax(line, "expected `states <n>`"));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| syntax(line, "state count is not a number"))?;
                if n == 0 {
                    return Err(DfaError::NoStates.at_line(line));
                }
                states = Some(n);
            }
            "start" => {
                if start.is_some() {
                    return Err(syntax(line, "duplicate `start` line"));
                }
                let [id] = rest[..] else {
                    return Err(syntax(line, "expected `start <id>`"));
                };
                start = Some((line, parse_id(id, line)?));
            }
            "accept" => {
                if accept.is_some() {
                    return Err(syntax(line, "duplicate `accept` line"));
                }
                let ids = match rest[..] {
                    ["-"] => Vec::new(),
                    [] => return Err(syntax(line, "expected `accept <ids>` or `accept -`")),
                    _ => rest
                        .iter()
                        .map(|id| parse_id(id, line))
                        .collect::<Result<_, _>>()?,
                };
                accept = Some((line, ids));
            }
            _ => {
                let (Some(ab), Some(n)) = (&alphabet, states) else {
                    return Err(syntax(
                        line,
                        "transition before `alphabet` and `states` lines",
                    ));
                };
                let [sym, to] = rest[..] else {
                    return Err(syntax(line, "expected `<from> <symbol> <to>`"));
                };
                let from = parse_id(head, line)?;
                let to = parse_id(to, line)?;
                let mut chars = sym.chars();
                let (Some(c), None) = (chars.next(), chars.next()) else {
                    return Err(syntax(line, "symbol must be a single character"));
                };
                let s = ab
                    .index_of(c)
                    .ok_or_else(|| DfaError::SymbolNotInAlphabet(c).at_line(line))?;
                for id in [from, to] {
                    if id >= n {
                        return Err(DfaError::StateOutOfRange { id, states: n }.at_line(line));
                    }
                }
                if table.is_empty() {
                    table = vec![None; n * ab.len()];
                }
                let slot = &mut table[from * ab.len() + s];
                if slot.is_some() {
                    return Err(syntax(line, "duplicate transition"));
                }
                *slot = Some(to);
            }
        }
    }

    let alphabet = alphabet.ok_or_else(|| syntax(last_line, "missing `alphabet` line"))?;
    let n = states.ok_or_else(|| syntax(last_line, "missing `states` line"))?;
    let (start_line, start) = start.ok_or_else(|| syntax(last_line, "missing `start` line"))?;
    let (accept_line, accept) = accept.ok_or_else(|| syntax(last_line, "missing `accept` line"))?;
    if start >= n {
        return Err(DfaError::StateOutOfRange { id: start, states: n }.at_line(start_line));
    }
    let mut accepting = vec![false; n];
    for id in accept {
        if id >= n {
            return Err(DfaError::StateOutOfRange { id, states: n }.at_line(accept_line));
        }
        accepting[id] = true;
    }
    if table.is_empty() {
        table = vec![None; n * alphabet.len()];
    }

    let k = alphabet.len();
    let mut added_sink = None;
    let delta: Vec<StateId> = if let Some(missing) = table.iter().position(Option::is_none) {
        if !options.complete {
            return Err(DfaError::IncompleteTable {
                state: missing / k,
                symbol: alphabet.symbol(missing % k),
            });
        }
        let sink = n;
        added_sink = Some(sink);
        accepting.push(false);
        table
            .into_iter()
            .map(|t| t.unwrap_or(sink))
            .chain(std::iter::repeat_n(sink, k))
            .collect()
    } else {
        table.into_iter().map(|t| t.unwrap()).collect()
    };

    let total = accepting.len();
    let relabeled = Dfa::trimmed(alphabet, start, accepting, delta)?;
    let mut kept = vec![false; total];
    for &q in &relabeled.origin {
        kept[q] = true;
    }
    let trimmed = (0..total).filter(|&q| !kept[q]).collect();
    if let Some(s) = added_sink {
        added_sink = relabeled.origin.iter().position(|&q| q == s);
    }
    Ok(ParsedDfa {
        dfa: relabeled.dfa,
        trimmed,
        added_sink,
    })
}

fn parse_id(s: &str, line: usize) -> Result<StateId, DfaError> {
    s.parse().map_err(|_| DfaError::Syntax {
        line,
        message: format!("invalid state id {s:?}"),
    })
}

/// Canonical serialization: transitions sorted by (from, symbol), accepting
/// ids ascending.
pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    write_dfa(&mut out, d).expect("writing to a String cannot fail");
    out
}

fn write_dfa(out: &mut impl fmt::Write, d: &Dfa) -> fmt::Result {
    writeln!(out, "dfa v1")?;
    writeln!(out, "alphabet {}", d.alphabet())?;
    writeln!(out, "states {}", d.num_states())?;
    writeln!(out, "start {}", d.start())?;
    let acc: Vec<String> = d.accepting_states().map(|q| q.to_string()).collect();
    if acc.is_empty() {
        writeln!(out, "accept -")?;
    } else {
        writeln!(out, "accept {}", acc.join(" "))?;
    }
    for q in d.states() {
        for (s, &t) in d.row(q).iter().enumerate() {
            writeln!(out, "{q} {} {t}", d.alphabet().symbol(s))?;
        }
    }
    Ok(())
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dfa(f, self)
    }
}
