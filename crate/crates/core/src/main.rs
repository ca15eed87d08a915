use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fdfa::language::{format_word_list, parse_word_list};
use fdfa::random::random_dfa;
use fdfa::{
    compute_parts, compute_parts_by_counting, construct_pair, f_minimize_with, finite_part_iso,
    infinite_part_iso, iso_from_representatives, minimize, parse_dfa_with, state_class_partition,
    symmetric_difference, Alphabet, DiffResult, Dfa, IsoError, MergeOrder, ParseOptions,
};

/// Finitely different regular languages over complete DFAs.
#[derive(Parser)]
#[command(name = "fdfa", version)]
struct Cli {
    /// Add a rejecting sink for missing transitions instead of rejecting
    /// incomplete tables.
    #[arg(long, global = true)]
    complete: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a DFA file.
    Check { input: PathBuf },
    /// Minimize a DFA.
    Minimize {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Greedy f-minimization.
    Fminimize {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print one line per merge.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Order::Canonical)]
        order: Order,
    },
    /// Finite and infinite parts.
    Parts {
        input: PathBuf,
        /// Use the word-counting characterization.
        #[arg(long)]
        by_counting: bool,
    },
    /// State-classes under finite difference.
    Classes { input: PathBuf },
    /// Symmetric difference of two languages.
    Diff { a: PathBuf, b: PathBuf },
    /// Decide whether two languages are finitely different.
    Findiff { a: PathBuf, b: PathBuf },
    /// Infinite-part or finite-part isomorphism.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        part: Part,
        /// Build the infinite-part map from long representative words.
        #[arg(long)]
        representatives: bool,
    },
    /// Two automata with empty finite parts differing exactly on a word list.
    Construct {
        #[arg(long)]
        words: PathBuf,
        #[arg(long)]
        alphabet: String,
        #[arg(long = "o1", value_name = "FILE")]
        o1: PathBuf,
        #[arg(long = "o2", value_name = "FILE")]
        o2: PathBuf,
        #[arg(long)]
        minimize: bool,
    },
    /// Seeded random complete reachable DFA.
    Random {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Brute-force difference up to a length bound.
    #[command(name = "oracle-diff", hide = true)]
    OracleDiff {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        bound: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Canonical,
    Reversed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    Infinite,
    Finite,
}

/// Exit statuses: affirmative, negative verdict, usage or validation error.
const OK: u8 = 0;
const NO: u8 = 1;
const FAIL: u8 = 2;

type Outcome = Result<u8, String>;

fn main() -> ExitCode {
    // `-o1 FILE` reads naturally but clap takes short options as one
    // character; spell those two as long options.
    let args = std::env::args_os().map(|a| match a.to_str() {
        Some("-o1") => "--o1".into(),
        Some("-o2") => "--o2".into(),
        _ => a,
    });
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { FAIL } else { OK });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(FAIL)
        }
    }
}

fn read_dfa(path: &Path, complete: bool) -> Result<Dfa, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = parse_dfa_with(&text, ParseOptions { complete })
        .map_err(|e| format!("{}: {e}", path.display()))?;
    for d in parsed.diagnostics() {
        eprintln!("warning: {}: {d}", path.display());
    }
    Ok(parsed.dfa)
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    Alphabet::new(s.chars()).map_err(|e| e.to_string())
}

fn ids(states: &[usize]) -> String {
    if states.is_empty() {
        return "-".to_string();
    }
    states.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Outcome {
    let load = |p: &Path| read_dfa(p, cli.complete);
    match &cli.command {
        Command::Check { input } => {
            let d = load(input)?;
            println!("ok");
            println!("states {}", d.num_states());
            println!("alphabet {}", d.alphabet());
            Ok(OK)
        }
        Command::Minimize { input, output } => {
            let m = minimize(&load(input)?);
            write_or_print(output.as_deref(), &m.dfa.to_string())?;
            Ok(OK)
        }
        Command::Fminimize {
            input,
            output,
            trace,
            order,
        } => {
            let order = match order {
                Order::Canonical => MergeOrder::Canonical,
                Order::Reversed => MergeOrder::Reversed,
            };
            let r = f_minimize_with(&load(input)?, order);
            if *trace {
                for m in &r.trace {
                    println!("{m}");
                }
            }
            write_or_print(output.as_deref(), &r.dfa.to_string())?;
            Ok(OK)
        }
        Command::Parts { input, by_counting } => {
            let d = load(input)?;
            let parts = if *by_counting {
                compute_parts_by_counting(&d)
            } else {
                compute_parts(&d)
            };
            println!("finite: {}", ids(&parts.finite_part()));
            println!("infinite: {}", ids(&parts.infinite_part()));
            Ok(OK)
        }
        Command::Classes { input } => {
            let classes = state_class_partition(&load(input)?);
            for c in classes.classes() {
                println!("class {}: {}", c[0], ids(c));
            }
            Ok(OK)
        }
        Command::Diff { a, b } => {
            let diff = symmetric_difference(&load(a)?, &load(b)?).map_err(|e| e.to_string())?;
            match diff {
                DiffResult::Finite(words) => {
                    println!("finite {}", words.len());
                    print!("{}", format_word_list(&words));
                    Ok(OK)
                }
                DiffResult::Infinite(lasso) => {
                    println!("infinite");
                    println!("{lasso}");
                    Ok(NO)
                }
            }
        }
        Command::Findiff { a, b } => {
            let diff = symmetric_difference(&load(a)?, &load(b)?).map_err(|e| e.to_string())?;
            if diff.is_finite() {
                println!("finitely-different");
                Ok(OK)
            } else {
                println!("not-finitely-different");
                Ok(NO)
            }
        }
        Command::Iso {
            a,
            b,
            part,
            representatives,
        } => {
            let (a, b) = (load(a)?, load(b)?);
            let result = match (part, representatives) {
                (Part::Infinite, false) => infinite_part_iso(&a, &b),
                (Part::Infinite, true) => iso_from_representatives(&a, &b).map(|(f, reps)| {
                    for (q, w) in &reps.words {
                        eprintln!("representative {q} {w} (N={})", reps.threshold);
                    }
                    Some(f)
                }),
                (Part::Finite, _) => match finite_part_iso(&a, &b) {
                    Err(IsoError::VerificationFailed(_)) => Ok(None),
                    other => other.map(Some),
                },
            };
            match result {
                Ok(Some(f)) => {
                    print!("{f}");
                    Ok(OK)
                }
                Ok(None) => {
                    println!("NOT-ISOMORPHIC");
                    Ok(NO)
                }
                Err(e) => Err(format!("hypothesis violated: {e}")),
            }
        }
        Command::Construct {
            words,
            alphabet,
            o1,
            o2,
            minimize: min,
        } => {
            let text = fs::read_to_string(words).map_err(|e| format!("{}: {e}", words.display()))?;
            let words = parse_word_list(&text).map_err(|e| e.to_string())?;
            let (d, e) = construct_pair(&words, &parse_alphabet(alphabet)?).map_err(|e| e.to_string())?;
            let (d, e) = if *min {
                (minimize(&d).dfa, minimize(&e).dfa)
            } else {
                (d, e)
            };
            write_or_print(Some(o1), &d.to_string())?;
            write_or_print(Some(o2), &e.to_string())?;
            Ok(OK)
        }
        Command::Random {
            states,
            alphabet,
            seed,
            output,
        } => {
            let d = random_dfa(*states, &parse_alphabet(alphabet)?, *seed).map_err(|e| e.to_string())?;
            write_or_print(output.as_deref(), &d.to_string())?;
            Ok(OK)
        }
        Command::OracleDiff { a, b, bound } => oracle_diff(&load(a)?, &load(b)?, *bound),
    }
}

#[cfg(feature = "testing")]
fn oracle_diff(a: &Dfa, b: &Dfa, bound: usize) -> Outcome {
    if a.alphabet() != b.alphabet() {
        return Err("alphabets differ".to_string());
    }
    let words = fdfa::oracle::oracle_diff(a, b, bound);
    println!("disagree {}", words.len());
    print!("{}", format_word_list(&words));
    Ok(OK)
}

#[cfg(not(feature = "testing"))]
fn oracle_diff(_: &Dfa, _: &Dfa, _: usize) -> Outcome {
    Err("built without the `testing` feature".to_string())
}
