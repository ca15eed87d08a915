//! Finitely different regular languages over complete DFAs.
//!
//! Two languages are finitely different (`L ~ L'`) when their symmetric
//! difference is finite. This crate partitions DFA states into finite and
//! infinite parts, decides `~` between states and between machines, groups
//! states into state-classes, f-merges and f-minimizes automata, constructs
//! the structural isomorphisms shared by finitely different minimal and
//! f-minimal automata, and builds pairs of automata with empty finite parts
//! whose languages differ on a prescribed finite set.

pub mod classes;
pub mod construct;
pub mod dfa;
pub mod error;
pub mod fixtures;
pub mod fmin;
pub mod format;
mod graph;
pub mod iso;
pub mod language;
pub mod minimize;
#[cfg(feature = "testing")]
pub mod oracle;
pub mod parts;
pub mod product;
pub mod random;

pub use classes::{
    dfas_finitely_different, finitely_different_by_minimized_product, signature, signature_equal,
    state_class_partition, states_finitely_different, ClassSignature, FinDiffTable,
    SignatureComparison, StateClassPartition,
};
pub use construct::{construct_pair, ConstructionError, ConstructionSpec};
pub use dfa::{Alphabet, Dfa, Relabeled, StateId, Word};
pub use error::DfaError;
pub use fmin::{
    f_merge, f_minimize, f_minimize_with, flip_finite_acceptance, is_f_minimal,
    redirect_boundary_transition, FMergeError, FMinimality, FMinimized, MergeOrder, MergeRecord,
    MergeTrace, RedirectError,
};
pub use format::{parse_dfa, parse_dfa_with, serialize_dfa, ParseOptions, ParsedDfa};
pub use iso::{
    finite_part_iso, infinite_part_iso, iso_from_representatives, verify_bijection, IsoError,
    PartKind, RepresentativeAssignment, StateBijection, Violation,
};
pub use language::{
    classify_language, count_finite_language, enumerate_finite_language, symmetric_difference,
    DiffResult, LanguageClass, LanguageError, Lasso,
};
pub use minimize::{distinguishing_word, is_minimized, minimize, Minimized, StatePartition};
pub use parts::{compute_parts, compute_parts_by_counting, PartsPartition};
pub use product::{product_xor, ProductDfa};
