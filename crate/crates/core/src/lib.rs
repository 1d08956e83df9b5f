//! altcodes — a toolkit for variable-length codes over finite alphabets.
//!
//! The crate decides the classical code properties of regular languages
//! (unique decipherability via Sardinas–Patterson, the prefix/suffix/bifix
//! and infix/subinfix classes, hypercodes, thinness and completeness),
//! decides unambiguity of concatenation products, recognizes strong
//! alternative pairs and the codes they induce, and constructs maximal-code
//! embeddings for prefix, suffix, and bifix codes in both the finite and
//! regular case.
//!
//! Languages are given as finite word lists or as expressions of a small
//! regex dialect (`+` union, juxtaposition, postfix `*`), and are compiled
//! to canonical minimal DFAs; all decisions are exact. Brute-force oracles
//! for every derived criterion live in [`oracle`] and back the test suite.

pub mod alphabet;
pub mod alt;
pub mod codes;
pub mod dfa;
pub mod embed;
pub mod error;
pub mod grid;
pub mod language;
mod nfa;
pub mod ops;
pub mod oracle;
pub mod regex;
pub mod render;
pub mod report;

pub use alphabet::{Alphabet, Word};
pub use error::{Error, Result};
pub use language::Language;
pub use regex::{parse_regex, RegexAst};
