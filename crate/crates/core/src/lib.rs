#![forbid(unsafe_code)]

//! Finite-scale toolkit for episturmian words and Arnoux-Rauzy-style sequences.
//!
//! The crate builds epistandard/episturmian prefixes from directive words,
//! decides local balance characterizations on finite words, checks Property P,
//! and recovers directive words by iterated morphic desubstitution.
//!
//! Everything operates on finite words. Statements about infinite words are
//! approximated by checks on long prefixes, bounded by a documented
//! reliability length (see [`words::FactorSet`]).

pub mod analyzer;
pub mod decomposer;
pub mod generator;
pub mod morphisms;
pub mod words;

pub use morphisms::Spin;
pub use words::{Alphabet, Letter, Word};
