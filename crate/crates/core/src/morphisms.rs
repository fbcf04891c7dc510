//! Elementary episturmian morphisms and single-step desubstitution.
//!
//! The generators are the left and right morphisms attached to a letter `a`
//! (fix `a`, map every other letter `b` to `ab` resp. `ba`) together with
//! letter permutations. Compositions apply outermost-first: in a composition
//! `f g h`, `h` is applied to the input first.
//!
//! Decoding inverts a single left or right morphism on a finite word. The
//! convention is block parsing: for the left morphism of `a`, blocks are
//! `a b` (emitting `b`) and a lone `a` before another `a` or the end
//! (emitting `a`). A word starting with a letter other than `a` gets a
//! virtual leading `a`; a trailing lone `a` decodes as the letter `a` and is
//! flagged ambiguous, since it could equally open a truncated block. The
//! right morphism mirrors this with blocks `b a` and a virtual trailing `a`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::words::{Alphabet, Letter, Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("word error: {0}")]
    Word(#[from] WordError),
    #[error("permutation is not a bijection")]
    NotABijection,
    #[error("cannot parse morphism literal {0:?}")]
    BadLiteral(String),
    #[error("cannot decode the empty word")]
    EmptyInput,
    #[error("word is not decodable at position {position}: adjacent letters both differ from {letter}")]
    NotDecodable { position: usize, letter: Letter },
}

/// The left/right choice attached to a directive letter or a decode step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Left,
    Right,
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Left => write!(f, "L"),
            Spin::Right => write!(f, "R"),
        }
    }
}

impl Serialize for Spin {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A bijection on letters. Letters not listed map to themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: BTreeMap<Letter, Letter>,
}

impl Permutation {
    pub fn new(pairs: impl IntoIterator<Item = (Letter, Letter)>) -> Result<Self, MorphismError> {
        let map: BTreeMap<Letter, Letter> = pairs.into_iter().collect();
        let domain: Vec<Letter> = map.keys().copied().collect();
        let mut image: Vec<Letter> = map.values().copied().collect();
        image.sort_unstable();
        image.dedup();
        if image.len() != domain.len() || image != domain {
            return Err(MorphismError::NotABijection);
        }
        Ok(Permutation { map })
    }

    pub fn apply(&self, letter: Letter) -> Letter {
        self.map.get(&letter).copied().unwrap_or(letter)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(")?;
        for l in self.map.keys() {
            write!(f, "{l}")?;
        }
        write!(f, "->")?;
        for l in self.map.values() {
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// One generator of the episturmian monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryMorphism {
    /// Fixes the letter, maps every other letter `b` to `<letter> b`.
    Left(Letter),
    /// Fixes the letter, maps every other letter `b` to `b <letter>`.
    Right(Letter),
    /// Renames letters by a bijection.
    Permute(Permutation),
}

impl ElementaryMorphism {
    pub fn from_spin(letter: Letter, spin: Spin) -> Self {
        match spin {
            Spin::Left => ElementaryMorphism::Left(letter),
            Spin::Right => ElementaryMorphism::Right(letter),
        }
    }

    fn apply_into(&self, input: &[Letter], out: &mut Vec<Letter>) {
        match self {
            ElementaryMorphism::Left(a) => {
                for &c in input {
                    if c == *a {
                        out.push(c);
                    } else {
                        out.push(*a);
                        out.push(c);
                    }
                }
            }
            ElementaryMorphism::Right(a) => {
                for &c in input {
                    if c == *a {
                        out.push(c);
                    } else {
                        out.push(c);
                        out.push(*a);
                    }
                }
            }
            ElementaryMorphism::Permute(p) => {
                for &c in input {
                    out.push(p.apply(c));
                }
            }
        }
    }
}

impl fmt::Display for ElementaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMorphism::Left(l) => write!(f, "L{l}"),
            ElementaryMorphism::Right(l) => write!(f, "R{l}"),
            ElementaryMorphism::Permute(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for ElementaryMorphism {
    type Err = MorphismError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let bad = || MorphismError::BadLiteral(token.to_string());
        let mut chars = token.chars();
        match chars.next() {
            Some('L') | Some('R') => {
                let letter = chars.next().ok_or_else(bad)?;
                if chars.next().is_some() {
                    return Err(bad());
                }
                let letter = Letter::new(letter)?;
                if token.starts_with('L') {
                    Ok(ElementaryMorphism::Left(letter))
                } else {
                    Ok(ElementaryMorphism::Right(letter))
                }
            }
            Some('P') => {
                let body = token
                    .strip_prefix("P(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let (from, to) = body.split_once("->").ok_or_else(bad)?;
                if from.chars().count() != to.chars().count() {
                    return Err(bad());
                }
                let pairs = from
                    .chars()
                    .zip(to.chars())
                    .map(|(a, b)| Ok((Letter::new(a)?, Letter::new(b)?)))
                    .collect::<Result<Vec<_>, WordError>>()?;
                Permutation::new(pairs).map(ElementaryMorphism::Permute)
            }
            _ => Err(bad()),
        }
    }
}

/// A composition of elementary morphisms, outermost first: `steps[0]` is
/// applied last. The empty composition is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MorphismComposition {
    steps: Vec<ElementaryMorphism>,
}

impl MorphismComposition {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<ElementaryMorphism>) -> Self {
        MorphismComposition { steps }
    }

    pub fn steps(&self) -> &[ElementaryMorphism] {
        &self.steps
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for MorphismComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for MorphismComposition {
    type Err = MorphismError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let steps = text
            .split_whitespace()
            .map(ElementaryMorphism::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MorphismComposition::new(steps))
    }
}

impl From<ElementaryMorphism> for MorphismComposition {
    fn from(m: ElementaryMorphism) -> Self {
        MorphismComposition::new(vec![m])
    }
}

/// Applies a composition to a word: innermost (last) step first.
pub fn apply(m: &MorphismComposition, w: &Word) -> Word {
    let mut current: Vec<Letter> = w.letters().to_vec();
    for step in m.steps.iter().rev() {
        let mut next = Vec::with_capacity(current.len() * 2);
        step.apply_into(&current, &mut next);
        current = next;
    }
    Word::new(current, w.alphabet().clone()).expect("morphisms preserve the alphabet")
}

/// Applies a single elementary morphism.
pub fn apply_one(m: &ElementaryMorphism, w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    m.apply_into(w.letters(), &mut out);
    Word::new(out, w.alphabet().clone()).expect("morphisms preserve the alphabet")
}

/// Composes two compositions: `apply(compose(f, g), w) = apply(f, apply(g, w))`.
pub fn compose(outer: &MorphismComposition, inner: &MorphismComposition) -> MorphismComposition {
    let mut steps = outer.steps.clone();
    steps.extend(inner.steps.iter().cloned());
    MorphismComposition::new(steps)
}

/// Which alignment adjustment the decoder used.
///
/// The decoded word `w` relates to the quotient `y` by exactly one of:
/// `w = f(y)` (no adjustment), `a·w = f(y)` (a virtual leading letter
/// completed the first block; left spin only), or `w·a = f(y)` (a virtual
/// trailing letter completed the last block; right spin only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeCase {
    Exact,
    CompletedFront,
    CompletedBack,
}

/// Result of a single desubstitution step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    /// The preimage word.
    pub quotient: Word,
    /// Alignment adjustment relating the input to the image of the quotient.
    pub case: DecodeCase,
    /// Set when a lone occurrence of the decoded letter at the unaligned end
    /// was read as that letter although it could open a truncated block
    /// (trailing for left spin, leading for right spin).
    pub ambiguous_tail: bool,
}

/// Inverts one elementary morphism step on `w`.
///
/// For left spin the word must have every letter other than `a` preceded by
/// `a` (after the virtual leading `a`, if any); two adjacent letters both
/// different from `a` make the word not decodable. Right spin is symmetric.
pub fn decode_elementary(w: &Word, a: Letter, spin: Spin) -> Result<DecodeResult, MorphismError> {
    if w.is_empty() {
        return Err(MorphismError::EmptyInput);
    }
    if !w.alphabet().contains(a) {
        return Err(MorphismError::Word(WordError::LetterOutsideAlphabet(a)));
    }
    let letters = w.letters();
    let n = letters.len();
    match spin {
        Spin::Left => {
            let mut out = Vec::with_capacity(n);
            let mut case = DecodeCase::Exact;
            let mut ambiguous_tail = false;
            let mut i = 0;
            if letters[0] != a {
                case = DecodeCase::CompletedFront;
                out.push(letters[0]);
                i = 1;
            }
            while i < n {
                if letters[i] != a {
                    return Err(MorphismError::NotDecodable {
                        position: i,
                        letter: a,
                    });
                }
                if i + 1 < n && letters[i + 1] != a {
                    out.push(letters[i + 1]);
                    i += 2;
                } else {
                    if i + 1 == n {
                        ambiguous_tail = true;
                    }
                    out.push(a);
                    i += 1;
                }
            }
            Ok(DecodeResult {
                quotient: w.from_slice(&out),
                case,
                ambiguous_tail,
            })
        }
        Spin::Right => {
            let mut rev = Vec::with_capacity(n);
            let mut case = DecodeCase::Exact;
            let mut ambiguous_tail = false;
            let mut i = n as isize - 1;
            if letters[n - 1] != a {
                case = DecodeCase::CompletedBack;
                rev.push(letters[n - 1]);
                i -= 1;
            }
            while i >= 0 {
                let idx = i as usize;
                if letters[idx] != a {
                    return Err(MorphismError::NotDecodable {
                        position: idx,
                        letter: a,
                    });
                }
                if idx >= 1 && letters[idx - 1] != a {
                    rev.push(letters[idx - 1]);
                    i -= 2;
                } else {
                    if idx == 0 {
                        ambiguous_tail = true;
                    }
                    rev.push(a);
                    i -= 1;
                }
            }
            rev.reverse();
            Ok(DecodeResult {
                quotient: w.from_slice(&rev),
                case,
                ambiguous_tail,
            })
        }
    }
}
