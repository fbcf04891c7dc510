//! Core word values and factor analytics.
//!
//! Words are finite sequences of lowercase ASCII letters read over a declared
//! alphabet. A [`FactorSet`] holds all factors of a word up to a length bound
//! together with a reliability bound: when the word stands in for a prefix of
//! an intended infinite word, only factor lists up to `reliable_len` are
//! certified complete (one third of the prefix length).

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {0:?} is not a lowercase ascii letter")]
    InvalidLetter(char),
    #[error("alphabet must be non-empty")]
    EmptyAlphabet,
    #[error("alphabet contains duplicate letter {0}")]
    DuplicateLetter(Letter),
    #[error("letter {0} does not belong to the alphabet")]
    LetterOutsideAlphabet(Letter),
    #[error("factor bound {max_len} exceeds word length {word_len}")]
    BoundExceedsWord { max_len: usize, word_len: usize },
}

/// A single lowercase ASCII letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(c: char) -> Result<Self, WordError> {
        if c.is_ascii_lowercase() {
            Ok(Letter(c as u8))
        } else {
            Err(WordError::InvalidLetter(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_char(self.as_char())
    }
}

/// An ordered, duplicate-free set of letters. The declared order is used only
/// for deterministic tie-breaking and output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        let mut seen = BTreeSet::new();
        for &l in &letters {
            if !seen.insert(l) {
                return Err(WordError::DuplicateLetter(l));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Parses an alphabet from a string of letters, e.g. `"abc"`.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let letters = text
            .chars()
            .map(Letter::new)
            .collect::<Result<Vec<_>, _>>()?;
        Alphabet::new(letters)
    }

    /// The sorted set of distinct letters occurring in `text`.
    pub fn inferred_from(text: &str) -> Result<Self, WordError> {
        let mut letters: Vec<Letter> = text
            .chars()
            .map(Letter::new)
            .collect::<Result<BTreeSet<_>, _>>()?
            .into_iter()
            .collect();
        if letters.is_empty() {
            // An empty word still needs an alphabet to be read over.
            letters.push(Letter::new('a').unwrap());
        }
        Alphabet::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.contains(&letter)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().copied()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A finite word over a declared alphabet. The empty word is permitted.
///
/// Words are immutable after construction. Ordering is shortlex: first by
/// length, then lexicographically by letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self, WordError> {
        for &l in &letters {
            if !alphabet.contains(l) {
                return Err(WordError::LetterOutsideAlphabet(l));
            }
        }
        Ok(Word { letters, alphabet })
    }

    /// Parses a word from plain text over the given alphabet.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, WordError> {
        let letters = text
            .chars()
            .map(Letter::new)
            .collect::<Result<Vec<_>, _>>()?;
        Word::new(letters, alphabet.clone())
    }

    /// Parses a word, inferring the alphabet from its distinct letters.
    pub fn parse_inferred(text: &str) -> Result<Self, WordError> {
        let alphabet = Alphabet::inferred_from(text)?;
        Word::parse(text, &alphabet)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// The set of distinct letters occurring in the word.
    pub fn distinct_letters(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    /// The prefix of length `n` (the whole word if `n >= len`).
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            letters: self.letters[..n.min(self.letters.len())].to_vec(),
            alphabet: self.alphabet.clone(),
        }
    }

    /// A word over the same alphabet from a slice of its letters.
    pub fn from_slice(&self, slice: &[Letter]) -> Word {
        Word {
            letters: slice.to_vec(),
            alphabet: self.alphabet.clone(),
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn as_string(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_string())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.as_string())
    }
}

// Shortlex: by length, then lexicographically. This is the deterministic
// order used for all reporting.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.alphabet.cmp(&other.alphabet))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares raw letter slices in shortlex order.
pub(crate) fn shortlex(a: &[Letter], b: &[Letter]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// All factors of a word up to a length bound, stored per length.
///
/// `reliable_len` is the largest length `L` such that the stored factor list
/// of length `L` is certified complete for the intended infinite word. For a
/// word analyzed as itself (exact semantics) it equals `max_len`; for a word
/// standing in for a prefix of an infinite word it is capped at one third of
/// the prefix length, since windows near the end of a finite prefix may miss
/// factors of the infinite word.
#[derive(Debug, Clone)]
pub struct FactorSet {
    source: Word,
    max_len: usize,
    reliable_len: usize,
    by_len: Vec<HashSet<Box<[Letter]>>>,
}

impl FactorSet {
    fn build(source: &Word, max_len: usize, reliable_len: usize) -> Result<Self, WordError> {
        if max_len > source.len() {
            return Err(WordError::BoundExceedsWord {
                max_len,
                word_len: source.len(),
            });
        }
        let letters = source.letters();
        let mut by_len: Vec<HashSet<Box<[Letter]>>> = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            let mut set = HashSet::new();
            for i in 0..=letters.len() - len {
                set.insert(letters[i..i + len].into());
            }
            by_len.push(set);
        }
        Ok(FactorSet {
            source: source.clone(),
            max_len,
            reliable_len,
            by_len,
        })
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn reliable_len(&self) -> usize {
        self.reliable_len
    }

    pub fn contains(&self, factor: &[Letter]) -> bool {
        self.by_len
            .get(factor.len())
            .map(|set| set.contains(factor))
            .unwrap_or(false)
    }

    pub fn contains_word(&self, factor: &Word) -> bool {
        self.contains(factor.letters())
    }

    /// Distinct factors of the given length, in lexicographic order.
    pub fn of_len(&self, len: usize) -> Vec<&[Letter]> {
        let mut v: Vec<&[Letter]> = self
            .by_len
            .get(len)
            .map(|set| set.iter().map(|b| &**b).collect())
            .unwrap_or_default();
        v.sort_unstable();
        v
    }

    pub fn count_of_len(&self, len: usize) -> usize {
        self.by_len.get(len).map(|s| s.len()).unwrap_or(0)
    }
}

/// Exact factor extraction: all distinct factors of `w` of length `<= max_len`.
///
/// `reliable_len` equals `max_len`; the factor set of a finite word is exact.
pub fn factors(w: &Word, max_len: usize) -> Result<FactorSet, WordError> {
    FactorSet::build(w, max_len, max_len)
}

/// Factor extraction for a word standing in for a prefix of an intended
/// infinite word: `reliable_len` is capped at `|w| / 3`.
pub fn prefix_factors(w: &Word, max_len: usize) -> Result<FactorSet, WordError> {
    FactorSet::build(w, max_len, max_len.min(w.len() / 3))
}

/// Left special, right special and bispecial factors of a factor set.
#[derive(Debug, Clone, Default)]
pub struct SpecialFactors {
    pub left: BTreeSet<Word>,
    pub right: BTreeSet<Word>,
    pub bispecial: BTreeSet<Word>,
}

/// Computes the special factors of `fs`.
///
/// A factor `u` is left special when `au` and `bu` are factors for two
/// distinct letters. Only factors of length `<= reliable_len - 1` are
/// reported, since extensions of longer factors are not certified complete.
pub fn special_factors(fs: &FactorSet) -> SpecialFactors {
    let mut out = SpecialFactors::default();
    if fs.reliable_len() == 0 {
        return out;
    }
    let alphabet = fs.source().alphabet().clone();
    let cap = fs.reliable_len() - 1;
    for len in 0..=cap.min(fs.max_len()) {
        for u in fs.of_len(len) {
            let mut left_ext = 0;
            let mut right_ext = 0;
            let mut buf = Vec::with_capacity(len + 1);
            for c in alphabet.iter() {
                buf.clear();
                buf.push(c);
                buf.extend_from_slice(u);
                if fs.contains(&buf) {
                    left_ext += 1;
                }
                buf.clear();
                buf.extend_from_slice(u);
                buf.push(c);
                if fs.contains(&buf) {
                    right_ext += 1;
                }
            }
            if left_ext >= 2 || right_ext >= 2 {
                let word = fs.source().from_slice(u);
                if left_ext >= 2 {
                    out.left.insert(word.clone());
                }
                if right_ext >= 2 {
                    out.right.insert(word.clone());
                }
                if left_ext >= 2 && right_ext >= 2 {
                    out.bispecial.insert(word);
                }
            }
        }
    }
    out
}

pub(crate) fn mirror_slice(s: &[Letter]) -> Vec<Letter> {
    s.iter().rev().copied().collect()
}

pub(crate) fn is_palindrome_slice(s: &[Letter]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// The mirror image (reversal) of a word.
pub fn mirror(w: &Word) -> Word {
    w.from_slice(&mirror_slice(w.letters()))
}

/// A word is a palindrome when it equals its mirror image. The empty word is
/// a palindrome.
pub fn is_palindrome(w: &Word) -> bool {
    is_palindrome_slice(w.letters())
}

/// The maximal-length palindromic suffix of `w` (possibly empty).
pub fn longest_palindromic_suffix(w: &Word) -> Word {
    let letters = w.letters();
    for start in 0..=letters.len() {
        if is_palindrome_slice(&letters[start..]) {
            return w.from_slice(&letters[start..]);
        }
    }
    unreachable!("the empty suffix is a palindrome")
}

/// True when the factor set is closed under mirror image, for all factors of
/// length `<= reliable_len`.
pub fn is_mirror_closed(fs: &FactorSet) -> bool {
    for len in 0..=fs.reliable_len().min(fs.max_len()) {
        for u in fs.of_len(len) {
            if !fs.contains(&mirror_slice(u)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn word(text: &str) -> Word {
        Word::parse_inferred(text).unwrap()
    }

    fn letter(c: char) -> Letter {
        Letter::new(c).unwrap()
    }

    /// Independent oracle: distinct factors by naive window scan.
    fn naive_factors(text: &str, max_len: usize) -> BTreeSet<String> {
        let chars: Vec<char> = text.chars().collect();
        let mut out = BTreeSet::new();
        for len in 0..=max_len {
            for i in 0..=chars.len().saturating_sub(len) {
                out.insert(chars[i..i + len].iter().collect());
            }
        }
        out
    }

    fn factor_strings(fs: &FactorSet) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for len in 0..=fs.max_len() {
            for u in fs.of_len(len) {
                out.insert(u.iter().map(|l| l.as_char()).collect());
            }
        }
        out
    }

    #[test]
    fn letter_rejects_non_lowercase() {
        assert!(Letter::new('A').is_err());
        assert!(Letter::new('1').is_err());
        assert!(Letter::new('a').is_ok());
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert_eq!(Alphabet::parse(""), Err(WordError::EmptyAlphabet));
        assert_eq!(
            Alphabet::parse("aba"),
            Err(WordError::DuplicateLetter(letter('a')))
        );
        assert_eq!(Alphabet::parse("abc").unwrap().len(), 3);
    }

    #[test]
    fn word_rejects_letters_outside_alphabet() {
        let ab = Alphabet::parse("ab").unwrap();
        assert!(Word::parse("abc", &ab).is_err());
        assert!(Word::parse("abab", &ab).is_ok());
    }

    #[test]
    fn factors_of_aba_up_to_two() {
        let fs = factors(&word("aba"), 2).unwrap();
        let expected: BTreeSet<String> = ["", "a", "b", "ab", "ba"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(factor_strings(&fs), expected);
    }

    #[test]
    fn fibonacci_prefix_factor_slices() {
        let w = word("abaababaabaab");
        let fs = factors(&w, 3).unwrap();
        let len2: Vec<String> = fs
            .of_len(2)
            .iter()
            .map(|u| u.iter().map(|l| l.as_char()).collect())
            .collect();
        assert_eq!(len2, vec!["aa", "ab", "ba"]);
        // Length-3 slice against the independent window oracle.
        let oracle = naive_factors("abaababaabaab", 3);
        assert_eq!(factor_strings(&fs), oracle);
        assert!(fs.contains_word(&word("aab")));
        assert!(fs.contains_word(&word("baa")));
        assert!(fs.contains_word(&word("aba")));
        assert!(fs.contains_word(&word("bab")));
        assert!(!fs.contains(word("bbb").letters()));
    }

    #[test]
    fn factors_bound_error() {
        let w = word("aba");
        assert!(matches!(
            factors(&w, 4),
            Err(WordError::BoundExceedsWord { .. })
        ));
    }

    #[test]
    fn prefix_factors_reliability() {
        let w = word("abaababaabaab");
        let fs = prefix_factors(&w, 6).unwrap();
        assert_eq!(fs.reliable_len(), 4); // 13 / 3
        assert_eq!(fs.max_len(), 6);
        let fs = prefix_factors(&w, 2).unwrap();
        assert_eq!(fs.reliable_len(), 2);
    }

    #[test]
    fn special_factors_of_fibonacci_prefix() {
        let w = word("abaababaabaab");
        let fs = factors(&w, 4).unwrap();
        let specials = special_factors(&fs);
        // Bispecials of the Fibonacci word start with the palindromic
        // prefixes: the empty word, "a", "aba", ...
        assert!(specials.bispecial.contains(&word("")));
        assert!(specials.bispecial.contains(&word("a")));
        // "aba" is bispecial: aaba? no, but baba/abaa/abab memberships decide.
        let full = factors(&w, w.len()).unwrap();
        let specials_full = special_factors(&full);
        assert!(specials_full.bispecial.contains(&word("aba")));
    }

    #[test]
    fn special_factors_membership_oracle() {
        // Occurrence-based oracle: collect extension letters by scanning.
        let text = "abaababaabaab";
        let w = word(text);
        let fs = factors(&w, w.len()).unwrap();
        let specials = special_factors(&fs);
        let chars: Vec<char> = text.chars().collect();
        for len in 0..chars.len() - 1 {
            for i in 0..=chars.len() - len {
                let u: String = chars[i..i + len].iter().collect();
                let mut lefts = BTreeSet::new();
                let mut rights = BTreeSet::new();
                for j in 0..=chars.len() - len {
                    if chars[j..j + len].iter().collect::<String>() == u {
                        if j > 0 {
                            lefts.insert(chars[j - 1]);
                        }
                        if j + len < chars.len() {
                            rights.insert(chars[j + len]);
                        }
                    }
                }
                let wu = word(&u);
                let wu = Word::new(wu.letters().to_vec(), w.alphabet().clone()).unwrap();
                assert_eq!(specials.left.contains(&wu), lefts.len() >= 2, "u={u:?}");
                assert_eq!(specials.right.contains(&wu), rights.len() >= 2, "u={u:?}");
            }
        }
    }

    #[test]
    fn unary_word_has_no_specials() {
        let fs = factors(&word("aaaa"), 4).unwrap();
        let specials = special_factors(&fs);
        assert!(specials.left.is_empty());
        assert!(specials.right.is_empty());
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror(&word("abaa")).as_string(), "aaba");
        assert!(is_palindrome(&word("")));
        assert!(is_palindrome(&word("aba")));
        assert!(!is_palindrome(&word("ab")));
    }

    #[test]
    fn longest_palindromic_suffix_examples() {
        // Oracle: scan all suffixes for the longest palindromic one.
        assert_eq!(longest_palindromic_suffix(&word("abaabab")).as_string(), "bab");
        assert_eq!(longest_palindromic_suffix(&word("ab")).as_string(), "b");
        assert_eq!(longest_palindromic_suffix(&word("")).as_string(), "");
        assert_eq!(longest_palindromic_suffix(&word("abaa")).as_string(), "aa");
    }

    #[test]
    fn mirror_closure_checks() {
        let fs = factors(&word("abaababaabaab"), 3).unwrap();
        assert!(is_mirror_closed(&fs));
        let fs = factors(&word("aab"), 2).unwrap();
        assert!(!is_mirror_closed(&fs)); // aa, ab present; ba absent
        let fs = factors(&word("aaaa"), 4).unwrap();
        assert!(is_mirror_closed(&fs));
    }

    #[test]
    fn counting_bound_holds() {
        let w = word("abaababaabaab");
        let fs = factors(&w, w.len()).unwrap();
        for n in 0..=w.len() {
            assert!(fs.count_of_len(n) <= w.len() - n + 1);
        }
    }

    #[test]
    fn shortlex_ordering() {
        let mut v = vec![word("ba"), word("b"), word("ab"), word("")];
        v.sort();
        let strs: Vec<String> = v.iter().map(|w| w.as_string()).collect();
        assert_eq!(strs, vec!["", "b", "ab", "ba"]);
    }

    proptest! {
        #[test]
        fn mirror_is_an_involution(s in "[abc]{0,24}") {
            let w = word(&s);
            prop_assert_eq!(mirror(&mirror(&w)), w);
        }

        #[test]
        fn factor_sets_are_closed_under_factors(s in "[ab]{1,16}", bound in 0usize..8) {
            let w = word(&s);
            let bound = bound.min(w.len());
            let fs = factors(&w, bound).unwrap();
            prop_assert!(fs.contains(&[]));
            for len in 1..=bound {
                for u in fs.of_len(len) {
                    prop_assert!(fs.contains(&u[..len - 1]));
                    prop_assert!(fs.contains(&u[1..]));
                }
            }
        }

        #[test]
        fn factors_match_naive_oracle(s in "[abc]{0,14}") {
            let w = word(&s);
            let fs = factors(&w, w.len()).unwrap();
            let got = factor_strings(&fs);
            let expected = naive_factors(&s, s.chars().count());
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn palindromic_suffix_is_maximal(s in "[ab]{0,12}") {
            let w = word(&s);
            let p = longest_palindromic_suffix(&w);
            prop_assert!(is_palindrome(&p));
            let n = w.len();
            for start in 0..n.saturating_sub(p.len()) {
                prop_assert!(!is_palindrome_slice(&w.letters()[start..]));
            }
        }
    }
}
