//! The word-set representation of trees.
//!
//! A tree is interchangeably a finite prefix-free set of words: each leaf
//! contributes one word, its root-to-leaf address over `{0,1}` followed by
//! its label. The empty set is the empty tree. This form is the wire format
//! for all JSON interfaces; the recursive [`Term`] is the in-memory form.
//!
//! Words are kept sorted with `'0' < '1' <` labels so serialized output is
//! deterministic.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::term::{Term, Tree};

/// Leaf payloads that know how to appear at the end of a word.
pub trait LeafToken: Sized {
    fn render(&self) -> String;
    /// Parses the non-address tail of a word. `token` is nonempty.
    fn parse(token: &str, alphabet: &Alphabet) -> Result<Self>;
}

impl LeafToken for Letter {
    fn render(&self) -> String {
        self.as_char().to_string()
    }

    fn parse(token: &str, alphabet: &Alphabet) -> Result<Self> {
        alphabet.parse_letter(token)
    }
}

/// Rank used for word ordering: addresses sort before any label.
fn char_rank(c: char) -> u32 {
    match c {
        '0' => 0,
        '1' => 1,
        other => 2 + other as u32,
    }
}

/// Total order on words: lexicographic with `'0' < '1' <` every label
/// character, label characters by code point.
pub fn word_cmp(a: &str, b: &str) -> Ordering {
    a.chars().map(char_rank).cmp(b.chars().map(char_rank))
}

fn split_word(word: &str) -> (&str, &str) {
    let addr_len = word.chars().take_while(|&c| c == '0' || c == '1').count();
    word.split_at(addr_len)
}

fn invalid(word: &str, reason: &str) -> Error {
    Error::InvalidWordSet {
        word: word.to_string(),
        reason: reason.to_string(),
    }
}

/// A prefix-free set of words, the serialized form of a tree.
///
/// Construction validates the shape of every word (binary address followed
/// by a nonempty label token) and prefix-freeness of the addresses; label
/// tokens are interpreted only when converting to a term, against a concrete
/// alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct WordSet {
    words: Vec<String>,
}

impl WordSet {
    pub fn from_words(words: impl IntoIterator<Item = String>) -> Result<Self> {
        let mut words: Vec<String> = words.into_iter().collect();
        for word in &words {
            let (_, token) = split_word(word);
            if token.is_empty() {
                return Err(invalid(word, "missing leaf label"));
            }
        }
        words.sort_by(|a, b| word_cmp(a, b));
        for pair in words.windows(2) {
            if pair[0] == pair[1] {
                return Err(invalid(&pair[0], "duplicate word"));
            }
        }
        // Addresses of a valid set are prefix-free. After sorting, any
        // prefix pair is adjacent, so one linear scan suffices.
        let mut addresses: Vec<(&str, &str)> =
            words.iter().map(|w| (split_word(w).0, w.as_str())).collect();
        addresses.sort();
        for pair in addresses.windows(2) {
            if pair[1].0.starts_with(pair[0].0) {
                return Err(invalid(pair[1].1, "address is not prefix-free"));
            }
        }
        Ok(WordSet { words })
    }

    /// The empty set, i.e. the tree `0`.
    pub fn empty() -> Self {
        WordSet { words: Vec::new() }
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn to_tree(&self, alphabet: &Alphabet) -> Result<Tree> {
        self.to_term(alphabet)
    }

    /// Interprets the words over `alphabet`, with leaf labels decoded by `L`.
    pub fn to_term<L: LeafToken + Clone>(&self, alphabet: &Alphabet) -> Result<Term<L>> {
        let mut entries = Vec::with_capacity(self.words.len());
        for word in &self.words {
            let (addr, token) = split_word(word);
            let label = L::parse(token, alphabet)
                .map_err(|e| invalid(word, &format!("bad leaf label: {e}")))?;
            entries.push((word.as_str(), addr, label));
        }
        build_term(&entries, 0)
    }

    pub fn from_tree(tree: &Tree) -> Self {
        Self::from_term(tree)
    }

    pub fn from_term<L: LeafToken>(term: &Term<L>) -> Self {
        let mut words = Vec::new();
        let mut address = String::new();
        render_words(term, &mut address, &mut words);
        words.sort_by(|a, b| word_cmp(a, b));
        WordSet { words }
    }
}

fn build_term<L: Clone>(entries: &[(&str, &str, L)], depth: usize) -> Result<Term<L>> {
    if entries.is_empty() {
        return Ok(Term::Zero);
    }
    if let Some(done) = entries.iter().find(|(_, addr, _)| addr.len() == depth) {
        if entries.len() > 1 {
            return Err(invalid(done.0, "address is a prefix of another word"));
        }
        return Ok(Term::Leaf(done.2.clone()));
    }
    let (left, right): (Vec<_>, Vec<_>) = entries
        .iter()
        .cloned()
        .partition(|(_, addr, _)| addr.as_bytes()[depth] == b'0');
    Ok(Term::star(
        build_term(&left, depth + 1)?,
        build_term(&right, depth + 1)?,
    ))
}

fn render_words<L: LeafToken>(term: &Term<L>, address: &mut String, out: &mut Vec<String>) {
    match term {
        Term::Zero => {}
        Term::Leaf(l) => out.push(format!("{address}{}", l.render())),
        Term::Node(left, right) => {
            address.push('0');
            render_words(left, address, out);
            address.pop();
            address.push('1');
            render_words(right, address, out);
            address.pop();
        }
    }
}

impl TryFrom<Vec<String>> for WordSet {
    type Error = Error;

    fn try_from(words: Vec<String>) -> Result<Self> {
        WordSet::from_words(words)
    }
}

impl From<WordSet> for Vec<String> {
    fn from(set: WordSet) -> Vec<String> {
        set.words
    }
}

/// Convenience for tests and the CLI: parse a word array into a tree.
pub fn tree_from_words<S: Into<String>>(
    words: impl IntoIterator<Item = S>,
    alphabet: &Alphabet,
) -> Result<Tree> {
    WordSet::from_words(words.into_iter().map(Into::into))?.to_tree(alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Alphabet {
        Alphabet::from_str("abcd").unwrap()
    }

    fn ws(words: &[&str]) -> Result<WordSet> {
        WordSet::from_words(words.iter().map(|w| w.to_string()))
    }

    #[test]
    fn empty_set_is_zero() {
        let t = WordSet::empty().to_tree(&sigma()).unwrap();
        assert_eq!(t, Tree::Zero);
        assert!(WordSet::from_tree(&Tree::Zero).is_empty());
    }

    #[test]
    fn single_letter_round_trip() {
        let a = Letter::new('a').unwrap();
        let set = WordSet::from_tree(&Tree::leaf(a));
        assert_eq!(set.words(), ["a"]);
        assert_eq!(set.to_tree(&sigma()).unwrap(), Tree::leaf(a));
    }

    #[test]
    fn builds_the_figure_tree() {
        let t = ws(&["00b", "1a"]).unwrap().to_tree(&sigma()).unwrap();
        let b = Letter::new('b').unwrap();
        let a = Letter::new('a').unwrap();
        let expected = Tree::star(Tree::star(Tree::leaf(b), Tree::Zero), Tree::leaf(a));
        assert_eq!(t, expected);
        assert_eq!(WordSet::from_tree(&t).words(), ["00b", "1a"]);
    }

    #[test]
    fn rejects_prefix_violations() {
        // The address 0 is a prefix of the address 01.
        assert!(matches!(
            ws(&["0a", "01b"]),
            Err(Error::InvalidWordSet { .. })
        ));
        // Equal addresses with different labels.
        assert!(matches!(
            ws(&["0a", "0b"]),
            Err(Error::InvalidWordSet { .. })
        ));
        // A bare-letter word next to anything else.
        assert!(matches!(
            ws(&["a", "1b"]),
            Err(Error::InvalidWordSet { .. })
        ));
    }

    #[test]
    fn rejects_malformed_words() {
        assert!(ws(&["00"]).is_err());
        assert!(ws(&["0a", "0a"]).is_err());
        // Characters after the letter are caught when labels are decoded.
        let set = ws(&["0a1b"]).unwrap();
        assert!(matches!(
            set.to_tree(&sigma()),
            Err(Error::InvalidWordSet { .. })
        ));
    }

    #[test]
    fn rejects_labels_outside_the_alphabet() {
        let set = ws(&["0z", "1a"]).unwrap();
        assert!(set.to_tree(&sigma()).is_err());
    }

    #[test]
    fn words_are_sorted_with_addresses_first() {
        let set = ws(&["1a", "00b", "01c"]).unwrap();
        assert_eq!(set.words(), ["00b", "01c", "1a"]);
    }
}
