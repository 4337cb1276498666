//! Alphabets and their letters.
//!
//! Leaf labels are single characters drawn from an ordered, duplicate-free
//! alphabet. The characters `0` and `1` are reserved for tree addresses and
//! can never be letters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single leaf label. Guaranteed distinct from the address characters
/// `'0'` and `'1'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "char", into = "char")]
pub struct Letter(char);

impl Letter {
    pub fn new(c: char) -> Result<Self> {
        if c == '0' || c == '1' {
            return Err(Error::InvalidLetter(c));
        }
        Ok(Letter(c))
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl TryFrom<char> for Letter {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        Letter::new(c)
    }
}

impl From<Letter> for char {
    fn from(l: Letter) -> char {
        l.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered, duplicate-free set of letters.
///
/// The order is significant: enumeration, the similarity check and all
/// serialized output use it, so two alphabets with the same letters in a
/// different order are distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let letters: Vec<Letter> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be nonempty".into()));
        }
        for (i, l) in letters.iter().enumerate() {
            if letters[..i].contains(l) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter `{l}`")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Builds an alphabet from the characters of `s`, in order.
    pub fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(Letter::new)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| match e {
                Error::InvalidLetter(c) => {
                    Error::InvalidAlphabet(format!("`{c}` cannot be a letter"))
                }
                other => other,
            })?;
        Alphabet::new(letters)
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

    pub fn letter(&self, index: usize) -> Letter {
        self.letters[index]
    }

    /// The first letter; the canonical choice for the whole-tree relabeling
    /// used by the similarity check.
    pub fn first(&self) -> Letter {
        self.letters[0]
    }

    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        self.letters.iter().position(|&l| l == letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.index_of(letter).is_some()
    }

    /// Fails with `AlphabetTooSmall` unless the alphabet has at least
    /// `required` letters. The synthesis and classification results only
    /// hold for three letters or more.
    pub fn require_len(&self, required: usize) -> Result<()> {
        if self.len() < required {
            return Err(Error::AlphabetTooSmall {
                required,
                got: self.len(),
            });
        }
        Ok(())
    }

    /// Parses a single-character string as a letter of this alphabet.
    pub fn parse_letter(&self, s: &str) -> Result<Letter> {
        let mut chars = s.chars();
        let (c, rest) = (chars.next(), chars.next());
        match (c, rest) {
            (Some(c), None) => {
                let letter = Letter::new(c)?;
                if self.contains(letter) {
                    Ok(letter)
                } else {
                    Err(Error::InvalidLetter(c))
                }
            }
            _ => Err(Error::InvalidAlphabet(format!(
                "`{s}` is not a single letter"
            ))),
        }
    }
}

impl fmt::Display for Alphabet {
    /// Renders the alphabet as the bare string of its letters, e.g. `abc`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reserved_characters() {
        assert_eq!(Letter::new('0'), Err(Error::InvalidLetter('0')));
        assert_eq!(Letter::new('1'), Err(Error::InvalidLetter('1')));
        assert!(Letter::new('a').is_ok());
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::from_str("").is_err());
        assert!(Alphabet::from_str("aba").is_err());
        assert!(Alphabet::from_str("a1b").is_err());
        assert!(Alphabet::from_str("abc").is_ok());
    }

    #[test]
    fn order_is_preserved() {
        let sigma = Alphabet::from_str("cab").unwrap();
        assert_eq!(sigma.first().as_char(), 'c');
        assert_eq!(sigma.index_of(Letter::new('b').unwrap()), Some(2));
    }

    #[test]
    fn require_len_gates_small_alphabets() {
        let sigma = Alphabet::from_str("ab").unwrap();
        assert_eq!(
            sigma.require_len(3),
            Err(Error::AlphabetTooSmall {
                required: 3,
                got: 2
            })
        );
    }
}
