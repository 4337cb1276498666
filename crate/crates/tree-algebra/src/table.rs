//! Function tables: total maps from letter tuples to trees.
//!
//! An `n`-ary function on trees is pinned down, as far as the congruence
//! machinery is concerned, by its restriction to the letter tuples `Σⁿ`.
//! A [`FunctionTable`] stores exactly that fingerprint: one tree per point
//! of `Σⁿ`, indexed in lexicographic tuple order (leftmost position most
//! significant, letters in alphabet order).

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::term::Tree;

/// A total map `Σⁿ → T(Σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    alphabet: Alphabet,
    arity: usize,
    /// `values[i]` is the value at the `i`-th tuple in lexicographic order.
    values: Vec<Tree>,
}

/// Decodes `index` into the `arity`-digit tuple it names, base `|Σ|`.
pub(crate) fn tuple_of_index(index: usize, base: usize, arity: usize) -> Vec<usize> {
    let mut digits = vec![0; arity];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = rest % base;
        rest /= base;
    }
    digits
}

pub(crate) fn index_of_tuple(tuple: &[usize], base: usize) -> usize {
    tuple.iter().fold(0, |acc, &d| acc * base + d)
}

impl FunctionTable {
    /// Number of points in `Σⁿ`, if it fits in memory.
    pub fn point_count(alphabet: &Alphabet, arity: usize) -> Result<usize> {
        alphabet
            .len()
            .checked_pow(u32::try_from(arity).unwrap_or(u32::MAX))
            .ok_or_else(|| Error::InvalidTable(format!("|Σ|^{arity} overflows")))
    }

    pub fn new(alphabet: Alphabet, arity: usize, values: Vec<Tree>) -> Result<Self> {
        let expected = Self::point_count(&alphabet, arity)?;
        if values.len() != expected {
            return Err(Error::InvalidTable(format!(
                "{} values for {} points",
                values.len(),
                expected
            )));
        }
        for value in &values {
            if !value.is_over(&alphabet) {
                return Err(Error::InvalidTable(
                    "table value uses a letter outside the alphabet".into(),
                ));
            }
        }
        Ok(FunctionTable {
            alphabet,
            arity,
            values,
        })
    }

    /// Builds a table from unordered `(tuple, value)` entries, checking
    /// totality: every point of `Σⁿ` exactly once.
    pub fn from_entries(
        alphabet: Alphabet,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<Letter>, Tree)>,
    ) -> Result<Self> {
        let expected = Self::point_count(&alphabet, arity)?;
        let mut values: Vec<Option<Tree>> = vec![None; expected];
        let mut seen = 0usize;
        for (tuple, value) in entries {
            if tuple.len() != arity {
                return Err(Error::InvalidTable(format!(
                    "entry tuple has {} letters, expected {}",
                    tuple.len(),
                    arity
                )));
            }
            let digits = tuple
                .iter()
                .map(|&l| {
                    self_index(&alphabet, l).ok_or_else(|| {
                        Error::InvalidTable(format!("letter `{l}` outside the alphabet"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let index = index_of_tuple(&digits, alphabet.len());
            if values[index].replace(value).is_some() {
                return Err(Error::InvalidTable(format!(
                    "duplicate entry for {:?}",
                    tuple.iter().map(|l| l.as_char()).collect::<String>()
                )));
            }
            seen += 1;
        }
        if seen != expected {
            return Err(Error::InvalidTable(format!(
                "table has {seen} entries but Σ^{arity} has {expected} points"
            )));
        }
        let values = values.into_iter().map(Option::unwrap).collect();
        FunctionTable::new(alphabet, arity, values)
    }

    /// Tabulates a polynomial function on all of `Σⁿ`.
    pub fn tabulate(poly: &Polynomial, alphabet: &Alphabet) -> Result<Self> {
        let arity = poly.arity();
        let count = Self::point_count(alphabet, arity)?;
        let mut values = Vec::with_capacity(count);
        for index in 0..count {
            let letters = Self::letters_for(alphabet, arity, index);
            values.push(poly.eval_letters(&letters)?);
        }
        FunctionTable::new(alphabet.clone(), arity, values)
    }

    fn letters_for(alphabet: &Alphabet, arity: usize, index: usize) -> Vec<Letter> {
        tuple_of_index(index, alphabet.len(), arity)
            .into_iter()
            .map(|d| alphabet.letter(d))
            .collect()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Tree] {
        &self.values
    }

    /// The letter tuple at a point index.
    pub fn point(&self, index: usize) -> Vec<Letter> {
        Self::letters_for(&self.alphabet, self.arity, index)
    }

    pub fn value_at(&self, index: usize) -> &Tree {
        &self.values[index]
    }

    pub fn get(&self, tuple: &[Letter]) -> Result<&Tree> {
        if tuple.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: tuple.len(),
            });
        }
        let digits = tuple
            .iter()
            .map(|&l| self_index(&self.alphabet, l).ok_or(Error::InvalidLetter(l.as_char())))
            .collect::<Result<Vec<_>>>()?;
        Ok(&self.values[index_of_tuple(&digits, self.alphabet.len())])
    }

    /// Restricts the table by fixing one position (1-based) to a letter,
    /// giving a table of arity `n - 1`.
    pub fn freeze_letter(&self, position: usize, letter: Letter) -> Result<FunctionTable> {
        if position < 1 || position > self.arity {
            return Err(Error::VariableOutOfRange {
                index: position,
                arity: self.arity,
            });
        }
        let digit = self_index(&self.alphabet, letter).ok_or(Error::InvalidLetter(letter.as_char()))?;
        let base = self.alphabet.len();
        let count = self.values.len() / base;
        let mut values = Vec::with_capacity(count);
        for index in 0..count {
            let mut tuple = tuple_of_index(index, base, self.arity - 1);
            tuple.insert(position - 1, digit);
            values.push(self.values[index_of_tuple(&tuple, base)].clone());
        }
        FunctionTable::new(self.alphabet.clone(), self.arity - 1, values)
    }
}

fn self_index(alphabet: &Alphabet, l: Letter) -> Option<usize> {
    alphabet.index_of(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::tree_from_words;

    fn sigma() -> Alphabet {
        Alphabet::from_str("abc").unwrap()
    }

    fn letter(c: char) -> Letter {
        Letter::new(c).unwrap()
    }

    #[test]
    fn tuple_indexing_round_trips() {
        for index in 0..27 {
            let tuple = tuple_of_index(index, 3, 3);
            assert_eq!(index_of_tuple(&tuple, 3), index);
        }
        assert_eq!(tuple_of_index(5, 3, 2), vec![1, 2]);
    }

    #[test]
    fn tabulate_projection() {
        let p = Polynomial::var(2, 2).unwrap();
        let table = FunctionTable::tabulate(&p, &sigma()).unwrap();
        assert_eq!(table.len(), 9);
        assert_eq!(
            table.get(&[letter('a'), letter('c')]).unwrap(),
            &Tree::leaf(letter('c'))
        );
    }

    #[test]
    fn totality_is_validated() {
        let entries = vec![
            (vec![letter('a')], Tree::leaf(letter('a'))),
            (vec![letter('b')], Tree::leaf(letter('b'))),
        ];
        // Missing the point c.
        assert!(matches!(
            FunctionTable::from_entries(sigma(), 1, entries),
            Err(Error::InvalidTable(_))
        ));

        let dup = vec![
            (vec![letter('a')], Tree::leaf(letter('a'))),
            (vec![letter('a')], Tree::leaf(letter('b'))),
            (vec![letter('b')], Tree::leaf(letter('b'))),
            (vec![letter('c')], Tree::leaf(letter('c'))),
        ];
        assert!(matches!(
            FunctionTable::from_entries(sigma(), 1, dup),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn values_must_stay_over_the_alphabet() {
        let stray = tree_from_words(["z"], &Alphabet::from_str("z").unwrap()).unwrap();
        assert!(FunctionTable::new(sigma(), 0, vec![stray]).is_err());
    }

    #[test]
    fn arity_zero_has_one_point() {
        let t = tree_from_words(["0a", "1b"], &sigma()).unwrap();
        let table = FunctionTable::new(sigma(), 0, vec![t.clone()]).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table.get(&[]).unwrap(), &t);
    }

    #[test]
    fn freeze_letter_restricts_the_table() {
        // g(x, y) = x ⋆ y frozen at position 2 := c equals x ⋆ c on letters.
        let p = Polynomial::new(
            2,
            crate::term::Term::star(
                crate::term::Term::Leaf(crate::polynomial::PolyLeaf::Var(1)),
                crate::term::Term::Leaf(crate::polynomial::PolyLeaf::Var(2)),
            ),
        )
        .unwrap();
        let table = FunctionTable::tabulate(&p, &sigma()).unwrap();
        let frozen = table.freeze_letter(2, letter('c')).unwrap();
        let expected =
            FunctionTable::tabulate(&p.freeze(&[(2, Tree::leaf(letter('c')))]).unwrap(), &sigma())
                .unwrap();
        assert_eq!(frozen, expected);
    }
}
