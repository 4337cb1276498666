//! Serde documents for every wire format.
//!
//! Trees travel as sorted word arrays, `[]` being the empty tree; the other
//! documents wrap them with the structure they need (alphabet, arity,
//! letter images). Serialization is deterministic: arrays keep canonical
//! word order and maps are sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::magma::{FiniteMagma, MagmaHom};
use crate::morphism::Endomorphism;
use crate::polynomial::Polynomial;
use crate::table::FunctionTable;
use crate::term::Tree;
use crate::words::WordSet;

/// `{"alphabet": "abc", "tree": ["00b", "1a"]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeDoc {
    pub alphabet: String,
    pub tree: Vec<String>,
}

impl TreeDoc {
    pub fn new(alphabet: &Alphabet, tree: &Tree) -> Self {
        TreeDoc {
            alphabet: alphabet.to_string(),
            tree: WordSet::from_tree(tree).words().to_vec(),
        }
    }

    pub fn parse(&self) -> Result<(Alphabet, Tree)> {
        let alphabet = Alphabet::from_str(&self.alphabet)?;
        let tree = WordSet::from_words(self.tree.iter().cloned())?.to_tree(&alphabet)?;
        Ok((alphabet, tree))
    }
}

/// `{"arity": 1, "body": ["0x1", "1c"]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub arity: usize,
    pub body: Vec<String>,
}

impl PolynomialDoc {
    pub fn new(poly: &Polynomial) -> Self {
        PolynomialDoc {
            arity: poly.arity(),
            body: poly.to_word_set().words().to_vec(),
        }
    }

    pub fn parse(&self, alphabet: &Alphabet) -> Result<Polynomial> {
        let words = WordSet::from_words(self.body.iter().cloned())?;
        Polynomial::from_word_set(self.arity, &words, alphabet)
    }
}

/// `{"images": {"a": ["0c","1d"], "b": ["b"], "c": ["c"]}}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EndomorphismDoc {
    pub images: BTreeMap<char, Vec<String>>,
}

impl EndomorphismDoc {
    pub fn new(endo: &Endomorphism) -> Self {
        let images = endo
            .alphabet()
            .letters()
            .iter()
            .map(|&l| {
                let words = WordSet::from_tree(endo.image(l)).words().to_vec();
                (l.as_char(), words)
            })
            .collect();
        EndomorphismDoc { images }
    }

    /// The image map must cover the alphabet exactly.
    pub fn parse(&self, alphabet: &Alphabet) -> Result<Endomorphism> {
        if self.images.len() != alphabet.len() {
            return Err(Error::InvalidAlphabet(format!(
                "endomorphism defines {} letters, alphabet has {}",
                self.images.len(),
                alphabet.len()
            )));
        }
        let mut images = Vec::with_capacity(alphabet.len());
        for &l in alphabet.letters() {
            let words = self
                .images
                .get(&l.as_char())
                .ok_or(Error::InvalidLetter(l.as_char()))?;
            images.push(WordSet::from_words(words.iter().cloned())?.to_tree(alphabet)?);
        }
        Ok(Endomorphism::from_images(alphabet.clone(), images))
    }
}

/// `{"size": 2, "table": [0,1,1,0], "zero": 0, "letter_images": [0,1,1]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MagmaDoc {
    pub size: usize,
    pub table: Vec<usize>,
    pub zero: usize,
    pub letter_images: Vec<usize>,
}

impl MagmaDoc {
    pub fn new(alphabet: &Alphabet, hom: &MagmaHom) -> Self {
        debug_assert_eq!(alphabet.len(), hom.letter_images().len());
        MagmaDoc {
            size: hom.magma().size(),
            table: hom.magma().table().to_vec(),
            zero: hom.magma().zero_image(),
            letter_images: hom.letter_images().to_vec(),
        }
    }

    pub fn parse(&self, alphabet: &Alphabet) -> Result<MagmaHom> {
        let magma = FiniteMagma::new(self.size, self.table.clone(), self.zero)?;
        MagmaHom::new(alphabet, magma, self.letter_images.clone())
    }
}

/// One row of a function table: `{"args": ["a","b"], "value": ["0a","1c"]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableEntryDoc {
    pub args: Vec<String>,
    pub value: Vec<String>,
}

/// `{"alphabet": "abc", "arity": 2, "entries": [...]}`; totality is
/// validated when parsing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDoc {
    pub alphabet: String,
    pub arity: usize,
    pub entries: Vec<TableEntryDoc>,
}

impl TableDoc {
    pub fn new(table: &FunctionTable) -> Self {
        let entries = (0..table.len())
            .map(|i| TableEntryDoc {
                args: table
                    .point(i)
                    .iter()
                    .map(|l| l.as_char().to_string())
                    .collect(),
                value: WordSet::from_tree(table.value_at(i)).words().to_vec(),
            })
            .collect();
        TableDoc {
            alphabet: table.alphabet().to_string(),
            arity: table.arity(),
            entries,
        }
    }

    pub fn parse(&self) -> Result<FunctionTable> {
        let alphabet = Alphabet::from_str(&self.alphabet)?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for entry in &self.entries {
            let tuple = entry
                .args
                .iter()
                .map(|s| alphabet.parse_letter(s))
                .collect::<Result<Vec<Letter>>>()
                .map_err(|e| Error::InvalidTable(format!("bad argument tuple: {e}")))?;
            let value = WordSet::from_words(entry.value.iter().cloned())?.to_tree(&alphabet)?;
            entries.push((tuple, value));
        }
        FunctionTable::from_entries(alphabet, self.arity, entries)
    }
}

/// The machine-readable error object: a stable code, a witness for failed
/// congruence checks, and a message wherever the variant carries detail.
pub fn error_json(error: &Error) -> Value {
    match error {
        Error::NotWcp { witness } => json!({
            "error": error.code(),
            "witness": witness,
        }),
        Error::DecompositionUndefined | Error::SkeletonMismatch => json!({
            "error": error.code(),
        }),
        other => json!({
            "error": other.code(),
            "message": other.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::GcpWitness;
    use crate::words::tree_from_words;

    fn sigma() -> Alphabet {
        Alphabet::from_str("abc").unwrap()
    }

    #[test]
    fn tree_doc_round_trip() {
        let doc: TreeDoc =
            serde_json::from_str(r#"{"alphabet": "abc", "tree": ["00b","1a"]}"#).unwrap();
        let (alphabet, tree) = doc.parse().unwrap();
        assert_eq!(tree.size(), 4);
        let out = serde_json::to_string(&TreeDoc::new(&alphabet, &tree)).unwrap();
        assert_eq!(out, r#"{"alphabet":"abc","tree":["00b","1a"]}"#);
    }

    #[test]
    fn zero_is_the_empty_array() {
        let doc = TreeDoc::new(&sigma(), &Tree::Zero);
        assert_eq!(serde_json::to_string(&doc).unwrap(), r#"{"alphabet":"abc","tree":[]}"#);
    }

    #[test]
    fn polynomial_doc_round_trip() {
        let doc: PolynomialDoc =
            serde_json::from_str(r#"{"arity":1,"body":["0x1","1c"]}"#).unwrap();
        let poly = doc.parse(&sigma()).unwrap();
        assert_eq!(
            serde_json::to_string(&PolynomialDoc::new(&poly)).unwrap(),
            r#"{"arity":1,"body":["0x1","1c"]}"#
        );
    }

    #[test]
    fn endomorphism_doc_matches_the_declared_shape() {
        let raw = r#"{"images": {"a": ["0c","1d"], "b": ["b"], "c": ["c"], "d": ["d"]}}"#;
        let doc: EndomorphismDoc = serde_json::from_str(raw).unwrap();
        let sigma = Alphabet::from_str("abcd").unwrap();
        let endo = doc.parse(&sigma).unwrap();
        assert_eq!(
            endo.apply(&tree_from_words(["00b", "1a"], &sigma).unwrap()),
            tree_from_words(["00b", "10c", "11d"], &sigma).unwrap()
        );
        // Missing letters are rejected.
        let partial: EndomorphismDoc =
            serde_json::from_str(r#"{"images": {"a": ["a"]}}"#).unwrap();
        assert!(partial.parse(&sigma).is_err());
    }

    #[test]
    fn magma_doc_round_trip() {
        let doc: MagmaDoc = serde_json::from_str(
            r#"{"size":2,"table":[0,1,1,0],"zero":0,"letter_images":[0,1,1]}"#,
        )
        .unwrap();
        let hom = doc.parse(&sigma()).unwrap();
        assert_eq!(hom.magma().op(1, 1), 0);
        let out = serde_json::to_string(&MagmaDoc::new(&sigma(), &hom)).unwrap();
        assert_eq!(
            out,
            r#"{"size":2,"table":[0,1,1,0],"zero":0,"letter_images":[0,1,1]}"#
        );
    }

    #[test]
    fn table_doc_validates_totality() {
        let raw = r#"{"alphabet":"abc","arity":1,"entries":[
            {"args":["a"],"value":["0a","1c"]},
            {"args":["b"],"value":["0b","1c"]}
        ]}"#;
        let doc: TableDoc = serde_json::from_str(raw).unwrap();
        assert!(matches!(doc.parse(), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn table_doc_round_trip() {
        let poly = {
            let words = WordSet::from_words(vec!["0x1".into(), "1c".into()]).unwrap();
            Polynomial::from_word_set(1, &words, &sigma()).unwrap()
        };
        let table = FunctionTable::tabulate(&poly, &sigma()).unwrap();
        let doc = TableDoc::new(&table);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: TableDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.parse().unwrap(), table);
    }

    #[test]
    fn error_objects_carry_stable_codes() {
        assert_eq!(
            error_json(&Error::DecompositionUndefined).to_string(),
            r#"{"error":"DECOMPOSITION_UNDEFINED"}"#
        );
        let not_wcp = Error::NotWcp {
            witness: GcpWitness {
                args: vec![Letter::new('c').unwrap()],
                position: 1,
                letter: Letter::new('b').unwrap(),
            },
        };
        assert_eq!(
            error_json(&not_wcp).to_string(),
            r#"{"error":"NOT_WCP","witness":{"args":["c"],"position":1,"letter":"b"}}"#
        );
    }
}
