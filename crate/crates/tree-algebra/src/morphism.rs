//! Endomorphisms of the tree algebra.
//!
//! By the universal property of the algebra, a map from letters to trees
//! extends uniquely to a homomorphism: it sends `0` to `0` and commutes with
//! the product. [`Endomorphism`] stores the letter images and applies the
//! extension as a structural fold, collapsing `0 ⋆ 0` at every node so that
//! grafting a letter onto the empty tree erases the surrounding structure.
//!
//! Two special families matter for the congruence machinery: graftings
//! (one letter replaced by a fixed tree, everything else untouched) and
//! alphabetic maps (letters to letters), whose kernels drive the weakened
//! congruence-preservation checks.

use crate::alphabet::{Alphabet, Letter};
use crate::term::Tree;

/// A homomorphism of the tree algebra into itself, given by its letter
/// images. Application extends the map over arbitrary trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    alphabet: Alphabet,
    images: Vec<Tree>,
}

impl Endomorphism {
    /// Builds the extension of the letter map `images`, where `images[i]`
    /// is the image of the `i`-th alphabet letter.
    pub fn from_images(alphabet: Alphabet, images: Vec<Tree>) -> Self {
        assert_eq!(
            images.len(),
            alphabet.len(),
            "one image per alphabet letter"
        );
        Endomorphism { alphabet, images }
    }

    /// The identity endomorphism.
    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.letters().iter().map(|&l| Tree::leaf(l)).collect();
        Endomorphism { alphabet, images }
    }

    /// The relabeling `ν_a` sending every letter to `a`.
    pub fn relabel_all(alphabet: Alphabet, a: Letter) -> Self {
        let images = vec![Tree::leaf(a); alphabet.len()];
        Endomorphism { alphabet, images }
    }

    /// The grafting `G_a^τ`: `a` maps to `tau`, every other letter to itself.
    pub fn grafting(alphabet: Alphabet, a: Letter, tau: Tree) -> Self {
        let images = alphabet
            .letters()
            .iter()
            .map(|&l| if l == a { tau.clone() } else { Tree::leaf(l) })
            .collect();
        Endomorphism { alphabet, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The image of a single letter.
    pub fn image(&self, letter: Letter) -> &Tree {
        let i = self
            .alphabet
            .index_of(letter)
            .expect("letter belongs to the endomorphism's alphabet");
        &self.images[i]
    }

    pub fn images(&self) -> &[Tree] {
        &self.images
    }

    /// Applies the homomorphic extension to a tree.
    pub fn apply(&self, tree: &Tree) -> Tree {
        tree.map_leaves(&mut |l| self.image(*l).clone())
    }

    /// An endomorphism is idempotent iff `h(h(a)) = h(a)` for every letter,
    /// which settles idempotence on all trees.
    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|img| &self.apply(img) == img)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        let images = other.images.iter().map(|img| self.apply(img)).collect();
        Endomorphism {
            alphabet: self.alphabet.clone(),
            images,
        }
    }
}

/// A letter-to-letter map, the restriction of an alphabetic endomorphism.
///
/// Stored as indices into the alphabet; this is the quantification domain
/// of the weakened congruence-preservation condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaMap {
    images: Vec<usize>,
}

impl AlphaMap {
    pub fn from_indices(images: Vec<usize>) -> Self {
        AlphaMap { images }
    }

    pub fn identity(n: usize) -> Self {
        AlphaMap {
            images: (0..n).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.images
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn apply_letter(&self, alphabet: &Alphabet, l: Letter) -> Letter {
        let i = alphabet.index_of(l).expect("letter in alphabet");
        alphabet.letter(self.images[i])
    }

    /// Relabels every leaf of `tree` through the map. Since letters map to
    /// letters, no collapse can occur and the skeleton is preserved.
    pub fn apply_tree(&self, alphabet: &Alphabet, tree: &Tree) -> Tree {
        tree.map_leaves(&mut |l| Tree::leaf(self.apply_letter(alphabet, *l)))
    }

    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&i| self.images[i] == i)
    }

    pub fn to_endomorphism(&self, alphabet: &Alphabet) -> Endomorphism {
        let images = self
            .images
            .iter()
            .map(|&i| Tree::leaf(alphabet.letter(i)))
            .collect();
        Endomorphism::from_images(alphabet.clone(), images)
    }
}

/// The skeleton of a tree: its image under `ν_a` for the alphabet's first
/// letter. Two trees are similar iff their skeletons coincide.
pub fn skeleton(alphabet: &Alphabet, tree: &Tree) -> Tree {
    let a = alphabet.first();
    tree.map_leaves(&mut |_| Tree::leaf(a))
}

/// Similarity `t ∼_s t'`: equality after relabeling every leaf to a single
/// letter. Independent of the letter chosen, since `ν_b(t) = ν_b(ν_a(t))`.
pub fn similar(alphabet: &Alphabet, t1: &Tree, t2: &Tree) -> bool {
    skeleton(alphabet, t1) == skeleton(alphabet, t2)
}
