//! The term algebra of leaf-labeled binary trees.
//!
//! A term is either the empty tree `0`, a single labeled leaf, or the
//! product `t1 ⋆ t2` of two terms. The product is almost free pairing: the
//! single defining identity is `0 ⋆ 0 = 0`, which [`Term::star`] enforces
//! structurally, so the value `Node(Zero, Zero)` never exists. Every other
//! node decomposes into a unique ordered pair of children.
//!
//! The type is generic over the leaf payload: plain trees carry a
//! [`Letter`](crate::alphabet::Letter), polynomials carry a letter-or-variable
//! tag. All structural machinery (product, decomposition, size, folds) is
//! shared.
//!
//! Terms are immutable values. Children are reference-counted, so cloning is
//! cheap and subtrees may be shared freely across threads.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// A binary tree with leaves labeled by `L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term<L> {
    /// The empty tree `0`.
    Zero,
    /// A single leaf.
    Leaf(L),
    /// An inner node with two children, at least one of which is not `0`.
    Node(Arc<Term<L>>, Arc<Term<L>>),
}

/// A tree over a plain alphabet.
pub type Tree = Term<Letter>;

impl<L> Term<L> {
    /// The product `t1 ⋆ t2`. Collapses `0 ⋆ 0` to `0`; in every other case
    /// builds a node with the given children.
    pub fn star(left: Term<L>, right: Term<L>) -> Term<L> {
        if left.is_zero() && right.is_zero() {
            Term::Zero
        } else {
            Term::Node(Arc::new(left), Arc::new(right))
        }
    }

    pub fn leaf(label: L) -> Term<L> {
        Term::Leaf(label)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Term::Zero)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Term::Leaf(_))
    }

    /// The unique ordered pair `(t1, t2) != (0, 0)` with `t1 ⋆ t2 == self`.
    /// Undefined for `0` and for leaves.
    pub fn decompose(&self) -> Result<(Term<L>, Term<L>)>
    where
        L: Clone,
    {
        match self {
            Term::Node(l, r) => Ok(((**l).clone(), (**r).clone())),
            _ => Err(Error::DecompositionUndefined),
        }
    }

    /// Number of nodes: `|0| = 0`, `|leaf| = 1`, `|t1 ⋆ t2| = |t1| + |t2| + 1`.
    pub fn size(&self) -> usize {
        match self {
            Term::Zero => 0,
            Term::Leaf(_) => 1,
            Term::Node(l, r) => l.size() + r.size() + 1,
        }
    }

    /// Calls `f` on every leaf label, left to right.
    pub fn for_each_leaf(&self, f: &mut impl FnMut(&L)) {
        match self {
            Term::Zero => {}
            Term::Leaf(l) => f(l),
            Term::Node(l, r) => {
                l.for_each_leaf(f);
                r.for_each_leaf(f);
            }
        }
    }

    /// Rebuilds the term with every leaf replaced by `f(label)`, collapsing
    /// `0 ⋆ 0` at each node on the way up. This is the homomorphic extension
    /// of a leaf map, so erasing leaves shrinks the surrounding structure.
    pub fn map_leaves<M>(&self, f: &mut impl FnMut(&L) -> Term<M>) -> Term<M> {
        match self {
            Term::Zero => Term::Zero,
            Term::Leaf(l) => f(l),
            Term::Node(l, r) => Term::star(l.map_leaves(f), r.map_leaves(f)),
        }
    }

    /// Structural audit: no stored node has two `0` children. Holds by
    /// construction for anything built through [`Term::star`].
    pub fn is_collapsed(&self) -> bool {
        match self {
            Term::Zero | Term::Leaf(_) => true,
            Term::Node(l, r) => {
                !(l.is_zero() && r.is_zero()) && l.is_collapsed() && r.is_collapsed()
            }
        }
    }

    /// Folds the term bottom-up into an arbitrary carrier.
    pub fn fold<B>(
        &self,
        zero: &impl Fn() -> B,
        leaf: &impl Fn(&L) -> B,
        node: &impl Fn(B, B) -> B,
    ) -> B {
        match self {
            Term::Zero => zero(),
            Term::Leaf(l) => leaf(l),
            Term::Node(left, right) => {
                let l = left.fold(zero, leaf, node);
                let r = right.fold(zero, leaf, node);
                node(l, r)
            }
        }
    }
}

impl Tree {
    /// The set of letters labeling the leaves; empty for `0`.
    pub fn letters(&self) -> Vec<Letter> {
        let mut seen = Vec::new();
        self.for_each_leaf(&mut |l: &Letter| {
            if !seen.contains(l) {
                seen.push(*l);
            }
        });
        seen.sort();
        seen
    }

    /// True when every leaf letter belongs to `alphabet`.
    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        let mut ok = true;
        self.for_each_leaf(&mut |l: &Letter| ok &= alphabet.contains(*l));
        ok
    }
}

impl<L: fmt::Display> fmt::Display for Term<L> {
    /// Linear term notation: `0`, a bare label, or `(t1 * t2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::Leaf(l) => write!(f, "{l}"),
            Term::Node(l, r) => write!(f, "({l} * {r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::WordSet;

    fn letter(c: char) -> Letter {
        Letter::new(c).unwrap()
    }

    fn tree(words: &[&str]) -> Tree {
        let sigma = Alphabet::from_str("abcd").unwrap();
        WordSet::from_words(words.iter().map(|w| w.to_string()))
            .unwrap()
            .to_tree(&sigma)
            .unwrap()
    }

    #[test]
    fn star_collapses_two_zeros() {
        assert_eq!(Tree::star(Tree::Zero, Tree::Zero), Tree::Zero);
    }

    #[test]
    fn star_of_leaves_matches_figure() {
        let tau = Tree::star(Tree::leaf(letter('c')), Tree::leaf(letter('d')));
        assert_eq!(tau, tree(&["0c", "1d"]));
    }

    #[test]
    fn star_keeps_single_zero_children() {
        let t = Tree::star(
            Tree::star(Tree::leaf(letter('b')), Tree::Zero),
            Tree::leaf(letter('a')),
        );
        assert_eq!(t, tree(&["00b", "1a"]));
        assert!(t.is_collapsed());
    }

    #[test]
    fn decompose_splits_off_the_two_children() {
        // Oracle: re-apply star and compare.
        let t = tree(&["00b", "1a"]);
        let (l, r) = t.decompose().unwrap();
        assert_eq!(l, tree(&["0b"]));
        assert_eq!(r, tree(&["a"]));
        assert_eq!(Tree::star(l, r), t);

        let (l, r) = tree(&["0c", "1d"]).decompose().unwrap();
        assert_eq!(l, Tree::leaf(letter('c')));
        assert_eq!(r, Tree::leaf(letter('d')));
    }

    #[test]
    fn decompose_is_undefined_for_zero_and_leaves() {
        assert_eq!(Tree::Zero.decompose(), Err(Error::DecompositionUndefined));
        assert_eq!(
            Tree::leaf(letter('a')).decompose(),
            Err(Error::DecompositionUndefined)
        );
    }

    #[test]
    fn sizes_match_the_recursive_definition() {
        assert_eq!(Tree::Zero.size(), 0);
        assert_eq!(tree(&["00b", "01c", "11d"]).size(), 6);
        assert_eq!(tree(&["00b", "1a"]).size(), 4);
    }

    #[test]
    fn letters_of_collects_leaf_labels() {
        assert_eq!(Tree::Zero.letters(), Vec::<Letter>::new());
        assert_eq!(
            tree(&["00b", "1a"]).letters(),
            vec![letter('a'), letter('b')]
        );
        assert_eq!(
            tree(&["0c", "1d"]).letters(),
            vec![letter('c'), letter('d')]
        );
    }

    #[test]
    fn map_leaves_erasure_collapses_structure() {
        // Erasing every leaf of {0a,1a} leaves 0 ⋆ 0, which collapses to 0.
        let t = tree(&["0a", "1a"]);
        let erased = t.map_leaves(&mut |_| Tree::Zero);
        assert_eq!(erased, Tree::Zero);
    }
}
