//! Polynomials over the tree algebra.
//!
//! A polynomial of arity `n` is a tree whose leaves carry either a letter or
//! one of the variables `x1 .. xn`. Its polynomial function evaluates by
//! substituting argument trees for variables and folding the product back
//! together, collapsing `0 ⋆ 0` wherever substitution erases subtrees.
//!
//! Variables are serialized as `x1`, `x2`, ... word tokens, so the word-set
//! form of `x1 ⋆ c` is `["0x1", "1c"]`.

use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::morphism::Endomorphism;
use crate::term::{Term, Tree};
use crate::words::{LeafToken, WordSet};

/// A polynomial leaf: a concrete letter or a variable index (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyLeaf {
    Letter(Letter),
    Var(usize),
}

impl LeafToken for PolyLeaf {
    fn render(&self) -> String {
        match self {
            PolyLeaf::Letter(l) => l.render(),
            PolyLeaf::Var(i) => format!("x{i}"),
        }
    }

    fn parse(token: &str, alphabet: &Alphabet) -> Result<Self> {
        if token.chars().count() == 1 {
            return Ok(PolyLeaf::Letter(Letter::parse(token, alphabet)?));
        }
        if let Some(digits) = token.strip_prefix('x') {
            if let Ok(index) = digits.parse::<usize>() {
                // Insist on the canonical spelling so round trips are exact.
                if index >= 1 && token == format!("x{index}") {
                    return Ok(PolyLeaf::Var(index));
                }
            }
        }
        Err(Error::InvalidLetter(token.chars().next().unwrap_or('?')))
    }
}

/// The body of a polynomial: a term over letters and variables.
pub type PolyTerm = Term<PolyLeaf>;

/// A polynomial `P(x1, .., xn)` together with its declared arity.
///
/// The arity may exceed the variables actually used; it fixes the length of
/// argument vectors the polynomial function accepts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    body: PolyTerm,
}

impl Polynomial {
    pub fn new(arity: usize, body: PolyTerm) -> Result<Self> {
        let mut bad = None;
        body.for_each_leaf(&mut |leaf| {
            if let PolyLeaf::Var(i) = leaf {
                if *i < 1 || *i > arity {
                    bad.get_or_insert(*i);
                }
            }
        });
        if let Some(index) = bad {
            return Err(Error::VariableOutOfRange { index, arity });
        }
        Ok(Polynomial { arity, body })
    }

    /// The constant polynomial `0`.
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            body: Term::Zero,
        }
    }

    /// The constant polynomial given by a letter.
    pub fn constant(arity: usize, letter: Letter) -> Self {
        Polynomial {
            arity,
            body: Term::Leaf(PolyLeaf::Letter(letter)),
        }
    }

    /// The projection `x_index` (1-based).
    pub fn var(arity: usize, index: usize) -> Result<Self> {
        Polynomial::new(arity, Term::Leaf(PolyLeaf::Var(index)))
    }

    /// Embeds a ground tree as a constant polynomial.
    pub fn from_tree(arity: usize, tree: &Tree) -> Self {
        Polynomial {
            arity,
            body: embed(tree),
        }
    }

    /// The product of two polynomials of the same arity.
    pub fn star(left: &Polynomial, right: &Polynomial) -> Result<Self> {
        if left.arity != right.arity {
            return Err(Error::ArityMismatch {
                expected: left.arity,
                got: right.arity,
            });
        }
        Ok(Polynomial {
            arity: left.arity,
            body: Term::star(left.body.clone(), right.body.clone()),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn body(&self) -> &PolyTerm {
        &self.body
    }

    /// Evaluates the polynomial function at an argument vector.
    pub fn eval(&self, args: &[Tree]) -> Result<Tree> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        Ok(self.body.map_leaves(&mut |leaf| match leaf {
            PolyLeaf::Letter(l) => Tree::leaf(*l),
            PolyLeaf::Var(i) => args[*i - 1].clone(),
        }))
    }

    /// Evaluates at a tuple of letters.
    pub fn eval_letters(&self, letters: &[Letter]) -> Result<Tree> {
        let args: Vec<Tree> = letters.iter().map(|&l| Tree::leaf(l)).collect();
        self.eval(&args)
    }

    /// The set of variable indices occurring in the body, ascending.
    pub fn variables(&self) -> Vec<usize> {
        let mut vars = Vec::new();
        self.body.for_each_leaf(&mut |leaf| {
            if let PolyLeaf::Var(i) = leaf {
                if !vars.contains(i) {
                    vars.push(*i);
                }
            }
        });
        vars.sort_unstable();
        vars
    }

    /// Freezes the given positions (1-based) to fixed trees, producing a
    /// polynomial of smaller arity. Remaining variables are renumbered in
    /// increasing order of their original index.
    pub fn freeze(&self, bindings: &[(usize, Tree)]) -> Result<Polynomial> {
        for &(pos, _) in bindings {
            if pos < 1 || pos > self.arity {
                return Err(Error::VariableOutOfRange {
                    index: pos,
                    arity: self.arity,
                });
            }
        }
        let mut fixed: Vec<Option<&Tree>> = vec![None; self.arity];
        for (pos, tree) in bindings {
            if fixed[pos - 1].replace(tree).is_some() {
                return Err(Error::VariableOutOfRange {
                    index: *pos,
                    arity: self.arity,
                });
            }
        }
        // Renumber the surviving positions.
        let mut renumber = vec![0usize; self.arity];
        let mut next = 0;
        for (i, slot) in fixed.iter().enumerate() {
            if slot.is_none() {
                next += 1;
                renumber[i] = next;
            }
        }
        let body = self.body.map_leaves(&mut |leaf| match leaf {
            PolyLeaf::Letter(l) => Term::Leaf(PolyLeaf::Letter(*l)),
            PolyLeaf::Var(i) => match fixed[*i - 1] {
                Some(tree) => embed(tree),
                None => Term::Leaf(PolyLeaf::Var(renumber[*i - 1])),
            },
        });
        Ok(Polynomial {
            arity: self.arity - bindings.len(),
            body,
        })
    }

    /// Rewrites letter leaves through an endomorphism, leaving variables
    /// untouched. Evaluation then satisfies
    /// `h(P(u1,..,un)) = (h·P)(h(u1),..,h(un))`.
    pub fn map_letters(&self, h: &Endomorphism) -> Polynomial {
        let body = self.body.map_leaves(&mut |leaf| match leaf {
            PolyLeaf::Letter(l) => embed(h.image(*l)),
            PolyLeaf::Var(i) => Term::Leaf(PolyLeaf::Var(*i)),
        });
        Polynomial {
            arity: self.arity,
            body,
        }
    }

    pub fn to_word_set(&self) -> WordSet {
        WordSet::from_term(&self.body)
    }

    pub fn from_word_set(arity: usize, words: &WordSet, alphabet: &Alphabet) -> Result<Self> {
        let body = words.to_term::<PolyLeaf>(alphabet)?;
        Polynomial::new(arity, body)
    }
}

/// A ground tree as a polynomial body.
fn embed(tree: &Tree) -> PolyTerm {
    tree.map_leaves(&mut |l| Term::Leaf(PolyLeaf::Letter(*l)))
}

impl fmt::Display for PolyLeaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body)
    }
}
