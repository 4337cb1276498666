//! Congruence-preservation analysis of function tables.
//!
//! A table `g : Σⁿ → T(Σ)` extends to a congruence-preserving function on
//! all trees iff it survives the grafting check below, and in that case the
//! extension is a polynomial function whose representing polynomial
//! [`synthesize`] reconstructs. Two equivalent finite conditions are
//! implemented independently:
//!
//! * [`wcp_check`] quantifies over idempotent letter maps `h` and demands
//!   `h(g(u)) = h(g(v))` whenever `h(u) = h(v)` pointwise;
//! * [`gcp_check`] quantifies over single-letter graftings, comparing
//!   `g` at a tuple with `g` at the tuple with one coordinate replaced.
//!
//! Keeping both routes separate lets the verification suite confirm their
//! equivalence by brute force.

use std::fmt;

use serde::Serialize;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::morphism::{skeleton, Endomorphism};
use crate::polynomial::{PolyLeaf, Polynomial, PolyTerm};
use crate::table::{index_of_tuple, tuple_of_index, FunctionTable};
use crate::term::{Term, Tree};

/// A failed grafting comparison.
///
/// The instance it names: with `a = args[position-1]` and `b = letter`,
/// the grafting `G_b^a` separates `g(args)` from `g(args
/// with position reset to b)`. Witnesses are reported for the first failing
/// instance in lexicographic `(tuple, position, replacement)` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcpWitness {
    pub args: Vec<Letter>,
    /// 1-based argument position.
    pub position: usize,
    pub letter: Letter,
}

impl fmt::Display for GcpWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: String = self.args.iter().map(|l| l.as_char()).collect();
        write!(
            f,
            "args ({args}), position {}, letter {}",
            self.position, self.letter
        )
    }
}

/// The grafting form of the congruence-preservation check.
///
/// For every tuple, every position `i` and every replacement letter `b`,
/// grafting `b` onto the original letter must identify the two table values.
pub fn gcp_check(table: &FunctionTable) -> std::result::Result<(), GcpWitness> {
    let alphabet = table.alphabet();
    let base = alphabet.len();
    for index in 0..table.len() {
        let tuple = tuple_of_index(index, base, table.arity());
        for position in 0..table.arity() {
            let original = tuple[position];
            for replacement in 0..base {
                if replacement == original {
                    continue;
                }
                let graft = Endomorphism::grafting(
                    alphabet.clone(),
                    alphabet.letter(original),
                    Tree::leaf(alphabet.letter(replacement)),
                );
                let mut replaced = tuple.clone();
                replaced[position] = replacement;
                let other = index_of_tuple(&replaced, base);
                if graft.apply(table.value_at(index)) != graft.apply(table.value_at(other)) {
                    return Err(GcpWitness {
                        args: replaced.iter().map(|&d| alphabet.letter(d)).collect(),
                        position: position + 1,
                        letter: alphabet.letter(original),
                    });
                }
            }
        }
    }
    Ok(())
}

/// The idempotent-map form of the congruence-preservation check, exactly as
/// defined: only idempotent letter maps are consulted.
pub fn wcp_check(table: &FunctionTable) -> bool {
    let alphabet = table.alphabet();
    let base = alphabet.len();
    for h in crate::enumerate::alpha_maps(alphabet.len(), true) {
        // Group points by their image tuple; all values in a group must
        // agree after relabeling.
        let mut seen: Vec<Option<Tree>> = vec![None; table.len()];
        for index in 0..table.len() {
            let tuple = tuple_of_index(index, base, table.arity());
            let image: Vec<usize> = tuple.iter().map(|&d| h.apply_index(d)).collect();
            let slot = index_of_tuple(&image, base);
            let value = h.apply_tree(alphabet, table.value_at(index));
            match &seen[slot] {
                None => seen[slot] = Some(value),
                Some(prev) => {
                    if *prev != value {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// How a letter-valued table looks after the grafting check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Constant(Tree),
    /// 1-based argument position.
    Projection(usize),
    NotSigmaValued,
    NotWcp,
}

/// Classifies a table whose values are expected to be single letters: after
/// the grafting check, the only survivors are constants and projections.
///
/// Tables with a non-letter value report `NotSigmaValued` without consulting
/// the grafting check.
pub fn classify_sigma_valued(table: &FunctionTable) -> Result<Classification> {
    table.alphabet().require_len(3)?;
    if !table.values().iter().all(Tree::is_leaf) {
        return Ok(Classification::NotSigmaValued);
    }
    if gcp_check(table).is_err() {
        return Ok(Classification::NotWcp);
    }
    Ok(classify_leaf_values(table).expect(
        "a letter-valued table that passes the grafting check is a constant or a projection",
    ))
}

/// The constant-or-projection shape check, independent of any congruence
/// testing. Projections are preferred when both would match.
fn classify_leaf_values(table: &FunctionTable) -> Option<Classification> {
    let base = table.alphabet().len();
    'positions: for position in 0..table.arity() {
        for index in 0..table.len() {
            let tuple = tuple_of_index(index, base, table.arity());
            let expected = Tree::leaf(table.alphabet().letter(tuple[position]));
            if table.value_at(index) != &expected {
                continue 'positions;
            }
        }
        return Some(Classification::Projection(position + 1));
    }
    let first = table.value_at(0);
    if table.values().iter().all(|v| v == first) {
        return Some(Classification::Constant(first.clone()));
    }
    None
}

/// Reconstructs the polynomial representing a table that passes the
/// grafting check.
///
/// The induction is on the common size of the values: size 0 gives the
/// empty polynomial, size 1 reduces to [`classify_sigma_valued`], and
/// larger values are decomposed in lockstep, recursing on the two child
/// tables and joining the results with the product.
pub fn synthesize(table: &FunctionTable) -> Result<Polynomial> {
    table.alphabet().require_len(3)?;
    if let Err(witness) = gcp_check(table) {
        return Err(Error::NotWcp { witness });
    }
    let body = synthesize_values(table, table.values())?;
    Polynomial::new(table.arity(), body)
}

/// The synthesis recursion over a slice of values aligned with the table's
/// point order. Split out so the lockstep-decomposition guard can be
/// exercised directly.
pub(crate) fn synthesize_values(table: &FunctionTable, values: &[Tree]) -> Result<PolyTerm> {
    let common = values[0].size();
    if values.iter().any(|v| v.size() != common) {
        return Err(Error::SkeletonMismatch);
    }
    if common == 0 {
        return Ok(Term::Zero);
    }
    if common == 1 {
        let leaves = FunctionTable::new(table.alphabet().clone(), table.arity(), values.to_vec())?;
        return match classify_leaf_values(&leaves) {
            Some(Classification::Projection(i)) => Ok(Term::Leaf(PolyLeaf::Var(i))),
            Some(Classification::Constant(tree)) => match tree {
                Tree::Leaf(l) => Ok(Term::Leaf(PolyLeaf::Letter(l))),
                _ => unreachable!("size-1 constant is a leaf"),
            },
            _ => unreachable!(
                "a letter-valued table that passes the grafting check is a constant or a projection"
            ),
        };
    }
    let mut lefts = Vec::with_capacity(values.len());
    let mut rights = Vec::with_capacity(values.len());
    for value in values {
        let (l, r) = value.decompose().map_err(|_| Error::SkeletonMismatch)?;
        lefts.push(l);
        rights.push(r);
    }
    Ok(Term::star(
        synthesize_values(table, &lefts)?,
        synthesize_values(table, &rights)?,
    ))
}

/// Equality of two tables on all of `Σⁿ`. For genuinely congruence
/// preserving functions over at least three letters, this decides equality
/// on every tree argument.
pub fn cp_equal_on_alphabet(f: &FunctionTable, g: &FunctionTable) -> bool {
    f.alphabet() == g.alphabet() && f.arity() == g.arity() && f.values() == g.values()
}

/// Whether every pair of table values shares a skeleton. Tables that pass
/// the grafting check always do.
pub fn values_pairwise_similar(table: &FunctionTable) -> bool {
    let first = skeleton(table.alphabet(), table.value_at(0));
    table
        .values()
        .iter()
        .all(|v| skeleton(table.alphabet(), v) == first)
}
