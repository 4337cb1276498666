//! The algebra of leaf-labeled binary trees.
//!
//! Trees over an alphabet `Σ` (with `0`, `1` reserved for addresses) form
//! an algebra under the product `t1 ⋆ t2`, with the single law
//! `0 ⋆ 0 = 0`. This crate implements the algebra, its homomorphism and
//! grafting machinery, congruence-preservation checks for function tables
//! on `Σⁿ`, and a synthesizer that reconstructs the unique polynomial
//! representing any congruence-preserving function from its values on
//! letter tuples. A brute-force verification suite checks every structural
//! property on bounded universes.
//!
//! # Layout
//!
//! * [`alphabet`], [`term`], [`words`] — trees, their word-set wire form;
//! * [`morphism`], [`magma`] — endomorphisms, graftings, congruence kernels;
//! * [`polynomial`], [`table`] — polynomials and `Σⁿ` fingerprints;
//! * [`analysis`] — WCP/GCP checks, classification, synthesis;
//! * [`enumerate`], [`verify`] — exhaustive oracles and proposition checks;
//! * [`json`] — serde documents for every wire format.
//!
//! The verification loops are data parallel; the `parallel` feature
//! (default) runs them on rayon, and disabling it falls back to sequential
//! scans with identical results.

pub mod alphabet;
pub mod analysis;
pub mod enumerate;
pub mod error;
pub mod json;
pub mod magma;
pub mod morphism;
pub mod par;
pub mod polynomial;
pub mod table;
pub mod term;
pub mod verify;
pub mod words;

pub use alphabet::{Alphabet, Letter};
pub use analysis::{
    classify_sigma_valued, cp_equal_on_alphabet, gcp_check, synthesize, wcp_check, Classification,
    GcpWitness,
};
pub use error::{Error, Result};
pub use magma::{FiniteMagma, MagmaHom};
pub use morphism::{similar, skeleton, AlphaMap, Endomorphism};
pub use par::Parallelism;
pub use polynomial::{PolyLeaf, Polynomial};
pub use table::FunctionTable;
pub use term::{Term, Tree};
pub use verify::{run_all, run_proposition, Proposition, VerifyOptions, VerifyOutcome, VerifyReport};
pub use words::WordSet;
