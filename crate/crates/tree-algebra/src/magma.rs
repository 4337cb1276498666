//! Finite magmas as homomorphism targets.
//!
//! A congruence on the tree algebra is the kernel of a homomorphism into
//! some algebra with one binary operation. Folding trees into a finite
//! magma therefore gives a decidable congruence test: two trees are
//! congruent for the induced kernel iff their fold values coincide.
//!
//! The image of the empty tree needs care: `0 = 0 ⋆ 0` forces `h(0)` to be
//! an idempotent of the target, so a magma carries an explicit `zero_image`
//! with `op(z, z) = z`.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::term::Tree;

/// A finite carrier `{0, .., size-1}` with a total binary operation and a
/// distinguished idempotent receiving the empty tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMagma {
    size: usize,
    /// Row-major: `table[x * size + y]` is `x * y`.
    table: Vec<usize>,
    zero_image: usize,
}

impl FiniteMagma {
    pub fn new(size: usize, table: Vec<usize>, zero_image: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidMagma("carrier must be nonempty".into()));
        }
        if table.len() != size * size {
            return Err(Error::InvalidMagma(format!(
                "operation table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= size) {
            return Err(Error::InvalidMagma(format!(
                "table value {bad} outside the carrier"
            )));
        }
        if zero_image >= size {
            return Err(Error::InvalidMagma(format!(
                "zero image {zero_image} outside the carrier"
            )));
        }
        let magma = FiniteMagma {
            size,
            table,
            zero_image,
        };
        if magma.op(zero_image, zero_image) != zero_image {
            return Err(Error::InvalidMagma(
                "zero image must satisfy op(z, z) = z".into(),
            ));
        }
        Ok(magma)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn zero_image(&self) -> usize {
        self.zero_image
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }
}

/// A homomorphism from trees into a finite magma, given by letter images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagmaHom {
    magma: FiniteMagma,
    /// `letter_images[i]` is the image of the `i`-th alphabet letter.
    letter_images: Vec<usize>,
}

impl MagmaHom {
    pub fn new(alphabet: &Alphabet, magma: FiniteMagma, letter_images: Vec<usize>) -> Result<Self> {
        if letter_images.len() != alphabet.len() {
            return Err(Error::InvalidMagma(format!(
                "{} letter images for an alphabet of {} letters",
                letter_images.len(),
                alphabet.len()
            )));
        }
        if let Some(&bad) = letter_images.iter().find(|&&v| v >= magma.size()) {
            return Err(Error::InvalidMagma(format!(
                "letter image {bad} outside the carrier"
            )));
        }
        Ok(MagmaHom {
            magma,
            letter_images,
        })
    }

    pub fn magma(&self) -> &FiniteMagma {
        &self.magma
    }

    pub fn letter_images(&self) -> &[usize] {
        &self.letter_images
    }

    /// The structural fold: `0` to the zero image, leaves to their letter
    /// images, nodes through the operation table.
    pub fn eval(&self, alphabet: &Alphabet, tree: &Tree) -> usize {
        tree.fold(
            &|| self.magma.zero_image(),
            &|l| {
                let i = alphabet.index_of(*l).expect("letter in alphabet");
                self.letter_images[i]
            },
            &|x, y| self.magma.op(x, y),
        )
    }

    /// Kernel congruence: trees are congruent iff their images coincide.
    pub fn congruent(&self, alphabet: &Alphabet, t1: &Tree, t2: &Tree) -> bool {
        self.eval(alphabet, t1) == self.eval(alphabet, t2)
    }
}
