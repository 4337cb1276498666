//! Exhaustive enumerators and seeded samplers.
//!
//! These are the ground-truth generators behind the verification suite:
//! every tree, letter map, magma or polynomial within given bounds, each
//! exactly once, in a deterministic order. Counting is done independently
//! of generation (a plain dynamic program on sizes) so enumeration
//! completeness is itself checkable.
//!
//! Costs grow fast. Trees of size `s` over three letters number
//! 1, 3, 6, 21, 78, 318, 1356, ... and magma tables of size `s` number
//! `s^(s²)`; callers are expected to keep bounds at desk scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::magma::FiniteMagma;
use crate::morphism::AlphaMap;
use crate::polynomial::{PolyLeaf, Polynomial};
use crate::table::FunctionTable;
use crate::term::{Term, Tree};
use crate::words::{word_cmp, LeafToken, WordSet};

/// Bounds for an exhaustive run.
#[derive(Debug, Clone)]
pub struct EnumerationBounds {
    pub alphabet: Alphabet,
    pub max_tree_size: usize,
    pub max_arity: usize,
    pub max_magma_size: usize,
}

/// Number of terms of each exact size `0..=max_size` over `leaf_kinds`
/// distinct leaf labels: `C(0) = 1`, `C(1) = leaf_kinds`, and for `s ≥ 2`
/// `C(s) = Σ_{i+j=s-1} C(i)·C(j)` (the two-zero pair only arises at `s = 1`
/// and the empty product is excluded there by `C` counting leaves alone).
pub fn term_counts(leaf_kinds: usize, max_size: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_size + 1];
    counts[0] = 1;
    if max_size >= 1 {
        counts[1] = leaf_kinds as u64;
    }
    for s in 2..=max_size {
        counts[s] = (0..s).map(|i| counts[i] * counts[s - 1 - i]).sum();
    }
    counts
}

/// All terms of size at most `max_size` over the given leaves, grouped by
/// size ascending and sorted within each size by their word sets.
pub fn enumerate_terms<L: LeafToken + Clone>(leaves: &[L], max_size: usize) -> Vec<Term<L>> {
    let mut buckets: Vec<Vec<Term<L>>> = Vec::with_capacity(max_size + 1);
    buckets.push(vec![Term::Zero]);
    if max_size >= 1 {
        buckets.push(leaves.iter().cloned().map(Term::Leaf).collect());
    }
    for s in 2..=max_size {
        let mut bucket = Vec::new();
        for i in 0..s {
            for left in &buckets[i] {
                for right in &buckets[s - 1 - i] {
                    bucket.push(Term::star(left.clone(), right.clone()));
                }
            }
        }
        buckets.push(bucket);
    }
    for bucket in &mut buckets {
        bucket.sort_by(|a, b| {
            let wa = WordSet::from_term(a);
            let wb = WordSet::from_term(b);
            compare_word_lists(wa.words(), wb.words())
        });
    }
    buckets.into_iter().flatten().collect()
}

fn compare_word_lists(a: &[String], b: &[String]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let ord = word_cmp(x, y);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

/// All trees of size at most `max_size` over the alphabet.
pub fn enumerate_trees(alphabet: &Alphabet, max_size: usize) -> Vec<Tree> {
    enumerate_terms(alphabet.letters(), max_size)
}

fn polynomial_leaves(alphabet: &Alphabet, arity: usize) -> Vec<PolyLeaf> {
    let mut leaves: Vec<PolyLeaf> = alphabet
        .letters()
        .iter()
        .map(|&l| PolyLeaf::Letter(l))
        .collect();
    leaves.extend((1..=arity).map(PolyLeaf::Var));
    leaves
}

/// All polynomials of the given arity with bodies of size at most
/// `max_size`.
pub fn enumerate_polynomials(
    alphabet: &Alphabet,
    arity: usize,
    max_size: usize,
) -> Vec<Polynomial> {
    enumerate_terms(&polynomial_leaves(alphabet, arity), max_size)
        .into_iter()
        .map(|body| Polynomial::new(arity, body).expect("enumerated variables are in range"))
        .collect()
}

/// All letter maps on an alphabet of `n` letters, optionally restricted to
/// the idempotent ones (`h∘h = h`). There are `n^n` maps in total; for
/// three letters, ten of them are idempotent.
pub fn alpha_maps(n: usize, idempotent_only: bool) -> Vec<AlphaMap> {
    let total = (n as u64).pow(n as u32);
    let mut maps = Vec::new();
    for index in 0..total {
        let mut digits = vec![0usize; n];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % n as u64) as usize;
            rest /= n as u64;
        }
        let map = AlphaMap::from_indices(digits);
        if !idempotent_only || map.is_idempotent() {
            maps.push(map);
        }
    }
    maps
}

/// All magmas of carrier size `1..=max_size`: every operation table paired
/// with every element `z` satisfying `op(z, z) = z`. Table counts are
/// `size^(size²)`, so sizes beyond 3 are impractical.
pub fn enumerate_magmas(max_size: usize) -> impl Iterator<Item = FiniteMagma> {
    (1..=max_size).flat_map(|size| {
        let cells = size * size;
        let total = (size as u64).pow(cells as u32);
        (0..total).flat_map(move |index| {
            let mut table = vec![0usize; cells];
            let mut rest = index;
            for slot in table.iter_mut().rev() {
                *slot = (rest % size as u64) as usize;
                rest /= size as u64;
            }
            (0..size).filter_map(move |zero| FiniteMagma::new(size, table.clone(), zero).ok())
        })
    })
}

/// SplitMix64, used to derive independent per-instance seeds from a master
/// seed so that sampled verification runs are reproducible and order
/// independent.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9e3779b97f4a7c15)
        .wrapping_add(index.wrapping_mul(0xbf58476d1ce4e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A seeded RNG for one sampled instance.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(seed, index))
}

/// Samples a term uniformly among all terms of size at most `max_size`
/// over the given leaves.
pub fn sample_term<L: Clone>(rng: &mut impl Rng, leaves: &[L], max_size: usize) -> Term<L> {
    let counts = term_counts(leaves.len(), max_size);
    let total: u64 = counts.iter().sum();
    let mut pick = rng.gen_range(0..total);
    let mut size = 0;
    for (s, &c) in counts.iter().enumerate() {
        if pick < c {
            size = s;
            break;
        }
        pick -= c;
    }
    sample_term_exact(rng, leaves, size, &counts)
}

fn sample_term_exact<L: Clone>(
    rng: &mut impl Rng,
    leaves: &[L],
    size: usize,
    counts: &[u64],
) -> Term<L> {
    match size {
        0 => Term::Zero,
        1 => Term::Leaf(leaves[rng.gen_range(0..leaves.len())].clone()),
        s => {
            let mut pick = rng.gen_range(0..counts[s]);
            for i in 0..s {
                let weight = counts[i] * counts[s - 1 - i];
                if pick < weight {
                    let left = sample_term_exact(rng, leaves, i, counts);
                    let right = sample_term_exact(rng, leaves, s - 1 - i, counts);
                    return Term::star(left, right);
                }
                pick -= weight;
            }
            unreachable!("split weights sum to the size count")
        }
    }
}

/// Samples a tree uniformly among all trees of size at most `max_size`.
pub fn sample_tree(rng: &mut impl Rng, alphabet: &Alphabet, max_size: usize) -> Tree {
    sample_term(rng, alphabet.letters(), max_size)
}

/// Samples a polynomial of the given arity with body size at most
/// `max_size`, uniformly among all such bodies.
pub fn sample_polynomial(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    arity: usize,
    max_size: usize,
) -> Polynomial {
    let leaves = polynomial_leaves(alphabet, arity);
    let body = sample_term(rng, &leaves, max_size);
    Polynomial::new(arity, body).expect("sampled variables are in range")
}

/// Samples a total table with values drawn uniformly from `pool`.
pub fn sample_table(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    arity: usize,
    pool: &[Tree],
) -> FunctionTable {
    let count = FunctionTable::point_count(alphabet, arity).expect("table fits in memory");
    let values = (0..count)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect();
    FunctionTable::new(alphabet.clone(), arity, values).expect("pool values are over the alphabet")
}

/// Samples a magma of carrier size `1..=max_size`, resampling tables that
/// admit no valid zero image.
pub fn sample_magma(rng: &mut impl Rng, max_size: usize) -> FiniteMagma {
    loop {
        let size = rng.gen_range(1..=max_size);
        let table: Vec<usize> = (0..size * size).map(|_| rng.gen_range(0..size)).collect();
        let zeros: Vec<usize> = (0..size)
            .filter(|&z| table[z * size + z] == z)
            .collect();
        if zeros.is_empty() {
            continue;
        }
        let zero = zeros[rng.gen_range(0..zeros.len())];
        return FiniteMagma::new(size, table, zero).expect("filtered zero image is valid");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Alphabet {
        Alphabet::from_str("abc").unwrap()
    }

    #[test]
    fn counts_match_the_recurrence() {
        assert_eq!(term_counts(3, 6), vec![1, 3, 6, 21, 78, 318, 1356]);
    }

    #[test]
    fn enumeration_matches_counts() {
        let trees = enumerate_trees(&sigma(), 6);
        let counts = term_counts(3, 6);
        assert_eq!(trees.len() as u64, counts.iter().sum::<u64>());
        for (s, &c) in counts.iter().enumerate() {
            let at_size = trees.iter().filter(|t| t.size() == s).count();
            assert_eq!(at_size as u64, c, "count at size {s}");
        }
    }

    #[test]
    fn small_tree_universes() {
        assert_eq!(enumerate_trees(&sigma(), 0), vec![Tree::Zero]);
        assert_eq!(enumerate_trees(&sigma(), 1).len(), 4);
        let exactly_two = enumerate_trees(&sigma(), 2)
            .into_iter()
            .filter(|t| t.size() == 2)
            .count();
        assert_eq!(exactly_two, 6);
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let first = enumerate_trees(&sigma(), 5);
        let second = enumerate_trees(&sigma(), 5);
        assert_eq!(first, second);
        for (i, t) in first.iter().enumerate() {
            assert!(!first[..i].contains(t), "duplicate at {i}");
        }
        // Size-then-word-set order.
        for pair in first.windows(2) {
            assert!(pair[0].size() <= pair[1].size());
        }
    }

    #[test]
    fn alpha_map_counts() {
        assert_eq!(alpha_maps(3, false).len(), 27);
        assert_eq!(alpha_maps(3, true).len(), 10);
        assert_eq!(alpha_maps(1, true).len(), 1);
        assert!(alpha_maps(3, true).iter().all(AlphaMap::is_idempotent));
    }

    #[test]
    fn magma_enumeration_counts() {
        assert_eq!(enumerate_magmas(1).count(), 1);
        // Of the 16 two-element tables, 8 admit zero 0 and 8 admit zero 1.
        let twos: Vec<FiniteMagma> = enumerate_magmas(2).skip(1).collect();
        assert_eq!(twos.len(), 16);
        assert!(twos
            .iter()
            .all(|m| m.op(m.zero_image(), m.zero_image()) == m.zero_image()));
    }

    #[test]
    fn samplers_are_seed_deterministic() {
        let mut r1 = instance_rng(42, 7);
        let mut r2 = instance_rng(42, 7);
        let t1 = sample_tree(&mut r1, &sigma(), 6);
        let t2 = sample_tree(&mut r2, &sigma(), 6);
        assert_eq!(t1, t2);
        assert!(t1.size() <= 6);

        let p1 = sample_polynomial(&mut r1, &sigma(), 2, 9);
        let p2 = sample_polynomial(&mut r2, &sigma(), 2, 9);
        assert_eq!(p1, p2);
    }

    #[test]
    fn enumerated_polynomials_tabulate() {
        let polys = enumerate_polynomials(&sigma(), 1, 3);
        // 1 + 4 + 8 + 32 terms over four leaf kinds.
        assert_eq!(polys.len(), 45);
        for p in &polys {
            assert!(FunctionTable::tabulate(p, &sigma()).is_ok());
        }
    }
}
