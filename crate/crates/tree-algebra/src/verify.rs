//! Brute-force verification of the algebra's structural propositions.
//!
//! Each proposition is checked on a bounded universe: exhaustively where
//! the instance space is enumerable at desk scale, by seeded sampling where
//! it is not. A report carries the bounds, the instance count and, on
//! failure, the first counterexample in scan order. A failure on an
//! in-bounds instance always indicates an implementation bug, never a flaw
//! in the underlying mathematics; reports say so.
//!
//! Instance spaces are flat index ranges, so every check is data parallel
//! (see [`crate::par`]), and sampled instances derive their RNG from
//! `(seed, index)` so results do not depend on the traversal order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::Alphabet;
use crate::analysis::{classify_sigma_valued, gcp_check, synthesize, wcp_check, Classification};
use crate::enumerate::{
    enumerate_trees, instance_rng, sample_polynomial, sample_tree,
};
use crate::error::{Error, Result};
use crate::morphism::{similar, skeleton, Endomorphism};
use crate::par::{find_first, Parallelism};
use crate::polynomial::Polynomial;
use crate::table::{tuple_of_index, FunctionTable};
use crate::term::Tree;
use crate::words::WordSet;

/// Hard ceiling on instance counts; larger runs need `force`.
pub const INSTANCE_LIMIT: u64 = 100_000_000;

/// The propositions the suite can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Proposition {
    /// Every tree of size ≥ 2 factors as a product in exactly one way.
    UniqueDecomposition,
    /// Two graftings of the same tree onto distinct letters jointly
    /// separate any two trees.
    TwoGraftingInjectivity,
    /// For similar trees, a single grafting of size ≠ 1 (part 1) or all
    /// letter graftings at one letter (part 2) separate distinct trees.
    SimilarCancellation,
    /// Unary functions built by two routes from the same letter values
    /// produce similar trees everywhere.
    SimilarityLemma,
    /// A unary congruence-preserving function is determined by its letter
    /// values.
    UnaryDetermination,
    /// An n-ary congruence-preserving function is determined by its values
    /// on letter tuples.
    NaryDetermination,
    /// The idempotent-map check and the grafting check agree on every
    /// table.
    WcpGcp,
    /// Letter-valued tables passing the grafting check are exactly the
    /// constants and the projections.
    Classification,
    /// Synthesis reconstructs a polynomial that reproduces the sampled
    /// polynomial's function.
    Synthesis,
}

impl Proposition {
    pub const ALL: [Proposition; 9] = [
        Proposition::UniqueDecomposition,
        Proposition::TwoGraftingInjectivity,
        Proposition::SimilarCancellation,
        Proposition::SimilarityLemma,
        Proposition::UnaryDetermination,
        Proposition::NaryDetermination,
        Proposition::WcpGcp,
        Proposition::Classification,
        Proposition::Synthesis,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Proposition::UniqueDecomposition => "unique-decomposition",
            Proposition::TwoGraftingInjectivity => "two-grafting-injectivity",
            Proposition::SimilarCancellation => "similar-cancellation",
            Proposition::SimilarityLemma => "similarity-lemma",
            Proposition::UnaryDetermination => "unary-determination",
            Proposition::NaryDetermination => "nary-determination",
            Proposition::WcpGcp => "wcp-gcp",
            Proposition::Classification => "classification",
            Proposition::Synthesis => "synthesis",
        }
    }
}

impl FromStr for Proposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Proposition::ALL
            .iter()
            .copied()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownProposition(s.to_string()))
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Options shared by all checks.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub alphabet: Alphabet,
    /// Overrides the proposition's primary size bound (tree size for the
    /// exhaustive checks, argument-component size for the sampled ones).
    pub max_size: Option<usize>,
    /// Overrides the sample count of sampled checks.
    pub samples: Option<u64>,
    pub seed: u64,
    pub parallelism: Parallelism,
    /// Run even when the instance count exceeds [`INSTANCE_LIMIT`].
    pub force: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            alphabet: Alphabet::from_str("abc").expect("default alphabet"),
            max_size: None,
            samples: None,
            seed: 0,
            parallelism: Parallelism::default(),
            force: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerifyOutcome {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// One proposition's verification result, serializable as the report
/// document.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub proposition: String,
    pub bounds: Value,
    pub instances: u64,
    pub result: VerifyOutcome,
    /// First counterexample in scan order; always an implementation bug.
    pub counterexample: Option<Value>,
}

impl VerifyReport {
    pub fn is_pass(&self) -> bool {
        self.result == VerifyOutcome::Pass
    }

    fn finish(proposition: Proposition, bounds: Value, instances: u64, cx: Option<Value>) -> Self {
        VerifyReport {
            proposition: proposition.id().to_string(),
            bounds,
            instances,
            result: if cx.is_none() {
                VerifyOutcome::Pass
            } else {
                VerifyOutcome::Fail
            },
            counterexample: cx,
        }
    }
}

fn guard(instances: u64, force: bool) -> Result<()> {
    if instances > INSTANCE_LIMIT && !force {
        return Err(Error::BoundsTooLarge {
            instances,
            limit: INSTANCE_LIMIT,
        });
    }
    Ok(())
}

fn words(tree: &Tree) -> Vec<String> {
    WordSet::from_tree(tree).words().to_vec()
}

fn poly_json(poly: &Polynomial) -> Value {
    json!({"arity": poly.arity(), "body": poly.to_word_set().words()})
}

/// Independent size oracle on the word-set form: the number of leaves plus
/// the number of distinct proper address prefixes (the inner nodes).
pub fn word_size_oracle(set: &WordSet) -> usize {
    let mut prefixes: Vec<&str> = Vec::new();
    for word in set.words() {
        let addr_len = word.chars().take_while(|&c| c == '0' || c == '1').count();
        let addr = &word[..addr_len];
        for cut in 0..addr.len() {
            let prefix = &addr[..cut];
            if !prefixes.contains(&prefix) {
                prefixes.push(prefix);
            }
        }
    }
    set.words().len() + prefixes.len()
}

/// Exhaustive factorization search: all ordered pairs `(t1, t2)` of trees
/// with `t1 ⋆ t2 == t`, found by scanning the full universe up to the size
/// of `t`. The independent ground truth for unique decomposition.
pub fn factorizations(t: &Tree, universe_by_size: &[Vec<Tree>]) -> Vec<(Tree, Tree)> {
    let s = t.size();
    if s < 2 {
        return Vec::new();
    }
    let mut found = Vec::new();
    for i in 0..s {
        let j = s - 1 - i;
        for left in &universe_by_size[i] {
            for right in &universe_by_size[j] {
                if &Tree::star(left.clone(), right.clone()) == t {
                    found.push((left.clone(), right.clone()));
                }
            }
        }
    }
    found
}

fn buckets_by_size(alphabet: &Alphabet, max_size: usize) -> Vec<Vec<Tree>> {
    let mut buckets: Vec<Vec<Tree>> = vec![Vec::new(); max_size + 1];
    for t in enumerate_trees(alphabet, max_size) {
        let s = t.size();
        buckets[s].push(t);
    }
    buckets
}

/// Runs one proposition and assembles its report.
pub fn run_proposition(prop: Proposition, opts: &VerifyOptions) -> Result<VerifyReport> {
    match prop {
        Proposition::UniqueDecomposition => unique_decomposition(opts),
        Proposition::TwoGraftingInjectivity => two_grafting_injectivity(opts),
        Proposition::SimilarCancellation => similar_cancellation(opts),
        Proposition::SimilarityLemma => determination(prop, opts),
        Proposition::UnaryDetermination => determination(prop, opts),
        Proposition::NaryDetermination => determination(prop, opts),
        Proposition::WcpGcp => wcp_gcp(opts),
        Proposition::Classification => classification(opts),
        Proposition::Synthesis => synthesis(opts),
    }
}

/// Runs the whole suite in declaration order.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<VerifyReport>> {
    Proposition::ALL
        .iter()
        .map(|&p| run_proposition(p, opts))
        .collect()
}

fn unique_decomposition(opts: &VerifyOptions) -> Result<VerifyReport> {
    let max_size = opts.max_size.unwrap_or(6);
    let sigma = &opts.alphabet;
    let buckets = buckets_by_size(sigma, max_size);
    let trees: Vec<Tree> = buckets.iter().flatten().cloned().collect();
    let instances = trees.len() as u64;
    guard(instances, opts.force)?;

    let cx = find_first(instances, opts.parallelism, |i| {
        let t = &trees[i as usize];
        let found = factorizations(t, &buckets);
        if t.size() < 2 {
            if t.decompose().is_ok() || !found.is_empty() {
                return Some(json!({"tree": words(t), "factorizations": found.len()}));
            }
            return None;
        }
        let (l, r) = t.decompose().expect("size ≥ 2 decomposes");
        let unique = found.len() == 1 && found[0] == (l.clone(), r.clone());
        let recomposes = Tree::star(l, r) == *t;
        if unique && recomposes {
            None
        } else {
            Some(json!({"tree": words(t), "factorizations": found.len()}))
        }
    });

    let bounds = json!({"alphabet": sigma.to_string(), "max_tree_size": max_size});
    Ok(VerifyReport::finish(
        Proposition::UniqueDecomposition,
        bounds,
        instances,
        cx,
    ))
}

fn two_grafting_injectivity(opts: &VerifyOptions) -> Result<VerifyReport> {
    let tree_size = opts.max_size.unwrap_or(4);
    let tau_size = 3.min(tree_size.max(2));
    let sigma = &opts.alphabet;
    sigma.require_len(2)?;
    let trees = enumerate_trees(sigma, tree_size);
    let taus = enumerate_trees(sigma, tau_size);
    let letter_pairs: Vec<(usize, usize)> = (0..sigma.len())
        .flat_map(|i| (0..sigma.len()).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    let n = trees.len() as u64;
    let instances = n * n * taus.len() as u64 * letter_pairs.len() as u64;
    guard(instances, opts.force)?;

    // Precompute every grafting image once; instances then just compare.
    let images: Vec<Vec<Vec<Tree>>> = (0..sigma.len())
        .map(|a| {
            taus.iter()
                .map(|tau| {
                    let g = Endomorphism::grafting(sigma.clone(), sigma.letter(a), tau.clone());
                    trees.iter().map(|t| g.apply(t)).collect()
                })
                .collect()
        })
        .collect();

    let per_pair = taus.len() as u64 * letter_pairs.len() as u64;
    let cx = find_first(instances, opts.parallelism, |idx| {
        let pair_idx = (idx / per_pair) as usize;
        let rest = idx % per_pair;
        let tau_idx = (rest / letter_pairs.len() as u64) as usize;
        let (a1, a2) = letter_pairs[(rest % letter_pairs.len() as u64) as usize];
        let (ti, tj) = (pair_idx / trees.len(), pair_idx % trees.len());
        let joined = images[a1][tau_idx][ti] == images[a1][tau_idx][tj]
            && images[a2][tau_idx][ti] == images[a2][tau_idx][tj];
        if joined && trees[ti] != trees[tj] {
            Some(json!({
                "t": words(&trees[ti]),
                "t2": words(&trees[tj]),
                "tau": words(&taus[tau_idx]),
                "letters": [sigma.letter(a1).as_char(), sigma.letter(a2).as_char()],
            }))
        } else {
            None
        }
    });

    let bounds = json!({
        "alphabet": sigma.to_string(),
        "max_tree_size": tree_size,
        "max_tau_size": tau_size,
    });
    Ok(VerifyReport::finish(
        Proposition::TwoGraftingInjectivity,
        bounds,
        instances,
        cx,
    ))
}

/// Similar pairs grouped by skeleton, as index pairs into a flat list.
fn similar_pairs(trees: &[Tree], alphabet: &Alphabet) -> Vec<(usize, usize)> {
    let mut groups: Vec<(Tree, Vec<usize>)> = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        let skel = skeleton(alphabet, t);
        match groups.iter_mut().find(|(s, _)| *s == skel) {
            Some((_, members)) => members.push(i),
            None => groups.push((skel, vec![i])),
        }
    }
    let mut pairs = Vec::new();
    for (_, members) in &groups {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn similar_cancellation(opts: &VerifyOptions) -> Result<VerifyReport> {
    let pair_size = opts.max_size.unwrap_or(5);
    let tau_size = 3;
    let sigma = &opts.alphabet;
    sigma.require_len(3)?;
    let trees = enumerate_trees(sigma, pair_size);
    let pairs = similar_pairs(&trees, sigma);
    // Part 1 quantifies over graftings of size ≠ 1.
    let taus: Vec<Tree> = enumerate_trees(sigma, tau_size)
        .into_iter()
        .filter(|t| t.size() != 1)
        .collect();

    let instances = pairs.len() as u64;
    guard(instances, opts.force)?;

    let cx = find_first(instances, opts.parallelism, |idx| {
        let (i, j) = pairs[idx as usize];
        let (t, t2) = (&trees[i], &trees[j]);
        debug_assert!(t != t2 && similar(sigma, t, t2));
        for &a in sigma.letters() {
            // Part 1: no single grafting of size ≠ 1 may merge the pair.
            for tau in &taus {
                let g = Endomorphism::grafting(sigma.clone(), a, tau.clone());
                if g.apply(t) == g.apply(t2) {
                    return Some(json!({
                        "part": 1,
                        "t": words(t),
                        "t2": words(t2),
                        "letter": a.as_char(),
                        "tau": words(tau),
                    }));
                }
            }
            // Part 2: some letter grafting at `a` must separate the pair.
            let all_agree = sigma.letters().iter().filter(|&&b| b != a).all(|&b| {
                let g = Endomorphism::grafting(sigma.clone(), a, Tree::leaf(b));
                g.apply(t) == g.apply(t2)
            });
            if all_agree {
                return Some(json!({
                    "part": 2,
                    "t": words(t),
                    "t2": words(t2),
                    "letter": a.as_char(),
                }));
            }
        }
        None
    });

    let bounds = json!({
        "alphabet": sigma.to_string(),
        "max_pair_size": pair_size,
        "max_tau_size": tau_size,
    });
    Ok(VerifyReport::finish(
        Proposition::SimilarCancellation,
        bounds,
        instances,
        cx,
    ))
}

/// The three determination-style checks share a harness: build a function
/// by two routes (direct evaluation of a sampled polynomial, evaluation of
/// the polynomial synthesized back from its letter fingerprint) and compare
/// the routes on every argument vector within bounds.
///
/// Sampled bodies may use fewer variables than the comparison arity, so the
/// two routes can live at different declared arities; agreement on letter
/// tuples holds by construction, and the checks confirm it extends to all
/// in-bounds trees.
fn determination(prop: Proposition, opts: &VerifyOptions) -> Result<VerifyReport> {
    let sigma = &opts.alphabet;
    sigma.require_len(3)?;
    let (samples, arity, body_size, component_size, check_similarity) = match prop {
        Proposition::SimilarityLemma => (opts.samples.unwrap_or(200), 1, 7, 4, true),
        Proposition::UnaryDetermination => (opts.samples.unwrap_or(500), 1, 7, 4, false),
        Proposition::NaryDetermination => (opts.samples.unwrap_or(1000), 2, 9, 4, false),
        _ => unreachable!("not a determination check"),
    };
    let component_size = opts.max_size.unwrap_or(component_size);
    let instances = samples;
    guard(instances, opts.force)?;

    let pool = enumerate_trees(sigma, component_size);
    let seed = opts.seed;

    let cx = find_first(instances, opts.parallelism, |idx| {
        let mut rng = instance_rng(seed, idx);
        let n = (idx % arity as u64) as usize + 1;
        let base_arity = rng_range(&mut rng, n as u64 + 1) as usize;
        let base = sample_polynomial(&mut rng, sigma, base_arity, body_size);
        // Lift to the comparison arity; extra arguments are ignored.
        let lifted = Polynomial::new(n, base.body().clone()).expect("lift keeps variables valid");
        let table = match FunctionTable::tabulate(&lifted, sigma) {
            Ok(t) => t,
            Err(e) => return Some(json!({"error": e.to_string()})),
        };
        let resynthesized = match synthesize(&table) {
            Ok(p) => p,
            Err(e) => {
                return Some(json!({
                    "polynomial": poly_json(&lifted),
                    "error": e.to_string(),
                }))
            }
        };
        // Both routes agree on letter tuples by construction; check every
        // vector with in-bounds components.
        let vectors = (pool.len() as u64).pow(n as u32);
        let mut args = vec![Tree::Zero; n];
        for v in 0..vectors {
            let mut rest = v;
            for slot in args.iter_mut().rev() {
                *slot = pool[(rest % pool.len() as u64) as usize].clone();
                rest /= pool.len() as u64;
            }
            let direct = lifted.eval(&args).expect("arity matches");
            let synth = resynthesized.eval(&args).expect("arity matches");
            let ok = if check_similarity {
                similar(sigma, &direct, &synth)
            } else {
                direct == synth
            };
            if !ok {
                return Some(json!({
                    "polynomial": poly_json(&lifted),
                    "resynthesized": poly_json(&resynthesized),
                    "args": args.iter().map(words).collect::<Vec<_>>(),
                }));
            }
        }
        None
    });

    let bounds = json!({
        "alphabet": sigma.to_string(),
        "samples": samples,
        "max_arity": arity,
        "max_body_size": body_size,
        "max_component_size": component_size,
        "seed": seed,
    });
    Ok(VerifyReport::finish(prop, bounds, instances, cx))
}

fn rng_range(rng: &mut impl rand::Rng, bound: u64) -> u64 {
    rng.gen_range(0..bound)
}

fn wcp_gcp(opts: &VerifyOptions) -> Result<VerifyReport> {
    let value_size = opts.max_size.unwrap_or(3);
    let sigma = &opts.alphabet;
    let pool = enumerate_trees(sigma, value_size);
    let unary_tables = (pool.len() as u64).pow(sigma.len() as u32);
    let samples = opts.samples.unwrap_or(100_000);
    let instances = unary_tables + samples;
    guard(instances, opts.force)?;
    let seed = opts.seed;

    let cx = find_first(instances, opts.parallelism, |idx| {
        let table = if idx < unary_tables {
            // Exhaustive unary part: decode the value tuple.
            let mut rest = idx;
            let mut values = Vec::with_capacity(sigma.len());
            for _ in 0..sigma.len() {
                values.push(pool[(rest % pool.len() as u64) as usize].clone());
                rest /= pool.len() as u64;
            }
            FunctionTable::new(sigma.clone(), 1, values).expect("pool values are in range")
        } else {
            // Sampled binary part.
            let mut rng = instance_rng(seed, idx - unary_tables);
            crate::enumerate::sample_table(&mut rng, sigma, 2, &pool)
        };
        let wcp = wcp_check(&table);
        let gcp = gcp_check(&table).is_ok();
        if wcp != gcp {
            Some(json!({
                "arity": table.arity(),
                "values": table.values().iter().map(words).collect::<Vec<_>>(),
                "wcp": wcp,
                "gcp": gcp,
            }))
        } else {
            None
        }
    });

    let bounds = json!({
        "alphabet": sigma.to_string(),
        "max_value_size": value_size,
        "unary_tables": unary_tables,
        "binary_samples": samples,
        "seed": seed,
    });
    Ok(VerifyReport::finish(Proposition::WcpGcp, bounds, instances, cx))
}

fn classification(opts: &VerifyOptions) -> Result<VerifyReport> {
    let sigma = &opts.alphabet;
    sigma.require_len(3)?;
    let max_arity = 2;
    let base = sigma.len() as u64;
    let counts: Vec<u64> = (1..=max_arity)
        .map(|n| base.pow(base.pow(n as u32) as u32))
        .collect();
    let instances: u64 = counts.iter().sum();
    guard(instances, opts.force)?;

    let cx = find_first(instances, opts.parallelism, |idx| {
        // Decode (arity, table) from the flat index.
        let (mut arity, mut rest) = (0usize, idx);
        for (n, &c) in counts.iter().enumerate() {
            if rest < c {
                arity = n + 1;
                break;
            }
            rest -= c;
        }
        let points = sigma.len().pow(arity as u32);
        let mut digits = vec![0usize; points];
        let mut r = rest;
        for slot in digits.iter_mut().rev() {
            *slot = (r % base) as usize;
            r /= base;
        }
        let values: Vec<Tree> = digits.iter().map(|&d| Tree::leaf(sigma.letter(d))).collect();
        let table = FunctionTable::new(sigma.clone(), arity, values).expect("letter values");

        // The constructive shape check, independent of the grafting check.
        let is_constant = table.values().iter().all(|v| v == table.value_at(0));
        let is_projection = (0..arity).any(|pos| {
            (0..points).all(|i| {
                let tuple = tuple_of_index(i, sigma.len(), arity);
                table.value_at(i) == &Tree::leaf(sigma.letter(tuple[pos]))
            })
        });
        let survives = gcp_check(&table).is_ok();
        let classified = classify_sigma_valued(&table).expect("alphabet is large enough");
        let consistent = match &classified {
            Classification::Constant(_) => survives && is_constant,
            Classification::Projection(_) => survives && is_projection,
            Classification::NotWcp => !survives,
            Classification::NotSigmaValued => false,
        };
        if survives == (is_constant || is_projection) && consistent {
            None
        } else {
            Some(json!({
                "arity": arity,
                "values": table.values().iter().map(words).collect::<Vec<_>>(),
                "survives_gcp": survives,
                "constant": is_constant,
                "projection": is_projection,
            }))
        }
    });

    let bounds = json!({
        "alphabet": sigma.to_string(),
        "max_arity": max_arity,
        "tables": instances,
    });
    Ok(VerifyReport::finish(
        Proposition::Classification,
        bounds,
        instances,
        cx,
    ))
}

fn synthesis(opts: &VerifyOptions) -> Result<VerifyReport> {
    let sigma = &opts.alphabet;
    sigma.require_len(3)?;
    let samples = opts.samples.unwrap_or(10_000);
    let max_arity = 3;
    let body_size = 9;
    let component_size = opts.max_size.unwrap_or(4);
    let vectors_per_sample = 100;
    let instances = samples;
    guard(instances, opts.force)?;
    let seed = opts.seed;

    let cx = find_first(instances, opts.parallelism, |idx| {
        let mut rng = instance_rng(seed, idx);
        let arity = rng_range(&mut rng, max_arity as u64 + 1) as usize;
        let p = sample_polynomial(&mut rng, sigma, arity, body_size);
        let table = match FunctionTable::tabulate(&p, sigma) {
            Ok(t) => t,
            Err(e) => return Some(json!({"polynomial": poly_json(&p), "error": e.to_string()})),
        };
        let q = match synthesize(&table) {
            Ok(q) => q,
            Err(e) => return Some(json!({"polynomial": poly_json(&p), "error": e.to_string()})),
        };
        // Agreement on every letter tuple.
        for i in 0..table.len() {
            let point = table.point(i);
            if q.eval_letters(&point).expect("arity matches") != *table.value_at(i) {
                return Some(json!({
                    "polynomial": poly_json(&p),
                    "synthesized": poly_json(&q),
                    "point": point.iter().map(|l| l.as_char()).collect::<String>(),
                }));
            }
        }
        // Agreement on random tree vectors.
        for _ in 0..vectors_per_sample {
            let args: Vec<Tree> = (0..arity)
                .map(|_| sample_tree(&mut rng, sigma, component_size))
                .collect();
            if p.eval(&args).expect("arity") != q.eval(&args).expect("arity") {
                return Some(json!({
                    "polynomial": poly_json(&p),
                    "synthesized": poly_json(&q),
                    "args": args.iter().map(words).collect::<Vec<_>>(),
                }));
            }
        }
        None
    });

    let bounds = json!({
        "alphabet": sigma.to_string(),
        "samples": samples,
        "max_arity": max_arity,
        "max_body_size": body_size,
        "max_component_size": component_size,
        "vectors_per_sample": vectors_per_sample,
        "seed": seed,
    });
    Ok(VerifyReport::finish(Proposition::Synthesis, bounds, instances, cx))
}
