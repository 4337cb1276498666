//! `treealg` — batch JSON interface to the binary-tree term algebra.
//!
//! Every command reads one JSON document from stdin (or `--in <path>`),
//! writes one JSON document to stdout, and exits 0 on success, 1 on domain
//! errors (reported as `{"error": CODE, ...}`), 2 on malformed input.
//! Identical inputs and flags produce byte-identical output.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use tree_algebra::json::{error_json, PolynomialDoc, TableDoc, TreeDoc};
use tree_algebra::{
    classify_sigma_valued, gcp_check, run_all, run_proposition, similar, synthesize, Alphabet,
    Classification, Endomorphism, Error, Parallelism, Proposition, Tree, VerifyOptions,
    VerifyReport, WordSet,
};

#[derive(Parser)]
#[command(name = "treealg", version, about = "Binary-tree term algebra toolkit")]
struct Cli {
    /// Alphabet used when the input document carries none.
    #[arg(long, global = true, default_value = "abc")]
    alphabet: String,

    /// Read the input JSON from a file instead of stdin.
    #[arg(long, global = true, value_name = "PATH")]
    r#in: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial at a vector of tree arguments.
    Eval,
    /// Reconstruct the polynomial representing a congruence-preserving table.
    Synth,
    /// Check a function table for weakened congruence preservation.
    CheckWcp,
    /// Classify a letter-valued table as a constant, a projection, or neither.
    Classify,
    /// Apply a grafting to a tree.
    Graft,
    /// Split a tree into its unique pair of children.
    Decompose,
    /// List every tree up to a size bound.
    EnumTrees {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Run brute-force verification of the algebra's propositions.
    Verify {
        /// Proposition id, or `all`.
        #[arg(long, default_value = "all")]
        proposition: String,
        /// Override the proposition's primary size bound.
        #[arg(long)]
        max_size: Option<usize>,
        /// Seed for sampled instance spaces.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the instance scan; 1 forces a sequential run.
        #[arg(long)]
        jobs: Option<usize>,
        /// Run even when the instance count exceeds the budget.
        #[arg(long)]
        force: bool,
    },
    /// Decide whether two trees have the same skeleton.
    Similar,
}

/// Command outcomes, ordered by exit code.
enum Failure {
    /// Domain error: valid JSON in, refused by the algebra. Exit 1.
    Domain(Error),
    /// A verification report came back FAIL. Exit 1 with the report.
    VerifyFailed(Value),
    /// Unreadable or schema-violating input. Exit 2.
    Malformed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(error)) => {
            println!("{}", error_json(&error));
            ExitCode::from(1)
        }
        Err(Failure::VerifyFailed(report)) => {
            println!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Malformed(message)) => {
            println!("{}", json!({"error": "MALFORMED_INPUT", "message": message}));
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Eval => eval(cli),
        Command::Synth => synth(cli),
        Command::CheckWcp => check_wcp(cli),
        Command::Classify => classify(cli),
        Command::Graft => graft(cli),
        Command::Decompose => decompose(cli),
        Command::EnumTrees { max_size } => enum_trees(cli, *max_size),
        Command::Verify {
            proposition,
            max_size,
            seed,
            jobs,
            force,
        } => verify(cli, proposition, *max_size, *seed, *jobs, *force),
        Command::Similar => similar_cmd(cli),
    }
}

fn flag_alphabet(cli: &Cli) -> Result<Alphabet, Failure> {
    Alphabet::from_str(&cli.alphabet).map_err(|e| Failure::Malformed(e.to_string()))
}

fn read_input(cli: &Cli) -> Result<String, Failure> {
    match &cli.r#in {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| Failure::Malformed(format!("cannot read stdin: {e}")))?;
            Ok(buffer)
        }
    }
}

fn parse_input<T: for<'de> Deserialize<'de>>(cli: &Cli) -> Result<T, Failure> {
    let text = read_input(cli)?;
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(e.to_string()))
}

fn words_to_tree(words: &[String], alphabet: &Alphabet) -> Result<Tree, Failure> {
    Ok(WordSet::from_words(words.iter().cloned())?.to_tree(alphabet)?)
}

#[derive(Deserialize)]
struct EvalInput {
    polynomial: PolynomialDoc,
    args: Vec<Vec<String>>,
}

fn eval(cli: &Cli) -> Result<String, Failure> {
    let alphabet = flag_alphabet(cli)?;
    let input: EvalInput = parse_input(cli)?;
    let poly = input.polynomial.parse(&alphabet)?;
    let args = input
        .args
        .iter()
        .map(|words| words_to_tree(words, &alphabet))
        .collect::<Result<Vec<Tree>, Failure>>()?;
    let result = poly.eval(&args)?;
    Ok(to_line(&TreeDoc::new(&alphabet, &result)))
}

fn synth(cli: &Cli) -> Result<String, Failure> {
    let doc: TableDoc = parse_input(cli)?;
    let table = doc.parse()?;
    let poly = synthesize(&table)?;
    Ok(to_line(&PolynomialDoc::new(&poly)))
}

fn check_wcp(cli: &Cli) -> Result<String, Failure> {
    let doc: TableDoc = parse_input(cli)?;
    let table = doc.parse()?;
    match gcp_check(&table) {
        Ok(()) => Ok(json!({"wcp": true}).to_string()),
        Err(witness) => Err(Failure::Domain(Error::NotWcp { witness })),
    }
}

fn classify(cli: &Cli) -> Result<String, Failure> {
    let doc: TableDoc = parse_input(cli)?;
    let table = doc.parse()?;
    let value = match classify_sigma_valued(&table)? {
        Classification::Constant(tree) => json!({
            "classification": "constant",
            "value": WordSet::from_tree(&tree).words(),
        }),
        Classification::Projection(index) => json!({
            "classification": "projection",
            "index": index,
        }),
        Classification::NotSigmaValued => json!({"classification": "not-sigma-valued"}),
        Classification::NotWcp => json!({"classification": "not-wcp"}),
    };
    Ok(value.to_string())
}

#[derive(Deserialize)]
struct GraftInput {
    letter: String,
    tau: Vec<String>,
    tree: Vec<String>,
}

fn graft(cli: &Cli) -> Result<String, Failure> {
    let alphabet = flag_alphabet(cli)?;
    let input: GraftInput = parse_input(cli)?;
    let letter = alphabet.parse_letter(&input.letter)?;
    let tau = words_to_tree(&input.tau, &alphabet)?;
    let tree = words_to_tree(&input.tree, &alphabet)?;
    let grafting = Endomorphism::grafting(alphabet.clone(), letter, tau);
    Ok(to_line(&TreeDoc::new(&alphabet, &grafting.apply(&tree))))
}

/// Trees arrive either as the full document or as a bare word array
/// interpreted over the `--alphabet` flag.
#[derive(Deserialize)]
#[serde(untagged)]
enum TreeInput {
    Doc(TreeDoc),
    Words(Vec<String>),
}

impl TreeInput {
    fn resolve(self, fallback: &Alphabet) -> Result<(Alphabet, Tree), Failure> {
        match self {
            TreeInput::Doc(doc) => Ok(doc.parse()?),
            TreeInput::Words(words) => {
                let tree = words_to_tree(&words, fallback)?;
                Ok((fallback.clone(), tree))
            }
        }
    }
}

fn decompose(cli: &Cli) -> Result<String, Failure> {
    let fallback = flag_alphabet(cli)?;
    let input: TreeInput = parse_input(cli)?;
    let (alphabet, tree) = input.resolve(&fallback)?;
    let (left, right) = tree.decompose()?;
    Ok(json!({
        "alphabet": alphabet.to_string(),
        "left": WordSet::from_tree(&left).words(),
        "right": WordSet::from_tree(&right).words(),
    })
    .to_string())
}

fn enum_trees(cli: &Cli, max_size: usize) -> Result<String, Failure> {
    let alphabet = flag_alphabet(cli)?;
    let trees = tree_algebra::enumerate::enumerate_trees(&alphabet, max_size);
    let words: Vec<Vec<String>> = trees
        .iter()
        .map(|t| WordSet::from_tree(t).words().to_vec())
        .collect();
    Ok(json!({
        "alphabet": alphabet.to_string(),
        "max_size": max_size,
        "count": words.len(),
        "trees": words,
    })
    .to_string())
}

fn verify(
    cli: &Cli,
    proposition: &str,
    max_size: Option<usize>,
    seed: u64,
    jobs: Option<usize>,
    force: bool,
) -> Result<String, Failure> {
    let alphabet = flag_alphabet(cli)?;
    let parallelism = match jobs {
        Some(1) => Parallelism::Sequential,
        Some(n) => Parallelism::Parallel(Some(n)),
        None => Parallelism::Parallel(None),
    };
    let opts = VerifyOptions {
        alphabet,
        max_size,
        samples: None,
        seed,
        parallelism,
        force,
    };
    if proposition == "all" {
        let reports = run_all(&opts)?;
        let value = serde_json::to_value(&reports).expect("reports serialize");
        if reports.iter().all(VerifyReport::is_pass) {
            Ok(value.to_string())
        } else {
            Err(Failure::VerifyFailed(value))
        }
    } else {
        let prop: Proposition = proposition.parse()?;
        let report = run_proposition(prop, &opts)?;
        let value = serde_json::to_value(&report).expect("report serializes");
        if report.is_pass() {
            Ok(value.to_string())
        } else {
            Err(Failure::VerifyFailed(value))
        }
    }
}

#[derive(Deserialize)]
struct SimilarInput {
    #[serde(default)]
    alphabet: Option<String>,
    t1: Vec<String>,
    t2: Vec<String>,
}

fn similar_cmd(cli: &Cli) -> Result<String, Failure> {
    let input: SimilarInput = parse_input(cli)?;
    let alphabet = match &input.alphabet {
        Some(s) => Alphabet::from_str(s)?,
        None => flag_alphabet(cli)?,
    };
    let t1 = words_to_tree(&input.t1, &alphabet)?;
    let t2 = words_to_tree(&input.t2, &alphabet)?;
    Ok(json!({"similar": similar(&alphabet, &t1, &t2)}).to_string())
}

fn to_line<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize")
}
