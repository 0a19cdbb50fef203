//! Batch command-line interface: parse JSON structure documents, run any
//! pipeline, and emit deterministic text. Exit codes: 0 success, 1
//! verification failure, 2 input error.

use crate::complex;
use crate::constructions::{
    from_greedoid, from_polymatroid, from_poset, from_rooted_graph, Poset, RankTable,
    RootedMultigraph,
};
use crate::corpus;
use crate::error::Error;
use crate::ground::GroundSet;
use crate::hopf;
use crate::invariants::{self, DescentMode};
use crate::megagreedoid::Megagreedoid;
use crate::qsym::Basis;
use crate::rational::parse_rational;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// A structure description: a name, the ordered ground labels (the
/// tie-breaking order), and one of five payload kinds. Subsets are written
/// as label lists and rationals as strings (`"3"` or `"3/2"`), never as
/// floats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDocument {
    pub name: String,
    pub order: Vec<String>,
    pub structure: StructureKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureKind {
    /// Explicit family: pairs of a feasible set and its rank.
    Explicit { family: Vec<(Vec<String>, String)> },
    /// Rooted multigraph: root label, edge pairs, optional half-edges.
    RootedGraph {
        root: String,
        edges: Vec<(String, String)>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        half_edges: Vec<String>,
    },
    /// Partial order given by relation pairs `(lower, upper)`.
    Poset { covers: Vec<(String, String)> },
    /// Full greedoid rank table: pairs of a subset and its rank.
    Greedoid { table: Vec<(Vec<String>, String)> },
    /// Full polymatroid rank table: pairs of a subset and its rank.
    Polymatroid { table: Vec<(Vec<String>, String)> },
}

/// A parsed document together with the structure it produced.
#[derive(Clone, Debug)]
pub enum BuiltStructure {
    Explicit(Megagreedoid),
    RootedGraph(RootedMultigraph, Megagreedoid),
    Poset(Poset, Megagreedoid),
    Greedoid(RankTable, Megagreedoid),
    Polymatroid(RankTable, Megagreedoid),
}

impl BuiltStructure {
    pub fn megagreedoid(&self) -> &Megagreedoid {
        match self {
            BuiltStructure::Explicit(m) => m,
            BuiltStructure::RootedGraph(_, m) => m,
            BuiltStructure::Poset(_, m) => m,
            BuiltStructure::Greedoid(_, m) => m,
            BuiltStructure::Polymatroid(_, m) => m,
        }
    }

    pub fn graph(&self) -> Option<&RootedMultigraph> {
        match self {
            BuiltStructure::RootedGraph(g, _) => Some(g),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            BuiltStructure::Explicit(_) => "explicit",
            BuiltStructure::RootedGraph(..) => "rooted_graph",
            BuiltStructure::Poset(..) => "poset",
            BuiltStructure::Greedoid(..) => "greedoid",
            BuiltStructure::Polymatroid(..) => "polymatroid",
        }
    }
}

pub fn parse_document(text: &str) -> Result<StructureDocument, Error> {
    Ok(serde_json::from_str(text)?)
}

pub fn render_document(doc: &StructureDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

fn parse_table(
    ground: &GroundSet,
    table: &[(Vec<String>, String)],
) -> Result<Vec<(crate::ground::Subset, crate::rational::Rational)>, Error> {
    table
        .iter()
        .map(|(labels, value)| {
            Ok((
                ground.subset_of_labels(labels)?,
                parse_rational(value)?,
            ))
        })
        .collect()
}

/// Validate and build: all ingestion checks (axioms, greedoid and
/// polymatroid validity, connectivity, poset closure) run here.
pub fn build(doc: &StructureDocument) -> Result<BuiltStructure, Error> {
    let ground = GroundSet::new(doc.order.clone())?;
    match &doc.structure {
        StructureKind::Explicit { family } => {
            let entries = parse_table(&ground, family)?;
            Ok(BuiltStructure::Explicit(Megagreedoid::new(ground, entries)?))
        }
        StructureKind::RootedGraph {
            root,
            edges,
            half_edges,
        } => {
            let edge_refs: Vec<(&str, &str)> = edges
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .collect();
            let half_refs: Vec<&str> = half_edges.iter().map(String::as_str).collect();
            let graph = RootedMultigraph::new(ground, root.clone(), &edge_refs, &half_refs)?;
            let mega = from_rooted_graph(&graph)?;
            Ok(BuiltStructure::RootedGraph(graph, mega))
        }
        StructureKind::Poset { covers } => {
            let poset = Poset::new(ground, covers)?;
            let mega = from_poset(&poset)?;
            Ok(BuiltStructure::Poset(poset, mega))
        }
        StructureKind::Greedoid { table } => {
            let entries = parse_table(&ground, table)?;
            let table = RankTable::new(ground, &entries)?;
            let mega = from_greedoid(&table)?;
            Ok(BuiltStructure::Greedoid(table, mega))
        }
        StructureKind::Polymatroid { table } => {
            let entries = parse_table(&ground, table)?;
            let table = RankTable::new(ground, &entries)?;
            let mega = from_polymatroid(&table)?;
            Ok(BuiltStructure::Polymatroid(table, mega))
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "megagreedoid",
    about = "Exact computations on feasible set families with rational ranks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    F,
    M,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DescentModeArg {
    /// Descent sets read off the certified shelling (the authoritative ones).
    Shelling,
    /// Local greedy-swap conditions (diagnostic).
    Swap,
    /// Local chain-comparison conditions (diagnostic).
    Literal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a document and report axiom violations.
    Check { document: String },
    /// The invariant in the fundamental (F) or monomial (M) basis.
    Chi {
        document: String,
        #[arg(long, value_enum, default_value = "f", ignore_case = true)]
        basis: BasisArg,
    },
    /// The counting polynomial, or its values at given points.
    Poly {
        document: String,
        #[arg(long = "at", allow_negative_numbers = true)]
        at: Vec<i64>,
    },
    /// Feasible permutations in greedy order.
    Perms {
        document: String,
        /// Also print the descent set of each permutation.
        #[arg(long)]
        descents: bool,
        /// Which descent sets to print.
        #[arg(
            long = "descent-mode",
            value_enum,
            default_value = "shelling",
            ignore_case = true
        )]
        descent_mode: DescentModeArg,
    },
    /// Classify one function, or count generic functions with n colors.
    Generic {
        document: String,
        /// Comma-separated values in ground order, e.g. "1,2,3,2".
        #[arg(long = "fn")]
        function: Option<String>,
        /// Number of colors to count generic functions for.
        #[arg(long)]
        count: Option<i64>,
    },
    /// Verify the greedy shelling and print the certificate.
    Shelling { document: String },
    /// Evaluate (-1)^|I| chi(-n).
    Reciprocity {
        document: String,
        #[arg(long)]
        n: i64,
    },
    /// Count acyclic orientations in which every vertex reaches the root.
    Orientations { document: String },
    /// The antipode as a formal sum.
    Antipode { document: String },
    /// Verify the product/coproduct axioms on this document.
    HopfVerify { document: String },
    /// Run the full cross-check battery and print a pass/fail table.
    Oracle {
        document: String,
        #[arg(long = "max-n")]
        max_n: Option<i64>,
    },
    /// Emit reproducible random instance documents as a JSON array.
    Corpus {
        #[arg(long)]
        seed: u64,
        /// How many instances to generate.
        #[arg(long)]
        size: usize,
    },
}

/// Run the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own help/version output with code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load(document: &str) -> Result<BuiltStructure, Error> {
    let text = std::fs::read_to_string(document)?;
    let doc = parse_document(&text)?;
    build(&doc)
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Check { document } => {
            let text = std::fs::read_to_string(&document)?;
            let doc = parse_document(&text)?;
            match build(&doc) {
                Ok(built) => {
                    let m = built.megagreedoid();
                    println!(
                        "ok: {} ({}): |I| = {}, |family| = {}",
                        doc.name,
                        built.kind_name(),
                        m.size(),
                        m.family().len()
                    );
                    Ok(0)
                }
                Err(Error::AxiomFailure { report }) => {
                    println!("fail: {}", doc.name);
                    println!("{report}");
                    Ok(1)
                }
                Err(
                    e @ (Error::InvalidGreedoid { .. }
                    | Error::InvalidPolymatroid { .. }
                    | Error::InvalidPoset { .. }
                    | Error::DisconnectedGraph { .. }),
                ) => {
                    println!("fail: {}", doc.name);
                    println!("{e}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Chi { document, basis } => {
            let built = load(&document)?;
            let m = built.megagreedoid();
            let chi = match basis {
                BasisArg::F => invariants::chi_fundamental(m),
                BasisArg::M => invariants::chi_flag(m),
            };
            println!("{}", chi.render());
            Ok(0)
        }
        Command::Poly { document, at } => {
            let built = load(&document)?;
            let poly = invariants::chi_fundamental(built.megagreedoid()).counting_polynomial();
            if at.is_empty() {
                println!("{poly}");
            } else {
                for n in at {
                    println!("{}", poly.eval(n));
                }
            }
            Ok(0)
        }
        Command::Perms {
            document,
            descents,
            descent_mode,
        } => {
            let built = load(&document)?;
            let m = built.megagreedoid();
            let shelling_sets: std::collections::BTreeMap<Vec<usize>, u16> = match descent_mode {
                DescentModeArg::Shelling if descents => complex::verify_shelling(m)?
                    .steps
                    .iter()
                    .map(|s| (s.permutation.clone(), s.restriction.cardinality_mask()))
                    .collect(),
                _ => Default::default(),
            };
            for perm in m.feasible_permutations() {
                let word: String = perm
                    .iter()
                    .map(|&i| m.ground().label(i).to_string())
                    .collect::<Vec<_>>()
                    .join("");
                if descents {
                    let mask = match descent_mode {
                        DescentModeArg::Shelling => shelling_sets[&perm],
                        DescentModeArg::Swap => {
                            invariants::descents_with_mode(m, &perm, DescentMode::GreedySwap)?
                                .descent_mask
                        }
                        DescentModeArg::Literal => {
                            invariants::descents_with_mode(m, &perm, DescentMode::ChainLiteral)?
                                .descent_mask
                        }
                    };
                    let set = (1..=16)
                        .filter(|p| mask & (1 << (p - 1)) != 0)
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    println!("{word} {{{set}}}");
                } else {
                    println!("{word}");
                }
            }
            Ok(0)
        }
        Command::Generic {
            document,
            function,
            count,
        } => {
            let built = load(&document)?;
            let m = built.megagreedoid();
            match (function, count) {
                (Some(values), None) => {
                    let parsed: Result<Vec<i64>, _> =
                        values.split(',').map(|v| v.trim().parse::<i64>()).collect();
                    let parsed = parsed.map_err(|_| Error::BadDocument {
                        reason: format!("cannot parse function values `{values}`"),
                    })?;
                    println!("feasible: {}", invariants::is_feasible_function(m, &parsed)?);
                    println!(
                        "strongly_feasible: {}",
                        invariants::is_strongly_feasible_function(m, &parsed)?
                    );
                    println!("generic: {}", invariants::is_generic_function(m, &parsed)?);
                    Ok(0)
                }
                (None, Some(n)) => {
                    println!(
                        "{}",
                        invariants::chi_fundamental(m).count_specialize(n)
                    );
                    Ok(0)
                }
                _ => Err(Error::BadDocument {
                    reason: "pass exactly one of --fn or --count".into(),
                }),
            }
        }
        Command::Shelling { document } => {
            let built = load(&document)?;
            let m = built.megagreedoid();
            let cert = complex::verify_shelling(m)?;
            for step in &cert.steps {
                let word: String = step
                    .permutation
                    .iter()
                    .map(|&i| m.ground().label(i).to_string())
                    .collect::<Vec<_>>()
                    .join("");
                let mask = step.restriction.cardinality_mask();
                let set = (1..=16)
                    .filter(|p| mask & (1 << (p - 1)) != 0)
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                println!(
                    "{word} des={{{set}}} min={}",
                    step.restriction.render(m)
                );
            }
            Ok(0)
        }
        Command::Reciprocity { document, n } => {
            let built = load(&document)?;
            println!("{}", invariants::reciprocity_eval(built.megagreedoid(), n));
            Ok(0)
        }
        Command::Orientations { document } => {
            let built = load(&document)?;
            let graph = built.graph().ok_or_else(|| Error::BadDocument {
                reason: "orientations requires a rooted_graph document".into(),
            })?;
            println!("{}", invariants::count_rooted_acyclic_orientations(graph)?);
            Ok(0)
        }
        Command::Antipode { document } => {
            let built = load(&document)?;
            println!("{}", hopf::antipode(built.megagreedoid()).render());
            Ok(0)
        }
        Command::HopfVerify { document } => {
            let built = load(&document)?;
            Ok(run_hopf_verify(built.megagreedoid()))
        }
        Command::Oracle { document, max_n } => {
            let built = load(&document)?;
            Ok(run_oracle(built.megagreedoid(), max_n))
        }
        Command::Corpus { seed, size } => {
            let instances = corpus::generate(seed, size);
            let docs: Vec<&StructureDocument> = instances.iter().map(|i| &i.document).collect();
            println!("{}", serde_json::to_string_pretty(&docs).expect("serialize"));
            Ok(0)
        }
    }
}

fn report_line(name: &str, pass: bool) -> bool {
    println!("{name}: {}", if pass { "pass" } else { "FAIL" });
    pass
}

fn run_hopf_verify(m: &Megagreedoid) -> i32 {
    let mut all = true;
    all &= report_line(
        "coassociativity",
        hopf::check_coassociativity(m).is_ok(),
    );
    let doubled_labels: Vec<String> = (0..m.size()).map(|i| format!("y{i}")).collect();
    let partner = m.with_labels(&doubled_labels).expect("same size");
    let product = m.direct_sum(&partner).expect("disjoint labels");
    all &= report_line(
        "compatibility (with a relabeled copy)",
        hopf::check_compatibility(m, &partner, &product).is_ok(),
    );
    all &= report_line(
        "character multiplicativity (with a relabeled copy)",
        hopf::check_character_multiplicativity(m, &partner).is_ok(),
    );
    let convolution = hopf::antipode_convolution(m);
    let convolution_ok = if m.size() == 0 {
        convolution.terms().count() == 1
    } else {
        convolution.is_zero()
    };
    all &= report_line("antipode convolution identity", convolution_ok);
    if m.size() <= 4 {
        all &= report_line(
            "antipode matches the composition expansion",
            hopf::antipode(m) == hopf::antipode_takeuchi(m),
        );
    }
    if all {
        0
    } else {
        1
    }
}

fn run_oracle(m: &Megagreedoid, max_n: Option<i64>) -> i32 {
    let mut all = true;
    let chi = invariants::chi_fundamental(m);
    let flag = invariants::chi_flag(m);
    all &= report_line("chi_flag converts to chi_F", flag.to_basis(Basis::F) == chi);
    all &= report_line(
        "face enumeration equals the flag formula",
        complex::face_qsym(m) == flag,
    );
    match complex::verify_shelling(m) {
        Ok(cert) => {
            all &= report_line(
                "shelling certificate is valid with one facet per permutation",
                cert.steps.len() == m.feasible_permutations().len(),
            );
            all &= report_line(
                "shelling expansion equals chi_F",
                complex::shelling_qsym(&cert) == chi,
            );
        }
        Err(_) => {
            all &= report_line("shelling certificate", false);
        }
    }
    let coefficients_ok = chi.terms().all(|(_, c)| c.is_integer() && *c >= crate::rational::rat(0));
    let total: crate::rational::Rational = chi
        .terms()
        .map(|(_, c)| c.clone())
        .fold(crate::rational::rat(0), |a, b| a + b);
    let perm_count = crate::rational::rat(m.feasible_permutations().len() as i64);
    all &= report_line(
        "chi_F coefficients are nonnegative integers summing to the permutation count",
        coefficients_ok && total == perm_count,
    );
    let limit = max_n.unwrap_or(m.size() as i64 + 1).max(1);
    for n in 1..=limit {
        let counted = invariants::oracle_count_generic(m, n);
        let predicted = chi.count_specialize(n);
        all &= report_line(
            &format!("generic count at n={n} ({counted})"),
            predicted == crate::rational::rat(counted as i64),
        );
    }
    let mut convolution_ok = true;
    for n in 0..=2i64 {
        for k in 0..=2i64 {
            convolution_ok &= invariants::convolution_check(m, n, k);
        }
    }
    all &= report_line("minor convolution identity (n,k <= 2)", convolution_ok);
    if all {
        0
    } else {
        1
    }
}
