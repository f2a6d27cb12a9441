//! Command-line front end for the partition-algebra library.
//!
//! Subcommands: `table`, `verify`, `mult`, `convert`, `phi`, `bratteli`,
//! `bijection`, `char`, `dims`. Exit codes: 0 success, 1 verification
//! failure, 2 usage error, 3 budget exceeded.

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use num::One;
use partalg::algebra::{AlgebraElement, Basis, OrbitProductMode};
use partalg::characters::{
    half_multiplicity, multiplicity, partition_algebra_character, MultiplicityMethod,
};
use partalg::combinatorics::{bell, integer_partitions, restricted_bell, IntegerPartition};
use partalg::setpart::SetPartition;
use partalg::tableaux::{
    bijection_a_with_trace, bijection_b, build_bratteli, SetPartitionTableau, TabBox,
};
use partalg::tensorrep::{
    half_image_dimension, image_dimension_with_budget, phi_with_budget, Budget,
};
use partalg::{Error, Rational};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "partalg",
    version,
    about = "Exact computations in partition algebras P_k(n)"
)]
struct Cli {
    /// Symmetric-group parameter n.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Level k: an integer "3", a decimal half-integer "2.5", or a fraction "5/2".
    #[arg(long, global = true)]
    k: Option<String>,

    /// Basis for bare-partition element inputs.
    #[arg(long, global = true, value_enum, default_value_t = BasisArg::Diagram)]
    basis: BasisArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Maximum matrix dimension / vectorized length.
    #[arg(long, global = true, default_value_t = 20_000)]
    budget: usize,

    /// Maximum diagram-basis size for ideal-span computations.
    #[arg(long, global = true, default_value_t = 250)]
    ideal_budget: usize,

    /// Seed for the randomized verification checks.
    #[arg(long, global = true, default_value_t = 20170920)]
    seed: u64,

    /// Orbit-product truncation mode.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Abstract)]
    mode: ModeArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Diagram,
    Orbit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Abstract,
    Image,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the table of restricted Bell numbers B(2k, n) with the B(2k) column.
    Table {
        /// Largest k row (half-integers allowed), default 6.
        #[arg(long, default_value = "6")]
        max_k: String,
        /// Largest n column, default 8.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Run a named invariant suite and emit a JSON report.
    Verify {
        /// bases | homomorphism | idempotents | kernel | bijection | characters | identities | all
        suite: String,
    },
    /// Multiply two elements (diagram rule, or orbit rule with --basis orbit).
    Mult { a: String, b: String },
    /// Rewrite an element in the other basis.
    Convert { element: String },
    /// Matrix of an element on tensor space.
    Phi { element: String },
    /// Bratteli diagram of (S_n, S_{n-1}) up to level --k.
    Bratteli,
    /// Run the tableau bijection on a set partition or a tableau (JSON rows).
    Bijection { input: String },
    /// Character value xi_lambda(gamma_mu) for P_k(n), n >= 2k; without
    /// --lambda, the full character table of S_n.
    Char {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value = "[]")]
        mu: String,
    },
    /// Dimension data at level k: counts, ranks, and per-shape multiplicities.
    Dims,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(Error::BudgetExceeded(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Parses "3", "2.5", or "5/2" into two_k.
fn parse_two_k(s: &str) -> Result<usize, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("cannot read k from {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: usize = num.trim().parse().map_err(|_| bad())?;
        let den: usize = den.trim().parse().map_err(|_| bad())?;
        if den == 2 {
            return Ok(num);
        }
        if den == 1 {
            return Ok(2 * num);
        }
        return Err(bad());
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let whole: usize = whole.trim().parse().map_err(|_| bad())?;
        return match frac.trim() {
            "5" => Ok(2 * whole + 1),
            "0" | "" => Ok(2 * whole),
            _ => Err(bad()),
        };
    }
    let whole: usize = s.parse().map_err(|_| bad())?;
    Ok(2 * whole)
}

fn format_k(two_k: usize) -> String {
    if two_k.is_multiple_of(2) {
        format!("{}", two_k / 2)
    } else {
        format!("{two_k}/2")
    }
}

fn budget_of(cli: &Cli) -> Budget {
    Budget {
        max_rows: cli.budget,
        max_ideal_basis: cli.ideal_budget,
    }
}

fn require_n(cli: &Cli) -> Result<usize, Error> {
    cli.n
        .ok_or_else(|| Error::Parse("--n is required for this command".into()))
}

/// Reads an element from inline JSON, an @file, or a bare partition string
/// (single basis element with coefficient one).
fn parse_element(cli: &Cli, spec: &str) -> Result<AlgebraElement, Error> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        return parse_element(cli, &content);
    }
    if spec.starts_with('{') {
        let v: serde_json::Value =
            serde_json::from_str(spec).map_err(|e| Error::Parse(e.to_string()))?;
        return AlgebraElement::from_json(&v);
    }
    let n = require_n(cli)?;
    let key = SetPartition::parse(spec)?;
    let two_k = match &cli.k {
        Some(k) => parse_two_k(k)?,
        None => {
            if key.ground_size() % 2 != 0 {
                return Err(Error::Parse(
                    "partition has odd size; pass --k explicitly".into(),
                ));
            }
            key.ground_size()
        }
    };
    let ground = partalg::algebra::ground_size(two_k);
    let key = if key.ground_size() < ground {
        let mut blocks = key.blocks();
        for e in key.ground_size() + 1..=ground {
            blocks.push(vec![e]);
        }
        SetPartition::from_blocks(ground, &blocks)?
    } else {
        key
    };
    let basis = match cli.basis {
        BasisArg::Diagram => Basis::Diagram,
        BasisArg::Orbit => Basis::Orbit,
    };
    AlgebraElement::single(basis, two_k, n, key, Rational::one())
}

fn meta_comment(cli: &Cli, context: &str) -> String {
    let k = cli.k.as_deref().unwrap_or("-");
    let n = cli.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
    let basis = match cli.basis {
        BasisArg::Diagram => "diagram",
        BasisArg::Orbit => "orbit",
    };
    format!("# partalg {VERSION} | {context} | k={k} n={n} basis={basis}")
}

fn meta_json(cli: &Cli, context: &str) -> serde_json::Value {
    serde_json::json!({
        "version": VERSION,
        "command": context,
        "k": cli.k,
        "n": cli.n,
        "seed": cli.seed,
    })
}

fn print_element(cli: &Cli, e: &AlgebraElement, context: &str) {
    match cli.format {
        FormatArg::Json => {
            let mut v = e.to_json();
            v["meta"] = meta_json(cli, context);
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        FormatArg::Csv => {
            println!("{}", meta_comment(cli, context));
            println!("partition,coeff");
            for (key, coeff) in e.terms() {
                println!("\"{key}\",{coeff}");
            }
        }
        _ => {
            println!("{}", meta_comment(cli, context));
            println!("{e}");
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Table { max_k, max_n } => cmd_table(cli, max_k, *max_n),
        Command::Verify { suite } => verify::cmd_verify(cli, suite),
        Command::Mult { a, b } => {
            let ea = parse_element(cli, a)?;
            let eb = parse_element(cli, b)?;
            let product = match cli.basis {
                BasisArg::Diagram => ea.multiply(&eb)?,
                BasisArg::Orbit => {
                    let mode = match cli.mode {
                        ModeArg::Abstract => OrbitProductMode::Abstract,
                        ModeArg::Image => OrbitProductMode::Image,
                    };
                    ea.multiply_orbit(&eb, mode)?
                }
            };
            print_element(cli, &product, "mult");
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { element } => {
            let e = parse_element(cli, element)?;
            let converted = match e.basis() {
                Basis::Diagram => e.to_orbit(),
                Basis::Orbit => e.to_diagram(),
            };
            print_element(cli, &converted, "convert");
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi { element } => {
            let e = parse_element(cli, element)?;
            let n = e.n();
            let m = phi_with_budget(&e, n, &budget_of(cli))?;
            match cli.format {
                FormatArg::Json => {
                    let mut v = m.to_json(e.two_k(), n);
                    v["meta"] = meta_json(cli, "phi");
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    println!("{}", meta_comment(cli, &format!("phi dim={}", m.dim())));
                    print!("{}", m.to_coord_text());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bratteli => cmd_bratteli(cli),
        Command::Bijection { input } => cmd_bijection(cli, input),
        Command::Char { lambda, mu } => {
            let n = require_n(cli)?;
            let Some(lambda) = lambda else {
                return cmd_character_table(cli, n);
            };
            let two_k = parse_two_k(
                cli.k
                    .as_deref()
                    .ok_or_else(|| Error::Parse("--k is required".into()))?,
            )?;
            if two_k % 2 != 0 {
                return Err(Error::Parse(
                    "character values are defined at integer k".into(),
                ));
            }
            let k = two_k / 2;
            let lambda = IntegerPartition::parse(lambda)?;
            let mu = IntegerPartition::parse(mu)?;
            let value = partition_algebra_character(&lambda, &mu, k, n)?;
            match cli.format {
                FormatArg::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "meta": meta_json(cli, "char"),
                            "lambda": lambda.to_json(),
                            "mu": mu.to_json(),
                            "k": k,
                            "n": n,
                            "value": value.to_string(),
                        }))
                        .unwrap()
                    );
                }
                FormatArg::Csv => {
                    println!("{}", meta_comment(cli, "char"));
                    println!("lambda,mu,k,n,value");
                    println!("\"{lambda}\",\"{mu}\",{k},{n},{value}");
                }
                _ => {
                    println!("{}", meta_comment(cli, "char"));
                    println!("xi_{lambda}(gamma_{mu}) = {value}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims => cmd_dims(cli),
    }
}

/// The irreducible character table of S_n: rows indexed by shapes, columns
/// by cycle types.
fn cmd_character_table(cli: &Cli, n: usize) -> Result<ExitCode, Error> {
    use partalg::characters::{conjugacy_classes, irreducible_character};
    let classes = conjugacy_classes(n);
    let shapes = integer_partitions(n);
    let mut rows = Vec::new();
    for lam in &shapes {
        let values = classes
            .iter()
            .map(|c| irreducible_character(lam, &c.delta).map(|v| v.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((lam.to_string(), values));
    }
    match cli.format {
        FormatArg::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "meta": meta_json(cli, "char-table"),
                    "n": n,
                    "classes": classes
                        .iter()
                        .map(|c| serde_json::json!({
                            "delta": c.delta.to_json(),
                            "size": c.size.to_string(),
                            "z": c.z.to_string(),
                        }))
                        .collect::<Vec<_>>(),
                    "rows": rows
                        .iter()
                        .map(|(lam, values)| serde_json::json!({
                            "lambda": lam,
                            "values": values,
                        }))
                        .collect::<Vec<_>>(),
                }))
                .unwrap()
            );
        }
        _ => {
            println!("{}", meta_comment(cli, "char-table"));
            let header: Vec<String> = std::iter::once("lambda".to_string())
                .chain(classes.iter().map(|c| format!("\"{}\"", c.delta)))
                .collect();
            println!("{}", header.join(","));
            for (lam, values) in rows {
                println!("\"{lam}\",{}", values.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(cli: &Cli, max_k: &str, max_n: usize) -> Result<ExitCode, Error> {
    let max_two_k = parse_two_k(max_k)?;
    let ns: Vec<usize> = (2..=max_n).collect();
    let mut rows = Vec::new();
    for two_k in 1..=max_two_k {
        let values: Vec<String> = ns
            .iter()
            .map(|&n| restricted_bell(two_k, n).to_string())
            .collect();
        rows.push((format_k(two_k), values, bell(two_k).to_string()));
    }
    match cli.format {
        FormatArg::Json => {
            let v = serde_json::json!({
                "meta": meta_json(cli, "table"),
                "columns": ns,
                "rows": rows
                    .iter()
                    .map(|(k, values, b)| serde_json::json!({
                        "k": k,
                        "values": values,
                        "bell": b,
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            println!("{}", meta_comment(cli, "table"));
            let header: Vec<String> = std::iter::once("k".to_string())
                .chain(ns.iter().map(|n| format!("B(2k,{n})")))
                .chain(std::iter::once("B(2k)".to_string()))
                .collect();
            println!("{}", header.join(","));
            for (k, values, b) in rows {
                println!("{k},{},{b}", values.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bratteli(cli: &Cli) -> Result<ExitCode, Error> {
    let n = require_n(cli)?;
    let max_two_level = match &cli.k {
        Some(k) => parse_two_k(k)?,
        None => 2 * n,
    };
    let diagram = build_bratteli(n, max_two_level)?;
    match cli.format {
        FormatArg::Dot => {
            println!("// {}", meta_comment(cli, "bratteli"));
            print!("{}", diagram.to_dot());
        }
        FormatArg::Json => {
            let levels: Vec<serde_json::Value> = (0..=diagram.max_two_level())
                .map(|lvl| {
                    let vertices: Vec<serde_json::Value> = diagram
                        .vertices(lvl)
                        .unwrap()
                        .iter()
                        .map(|(shape, count)| {
                            serde_json::json!({
                                "shape": shape.to_json(),
                                "paths": count.to_string(),
                            })
                        })
                        .collect();
                    serde_json::json!({ "level": format_k(lvl), "vertices": vertices })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "meta": meta_json(cli, "bratteli"),
                    "n": n,
                    "levels": levels,
                }))
                .unwrap()
            );
        }
        _ => {
            println!("{}", meta_comment(cli, "bratteli"));
            for lvl in 0..=diagram.max_two_level() {
                let line: Vec<String> = diagram
                    .vertices(lvl)
                    .unwrap()
                    .iter()
                    .map(|(shape, count)| format!("{shape}:{count}"))
                    .collect();
                println!("k={}\t{}", format_k(lvl), line.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bijection(cli: &Cli, input: &str) -> Result<ExitCode, Error> {
    let input = input.trim();
    let spt = if input.starts_with("[[") {
        SetPartitionTableau::from_json(
            &serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?,
        )?
    } else {
        // A set partition of [1, k'] becomes a one-row tableau of shape [n].
        let n = require_n(cli)?;
        let pi = SetPartition::parse(input)?;
        if pi.block_count() > n {
            return Err(Error::Parse(format!(
                "partition has {} blocks; at most n = {n} are allowed",
                pi.block_count()
            )));
        }
        let mut boxes = vec![TabBox::Zero; n - pi.block_count()];
        let mut blocks = pi.blocks();
        blocks.sort_by_key(|b| *b.last().unwrap());
        boxes.extend(blocks.into_iter().map(TabBox::block));
        SetPartitionTableau::new(vec![boxes])?
    };
    let (vt, trace) = bijection_a_with_trace(&spt)?;
    let back = bijection_b(&vt)?;
    let round_trip = back == spt;
    match cli.format {
        FormatArg::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "meta": meta_json(cli, "bijection"),
                    "tableau": spt.to_json(),
                    "vacillating": vt.to_json(),
                    "set_partition": spt
                        .associated_set_partition()
                        .map(|p| p.to_string()),
                    "round_trip": round_trip,
                }))
                .unwrap()
            );
        }
        _ => {
            println!("{}", meta_comment(cli, "bijection"));
            println!("tableau: {spt}");
            if let Some(p) = spt.associated_set_partition() {
                println!("set partition: {p}");
            }
            println!("vacillating: {vt}");
            println!("round trip: {}", if round_trip { "ok" } else { "FAILED" });
            println!("{trace}");
        }
    }
    if round_trip {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_dims(cli: &Cli) -> Result<ExitCode, Error> {
    let n = require_n(cli)?;
    let two_k = parse_two_k(
        cli.k
            .as_deref()
            .ok_or_else(|| Error::Parse("--k is required".into()))?,
    )?;
    let budget = budget_of(cli);
    let expected = restricted_bell(two_k, n);
    let rank: Option<usize> = if two_k % 2 == 0 {
        image_dimension_with_budget(two_k / 2, n, &budget).ok()
    } else {
        half_image_dimension((two_k - 1) / 2, n, &budget).ok()
    };
    // Per-shape multiplicities: partitions of n at integer levels, of n−1 at
    // half levels.
    let mut shape_rows: Vec<(String, String)> = Vec::new();
    if two_k % 2 == 0 {
        for lam in integer_partitions(n) {
            let m = multiplicity(&lam, two_k / 2, n, MultiplicityMethod::Character)?;
            shape_rows.push((lam.to_string(), m.to_string()));
        }
    } else {
        for mu in integer_partitions(n - 1) {
            let m = half_multiplicity(&mu, (two_k - 1) / 2, n)?;
            shape_rows.push((mu.to_string(), m.to_string()));
        }
    }
    let sq: num::BigUint = shape_rows
        .iter()
        .map(|(_, m)| {
            let v: num::BigUint = m.parse().unwrap();
            &v * &v
        })
        .sum();
    assert_eq!(sq, expected, "dimension bookkeeping failed");
    match cli.format {
        FormatArg::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "meta": meta_json(cli, "dims"),
                    "k": format_k(two_k),
                    "n": n,
                    "restricted_bell": expected.to_string(),
                    "image_rank": rank,
                    "multiplicities": shape_rows
                        .iter()
                        .map(|(s, m)| serde_json::json!({ "shape": s, "dim": m }))
                        .collect::<Vec<_>>(),
                }))
                .unwrap()
            );
        }
        _ => {
            println!("{}", meta_comment(cli, "dims"));
            println!("shape,dim");
            for (s, m) in &shape_rows {
                println!("\"{s}\",{m}");
            }
            println!("# sum of squares = {sq}, B({two_k},{n}) = {expected}");
            match rank {
                Some(r) => println!("# image rank = {r}"),
                None => println!("# image rank skipped (budget)"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
