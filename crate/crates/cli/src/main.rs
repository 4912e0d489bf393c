//! Command-line driver: analyze one group, verify the built-in catalog,
//! or run the functor-axiom selftest. Reports are canonical JSON
//! (sorted keys, fixed orderings) so identical inputs give
//! byte-identical output.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use brauer_core::catalog::{verification_catalog, FamilySpec};
use brauer_core::error::Error;
use brauer_core::*;

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 1;
const EXIT_RESOURCE: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

#[derive(Parser)]
#[command(
    name = "brauer",
    about = "Brauer relations of finite groups over semisimplified modular representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group at one prime and print the report.
    Analyze(AnalyzeArgs),
    /// Run the verification catalog and print one verdict per entry.
    Verify(VerifyArgs),
    /// Run the functor-axiom suites on fixed small groups.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Inline JSON group document, or a path to one.
    #[arg(long)]
    group: String,
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// Group order bound.
    #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
    max_order: usize,
    /// Span the imprimitive sublattice over all proper subquotients
    /// instead of maximal subgroups + minimal normal subgroups.
    #[arg(long)]
    debug_imprim_all: bool,
    /// Include human-readable relation strings in the report.
    #[arg(long)]
    emit_relations: bool,
    /// Output format (json only).
    #[arg(long, default_value = "json")]
    format: String,
    /// Include wall-clock timing (breaks byte-for-byte reproducibility).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Skip catalog entries with group order above this bound.
    #[arg(long, default_value_t = 60)]
    max_order: u64,
    /// Comma-separated list of primes to keep.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run the axiom suites (the default and only mode).
    #[arg(long)]
    axioms: bool,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::OrderBoundExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

fn coeff_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn element_map(labels: &[String], coeffs: &[BigInt]) -> Value {
    let mut map = BTreeMap::new();
    for (label, c) in labels.iter().zip(coeffs) {
        if !num_traits::Zero::is_zero(c) {
            map.insert(label.clone(), coeff_value(c));
        }
    }
    json!(map)
}

fn element_string(labels: &[String], coeffs: &[BigInt]) -> String {
    let mut parts = Vec::new();
    for (label, c) in labels.iter().zip(coeffs) {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let sign = if c.sign() == num_bigint::Sign::Minus {
            "-"
        } else if parts.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.magnitude().to_string();
        let coeff = if mag == "1" { String::new() } else { mag };
        parts.push(format!("{sign}{coeff}[{label}]"));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn invariants_value(inv: &AbelianInvariants) -> Value {
    json!(inv
        .0
        .iter()
        .map(|d| d.to_u64().map(|v| json!(v)).unwrap_or(json!(d.to_string())))
        .collect::<Vec<_>>())
}

fn basis_value(labels: &[String], rows: Vec<BurnsideElement>) -> Value {
    json!(rows
        .into_iter()
        .map(|e| json!({ "coeffs": element_map(labels, &e.coeffs) }))
        .collect::<Vec<_>>())
}

fn run_analysis(
    spec: &GroupSpec,
    prime: u64,
    bound: usize,
    mode: ImprimMode,
) -> brauer_core::Result<(BurnsideRing, PrimReport)> {
    let (group, _) = build(spec, bound)?;
    let ring = BurnsideRing::new(group)?;
    let report = analyze(&ring, prime, mode)?;
    Ok((ring, report))
}

fn report_json(
    spec: &GroupSpec,
    ring: &BurnsideRing,
    report: &PrimReport,
    emit_relations: bool,
    elapsed_ms: Option<u128>,
) -> Value {
    let labels = ring.table.class_labels();
    let flags = ring
        .group
        .structural_predicates(report.prime)
        .expect("prime already validated");
    let quasi: BTreeMap<String, bool> = flags
        .quasi_elementary
        .iter()
        .map(|(q, b)| (q.to_string(), *b))
        .collect();
    let mut root = json!({
        "schema_version": 1,
        "group": {
            "label": spec.label(),
            "spec": serde_json::to_value(spec).expect("spec serializes"),
            "order": ring.group.order(),
            "degree": ring.group.degree(),
            "soluble": flags.is_soluble,
            "cyclic": flags.is_cyclic,
            "quasi_elementary": quasi,
        },
        "prime": report.prime,
        "subgroup_classes": report.class_count,
        "class_labels": labels,
        "cyclic_p_prime_classes": report.cyclic_p_prime_count,
        "kernel_rank": report.kernel.rank(),
        "kernel_basis": basis_value(&labels, report.kernel.basis_elements()),
        "imprim_rank": report.imprim.rank(),
        "imprim_basis": basis_value(
            &labels,
            report
                .imprim
                .basis_rows()
                .into_iter()
                .map(|coeffs| BurnsideElement { coeffs })
                .collect(),
        ),
        "prim_invariants": invariants_value(&report.prim),
        "expected": report.expected.to_string(),
        "generator": report
            .generator
            .as_ref()
            .map(|g| element_map(&labels, &g.coeffs))
            .unwrap_or(Value::Null),
        "generator_generates": report
            .generator_generates
            .map(Value::Bool)
            .unwrap_or(Value::Null),
        "match": report.matches,
    });
    if emit_relations {
        let pretty: Vec<String> = report
            .kernel
            .basis_elements()
            .iter()
            .map(|e| element_string(&labels, &e.coeffs))
            .collect();
        root["relations_pretty"] = json!(pretty);
    }
    if let Some(ms) = elapsed_ms {
        root["timing_ms"] = json!(ms);
    }
    root
}

fn cmd_analyze(args: &AnalyzeArgs) -> i32 {
    if args.format != "json" {
        eprintln!("unsupported format: {}", args.format);
        return EXIT_INPUT;
    }
    let text = if args.group.trim_start().starts_with('{') {
        args.group.clone()
    } else {
        match std::fs::read_to_string(&args.group) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("cannot read {}: {e}", args.group);
                return EXIT_INPUT;
            }
        }
    };
    let spec = match parse_group_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INPUT;
        }
    };
    let mode = if args.debug_imprim_all {
        ImprimMode::AllProper
    } else {
        ImprimMode::MaximalMinimal
    };
    let start = Instant::now();
    match run_analysis(&spec, args.p, args.max_order, mode) {
        Ok((ring, report)) => {
            let elapsed = args.timings.then(|| start.elapsed().as_millis());
            let value = report_json(&spec, &ring, &report, args.emit_relations, elapsed);
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("report serializes")
            );
            if report.matches {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            eprintln!("{e}");
            exit_code_for(&e)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let mut all_ok = true;
    let mut ran = 0usize;
    for entry in verification_catalog() {
        if let Some(order) = entry.spec.predicted_order() {
            if order > args.max_order {
                continue;
            }
        }
        if let Some(primes) = &args.primes {
            if !primes.contains(&entry.prime) {
                continue;
            }
        }
        ran += 1;
        match run_analysis(
            &entry.spec,
            entry.prime,
            DEFAULT_ORDER_BOUND,
            ImprimMode::MaximalMinimal,
        ) {
            Ok((_, report)) => {
                let verdict = if report.matches { "ok " } else { "FAIL" };
                println!(
                    "{verdict} {:<14} order={:<3} classes={:<3} kernel_rank={:<3} prim={:<8} expected={}",
                    entry.label,
                    report.group_order,
                    report.class_count,
                    report.kernel.rank(),
                    report.prim.to_string(),
                    report.expected,
                );
                all_ok &= report.matches;
            }
            Err(e) => {
                println!("FAIL {:<14} error: {e}", entry.label);
                all_ok = false;
            }
        }
    }
    println!(
        "{ran} catalog entries checked: {}",
        if all_ok { "all match" } else { "MISMATCH" }
    );
    if all_ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn cmd_selftest(_args: &SelftestArgs) -> i32 {
    let groups: Vec<(GroupSpec, &str)> = vec![
        (GroupSpec::Family(FamilySpec::Symmetric { n: 3 }), "S3"),
        (GroupSpec::Family(FamilySpec::Cyclic { n: 6 }), "C6"),
        (GroupSpec::Family(FamilySpec::Dihedral { n: 4 }), "D4"),
        (GroupSpec::Family(FamilySpec::Alternating { n: 4 }), "A4"),
    ];
    let seed = 0x5eed_u64;
    let mut all_ok = true;
    for (spec, label) in groups {
        let ring = match build_default(&spec).and_then(|(g, _)| BurnsideRing::new(g)) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {label}: {e}");
                all_ok = false;
                continue;
            }
        };
        for p in [2u64, 3] {
            match brauer_core::axioms::run_all(&ring, p, seed) {
                Ok(reports) => {
                    for rep in reports {
                        let ok = rep.passed();
                        println!(
                            "{} {label} p={p} {:<36} cases={}",
                            if ok { "ok  " } else { "FAIL" },
                            rep.name,
                            rep.cases
                        );
                        if !ok {
                            for f in &rep.failures {
                                eprintln!("     {f}");
                            }
                            all_ok = false;
                        }
                    }
                }
                Err(e) => {
                    println!("FAIL {label} p={p}: {e}");
                    all_ok = false;
                }
            }
        }
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Selftest(args) => cmd_selftest(args),
    };
    std::process::exit(code);
}
