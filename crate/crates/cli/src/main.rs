//! `szcensus`: census counts, subgroup tables, covering counts and oracle
//! verification for the Suzuki groups, as JSON or CSV on stdout.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use suzuki_census::census::{self, ObjectKind};
use suzuki_census::oracle::{self, ConcreteGroup, Suite, VerificationReport};
use suzuki_census::tables::{character_degrees, element_counts, mobius_rows};
use suzuki_census::{Count, Error};

#[derive(Parser)]
#[command(name = "szcensus", version, about = "Regular maps, hypermaps and coverings with Suzuki automorphism groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count regular objects with automorphism group Sz(2^e).
    Census(CensusArgs),
    /// Print the subgroup table used for Möbius inversion.
    Mobius(MobiusArgs),
    /// Count regular coverings of a closed orientable surface.
    Coverings(CoveringsArgs),
    /// Tables specific to Sz(8).
    Sz8 {
        #[command(subcommand)]
        command: Sz8Command,
    },
    /// Brute-force verification against materialized groups.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    #[value(alias = "hypermaps")]
    OrientedHypermaps,
    RegularHypermaps,
    ChiralHypermaps,
    #[value(alias = "maps")]
    OrientedMaps,
    RegularMaps,
    ChiralMaps,
    OrientedMapsValency4,
    OrientedMapsValency5,
    SelfDualOrientedMaps,
    Coverings,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    e: u32,
    #[arg(long)]
    object: Object,
    /// Surface genus, required for `coverings`.
    #[arg(long)]
    genus: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct MobiusArgs {
    #[arg(long)]
    e: u32,
    /// Include the numbers of elements of orders 2, 4 and 5.
    #[arg(long)]
    element_counts: bool,
    /// Include the irreducible character degrees.
    #[arg(long)]
    degrees: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct CoveringsArgs {
    #[arg(long)]
    e: u32,
    #[arg(long)]
    genus: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Sz8Command {
    /// Maps of Sz(8) by type {m,n}, as CSV.
    TypeTable {
        #[arg(long, value_enum)]
        variant: Variant,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Oriented,
    Regular,
    Chiral,
}

#[derive(Subcommand)]
enum OracleCommand {
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3, value_parser = parse_oracle_exponent)]
        e: u32,
    },
}

fn parse_oracle_exponent(s: &str) -> Result<u32, String> {
    match s {
        "1" => Ok(1),
        "3" => Ok(3),
        _ => Err("the oracle materializes only e = 1 and e = 3".into()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Tables,
    Triples,
    TypeTable,
    CoveringsDegreeCheck,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Triples => Suite::Triples,
            SuiteArg::TypeTable => Suite::TypeTable,
            SuiteArg::CoveringsDegreeCheck => Suite::CoveringsDegreeCheck,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Verification failed; the payload is the JSON diff for stdout.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Serialize)]
struct CountRecord {
    e: u32,
    object: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    count: String,
}

fn object_kind(object: Object, genus: Option<u32>) -> Result<ObjectKind, Failure> {
    if genus.is_some() && object != Object::Coverings {
        return Err(Failure::Usage("--genus only applies to --object coverings".into()));
    }
    Ok(match object {
        Object::OrientedHypermaps => ObjectKind::OrientedHypermaps,
        Object::RegularHypermaps => ObjectKind::RegularHypermaps,
        Object::ChiralHypermaps => ObjectKind::ChiralHypermaps,
        Object::OrientedMaps => ObjectKind::OrientedMaps,
        Object::RegularMaps => ObjectKind::RegularMaps,
        Object::ChiralMaps => ObjectKind::ChiralMaps,
        Object::OrientedMapsValency4 => ObjectKind::OrientedMapsValency4,
        Object::OrientedMapsValency5 => ObjectKind::OrientedMapsValency5,
        Object::SelfDualOrientedMaps => ObjectKind::SelfDualOrientedMaps,
        Object::Coverings => match genus {
            Some(g) => ObjectKind::Coverings(g),
            None => return Err(Failure::Usage("--object coverings needs --genus".into())),
        },
    })
}

fn render_count(record: &CountRecord, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(record).unwrap(),
        Format::Csv => {
            let genus = record.genus.map(|g| g.to_string()).unwrap_or_default();
            format!("e,object,genus,count\n{},{},{},{}", record.e, record.object, genus, record.count)
        }
    }
}

fn run_census(args: CensusArgs) -> Result<String, Failure> {
    let kind = object_kind(args.object, args.genus)?;
    let report = census::census(args.e, kind)?;
    let record = CountRecord { e: args.e, object: kind.name(), genus: kind.genus(), count: report.count.to_string() };
    Ok(render_count(&record, args.format))
}

fn run_coverings(args: CoveringsArgs) -> Result<String, Failure> {
    let count = census::count_orientable_coverings(args.e, args.genus)?;
    let record = CountRecord { e: args.e, object: "coverings", genus: Some(args.genus), count: count.to_string() };
    Ok(render_count(&record, args.format))
}

#[derive(Serialize)]
struct ElementCounts {
    #[serde(rename = "2")]
    two: String,
    #[serde(rename = "4")]
    four: String,
    #[serde(rename = "5")]
    five: String,
}

#[derive(Serialize)]
struct MobiusRow {
    subgroup: String,
    order: String,
    conjugates: String,
    mu: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    element_counts: Option<ElementCounts>,
    /// `(degree, multiplicity)` pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<(String, String)>>,
}

#[derive(Serialize)]
struct MobiusTable {
    e: u32,
    rows: Vec<MobiusRow>,
}

fn run_mobius(args: MobiusArgs) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for record in mobius_rows(args.e)? {
        let counts = if args.element_counts {
            Some(ElementCounts {
                two: element_counts(&record, 2)?.to_string(),
                four: element_counts(&record, 4)?.to_string(),
                five: element_counts(&record, 5)?.to_string(),
            })
        } else {
            None
        };
        let degrees = args.degrees.then(|| {
            character_degrees(&record).degrees.iter().map(|(d, m)| (d.to_string(), m.to_string())).collect()
        });
        rows.push(MobiusRow {
            subgroup: record.name(),
            order: record.order.to_string(),
            conjugates: record.num_conjugates.to_string(),
            mu: record.mu.to_string(),
            element_counts: counts,
            degrees,
        });
    }
    let table = MobiusTable { e: args.e, rows };
    Ok(match args.format {
        Format::Json => serde_json::to_string(&table).unwrap(),
        Format::Csv => mobius_csv(&table, args.element_counts, args.degrees),
    })
}

fn mobius_csv(table: &MobiusTable, counts: bool, degrees: bool) -> String {
    let mut lines = Vec::new();
    let mut header = String::from("subgroup,order,conjugates,mu");
    if counts {
        header.push_str(",count2,count4,count5");
    }
    if degrees {
        header.push_str(",degrees");
    }
    lines.push(header);
    for row in &table.rows {
        let mut line = format!("{},{},{},{}", row.subgroup, row.order, row.conjugates, row.mu);
        if let Some(c) = &row.element_counts {
            line.push_str(&format!(",{},{},{}", c.two, c.four, c.five));
        }
        if let Some(d) = &row.degrees {
            let cells: Vec<String> = d.iter().map(|(deg, mult)| format!("{deg}x{mult}")).collect();
            line.push_str(&format!(",{}", cells.join(" ")));
        }
        lines.push(line);
    }
    lines.join("\n")
}

fn run_type_table(variant: Variant) -> Result<String, Failure> {
    let regular = census::regular_map_type_census(3)?;
    if variant == Variant::Regular {
        return Ok(regular.to_csv().trim_end().to_string());
    }
    let g = ConcreteGroup::suzuki(3)?;
    let oriented = oracle::oriented_type_census(&g, &(Count::from(g.order()) * 3u32))?;
    let table = match variant {
        Variant::Oriented => oriented,
        _ => oriented.difference(&regular)?,
    };
    Ok(table.to_csv().trim_end().to_string())
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    expected: &'a str,
    actual: &'a str,
    passed: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    suite: &'static str,
    e: u32,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckJson<'a>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failures: Option<Vec<CheckJson<'a>>>,
}

fn to_json(c: &oracle::CheckResult) -> CheckJson<'_> {
    CheckJson { name: &c.name, expected: &c.expected, actual: &c.actual, passed: c.passed }
}

fn report_json(report: &VerificationReport) -> String {
    let passed = report.passed();
    let out = ReportJson {
        suite: report.suite.name(),
        e: report.e,
        passed,
        checks: passed.then(|| report.checks.iter().map(to_json).collect()),
        failures: (!passed).then(|| report.failures().into_iter().map(to_json).collect()),
    };
    serde_json::to_string(&out).unwrap()
}

fn run_verify(suite: SuiteArg, e: u32) -> Result<String, Failure> {
    let report = oracle::run_suite(suite.into(), e)?;
    let json = report_json(&report);
    if report.passed() {
        Ok(json)
    } else {
        Err(Failure::Verification(json))
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Census(args) => run_census(args),
        Command::Mobius(args) => run_mobius(args),
        Command::Coverings(args) => run_coverings(args),
        Command::Sz8 { command: Sz8Command::TypeTable { variant } } => run_type_table(variant),
        Command::Oracle { command: OracleCommand::Verify { suite, e } } => run_verify(suite, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(diff)) => {
            println!("{diff}");
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
    }
}
