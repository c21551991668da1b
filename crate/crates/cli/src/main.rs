//! `sncode`: classify, verify and search conjugacy-class codes in
//! symmetric groups, and query exact character values.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 cap or budget
//! exceeded, 3 internal cross-check failure.

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sncode_core::{
    compute_r, first_failing_m, mn_character, search_codes, theorem_classify, two_row_char,
    verdict, verify_tiling, young_criterion_general, CodeQuery, CycleType, Error as CoreError,
    OracleLimits, Partition, TilingReport, YoungSubgroupSpec,
};

#[derive(Parser)]
#[command(
    name = "sncode",
    version,
    about = "Conjugacy-class codes in symmetric groups: exact classification, brute-force \
             verification, search, and character values"
)]
struct Cli {
    /// Output format.
    #[arg(short, long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Cap for full class and subgroup enumeration.
    #[arg(long, env = "SNCODE_MAX_DEGREE", default_value_t = 10, global = true)]
    max_degree: usize,

    /// Budget for the brute-force oracle, counted in |A| * |B| products.
    #[arg(long, default_value_t = 100_000_000, global = true)]
    max_products: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the class of a cycle type tiles S_n against Y_k,
    /// by the cycle-type classification and the character criterion.
    Classify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        /// Cycle type as `+`-separated cycle lengths, e.g. 3+2+1.
        #[arg(short = 't')]
        cycle_type: String,
    },
    /// Verify a tiling by multiplying the class against Y_k element by
    /// element, and cross-check the verdict against `classify`.
    Verify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        /// Cycle type as `+`-separated cycle lengths, e.g. 3+2+1.
        #[arg(short = 't')]
        cycle_type: String,
    },
    /// List every cycle type of S_n whose class tiles against Y_k.
    Search {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        /// Re-verify each listed code with the brute-force oracle.
        #[arg(long)]
        brute: bool,
    },
    /// Evaluate the irreducible character of a shape on a class.
    Char {
        #[arg(short = 'n')]
        n: usize,
        /// Shape as `+`-separated parts, e.g. 4+2.
        #[arg(short = 'l')]
        shape: String,
        /// Cycle type as `+`-separated cycle lengths.
        #[arg(short = 't')]
        cycle_type: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Exploratory: the character test for a Young subgroup of an
    /// arbitrary shape. Proven only for two-row shapes; elsewhere the
    /// verdict is conjectural and should be confirmed with --brute.
    Young {
        #[arg(short = 'n')]
        n: usize,
        /// Shape as `+`-separated parts, e.g. 2+2+1.
        #[arg(short = 'l')]
        shape: String,
        /// Cycle type as `+`-separated cycle lengths.
        #[arg(short = 't')]
        cycle_type: String,
        /// Confirm the character verdict with the brute-force oracle.
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Frobenius,
    Mn,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Frobenius => "frobenius",
            Method::Mn => "mn",
            Method::Both => "both",
        }
    }
}

/// Resolved configuration for one invocation. Commands never draw
/// randomness, so identical inputs always produce byte-identical output;
/// `deterministic` records that contract.
struct RunConfig {
    max_degree: usize,
    max_products: u64,
    format: Format,
    deterministic: bool,
}

impl RunConfig {
    fn limits(&self) -> OracleLimits {
        OracleLimits { max_degree: self.max_degree, max_products: self.max_products }
    }
}

enum CliError {
    Usage(String),
    Core(CoreError),
    CrossCheck(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::CrossCheck(_) => 3,
            CliError::Core(e) => match e {
                CoreError::DegreeCap { .. }
                | CoreError::ProductBudget { .. }
                | CoreError::Overflow(_) => 2,
                CoreError::CriteriaDisagree(_) | CoreError::NotACode { .. } => 3,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::CrossCheck(msg) => write!(f, "cross-check failed: {msg}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let config = RunConfig {
        max_degree: cli.max_degree,
        max_products: cli.max_products,
        format: cli.format,
        deterministic: true,
    };
    assert!(config.deterministic);
    let outcome = match cli.command {
        Command::Classify { n, k, cycle_type } => cmd_classify(&config, n, k, &cycle_type),
        Command::Verify { n, k, cycle_type } => cmd_verify(&config, n, k, &cycle_type),
        Command::Search { n, k, brute } => cmd_search(&config, n, k, brute),
        Command::Char { n, shape, cycle_type, method } => {
            cmd_char(&config, n, &shape, &cycle_type, method)
        }
        Command::Young { n, shape, cycle_type, brute } => {
            cmd_young(&config, n, &shape, &cycle_type, brute)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn parse_shape(n: usize, text: &str, what: &str) -> Result<Partition, CliError> {
    let partition = Partition::parse_parts(text)?;
    if partition.n() != n {
        return Err(CliError::Usage(format!(
            "{what} {text} sums to {}, expected n = {n}",
            partition.n()
        )));
    }
    Ok(partition)
}

fn parse_cycle_type(n: usize, text: &str) -> Result<CycleType, CliError> {
    Ok(CycleType::from_partition(&parse_shape(n, text, "cycle type")?))
}

fn opt<T: fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map_or_else(|| "-".into(), |v| v.to_string())
}

fn opt_csv<T: fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map_or_else(String::new, |v| v.to_string())
}

fn emit_json<R: Serialize>(record: &R) {
    println!("{}", serde_json::to_string(record).expect("records serialize"));
}

// ---------------------------------------------------------------- classify

#[derive(Serialize)]
struct ClassifyRecord {
    schema: u32,
    command: &'static str,
    n: usize,
    k: usize,
    cycle_type: String,
    j: u32,
    theorem: bool,
    characters: bool,
    r: Option<u64>,
    failing_m: Option<usize>,
}

fn cmd_classify(config: &RunConfig, n: usize, k: usize, cycle_type: &str) -> Result<(), CliError> {
    let ct = parse_cycle_type(n, cycle_type)?;
    let query = CodeQuery::new(n, k, ct)?;
    let theorem = theorem_classify(&query);
    let failing_m = first_failing_m(&query)?;
    let characters = failing_m.is_none();
    let r = if characters { Some(compute_r(&query)?) } else { None };
    let record = ClassifyRecord {
        schema: 1,
        command: "classify",
        n,
        k,
        cycle_type: query.cycle_type().to_partition().parts_string(),
        j: query.j(),
        theorem,
        characters,
        r,
        failing_m,
    };
    match config.format {
        Format::Json => emit_json(&record),
        Format::Csv => {
            println!("n,k,cycle_type,j,theorem,characters,r,failing_m");
            println!(
                "{},{},{},{},{},{},{},{}",
                record.n,
                record.k,
                record.cycle_type,
                record.j,
                record.theorem,
                record.characters,
                opt_csv(&record.r),
                opt_csv(&record.failing_m)
            );
        }
        Format::Text => {
            println!("n: {}", record.n);
            println!("k: {}", record.k);
            println!("cycle_type: {}", record.cycle_type);
            println!("j: {}", record.j);
            println!("theorem: {}", record.theorem);
            println!("characters: {}", record.characters);
            println!("r: {}", opt(&record.r));
            println!("failing_m: {}", opt(&record.failing_m));
        }
    }
    if theorem != characters {
        return Err(CliError::CrossCheck(format!(
            "classification routes disagree on n={n}, k={k}, cycle type {cycle_type}"
        )));
    }
    Ok(())
}

// ------------------------------------------------------------------ verify

#[derive(Serialize)]
struct VerifyRecord {
    schema: u32,
    command: &'static str,
    n: usize,
    k: usize,
    cycle_type: String,
    is_code: bool,
    r: Option<u64>,
    witness: Option<WitnessRecord>,
    histogram: Vec<(u32, u64)>,
}

#[derive(Serialize)]
struct WitnessRecord {
    element: String,
    count: u32,
}

fn histogram_pairs(report: &TilingReport) -> Vec<(u32, u64)> {
    report.histogram.iter().map(|(&count, &elements)| (count, elements)).collect()
}

fn histogram_string(pairs: &[(u32, u64)]) -> String {
    pairs
        .iter()
        .map(|(count, elements)| format!("{count}:{elements}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_verify(config: &RunConfig, n: usize, k: usize, cycle_type: &str) -> Result<(), CliError> {
    let ct = parse_cycle_type(n, cycle_type)?;
    let query = CodeQuery::new(n, k, ct.clone())?;
    let class: Vec<_> = ct.elements(config.max_degree)?.collect();
    let young: Vec<_> = YoungSubgroupSpec::two_block(n, k)?.elements(config.max_degree)?.collect();
    let report = verify_tiling(&class, &young, &config.limits())?;
    let record = VerifyRecord {
        schema: 1,
        command: "verify",
        n,
        k,
        cycle_type: query.cycle_type().to_partition().parts_string(),
        is_code: report.is_code,
        r: report.r,
        witness: report
            .witness
            .as_ref()
            .map(|(element, count)| WitnessRecord { element: element.to_string(), count: *count }),
        histogram: histogram_pairs(&report),
    };
    match config.format {
        Format::Json => emit_json(&record),
        Format::Csv => {
            println!("n,k,cycle_type,is_code,r,witness,witness_count,histogram");
            println!(
                "{},{},{},{},{},{},{},{}",
                record.n,
                record.k,
                record.cycle_type,
                record.is_code,
                opt_csv(&record.r),
                record.witness.as_ref().map_or(String::new(), |w| w.element.clone()),
                opt_csv(&record.witness.as_ref().map(|w| w.count)),
                histogram_string(&record.histogram)
            );
        }
        Format::Text => {
            println!("n: {}", record.n);
            println!("k: {}", record.k);
            println!("cycle_type: {}", record.cycle_type);
            println!("is_code: {}", record.is_code);
            println!("r: {}", opt(&record.r));
            match &record.witness {
                Some(w) => println!("witness: {} with count {}", w.element, w.count),
                None => println!("witness: -"),
            }
            println!("histogram: {}", histogram_string(&record.histogram));
        }
    }
    // The oracle must agree with both-criteria classification.
    let classified = verdict(&query)?;
    if classified.is_code != report.is_code || classified.r != report.r {
        return Err(CliError::CrossCheck(format!(
            "oracle verdict ({}, r={}) disagrees with classification ({}, r={}) on n={n}, k={k}, \
             cycle type {cycle_type}",
            report.is_code,
            opt(&report.r),
            classified.is_code,
            opt(&classified.r),
        )));
    }
    Ok(())
}

// ------------------------------------------------------------------ search

#[derive(Serialize)]
struct SearchRecord {
    schema: u32,
    command: &'static str,
    n: usize,
    k: usize,
    codes: Vec<CodeRow>,
}

#[derive(Serialize)]
struct CodeRow {
    cycle_type: String,
    r: u64,
    oracle_r: Option<u64>,
}

fn cmd_search(config: &RunConfig, n: usize, k: usize, brute: bool) -> Result<(), CliError> {
    let found = search_codes(n, k, config.max_degree)?;
    let mut codes = Vec::with_capacity(found.len());
    let mut mismatches = Vec::new();
    for (ct, r) in found {
        let oracle_r = if brute {
            let class: Vec<_> = ct.elements(config.max_degree)?.collect();
            let young: Vec<_> =
                YoungSubgroupSpec::two_block(n, k)?.elements(config.max_degree)?.collect();
            let report = verify_tiling(&class, &young, &config.limits())?;
            if report.r != Some(r) {
                mismatches.push(format!(
                    "cycle type {}: oracle r={}, computed r={r}",
                    ct.to_partition().parts_string(),
                    opt(&report.r)
                ));
            }
            report.r
        } else {
            None
        };
        codes.push(CodeRow { cycle_type: ct.to_partition().parts_string(), r, oracle_r });
    }
    let record = SearchRecord { schema: 1, command: "search", n, k, codes };
    match config.format {
        Format::Json => emit_json(&record),
        Format::Csv => {
            println!("n,k,cycle_type,r,oracle_r");
            for row in &record.codes {
                println!(
                    "{},{},{},{},{}",
                    record.n,
                    record.k,
                    row.cycle_type,
                    row.r,
                    opt_csv(&row.oracle_r)
                );
            }
        }
        Format::Text => {
            println!("n: {}", record.n);
            println!("k: {}", record.k);
            if record.codes.is_empty() {
                println!("no codes");
            } else {
                for row in &record.codes {
                    match row.oracle_r {
                        Some(oracle_r) => println!(
                            "cycle_type {} r {} oracle_r {oracle_r}",
                            row.cycle_type, row.r
                        ),
                        None => println!("cycle_type {} r {}", row.cycle_type, row.r),
                    }
                }
            }
        }
    }
    if let Some(first) = mismatches.first() {
        return Err(CliError::CrossCheck(format!("search --brute on n={n}, k={k}: {first}")));
    }
    Ok(())
}

// -------------------------------------------------------------------- char

#[derive(Serialize)]
struct CharRecord {
    schema: u32,
    command: &'static str,
    n: usize,
    shape: String,
    cycle_type: String,
    method: &'static str,
    value: i64,
}

/// `Some(m)` when the shape is `(n - m, m)` or `(n)`, i.e. has a
/// coefficient-extraction fast path.
fn two_row_m(shape: &Partition) -> Option<usize> {
    match shape.len() {
        1 => Some(0),
        2 => Some(shape.part(1)),
        _ => None,
    }
}

fn cmd_char(
    config: &RunConfig,
    n: usize,
    shape_text: &str,
    cycle_type: &str,
    method: Method,
) -> Result<(), CliError> {
    let shape = parse_shape(n, shape_text, "shape")?;
    let ct = parse_cycle_type(n, cycle_type)?;
    let value = match method {
        Method::Frobenius => {
            let m = two_row_m(&shape).ok_or_else(|| {
                CliError::Usage(format!(
                    "--method frobenius needs a two-row shape, got {shape_text}"
                ))
            })?;
            two_row_char(&ct, m)?
        }
        Method::Mn => mn_character(&shape, &ct),
        Method::Both => {
            let rim_hook = mn_character(&shape, &ct);
            if let Some(m) = two_row_m(&shape) {
                let coefficient = two_row_char(&ct, m)?;
                if coefficient != rim_hook {
                    return Err(CliError::CrossCheck(format!(
                        "character routes disagree on shape {shape_text}, cycle type \
                         {cycle_type}: coefficient {coefficient}, rim hook {rim_hook}"
                    )));
                }
            }
            rim_hook
        }
    };
    let record = CharRecord {
        schema: 1,
        command: "char",
        n,
        shape: shape.parts_string(),
        cycle_type: ct.to_partition().parts_string(),
        method: method.name(),
        value,
    };
    match config.format {
        Format::Json => emit_json(&record),
        Format::Csv => {
            println!("n,shape,cycle_type,method,value");
            println!(
                "{},{},{},{},{}",
                record.n, record.shape, record.cycle_type, record.method, record.value
            );
        }
        Format::Text => println!("{}", record.value),
    }
    Ok(())
}

// ------------------------------------------------------------------- young

#[derive(Serialize)]
struct YoungRecord {
    schema: u32,
    command: &'static str,
    n: usize,
    shape: String,
    cycle_type: String,
    character_test: bool,
    scope: &'static str,
    oracle_is_code: Option<bool>,
    oracle_r: Option<u64>,
}

fn cmd_young(
    config: &RunConfig,
    n: usize,
    shape_text: &str,
    cycle_type: &str,
    brute: bool,
) -> Result<(), CliError> {
    let shape = parse_shape(n, shape_text, "shape")?;
    let ct = parse_cycle_type(n, cycle_type)?;
    let character_test = young_criterion_general(&shape, &ct);
    let proven = shape.len() == 1 || (shape.len() == 2 && shape.part(0) > shape.part(1));
    let (oracle_is_code, oracle_r) = if brute {
        let class: Vec<_> = ct.elements(config.max_degree)?.collect();
        let young: Vec<_> =
            YoungSubgroupSpec::of_shape(&shape).elements(config.max_degree)?.collect();
        let report = verify_tiling(&class, &young, &config.limits())?;
        (Some(report.is_code), report.r)
    } else {
        (None, None)
    };
    let record = YoungRecord {
        schema: 1,
        command: "young",
        n,
        shape: shape.parts_string(),
        cycle_type: ct.to_partition().parts_string(),
        character_test,
        scope: if proven { "proven" } else { "conjectural" },
        oracle_is_code,
        oracle_r,
    };
    match config.format {
        Format::Json => emit_json(&record),
        Format::Csv => {
            println!("n,shape,cycle_type,character_test,scope,oracle_is_code,oracle_r");
            println!(
                "{},{},{},{},{},{},{}",
                record.n,
                record.shape,
                record.cycle_type,
                record.character_test,
                record.scope,
                opt_csv(&record.oracle_is_code),
                opt_csv(&record.oracle_r)
            );
        }
        Format::Text => {
            println!("n: {}", record.n);
            println!("shape: {}", record.shape);
            println!("cycle_type: {}", record.cycle_type);
            println!("character_test: {}", record.character_test);
            match record.scope {
                "proven" => println!("scope: proven"),
                _ => println!("scope: conjectural (character test only; confirm with --brute)"),
            }
            println!("oracle_is_code: {}", opt(&record.oracle_is_code));
            println!("oracle_r: {}", opt(&record.oracle_r));
        }
    }
    // In the proven two-row range an oracle disagreement is a bug; beyond
    // it the comparison is the whole point of --brute, so both verdicts
    // stay in the record.
    if proven && brute && oracle_is_code != Some(character_test) {
        return Err(CliError::CrossCheck(format!(
            "character test ({character_test}) and oracle ({}) disagree on the proven shape \
             {shape_text}",
            opt(&oracle_is_code)
        )));
    }
    Ok(())
}
