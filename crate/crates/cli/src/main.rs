use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use partmat::algebra::{
    dist_rhs_poly, eulerian_poly, grade_text, lemma31_check, motzkin_stat_series, ndippm_gf_check,
    ndpm_gf_check, s_poly_fishburn, v_poly, SeriesCheck,
};
use partmat::enumerate::{FamilyId, Strategy};
use partmat::maps::{
    cdk_eta, cdk_eta_inverse, double_expand, double_expand_with, natural_fishburn, parity_append,
    phi, phi_inv, reduce, seq_append, theta, MapError,
};
use partmat::objects::{InversionSequence, MotzkinWord, PartitionMatrix};
use partmat::verify::{effective_bound, env_cap, run_all, BoundKind, CheckId};

const EXIT_IDENTITY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_DOMAIN: u8 = 4;

#[derive(Parser)]
#[command(
    name = "partmat",
    version,
    about = "Partition matrices, inversion sequences and lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyName {
    S,
    DistRhs,
    Eulerian,
    VDist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Theta,
    Eta,
    EtaInv,
    Reduce,
    Phi,
    PhiInv,
    Double,
    NaturalFishburn,
    ParityAppend,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    MotzkinStats,
    NdippmGf,
    NdpmGf,
    Lemma31,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Lists every object of a family, one per line.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Counts a family without keeping the objects.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Prints an exact polynomial as JSON.
    Poly {
        #[arg(long, value_enum)]
        name: PolyName,
        #[arg(long)]
        n: usize,
    },
    /// Applies a map to each object read from the input, one per line.
    Apply {
        #[arg(long, value_enum)]
        map: MapName,
        /// File to read, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        /// For `double`: a 0/1 keep vector selecting a single image.
        #[arg(long)]
        keep: Option<String>,
    },
    /// Computes a truncated series and its residuals.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: SeriesFormat,
    },
    /// Runs named checks and prints one PASS or FAIL line per check.
    Verify {
        /// A check name, or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long = "max-t")]
        max_t: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure::new(EXIT_USAGE, message)
}

fn write_line(out: &mut impl Write, line: &str) -> CmdResult {
    writeln!(out, "{line}").map_err(|e| Failure::new(EXIT_USAGE, format!("write failed: {e}")))
}

fn parse_family(
    name: &str,
    strategy: Option<&str>,
) -> Result<(FamilyId, Option<Strategy>), Failure> {
    let family: FamilyId = name.parse().map_err(|e| usage(format!("{e}")))?;
    let strategy = strategy
        .map(|s| s.parse::<Strategy>())
        .transpose()
        .map_err(|e| usage(format!("{e}")))?;
    Ok((family, strategy))
}

fn enumerate(
    family: &str,
    n: usize,
    format: Format,
    limit: Option<usize>,
    strategy: Option<&str>,
) -> CmdResult {
    let (family, strategy) = parse_family(family, strategy)?;
    let stream = family
        .stream(n, strategy)
        .map_err(|e| usage(e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    if let Format::Csv = format {
        write_line(&mut out, &family.csv_header().join(","))?;
    }
    for object in stream.take(limit.unwrap_or(usize::MAX)) {
        let line = match format {
            Format::Json => serde_json::to_string(&object).expect("objects serialize"),
            Format::Csv => object
                .csv_fields()
                .iter()
                .map(|f| csv_field(f))
                .collect::<Vec<_>>()
                .join(","),
        };
        write_line(&mut out, &line)?;
    }
    out.flush().map_err(|e| usage(e.to_string()))
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn count(family: &str, n: usize, strategy: Option<&str>) -> CmdResult {
    let (family, strategy) = parse_family(family, strategy)?;
    let total = family
        .count(n, strategy)
        .map_err(|e| usage(e.to_string()))?;
    println!("{total}");
    Ok(())
}

fn poly(name: PolyName, n: usize) -> CmdResult {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let p = match name {
        PolyName::S => s_poly_fishburn(n),
        PolyName::DistRhs => dist_rhs_poly(n),
        PolyName::Eulerian => eulerian_poly(n),
        PolyName::VDist => v_poly(n),
    };
    println!(
        "{}",
        serde_json::to_string(&p).expect("polynomials serialize")
    );
    Ok(())
}

/// An object read from the input, in any supported notation.
enum Input {
    Matrix(PartitionMatrix),
    Sequence(InversionSequence),
    Word(MotzkinWord),
}

impl Input {
    fn kind(&self) -> &'static str {
        match self {
            Input::Matrix(_) => "partition matrix",
            Input::Sequence(_) => "inversion sequence",
            Input::Word(_) => "Motzkin word",
        }
    }
}

fn invalid(line: &str, e: impl std::fmt::Display) -> Failure {
    Failure::new(EXIT_INVALID, format!("invalid input {line:?}: {e}"))
}

/// JSON is recognised by its keys; otherwise the text notations are tried:
/// `({1},{2,3};{4})`, `(0,1,1)` and `ULLD`.
fn parse_input(line: &str) -> Result<Input, Failure> {
    if let Ok(value) = serde_json::from_str::<Value>(line) {
        let has = |key: &str| value.get(key).is_some();
        return if has("cells") && has("n") {
            serde_json::from_value(value)
                .map(Input::Matrix)
                .map_err(|e| invalid(line, e))
        } else if has("e") {
            serde_json::from_value(value)
                .map(Input::Sequence)
                .map_err(|e| invalid(line, e))
        } else if has("word") {
            serde_json::from_value(value)
                .map(Input::Word)
                .map_err(|e| invalid(line, e))
        } else {
            Err(invalid(line, "unrecognised JSON object"))
        };
    }
    if line.contains('{') || line.contains('∅') {
        return line
            .parse()
            .map(Input::Matrix)
            .map_err(|e| invalid(line, e));
    }
    if let Some(body) = line.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        let entries = body
            .split(',')
            .map(|v| v.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| invalid(line, e))?;
        return InversionSequence::new(entries)
            .map(Input::Sequence)
            .map_err(|e| invalid(line, e));
    }
    MotzkinWord::parse(line)
        .map(Input::Word)
        .map_err(|e| invalid(line, e))
}

fn map_failure(e: MapError) -> Failure {
    match e {
        MapError::Invalid(v) => Failure::new(EXIT_INVALID, v.to_string()),
        other => Failure::new(EXIT_DOMAIN, other.to_string()),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("objects serialize")
}

fn apply_one(map: MapName, input: Input, keep: Option<&[bool]>) -> Result<String, Failure> {
    let mismatch = |input: &Input| {
        Failure::new(
            EXIT_DOMAIN,
            format!("map {:?} does not accept a {}", map_name(map), input.kind()),
        )
    };
    Ok(match (map, input) {
        (MapName::Theta, Input::Matrix(p)) => to_json(&theta(&p)),
        (MapName::Eta, Input::Matrix(p)) => to_json(&cdk_eta(&p)),
        (MapName::EtaInv, Input::Sequence(e)) => to_json(&cdk_eta_inverse(&e)),
        (MapName::Reduce, Input::Matrix(p)) => to_json(&reduce(&p)),
        (MapName::Phi, Input::Matrix(p)) => to_json(&phi(&p).map_err(map_failure)?),
        (MapName::PhiInv, Input::Word(m)) => to_json(&phi_inv(&m)),
        (MapName::Double, Input::Matrix(p)) => match keep {
            None => to_json(&double_expand(&p)),
            Some(k) if k.len() == p.dim() => to_json(&double_expand_with(&p, k)),
            Some(k) => {
                return Err(map_failure(MapError::KeepLength {
                    found: k.len(),
                    expected: p.dim(),
                }))
            }
        },
        (MapName::NaturalFishburn, Input::Matrix(p)) => to_json(&natural_fishburn(&p)),
        (MapName::ParityAppend, Input::Matrix(q)) => {
            to_json(&parity_append(&q).map_err(map_failure)?)
        }
        (MapName::ParityAppend, Input::Sequence(e)) => {
            to_json(&seq_append(&e).map_err(map_failure)?)
        }
        (_, input) => return Err(mismatch(&input)),
    })
}

fn map_name(map: MapName) -> String {
    map.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn parse_keep(text: &str) -> Result<Vec<bool>, Failure> {
    text.chars()
        .filter(|c| !matches!(c, ',' | ' ' | '[' | ']'))
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(usage(format!("keep vector holds {other:?}; use 0 and 1"))),
        })
        .collect()
}

fn apply(map: MapName, input: &str, keep: Option<&str>) -> CmdResult {
    let keep = keep.map(parse_keep).transpose()?;
    if keep.is_some() && map != MapName::Double {
        return Err(usage("--keep only applies to --map double"));
    }
    let text = if input == "-" {
        let mut buffer = String::new();
        io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        buffer
    } else {
        fs::read_to_string(input).map_err(|e| usage(format!("cannot read {input}: {e}")))?
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let object = parse_input(line)?;
        write_line(&mut out, &apply_one(map, object, keep.as_deref())?)?;
    }
    out.flush().map_err(|e| usage(e.to_string()))
}

fn series(name: SeriesName, order: u32, format: SeriesFormat) -> CmdResult {
    if order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    let arithmetic = |e: partmat::algebra::SeriesError| Failure::new(EXIT_IDENTITY, e.to_string());
    let check: SeriesCheck = match name {
        SeriesName::MotzkinStats => motzkin_stat_series(order).map_err(arithmetic)?,
        SeriesName::NdippmGf => ndippm_gf_check(order).map_err(arithmetic)?,
        SeriesName::NdpmGf => ndpm_gf_check(order).map_err(arithmetic)?,
        SeriesName::Lemma31 => lemma31_check(order),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        SeriesFormat::Json => {
            let residuals: Vec<Value> = check
                .residuals
                .iter()
                .map(|(label, r)| {
                    let value = if r.is_zero() {
                        json!("zero")
                    } else {
                        serde_json::to_value(r).expect("series serialize")
                    };
                    json!({ "identity": label, "residual": value })
                })
                .collect();
            let report = json!({ "series": check.series, "residuals": residuals });
            write_line(&mut out, &report.to_string())?;
        }
        SeriesFormat::Text => {
            for k in 1..=order {
                let text = grade_text(&check.series, k);
                write_line(&mut out, &format!("t^{k}: {text}"))?;
            }
            for (label, r) in &check.residuals {
                let state = if r.is_zero() {
                    "zero".to_string()
                } else {
                    r.to_string()
                };
                write_line(&mut out, &format!("residual ({label}): {state}"))?;
            }
        }
    }
    out.flush().map_err(|e| usage(e.to_string()))?;
    if check.passed() {
        Ok(())
    } else {
        Err(Failure::new(EXIT_IDENTITY, "a residual is not zero"))
    }
}

fn verify(check: &str, max_n: Option<usize>, max_t: Option<usize>) -> CmdResult {
    let checks: Vec<CheckId> = if check == "all" {
        CheckId::ALL.to_vec()
    } else {
        vec![check.parse().map_err(usage)?]
    };
    let plan: Vec<(CheckId, usize)> = checks
        .into_iter()
        .map(|c| {
            let requested = match c.bound_kind() {
                BoundKind::MaxN => max_n,
                BoundKind::MaxT => max_t,
            };
            (c, effective_bound(c, requested))
        })
        .collect();
    if let Some(cap) = env_cap() {
        eprintln!("bounds capped at {cap} by PARTMAT_MAX_N");
    }
    let reports = run_all(&plan);
    let mut out = BufWriter::new(io::stdout().lock());
    for report in &reports {
        write_line(&mut out, &report.to_string())?;
    }
    out.flush().map_err(|e| usage(e.to_string()))?;
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::new(EXIT_IDENTITY, "some checks failed"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate {
            family,
            n,
            format,
            limit,
            strategy,
        } => enumerate(&family, n, format, limit, strategy.as_deref()),
        Command::Count {
            family,
            n,
            strategy,
        } => count(&family, n, strategy.as_deref()),
        Command::Poly { name, n } => poly(name, n),
        Command::Apply { map, input, keep } => apply(map, &input, keep.as_deref()),
        Command::Series {
            name,
            order,
            format,
        } => series(name, order, format),
        Command::Verify {
            check,
            max_n,
            max_t,
        } => verify(&check, max_n, max_t),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("partmat: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
