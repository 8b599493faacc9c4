//! Command-line front end for the `eaqecc` library.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification
//! budget exceeded.

mod qc;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eaqecc::codes::{
    self, build_eaqecc_binary, build_eaqecc_gf4, find_distance, verify_distance_with_budget,
    CodeReport, DistanceCheck, DistanceMode, DistanceSearch, BUILTIN_NAMES,
};
use eaqecc::f2::{parse_alist, parse_dense};
use eaqecc::qc_ldpc::{example_code, girth_exact, EXAMPLE_NAMES};
use eaqecc::sim::{sweep, SimConfig, SuccessMode};
use eaqecc::spa::DEFAULT_MAX_ITER;
use eaqecc::{sgs, BitMatrix, F4Matrix, PauliVec, QuantumCode};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Budget(m) => m,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Errors in flag values are usage errors.
fn usage(e: eaqecc::Error) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "eaqecc",
    version,
    about = "Entanglement-assisted quantum codes from classical codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code from a classical parity-check matrix and print its report.
    Construct {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Field::Gf2)]
        field: Field,
        /// Binary file layout; defaults to alist for `.alist` files.
        #[arg(long, value_enum)]
        format: Option<MatrixFormat>,
        #[command(flatten)]
        distance: DistanceArgs,
    },
    /// Report parameters, bounds, girth and distance of a code.
    Analyze {
        /// Builtin name, example name, or file.
        #[arg(long)]
        code: String,
        #[command(flatten)]
        distance: DistanceArgs,
    },
    /// Build or analyze a quasi-cyclic LDPC construction.
    Qcldpc {
        #[arg(
            long,
            conflicts_with = "exponent",
            required_unless_present = "exponent"
        )]
        example: Option<String>,
        /// Exponent matrix file: header `r J L` then `J` rows of entries
        /// `-`, `e` or `a+b`.
        #[arg(long)]
        exponent: Option<PathBuf>,
        /// Circulant size, overriding the file header.
        #[arg(long, requires = "exponent")]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Dense)]
        format: MatrixFormat,
    },
    /// Monte Carlo block error rates under depolarizing noise, as CSV.
    Simulate {
        #[arg(long)]
        code: String,
        /// Comma-separated depolarizing probabilities.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
        #[arg(long, value_enum, default_value_t = Mode::Degenerate)]
        mode: Mode,
        /// Worker threads; all available cores by default.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// List the builtin codes, or print the report of one.
    Builtin {
        name: Option<String>,
        #[command(flatten)]
        distance: DistanceArgs,
    },
    /// Decompose the span of Pauli operators into hyperbolic pairs and an
    /// isotropic part.
    Sgs {
        /// One Pauli string per line.
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(clap::Args, Debug)]
struct DistanceArgs {
    /// Verify that the distance is at least this value.
    #[arg(long)]
    distance: Option<usize>,
    /// Search for the exact distance within the budget.
    #[arg(long, conflicts_with = "distance")]
    find_distance: bool,
    #[arg(long, value_enum, default_value_t = Mode::Degenerate)]
    mode: Mode,
    /// Maximum number of error patterns to enumerate.
    #[arg(long, default_value_t = codes::DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Field {
    Gf2,
    Gf4,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixFormat {
    Dense,
    Alist,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Matrix,
    Report,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Strict,
    Degenerate,
}

impl Mode {
    fn distance(self) -> DistanceMode {
        match self {
            Mode::Strict => DistanceMode::Strict,
            Mode::Degenerate => DistanceMode::Degenerate,
        }
    }

    fn success(self) -> SuccessMode {
        match self {
            Mode::Strict => SuccessMode::Strict,
            Mode::Degenerate => SuccessMode::Degenerate,
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Any library error while interpreting a file is a parse error.
fn parsed<T>(path: &Path, r: eaqecc::Result<T>) -> CliResult<T> {
    r.map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn has_extension(path: &Path, exts: &[&str]) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| exts.iter().any(|x| e.eq_ignore_ascii_case(x)))
}

fn load_binary(path: &Path, format: Option<MatrixFormat>) -> CliResult<BitMatrix> {
    let text = read(path)?;
    let format = format.unwrap_or(if has_extension(path, &["alist"]) {
        MatrixFormat::Alist
    } else {
        MatrixFormat::Dense
    });
    parsed(
        path,
        match format {
            MatrixFormat::Dense => parse_dense(&text),
            MatrixFormat::Alist => parse_alist(&text),
        },
    )
}

/// Resolves a builtin name, an example name, or a file. Files are read by
/// extension: `.alist`, `.mat` (dense binary) and `.gf4` hold classical
/// parity checks; anything else is a generator table.
fn resolve_code(spec: &str) -> CliResult<QuantumCode> {
    if BUILTIN_NAMES.contains(&spec) {
        return codes::builtin(spec).map_err(usage);
    }
    if EXAMPLE_NAMES.contains(&spec) {
        return example_code(spec).map_err(usage);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "unknown code {spec:?}: not a builtin ({}), an example ({}) or a file",
            BUILTIN_NAMES.join(", "),
            EXAMPLE_NAMES.join(", ")
        )));
    }
    if has_extension(path, &["alist"]) {
        let h = load_binary(path, Some(MatrixFormat::Alist))?;
        return parsed(path, build_eaqecc_binary(&h));
    }
    if has_extension(path, &["mat"]) {
        let h = load_binary(path, Some(MatrixFormat::Dense))?;
        return parsed(path, build_eaqecc_binary(&h));
    }
    let text = read(path)?;
    if has_extension(path, &["gf4"]) {
        let h = parsed(path, F4Matrix::parse(&text))?;
        return parsed(path, build_eaqecc_gf4(&h));
    }
    parsed(path, codes::parse_table(&text))
}

/// Runs the distance request, returning report lines and the exact
/// distance when established.
fn distance_lines(code: &QuantumCode, args: &DistanceArgs) -> CliResult<(String, Option<usize>)> {
    let mode = args.mode.distance();
    let mode_name = format!("{:?}", args.mode).to_lowercase();
    if let Some(d) = args.distance {
        return match verify_distance_with_budget(code, d, mode, args.budget) {
            DistanceCheck::Holds => Ok((format!("distance >= {d} ({mode_name}): holds\n"), None)),
            DistanceCheck::Violated { weight, witness } => Ok((
                format!(
                    "distance >= {d} ({mode_name}): fails at weight {weight}, witness {witness}\n"
                ),
                None,
            )),
            DistanceCheck::OverBudget { required, budget } => Err(CliError::Budget(format!(
                "verifying distance {d} needs {required} patterns, budget is {budget}"
            ))),
        };
    }
    if !args.find_distance {
        return Ok((String::new(), None));
    }
    match find_distance(code, mode, code.n(), args.budget) {
        DistanceSearch::Exact { d, witness } => Ok((
            format!("distance ({mode_name}): {d}, witness {witness}\n"),
            Some(d),
        )),
        DistanceSearch::AtLeast { d } if d > code.n() => Ok((
            format!(
                "distance ({mode_name}): no violating error on {} qubits\n",
                code.n()
            ),
            None,
        )),
        DistanceSearch::AtLeast { d } => Err(CliError::Budget(format!(
            "distance ({mode_name}) is at least {d}; budget {} exhausted",
            args.budget
        ))),
    }
}

fn code_report(code: &QuantumCode, args: &DistanceArgs, extra: &str) -> CliResult<String> {
    let (lines, d) = distance_lines(code, args)?;
    let report = CodeReport::new(code, d).to_string();
    // The generator table goes last.
    let split = report.find("\n#").map_or(report.len(), |i| i + 1);
    Ok(format!(
        "{}{extra}{lines}{}",
        &report[..split],
        &report[split..]
    ))
}

fn construct(
    input: &Path,
    field: Field,
    format: Option<MatrixFormat>,
    distance: &DistanceArgs,
) -> CliResult<String> {
    let code = match field {
        Field::Gf2 => parsed(input, build_eaqecc_binary(&load_binary(input, format)?))?,
        Field::Gf4 => {
            let h = parsed(input, F4Matrix::parse(&read(input)?))?;
            parsed(input, build_eaqecc_gf4(&h))?
        }
    };
    code_report(&code, distance, "")
}

fn analyze(spec: &str, distance: &DistanceArgs) -> CliResult<String> {
    let code = resolve_code(spec)?;
    let mut extra = String::new();
    if let Ok(css) = code.css_form() {
        let girth = |h: &BitMatrix| girth_exact(h).map_or("none".to_string(), |g| g.to_string());
        let _ = writeln!(extra, "rank(H_z): {}", css.hz.rank());
        let _ = writeln!(extra, "rank(H_x): {}", css.hx.rank());
        let _ = writeln!(extra, "girth(H_z): {}", girth(&css.hz));
        let _ = writeln!(extra, "girth(H_x): {}", girth(&css.hx));
    }
    code_report(&code, distance, &extra)
}

fn simulate(
    spec: &str,
    p: Vec<f64>,
    trials: u64,
    seed: u64,
    max_iter: usize,
    mode: Mode,
    threads: Option<usize>,
) -> CliResult<String> {
    let code = resolve_code(spec)?;
    let config = SimConfig {
        code,
        p_grid: p,
        trials,
        seed,
        max_iter,
        mode: mode.success(),
    };
    let run = || sweep(&config).map_err(usage);
    let result = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(result.to_csv())
}

fn builtin(name: Option<&str>, distance: &DistanceArgs) -> CliResult<String> {
    let Some(name) = name else {
        let mut out = String::new();
        for name in BUILTIN_NAMES {
            let code = codes::builtin(name).map_err(usage)?;
            let claimed = code.claimed().map(|c| c.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{name:<10} computed {:<20} claimed {claimed}",
                code.params().to_string()
            );
        }
        return Ok(out);
    };
    code_report(&codes::builtin(name).map_err(usage)?, distance, "")
}

fn sgs_report(input: &Path) -> CliResult<String> {
    let text = read(input)?;
    let ops: Vec<PauliVec> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect::<eaqecc::Result<_>>()
        .map_err(|e| CliError::Parse(format!("{}: {e}", input.display())))?;
    let n = ops
        .first()
        .map(PauliVec::n)
        .ok_or_else(|| CliError::Parse(format!("{}: no Pauli operators", input.display())))?;
    if let Some(bad) = ops.iter().find(|o| o.n() != n) {
        return Err(CliError::Parse(format!(
            "{}: operator {bad} has {} qubits, expected {n}",
            input.display(),
            bad.n()
        )));
    }
    let dec = sgs::decompose(n, &ops);
    let mut out = String::new();
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "dimension: {}", 2 * dec.c() + dec.ell());
    let _ = writeln!(out, "hyperbolic pairs: {}", dec.c());
    let _ = writeln!(out, "isotropic: {}", dec.ell());
    for (i, p) in dec.pairs().iter().enumerate() {
        let _ = writeln!(out, "P{}z {}", i + 1, p.u);
        let _ = writeln!(out, "P{}x {}", i + 1, p.v);
    }
    for (i, g) in dec.isotropic().iter().enumerate() {
        let _ = writeln!(out, "S{} {g}", i + 1);
    }
    Ok(out)
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Construct {
            input,
            field,
            format,
            distance,
        } => construct(&input, field, format, &distance),
        Command::Analyze { code, distance } => analyze(&code, &distance),
        Command::Qcldpc {
            example,
            exponent,
            r,
            emit,
            format,
        } => qc::run(example.as_deref(), exponent.as_deref(), r, emit, format),
        Command::Simulate {
            code,
            p,
            trials,
            seed,
            max_iter,
            mode,
            threads,
        } => simulate(&code, p, trials, seed, max_iter, mode, threads),
        Command::Builtin { name, distance } => builtin(name.as_deref(), &distance),
        Command::Sgs { input } => sgs_report(&input),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
