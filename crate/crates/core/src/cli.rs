//! Command-line front end: argument parsing, dispatch, and text/JSON
//! rendering. Exit codes: 0 success, 1 computation error, 2 usage error,
//! 3 verification failure.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus;
use crate::coxeter::{
    build_weyl, character_table, coinvariant_multiplicity, flag_poincare, generalized_kostka,
    CartanType, CharacterRow, CharacterTable, WeylGroup,
};
use crate::hypertoric;
use crate::laurent::LaurentPolynomial;
use crate::matroid::Matroid;
use crate::nilcone;
use crate::partitions::{self, Partition};
use crate::s3;
use crate::suites;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MatrixArg {
    /// Inline JSON (`[[1,0,1],[0,1,1]]`), `rows;separated;by;semicolons`,
    /// or a corpus spec (`graphic:K4`, `dual:graphic:cycle_5`, `file:path`)
    #[arg(long)]
    matrix: String,
}

#[derive(Parser)]
#[command(
    name = "poisson-poincare",
    version,
    about = "Exact two-variable Poincaré polynomials of hypertoric cones, \
             partition-pair slices, and nilpotent cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CoxeterOp {
    /// Generalized Kostka polynomial `K_χ(t)` (requires --chi)
    Kostka,
    /// Graded coinvariant multiplicity `m_χ(q)` (requires --chi)
    Multiplicity,
    /// Flag Poincaré polynomial `Π_i [d_i]_t`
    Flag,
    /// Full character table
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial of the column matroid of an integer matrix
    Tutte {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Flat-indexed polynomial Φ(x, y, b) of the matroid
    Denham {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Two-variable Poincaré polynomial of the hypertoric cone
    Hypertoric {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        format: FormatArg,
        /// Cross-check the direct flat sum against the Φ route and the
        /// structural specializations; exit 3 on disagreement
        #[arg(long)]
        oracle: bool,
    },
    /// Kostka polynomial K_{λμ}(t) via the charge statistic
    Kostka {
        /// Shape partition, e.g. `2,1`
        #[arg(long)]
        lambda: String,
        /// Content partition, e.g. `1,1,1`
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        format: FormatArg,
        /// Cross-check against the Hall–Littlewood transition-matrix
        /// oracle; exit 3 on disagreement
        #[arg(long)]
        oracle: bool,
    },
    /// Two-variable polynomial of the slice attached to a pair λ ⊵ μ
    S3 {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        format: FormatArg,
        /// Print only the intersection-cohomology polynomial in x
        #[arg(long)]
        ih: bool,
        /// Print only the degree-zero series (the x = 0 specialization)
        #[arg(long = "at-x0", conflicts_with = "ih")]
        at_x0: bool,
    },
    /// Weyl-group data: character tables and coinvariant multiplicities
    Coxeter {
        /// Cartan type: A1..A5, B2, or G2
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long, value_enum)]
        op: CoxeterOp,
        /// Character name: a partition in type A; triv, sgn, sgn_short
        /// (tau), sgn_long, refl (h), refl_twist (h_tau) in rank two
        #[arg(long)]
        chi: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Nilpotent-cone polynomial and per-character multiplicity series
    Cone {
        /// Cartan type: A1..A5, B2, or G2
        #[arg(long = "type")]
        cartan_type: String,
        /// Print the series K_χ(y⁻²) of one character instead of the cone
        #[arg(long)]
        chi: Option<String>,
        /// Run the fixed identity checks for the type; exit 3 on failure
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run verification suites: `all` or one suite name
    Verify {
        /// Suite name (see `verify --help`) or `all`
        #[arg(default_value = "all")]
        suite: String,
        /// Corpus spec (repeatable); defaults to the built-in corpus
        #[arg(long)]
        corpus: Vec<String>,
        #[command(flatten)]
        format: FormatArg,
    },
}

enum CliError {
    Usage(String),
    Computation(String),
    Verification(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn computation(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Computation(_) | CliError::Io(_) => 1,
        CliError::Verification(_) => 3,
    }
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("usage error: {m}"),
                CliError::Computation(m) => eprintln!("error: {m}"),
                CliError::Verification(m) => eprintln!("verification failed: {m}"),
                CliError::Io(io) => eprintln!("error: {io}"),
            }
            exit_code(&e)
        }
    }
}

fn matroid_from_flag(value: &str) -> Result<Matroid, CliError> {
    corpus::matroid_from_text(value).map_err(computation)
}

fn partition_from_flag(value: &str, flag: &str) -> Result<Partition, CliError> {
    value
        .parse::<Partition>()
        .map_err(|e| CliError::Usage(format!("--{flag} {value}: {e}")))
}

fn cartan_from_flag(value: &str) -> Result<CartanType, CliError> {
    value.parse::<CartanType>().map_err(|e| CliError::Usage(e.to_string()))
}

/// Accept descriptive names, the customary short aliases, and (in type A)
/// partitions in any spelling.
fn resolve_chi<'t>(
    table: &'t CharacterTable,
    cartan_type: CartanType,
    chi: &str,
) -> Result<&'t CharacterRow, CliError> {
    let canonical = match cartan_type {
        CartanType::A(_) => chi
            .parse::<Partition>()
            .map(|p| p.to_string())
            .unwrap_or_else(|_| chi.to_string()),
        CartanType::B2 | CartanType::G2 => match chi {
            "sigma" => "sgn",
            "tau" => "sgn_short",
            "tau_sigma" | "sigma_tau" => "sgn_long",
            "h" => "refl",
            "h_tau" | "tau_h" => "refl_twist",
            other => other,
        }
        .to_string(),
    };
    table.row(&canonical).ok_or_else(|| {
        CliError::Usage(format!("unknown character `{chi}` for type {cartan_type}"))
    })
}

fn emit_polynomial(
    out: &mut dyn Write,
    command: &str,
    poly: &LaurentPolynomial,
    status: &str,
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => writeln!(out, "{poly}")?,
        Format::Json => {
            let obj = serde_json::json!({
                "command": command,
                "polynomial": poly.to_json(),
                "status": status,
            });
            writeln!(out, "{obj}")?;
        }
    }
    Ok(())
}

fn weyl_with_table(cartan_type: CartanType) -> (WeylGroup, CharacterTable) {
    let w = build_weyl(cartan_type);
    let table = character_table(&w);
    (w, table)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Tutte { matrix, format } => {
            let m = matroid_from_flag(&matrix.matrix)?;
            emit_polynomial(out, "tutte", &m.tutte(), "theorem", format.format)
        }
        Command::Denham { matrix, format } => {
            let m = matroid_from_flag(&matrix.matrix)?;
            emit_polynomial(out, "denham", &hypertoric::denham_phi(&m), "theorem", format.format)
        }
        Command::Hypertoric { matrix, format, oracle } => {
            let m = matroid_from_flag(&matrix.matrix)?;
            if oracle {
                let report = hypertoric::verify_laplacian(&m);
                emit_polynomial(out, "hypertoric", &report.poincare, "theorem", format.format)?;
                if !report.all_ok() {
                    return Err(CliError::Verification(report.warnings.join("; ")));
                }
                return Ok(());
            }
            emit_polynomial(
                out,
                "hypertoric",
                &hypertoric::hypertoric_poincare(&m),
                "theorem",
                format.format,
            )
        }
        Command::Kostka { lambda, mu, format, oracle } => {
            let lambda = partition_from_flag(&lambda, "lambda")?;
            let mu = partition_from_flag(&mu, "mu")?;
            let k = partitions::kostka(&lambda, &mu).map_err(computation)?;
            emit_polynomial(out, "kostka", &k, "theorem", format.format)?;
            if oracle {
                let reference =
                    crate::hall_littlewood::kostka_oracle_hl(&lambda, &mu).map_err(computation)?;
                if k != reference {
                    return Err(CliError::Verification(format!(
                        "charge route {k} != transition-matrix route {reference}"
                    )));
                }
            }
            Ok(())
        }
        Command::S3 { lambda, mu, format, ih, at_x0 } => {
            let lambda = partition_from_flag(&lambda, "lambda")?;
            let mu = partition_from_flag(&mu, "mu")?;
            let pair = s3::S3Pair::new(lambda, mu).map_err(computation)?;
            let poly = if ih {
                s3::s3_ih_poly(&pair)
            } else if at_x0 {
                s3::s3_p_zero(&pair)
            } else {
                s3::s3_poincare(&pair).map_err(computation)?
            };
            emit_polynomial(out, "s3", &poly, "conditional", format.format)
        }
        Command::Coxeter { cartan_type, op, chi, format } => {
            let ct = cartan_from_flag(&cartan_type)?;
            match op {
                CoxeterOp::Flag => {
                    emit_polynomial(out, "coxeter", &flag_poincare(ct), "theorem", format.format)
                }
                CoxeterOp::Table => {
                    let (w, table) = weyl_with_table(ct);
                    emit_table(out, &w, &table, format.format)
                }
                CoxeterOp::Kostka | CoxeterOp::Multiplicity => {
                    let chi = chi.ok_or_else(|| {
                        CliError::Usage("--chi is required for this --op".to_string())
                    })?;
                    let (w, table) = weyl_with_table(ct);
                    let row = resolve_chi(&table, ct, &chi)?;
                    let poly = if op == CoxeterOp::Kostka {
                        generalized_kostka(&w, &row.values).map_err(computation)?
                    } else {
                        coinvariant_multiplicity(&w, &row.values).map_err(computation)?
                    };
                    emit_polynomial(out, "coxeter", &poly, "theorem", format.format)
                }
            }
        }
        Command::Cone { cartan_type, chi, verify, format } => {
            let ct = cartan_from_flag(&cartan_type)?;
            if verify {
                return verify_cone(out, ct, format.format);
            }
            let (w, table) = weyl_with_table(ct);
            let poly = match chi {
                Some(chi) => {
                    let name = resolve_chi(&table, ct, &chi)?.name.clone();
                    nilcone::h_multiplicity(&w, &table, &name).map_err(computation)?
                }
                None => nilcone::conjecture_poincare(&w, &table).map_err(computation)?,
            };
            emit_polynomial(out, "cone", &poly, "theorem", format.format)
        }
        Command::Verify { suite, corpus: corpus_specs, format } => {
            let corpus = if corpus_specs.is_empty() {
                suites::default_corpus()
            } else {
                corpus_specs
                    .iter()
                    .map(|spec| corpus::load_matroid(spec).map_err(computation))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let outcomes = if suite == "all" {
                suites::run_all(&corpus)
            } else {
                vec![suites::run_suite(&suite, &corpus).ok_or_else(|| {
                    CliError::Usage(format!(
                        "unknown suite `{suite}`; expected `all` or one of: {}",
                        suites::SUITE_NAMES.join(", ")
                    ))
                })?]
            };
            emit_outcomes(out, &outcomes, format.format)?;
            let failed: Vec<&str> =
                outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(failed.join(", ")))
            }
        }
    }
}

fn emit_table(
    out: &mut dyn Write,
    w: &WeylGroup,
    table: &CharacterTable,
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            writeln!(out, "type {} | order {}", w.cartan_type, w.order())?;
            writeln!(out, "classes: {}", table.class_labels.join("  "))?;
            let sizes: Vec<String> = table.class_sizes.iter().map(usize::to_string).collect();
            writeln!(out, "sizes:   {}", sizes.join("  "))?;
            for row in &table.rows {
                let values: Vec<String> = row.values.iter().map(i64::to_string).collect();
                writeln!(out, "{}: {}", row.name, values.join("  "))?;
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .map(|r| serde_json::json!({ "name": r.name, "values": r.values }))
                .collect();
            let obj = serde_json::json!({
                "command": "coxeter",
                "type": w.cartan_type.to_string(),
                "order": w.order(),
                "class_labels": table.class_labels,
                "class_sizes": table.class_sizes,
                "rows": rows,
            });
            writeln!(out, "{obj}")?;
        }
    }
    Ok(())
}

fn verify_cone(out: &mut dyn Write, ct: CartanType, format: Format) -> Result<(), CliError> {
    let (passed, details) = match ct {
        CartanType::B2 | CartanType::G2 => {
            let report = nilcone::verify_springer_case(ct).map_err(computation)?;
            (report.all_ok(), report.details)
        }
        CartanType::A(n) => {
            let r = u32::from(n) + 1;
            let mut details = Vec::new();
            let mut passed = nilcone::verify_palindromicity(r).map_err(computation)?;
            details.push(format!(
                "palindromicity over all characters of S{r}: {}",
                if passed { "ok" } else { "FAIL" }
            ));
            if r <= 5 {
                let (w, table) = weyl_with_table(ct);
                let cone = nilcone::conjecture_poincare(&w, &table).map_err(computation)?;
                let pair = s3::S3Pair::new(Partition::row(r), Partition::column(r))
                    .expect("(r) dominates (1^r)");
                let agree = cone == s3::s3_poincare(&pair).map_err(computation)?;
                details.push(format!(
                    "cone == pair polynomial for ((r),(1^r)): {}",
                    if agree { "ok" } else { "FAIL" }
                ));
                passed &= agree;
            }
            (passed, details)
        }
    };
    match format {
        Format::Text => {
            for line in &details {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
        }
        Format::Json => {
            let obj = serde_json::json!({
                "command": "cone",
                "type": ct.to_string(),
                "verify": { "passed": passed, "details": details },
            });
            writeln!(out, "{obj}")?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{ct} identity checks failed")))
    }
}

fn emit_outcomes(
    out: &mut dyn Write,
    outcomes: &[suites::SuiteOutcome],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for o in outcomes {
                writeln!(out, "{} {}", if o.passed { "PASS" } else { "FAIL" }, o.name)?;
                for line in &o.details {
                    writeln!(out, "  {line}")?;
                }
            }
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "name": o.name,
                        "passed": o.passed,
                        "details": o.details,
                    })
                })
                .collect();
            let obj = serde_json::json!({
                "command": "verify",
                "passed": outcomes.iter().all(|o| o.passed),
                "outcomes": entries,
            });
            writeln!(out, "{obj}")?;
        }
    }
    Ok(())
}
