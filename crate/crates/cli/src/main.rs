//! Command-line surface over the exact computation kernels.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
//! 3 resource guard exceeded (including verify runs with guarded-out
//! checks).

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealpower_cli::cache::{Cache, CacheKey};
use idealpower_cli::claims::{run_claims, ClaimId, ClaimOptions, Scale};
use idealpower_cli::formats;
use idealpower_core::equivariant::schur_obstruction;
use idealpower_core::hilbert::{hilbert_report, Method};
use idealpower_core::ideal::IdealSpec;
use idealpower_core::relations::{
    build_product_form, compare_reference_table, exponent_divisibility, is_symmetric,
    kernel_element, reference_labels,
};
use idealpower_core::wlp::{scan_grid, turning_case, wlp_check, WlpMethod, WlpOptions};
use idealpower_core::{Error, Limits};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "idealpower",
    about = "Exact Hilbert functions of powers of ideals of forms, and Weak Lefschetz diagnostics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Primes for modular computations; the first decides, later ones
    /// confirm.
    #[arg(long = "prime")]
    primes: Vec<u64>,
    /// Seeds for random families (coefficientwise minimum is reported).
    #[arg(long = "seed")]
    seeds: Vec<u64>,
    /// Largest monomial basis a single degree may use.
    #[arg(long, default_value_t = 200_000)]
    guard_basis: usize,
    /// Largest rows*cols a rank computation may touch.
    #[arg(long, default_value_t = 50_000_000)]
    guard_entries: u64,
    /// Cache directory (overrides the IDEALPOWER_CACHE environment
    /// variable).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl CommonArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_basis: self.guard_basis,
            max_matrix_entries: self.guard_entries,
        }
    }

    fn primes(&self) -> Vec<u64> {
        if self.primes.is_empty() {
            vec![32003, 101]
        } else {
            self.primes.clone()
        }
    }

    fn seeds(&self) -> Vec<u64> {
        if self.seeds.is_empty() {
            vec![1, 2, 3]
        } else {
            self.seeds.clone()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    General,
    PowersOfLinear,
    MonomialCi,
    Explicit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Rank,
    Monomial,
    Series,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of a quotient by an ideal power.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "general")]
        family: FamilyArg,
        /// Generator count for the general family (defaults to n + 1).
        #[arg(long)]
        r: Option<usize>,
        /// JSON file with explicit generators (term lists).
        #[arg(long)]
        generators_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "rank")]
        method: MethodArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Weak Lefschetz verdict for a monomial complete intersection power.
    Wlp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// rank, series, or both (methods must agree).
        #[arg(long, default_value = "rank")]
        method: String,
        /// Certify failures exactly when the matrix has at most this many
        /// columns.
        #[arg(long, default_value_t = 0)]
        exact_certify: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scan a (d, k) grid of Weak Lefschetz verdicts.
    Scan {
        #[arg(long)]
        n: usize,
        /// Degree range lo:hi.
        #[arg(long)]
        d: String,
        /// Power range lo:hi.
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// S3 characters and isotypic multiplicities for T_{3,d,k}.
    Isotypic {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Degree range lo:hi (defaults to the resonance window).
        #[arg(long)]
        degrees: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The cyclotomic product-form relation and its kernel element.
    Relation {
        /// Number of variables (n + 1).
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        d: usize,
        /// Compare against the published reference row when one exists.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Verify claims against their check procedures.
    Verify {
        /// Comma-separated claim ids, or "all".
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value = "small")]
        scale: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(AppError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Guard(msg)) => {
            eprintln!("resource guard: {msg}");
            ExitCode::from(3)
        }
        Err(AppError::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum AppError {
    Config(String),
    Guard(String),
    Other(String),
}

impl From<Error> for AppError {
    fn from(e: Error) -> AppError {
        match e {
            Error::Guard(g) => AppError::Guard(g),
            Error::InvalidParameter(m) => AppError::Config(m),
            other => AppError::Other(other.to_string()),
        }
    }
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), AppError> {
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| AppError::Other(format!("writing {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            let result = if text.ends_with('\n') {
                write!(handle, "{text}")
            } else {
                writeln!(handle, "{text}")
            };
            match result {
                Ok(()) => Ok(()),
                // A closed pipe (e.g. piping into `head`) is not an error.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(AppError::Other(format!("writing stdout: {e}"))),
            }
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), AppError> {
    let parts: Vec<&str> = s.split(':').collect();
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| AppError::Config(format!("bad range component {t:?}")))
    };
    match parts.as_slice() {
        [single] => {
            let v = parse(single)?;
            Ok((v, v))
        }
        [lo, hi] => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(AppError::Config(format!("empty range {s:?}")));
            }
            Ok((lo, hi))
        }
        _ => Err(AppError::Config(format!("range must be lo:hi, got {s:?}"))),
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Hilbert {
            n,
            d,
            k,
            family,
            r,
            generators_file,
            method,
            common,
        } => {
            let spec = build_spec(n, d, k, family, r, generators_file.as_deref(), &common)?;
            let method = match method {
                MethodArg::Rank => Method::Rank,
                MethodArg::Monomial => Method::Monomial,
                MethodArg::Series => Method::SeriesFormula,
            };
            let key = CacheKey {
                spec: formats::spec_to_json(&spec, common.primes().first().copied()),
                method: method.as_str().to_string(),
                primes: common.primes(),
                seeds: common.seeds(),
            };
            let cache = Cache::resolve(common.cache_dir.as_deref());
            if let Some(cache) = &cache {
                if let Some(hit) = cache.lookup(&key) {
                    let text = render_hilbert(&hit, common.format)?;
                    emit(&common, &text)?;
                    return Ok(ExitCode::SUCCESS);
                }
            }
            let report =
                hilbert_report(&spec, method, &common.primes(), &common.seeds(), &common.limits())?;
            let json = serde_json::to_value(formats::hilbert_report_json(&report))
                .expect("serializable report");
            if let Some(cache) = &cache {
                cache.append(&key, &json);
            }
            let text = render_hilbert(&json, common.format)?;
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Wlp {
            n,
            d,
            k,
            method,
            exact_certify,
            common,
        } => {
            let spec = IdealSpec::monomial_ci(n, d, k)?;
            let method = match method.as_str() {
                "rank" => WlpMethod::Rank,
                "series" => WlpMethod::Series,
                "both" => WlpMethod::Both,
                other => {
                    return Err(AppError::Config(format!(
                        "unknown wlp method {other:?} (rank|series|both)"
                    )))
                }
            };
            let opts = WlpOptions {
                method,
                primes: common.primes(),
                limits: common.limits(),
                exact_certify_cols: exact_certify,
                ..WlpOptions::default()
            };
            let report = wlp_check(&spec, &opts)?;
            let json = formats::wlp_report_json(&report);
            let text = match common.format {
                OutputFormat::Json => serde_json::to_string(&json).unwrap(),
                OutputFormat::Text => format!(
                    "T({n},{d},{k}): {} (failures {:?}; {})",
                    report.verdict.as_str(),
                    report.failure_degrees,
                    report.certification
                ),
                OutputFormat::Csv => {
                    return Err(AppError::Config("wlp has no CSV format".into()))
                }
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            n,
            d,
            k,
            workers,
            common,
        } => {
            let d_range = parse_range(&d)?;
            let k_range = parse_range(&k)?;
            let opts = WlpOptions {
                primes: common.primes(),
                limits: common.limits(),
                ..WlpOptions::default()
            };
            let cells = scan_parallel(n, d_range, k_range, &opts, workers);
            let text = match common.format {
                OutputFormat::Csv => formats::grid_csv(&cells),
                OutputFormat::Json => {
                    serde_json::to_string(&formats::grid_json(&cells)).unwrap()
                }
                OutputFormat::Text => formats::grid_csv(&cells),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Isotypic {
            d,
            k,
            degrees,
            common,
        } => {
            let (lo, hi) = match degrees {
                Some(s) => parse_range(&s)?,
                None => {
                    // Default to the degrees around the resonance window.
                    let lo = d * k;
                    (lo.saturating_sub(1), d * (k + 1))
                }
            };
            let ob = turning_case(d, k).and_then(|_| schur_obstruction(d, k).ok());
            let report = formats::isotypic_report_json(d, k, lo..=hi, ob.as_ref())
                .map_err(AppError::Other)?;
            let text = match common.format {
                OutputFormat::Json => serde_json::to_string(&report).unwrap(),
                _ => {
                    let mut out = String::new();
                    for row in &report.rows {
                        out.push_str(&format!(
                            "i={} chi=({},{},{}) mult=({},{},{})\n",
                            row.i,
                            row.chi[0],
                            row.chi[1],
                            row.chi[2],
                            row.mult[0],
                            row.mult[1],
                            row.mult[2]
                        ));
                    }
                    if let Some(ob) = &report.obstruction {
                        out.push_str(&format!(
                            "obstruction: case {} degrees {:?} obstructed={}\n",
                            ob.case, ob.degrees, ob.obstructed
                        ));
                    }
                    out
                }
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Relation {
            nvars,
            d,
            table,
            common,
        } => {
            let form = build_product_form(nvars, d, &common.limits())?;
            let membership = exponent_divisibility(&form);
            let symmetric = if nvars >= 3 {
                Some(is_symmetric(&form)?)
            } else {
                None
            };
            let kernel = kernel_element(&form)?;
            let cmp = if table && reference_labels().contains(&(nvars, d)) {
                Some(compare_reference_table((nvars, d), &common.limits())?)
            } else {
                None
            };
            let json =
                formats::relation_report_json(&form, membership, symmetric, &kernel, cmp.as_ref());
            let text = match common.format {
                OutputFormat::Json => serde_json::to_string(&json).unwrap(),
                _ => format!(
                    "F({nvars},{d}): degree {}, {} terms, membership {}, symmetric {:?}",
                    form.poly.degree(),
                    form.poly.num_terms(),
                    membership,
                    symmetric
                ),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claims,
            scale,
            workers,
            common,
        } => {
            let scale = Scale::from_str(&scale).map_err(AppError::Config)?;
            let ids: Vec<ClaimId> = if claims == "all" {
                ClaimId::ALL.to_vec()
            } else {
                claims
                    .split(',')
                    .map(|s| ClaimId::from_str(s.trim()).map_err(AppError::Config))
                    .collect::<Result<_, _>>()?
            };
            let opts = ClaimOptions {
                limits: common.limits(),
                primes: common.primes(),
                seeds: common.seeds(),
            };
            let results = run_claims(&ids, scale, &opts, workers.max(1));
            let any_fail = results.iter().any(|r| r.failed());
            let any_skip = results.iter().any(|r| r.skipped());
            let text = match common.format {
                OutputFormat::Json => {
                    serde_json::to_string(&formats::verify_report_json(&results)).unwrap()
                }
                _ => {
                    let mut lines = String::new();
                    for result in &results {
                        let verdict = if result.failed() {
                            "FAIL"
                        } else if result.skipped() {
                            "SKIP"
                        } else {
                            "pass"
                        };
                        lines.push_str(&format!(
                            "{} [{}]: {}\n",
                            result.claim,
                            result.scale.as_str(),
                            verdict
                        ));
                        for check in &result.checks {
                            lines.push_str(&format!(
                                "  {} {}: {}\n",
                                check.status.as_str(),
                                check.name,
                                check.detail
                            ));
                        }
                    }
                    lines
                }
            };
            emit(&common, &text)?;
            if any_fail {
                Ok(ExitCode::from(1))
            } else if any_skip {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn build_spec(
    n: usize,
    d: usize,
    k: usize,
    family: FamilyArg,
    r: Option<usize>,
    generators_file: Option<&std::path::Path>,
    common: &CommonArgs,
) -> Result<IdealSpec, AppError> {
    match family {
        FamilyArg::General => {
            let count = r.unwrap_or(n + 1);
            let seed = common.seeds().first().copied().unwrap_or(1);
            Ok(IdealSpec::general(n, d, k, count, seed)?)
        }
        FamilyArg::PowersOfLinear => Ok(IdealSpec::powers_of_linear(n, d, k)?),
        FamilyArg::MonomialCi => Ok(IdealSpec::monomial_ci(n, d, k)?),
        FamilyArg::Explicit => {
            let path = generators_file.ok_or_else(|| {
                AppError::Config("explicit family needs --generators-file".into())
            })?;
            let content = std::fs::read_to_string(path)
                .map_err(|e| AppError::Config(format!("reading {}: {e}", path.display())))?;
            let term_lists: Vec<Vec<formats::TermJson>> = serde_json::from_str(&content)
                .map_err(|e| AppError::Config(format!("parsing {}: {e}", path.display())))?;
            let gens = term_lists
                .iter()
                .map(|terms| formats::poly_from_terms(n, terms))
                .collect::<Result<Vec<_>, String>>()
                .map_err(AppError::Config)?;
            Ok(IdealSpec::explicit(n, k, gens)?)
        }
    }
}

fn render_hilbert(json: &serde_json::Value, format: OutputFormat) -> Result<String, AppError> {
    match format {
        OutputFormat::Json => Ok(serde_json::to_string(json).unwrap()),
        OutputFormat::Text => {
            let values = json
                .get("values")
                .and_then(|v| v.as_array())
                .ok_or_else(|| AppError::Other("malformed report".into()))?;
            let series: Vec<String> = values
                .iter()
                .filter_map(|row| row.get(1).and_then(|v| v.as_u64()))
                .map(|v| v.to_string())
                .collect();
            let top = json
                .get("top")
                .and_then(|v| v.as_u64())
                .map(|t| format!(" (top={t})"))
                .unwrap_or_default();
            Ok(format!("{}{}", series.join(","), top))
        }
        OutputFormat::Csv => {
            let values = json
                .get("values")
                .and_then(|v| v.as_array())
                .ok_or_else(|| AppError::Other("malformed report".into()))?;
            let mut out = String::from("degree,value,certainty\n");
            for row in values {
                let arr = row.as_array().ok_or_else(|| {
                    AppError::Other("malformed values".into())
                })?;
                out.push_str(&format!(
                    "{},{},{}\n",
                    arr[0], arr[1],
                    arr[2].as_str().unwrap_or("")
                ));
            }
            Ok(out)
        }
    }
}

/// Grid cells distributed over worker threads, results in grid order.
fn scan_parallel(
    n: usize,
    d_range: (usize, usize),
    k_range: (usize, usize),
    opts: &WlpOptions,
    workers: usize,
) -> Vec<idealpower_core::wlp::GridCell> {
    if workers <= 1 {
        return scan_grid(n, d_range, k_range, opts);
    }
    let cells: Vec<(usize, usize)> = (d_range.0..=d_range.1)
        .flat_map(|d| (k_range.0..=k_range.1).map(move |k| (d, k)))
        .collect();
    let mut results: Vec<Option<idealpower_core::wlp::GridCell>> =
        (0..cells.len()).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results_mutex = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(cells.len()) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if idx >= cells.len() {
                    break;
                }
                let (d, k) = cells[idx];
                let cell = scan_grid(n, (d, d), (k, k), opts).remove(0);
                results_mutex.lock().unwrap()[idx] = Some(cell);
            });
        }
    });
    results.into_iter().map(|c| c.unwrap()).collect()
}
