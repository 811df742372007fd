//! Command-line front end: every library operation behind one binary with
//! deterministic text/JSON output, a persistent character cache, and
//! explicit feasibility guards.
//!
//! Exit codes: 0 success, 1 failed verification, 2 invalid input,
//! 3 feasibility-guard refusal.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kroncalc::bounds;
use kroncalc::certify::{self, LowerBoundCertificate, ShapeKind};
use kroncalc::identities::{self, ContingencySpec};
use kroncalc::kronecker::{MaxStat, Oracle};
use kroncalc::partition::{Partition, SkewShape};
use kroncalc::{guard, Error, DEFAULT_SCAN_MAX_N, DEFAULT_TABLE_MAX_N};

#[derive(Parser)]
#[command(
    name = "kroncalc",
    version,
    about = "Exact Kronecker, Kostka and Littlewood-Richardson coefficients, \
             bound reports, identity verification and lower-bound certificates"
)]
struct Cli {
    /// Output format: text or json
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Character cache directory (env KRONCALC_CACHE_DIR; the flag wins)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Raise every feasibility guard to this limit
    #[arg(long, global = true)]
    max_n: Option<u32>,

    /// Append elapsed time and cache-hit counts to the output
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficients
    Kron {
        #[command(subcommand)]
        cmd: KronCmd,
    },
    /// Kostka number K_{lambda,alpha}, or skew K_{lambda/inner,alpha}
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        inner: Option<Partition>,
    },
    /// Littlewood-Richardson coefficient c^lambda_{mu,nu}
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Character value chi^lambda(rho)
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        rho: Partition,
    },
    /// Dimension f^lambda (standard Young tableaux of shape lambda)
    Dim {
        #[arg(long)]
        lambda: Partition,
    },
    /// Bound reports
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
    /// Exhaustive maximal-coefficient scan
    Scan {
        /// One of K, Ks, Kfs, A, As, B, Bfs
        #[arg(long)]
        stat: MaxStat,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Identity verification; exits 1 if the identity fails
    Verify {
        /// littlewood | cauchy | h-cauchy | monotonicity | saxl
        #[arg(long)]
        identity: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        lambda: Option<Partition>,
        /// Size of the first factor for littlewood (default: all splits)
        #[arg(long)]
        split: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        a: Option<u32>,
        /// Number of random monotonicity instances
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 20250808)]
        seed: u64,
        /// Maximum base/increment size for random instances
        #[arg(long, default_value_t = 6)]
        size_max: u32,
    },
    /// Special shapes
    Construct {
        #[arg(long)]
        shape: ShapeKindArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Lower-bound certificates
    Certify {
        #[command(subcommand)]
        cmd: CertifyCmd,
    },
    /// Character cache management
    Cache {
        #[command(subcommand)]
        cmd: CacheCmd,
    },
}

#[derive(Subcommand)]
enum KronCmd {
    /// Single coefficient g(lambda,mu,nu)
    Compute {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Full expansion of s_mu * s_nu
    Table {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Instantiate every applicable bound on a triple
    Check {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Compute the exact coefficient and verdicts
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Self-conjugate embedding of g(alpha,alpha,alpha)
    Embed {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        k: u32,
    },
    /// g(lam,lam,lam) >= g(alpha,beta,gamma) at lam = alpha+beta+gamma
    Symmetrize {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        beta: Partition,
        #[arg(long)]
        gamma: Partition,
    },
    /// Doubling/conjugation chain to the square triple
    SquareChain {
        #[arg(long)]
        r: u32,
    },
    /// Replay a certificate file and optionally confirm it numerically
    Replay {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        confirm: bool,
    },
}

#[derive(Subcommand)]
enum CacheCmd {
    Info,
    Clear,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ShapeKindArg {
    Staircase,
    Square,
    Caret,
    #[value(name = "chopped_square", alias = "chopped-square")]
    ChoppedSquare,
}

impl ShapeKindArg {
    fn kind(self) -> ShapeKind {
        match self {
            ShapeKindArg::Staircase => ShapeKind::Staircase,
            ShapeKindArg::Square => ShapeKind::Square,
            ShapeKindArg::Caret => ShapeKind::Caret,
            ShapeKindArg::ChoppedSquare => ShapeKind::ChoppedSquare,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ShapeKindArg::Staircase => "staircase",
            ShapeKindArg::Square => "square",
            ShapeKindArg::Caret => "caret",
            ShapeKindArg::ChoppedSquare => "chopped_square",
        }
    }
}

/// Per-command feasibility limits; --max-n raises all of them.
struct Limits {
    table: u32,
    scan: u32,
    littlewood: u32,
    cauchy_n: u32,
    cauchy_k: u32,
    cont_k: u32,
    cont_a: u32,
}

impl Limits {
    fn new(max_n: Option<u32>) -> Self {
        let or = |d: u32| max_n.map_or(d, |m| m.max(d));
        Limits {
            table: or(DEFAULT_TABLE_MAX_N),
            scan: or(DEFAULT_SCAN_MAX_N),
            littlewood: or(6),
            cauchy_n: or(5),
            cauchy_k: or(3),
            cont_k: or(identities::CONTINGENCY_MAX_K),
            cont_a: or(identities::CONTINGENCY_MAX_A),
        }
    }
}

struct Output {
    command: &'static str,
    parameters: BTreeMap<&'static str, String>,
    result: Value,
    text: String,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("KRONCALC_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("./.kroncache"));
    let limits = Limits::new(cli.max_n);
    let oracle = Oracle::new();
    if needs_oracle(&cli.command) {
        if let Err(e) = oracle.chars.load_dir(&cache_dir) {
            eprintln!("warning: ignoring character cache: {e}");
        }
    }
    let loaded_entries = oracle.chars.entry_count();

    let outcome = kroncalc::with_thread_pool(cli.threads, || {
        run(&cli.command, &oracle, &limits, &cache_dir)
    });

    match outcome {
        Ok(out) => {
            if needs_oracle(&cli.command) && oracle.chars.entry_count() > loaded_entries {
                if let Err(e) = oracle.chars.save_dir(&cache_dir) {
                    eprintln!("warning: could not persist character cache: {e}");
                }
            }
            let elapsed = started.elapsed().as_millis() as u64;
            match cli.format {
                Format::Json => {
                    let mut envelope = json!({
                        "command": out.command,
                        "parameters": out.parameters,
                        "result": out.result,
                    });
                    if cli.timings {
                        envelope["elapsed_ms"] = json!(elapsed);
                        envelope["cache_hits"] = json!(oracle.chars.cache_hits());
                    }
                    println!("{envelope}");
                }
                Format::Text => {
                    println!("{}", out.text);
                    if cli.timings {
                        println!(
                            "elapsed: {elapsed} ms, cache hits: {}",
                            oracle.chars.cache_hits()
                        );
                    }
                }
            }
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::GuardExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn needs_oracle(cmd: &Command) -> bool {
    !matches!(
        cmd,
        Command::Dim { .. }
            | Command::Kostka { .. }
            | Command::Lr { .. }
            | Command::Construct { .. }
            | Command::Cache { .. }
            | Command::Certify {
                cmd: CertifyCmd::SquareChain { .. },
            }
    )
}

fn run(
    command: &Command,
    oracle: &Oracle,
    limits: &Limits,
    cache_dir: &Path,
) -> kroncalc::Result<Output> {
    match command {
        Command::Kron { cmd } => run_kron(cmd, oracle, limits),
        Command::Kostka {
            lambda,
            alpha,
            inner,
        } => {
            let inner_shape = inner.clone().unwrap_or_else(Partition::empty);
            let shape = SkewShape::new(lambda.clone(), inner_shape.clone())?;
            let value = kroncalc::symfunc::skew_kostka(&shape, alpha.parts())?;
            let mut parameters = BTreeMap::from([
                ("lambda", lambda.to_string()),
                ("alpha", alpha.to_string()),
            ]);
            if inner.is_some() {
                parameters.insert("inner", inner_shape.to_string());
            }
            Ok(Output {
                command: "kostka",
                parameters,
                result: json!({"value": value.to_string()}),
                text: value.to_string(),
                exit: 0,
            })
        }
        Command::Lr { lambda, mu, nu } => {
            let value = kroncalc::symfunc::lr(lambda, mu, nu)?;
            Ok(Output {
                command: "lr",
                parameters: BTreeMap::from([
                    ("lambda", lambda.to_string()),
                    ("mu", mu.to_string()),
                    ("nu", nu.to_string()),
                ]),
                result: json!({"value": value.to_string()}),
                text: value.to_string(),
                exit: 0,
            })
        }
        Command::Char { lambda, rho } => {
            guard("character", lambda.size(), limits.table)?;
            let value = oracle.chars.character(lambda, rho)?;
            Ok(Output {
                command: "char",
                parameters: BTreeMap::from([
                    ("lambda", lambda.to_string()),
                    ("rho", rho.to_string()),
                ]),
                result: json!({"value": value.to_string()}),
                text: value.to_string(),
                exit: 0,
            })
        }
        Command::Dim { lambda } => {
            let value = kroncalc::chartab::dimension(lambda);
            Ok(Output {
                command: "dim",
                parameters: BTreeMap::from([("lambda", lambda.to_string())]),
                result: json!({"value": value.to_string()}),
                text: value.to_string(),
                exit: 0,
            })
        }
        Command::Bounds {
            cmd:
                BoundsCmd::Check {
                    lambda,
                    mu,
                    nu,
                    exact,
                },
        } => {
            if *exact {
                guard("bound check with exact value", lambda.size(), limits.table)?;
            }
            let report = bounds::check_triple(oracle, lambda, mu, nu, *exact)?;
            let mut text = format!(
                "triple ({};{};{})  exact: {}\n",
                lambda,
                mu,
                nu,
                report
                    .exact
                    .as_ref()
                    .map_or("not computed".to_string(), |g| g.to_string())
            );
            for e in &report.entries {
                let (value, kind) = e.value.render();
                let kind = if kind == "squared" { " (squared)" } else { "" };
                text.push_str(&format!(
                    "  {:<11} {:<15} {}{}  [{}]\n",
                    e.name,
                    verdict_str(e),
                    truncate(&value, 40),
                    kind,
                    e.applicability
                ));
            }
            text.push_str(&format!(
                "minimum applicable bound: {}",
                report.min_bound.unwrap_or("none")
            ));
            Ok(Output {
                command: "bounds check",
                parameters: BTreeMap::from([
                    ("lambda", lambda.to_string()),
                    ("mu", mu.to_string()),
                    ("nu", nu.to_string()),
                    ("exact", exact.to_string()),
                ]),
                result: report.to_json(),
                text,
                exit: 0,
            })
        }
        Command::Scan { stat, n, k } => {
            let res = oracle.scan_max(*stat, *n, *k, limits.scan)?;
            let text = format!(
                "{}({}{}) = {}  witness ({};{};{})",
                stat.name(),
                n,
                k.map_or(String::new(), |k| format!(",{k}")),
                res.value,
                res.witness[0],
                res.witness[1],
                res.witness[2]
            );
            let mut parameters =
                BTreeMap::from([("stat", stat.name().to_string()), ("n", n.to_string())]);
            if let Some(k) = k {
                parameters.insert("k", k.to_string());
            }
            Ok(Output {
                command: "scan",
                parameters,
                result: res.to_json(),
                text,
                exit: 0,
            })
        }
        Command::Verify {
            identity,
            n,
            lambda,
            split,
            k,
            a,
            random,
            seed,
            size_max,
        } => run_verify(
            oracle, limits, identity, *n, lambda, *split, *k, *a, *random, *seed, *size_max,
        ),
        Command::Construct { shape, k, t } => {
            let p = certify::shape(shape.kind(), *k, *t)?;
            let mut parameters = BTreeMap::from([
                ("shape", shape.name().to_string()),
                ("k", k.to_string()),
            ]);
            if let Some(t) = t {
                parameters.insert("t", t.to_string());
            }
            Ok(Output {
                command: "construct",
                parameters,
                result: json!({"partition": p.to_string(), "size": p.size()}),
                text: p.to_string(),
                exit: 0,
            })
        }
        Command::Certify { cmd } => run_certify(cmd, oracle, limits),
        Command::Cache { cmd } => run_cache(cmd, cache_dir),
    }
}

fn run_kron(cmd: &KronCmd, oracle: &Oracle, limits: &Limits) -> kroncalc::Result<Output> {
    match cmd {
        KronCmd::Compute { lambda, mu, nu } => {
            guard("kronecker coefficient", lambda.size(), limits.table)?;
            let value = oracle.kron(lambda, mu, nu)?;
            Ok(Output {
                command: "kron compute",
                parameters: BTreeMap::from([
                    ("lambda", lambda.to_string()),
                    ("mu", mu.to_string()),
                    ("nu", nu.to_string()),
                ]),
                result: json!({"value": value.to_string()}),
                text: value.to_string(),
                exit: 0,
            })
        }
        KronCmd::Table { mu, nu } => {
            let expansion = oracle.expansion(mu, nu, limits.table)?;
            let mut text = format!("s_{{{mu}}} * s_{{{nu}}} =\n");
            for (lam, g) in &expansion.coefficients {
                text.push_str(&format!("  {g}  s_{{{lam}}}\n"));
            }
            text.pop();
            Ok(Output {
                command: "kron table",
                parameters: BTreeMap::from([("mu", mu.to_string()), ("nu", nu.to_string())]),
                result: expansion.to_json(),
                text,
                exit: 0,
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    oracle: &Oracle,
    limits: &Limits,
    identity: &str,
    n: Option<u32>,
    lambda: &Option<Partition>,
    split: Option<u32>,
    k: Option<u32>,
    a: Option<u32>,
    random: Option<u64>,
    seed: u64,
    size_max: u32,
) -> kroncalc::Result<Output> {
    let need = |what: &str, v: Option<u32>| {
        v.ok_or_else(|| Error::InvalidParameter(format!("verify {identity} needs --{what}")))
    };
    let (result, equal): (Value, bool) = match identity {
        "littlewood" => {
            let report = if let Some(lam) = lambda {
                match split {
                    Some(m) => identities::verify_littlewood(oracle, lam, m, limits.littlewood)?,
                    None => {
                        let mut total = 0;
                        let mut all_equal = true;
                        for m in 0..=lam.size() {
                            let r =
                                identities::verify_littlewood(oracle, lam, m, limits.littlewood)?;
                            total += r.instances;
                            all_equal &= r.equal;
                        }
                        identities::IdentityReport {
                            identity: "littlewood",
                            parameters: BTreeMap::from([("lambda", lam.to_string())]),
                            lhs: None,
                            rhs: None,
                            instances: total,
                            equal: all_equal,
                        }
                    }
                }
            } else {
                identities::verify_littlewood_all(oracle, need("n", n)?, limits.littlewood)?
            };
            (report.to_json(), report.equal)
        }
        "cauchy" => {
            let report = identities::verify_cauchy(
                oracle,
                need("n", n)?,
                need("k", k)?,
                limits.cauchy_n,
                limits.cauchy_k,
            )?;
            (report.to_json(), report.equal)
        }
        "h-cauchy" => {
            let spec = ContingencySpec::new(need("k", k)?, need("a", a)?)?;
            let report = identities::verify_h_identity(oracle, spec, limits.cont_k, limits.cont_a)?;
            (report.to_json(), report.equal)
        }
        "monotonicity" => {
            let report = match random {
                Some(count) => {
                    certify::verify_monotone_random(oracle, count, size_max, seed, limits.scan)?
                }
                None => certify::verify_monotone_increments(oracle, need("n", n)?, limits.scan)?,
            };
            let equal = report.ok();
            let params: BTreeMap<&'static str, String> = match random {
                Some(count) => BTreeMap::from([
                    ("random", count.to_string()),
                    ("seed", seed.to_string()),
                    ("size_max", size_max.to_string()),
                ]),
                None => BTreeMap::from([("n", n.unwrap_or_default().to_string())]),
            };
            let result = json!({
                "identity": "monotonicity",
                "parameters": params,
                "instances": report.instances,
                "zero_witness_flagged": report.zero_witness,
                "equal": equal,
                "violations": report.violations,
            });
            (result, equal)
        }
        "saxl" => {
            let report = certify::verify_saxl(oracle, need("n", n)?, limits.scan)?;
            let equal = report.all_positive();
            (report.to_json(), equal)
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown identity {other:?} (expected littlewood|cauchy|h-cauchy|monotonicity|saxl)"
            )))
        }
    };
    let text = format!(
        "{identity}: {}{}",
        if equal { "OK" } else { "FAILED" },
        result
            .get("instances")
            .map(|i| format!(" ({i} instances)"))
            .unwrap_or_default()
    );
    Ok(Output {
        command: "verify",
        parameters: BTreeMap::from([("identity", identity.to_string())]),
        result,
        text,
        exit: u8::from(!equal),
    })
}

fn run_certify(cmd: &CertifyCmd, oracle: &Oracle, limits: &Limits) -> kroncalc::Result<Output> {
    let render = |cert: &LowerBoundCertificate| -> String {
        let claim = cert.certified_value.as_ref().map_or_else(
            || {
                format!(
                    "g({};{};{})",
                    cert.source[0], cert.source[1], cert.source[2]
                )
            },
            |v| v.to_string(),
        );
        format!(
            "certified: g({};{};{}) >= {claim}\nsteps: {}, effective: {}\n{}",
            cert.target[0],
            cert.target[1],
            cert.target[2],
            cert.steps.len(),
            cert.is_effective(),
            serde_json::to_string_pretty(&cert.to_json()).expect("serializable")
        )
    };
    match cmd {
        CertifyCmd::Embed { alpha, k } => {
            let cert = certify::fullsym_embed(oracle, alpha, *k, limits.scan)?;
            Ok(Output {
                command: "certify embed",
                parameters: BTreeMap::from([("alpha", alpha.to_string()), ("k", k.to_string())]),
                text: render(&cert),
                result: cert.to_json(),
                exit: 0,
            })
        }
        CertifyCmd::Symmetrize { alpha, beta, gamma } => {
            guard("symmetrize witness", alpha.size(), limits.scan)?;
            let cert = certify::symmetrize(oracle, alpha, beta, gamma)?;
            Ok(Output {
                command: "certify symmetrize",
                parameters: BTreeMap::from([
                    ("alpha", alpha.to_string()),
                    ("beta", beta.to_string()),
                    ("gamma", gamma.to_string()),
                ]),
                text: render(&cert),
                result: cert.to_json(),
                exit: 0,
            })
        }
        CertifyCmd::SquareChain { r } => {
            let cert = certify::square_chain(*r)?;
            Ok(Output {
                command: "certify square-chain",
                parameters: BTreeMap::from([("r", r.to_string())]),
                text: render(&cert),
                result: cert.to_json(),
                exit: 0,
            })
        }
        CertifyCmd::Replay { file, confirm } => {
            let value: Value = serde_json::from_str(&std::fs::read_to_string(file)?)?;
            let cert = LowerBoundCertificate::from_json(&value)?;
            cert.replay()?;
            let confirmed = if *confirm {
                cert.confirm(oracle, limits.scan)?
            } else {
                None
            };
            let text = format!(
                "replayed: target ({};{};{}), effective: {}, confirmed: {}",
                cert.target[0],
                cert.target[1],
                cert.target[2],
                cert.is_effective(),
                match confirmed {
                    Some(true) => "yes",
                    Some(false) => "VIOLATED",
                    None => "not checked",
                }
            );
            let result = json!({
                "replayed": true,
                "target": cert.target.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "effective": cert.is_effective(),
                "confirmed": confirmed,
            });
            Ok(Output {
                command: "certify replay",
                parameters: BTreeMap::from([("file", file.display().to_string())]),
                result,
                text,
                exit: u8::from(confirmed == Some(false)),
            })
        }
    }
}

fn run_cache(cmd: &CacheCmd, cache_dir: &Path) -> kroncalc::Result<Output> {
    let cache_files = |dir: &Path| -> kroncalc::Result<Vec<PathBuf>> {
        let mut paths = Vec::new();
        if dir.is_dir() {
            for entry in std::fs::read_dir(dir)? {
                let path = entry?.path();
                let is_cache = path
                    .file_name()
                    .and_then(|f| f.to_str())
                    .map(|f| f.starts_with("chartab_") && f.ends_with(".json"))
                    .unwrap_or(false);
                if is_cache {
                    paths.push(path);
                }
            }
        }
        paths.sort();
        Ok(paths)
    };
    match cmd {
        CacheCmd::Info => {
            let mut files = Vec::new();
            let mut text = format!("cache dir: {}", cache_dir.display());
            for path in cache_files(cache_dir)? {
                let bytes = std::fs::metadata(&path)?.len();
                let name = path.file_name().unwrap().to_string_lossy().to_string();
                text.push_str(&format!("\n  {name}: {bytes} bytes"));
                files.push(json!({"file": name, "bytes": bytes}));
            }
            Ok(Output {
                command: "cache info",
                parameters: BTreeMap::new(),
                result: json!({"dir": cache_dir.display().to_string(), "files": files}),
                text,
                exit: 0,
            })
        }
        CacheCmd::Clear => {
            let mut removed = 0u32;
            for path in cache_files(cache_dir)? {
                std::fs::remove_file(&path)?;
                removed += 1;
            }
            Ok(Output {
                command: "cache clear",
                parameters: BTreeMap::new(),
                result: json!({"removed": removed}),
                text: format!("removed {removed} cache files"),
                exit: 0,
            })
        }
    }
}

fn verdict_str(e: &bounds::BoundEntry) -> &'static str {
    match e.verdict {
        bounds::Verdict::Pass => "pass",
        bounds::Verdict::Fail => "FAIL",
        bounds::Verdict::NotApplicable => "not-applicable",
    }
}

fn truncate(s: &str, max: usize) -> String {
    if s.len() <= max {
        s.to_string()
    } else {
        format!("{}...<{} digits>", &s[..max], s.len())
    }
}
