use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use cpnb::berezin::{berezin_apply, berezin_kernel, build_wtable_to, IntegrationMethod, Observable, WTable};
use cpnb::geometry::{ChordValue, ProjectivePoint, DEFAULT_RADIAL_ORDER};
use cpnb::report::Status;
use cpnb::spectra::{reproducing_kernel, spectral_function_psi, LevelParams};
use cpnb::verify::{self, Grid, Suite};

#[derive(Parser)]
#[command(name = "cpnb", version, about = "Berezin transforms on spherical Landau levels of CP^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct LevelArgs {
    /// Complex dimension n >= 1.
    #[arg(long)]
    n: usize,
    /// Twice the field strength, 2nu >= 0.
    #[arg(long = "two-nu", default_value_t = 0)]
    two_nu: usize,
    /// Landau level m >= 0.
    #[arg(long, default_value_t = 0)]
    m: usize,
}

impl LevelArgs {
    fn params(self) -> Result<LevelParams, String> {
        LevelParams::new(self.n, self.two_nu, self.m).map_err(|e| e.to_string())
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Method {
    Radial,
    Mc,
    Tensor,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form and projected W for k = 0..=kmax.
    Wtable {
        #[command(flatten)]
        level: LevelArgs,
        /// Last row; defaults to 2nu + 2m + 2.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::value_parser!(SuiteArg))]
        suite: SuiteArg,
        #[arg(long, default_value = "small", value_parser = clap::value_parser!(GridArg))]
        grid: GridArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the full JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Tabulate a biinvariant kernel on a uniform grid in x = cos 2d.
    Kernel {
        #[command(flatten)]
        level: LevelArgs,
        /// reproducing, berezin or psi:K
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate the Berezin transform of an observable at a point.
    Transform {
        #[command(flatten)]
        level: LevelArgs,
        /// const, chord or psi:K (zonal observables are centred at --w0)
        #[arg(long = "f", default_value = "const")]
        f: String,
        /// Evaluation point as comma-separated re,im pairs; origin if omitted.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Centre of the observable, same format as --z.
        #[arg(long, allow_hyphen_values = true)]
        w0: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Radial)]
        method: Method,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        /// Quadrature size for radial and tensor rules.
        #[arg(long, default_value_t = DEFAULT_RADIAL_ORDER)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone)]
struct SuiteArg(Suite);
#[derive(Clone)]
struct GridArg(Grid);

impl std::str::FromStr for SuiteArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(SuiteArg)
    }
}

impl std::str::FromStr for GridArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(GridArg)
    }
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Io(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("CPNB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("CPNB_THREADS must be a positive integer, got '{v}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Wtable { level, kmax, format, out } => {
            let p = level.params().map_err(Failure::Usage)?;
            let table = build_wtable_to(p, kmax.unwrap_or(p.two_nu + 2 * p.m + 2));
            let text = match format {
                Format::Csv => wtable_csv(&table),
                Format::Json => json(&table),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Verify { suite, grid, seed, json: as_json } => {
            let doc = verify::run(suite.0, grid.0, seed);
            let text = if as_json {
                json(&doc)
            } else {
                let mut s = String::new();
                for c in &doc.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Finding => "FIND",
                    };
                    let params = c.params.map(|p| format!(" {p}")).unwrap_or_default();
                    let expected = c.expected.map_or("-".to_string(), |e| format!("{e:.6e}"));
                    let _ = writeln!(
                        s,
                        "{tag} {}{params}: measured {:.6e} expected {expected} tol {:.1e}",
                        c.name, c.measured, c.tolerance
                    );
                }
                let _ = writeln!(
                    s,
                    "{} passed, {} failed, {} findings",
                    doc.count(Status::Pass),
                    doc.count(Status::Fail),
                    doc.count(Status::Finding)
                );
                s
            };
            emit(&text, None)?;
            Ok(if doc.has_failures() { 1 } else { 0 })
        }
        Command::Kernel { level, which, points, format } => {
            let p = level.params().map_err(Failure::Usage)?;
            let kernel = parse_kernel(&which).map_err(Failure::Usage)?;
            if points < 2 {
                return Err(Failure::Usage("--points must be at least 2".into()));
            }
            let rows: Vec<(f64, f64)> = (0..points)
                .map(|i| {
                    let x = if i + 1 == points { 1.0 } else { -1.0 + 2.0 * i as f64 / (points - 1) as f64 };
                    let c = ChordValue::new(x).expect("grid lies in [-1, 1]");
                    let v = match kernel {
                        Kernel::Reproducing => reproducing_kernel(p, c),
                        Kernel::Berezin => berezin_kernel(p, c),
                        Kernel::Psi(k) => spectral_function_psi(p.n, k, c),
                    };
                    (x, v)
                })
                .collect();
            let text = match format {
                Format::Csv => {
                    let mut s = String::from("x,value\n");
                    for (x, v) in rows {
                        let _ = writeln!(s, "{x:.16e},{v:.16e}");
                    }
                    s
                }
                Format::Json => {
                    let pts: Vec<serde_json::Value> =
                        rows.iter().map(|&(x, v)| serde_json::json!({"x": x, "value": v})).collect();
                    json(&serde_json::json!({"params": p, "which": which, "points": pts}))
                }
            };
            emit(&text, None)?;
            Ok(0)
        }
        Command::Transform { level, f, z, w0, method, seed, samples, order, json: as_json } => {
            let p = level.params().map_err(Failure::Usage)?;
            let z = parse_point(z.as_deref(), p.n).map_err(Failure::Usage)?;
            let w0 = parse_point(w0.as_deref(), p.n).map_err(Failure::Usage)?;
            let obs = match parse_kernel_like(&f).map_err(Failure::Usage)? {
                Obs::Const => Observable::Constant(1.0),
                Obs::Chord => Observable::chord(w0),
                Obs::Psi(k) => Observable::psi(k, w0),
            };
            let method = match method {
                Method::Radial => IntegrationMethod::Radial { order },
                Method::Mc => IntegrationMethod::MonteCarlo { seed, count: samples },
                Method::Tensor => IntegrationMethod::Tensor { order },
            };
            let v = berezin_apply(p, &obs, &z, method).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = if as_json {
                json(&v)
            } else {
                match v.std_error {
                    Some(se) => format!("{:.16e} {se:.16e}\n", v.value),
                    None => format!("{:.16e}\n", v.value),
                }
            };
            emit(&text, None)?;
            Ok(0)
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialise");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn csv_field(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.16e}")).unwrap_or_default()
}

fn wtable_csv(t: &WTable) -> String {
    let mut s = String::from("k,lambda,w_formula,w_oracle,residual\n");
    for r in &t.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            r.k,
            csv_field(Some(r.lambda)),
            csv_field(r.w_formula),
            csv_field(Some(r.w_oracle)),
            csv_field(r.residual)
        );
    }
    s
}

enum Kernel {
    Reproducing,
    Berezin,
    Psi(usize),
}

fn parse_psi(s: &str) -> Option<Result<usize, String>> {
    s.strip_prefix("psi:")
        .map(|k| k.parse().map_err(|_| format!("bad spectral index in '{s}'")))
}

fn parse_kernel(s: &str) -> Result<Kernel, String> {
    match s {
        "reproducing" => Ok(Kernel::Reproducing),
        "berezin" => Ok(Kernel::Berezin),
        _ => match parse_psi(s) {
            Some(k) => k.map(Kernel::Psi),
            None => Err(format!("unknown kernel '{s}' (reproducing, berezin, psi:K)")),
        },
    }
}

enum Obs {
    Const,
    Chord,
    Psi(usize),
}

fn parse_kernel_like(s: &str) -> Result<Obs, String> {
    match s {
        "const" => Ok(Obs::Const),
        "chord" => Ok(Obs::Chord),
        _ => match parse_psi(s) {
            Some(k) => k.map(Obs::Psi),
            None => Err(format!("unknown observable '{s}' (const, chord, psi:K)")),
        },
    }
}

fn parse_point(s: Option<&str>, n: usize) -> Result<ProjectivePoint, String> {
    let Some(s) = s else {
        return Ok(ProjectivePoint::origin(n));
    };
    let vals: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad coordinate '{t}'")))
        .collect::<Result<_, _>>()?;
    if vals.len() != 2 * n {
        return Err(format!("expected {} numbers (re,im per coordinate), got {}", 2 * n, vals.len()));
    }
    let z = vals.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect();
    ProjectivePoint::new(z).map_err(|e| e.to_string())
}
