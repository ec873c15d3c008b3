use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sqgt_core::construct::{greedy_packing, or_from_packing, xor_construct};
use sqgt_core::counting::{count_bruteforce_row, count_dp, cumulative, edge_polynomial, TupleKind};
use sqgt_core::decode::simulate;
use sqgt_core::hypergraph::{
    count_hyperedges, gv_bound_size, gv_sample, max_code_exact, EdgeFamily,
};
use sqgt_core::io::{code_to_text, parse_code};
use sqgt_core::linalg::{bch_parity_check, catalog_inner_code, BinMatrix};
use sqgt_core::rates::{
    add_upper, curves, curves_to_csv, delta_grid, gv_rate_lambda, or_rate, reference_constants,
    xor_rate, xor_size_bounds,
};
use sqgt_core::{check_distance_chain, code_distance, Code, Lambda, MeasurementKind};

/// Exit status for a computation or verification that did not hold.
const EXIT_FAILED: u8 = 1;
/// Exit status for malformed invocations.
const EXIT_USAGE: u8 = 2;

type CliResult = Result<Outcome, String>;

/// Text for stdout and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// An unscaled distance `p` or `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    /// Smallest integer distance at the given scale that is at least this value.
    fn scaled_ceil(self, scale: i64) -> u64 {
        (self.num * scale as u64).div_ceil(self.den)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let num = num
            .trim()
            .parse::<u64>()
            .map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
        let den = den
            .trim()
            .parse::<u64>()
            .map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational { num, den })
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Or,
    Xor,
    Add,
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Paper,
    Extended,
}

impl From<FamilyArg> for EdgeFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Paper => EdgeFamily::Paper,
            FamilyArg::Extended => EdgeFamily::Extended,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TupleArg {
    #[value(name = "N")]
    N,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
}

impl From<TupleArg> for TupleKind {
    fn from(t: TupleArg) -> Self {
        match t {
            TupleArg::N => TupleKind::N,
            TupleArg::B => TupleKind::B,
            TupleArg::C => TupleKind::C,
        }
    }
}

#[derive(Debug, Args)]
struct KindOpts {
    /// Measurement rule.
    #[arg(long, value_enum, default_value = "lambda")]
    kind: KindArg,
    /// λ as a/b in lowest terms (used by --kind lambda).
    #[arg(long, default_value = "2/1")]
    lambda: Lambda,
}

impl KindOpts {
    fn kind(&self) -> MeasurementKind {
        match self.kind {
            KindArg::Or => MeasurementKind::Or,
            KindArg::Xor => MeasurementKind::Xor,
            KindArg::Add => MeasurementKind::Add,
            KindArg::Lambda => MeasurementKind::LambdaAdd(self.lambda),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sqgt",
    version,
    about = "λ-ADD group-testing codes: distances, constructions, counts and rate bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact subset-measurement distance of a code file.
    Dist {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[command(flatten)]
        kind: KindOpts,
        /// Also check the distance chain between λ-ADD, ADD, XOR and OR.
        #[arg(long)]
        chain: bool,
        /// Fail unless the distance is at least this (unscaled) value.
        #[arg(long)]
        require: Option<Rational>,
    },
    /// Build a code from an explicit construction.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Exact tuple counts by scaled distance.
    Count {
        #[arg(long = "i")]
        arity: usize,
        #[arg(long, value_enum, default_value = "N")]
        kind: TupleArg,
        #[arg(long, default_value = "2/1")]
        lambda: Lambda,
        #[arg(long)]
        n: usize,
        /// Largest scaled value tabulated (default: the largest possible).
        #[arg(long)]
        j_max: Option<usize>,
        /// Also report the count below this unscaled distance.
        #[arg(long)]
        d: Option<Rational>,
        /// Cross-check the row against direct enumeration.
        #[arg(long)]
        brute: bool,
        /// Write the whole table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Hyperedge counts of the conflict hypergraph on {0,1}^n.
    Edges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Rational,
        #[arg(long, default_value = "2/1")]
        lambda: Lambda,
        #[arg(long, value_enum, default_value = "paper")]
        family: FamilyArg,
    },
    /// Random independent set of the conflict hypergraph.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Rational,
        #[arg(long, default_value = "2/1")]
        lambda: Lambda,
        #[arg(long, value_enum, default_value = "extended")]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest code with distance at least d, by exhaustive search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Rational,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[command(flatten)]
        kind: KindOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rate and size bounds.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Comparison of rate lower bounds over a δ grid, as CSV.
    Curves {
        #[arg(long, default_value = "4/3")]
        lambda: Lambda,
        #[arg(long, default_value_t = 0.0)]
        start: f64,
        #[arg(long, default_value_t = 0.15)]
        end: f64,
        #[arg(long, default_value_t = 0.005)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode noisy λ-ADD measurements of random defective sets.
    Simulate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value = "2/1")]
        lambda: Lambda,
        /// ℓ1 noise budget, in units of 1/b.
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write parity-check or generator matrices.
    #[command(subcommand)]
    Matrix(MatrixCmd),
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    /// XOR code from a parity check of distance ≥ 2s+1 and an inner generator.
    Xor {
        /// Parity-check matrix file.
        #[arg(long, conflicts_with = "bch", required_unless_present = "bch")]
        hk: Option<PathBuf>,
        /// Narrow-sense BCH parity check over GF(2^m) correcting t errors, as m:t.
        #[arg(long)]
        bch: Option<String>,
        /// Inner generator matrix file.
        #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
        gn: Option<PathBuf>,
        /// Best catalog code of length n and distance ≥ d, as n:d.
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, default_value_t = 2)]
        s: usize,
        /// Inner-code distance to assume when it is too large to verify.
        #[arg(long)]
        declared_d: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// OR code from a greedy t-(v,k,1) packing.
    Packing {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum BoundCmd {
    /// λ-ADD GV rate bound at relative distance δ.
    Gv {
        #[arg(long)]
        lambda: Lambda,
        #[arg(long)]
        delta: f64,
    },
    /// OR rate lower bound from packings.
    Or {
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 2)]
        s: usize,
    },
    /// XOR rate lower bound from linear GV codes.
    Xor {
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 2)]
        s: usize,
    },
    /// Finite-length XOR size bounds.
    XorSize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
    },
    /// Sphere-packing upper bound on ADD code size for s = 2.
    AddUpper {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Literature rate constants for OR and ADD codes.
    Constants,
}

#[derive(Debug, Subcommand)]
enum MatrixCmd {
    /// BCH parity-check matrix.
    Bch {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: u32,
        /// Keep only the first n columns.
        #[arg(long)]
        shorten: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generator matrix of the best catalog code.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_code(path: &Path) -> Result<Code, String> {
    parse_code(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_matrix(path: &Path) -> Result<BinMatrix, String> {
    BinMatrix::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Writes `body` to `out` if given (noting the path in `text`), else
/// appends it to `text`.
fn emit(text: &mut String, body: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
            writeln!(text, "wrote: {}", path.display()).unwrap();
        }
        None => text.push_str(body),
    }
    Ok(())
}

fn pair(spec: &str, what: &str) -> Result<(usize, usize), String> {
    let (a, b) = spec
        .split_once(':')
        .ok_or_else(|| format!("{what} must look like x:y, got {spec:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|e| format!("{what} {spec:?}: {e}"))
    };
    Ok((parse(a)?, parse(b)?))
}

fn run_dist(
    path: &Path,
    s: usize,
    opts: &KindOpts,
    chain: bool,
    require: Option<Rational>,
) -> CliResult {
    let code = read_code(path)?;
    let kind = opts.kind();
    let report = code_distance(&code, s, kind).map_err(err)?;
    let mut text = String::new();
    writeln!(text, "kind: {kind}").unwrap();
    writeln!(text, "s: {s}").unwrap();
    writeln!(text, "words: {}", code.len()).unwrap();
    writeln!(text, "length: {}", code.length()).unwrap();
    writeln!(text, "scale: {}", report.scale()).unwrap();
    writeln!(text, "distance-scaled: {}", report.distance).unwrap();
    if let Some((a, b)) = &report.witness {
        writeln!(text, "witness: {a:?} vs {b:?}").unwrap();
    }
    let mut ok = true;
    if let Some(req) = require {
        let need = req.scaled_ceil(report.scale());
        let pass = report.distance.at_least(need);
        writeln!(
            text,
            "require: {req} (scaled {need}) {}",
            if pass { "ok" } else { "FAILED" }
        )
        .unwrap();
        ok &= pass;
    }
    if chain {
        let c = check_distance_chain(&code, opts.lambda).map_err(err)?;
        writeln!(
            text,
            "chain lambda={} : lambda-add {} add {} xor {} or {}",
            c.lambda, c.lambda_add, c.add, c.xor, c.or
        )
        .unwrap();
        writeln!(text, "chain: {}", if c.passed() { "ok" } else { "FAILED" }).unwrap();
        ok &= c.passed();
    }
    Ok(Outcome { text, ok })
}

fn run_construct(cmd: ConstructCmd) -> CliResult {
    let mut text = String::new();
    match cmd {
        ConstructCmd::Xor {
            hk,
            bch,
            gn,
            catalog,
            s,
            declared_d,
            out,
        } => {
            let hk = match (hk, bch) {
                (Some(p), _) => read_matrix(&p)?,
                (None, Some(spec)) => {
                    let (m, t) = pair(&spec, "--bch")?;
                    bch_parity_check(m as u32, t as u32, None).map_err(err)?
                }
                (None, None) => return Err("one of --hk or --bch is required".into()),
            };
            let gn = match (gn, catalog) {
                (Some(p), _) => read_matrix(&p)?,
                (None, Some(spec)) => {
                    let (n, d) = pair(&spec, "--catalog")?;
                    catalog_inner_code(n, d).map_err(err)?.1.generator
                }
                (None, None) => return Err("one of --gn or --catalog is required".into()),
            };
            let (code, cert) = xor_construct(&hk, &gn, s, declared_d).map_err(err)?;
            let mut header = vec![format!(
                "construction: xor from {}x{} parity check",
                hk.rows(),
                hk.cols()
            )];
            header.extend(cert.header_lines());
            emit(&mut text, &code_to_text(&code, &header), out.as_deref())?;
            if out.is_some() {
                writeln!(text, "words: {}", code.len()).unwrap();
                for line in cert.header_lines() {
                    writeln!(text, "{line}").unwrap();
                }
            }
        }
        ConstructCmd::Packing { v, k, t, s, out } => {
            let packing = greedy_packing(v, k, t).map_err(err)?;
            let (code, cert) = or_from_packing(&packing, s).map_err(err)?;
            let mut header = vec![
                format!("construction: or from {packing}"),
                format!("blocks: {}", packing.len()),
                format!("reference-size: {}", packing.eff_reference()),
            ];
            header.extend(cert.header_lines());
            emit(&mut text, &code_to_text(&code, &header), out.as_deref())?;
            if out.is_some() {
                writeln!(text, "words: {}", code.len()).unwrap();
            }
        }
    }
    Ok(Outcome::ok(text))
}

#[allow(clippy::too_many_arguments)]
fn run_count(
    arity: usize,
    kind: TupleKind,
    lam: Lambda,
    n: usize,
    j_max: Option<usize>,
    d: Option<Rational>,
    brute: bool,
    csv: Option<PathBuf>,
) -> CliResult {
    let poly = edge_polynomial(lam, arity, kind).map_err(err)?;
    let j_max = j_max.unwrap_or(poly.max_exponent() as usize * n);
    let table = count_dp(&poly, n, j_max).map_err(err)?;
    let mut text = String::new();
    writeln!(text, "tuple: i={arity} kind={kind} lambda={lam}").unwrap();
    writeln!(text, "polynomial: {poly}").unwrap();
    let row: Vec<String> = (0..=j_max).map(|j| table.get(n, j).to_string()).collect();
    writeln!(text, "row n={n}: {}", row.join(" ")).unwrap();
    if let Some(d) = d {
        let scaled = d.scaled_ceil(lam.denom()) as usize;
        let c = cumulative(&table, scaled).map_err(err)?;
        writeln!(text, "below d={d} (scaled {scaled}): {c}").unwrap();
    }
    if let Some(path) = csv {
        emit(&mut text, &table.to_csv(), Some(&path))?;
    }
    let mut ok = true;
    if brute {
        let brute_row = count_bruteforce_row(n, lam, arity, kind, false).map_err(err)?;
        let width = brute_row.len().max(j_max + 1);
        let agree = (0..width).all(|j| {
            let b = brute_row.get(j).cloned().unwrap_or_default();
            j > j_max && b == Default::default() || j <= j_max && b == table.get(n, j)
        });
        writeln!(
            text,
            "{}",
            if agree { "dp == brute" } else { "dp != brute" }
        )
        .unwrap();
        ok = agree;
    }
    Ok(Outcome { text, ok })
}

fn run_bound(cmd: BoundCmd) -> CliResult {
    let mut text = String::new();
    match cmd {
        BoundCmd::Gv { lambda, delta } => {
            let r = gv_rate_lambda(lambda, delta).map_err(err)?;
            writeln!(text, "{r}").unwrap();
        }
        BoundCmd::Or { delta, s } => {
            writeln!(text, "or-rate: {:.6}", or_rate(delta, s).map_err(err)?).unwrap();
        }
        BoundCmd::Xor { delta, s } => {
            writeln!(text, "xor-rate: {:.6}", xor_rate(delta, s).map_err(err)?).unwrap();
        }
        BoundCmd::XorSize { n, d, s } => {
            let (lo, hi) = xor_size_bounds(n, d, s).map_err(err)?;
            writeln!(text, "lower: {lo}").unwrap();
            writeln!(text, "upper: {hi}").unwrap();
        }
        BoundCmd::AddUpper { n, d } => {
            writeln!(text, "add-upper: {}", add_upper(n, d).map_err(err)?).unwrap();
        }
        BoundCmd::Constants => {
            let c = reference_constants();
            writeln!(text, "family,s,lower,upper").unwrap();
            for (name, rows) in [("or", c.or), ("add", c.add)] {
                for (s, l, u) in rows {
                    writeln!(text, "{name},{s},{l:.3},{u:.3}").unwrap();
                }
            }
        }
    }
    Ok(Outcome::ok(text))
}

fn run_matrix(cmd: MatrixCmd) -> CliResult {
    let mut text = String::new();
    let (m, out) = match cmd {
        MatrixCmd::Bch { m, t, shorten, out } => {
            (bch_parity_check(m, t, shorten).map_err(err)?, out)
        }
        MatrixCmd::Catalog { n, d, out } => {
            let (family, code) = catalog_inner_code(n, d).map_err(err)?;
            writeln!(
                text,
                "# family: {family:?}, [{}, {}, {}]",
                code.n, code.k, code.d_min
            )
            .unwrap();
            (code.generator, out)
        }
    };
    emit(&mut text, &m.to_text(), out.as_deref())?;
    Ok(Outcome::ok(text))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Dist {
            code,
            s,
            kind,
            chain,
            require,
        } => run_dist(&code, s, &kind, chain, require),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Count {
            arity,
            kind,
            lambda,
            n,
            j_max,
            d,
            brute,
            csv,
        } => run_count(arity, kind.into(), lambda, n, j_max, d, brute, csv),
        Command::Edges {
            n,
            d,
            lambda,
            family,
        } => {
            let scaled = d.scaled_ceil(lambda.denom());
            let counts = count_hyperedges(n, scaled, lambda, family.into()).map_err(err)?;
            let gv = gv_bound_size(&counts);
            let mut text = String::new();
            writeln!(text, "n: {n}").unwrap();
            writeln!(
                text,
                "d: {d} (scaled {scaled}), lambda: {lambda}, family: {}",
                counts.family
            )
            .unwrap();
            writeln!(text, "E2: {}", counts.e2).unwrap();
            writeln!(text, "E3: {}", counts.e3).unwrap();
            writeln!(text, "E4: {}", counts.e4).unwrap();
            writeln!(text, "tau: {:.6}", gv.tau).unwrap();
            writeln!(text, "bound: {:.6}", gv.bound).unwrap();
            writeln!(text, "sampling-p: {:.6}", gv.sampling_p).unwrap();
            Ok(Outcome::ok(text))
        }
        Command::Sample {
            n,
            d,
            lambda,
            family,
            seed,
            out,
        } => {
            let scaled = d.scaled_ceil(lambda.denom());
            let s = gv_sample(n, scaled, lambda, family.into(), seed).map_err(err)?;
            let header = vec![
                format!(
                    "sample: n={n} d={d} (scaled {scaled}) lambda={lambda} family={}",
                    EdgeFamily::from(family)
                ),
                format!("seed: {seed}"),
                format!("sampling-p: {:.6}", s.sampling_p),
                format!("sampled: {}", s.sampled),
                format!("removed: {}", s.removed),
                format!("size: {}", s.code.len()),
            ];
            let mut text = String::new();
            emit(&mut text, &code_to_text(&s.code, &header), out.as_deref())?;
            if out.is_some() {
                writeln!(text, "seed: {seed}").unwrap();
                writeln!(text, "size: {}", s.code.len()).unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::Search { n, d, s, kind, out } => {
            let mk = kind.kind();
            let scaled = d.scaled_ceil(mk.scale());
            let (size, code) = max_code_exact(n, scaled, s, mk).map_err(err)?;
            let header = vec![
                format!("search: n={n} d={d} (scaled {scaled}) s={s} kind={mk}"),
                format!("maximum: {size}"),
            ];
            let mut text = String::new();
            emit(&mut text, &code_to_text(&code, &header), out.as_deref())?;
            if out.is_some() {
                writeln!(text, "maximum: {size}").unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::Bound(cmd) => run_bound(cmd),
        Command::Curves {
            lambda,
            start,
            end,
            step,
            out,
        } => {
            let grid = delta_grid(start, end, step).map_err(err)?;
            let rows = curves(lambda, &grid).map_err(err)?;
            let mut text = String::new();
            emit(&mut text, &curves_to_csv(&rows), out.as_deref())?;
            Ok(Outcome::ok(text))
        }
        Command::Simulate {
            code,
            lambda,
            budget,
            trials,
            seed,
        } => {
            let code = read_code(&code)?;
            let stats = simulate(&code, lambda, budget, trials, seed).map_err(err)?;
            let mut text = String::new();
            writeln!(text, "lambda: {lambda}").unwrap();
            writeln!(text, "budget-scaled: {budget}").unwrap();
            writeln!(text, "seed: {seed}").unwrap();
            writeln!(text, "trials: {}", stats.trials).unwrap();
            writeln!(text, "successes: {}", stats.successes).unwrap();
            writeln!(text, "failures: {}", stats.failures).unwrap();
            writeln!(text, "max-residual: {}", stats.max_residual).unwrap();
            Ok(Outcome::ok(text))
        }
        Command::Matrix(cmd) => run_matrix(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}
