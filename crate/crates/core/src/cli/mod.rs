//! Command-line front end. [`run`] never writes to `out` unless the whole command succeeded;
//! diagnostics go to `err`.
//!
//! Exit codes: `0` success, `1` usage, parse or syntax error, `2` the quiver has sources,
//! `3` invalid modulus or prime.

mod records;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{AlgebraError, LeavittPathAlgebra, Rational};
use crate::filtration::{filtration_report, FiltrationError};
use crate::ktheory::{
    divisibility_report, mod_l_ktheory, moore_splitting_check, DegreeWindow, KTheoryError,
    FIELD_HYPOTHESIS,
};
use crate::linalg::{is_prime, LinalgError, Modulus};
use crate::quiver::{Quiver, QuiverError};

pub use records::{parse_records, render_records, RecordError, Records};

#[derive(Parser, Debug)]
#[command(
    name = "lkmod",
    version,
    about = "Mod-l^v K-theory of Leavitt path algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Args, Debug)]
struct Window {
    /// First degree of the table.
    #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
    from: i64,
    /// Last degree of the table.
    #[arg(long, default_value_t = 7, allow_hyphen_values = true)]
    to: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate K_n(L_Q; Z/m).
    Kmod {
        quiver: PathBuf,
        /// Modulus, as `m` or `l^v`.
        #[arg(long = "mod")]
        modulus: String,
        #[command(flatten)]
        window: Window,
    },
    /// Vanishing and unique divisibility for a list of primes.
    Analyze {
        quiver: PathBuf,
        /// Comma separated primes or prime powers, e.g. `2,3^2,5`.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<String>,
    },
    /// Normal form and grading components of an element.
    Algebra {
        quiver: PathBuf,
        /// Expression such as `2/3 a b* - e(v1)`.
        #[arg(long)]
        eval: String,
    },
    /// Length filtration blocks and K0 matrices at one level.
    Filtration {
        quiver: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Compare K_*(L_n; Z/m) with the sum over the prime power factors of n.
    Split {
        #[arg(long = "n")]
        n: u64,
        #[arg(long = "mod")]
        modulus: String,
        #[command(flatten)]
        window: Window,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Sources(String),
    Modulus(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Sources(_) => 2,
            Failure::Modulus(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Sources(m) | Failure::Modulus(m) => m,
        }
    }
}

impl From<QuiverError> for Failure {
    fn from(e: QuiverError) -> Self {
        match e {
            QuiverError::HasSources(_) => Failure::Sources(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<LinalgError> for Failure {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::InvalidModulus(_) => Failure::Modulus(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<KTheoryError> for Failure {
    fn from(e: KTheoryError) -> Self {
        match e {
            KTheoryError::Quiver(q) => q.into(),
            KTheoryError::Modulus(m) => m.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::HasSources(_) => Failure::Sources(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<FiltrationError> for Failure {
    fn from(e: FiltrationError) -> Self {
        match e {
            FiltrationError::Quiver(q) => q.into(),
            FiltrationError::Algebra(a) => a.into(),
            FiltrationError::KTheory(k) => k.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Text and record renderings of one result.
struct Output {
    text: String,
    records: Records,
}

impl Output {
    fn new() -> Self {
        Output {
            text: String::new(),
            records: Records::new(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

fn read_quiver(path: &Path) -> Result<Quiver, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Quiver::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_modulus(s: &str) -> Result<Modulus, Failure> {
    Ok(s.parse::<Modulus>()?)
}

fn parse_prime_power(s: &str) -> Result<(u64, u32), Failure> {
    let bad = || Failure::Modulus(format!("`{s}` is not a prime or prime power l^v"));
    let (p, e) = match s.trim().split_once('^') {
        Some((p, e)) => (
            p.trim().parse::<u64>().map_err(|_| bad())?,
            e.trim().parse::<u32>().map_err(|_| bad())?,
        ),
        None => (s.trim().parse::<u64>().map_err(|_| bad())?, 1),
    };
    if !is_prime(p) || e == 0 || p.checked_pow(e).is_none() {
        return Err(bad());
    }
    Ok((p, e))
}

fn window(w: &Window) -> Result<DegreeWindow, Failure> {
    Ok(DegreeWindow::new(w.from, w.to)?)
}

fn cmd_kmod(path: &Path, modulus: &str, w: &Window) -> Result<Output, Failure> {
    let q = read_quiver(path)?;
    let modulus = parse_modulus(modulus)?;
    let window = window(w)?;
    let table = mod_l_ktheory(&q.order_sinks_first(), &modulus, window)?;
    let mut out = Output::new();
    out.line(format!("hypothesis: {FIELD_HYPOTHESIS}"));
    out.records.push("hypothesis", FIELD_HYPOTHESIS);
    out.records.push("modulus", &modulus);
    if let Some(w) = table.warning() {
        out.line(format!("warning: {w}"));
        out.records.push("warning", w);
    }
    for (n, entry) in table.iter() {
        out.line(format!("K_{{{n}}}(L_Q; Z/{modulus}) = {}", entry.group));
        out.records.push(format!("K_{{{n}}}"), &entry.group);
    }
    Ok(out)
}

fn cmd_analyze(path: &Path, primes: &[String]) -> Result<Output, Failure> {
    let q = read_quiver(path)?;
    let primes = primes
        .iter()
        .map(|s| parse_prime_power(s))
        .collect::<Result<Vec<_>, _>>()?;
    let report = divisibility_report(&q.order_sinks_first(), &primes)?;
    let mut out = Output::new();
    out.line(format!("hypothesis: {FIELD_HYPOTHESIS}"));
    out.records.push("hypothesis", FIELD_HYPOTHESIS);
    if let Some(det) = &report.determinant {
        out.line(format!("determinant of (0; id) - I_Q^t: {}", det.value));
        out.records.push("determinant", &det.value);
    }
    for r in &report.primes {
        let label = r.label();
        let m = &r.modulus;
        out.line(format!(
            "{label}: K_even(L_Q; Z/{m}) = {}, K_odd(L_Q; Z/{m}) = {}",
            r.even_group(),
            r.odd_group()
        ));
        out.line(format!("{label}: {}", r.conclusion.describe(&label)));
        out.records.push(format!("{label}.K_even"), r.even_group());
        out.records.push(format!("{label}.K_odd"), r.odd_group());
        out.records
            .push(format!("{label}.conclusion"), r.conclusion.describe(&label));
    }
    if let Some(ok) = report.determinant_consistent() {
        let verdict = if ok { "consistent" } else { "INCONSISTENT" };
        out.line(format!("determinant criterion: {verdict}"));
        out.records.push("determinant_criterion", verdict);
    }
    Ok(out)
}

fn cmd_algebra(path: &Path, expr: &str) -> Result<Output, Failure> {
    let q = read_quiver(path)?;
    let alg = LeavittPathAlgebra::new(q);
    let x = alg.eval::<Rational>(expr)?;
    let mut out = Output::new();
    out.line(x.to_string());
    out.records.push("normal_form", &x);
    for (d, c) in x.grading_components() {
        out.line(format!("degree {d}: {c}"));
        out.records.push(format!("degree_{d}"), &c);
    }
    Ok(out)
}

fn cmd_filtration(path: &Path, level: usize) -> Result<Output, Failure> {
    let q = read_quiver(path)?.order_sinks_first();
    let r = filtration_report(&q, level)?;
    let mut out = Output::new();
    let _ = writeln!(out.text, "{r}");
    let yes_no = |b: bool| if b { "true" } else { "false" };
    out.records.push("level", level);
    out.records.push("blocks", r.profile.num_blocks());
    for (b, size) in &r.profile.blocks {
        out.records.push(format!("block{}", b.render(&q)), size);
    }
    out.records.push("sum_of_squares", r.profile.dimension());
    out.records.push("symbolic_dimension", r.span_dim);
    out.records
        .push("dimension_match", yes_no(r.dimension_matches()));
    out.records
        .push("block_count_match", yes_no(r.block_count_matches()));
    out.records.push("inclusion", &r.inclusion);
    out.records
        .push("inclusion_match", yes_no(r.inclusion_matches()));
    out.records.push("phi", &r.phi);
    out.records.push("phi_match", yes_no(r.phi_matches()));
    out.records
        .push("stabilization", yes_no(r.stabilization.holds()));
    Ok(out)
}

fn cmd_split(n: u64, modulus: &str, w: &Window) -> Result<Output, Failure> {
    let modulus = parse_modulus(modulus)?;
    let window = window(w)?;
    let s = moore_splitting_check(n, &modulus, window)?;
    let mut out = Output::new();
    let factors: Vec<String> = s.factors.iter().map(|(p, e)| format!("{p}^{e}")).collect();
    out.line(format!(
        "n = {n} = {}, modulus {modulus}",
        factors.join(" * ")
    ));
    out.records.push("n", n);
    out.records.push("modulus", &modulus);
    out.records.push("factors", factors.join(","));
    for n in window.degrees() {
        let whole = s.whole.group(n).expect("degree in window");
        let split = s.split.group(n).expect("degree in window");
        out.line(format!("K_{{{n}}}: whole = {whole}, split = {split}"));
        out.records.push(format!("K_{{{n}}}.whole"), whole);
        out.records.push(format!("K_{{{n}}}.split"), split);
    }
    let verdict = if s.equal { "EQUAL" } else { "UNEQUAL" };
    out.line(verdict);
    out.records.push("verdict", verdict);
    Ok(out)
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Kmod {
            quiver,
            modulus,
            window,
        } => cmd_kmod(quiver, modulus, window),
        Command::Analyze { quiver, primes } => cmd_analyze(quiver, primes),
        Command::Algebra { quiver, eval } => cmd_algebra(quiver, eval),
        Command::Filtration { quiver, level } => cmd_filtration(quiver, *level),
        Command::Split { n, modulus, window } => cmd_split(*n, modulus, window),
    }
}

/// Runs one invocation; `args` includes the program name. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let shown = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{shown}");
                1
            } else {
                let _ = write!(out, "{shown}");
                0
            };
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Records => render_records(&o.records),
            };
            match out.write_all(body.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
