//! The `hypersmith` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::atlas::{atlas, limit_table, write_fixtures};
use crate::classifier::{classify, rho_r};
use crate::error::Error;
use crate::families::FamilyId;
use crate::hypergraph::{io as hio, CanonOptions, Hypergraph};
use crate::labeling::io::{parse_certificate, Fixture};
use crate::labeling::{check_certificate, format_rational, NormalcyKind, NormalcyReport, Rational, WeightedIncidence};
use crate::spectral::{power_method, spectral_radius, DEFAULT_MAX_ITER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "hypersmith", version, about = "Spectral radius and classification of uniform hypergraphs")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Numerical tolerance for spectral computations.
    #[arg(long, env = "HYPERSMITH_TOL", default_value_t = 1e-10, global = true)]
    pub tol: f64,
    /// Seed for tie-breaking in canonical search; output does not depend on it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

/// A hypergraph given as a file, `-` for stdin, or a family spec.
#[derive(Debug, clap::Args)]
pub struct Input {
    /// Hypergraph file in JSON or text format; `-` reads stdin.
    pub input: Option<String>,
    /// Family spec such as `F(1,4,8)` instead of a file.
    #[arg(long, conflicts_with = "input")]
    pub family: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub rank: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius with lower and upper bounds.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Use power iteration even on hypertrees.
        #[arg(long)]
        power: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Compare ρ with ρ_r and name the family.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Verify a certificate; exits 3 when the claim is refuted.
    CheckCert {
        /// A fixture file, or a hypergraph file when `--cert` is given.
        input: String,
        /// Certificate JSON for the hypergraph in `input`.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Claimed kind; defaults to the fixture's claim, or `none`.
        #[arg(long)]
        claim: Option<String>,
        /// Rational arithmetic instead of floating point.
        #[arg(long)]
        exact: bool,
    },
    /// Build a family member.
    Gen {
        /// Family spec such as `F(1,4,8)`, `G(1,1:6:1,3)` or `Smith2:E6`.
        family: String,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Drop one leaf from every edge.
    Reduce {
        #[command(flatten)]
        input: Input,
    },
    /// Add a fresh leaf to every edge.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Contract a 2-bridge.
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        edge: usize,
    },
    /// ρ of paths next to their lower bound.
    LimitTable {
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
    /// The lists of hypergraphs with ρ at most ρ_r.
    Atlas {
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
        /// Write the certificate fixtures into this directory instead.
        #[arg(long)]
        write_fixtures: Option<PathBuf>,
    },
}

/// Exit code with captured streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: message.into() }
    }
}

/// Errors from reading input are parse errors; everything else is a violated precondition.
fn code_of(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(code_of(&e), e.to_string())
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_PARSE, text),
            };
        }
    };
    execute(&cli).unwrap_or_else(|Failure(code, msg)| Outcome::fail(code, msg))
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    let _ = io::stdout().flush();
    out.code
}

fn read_source(path: &str) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure(EXIT_PARSE, format!("{path}: {e}")))?;
    Ok(text)
}

fn load(input: &Input) -> std::result::Result<Hypergraph, Failure> {
    if let Some(spec) = &input.family {
        return Ok(FamilyId::parse(spec, input.rank)?.build()?);
    }
    let path = input.input.as_deref().unwrap_or("-");
    Ok(hio::parse_auto(&read_source(path)?)?)
}

fn execute(cli: &Cli) -> CmdResult {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Error::BadTolerance(cli.tol).into());
    }
    match &cli.command {
        Command::Spectrum { input, power, max_iter } => {
            let h = load(input)?;
            let res = if *power { power_method(&h, cli.tol, *max_iter)? } else { spectral_radius(&h, cli.tol)? };
            let value = json!({
                "rho": res.rho,
                "lower": res.lower_bound,
                "upper": res.upper_bound,
                "iterations": res.iterations,
                "converged": res.converged,
                "vector": res.vector,
            });
            let text = format!(
                "rho = {}\nlower = {}\nupper = {}\niterations = {}\n",
                real(res.rho),
                real(res.lower_bound),
                real(res.upper_bound),
                res.iterations
            );
            Ok(emit(cli.format, &value, text))
        }
        Command::Classify { input } => {
            let h = load(input)?;
            let c = classify(&h)?;
            let canon = h.canonical_form_with(CanonOptions { seed: cli.seed, ..CanonOptions::unbounded() })?;
            let value = json!({
                "verdict": c.verdict,
                "family": c.family.as_ref().map(|f| f.tag.name()),
                "params": c.family.as_ref().map(|f| f.params.clone()),
                "alias": c.family.as_ref().and_then(FamilyId::alias_name),
                "witness": c.witness,
                "canonical": String::from_utf8(canon.clone()).unwrap_or_else(|_| hex(&canon)),
            });
            let family = c.family.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into());
            Ok(emit(cli.format, &value, format!("{:?} {family}: {}\n", c.verdict, c.witness)))
        }
        Command::CheckCert { input, cert, claim, exact } => {
            check_cert(cli, input, cert.as_ref(), claim.as_deref(), *exact)
        }
        Command::Gen { family, rank, output } => {
            let h = FamilyId::parse(family, *rank)?.build()?;
            let text = match cli.format {
                Format::Json => hio::to_json(&h) + "\n",
                Format::Text => hio::to_text(&h),
            };
            match output {
                Some(path) => {
                    fs::write(path, &text)
                        .map_err(|e| Failure(EXIT_PRECONDITION, format!("{}: {e}", path.display())))?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Reduce { input } => Ok(hypergraph_out(cli.format, &load(input)?.reduce()?)),
        Command::Extend { input, times } => Ok(hypergraph_out(cli.format, &load(input)?.extend_by(*times))),
        Command::Contract { input, edge } => {
            let c = load(input)?.contract(*edge)?;
            Ok(hypergraph_out(cli.format, &c.hypergraph))
        }
        Command::LimitTable { rank, n } => {
            let rows = limit_table(*rank, *n, cli.tol)?;
            let value = json!({
                "rank": rank,
                "rho_r": rho_r(*rank)?,
                "rows": rows.iter().map(|r| json!({"n": r.n, "rho": r.rho, "lower_bound": r.lower_bound})).collect::<Vec<_>>(),
            });
            let mut text = format!("# n rho lower_bound (rho_r = {})\n", real(rho_r(*rank)?));
            for r in &rows {
                text += &format!("{} {} {}\n", r.n, real(r.rho), real(r.lower_bound));
            }
            Ok(emit(cli.format, &value, text))
        }
        Command::Atlas { write_fixtures: Some(dir), .. } => {
            let paths = write_fixtures(dir)?;
            let text: String = paths.iter().map(|p| format!("{}\n", p.display())).collect();
            Ok(Outcome::ok(text))
        }
        Command::Atlas { rank, max_edges, write_fixtures: None } => {
            let rows = atlas(*rank, *max_edges)?;
            let value = serde_json::to_value(&rows).expect("serialisable");
            let mut text = String::new();
            for r in &rows {
                text += &format!("{} {} {:?} {}\n", r.edges, r.family, r.verdict, r.alias.as_deref().unwrap_or("-"));
            }
            Ok(emit(cli.format, &value, text))
        }
    }
}

fn check_cert(cli: &Cli, input: &str, cert: Option<&PathBuf>, claim: Option<&str>, exact: bool) -> CmdResult {
    let text = read_source(input)?;
    let (h, alpha, b, fixture_claim) = match cert {
        Some(path) => {
            let h = hio::parse_auto(&text)?;
            let ctext = read_source(&path.to_string_lossy())?;
            let (alpha, b) = parse_certificate(&h, &ctext)?;
            (h, alpha, b, None)
        }
        None => {
            let f = Fixture::from_json_str(&text)?;
            (f.hypergraph, f.alpha, f.certificate, Some(f.claim))
        }
    };
    let claim = match claim {
        Some(s) => NormalcyKind::parse(s).ok_or_else(|| Failure(EXIT_PARSE, format!("unknown claim {s:?}")))?,
        None => fixture_claim.unwrap_or(NormalcyKind::None),
    };
    let (value, kind, supported, consistent) = if exact {
        let report = check_certificate(&h, &b, &alpha)?;
        (
            report_json(&report, |x: &Rational| json!(format_rational(x))),
            report.kind,
            report.supports(claim),
            report.consistent,
        )
    } else {
        let bf: WeightedIncidence<f64> = b.to_f64();
        let af = num_traits::ToPrimitive::to_f64(&alpha).unwrap_or(f64::NAN);
        let report = check_certificate(&h, &bf, &af)?;
        (report_json(&report, |x: &f64| json!(x)), report.kind, report.supports(claim), report.consistent)
    };
    let verified = supported && (claim != NormalcyKind::Normal || consistent);
    let mut value = value;
    value["claim"] = json!(claim.as_str());
    value["verified"] = json!(verified);
    let text = format!(
        "kind = {}\nconsistent = {consistent}\nclaim = {}\nverified = {verified}\n",
        kind.as_str(),
        claim.as_str()
    );
    let mut out = emit(cli.format, &value, text);
    if !verified {
        out.code = EXIT_REFUTED;
    }
    Ok(out)
}

fn report_json<T>(report: &NormalcyReport<T>, num: impl Fn(&T) -> Value) -> Value {
    json!({
        "alpha": num(&report.alpha),
        "kind": report.kind.as_str(),
        "consistent": report.consistent,
        "row_sum_status": report.row_sum_status,
        "edge_product_status": report.edge_product_status,
        "row_sums": report.row_sums.iter().map(&num).collect::<Vec<_>>(),
        "edge_products": report.edge_products.iter().map(&num).collect::<Vec<_>>(),
    })
}

fn hypergraph_out(format: Format, h: &Hypergraph) -> Outcome {
    match format {
        Format::Json => Outcome::ok(hio::to_json(h) + "\n"),
        Format::Text => Outcome::ok(hio::to_text(h)),
    }
}

fn emit(format: Format, value: &Value, text: String) -> Outcome {
    match format {
        Format::Json => Outcome::ok(to_json_17(value) + "\n"),
        Format::Text => Outcome::ok(text),
    }
}

/// Fallback for non-text canonical forms.
fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// A real with 17 significant digits.
pub fn real(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..17).contains(&exp) {
        format!("{:.*}", (16 - exp).max(1) as usize, x)
    } else {
        format!("{x:.16e}")
    }
}

struct Digits17;

impl serde_json::ser::Formatter for Digits17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(real(value).as_bytes())
    }
}

/// Compact JSON whose floats carry 17 significant digits.
pub fn to_json_17(value: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17);
    serde::Serialize::serialize(value, &mut ser).expect("in-memory serialisation");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(real(1.0), "1.0000000000000000");
        assert_eq!(real(0.25), "0.25000000000000000");
        assert_eq!(real(3.174802103936399).replace('.', "").trim_start_matches('0').len(), 17);
        assert!(real(1e-9).contains('e'));
        let v: f64 = real(std::f64::consts::PI).parse().unwrap();
        assert_eq!(v, std::f64::consts::PI);
    }

    #[test]
    fn json_floats() {
        let s = to_json_17(&json!({"x": 0.5, "n": 3}));
        assert_eq!(s, r#"{"n":3,"x":0.50000000000000000}"#);
    }

    #[test]
    fn classify_f148() {
        let out = run(["hypersmith", "classify", "--family", "F(1,4,8)", "--rank", "3"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdict"], "Equal");
        assert_eq!(v["family"], "F");
        assert_eq!(v["params"], json!([1, 4, 8]));
    }

    #[test]
    fn bad_tolerance_is_a_precondition() {
        let out = run(["hypersmith", "--tol", "0", "limit-table", "--n", "2"]);
        assert_eq!(out.code, EXIT_PRECONDITION);
    }

    #[test]
    fn unknown_family_is_a_parse_error() {
        let out = run(["hypersmith", "gen", "Q(1)"]);
        assert_eq!(out.code, EXIT_PARSE);
    }
}
