//! `edr`: batch front end for the diagonal-reduction library.
//!
//! Exit codes: 0 success (including negative oracle verdicts), 1 output could
//! not be written, 2 unreadable input, 3 precondition violated, 4 internal
//! verification failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use edr_core::format::{from_json, to_json, CertificateJson, MatrixJson};
use edr_core::gelfand::{gelfand_factor, gelfand_shift};
use edr_core::matrix::{smith_normal_form, verify_snf, MatrixR};
use edr_core::numeric::{parse_integer, Integer};
use edr_core::oracle::{
    check_avoidable_def, check_gelfand_def, is_clean_zmod, is_pm_zmod, is_sr1_zmod, revalidate,
    s_closure_check, s_member_int, DefSearch, WitnessReport, DEFAULT_BOUND, DEFAULT_SAMPLES,
    DEFAULT_SEED,
};
use edr_core::ring::xgcd;
use edr_core::{Error, RingElement, RingId};

#[derive(Debug, Parser)]
#[command(
    name = "edr",
    version,
    about = "Exact Smith normal form over Bezout domains"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extended gcd with a verified Bezout certificate.
    Xgcd {
        #[arg(long)]
        ring: RingId,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find t in {0, 1} with a + b*t Gelfand.
    GelfandShift {
        #[arg(long)]
        ring: RingId,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factor a Gelfand d as r*s against the context (a, c).
    GelfandFactor {
        #[arg(long)]
        ring: RingId,
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a context in which a has no Gelfand splitting.
    GelfandCheck {
        #[arg(long)]
        ring: RingId,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        bound: Option<i64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smith normal form of a matrix file, written as a certificate.
    Snf {
        #[arg(long)]
        ring: RingId,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a stored certificate against its matrix.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Brute-force checks on ℤ/n and S(ℤ).
    Oracle {
        #[arg(value_enum)]
        check: OracleCheck,
        #[arg(long)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    Pm,
    Sr1,
    Clean,
    SMember,
    SClosure,
    Avoidable,
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    /// Input file missing, unreadable or malformed.
    Input(String),
    /// The result failed an independent re-check.
    Verification(String),
    Output(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Output(m) => write!(f, "output error: {m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Output(_) => 1,
            CliError::Input(_) => 2,
            CliError::Verification(_) => 4,
            CliError::Lib(e) if e.is_parse() => 2,
            CliError::Lib(e) if e.is_internal() => 4,
            CliError::Lib(_) => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn parse_element(ring: RingId, text: &str) -> edr_core::Result<RingElement> {
    RingElement::parse(ring, text)
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> CliResult<MatrixR> {
    let doc: MatrixJson = from_json(&read(path)?)?;
    doc.to_matrix().map_err(|e| match e {
        Error::Shape(m) => CliError::Input(format!("{}: {m}", path.display())),
        e => e.into(),
    })
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Output(format!("{}: {e}", p.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Output(e.to_string())),
    }
}

fn checked_report(report: WitnessReport) -> CliResult<Value> {
    if !revalidate(&report)? {
        return Err(CliError::Verification(format!(
            "witness of {} did not re-validate",
            report.check
        )));
    }
    Ok(serde_json::to_value(report).expect("serializable"))
}

fn required<T: Clone>(v: &Option<T>, flag: &str) -> CliResult<T> {
    v.clone()
        .ok_or_else(|| Error::Precondition(format!("{flag} is required for this check")).into())
}

fn oracle(
    check: OracleCheck,
    n: &Option<String>,
    a: &Option<String>,
    bound: Option<i64>,
) -> CliResult<Value> {
    let int = |s: &String| -> CliResult<Integer> { Ok(parse_integer(s)?) };
    let report = match check {
        OracleCheck::Pm => is_pm_zmod(&int(&required(n, "--n")?)?)?,
        OracleCheck::Sr1 => is_sr1_zmod(&int(&required(n, "--n")?)?)?,
        OracleCheck::Clean => is_clean_zmod(&int(&required(n, "--n")?)?)?,
        OracleCheck::SMember => s_member_int(&int(&required(a, "--a")?)?)?,
        OracleCheck::SClosure => s_closure_check(bound.unwrap_or(30))?,
        OracleCheck::Avoidable => {
            check_avoidable_def(&int(&required(a, "--a")?)?, bound.unwrap_or(DEFAULT_BOUND))?
        }
    };
    checked_report(report)
}

/// Executes one command, writing its JSON result to `--out` or `stdout`.
pub fn run(config: &CommandConfig, stdout: &mut dyn Write) -> CliResult<()> {
    let (value, out) = match &config.command {
        Command::Xgcd { ring, a, b, out } => {
            let (a, b) = (parse_element(*ring, a)?, parse_element(*ring, b)?);
            let c = xgcd(&a, &b)?;
            c.verify().map_err(CliError::Verification)?;
            let v = json!({
                "ring": ring.name(),
                "a": a.to_string(), "b": b.to_string(),
                "g": c.g.to_string(), "u": c.u.to_string(), "v": c.v.to_string(),
                "a1": c.a1.to_string(), "b1": c.b1.to_string(),
            });
            (v, out)
        }
        Command::GelfandShift { ring, a, b, out } => {
            let (a, b) = (parse_element(*ring, a)?, parse_element(*ring, b)?);
            let r = gelfand_shift(&a, &b)?;
            let v = json!({
                "ring": ring.name(), "a": a.to_string(), "b": b.to_string(),
                "t": r.t.to_string(), "d": r.d.to_string(),
            });
            (v, out)
        }
        Command::GelfandFactor { ring, d, a, c, out } => {
            let (d, a, c) = (
                parse_element(*ring, d)?,
                parse_element(*ring, a)?,
                parse_element(*ring, c)?,
            );
            let f = gelfand_factor(&d, &a, &c)?;
            if &f.r * &f.s != d {
                return Err(CliError::Verification("r*s != d".into()));
            }
            let v = json!({
                "ring": ring.name(), "d": d.to_string(), "a": a.to_string(), "c": c.to_string(),
                "r": f.r.to_string(), "s": f.s.to_string(), "iterations": f.iterations,
            });
            (v, out)
        }
        Command::GelfandCheck {
            ring,
            a,
            bound,
            samples,
            seed,
            out,
        } => {
            let a = parse_element(*ring, a)?;
            let search = match (bound, ring) {
                (Some(b), _) => DefSearch::Bound(*b),
                (None, RingId::Integers) if samples.is_none() && seed.is_none() => {
                    DefSearch::Bound(DEFAULT_BOUND)
                }
                _ => DefSearch::Samples {
                    count: samples.unwrap_or(DEFAULT_SAMPLES),
                    seed: seed.unwrap_or(DEFAULT_SEED),
                },
            };
            (checked_report(check_gelfand_def(*ring, &a, search)?)?, out)
        }
        Command::Snf { ring, input, out } => {
            let m = load_matrix(input)?;
            if m.ring() != *ring {
                return Err(Error::RingMismatch(*ring, m.ring()).into());
            }
            let cert = smith_normal_form(&m)?;
            if !verify_snf(&m, &cert)?.all() {
                return Err(CliError::Verification(
                    "certificate failed re-verification".into(),
                ));
            }
            let doc = CertificateJson::from_certificate(&cert);
            return emit(out.as_deref(), &to_json(&doc), stdout);
        }
        Command::Verify { input, cert } => {
            let m = load_matrix(input)?;
            let doc: CertificateJson = from_json(&read(cert)?)?;
            if doc.ring != m.ring() {
                return Err(Error::RingMismatch(m.ring(), doc.ring).into());
            }
            let c = doc.to_certificate()?;
            let checks = verify_snf(&m, &c)?;
            let hash_ok = c.input_hash == m.digest();
            let traces_ok = c.traces.iter().all(|t| t.verify());
            let v = json!({ "input_hash_ok": hash_ok, "traces_ok": traces_ok, "checks": checks });
            emit(None, &to_json(&v), stdout)?;
            if !(checks.all() && hash_ok && traces_ok) {
                return Err(CliError::Verification(format!("{v}")));
            }
            return Ok(());
        }
        Command::Oracle {
            check,
            n,
            a,
            bound,
            out,
        } => (oracle(*check, n, a, *bound)?, out),
    };
    emit(out.as_deref(), &to_json(&value), stdout)
}

/// Parses arguments, runs, reports errors on stderr, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&config, &mut std::io::stdout().lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("edr: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (CliResult<()>, String) {
        let config =
            CommandConfig::try_parse_from(std::iter::once("edr").chain(args.iter().copied()))
                .unwrap();
        let mut buf = Vec::new();
        let r = run(&config, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn parse_element_examples() {
        let e = parse_element(RingId::Henriksen, "2 + 1/2*x").unwrap();
        assert_eq!(e.to_string(), "2 + 1/2*x");
        assert!(matches!(
            parse_element(RingId::Henriksen, "1/2"),
            Err(Error::NonIntegerConstant(_))
        ));
        assert_eq!(
            parse_element(RingId::Integers, "−12").unwrap(),
            RingElement::from_i64(RingId::Integers, -12)
        );
    }

    #[test]
    fn xgcd_output() {
        let (r, out) = run_args(&["xgcd", "--ring", "integers", "12", "-18"]);
        r.unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["g"], "6");
    }

    #[test]
    fn error_codes() {
        let (r, _) = run_args(&["xgcd", "--ring", "henriksen", "1/2", "x"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
        let (r, _) = run_args(&["gelfand-shift", "--ring", "integers", "2", "4"]);
        assert_eq!(r.unwrap_err().exit_code(), 3);
        let (r, _) = run_args(&["oracle", "pm", "--n", "1"]);
        assert_eq!(r.unwrap_err().exit_code(), 3);
        let (r, _) = run_args(&["gelfand-check", "--ring", "henriksen", "x", "--bound", "5"]);
        assert_eq!(r.unwrap_err().exit_code(), 3);
    }
}
