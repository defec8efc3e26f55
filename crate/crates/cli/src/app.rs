//! Argument parsing and the commands of the `z2z4` binary.
//!
//! [`run`] does all the work and returns the exit status together with the
//! text for stdout and stderr, so the binary is a thin wrapper and tests can
//! drive the commands without spawning processes.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;
use z2z4::{
    duality, graymap, selfdual, CodeType, MixedVector, Z2Z4Code, DEFAULT_ENUMERATION_CAP,
    DEFAULT_ORACLE_CAP,
};

use crate::codefile::{format_row, parse_code_file, print_rows, ParseError};

/// Environment variable that overrides both enumeration caps.
pub const CAP_ENV: &str = "Z2Z4_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "z2z4",
    version,
    about = "Exact computations with Z2Z4-additive codes"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of vectors any enumeration may visit, as an integer
    /// or as `2^k`. Overrides Z2Z4_CAP.
    #[arg(long, global = true, value_name = "N", value_parser = parse_cap)]
    cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type, cardinality and minimum Lee weight.
    Info { file: PathBuf },
    /// Canonical generator matrix and the coordinate permutations leading to it.
    Std { file: PathBuf },
    /// Generator matrix of the additive dual.
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DualMethod::Standard)]
        method: DualMethod,
    },
    /// Gray images of the generators, or of every codeword with --all.
    Gray {
        file: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Lee weight enumerator, and that of the dual with --macwilliams.
    Wenum {
        file: PathBuf,
        #[arg(long)]
        macwilliams: bool,
    },
    /// Self-orthogonality, self-duality, antipodality and separability.
    Check { file: PathBuf },
    /// Build a member of one of the self-dual families.
    Family {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        beta: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DualMethod {
    Standard,
    Lift,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    A,
    B,
    C,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Core(#[from] z2z4::Error),
    #[error("{CAP_ENV}: {0}")]
    BadEnvCap(String),
}

impl CliError {
    pub fn exit_status(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource() => 2,
            _ => 1,
        }
    }
}

/// Accepts `N` or `2^k`.
pub fn parse_cap(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let value = match s.split_once('^') {
        Some((base, exp)) if base.trim() == "2" => exp
            .trim()
            .parse::<u32>()
            .ok()
            .and_then(|k| 1u64.checked_shl(k).filter(|_| k < 64)),
        Some(_) => None,
        None => s.parse::<u64>().ok(),
    };
    value.ok_or_else(|| format!("`{s}` is not a cap; use an integer or 2^k with k < 64"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Caps {
    enumeration: u64,
    oracle: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (program name first). `env_cap` is the
/// value of [`CAP_ENV`], if set.
pub fn run<I, T>(args: I, env_cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    status: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli, env_cap) {
        Ok(stdout) => Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: e.exit_status(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn resolve_caps(flag: Option<u64>, env_cap: Option<&str>) -> Result<Caps, CliError> {
    let chosen = match (flag, env_cap) {
        (Some(c), _) => Some(c),
        (None, Some(s)) => Some(parse_cap(s).map_err(CliError::BadEnvCap)?),
        (None, None) => None,
    };
    Ok(match chosen {
        Some(c) => Caps {
            enumeration: c,
            oracle: c,
        },
        None => Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            oracle: DEFAULT_ORACLE_CAP,
        },
    })
}

fn load(path: &Path) -> Result<Z2Z4Code, CliError> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                path: name.clone(),
                source,
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: name.clone(),
            source,
        })?
    };
    parse_code_file(&text).map_err(|source| CliError::Parse { path: name, source })
}

fn execute(cli: &Cli, env_cap: Option<&str>) -> Result<String, CliError> {
    let caps = resolve_caps(cli.cap, env_cap)?;
    let json = cli.json;
    match &cli.command {
        Command::Info { file } => info(&load(file)?, caps, json),
        Command::Std { file } => standard(&load(file)?, json),
        Command::Dual { file, method } => dual(&load(file)?, *method, caps, json),
        Command::Gray { file, all } => gray(&load(file)?, *all, caps, json),
        Command::Wenum { file, macwilliams } => wenum(&load(file)?, *macwilliams, caps, json),
        Command::Check { file } => check(&load(file)?, caps, json),
        Command::Family {
            family,
            kappa,
            delta,
            beta,
        } => build_family(*family, *kappa, *delta, *beta, json),
    }
}

fn big(n: &BigUint) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal digits form a JSON number"))
}

fn code_json(t: &CodeType, rows: &[MixedVector]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("alpha".into(), json!(t.alpha));
    m.insert("beta".into(), json!(t.beta));
    m.insert("gamma".into(), json!(t.gamma));
    m.insert("delta".into(), json!(t.delta));
    m.insert("kappa".into(), json!(t.kappa));
    m.insert("cardinality".into(), big(&t.cardinality()));
    m.insert(
        "rows".into(),
        json!(rows.iter().map(|r| r.digits()).collect::<Vec<_>>()),
    );
    m
}

fn render_json(m: Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("values serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(c: &Z2Z4Code, caps: Caps, json: bool) -> Result<String, CliError> {
    let t = c.code_type();
    let min = duality::weight_enumerator(c, caps.enumeration)?.minimum_weight();
    if json {
        let mut m = code_json(&t, c.generators());
        m.insert("minimum_lee_weight".into(), json!(min));
        return Ok(render_json(m));
    }
    let min = min.map_or_else(|| "none".to_string(), |w| w.to_string());
    Ok(format!(
        "type {t}, |C| = {}\nminimum Lee weight: {min}\n",
        t.cardinality()
    ))
}

fn standard(c: &Z2Z4Code, json: bool) -> Result<String, CliError> {
    let sf = c.standard_form()?;
    let t = sf.code_type;
    let rows = sf.canonical.rows();
    if json {
        let mut m = code_json(&t, rows);
        m.insert("x_permutation".into(), json!(sf.x_permutation.to_string()));
        m.insert("y_permutation".into(), json!(sf.y_permutation.to_string()));
        return Ok(render_json(m));
    }
    let mut out = format!("type {t}\n");
    for r in rows {
        let _ = writeln!(out, "{}", format_row(r));
    }
    let _ = writeln!(out, "X permutation: {}", sf.x_permutation);
    let _ = writeln!(out, "Y permutation: {}", sf.y_permutation);
    Ok(out)
}

fn dual(c: &Z2Z4Code, method: DualMethod, caps: Caps, json: bool) -> Result<String, CliError> {
    let (d, name) = match method {
        DualMethod::Standard => (duality::dual_from_standard_form(c)?, "standard"),
        DualMethod::Lift => (duality::dual_via_lift(c)?, "lift"),
        DualMethod::Brute => (duality::dual_brute_force(c, caps.oracle)?, "brute"),
    };
    let t = d.code_type();
    if json {
        let mut m = code_json(&t, d.generators());
        m.insert("method".into(), json!(name));
        return Ok(render_json(m));
    }
    Ok(format!(
        "# dual ({name}), type {t}, |C| = {}\n{}",
        t.cardinality(),
        print_rows(d.alpha(), d.beta(), d.generators())
    ))
}

fn gray(c: &Z2Z4Code, all: bool, caps: Caps, json: bool) -> Result<String, CliError> {
    let words = if all {
        c.enumerate_codewords(caps.enumeration)?
    } else {
        c.generators().to_vec()
    };
    let images: Vec<_> = words.iter().map(graymap::gray_extend).collect();
    if json {
        let mut m = code_json(&c.code_type(), &words);
        m.insert(
            "gray_images".into(),
            json!(images
                .iter()
                .map(|b| b.entries().to_vec())
                .collect::<Vec<_>>()),
        );
        return Ok(render_json(m));
    }
    let mut out = String::new();
    for (w, b) in words.iter().zip(&images) {
        let _ = writeln!(out, "{w} -> {b}");
    }
    Ok(out)
}

fn wenum(c: &Z2Z4Code, macwilliams: bool, caps: Caps, json: bool) -> Result<String, CliError> {
    let t = c.code_type();
    let w = duality::weight_enumerator(c, caps.enumeration)?;
    let dual_w = if macwilliams {
        Some(duality::macwilliams_transform(&w, &t.cardinality())?)
    } else {
        None
    };
    if json {
        let mut m = code_json(&t, c.generators());
        m.insert(
            "weight_enumerator".into(),
            Value::Array(w.coefficients().iter().map(big).collect()),
        );
        if let Some(d) = &dual_w {
            m.insert(
                "dual_weight_enumerator".into(),
                Value::Array(d.coefficients().iter().map(big).collect()),
            );
        }
        return Ok(render_json(m));
    }
    let mut out = format!(
        "type {t}, |C| = {}\nweight enumerator: {w}\n",
        t.cardinality()
    );
    if let Some(d) = dual_w {
        let _ = writeln!(out, "dual weight enumerator: {d}");
    }
    Ok(out)
}

fn check(c: &Z2Z4Code, caps: Caps, json: bool) -> Result<String, CliError> {
    let t = c.code_type();
    let r = selfdual::report(c, caps.enumeration)?;
    if json {
        let mut m = code_json(&t, c.generators());
        m.insert("is_self_orthogonal".into(), json!(r.is_self_orthogonal));
        m.insert("is_self_dual".into(), json!(r.is_self_dual));
        m.insert("is_antipodal".into(), json!(r.is_antipodal));
        m.insert("is_separable".into(), json!(r.is_separable));
        m.insert("cx_self_dual".into(), json!(r.cx_self_dual));
        m.insert(
            "replication_exponent_r".into(),
            json!(r.replication_exponent_r),
        );
        return Ok(render_json(m));
    }
    let rep = r
        .replication_exponent_r
        .map_or_else(|| "-".to_string(), |x| x.to_string());
    Ok(format!(
        "type {t}\nself-orthogonal: {}\nself-dual: {}\nantipodal: {}\nseparable: {}\nC_X self-dual: {}\nreplication exponent: {rep}\n",
        yes_no(r.is_self_orthogonal),
        yes_no(r.is_self_dual),
        yes_no(r.is_antipodal),
        yes_no(r.is_separable),
        yes_no(r.cx_self_dual),
    ))
}

fn build_family(
    family: Family,
    kappa: usize,
    delta: usize,
    beta: usize,
    json: bool,
) -> Result<String, CliError> {
    let (c, name) = match family {
        Family::A => (selfdual::build_family_a(kappa, delta, beta)?, "a"),
        Family::B => (selfdual::build_family_b(kappa, delta, beta)?, "b"),
        Family::C => (selfdual::build_family_c(kappa, delta, beta)?, "c"),
    };
    let t = c.code_type();
    let sd = selfdual::is_self_dual(&c);
    if json {
        let mut m = code_json(&t, c.generators());
        m.insert("family".into(), json!(name));
        m.insert("is_self_dual".into(), json!(sd));
        return Ok(render_json(m));
    }
    Ok(format!(
        "# family {name} with kappa={kappa} delta={delta} beta={beta}: type {t}, self-dual: {}\n{}",
        yes_no(sd),
        print_rows(c.alpha(), c.beta(), c.generators())
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        assert_eq!(parse_cap("2^24"), Ok(1 << 24));
        assert_eq!(parse_cap(" 2 ^ 3 "), Ok(8));
        assert_eq!(parse_cap("100"), Ok(100));
        assert!(parse_cap("3^2").is_err());
        assert!(parse_cap("2^64").is_err());
        assert!(parse_cap("lots").is_err());
        let defaults = resolve_caps(None, None).unwrap();
        assert_eq!(defaults.enumeration, DEFAULT_ENUMERATION_CAP);
        assert_eq!(defaults.oracle, DEFAULT_ORACLE_CAP);
        assert_eq!(resolve_caps(None, Some("2^4")).unwrap().oracle, 16);
        assert_eq!(resolve_caps(Some(8), Some("2^4")).unwrap().enumeration, 8);
        assert!(resolve_caps(None, Some("x")).is_err());
    }

    #[test]
    fn family_command() {
        let out = run(
            [
                "z2z4", "family", "a", "--kappa", "1", "--delta", "0", "--beta", "1",
            ],
            None,
        );
        assert_eq!(out.status, 0);
        assert_eq!(
            out.stdout,
            "# family a with kappa=1 delta=0 beta=1: type (2,1;2,0;1), self-dual: yes\nalpha=2 beta=1\n1 1 | 0\n0 0 | 2\n"
        );
        let bad = run(
            [
                "z2z4", "family", "c", "--kappa", "1", "--delta", "1", "--beta", "2",
            ],
            None,
        );
        assert_eq!(bad.status, 1);
        assert!(bad.stderr.contains("invalid parameters"));
    }

    #[test]
    fn usage_errors_and_help() {
        assert_eq!(run(["z2z4"], None).status, 1);
        assert_eq!(run(["z2z4", "frobnicate"], None).status, 1);
        assert_eq!(run(["z2z4", "--help"], None).status, 0);
        assert_eq!(run(["z2z4", "--version"], None).status, 0);
        let missing = run(["z2z4", "info", "/nonexistent/code.txt"], None);
        assert_eq!(missing.status, 1);
        assert!(missing.stderr.contains("/nonexistent/code.txt"));
    }
}
