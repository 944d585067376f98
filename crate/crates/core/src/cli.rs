//! Command-line front end.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classical_limits::{continuous_limit_residual, continuous_s_star_poly, continuous_symbolic_limit, ContinuousParams};
use crate::exact_arith::{parse_rational, parse_rational_list, Rational};
use crate::hyper::{seq1_poly, seq2_poly};
use crate::ortho_moments::{classify_definiteness, moment_closed, moment_direct, verify_orthogonality};
use crate::polynomial::Polynomial;
use crate::spolys::{decompose_a, gammas, s_explicit, s_recurrence, CharVector};
use crate::weights::{
    discover_supports, support_rows, weight_absolute_table, weight_relative, SequenceParams, WeightFamily,
    WeightFamilyId, WeightMode,
};

#[derive(Parser, Debug)]
#[command(name = "symdisc", version, about = "Symmetric orthogonal polynomials of a discrete variable, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct S_n and its recurrence coefficients.
    Poly(PolyArgs),
    /// List the orthogonality supports of a weight family.
    Supports(FamilyArgs),
    /// Tabulate a weight on its support.
    Weights(WeightsArgs),
    /// Gram matrix and norm check on a support.
    Verify(VerifyArgs),
    /// Normalized moments in the ϑ basis against their closed forms.
    Moments(MomentsArgs),
    /// Residuals of the limit to the continuous family.
    Limit(LimitArgs),
    /// Sign survey of the recurrence coefficients.
    Classify(ClassifyArgs),
    /// Rational factorization of A(x).
    Decompose(DecomposeArgs),
}

/// Comma-separated exact rationals, e.g. `-9,-10,-11` or `1/2,3`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatList(pub Vec<Rational>);

fn rationals(s: &str) -> Result<RatList, String> {
    parse_rational_list(s).map(RatList).map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct CharSource {
    /// Characteristic vector a,b,c,d.
    #[arg(long = "char", value_parser = rationals, allow_hyphen_values = true)]
    pub char_vec: Option<RatList>,
    /// First sequence parameters p,q,r.
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub seq1: Option<RatList>,
    /// Second sequence parameters p,q.
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub seq2: Option<RatList>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Explicit,
    Recurrence,
    Hypergeometric,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[command(flatten)]
    pub source: CharSource,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "explicit")]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Weight family, e.g. W1, W10_1.
    #[arg(long)]
    pub family: String,
    /// p,q,r or p,q.
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub params: RatList,
    /// Include rows whose conditions fail.
    #[arg(long)]
    pub all: bool,
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub params: RatList,
    /// Half-width of the support; defaults to the first discovered support.
    #[arg(long)]
    pub theta: Option<u64>,
    #[arg(long, default_value = "relative")]
    pub mode: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub params: RatList,
    #[arg(long = "nmax")]
    pub n_max: usize,
    #[arg(long)]
    pub theta: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct MomentsArgs {
    /// 1 or 2.
    #[arg(long)]
    pub seq: u8,
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub params: RatList,
    #[arg(long)]
    pub family: String,
    /// Inclusive range `a..b` or a comma list.
    #[arg(long, default_value = "0..8")]
    pub orders: String,
    #[arg(long)]
    pub theta: Option<u64>,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    /// r*,s*,p*,q*.
    #[arg(long, value_parser = rationals, allow_hyphen_values = true)]
    pub params: RatList,
    #[arg(long)]
    pub n: usize,
    /// Step sizes, e.g. 1e-1,1e-2,1e-3.
    #[arg(long, value_parser = rationals)]
    pub h: RatList,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub t: String,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub source: CharSource,
    #[arg(long = "nmax")]
    pub n_max: usize,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub source: CharSource,
}

fn char_vector(src: &CharSource) -> anyhow::Result<CharVector> {
    if let Some(v) = &src.char_vec {
        return Ok(CharVector::from_slice(&v.0)?);
    }
    if let Some(v) = &src.seq1 {
        let [p, q, r] = v.0.as_slice() else { bail!("--seq1 takes p,q,r") };
        return Ok(CharVector::seq1(p, q, r));
    }
    if let Some(v) = &src.seq2 {
        let [p, q] = v.0.as_slice() else { bail!("--seq2 takes p,q") };
        return Ok(CharVector::seq2(p, q));
    }
    bail!("one of --char, --seq1, --seq2 is required")
}

fn family(name: &str, params: &[Rational]) -> anyhow::Result<WeightFamily> {
    let id: WeightFamilyId = name.parse()?;
    Ok(WeightFamily::new(id, SequenceParams::from_slice(params)?)?)
}

fn support_theta(fam: &WeightFamily, theta: Option<u64>) -> anyhow::Result<u64> {
    if let Some(t) = theta {
        return Ok(t);
    }
    discover_supports(fam)
        .first()
        .map(|s| s.theta)
        .ok_or_else(|| anyhow!("{fam} has no valid orthogonality support; pass --theta"))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn parse_orders(s: &str) -> anyhow::Result<Vec<usize>> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().context("order range start")?;
        let b: usize = b.trim().parse().context("order range end")?;
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().context("order"))
        .collect()
}

/// JSON document and whether every requested check passed.
fn execute(cmd: &Command) -> anyhow::Result<(String, bool)> {
    let pretty = |v: Value| serde_json::to_string_pretty(&v).expect("serializable");
    match cmd {
        Command::Poly(a) => {
            let cv = char_vector(&a.source)?;
            let poly: Polynomial = match a.method {
                Method::Explicit => s_explicit(&cv, a.n)?,
                Method::Recurrence => s_recurrence(&cv, a.n)?,
                Method::Hypergeometric => match (&a.source.seq1, &a.source.seq2) {
                    (Some(RatList(v)), _) if v.len() == 3 => seq1_poly(&v[0], &v[1], &v[2], a.n)?,
                    (_, Some(RatList(v))) if v.len() == 2 => seq2_poly(&v[0], &v[1], a.n)?,
                    _ => bail!("--method hypergeometric needs --seq1 or --seq2"),
                },
            };
            let g = gammas(&cv, a.n)?;
            Ok((pretty(json!({"n": a.n, "char": cv, "coeffs": poly, "gamma": strings(&g)})), true))
        }
        Command::Supports(a) => {
            let fam = family(&a.family, &a.params.0)?;
            let rows = if a.all { support_rows(&fam) } else { discover_supports(&fam) };
            Ok((pretty(serde_json::to_value(rows)?), true))
        }
        Command::Weights(a) => {
            let fam = family(&a.family, &a.params.0)?;
            let theta = support_theta(&fam, a.theta)?;
            let doc = match a.mode.parse::<WeightMode>()? {
                WeightMode::Relative => weight_relative(&fam, theta)?.to_json(),
                WeightMode::Absolute => weight_absolute_table(&fam, theta)?.to_json(),
            };
            Ok((pretty(doc), true))
        }
        Command::Verify(a) => {
            let fam = family(&a.family, &a.params.0)?;
            let theta = support_theta(&fam, a.theta)?;
            if a.n_max as u64 > 2 * theta {
                bail!("--nmax {} exceeds 2θ = {}", a.n_max, 2 * theta);
            }
            let report = verify_orthogonality(&weight_relative(&fam, theta)?, a.n_max)?;
            let ok = report.passed();
            let out = match a.format {
                Format::Json => pretty(serde_json::to_value(&report)?),
                Format::Csv => report.to_csv(),
            };
            Ok((out, ok))
        }
        Command::Moments(a) => {
            let fam = family(&a.family, &a.params.0)?;
            let expected = if a.seq == 1 { 3 } else { 2 };
            if !matches!(a.seq, 1 | 2) || a.params.0.len() != expected {
                bail!("--seq {} does not match {} parameters", a.seq, a.params.0.len());
            }
            let theta = support_theta(&fam, a.theta)?;
            let table = weight_relative(&fam, theta)?;
            let mut ok = true;
            let mut rows = Vec::new();
            for n in parse_orders(&a.orders)? {
                let direct = moment_direct(&table, n)?;
                let closed = if n % 2 == 0 {
                    moment_closed(&fam.params, n / 2)?
                } else {
                    Rational::from_integer(0.into())
                };
                let matches = direct.value == closed;
                ok &= matches;
                rows.push(json!({
                    "n": n,
                    "value": direct.value.to_string(),
                    "closed": closed.to_string(),
                    "match": matches,
                }));
            }
            Ok((pretty(json!({"family": fam.id, "theta": theta, "moments": rows})), ok))
        }
        Command::Limit(a) => {
            let params = ContinuousParams::from_slice(&a.params.0)?;
            let t = parse_rational(&a.t)?;
            let mut rows = Vec::new();
            let mut residuals = Vec::new();
            for h in &a.h.0 {
                let r = continuous_limit_residual(&params, a.n, &t, h)?;
                residuals.push(r);
                rows.push(json!({"h": h.to_string(), "residual": r}));
            }
            let monotone = residuals.windows(2).all(|w| w[1] <= w[0]);
            let target = continuous_s_star_poly(&params, a.n)?;
            let mut doc = json!({
                "n": a.n,
                "t": t.to_string(),
                "s_star": target.coeffs,
                "rows": rows,
                "monotone": monotone,
            });
            let mut ok = monotone;
            if a.n <= 6 {
                let exact = continuous_symbolic_limit(&params, a.n)? == target.coeffs;
                doc["symbolic_limit"] = json!(exact);
                ok &= exact;
            }
            Ok((pretty(doc), ok))
        }
        Command::Classify(a) => {
            let cv = char_vector(&a.source)?;
            let d = classify_definiteness(&cv, a.n_max)?;
            Ok((pretty(json!({"char": cv, "n_max": a.n_max, "definiteness": d})), true))
        }
        Command::Decompose(a) => {
            let cv = char_vector(&a.source)?;
            Ok((pretty(json!({"char": cv, "case": decompose_a(&cv)})), true))
        }
    }
}

/// Parses arguments, runs the command and maps the outcome to an exit
/// code: 0 on success, 1 when a verification fails, 2 on errors.
pub fn run() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SYMDISC_LOG")).init();
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{}", out.trim_end()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
