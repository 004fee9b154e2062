//! Command-line front end.
//!
//! ```text
//! zeta-recur even      [--n N] [--digits D] [--jobs J] [--format F]
//! zeta-recur bernoulli [--n M] [--format F]
//! zeta-recur verify <eq2|eq5|eq7|closure|eq9|s2|log2|eq10|odd> [--s S] [--tol T] [--radius R] [--format F]
//! zeta-recur contour   [--s S] [--radius R] [--tol T] [--format F]
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::ZetaError;
use crate::exact::{bernoulli, zeta_even_euler, zeta_even_recursive};
use crate::identities::{
    contour_closure, eq10_shadow, verify_bose_integral, verify_closure, verify_eq9,
    verify_fermi_integral, verify_log2_identity, verify_odd_zeta, verify_partial_fractions,
    verify_zeta2_contour, ContourReport, IdentityReport, DEFAULT_RADIUS, DEFAULT_TOL,
};
use crate::pi::render_decimal;
use crate::quadrature::{parse_budget, EVAL_BUDGET_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MAX_EVEN_N: u64 = 1000;
pub const MAX_EVEN_DIGITS: u64 = 1000;
pub const MAX_BERNOULLI_M: u64 = 2000;

/// Sample count and seed for the pointwise partial-fraction check.
const EQ5_POINTS: usize = 1000;
const EQ5_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Eq2,
    Eq5,
    Eq7,
    Closure,
    Eq9,
    S2,
    Log2,
    Eq10,
    Odd,
}

#[derive(Debug, Parser)]
#[command(
    name = "zeta-recur",
    version,
    about = "Exact ζ(2n) by contour recursion, checked against Bernoulli numbers, plus numerical identity checks",
    after_help = "Defaults: --tol 1e-9, --radius 30, --format plain.\n\
                  Exit codes: 0 success, 1 verification failure, 2 usage error.\n\
                  ZETA_RECUR_EVAL_BUDGET overrides the per-integral evaluation budget (default 1000000)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of ζ(2n) = q_n π^{2n}: recursion vs Euler's formula, with decimals.
    Even {
        /// Largest n (1..=1000).
        #[arg(long = "n", default_value_t = 10)]
        n: u64,
        /// Digits after the decimal point, truncated (1..=1000).
        #[arg(long, default_value_t = 20)]
        digits: u64,
        /// Worker threads for the per-row checks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Bernoulli numbers B_0..B_M as exact fractions.
    Bernoulli {
        /// Largest index M (0..=2000).
        #[arg(long = "n", default_value_t = 20)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Check one identity numerically.
    Verify {
        #[arg(value_enum)]
        identity: IdentityArg,
        /// Integer s (default 3 for `odd`, 2 otherwise; `eq10` uses n = s/2).
        #[arg(long)]
        s: Option<u32>,
        /// Absolute tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Rectangle width R for `closure`.
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Side-by-side integrals of z^{s-1}/(e^z - 1) around the rectangle 0, R, R+iπ, iπ.
    Contour {
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

/// Invalid arguments; rendered on stderr with exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl From<ZetaError> for Usage {
    fn from(e: ZetaError) -> Self {
        Usage(e.to_string())
    }
}

/// Runs the CLI with explicit argv and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    if let Err(msg) = parse_budget(std::env::var(EVAL_BUDGET_ENV).ok().as_deref()) {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    let result = match cli.command {
        Command::Even { n, digits, jobs, format } => cmd_zeta_even(n, digits, jobs, format),
        Command::Bernoulli { n, format } => cmd_bernoulli(n, format),
        Command::Verify { identity, s, tol, radius, format } => cmd_verify(identity, s, tol, radius, format),
        Command::Contour { s, radius, tol, format } => cmd_contour(s, radius, tol, format),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Usage> {
    if cond {
        Ok(())
    } else {
        Err(Usage(msg()))
    }
}

fn check_tol(tol: f64) -> Result<(), Usage> {
    ensure(tol > 0.0 && tol.is_finite(), || format!("--tol must be a positive finite number, got {tol}"))
}

fn check_radius(radius: f64) -> Result<(), Usage> {
    ensure(radius > 0.0 && radius.is_finite(), || {
        format!("--radius must be a positive finite number, got {radius}")
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Columns padded to their widest cell, two spaces apart.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join(",") + "\n").collect()
}

#[derive(Debug, Serialize)]
struct EvenRow {
    n: u64,
    coeff: String,
    recursion_equals_euler: bool,
    decimal: String,
}

#[derive(Debug, Serialize)]
struct EvenTable {
    digits: u64,
    all_equal: bool,
    rows: Vec<EvenRow>,
}

fn even_row(n: u64, digits: u64) -> Result<EvenRow, ZetaError> {
    let rec = zeta_even_recursive(n)?;
    let euler = zeta_even_euler(n)?;
    Ok(EvenRow {
        n,
        coeff: rec.coeff.to_string(),
        recursion_equals_euler: rec.coeff == euler.coeff,
        decimal: render_decimal(&rec, digits)?,
    })
}

/// `even`: exit 0 iff recursion and Euler agree exactly on every row.
pub fn cmd_zeta_even(n_max: u64, digits: u64, jobs: usize, format: OutputFormat) -> Result<(String, i32), Usage> {
    ensure((1..=MAX_EVEN_N).contains(&n_max), || format!("--n must be in 1..={MAX_EVEN_N}, got {n_max}"))?;
    ensure((1..=MAX_EVEN_DIGITS).contains(&digits), || {
        format!("--digits must be in 1..={MAX_EVEN_DIGITS}, got {digits}")
    })?;
    ensure(jobs >= 1, || "--jobs must be at least 1".to_string())?;

    // Fill the memo table in order first; rows are then independent.
    zeta_even_recursive(n_max)?;
    let rows: Vec<EvenRow> = if jobs == 1 {
        (1..=n_max).map(|n| even_row(n, digits)).collect::<Result<_, _>>()?
    } else {
        let mut slots: Vec<Option<Result<EvenRow, ZetaError>>> = (0..n_max).map(|_| None).collect();
        std::thread::scope(|scope| {
            let chunks: Vec<_> = slots
                .chunks_mut(n_max.div_ceil(jobs as u64) as usize)
                .enumerate()
                .collect();
            let per = n_max.div_ceil(jobs as u64);
            for (c, chunk) in chunks {
                scope.spawn(move || {
                    for (i, slot) in chunk.iter_mut().enumerate() {
                        let n = c as u64 * per + i as u64 + 1;
                        *slot = Some(even_row(n, digits));
                    }
                });
            }
        });
        slots.into_iter().map(|s| s.expect("every row filled")).collect::<Result<_, _>>()?
    };
    let all_equal = rows.iter().all(|r| r.recursion_equals_euler);
    let text = match format {
        OutputFormat::Json => to_json(&EvenTable { digits, all_equal, rows }),
        OutputFormat::Csv | OutputFormat::Plain => {
            let mut table = vec![vec![
                "n".to_string(),
                "coeff".to_string(),
                "recursion_equals_euler".to_string(),
                "decimal".to_string(),
            ]];
            table.extend(rows.into_iter().map(|r| {
                vec![r.n.to_string(), r.coeff, r.recursion_equals_euler.to_string(), r.decimal]
            }));
            if format == OutputFormat::Csv {
                csv(&table)
            } else {
                aligned(&table)
            }
        }
    };
    Ok((text, if all_equal { EXIT_OK } else { EXIT_FAILED }))
}

#[derive(Debug, Serialize)]
struct BernoulliRow {
    m: u64,
    value: String,
}

pub fn cmd_bernoulli(m_max: u64, format: OutputFormat) -> Result<(String, i32), Usage> {
    ensure(m_max <= MAX_BERNOULLI_M, || format!("--n must be in 0..={MAX_BERNOULLI_M}, got {m_max}"))?;
    bernoulli(m_max);
    let rows: Vec<BernoulliRow> = (0..=m_max).map(|m| BernoulliRow { m, value: bernoulli(m).to_string() }).collect();
    let text = match format {
        OutputFormat::Json => to_json(&serde_json::json!({ "rows": rows })),
        OutputFormat::Csv | OutputFormat::Plain => {
            let mut table = vec![vec!["m".to_string(), "bernoulli".to_string()]];
            table.extend(rows.into_iter().map(|r| vec![r.m.to_string(), r.value]));
            if format == OutputFormat::Csv {
                csv(&table)
            } else {
                aligned(&table)
            }
        }
    };
    Ok((text, EXIT_OK))
}

fn identity_s(identity: IdentityArg, s: Option<u32>) -> Result<u32, Usage> {
    let s = s.unwrap_or(if identity == IdentityArg::Odd { 3 } else { 2 });
    match identity {
        IdentityArg::Eq5 => Ok(s),
        IdentityArg::S2 | IdentityArg::Log2 => {
            ensure(s == 2, || format!("identity {identity:?} is the s = 2 case; got --s {s}"))?;
            Ok(s)
        }
        IdentityArg::Eq10 => {
            ensure(s >= 2 && s.is_multiple_of(2), || format!("eq10 needs an even --s >= 2, got {s}"))?;
            Ok(s)
        }
        IdentityArg::Odd => {
            ensure(s >= 3 && s % 2 == 1, || format!("odd needs an odd --s >= 3, got {s}"))?;
            Ok(s)
        }
        _ => {
            ensure(s >= 2, || format!("--s must be at least 2, got {s}"))?;
            Ok(s)
        }
    }
}

/// Largest `s` accepted by the quadrature-based checks; above it `Γ(s)`
/// outgrows any absolute tolerance in double precision.
pub const MAX_VERIFY_S: u32 = 40;

pub fn verify_report(identity: IdentityArg, s: Option<u32>, tol: f64, radius: f64) -> Result<IdentityReport, Usage> {
    check_tol(tol)?;
    check_radius(radius)?;
    let s = identity_s(identity, s)?;
    ensure(s <= MAX_VERIFY_S, || format!("--s must be at most {MAX_VERIFY_S}, got {s}"))?;
    let report = match identity {
        IdentityArg::Eq2 => verify_bose_integral(s, tol)?,
        IdentityArg::Eq5 => verify_partial_fractions(EQ5_POINTS, EQ5_SEED, tol)?,
        IdentityArg::Eq7 => verify_fermi_integral(s, tol)?,
        IdentityArg::Closure => verify_closure(s, radius, tol)?,
        IdentityArg::Eq9 => verify_eq9(s, tol)?,
        IdentityArg::S2 => verify_zeta2_contour(tol)?,
        IdentityArg::Log2 => verify_log2_identity(tol)?,
        IdentityArg::Eq10 => eq10_shadow(s / 2, tol)?,
        IdentityArg::Odd => verify_odd_zeta(s, tol)?,
    };
    Ok(report)
}

pub fn render_identity(report: &IdentityReport, format: OutputFormat) -> String {
    let lhs = report.lhs.to_complex();
    let rhs = report.rhs.to_complex();
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => {
            let header = "identity,s,lhs_re,lhs_im,rhs_re,rhs_im,residual,tolerance,passed,diagnostic";
            let diag = report.diagnostic.as_deref().unwrap_or("").replace('"', "'");
            format!(
                "{header}\n{},{},{:e},{:e},{:e},{:e},{:e},{:e},{},\"{diag}\"\n",
                report.identity_id.tag(),
                report.s,
                lhs.re,
                lhs.im,
                rhs.re,
                rhs.im,
                report.residual,
                report.tolerance,
                report.passed
            )
        }
        OutputFormat::Plain => {
            let mut rows = vec![
                vec!["identity".to_string(), report.identity_id.tag().to_string()],
                vec!["s".to_string(), report.s.to_string()],
                vec!["lhs".to_string(), report.lhs.to_string()],
                vec!["rhs".to_string(), report.rhs.to_string()],
                vec!["residual".to_string(), format!("{:.3e}", report.residual)],
                vec!["tolerance".to_string(), format!("{:.3e}", report.tolerance)],
                vec!["passed".to_string(), report.passed.to_string()],
            ];
            if let Some(d) = &report.diagnostic {
                rows.push(vec!["diagnostic".to_string(), d.clone()]);
            }
            aligned(&rows)
        }
    }
}

pub fn cmd_verify(
    identity: IdentityArg,
    s: Option<u32>,
    tol: f64,
    radius: f64,
    format: OutputFormat,
) -> Result<(String, i32), Usage> {
    let report = verify_report(identity, s, tol, radius)?;
    let code = if report.passed { EXIT_OK } else { EXIT_FAILED };
    Ok((render_identity(&report, format), code))
}

const SIDE_NAMES: [&str; 4] = ["bottom", "right", "top", "left"];

pub fn render_contour(report: &ContourReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => {
            let mut rows = vec![vec!["segment".to_string(), "re".to_string(), "im".to_string()]];
            for (name, z) in SIDE_NAMES.iter().zip(report.side_values.iter()) {
                rows.push(vec![name.to_string(), format!("{:e}", z.re), format!("{:e}", z.im)]);
            }
            rows.push(vec![
                "closure".to_string(),
                format!("{:e}", report.closure.re),
                format!("{:e}", report.closure.im),
            ]);
            csv(&rows)
        }
        OutputFormat::Plain => {
            let mut rows = vec![
                vec!["s".to_string(), report.s.to_string()],
                vec!["R".to_string(), report.radius.to_string()],
            ];
            for (name, z) in SIDE_NAMES.iter().zip(report.side_values.iter()) {
                rows.push(vec![name.to_string(), format!("{:.15e}{:+.15e}i", z.re, z.im)]);
            }
            rows.push(vec![
                "closure".to_string(),
                format!("{:.15e}{:+.15e}i", report.closure.re, report.closure.im),
            ]);
            rows.push(vec!["|closure|".to_string(), format!("{:.3e}", report.closure.norm())]);
            rows.push(vec!["|right side|".to_string(), format!("{:.3e}", report.right_side_magnitude)]);
            rows.push(vec!["error estimate".to_string(), format!("{:.3e}", report.error_estimate)]);
            rows.push(vec!["evaluations".to_string(), report.evaluations.to_string()]);
            rows.push(vec!["converged".to_string(), report.converged.to_string()]);
            aligned(&rows)
        }
    }
}

/// `contour`: exit 0 iff every side converged and `|closure| <= tol`.
pub fn cmd_contour(s: u32, radius: f64, tol: f64, format: OutputFormat) -> Result<(String, i32), Usage> {
    check_tol(tol)?;
    check_radius(radius)?;
    ensure((2..=MAX_VERIFY_S).contains(&s), || format!("--s must be in 2..={MAX_VERIFY_S}, got {s}"))?;
    let report = contour_closure(s, radius, tol)?;
    let ok = report.converged && report.closure.norm() <= tol;
    Ok((render_contour(&report, format), if ok { EXIT_OK } else { EXIT_FAILED }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("zeta-recur").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn even_plain_two_rows() {
        let (code, out, _) = run_capture(&["even", "--n", "2", "--digits", "10"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        let row1: Vec<&str> = lines[1].split_whitespace().collect();
        let row2: Vec<&str> = lines[2].split_whitespace().collect();
        assert_eq!(row1, ["1", "1/6", "true", "1.6449340668"]);
        assert_eq!(row2, ["2", "1/90", "true", "1.0823232337"]);
    }

    #[test]
    fn even_csv_smallest() {
        let (code, out, _) = run_capture(&["even", "--n", "1", "--digits", "1", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,coeff,recursion_equals_euler,decimal\n1,1/6,true,1.6\n");
    }

    #[test]
    fn jobs_do_not_change_output() {
        let (_, a, _) = run_capture(&["even", "--n", "13", "--digits", "30"]);
        let (_, b, _) = run_capture(&["even", "--n", "13", "--digits", "30", "--jobs", "4"]);
        assert_eq!(a, b);
    }

    #[test]
    fn bernoulli_tables() {
        let (code, out, _) = run_capture(&["bernoulli", "--n", "0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "m,bernoulli\n0,1\n");
        let (_, out, _) = run_capture(&["bernoulli", "--n", "4", "--format", "csv"]);
        assert_eq!(out, "m,bernoulli\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
        let (_, out, _) = run_capture(&["bernoulli", "--n", "12", "--format", "csv"]);
        assert!(out.ends_with("12,-691/2730\n"));
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [
            &["even", "--n", "0"][..],
            &["even", "--n", "1001"],
            &["even", "--digits", "0"],
            &["even", "--jobs", "0"],
            &["bernoulli", "--n", "2001"],
            &["verify", "nonsense"],
            &["verify", "odd", "--s", "4"],
            &["verify", "eq10", "--s", "3"],
            &["verify", "eq2", "--s", "1"],
            &["verify", "eq2", "--tol", "-1"],
            &["verify", "closure", "--radius", "0"],
            &["contour", "--s", "1"],
            &["frobnicate"],
            &["even", "--n", "abc"],
        ] {
            let (code, _, err) = run_capture(args);
            assert_eq!(code, 2, "{args:?}");
            assert!(!err.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("--tol 1e-9"));
        assert!(out.contains("--radius 30"));
    }
}
