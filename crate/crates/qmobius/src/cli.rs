//! Command-line surface: `series` prints generating-function coefficients,
//! `table` tabulates combinatorial statistics from the enumeration or
//! recurrence path, and `verify` runs identity checks.
//!
//! Data goes to stdout, diagnostics (including timings) to stderr. Stdout is
//! byte-deterministic for identical invocations; rationals are always
//! rendered as exact `num/den` strings (denominator omitted when 1), never
//! as floating point.
//!
//! Exit codes: 0 success or all-pass, 1 verification failure, 2 usage error,
//! 3 enumeration-limit error.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde::Serialize;

use crate::fps::{prod_pow, Coefficient, ExponentSequence, Series};
use crate::identities::{registry, IdentityCheck, VerificationReport};
use crate::partitions::{
    count_by_parts, count_by_parts_hat, partition_numbers, series_b, series_b_hat, series_fq,
    series_fq_hat, series_p, series_pa, series_pa_hat, series_psi_q, Oracle, DEFAULT_ORACLE_LIMIT,
};
use crate::Error;

/// Environment override for the enumeration cap; the `--oracle-limit` flag
/// takes precedence over it.
pub const ORACLE_LIMIT_ENV: &str = "QSERIES_ORACLE_LIMIT";

#[derive(Parser, Debug)]
#[command(
    name = "qmobius",
    version,
    about = "Exact q-series coefficients, partition statistics, and Möbius-inversion identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print coefficients 0..N of a named generating function
    Series {
        name: SeriesName,
        /// Family parameter, required iff the series is parameterized
        #[arg(long)]
        a: Option<u32>,
        /// Truncation order (highest retained power of q)
        #[arg(short = 'N', long)]
        order: u32,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Tabulate a statistic for n = 1..n-max via the combinatorial path
    Table {
        stat: StatName,
        /// Family parameter, required iff the statistic is parameterized
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Enumeration cap (defaults to QSERIES_ORACLE_LIMIT or 60)
        #[arg(long)]
        oracle_limit: Option<u32>,
    },
    /// Check a named identity (or all of them) to a given order
    Verify {
        identity: IdentityName,
        /// Truncation order for every check
        #[arg(short = 'N', long)]
        order: u32,
        /// Family parameter values, a single value `3` or a range `1..5`
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Enumeration cap (defaults to QSERIES_ORACLE_LIMIT or 60)
        #[arg(long)]
        oracle_limit: Option<u32>,
        /// On failure, list every mismatching coefficient, not just the first
        #[arg(long)]
        full_diff: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    #[value(name = "psiQ")]
    PsiQ,
    #[value(name = "FQ")]
    Fq,
    #[value(name = "FQhat")]
    FqHat,
    #[value(name = "P")]
    P,
    #[value(name = "Pa")]
    Pa,
    #[value(name = "PaHat")]
    PaHat,
    #[value(name = "Ba")]
    Ba,
    #[value(name = "BaHat")]
    BaHat,
    #[value(name = "pentagonal")]
    Pentagonal,
    #[value(name = "jacobi")]
    Jacobi,
}

impl SeriesName {
    fn as_str(&self) -> &'static str {
        match self {
            SeriesName::PsiQ => "psiQ",
            SeriesName::Fq => "FQ",
            SeriesName::FqHat => "FQhat",
            SeriesName::P => "P",
            SeriesName::Pa => "Pa",
            SeriesName::PaHat => "PaHat",
            SeriesName::Ba => "Ba",
            SeriesName::BaHat => "BaHat",
            SeriesName::Pentagonal => "pentagonal",
            SeriesName::Jacobi => "jacobi",
        }
    }

    fn parameterized(&self) -> bool {
        matches!(
            self,
            SeriesName::Pa | SeriesName::PaHat | SeriesName::Ba | SeriesName::BaHat
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatName {
    #[value(name = "p")]
    P,
    #[value(name = "pa")]
    Pa,
    #[value(name = "paHat")]
    PaHat,
    #[value(name = "Q")]
    Q,
    #[value(name = "Qhat")]
    QHat,
    #[value(name = "ba")]
    Ba,
    #[value(name = "baHat")]
    BaHat,
    #[value(name = "durfeeProfile")]
    DurfeeProfile,
}

impl StatName {
    fn as_str(&self) -> &'static str {
        match self {
            StatName::P => "p",
            StatName::Pa => "pa",
            StatName::PaHat => "paHat",
            StatName::Q => "Q",
            StatName::QHat => "Qhat",
            StatName::Ba => "ba",
            StatName::BaHat => "baHat",
            StatName::DurfeeProfile => "durfeeProfile",
        }
    }

    fn parameterized(&self) -> bool {
        matches!(
            self,
            StatName::Pa | StatName::PaHat | StatName::Ba | StatName::BaHat
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityName {
    #[value(name = "lemma1")]
    Lemma1,
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "theorem2")]
    Theorem2,
    #[value(name = "theorem3")]
    Theorem3,
    #[value(name = "pentagonal")]
    Pentagonal,
    #[value(name = "jacobi")]
    Jacobi,
    #[value(name = "eulerDurfee")]
    EulerDurfee,
    #[value(name = "all")]
    All,
}

impl IdentityName {
    fn as_str(&self) -> &'static str {
        match self {
            IdentityName::Lemma1 => "lemma1",
            IdentityName::Theorem1 => "theorem1",
            IdentityName::Theorem2 => "theorem2",
            IdentityName::Theorem3 => "theorem3",
            IdentityName::Pentagonal => "pentagonal",
            IdentityName::Jacobi => "jacobi",
            IdentityName::EulerDurfee => "eulerDurfee",
            IdentityName::All => "all",
        }
    }

    fn parameterized(&self) -> bool {
        matches!(
            self,
            IdentityName::Theorem2 | IdentityName::Theorem3 | IdentityName::All
        )
    }
}

/// What a finished command wants the process to do.
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
struct Failure {
    message: String,
    code: i32,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

fn resource(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 3,
    }
}

/// Exit code for a finished verification run: 0 iff every report passed.
pub fn verify_exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

/// Runs a parsed command to completion; never panics on user input.
pub fn execute(command: Command) -> Output {
    match run_command(command) {
        Ok(output) => output,
        Err(failure) => Output {
            stdout: String::new(),
            stderr: format!("error: {}\n", failure.message),
            code: failure.code,
        },
    }
}

fn run_command(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Series {
            name,
            a,
            order,
            format,
        } => cmd_series(name, a, order, format),
        Command::Table {
            stat,
            a,
            n_max,
            format,
            oracle_limit,
        } => cmd_table(stat, a, n_max, format, oracle_limit),
        Command::Verify {
            identity,
            order,
            a,
            format,
            oracle_limit,
            full_diff,
        } => cmd_verify(identity, order, a, format, oracle_limit, full_diff),
    }
}

fn resolve_oracle_limit(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(ORACLE_LIMIT_ENV) {
        Ok(raw) => raw
            .parse()
            .map_err(|_| usage(format!("{ORACLE_LIMIT_ENV} must be a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ORACLE_LIMIT),
    }
}

fn family_parameter(a: Option<u32>, required: bool, what: &str) -> Result<Option<u32>, Failure> {
    match (a, required) {
        (Some(a), true) if a >= 1 => Ok(Some(a)),
        (Some(_), true) => Err(usage(format!("--a must be ≥ 1 for {what}"))),
        (None, true) => Err(usage(format!("--a is required for {what}"))),
        (Some(_), false) => Err(usage(format!("--a is not accepted for {what}"))),
        (None, false) => Ok(None),
    }
}

/// Parses `--a` for verify: either `3` or an inclusive range `1..5`.
fn parse_a_values(raw: &str) -> Result<Vec<u32>, Failure> {
    let bad = || {
        usage(format!(
            "invalid --a value '{raw}': expected e.g. 3 or 1..5"
        ))
    };
    if let Some((lo, hi)) = raw.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo < 1 || hi < lo {
            return Err(bad());
        }
        Ok((lo..=hi).collect())
    } else {
        let a: u32 = raw.trim().parse().map_err(|_| bad())?;
        if a < 1 {
            return Err(bad());
        }
        Ok(vec![a])
    }
}

fn render_coefficient(c: &Coefficient) -> String {
    c.to_string()
}

#[derive(Serialize)]
struct SeriesRecord {
    kind: &'static str,
    name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u32>,
    order: u32,
    coefficients: Vec<String>,
}

fn cmd_series(
    name: SeriesName,
    a: Option<u32>,
    order: u32,
    format: Format,
) -> Result<Output, Failure> {
    let a = family_parameter(
        a,
        name.parameterized(),
        &format!("series {}", name.as_str()),
    )?;
    let n = order as usize;
    let series: Series = match (name, a) {
        (SeriesName::PsiQ, _) => series_psi_q(n),
        (SeriesName::Fq, _) => series_fq(n),
        (SeriesName::FqHat, _) => series_fq_hat(n),
        (SeriesName::P, _) => series_p(n),
        (SeriesName::Pentagonal, _) => prod_pow(&ExponentSequence::constant(1), n),
        (SeriesName::Jacobi, _) => prod_pow(&ExponentSequence::constant(3), n),
        (SeriesName::Pa, Some(a)) => series_pa(a, n).map_err(|e| usage(e.to_string()))?,
        (SeriesName::PaHat, Some(a)) => series_pa_hat(a, n).map_err(|e| usage(e.to_string()))?,
        (SeriesName::Ba, Some(a)) => series_b(a, n).map_err(|e| usage(e.to_string()))?,
        (SeriesName::BaHat, Some(a)) => series_b_hat(a, n).map_err(|e| usage(e.to_string()))?,
        _ => unreachable!("family_parameter enforces presence"),
    };
    let coefficients: Vec<String> = series.coeffs().iter().map(render_coefficient).collect();
    let stdout = match format {
        Format::Text => format!("{}\n", coefficients.join(", ")),
        Format::Json => {
            let record = SeriesRecord {
                kind: "series",
                name: name.as_str(),
                a,
                order,
                coefficients,
            };
            format!(
                "{}\n",
                serde_json::to_string(&record).expect("serializable")
            )
        }
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

#[derive(Serialize)]
struct TableRecord {
    kind: &'static str,
    stat: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u32>,
    n_max: u32,
    values: Vec<String>,
}

#[derive(Serialize)]
struct ProfileEntry {
    n: u32,
    partition: Vec<u32>,
    square: u32,
    max_rectangle_height: u32,
}

#[derive(Serialize)]
struct ProfileRecord {
    kind: &'static str,
    stat: &'static str,
    n_max: u32,
    entries: Vec<ProfileEntry>,
}

fn cmd_table(
    stat: StatName,
    a: Option<u32>,
    n_max: u32,
    format: Format,
    oracle_limit: Option<u32>,
) -> Result<Output, Failure> {
    let a = family_parameter(a, stat.parameterized(), &format!("table {}", stat.as_str()))?;
    let oracle = Oracle::with_limit(resolve_oracle_limit(oracle_limit)?);
    let lift = |r: crate::Result<BigInt>| -> Result<BigInt, Failure> {
        r.map_err(|e| match e {
            Error::OracleLimitExceeded { .. } => resource(e.to_string()),
            other => usage(other.to_string()),
        })
    };

    if stat == StatName::DurfeeProfile {
        return durfee_profile_table(n_max, format, &oracle);
    }

    let mut values: Vec<String> = Vec::with_capacity(n_max as usize);
    match stat {
        StatName::P => {
            let table = partition_numbers(n_max as usize);
            values.extend(table[1..].iter().map(|v| v.to_string()));
        }
        StatName::Pa => {
            let a = a.expect("checked");
            for n in 1..=n_max {
                values.push(count_by_parts(a, n).to_string());
            }
        }
        StatName::PaHat => {
            let a = a.expect("checked");
            for n in 1..=n_max {
                values.push(count_by_parts_hat(a, n).to_string());
            }
        }
        StatName::Q => {
            for n in 1..=n_max {
                values.push(lift(oracle.count_distinct(n))?.to_string());
            }
        }
        StatName::QHat => {
            for n in 1..=n_max {
                values.push(lift(oracle.count_uniform_multiplicity(n))?.to_string());
            }
        }
        StatName::Ba => {
            let a = a.expect("checked");
            for n in 1..=n_max {
                values.push(lift(oracle.count_durfee(a, n))?.to_string());
            }
        }
        StatName::BaHat => {
            let a = a.expect("checked");
            for n in 1..=n_max {
                values.push(lift(oracle.count_durfee_hat(a, n))?.to_string());
            }
        }
        StatName::DurfeeProfile => unreachable!("handled above"),
    }

    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{}\t{}", i + 1, v);
            }
            s
        }
        Format::Json => {
            let record = TableRecord {
                kind: "table",
                stat: stat.as_str(),
                a,
                n_max,
                values,
            };
            format!(
                "{}\n",
                serde_json::to_string(&record).expect("serializable")
            )
        }
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

/// Lists every partition of each n ≤ n_max with its Durfee square side and
/// maximal rectangle height.
fn durfee_profile_table(n_max: u32, format: Format, oracle: &Oracle) -> Result<Output, Failure> {
    let mut entries = Vec::new();
    for n in 1..=n_max {
        oracle
            .for_each_partition(n, |parts| {
                let profile = crate::partitions::durfee_profile(parts);
                entries.push(ProfileEntry {
                    n,
                    partition: parts.to_vec(),
                    square: profile.square,
                    max_rectangle_height: profile.max_rectangle_height,
                });
            })
            .map_err(|e| resource(e.to_string()))?;
    }
    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                let parts = e
                    .partition
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}",
                    e.n, parts, e.square, e.max_rectangle_height
                );
            }
            s
        }
        Format::Json => {
            let record = ProfileRecord {
                kind: "table",
                stat: "durfeeProfile",
                n_max,
                entries,
            };
            format!(
                "{}\n",
                serde_json::to_string(&record).expect("serializable")
            )
        }
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

#[derive(Serialize)]
struct MismatchRecord {
    claim: String,
    power: u32,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct ReportRecord {
    identity: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    params: BTreeMap<String, String>,
    order: u32,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    combinatorial_limit: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch: Option<MismatchRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatches: Option<Vec<MismatchRecord>>,
}

#[derive(Serialize)]
struct ReportSet {
    kind: &'static str,
    order: u32,
    reports: Vec<ReportRecord>,
}

fn mismatch_record(m: &crate::identities::Mismatch) -> MismatchRecord {
    MismatchRecord {
        claim: m.claim.clone(),
        power: m.power,
        lhs: render_coefficient(&m.lhs),
        rhs: render_coefficient(&m.rhs),
    }
}

fn cmd_verify(
    identity: IdentityName,
    order: u32,
    a: Option<String>,
    format: Format,
    oracle_limit: Option<u32>,
    full_diff: bool,
) -> Result<Output, Failure> {
    let a_values = match (&a, identity.parameterized()) {
        (Some(raw), true) => parse_a_values(raw)?,
        (None, true) => vec![1],
        (Some(_), false) => {
            return Err(usage(format!(
                "--a is not accepted for verify {}",
                identity.as_str()
            )))
        }
        (None, false) => vec![1],
    };
    let oracle = Oracle::with_limit(resolve_oracle_limit(oracle_limit)?);

    let checks: Vec<IdentityCheck> = match identity {
        IdentityName::All => registry(&a_values),
        name => registry(&a_values)
            .into_iter()
            .filter(|c| c.base_name() == name.as_str())
            .collect(),
    };
    let reports: Vec<VerificationReport> = checks.iter().map(|c| c.run(order, &oracle)).collect();

    let mut stderr = String::new();
    for report in &reports {
        let _ = writeln!(stderr, "{}: {:?}", report.label(), report.elapsed);
    }

    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            for report in &reports {
                if report.passed() {
                    let _ = write!(s, "{} order={} pass", report.label(), report.order);
                    if let Some(limit) = report.combinatorial_limit {
                        let _ = write!(s, " combinatorial-to={limit}");
                    }
                    let _ = writeln!(s);
                } else if let Some(err) = &report.error {
                    let _ = writeln!(
                        s,
                        "{} order={} FAIL error: {err}",
                        report.label(),
                        report.order
                    );
                } else {
                    let m = report.first_mismatch().expect("failed without error");
                    let _ = writeln!(
                        s,
                        "{} order={} FAIL at q^{} in \"{}\": lhs={} rhs={}",
                        report.label(),
                        report.order,
                        m.power,
                        m.claim,
                        render_coefficient(&m.lhs),
                        render_coefficient(&m.rhs)
                    );
                    if full_diff {
                        for m in &report.mismatches {
                            let _ = writeln!(
                                s,
                                "  q^{} in \"{}\": lhs={} rhs={}",
                                m.power,
                                m.claim,
                                render_coefficient(&m.lhs),
                                render_coefficient(&m.rhs)
                            );
                        }
                    }
                }
            }
            s
        }
        Format::Json => {
            let records: Vec<ReportRecord> = reports
                .iter()
                .map(|r| ReportRecord {
                    identity: r.name.clone(),
                    params: r.params.clone(),
                    order: r.order,
                    status: r.status().to_string(),
                    combinatorial_limit: r.combinatorial_limit,
                    first_mismatch: r.first_mismatch().map(mismatch_record),
                    mismatches: if full_diff && !r.mismatches.is_empty() {
                        Some(r.mismatches.iter().map(mismatch_record).collect())
                    } else {
                        None
                    },
                })
                .collect();
            let set = ReportSet {
                kind: "report",
                order,
                reports: records,
            };
            format!("{}\n", serde_json::to_string(&set).expect("serializable"))
        }
    };

    Ok(Output {
        stdout,
        stderr,
        code: verify_exit_code(&reports),
    })
}
