//! Verification suites with built-in fixtures.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{confluence_check, ideal_differences, AlgebraElement, Presentation};
use crate::error::{Error, Result};
use crate::report::{ReportJson, VerificationReport};
use crate::rmatrix::{self, GradedMatrix};
use crate::{calculus, contraction, hopf, presentations};

/// JSON layout version.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Rtt,
    Ybe,
    Braid,
    Hopf,
    Superdet,
    Contraction,
    Calculus,
    Confluence,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Rtt,
        Suite::Ybe,
        Suite::Braid,
        Suite::Hopf,
        Suite::Superdet,
        Suite::Contraction,
        Suite::Calculus,
        Suite::Confluence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rtt => "rtt",
            Suite::Ybe => "ybe",
            Suite::Braid => "braid",
            Suite::Hopf => "hopf",
            Suite::Superdet => "superdet",
            Suite::Contraction => "contraction",
            Suite::Calculus => "calculus",
            Suite::Confluence => "confluence",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Knobs shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub probe_degree: usize,
    pub assume_h1h2_zero: bool,
    /// Use the ungraded embeddings (`ybe`, `braid` with `matrix`).
    pub ungraded: bool,
    /// A built-in matrix name replacing the default battery.
    pub matrix: Option<String>,
    /// Keep only checks whose identity contains this text.
    pub only: Option<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            probe_degree: 4,
            assume_h1h2_zero: false,
            ungraded: false,
            matrix: None,
            only: None,
        }
    }
}

/// One check. An expected-negative check succeeds when its residue is
/// nonzero, because the claim being verified is that an identity fails.
#[derive(Debug, Clone)]
pub struct Check {
    pub suite: Suite,
    pub report: VerificationReport,
    pub expected_negative: bool,
}

impl Check {
    fn positive(suite: Suite, report: VerificationReport) -> Check {
        Check {
            suite,
            report,
            expected_negative: false,
        }
    }

    pub fn ok(&self) -> bool {
        self.report.passed != self.expected_negative
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub wall_time: Duration,
    pub passed: bool,
}

#[derive(Serialize)]
struct CheckJson {
    suite: String,
    ok: bool,
    expected_negative: bool,
    #[serde(flatten)]
    report: ReportJson,
}

#[derive(Serialize)]
struct SuiteJson {
    schema: u32,
    suite: String,
    passed: bool,
    wall_ms: u128,
    checks: Vec<CheckJson>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let j = SuiteJson {
            schema: SCHEMA,
            suite: self.suite.to_string(),
            passed: self.passed,
            wall_ms: self.wall_time.as_millis(),
            checks: self
                .checks
                .iter()
                .map(|c| CheckJson {
                    suite: c.suite.to_string(),
                    ok: c.ok(),
                    expected_negative: c.expected_negative,
                    report: c.report.to_json(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.ok(), c.expected_negative) {
                (true, false) => "PASS",
                (true, true) => "PASS (expected nonzero)",
                (false, false) => "FAIL",
                (false, true) => "FAIL (expected nonzero, got zero)",
            };
            writeln!(f, "[{}] {status}  {}", c.suite, c.report)?;
            for n in &c.report.notes {
                writeln!(f, "      note: {n}")?;
            }
        }
        write!(
            f,
            "{}: {} ({} checks, {} failed, {:.2?})",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.failures().count(),
            self.wall_time
        )
    }
}

fn maybe_truncate(p: Presentation, opts: &SuiteOptions) -> Result<Presentation> {
    if opts.assume_h1h2_zero {
        p.with_h1h2_zero()
    } else {
        Ok(p)
    }
}

fn named_matrix(name: &str) -> Result<GradedMatrix> {
    rmatrix::builtin_matrix(name)
        .ok_or_else(|| Error::Dimension(format!("unknown matrix `{name}`")))
}

/// The braid form of a named matrix: `Rhat_*` and `P` as given, `R*` via `P·R`.
fn braid_form(name: &str) -> Result<GradedMatrix> {
    let m = named_matrix(name)?;
    if name.starts_with('R') && !name.starts_with("Rhat") {
        rmatrix::rhat(&m)
    } else {
        Ok(m)
    }
}

/// Claims of failure that the suites verify: the ungraded braid equation
/// for the `h2` braid matrix.
fn expected_negative_braid(name: &str, graded: bool) -> bool {
    !graded && matches!(name, "Rh2" | "Rhat_h2")
}

fn rtt_checks(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let cases: Vec<(GradedMatrix, bool, Presentation)> = match &opts.matrix {
        Some(name) if name == "Rpq" => vec![(rmatrix::r_pq(), true, presentations::gl_pq())],
        Some(name) => vec![(named_matrix(name)?, false, presentations::gl_h1h2())],
        None => vec![
            (rmatrix::r_pq(), true, presentations::gl_pq()),
            (rmatrix::r_h1h2(), false, presentations::gl_h1h2()),
        ],
    };
    for (r, primed, p) in cases {
        let p = maybe_truncate(p, opts)?;
        out.push(Check::positive(
            Suite::Rtt,
            rmatrix::rtt_residual(&r, &rmatrix::t_matrix(primed), &p)?,
        ));
    }
    Ok(out)
}

fn labelled(mut r: VerificationReport, label: &str) -> VerificationReport {
    r.identity = format!("{} for {label}", r.identity);
    r
}

fn ybe_checks(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let cases: Vec<(String, bool)> = match &opts.matrix {
        Some(name) => vec![(name.clone(), !opts.ungraded)],
        None => vec![
            ("Rh1".into(), true),
            ("Rh2".into(), true),
            ("Rh1h2".into(), true),
            ("Rh1".into(), false),
            ("Rh2".into(), false),
        ],
    };
    cases
        .into_iter()
        .map(|(name, graded)| {
            let r = rmatrix::ybe_residual(&named_matrix(&name)?, graded)?;
            Ok(Check::positive(Suite::Ybe, labelled(r, &name)))
        })
        .collect()
}

fn braid_checks(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let cases: Vec<(String, bool)> = match &opts.matrix {
        Some(name) => vec![(name.clone(), !opts.ungraded)],
        None => vec![
            ("Rhat_h1".into(), true),
            ("Rhat_h2".into(), true),
            ("Rhat_h1h2".into(), true),
            ("Rhat_h2".into(), false),
        ],
    };
    let mut out = Vec::new();
    for (name, graded) in cases {
        let r = rmatrix::braid_residual(&braid_form(&name)?, graded)?;
        out.push(Check {
            suite: Suite::Braid,
            report: labelled(r, &name),
            expected_negative: expected_negative_braid(&name, graded),
        });
    }
    if opts.matrix.is_none() {
        out.push(Check::positive(
            Suite::Braid,
            labelled(rmatrix::rhat_involution(&rmatrix::r_h1h2())?, "Rh1h2"),
        ));
        out.push(Check::positive(
            Suite::Braid,
            rmatrix::factorization_check()?,
        ));
    }
    Ok(out)
}

fn confluence_checks(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in presentations::NAMES {
        if *name == "Calc_h1h2" {
            // overlaps there are classified by the calculus suite
            continue;
        }
        let p = maybe_truncate(presentations::builtin(name)?, opts)?;
        out.push(Check::positive(
            Suite::Confluence,
            confluence_check(&p, opts.probe_degree)?,
        ));
    }
    let mut same =
        VerificationReport::new("both forms of the two-parameter relations generate one ideal");
    let diffs = ideal_differences(
        &presentations::gl_h1h2(),
        &presentations::gl_h1h2_alt(),
        opts.probe_degree,
    )?;
    if diffs.is_empty() {
        same.push("GL_h1h2 vs GL_h1h2_alt", AlgebraElement::zero());
    }
    for (loc, e) in diffs {
        same.push(loc, e);
    }
    out.push(Check::positive(Suite::Confluence, same));
    Ok(out)
}

fn positives(suite: Suite, reports: Vec<VerificationReport>) -> Vec<Check> {
    reports
        .into_iter()
        .map(|r| Check::positive(suite, r))
        .collect()
}

fn checks_for(suite: Suite, opts: &SuiteOptions) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Rtt => rtt_checks(opts)?,
        Suite::Ybe => ybe_checks(opts)?,
        Suite::Braid => braid_checks(opts)?,
        Suite::Hopf => positives(suite, hopf::hopf_suite()?),
        Suite::Superdet => positives(suite, hopf::superdet_suite()?),
        Suite::Contraction => positives(suite, contraction::contraction_suite(opts.probe_degree)?),
        Suite::Calculus => positives(suite, calculus::calculus_consistency(3)?),
        Suite::Confluence => confluence_checks(opts)?,
        Suite::All => {
            // independent suites run concurrently; results keep suite order
            let results: Vec<Result<Vec<Check>>> = std::thread::scope(|s| {
                let handles: Vec<_> = Suite::EACH
                    .iter()
                    .map(|&x| s.spawn(move || checks_for(x, opts)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("suite thread panicked"))
                    .collect()
            });
            let mut all = Vec::new();
            for r in results {
                all.extend(r?);
            }
            all
        }
    })
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut checks = checks_for(suite, opts)?;
    if let Some(only) = &opts.only {
        checks.retain(|c| c.report.identity.contains(only.as_str()));
    }
    let passed = checks.iter().all(Check::ok);
    Ok(SuiteReport {
        suite,
        checks,
        wall_time: start.elapsed(),
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!(matches!(
            "bogus".parse::<Suite>(),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn ungraded_h2_braid_is_an_expected_negative() {
        let opts = SuiteOptions {
            ungraded: true,
            matrix: Some("Rh2".into()),
            ..SuiteOptions::default()
        };
        let r = run_suite(Suite::Braid, &opts).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert!(r.checks[0].expected_negative);
        assert!(!r.checks[0].report.passed);
        assert!(r.passed);
    }

    #[test]
    fn json_has_schema() {
        let r = run_suite(Suite::Ybe, &SuiteOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["passed"], true);
    }
}
