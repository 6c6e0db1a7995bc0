//! Text and structured (JSON) reports, and the exit-code contract.

use std::fmt::Write as _;

use artin_core::verifier::{RunOptions, StatementId, Verdict, VerdictKind, Witness};
use serde::Serialize;

/// The result of one check: a verdict, or an error that stopped it.
pub enum Outcome {
    Verdict(Verdict),
    Error { statement: StatementId, label: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub refuted: usize,
    pub inconclusive: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(outcomes: &[Outcome]) -> Self {
        let mut s = Summary::default();
        for o in outcomes {
            match o {
                Outcome::Verdict(v) => match v.kind {
                    VerdictKind::Verified { .. } => s.verified += 1,
                    VerdictKind::Refuted(_) => s.refuted += 1,
                    VerdictKind::Inconclusive(_) => s.inconclusive += 1,
                },
                Outcome::Error { .. } => s.errors += 1,
            }
        }
        s
    }

    /// Errors dominate, then refutations, then inconclusive results.
    pub fn exit_code(&self) -> i32 {
        if self.errors > 0 {
            EXIT_INPUT
        } else if self.refuted > 0 {
            EXIT_REFUTED
        } else if self.inconclusive > 0 {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }
}

#[derive(Serialize)]
struct StructuredReport<'a> {
    target: &'a str,
    options: StructuredOptions,
    checks: Vec<StructuredCheck>,
    summary: Summary,
    exit_code: i32,
}

#[derive(Serialize)]
struct StructuredOptions {
    bound: usize,
    zeta_bound: usize,
    validation_bound: u64,
}

#[derive(Serialize)]
struct StructuredCheck {
    statement: &'static str,
    label: String,
    verdict: &'static str,
    bound: Option<usize>,
    witness: Option<StructuredWitness>,
    reason: Option<String>,
    certificates: Vec<StructuredCertificate>,
    log: Vec<String>,
    /// Deterministic work counts; wall-clock time would break reproducibility.
    timing: StructuredTiming,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum StructuredWitness {
    Coefficient { index: usize, left: String, right: String },
    ClassValue { class: usize, left: String, right: String },
    Certificate { name: String },
}

#[derive(Serialize)]
struct StructuredCertificate {
    name: String,
    holds: bool,
    detail: String,
}

#[derive(Serialize)]
struct StructuredTiming {
    primes: usize,
    coefficients: usize,
}

fn witness(w: &Witness) -> StructuredWitness {
    match w {
        Witness::Coefficient { index, left, right } => {
            StructuredWitness::Coefficient { index: *index, left: left.to_string(), right: right.to_string() }
        }
        Witness::ClassValue { class, left, right } => {
            StructuredWitness::ClassValue { class: *class, left: left.to_string(), right: right.to_string() }
        }
        Witness::Certificate { name } => StructuredWitness::Certificate { name: name.clone() },
    }
}

fn structured_check(o: &Outcome) -> StructuredCheck {
    match o {
        Outcome::Verdict(v) => {
            let (bound, w, reason) = match &v.kind {
                VerdictKind::Verified { bound } => (*bound, None, None),
                VerdictKind::Refuted(w) => (None, Some(witness(w)), None),
                VerdictKind::Inconclusive(r) => (None, None, Some(r.clone())),
            };
            StructuredCheck {
                statement: v.statement.as_str(),
                label: v.label.clone(),
                verdict: v.kind.name(),
                bound,
                witness: w,
                reason,
                certificates: v
                    .certificates
                    .iter()
                    .map(|c| StructuredCertificate { name: c.name.clone(), holds: c.holds, detail: c.detail.clone() })
                    .collect(),
                log: v.log.clone(),
                timing: StructuredTiming { primes: v.work.primes, coefficients: v.work.coefficients },
            }
        }
        Outcome::Error { statement, label, message } => StructuredCheck {
            statement: statement.as_str(),
            label: label.clone(),
            verdict: "error",
            bound: None,
            witness: None,
            reason: Some(message.clone()),
            certificates: Vec::new(),
            log: Vec::new(),
            timing: StructuredTiming { primes: 0, coefficients: 0 },
        },
    }
}

pub fn render(format: Format, target: &str, opts: &RunOptions, outcomes: &[Outcome]) -> String {
    match format {
        Format::Text => render_text(target, opts, outcomes),
        Format::Structured => render_structured(target, opts, outcomes),
    }
}

pub fn render_structured(target: &str, opts: &RunOptions, outcomes: &[Outcome]) -> String {
    let summary = Summary::of(outcomes);
    let report = StructuredReport {
        target,
        options: StructuredOptions {
            bound: opts.bound,
            zeta_bound: opts.zeta_bound,
            validation_bound: opts.validation_bound,
        },
        checks: outcomes.iter().map(structured_check).collect(),
        summary,
        exit_code: summary.exit_code(),
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

pub fn render_text(target: &str, opts: &RunOptions, outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{target}: B = {}, zeta bound = {}, validation bound = {}",
        opts.bound, opts.zeta_bound, opts.validation_bound
    );
    for o in outcomes {
        out.push('\n');
        match o {
            Outcome::Verdict(v) => {
                let _ = writeln!(out, "{} [{}]", v.statement, v.label);
                let line = match &v.kind {
                    VerdictKind::Verified { bound: Some(b) } => format!("verified through B = {b}"),
                    VerdictKind::Verified { bound: None } => "verified".to_string(),
                    VerdictKind::Refuted(w) => format!("refuted: {w}"),
                    VerdictKind::Inconclusive(r) => format!("inconclusive: {r}"),
                };
                let _ = writeln!(out, "  verdict: {line}");
                for c in &v.certificates {
                    let mark = if c.holds { "ok" } else { "FAILED" };
                    let _ = writeln!(out, "  [{mark}] {}: {}", c.name, c.detail);
                }
                for l in &v.log {
                    let _ = writeln!(out, "  | {l}");
                }
                let _ = writeln!(out, "  work: {} primes, {} coefficients", v.work.primes, v.work.coefficients);
            }
            Outcome::Error { statement, label, message } => {
                let _ = writeln!(out, "{statement} [{label}]");
                let _ = writeln!(out, "  error: {message}");
            }
        }
    }
    let s = Summary::of(outcomes);
    let _ = writeln!(
        out,
        "\nsummary: {} verified, {} refuted, {} inconclusive, {} errors",
        s.verified, s.refuted, s.inconclusive, s.errors
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use artin_core::verifier::{Certificate, Work};

    fn verdict(kind: VerdictKind) -> Outcome {
        Outcome::Verdict(Verdict {
            statement: StatementId::Prop1,
            label: "x".into(),
            kind,
            certificates: vec![Certificate { name: "c".into(), holds: true, detail: "d".into() }],
            log: vec!["line".into()],
            work: Work { primes: 3, coefficients: 4 },
        })
    }

    #[test]
    fn exit_codes_follow_precedence() {
        let ok = || verdict(VerdictKind::Verified { bound: Some(10) });
        let inc = || verdict(VerdictKind::Inconclusive("r".into()));
        let bad = || verdict(VerdictKind::Refuted(Witness::Certificate { name: "c".into() }));
        let err = || Outcome::Error { statement: StatementId::Thm5, label: "e".into(), message: "m".into() };
        assert_eq!(Summary::of(&[ok(), ok()]).exit_code(), EXIT_OK);
        assert_eq!(Summary::of(&[ok(), inc()]).exit_code(), EXIT_INCONCLUSIVE);
        assert_eq!(Summary::of(&[inc(), bad()]).exit_code(), EXIT_REFUTED);
        assert_eq!(Summary::of(&[bad(), err()]).exit_code(), EXIT_INPUT);
        assert_eq!(Summary::of(&[]).exit_code(), EXIT_OK);
    }

    #[test]
    fn structured_report_is_valid_json() {
        let opts = RunOptions::default();
        let text = render_structured("t", &opts, &[verdict(VerdictKind::Verified { bound: Some(10) })]);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["checks"][0]["verdict"], "verified");
        assert_eq!(v["checks"][0]["bound"], 10);
        assert_eq!(v["checks"][0]["timing"]["primes"], 3);
        assert_eq!(v["exit_code"], 0);
    }

    #[test]
    fn text_report_marks_failed_certificates() {
        let mut o = verdict(VerdictKind::Refuted(Witness::Certificate { name: "c".into() }));
        if let Outcome::Verdict(v) = &mut o {
            v.certificates[0].holds = false;
        }
        let text = render_text("t", &RunOptions::default(), &[o]);
        assert!(text.contains("[FAILED] c: d"));
        assert!(text.contains("refuted: certificate 'c' fails"));
        assert!(text.contains("summary: 0 verified, 1 refuted"));
    }
}
