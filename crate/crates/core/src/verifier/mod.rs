//! Executable checks of the statements relating Artin L-series, characters
//! and fields, each producing a [`Verdict`] with its evidence.
//!
//! Equalities of L-series are only ever verified through a finite bound; a
//! `Verified` verdict records the bound it was checked to.

mod checks;
mod suites;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::CycloNumber;
use crate::lseries::{compare_prefixes, DirichletPrefix, PrefixComparison};

pub use checks::*;
pub use suites::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatementId {
    Prop1,
    Prop2,
    Prop3,
    S3Remark,
    Prop4,
    Thm5,
    Thm6,
    Corollary,
    FinalExample,
    GassmannSearch,
}

impl StatementId {
    pub const ALL: [StatementId; 10] = [
        StatementId::Prop1,
        StatementId::Prop2,
        StatementId::Prop3,
        StatementId::S3Remark,
        StatementId::Prop4,
        StatementId::Thm5,
        StatementId::Thm6,
        StatementId::Corollary,
        StatementId::FinalExample,
        StatementId::GassmannSearch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::Prop1 => "prop1",
            StatementId::Prop2 => "prop2",
            StatementId::Prop3 => "prop3",
            StatementId::S3Remark => "s3-remark",
            StatementId::Prop4 => "prop4",
            StatementId::Thm5 => "thm5",
            StatementId::Thm6 => "thm6",
            StatementId::Corollary => "corollary",
            StatementId::FinalExample => "final-example",
            StatementId::GassmannSearch => "gassmann-search",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two Dirichlet coefficients at the same index that differ.
    Coefficient { index: usize, left: CycloNumber, right: CycloNumber },
    /// Two class-function values on the same class that differ.
    ClassValue { class: usize, left: CycloNumber, right: CycloNumber },
    /// A named certificate that failed; details are in the certificate list.
    Certificate { name: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Coefficient { index, left, right } => write!(f, "a_{index}: {left} ≠ {right}"),
            Witness::ClassValue { class, left, right } => write!(f, "class {class}: {left} ≠ {right}"),
            Witness::Certificate { name } => write!(f, "certificate '{name}' fails"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    /// `bound` is `None` when only finite group data was involved.
    Verified {
        bound: Option<usize>,
    },
    Refuted(Witness),
    Inconclusive(String),
}

impl VerdictKind {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictKind::Verified { .. } => "verified",
            VerdictKind::Refuted(_) => "refuted",
            VerdictKind::Inconclusive(_) => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Deterministic work counters reported in place of wall-clock timing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Work {
    pub primes: usize,
    pub coefficients: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub statement: StatementId,
    /// Which instance of the statement was checked.
    pub label: String,
    pub kind: VerdictKind,
    pub certificates: Vec<Certificate>,
    pub log: Vec<String>,
    pub work: Work,
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self.kind, VerdictKind::Verified { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.kind, VerdictKind::Refuted(_))
    }

    pub fn certificate(&self, name: &str) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.name == name)
    }
}

/// Accumulates certificates, log lines and work counts while a check runs.
#[derive(Default)]
pub(crate) struct Evidence {
    certificates: Vec<Certificate>,
    log: Vec<String>,
    work: Work,
}

impl Evidence {
    pub(crate) fn cert(&mut self, name: &str, holds: bool, detail: String) -> bool {
        self.certificates.push(Certificate { name: name.into(), holds, detail });
        holds
    }

    pub(crate) fn note(&mut self, line: String) {
        self.log.push(line);
    }

    pub(crate) fn count_prefix(&mut self, l: &DirichletPrefix) {
        self.work.primes += l.primes_processed();
    }

    pub(crate) fn compare(&mut self, what: &str, a: &DirichletPrefix, b: &DirichletPrefix) -> PrefixComparison {
        let c = compare_prefixes(a, b);
        match &c {
            PrefixComparison::Equal { bound, compared } => {
                self.work.coefficients += compared;
                self.note(alloc::format!("{what}: equal on all {compared} shared indices ≤ {bound}"));
            }
            PrefixComparison::Differ { index, left, right } => {
                self.work.coefficients += index;
                self.note(alloc::format!("{what}: first difference at n = {index}: {left} vs {right}"));
            }
            PrefixComparison::IncomparableExclusions { bound } => {
                self.note(alloc::format!("{what}: no shared index 2 ≤ n ≤ {bound}; vacuous"));
            }
        }
        c
    }

    pub(crate) fn finish(self, statement: StatementId, label: &str, kind: VerdictKind) -> Verdict {
        Verdict {
            statement,
            label: label.into(),
            kind,
            certificates: self.certificates,
            log: self.log,
            work: self.work,
        }
    }
}

/// Maps a prefix comparison that was expected to be equal to a verdict kind.
/// A range in which every index past 1 is excluded verifies vacuously, as
/// `B = 1` does, so that verification stays monotone in the bound.
pub(crate) fn equality_kind(c: PrefixComparison) -> VerdictKind {
    match c {
        PrefixComparison::Equal { bound, .. } => VerdictKind::Verified { bound: Some(bound) },
        PrefixComparison::Differ { index, left, right } => {
            VerdictKind::Refuted(Witness::Coefficient { index, left, right })
        }
        PrefixComparison::IncomparableExclusions { bound } => VerdictKind::Verified { bound: Some(bound) },
    }
}

#[cfg(test)]
mod tests;
