//! Check reports: verdicts with machine-checkable witnesses.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of a check.
///
/// `VerifiedToBound(n)` is the honest verdict for statements quantified
/// over all homological degrees that were confirmed up to degree `n`;
/// reports never claim unbounded vanishing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    VerifiedToBound(u32),
    /// The check's precondition failed, so the statement is not tested.
    Vacuous,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Pass | Verdict::VerifiedToBound(_))
    }

    /// Combines sub-verdicts: any Fail wins, else the weakest bound.
    pub fn combine(parts: &[Verdict]) -> Verdict {
        if parts.iter().any(|v| matches!(v, Verdict::Fail)) {
            return Verdict::Fail;
        }
        if parts.iter().any(|v| matches!(v, Verdict::Vacuous)) {
            return Verdict::Vacuous;
        }
        let mut bound = None;
        for v in parts {
            if let Verdict::VerifiedToBound(n) = v {
                bound = Some(bound.map_or(*n, |b: u32| b.min(*n)));
            }
        }
        match bound {
            Some(n) => Verdict::VerifiedToBound(n),
            None => Verdict::Pass,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::VerifiedToBound(n) => write!(f, "VERIFIED_TO_BOUND({n})"),
            Verdict::Vacuous => write!(f, "VACUOUS"),
        }
    }
}

/// A machine-checkable witness attached to a failing (or informative) check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// A nonzero element, rendered canonically.
    Element { label: String, value: String },
    /// Two dimensions that were expected to agree.
    DimPair {
        left_label: String,
        left: String,
        right_label: String,
        right: String,
    },
    /// An offending index (e.g. first non-vanishing Ext degree).
    Index { label: String, value: u32 },
    /// Free-form note (kept short and stable).
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element { label, value } => write!(f, "{label}={value}"),
            Witness::DimPair {
                left_label,
                left,
                right_label,
                right,
            } => write!(f, "{left_label}={left} {right_label}={right}"),
            Witness::Index { label, value } => write!(f, "{label}={value}"),
            Witness::Note(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubReport {
    pub label: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

/// The result of one named check, with its sub-certificates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub bound: Option<u32>,
    pub witness: Option<Witness>,
    pub subs: Vec<SubReport>,
}

impl CheckReport {
    pub fn new(name: &str, verdict: Verdict) -> CheckReport {
        CheckReport {
            name: String::from(name),
            verdict,
            bound: None,
            witness: None,
            subs: Vec::new(),
        }
    }

    pub fn with_bound(mut self, bound: u32) -> CheckReport {
        self.bound = Some(bound);
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> CheckReport {
        self.witness = Some(witness);
        self
    }

    pub fn push_sub(&mut self, label: &str, verdict: Verdict, witness: Option<Witness>) {
        self.subs.push(SubReport {
            label: String::from(label),
            verdict,
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}
