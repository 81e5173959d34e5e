use std::collections::BTreeMap;
use std::fmt;

use dimfox_core::{FiniteGroup, Subgroup};
use serde::{Deserialize, Serialize};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Dim3,
    Fox0,
    Fox1,
    Fox2,
    ExactSequence,
    PolynomialSequence,
}

impl Check {
    pub fn fox(n: usize) -> Option<Check> {
        match n {
            0 => Some(Check::Fox0),
            1 => Some(Check::Fox1),
            2 => Some(Check::Fox2),
            _ => None,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().expect("string tag"))
    }
}

/// What was verified, in enough detail to rerun it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Case {
    pub check: Check,
    pub group: String,
    pub k: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<String>>,
    pub nseries: String,
    pub ring: String,
    /// Which closed form produced the right-hand side.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} K=<{}>", self.check, self.group, self.k.join(","))?;
        if let Some(h) = &self.h {
            write!(f, " H=<{}>", h.join(","))?;
        }
        write!(f, " N={} R={}", self.nseries, self.ring)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containments {
    /// The elementary lower bound (`K_2 N_3`, or the degree-2 Fox lower bound) lies in the formula side.
    pub lower_in_rhs: bool,
    pub rhs_in_lhs: bool,
    pub lhs_in_rhs: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub case: Case,
    /// Brute-force side, sorted element names.
    pub lhs: Vec<String>,
    /// Formula side, sorted element names.
    pub rhs: Vec<String>,
    pub equal: bool,
    /// The subgroup is strictly larger than `K_2 N_3` (dimension checks over Z only).
    pub counterexample: bool,
    pub containments: Containments,
    /// Secondary conditions checked alongside the main comparison.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub checks: BTreeMap<String, bool>,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub ms: u64,
}

fn sorted_names(g: &FiniteGroup, s: &Subgroup) -> Vec<String> {
    let mut v = s.names(g);
    v.sort();
    v
}

impl Report {
    /// Compares two subgroups; `lower` is a subgroup expected below the formula side.
    pub fn compare(case: Case, g: &FiniteGroup, lhs: &Subgroup, rhs: &Subgroup, lower: &Subgroup) -> Self {
        let mut witnesses: Vec<String> = lhs
            .elements()
            .into_iter()
            .filter(|&x| !rhs.contains(x))
            .chain(rhs.elements().into_iter().filter(|&x| !lhs.contains(x)))
            .map(|x| g.name(x).to_string())
            .collect();
        witnesses.sort();
        Report {
            case,
            lhs: sorted_names(g, lhs),
            rhs: sorted_names(g, rhs),
            equal: lhs == rhs,
            counterexample: false,
            containments: Containments {
                lower_in_rhs: lower.is_subgroup_of(rhs),
                rhs_in_lhs: rhs.is_subgroup_of(lhs),
                lhs_in_rhs: lhs.is_subgroup_of(rhs),
            },
            checks: BTreeMap::new(),
            witnesses,
            notes: Vec::new(),
            error: None,
            ms: 0,
        }
    }

    pub fn failed(case: Case, error: String) -> Self {
        Report {
            case,
            lhs: Vec::new(),
            rhs: Vec::new(),
            equal: false,
            counterexample: false,
            containments: Containments::default(),
            checks: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            error: Some(error),
            ms: 0,
        }
    }

    /// Records a secondary condition; a failing one makes the report unequal and is
    /// listed among the witnesses.
    pub fn record(&mut self, name: &str, ok: bool) {
        self.checks.insert(name.to_string(), ok);
        if !ok {
            self.equal = false;
            self.witnesses.push(format!("check:{name}"));
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Verified: no error, sides equal and all secondary checks passed.
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.equal
    }

    pub fn without_timing(mut self) -> Self {
        self.ms = 0;
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (&self.error, self.equal) {
            (Some(_), _) => "ERROR",
            (None, true) => "ok",
            (None, false) => "MISMATCH",
        };
        write!(f, "{verdict:8} {}", self.case)?;
        if let Some(path) = &self.case.path {
            write!(f, " [{path}]")?;
        }
        if let Some(e) = &self.error {
            write!(f, ": {e}")?;
        } else {
            write!(f, ": |lhs| = {}, |rhs| = {}", self.lhs.len(), self.rhs.len())?;
            if self.counterexample {
                write!(f, ", exceeds K_2 N_3")?;
            }
            if !self.witnesses.is_empty() {
                write!(f, ", witnesses {}", self.witnesses.join(" "))?;
            }
        }
        Ok(())
    }
}

/// A corpus run: failures first, then the rest, each block ordered by case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub schema: u32,
    pub total: usize,
    pub mismatches: usize,
    pub errors: usize,
    pub counterexamples: usize,
    pub reports: Vec<Report>,
}

impl Aggregate {
    pub fn new(mut reports: Vec<Report>) -> Self {
        reports.sort_by(|a, b| a.passed().cmp(&b.passed()).then_with(|| a.case.cmp(&b.case)));
        Aggregate {
            schema: SCHEMA_VERSION,
            total: reports.len(),
            mismatches: reports.iter().filter(|r| r.error.is_none() && !r.equal).count(),
            errors: reports.iter().filter(|r| r.error.is_some()).count(),
            counterexamples: reports.iter().filter(|r| r.counterexample).count(),
            reports,
        }
    }

    /// 0 when everything verified, 1 on a mismatch, 2 when only input errors occurred.
    pub fn exit_code(&self) -> i32 {
        if self.mismatches > 0 {
            1
        } else if self.errors > 0 {
            2
        } else {
            0
        }
    }

    pub fn without_timing(self) -> Self {
        Aggregate { reports: self.reports.into_iter().map(Report::without_timing).collect(), ..self }
    }
}
