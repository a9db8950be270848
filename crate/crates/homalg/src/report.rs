//! Structured verdicts for axiom checks.
//!
//! A failing check carries a witness: the basis tuple on which the two
//! sides of the identity were evaluated and the two resulting vectors, so
//! every failure can be reproduced by a one-line manual computation.

use crate::chain::SparseVec;
use crate::scalar::format_scalar;

#[derive(Clone, Debug)]
pub struct Witness {
    /// Input basis tuple, one index per tensor factor of the domain.
    pub basis_tuple: Vec<usize>,
    /// Left-hand side evaluated on that tuple (sparse coefficients).
    pub lhs: SparseVec,
    /// Right-hand side evaluated on that tuple.
    pub rhs: SparseVec,
}

impl Witness {
    fn render_vec(v: &SparseVec) -> String {
        if v.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = v
            .iter()
            .map(|(i, x)| format!("{i}:{}", format_scalar(x)))
            .collect();
        format!("[{}]", parts.join(" "))
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tuple: Vec<String> = self.basis_tuple.iter().map(|i| i.to_string()).collect();
        write!(
            f,
            "at ({}) lhs={} rhs={}",
            tuple.join(","),
            Witness::render_vec(&self.lhs),
            Witness::render_vec(&self.rhs)
        )
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: String,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn passed(axiom: &str) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            verdict: true,
            witness: None,
        }
    }

    pub fn failed(axiom: &str, witness: Witness) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            verdict: false,
            witness: Some(witness),
        }
    }
}

/// Outcome of checking one structure: a list of per-axiom verdicts.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    /// Merge another report, prefixing its axiom ids.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.checks {
            c.axiom = format!("{prefix}.{}", c.axiom);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.verdict)
    }

    /// Verdict of one named axiom (true when absent counts as failure).
    pub fn axiom_passed(&self, axiom: &str) -> bool {
        self.checks.iter().any(|c| c.axiom == axiom && c.verdict)
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "check {}", self.subject)?;
        for c in &self.checks {
            let verdict = if c.verdict { "pass" } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "  {:<28} {} {}", c.axiom, verdict, w)?,
                None => writeln!(f, "  {:<28} {}", c.axiom, verdict)?,
            }
        }
        write!(
            f,
            "  overall: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}
