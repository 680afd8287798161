//! Structured outcomes of residual checks.

use serde::Serialize;

use crate::algebra::AlgebraElement;

/// One reduced residue, located by an index tuple or a word.
#[derive(Debug, Clone)]
pub struct Residue {
    pub location: String,
    pub value: AlgebraElement,
}

/// Result of checking one identity: `passed` exactly when every recorded
/// residue is zero.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: String,
    pub residues: Vec<Residue>,
    pub checked: usize,
    pub passed: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            residues: Vec::new(),
            checked: 0,
            passed: true,
            notes: Vec::new(),
        }
    }

    /// Records a residue; zero residues only bump the counter.
    pub fn push(&mut self, location: impl Into<String>, value: AlgebraElement) {
        self.checked += 1;
        if !value.is_zero() {
            self.passed = false;
            self.residues.push(Residue {
                location: location.into(),
                value,
            });
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn nonzero(&self) -> usize {
        self.residues.len()
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            identity: self.identity.clone(),
            checked: self.checked,
            residue_count: self.residues.len(),
            passed: self.passed,
            nonzero_residues: self
                .residues
                .iter()
                .map(|r| ResidueJson {
                    location: r.location.clone(),
                    residue: r.value.to_string(),
                })
                .collect(),
            notes: self.notes.clone(),
        }
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} nonzero)",
            self.identity,
            if self.passed { "zero" } else { "NONZERO" },
            self.checked,
            self.residues.len()
        )?;
        for r in self.residues.iter().take(8) {
            write!(f, "\n    [{}] {}", r.location, r.value)?;
        }
        if self.residues.len() > 8 {
            write!(f, "\n    ... {} more", self.residues.len() - 8)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidueJson {
    pub location: String,
    pub residue: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub identity: String,
    pub checked: usize,
    pub residue_count: usize,
    pub passed: bool,
    pub nonzero_residues: Vec<ResidueJson>,
    pub notes: Vec<String>,
}
