use std::fmt;

use crate::characterization::characterize::CharacterizationReport;
use crate::logic::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub formula_size: usize,
    pub max_word_len: usize,
    pub positives: usize,
    pub negatives: usize,
    pub max_expr_size: usize,
    pub violations: Vec<String>,
}

impl SizeReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SizeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size {}", self.formula_size)?;
        writeln!(f, "max positive length {}", self.max_word_len)?;
        writeln!(f, "positives {}", self.positives)?;
        writeln!(f, "negatives {}", self.negatives)?;
        writeln!(f, "max expression size {}", self.max_expr_size)?;
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        Ok(())
    }
}

/// Checks the length bound `ℓ_max(E⁺) ≤ |φ|` and records the sample sizes.
pub fn size_report(r: &CharacterizationReport, f: &Formula) -> SizeReport {
    let formula_size = f.size();
    let mut violations = Vec::new();
    if r.max_word_len > formula_size {
        violations.push(format!("longest positive has length {} > size {}", r.max_word_len, formula_size));
    }
    let counted = (r.sample.positives().count(), r.sample.negatives().count());
    if counted != (r.positives, r.negatives) {
        violations.push(format!("report counts {:?} disagree with the sample {:?}", (r.positives, r.negatives), counted));
    }
    SizeReport {
        formula_size,
        max_word_len: r.max_word_len,
        positives: r.positives,
        negatives: r.negatives,
        max_expr_size: r.max_expr_size,
        violations,
    }
}
