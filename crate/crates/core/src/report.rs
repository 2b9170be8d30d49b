//! Pass/fail reporting for the theorem-verification suites.

/// One verified claim.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Aggregated result of one verification suite.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: &'static str,
    pub lines: Vec<CheckLine>,
    /// Informational notes that accompany the checks (not pass/fail).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: &'static str) -> Self {
        Self {
            suite,
            lines: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.lines.push(CheckLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.lines.iter().filter(|l| l.pass).count()
    }

    pub fn fail_count(&self) -> usize {
        self.lines.len() - self.pass_count()
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
        self.notes.extend(other.notes);
    }
}
