use serde::Serialize;

/// A named boolean outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Ordered list of checks; the unit every verification routine reports in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckList {
    pub checks: Vec<Check>,
}

impl CheckList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn extend(&mut self, prefix: &str, other: CheckList) {
        for c in other.checks {
            self.record(format!("{prefix}{}", c.name), c.passed);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
