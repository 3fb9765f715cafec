//! Pass/fail records produced by the verifiers.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// number of individual identities evaluated
    pub evaluated: usize,
    /// first counterexample or extra information
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, Default)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn ok(&mut self, name: &str, evaluated: usize) {
        self.push(Check::pass(name, evaluated));
    }

    pub fn fail(&mut self, name: &str, detail: impl Into<String>) {
        self.push(Check::fail(name, detail));
    }

    pub fn record(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.push(Check {
            name: name.to_string(),
            passed,
            evaluated: 1,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl Check {
    pub fn pass(name: &str, evaluated: usize) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            evaluated,
            detail: String::new(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed: false,
            evaluated: 0,
            detail: detail.into(),
        }
    }

    /// Runs `f` over items; stops at the first `Err(detail)`.
    pub fn over<T>(name: &str, items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Result<(), String>) -> Self {
        let mut n = 0;
        for it in items {
            if let Err(d) = f(it) {
                return Check {
                    name: name.to_string(),
                    passed: false,
                    evaluated: n + 1,
                    detail: d,
                };
            }
            n += 1;
        }
        Check::pass(name, n)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {} ({})", if c.passed { "ok" } else { "FAIL" }, c.name, c.evaluated)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
