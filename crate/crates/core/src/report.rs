//! Pass/fail reports produced by the verification routines.

use std::fmt;

use serde_json::{json, Value};

use crate::rewrite::Morphism;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
    pub residual: Option<Morphism>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, detail, residual: None });
    }

    /// Records `lhs == rhs`, keeping `lhs - rhs` on failure.
    pub fn equal(&mut self, name: impl Into<String>, lhs: &Morphism, rhs: &Morphism) {
        let ok = lhs == rhs;
        let residual = if ok || lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() { None } else { Some(lhs.sub(rhs)) };
        let detail = (!ok).then(|| match &residual {
            Some(r) => format!("residual has {} terms", r.num_terms()),
            None => format!("shapes differ: {} -> {} vs {} -> {}", lhs.dom(), lhs.cod(), rhs.dom(), rhs.cod()),
        });
        self.checks.push(Check { name: name.into(), passed: ok, detail, residual });
    }

    pub fn zero(&mut self, name: impl Into<String>, m: &Morphism) {
        let ok = m.is_zero();
        self.checks.push(Check {
            name: name.into(),
            passed: ok,
            detail: (!ok).then(|| format!("{} nonzero terms", m.num_terms())),
            residual: (!ok).then(|| m.clone()),
        });
    }

    pub fn merge(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.title, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json_value(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({"name": c.name, "passed": c.passed});
                if let Some(d) = &c.detail {
                    v["detail"] = json!(d);
                }
                if let Some(r) = &c.residual {
                    v["residual"] = r.to_json_value();
                }
                v
            })
            .collect();
        json!({"title": self.title, "passed": self.passed(), "checks": checks})
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
