use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameter {
    pub key: String,
    pub value: String,
}

/// Outcome of one named check. Tolerance checks carry `residual`, exact
/// checks carry `exact`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn residual(name: &str, residual: f64, tol: f64) -> Self {
        Check {
            name: name.to_string(),
            passed: residual < tol,
            residual: Some(residual),
            exact: None,
            detail: None,
        }
    }

    pub fn exact(name: &str, ok: bool) -> Self {
        Check {
            name: name.to_string(),
            passed: ok,
            residual: None,
            exact: Some(ok),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// `residual=…` or `exact=…`.
    pub fn measure(&self) -> String {
        match (self.residual, self.exact) {
            (Some(r), _) => format!("residual={r:.3e}"),
            (None, Some(e)) => format!("exact={e}"),
            _ => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<Parameter>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: Vec::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.push(Parameter {
            key: key.to_string(),
            value: value.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}
