//! Scenario reports: pass/fail checks plus named result sections, rendered
//! as canonical JSON or as plain text.

use bcenter::suites::Check;
use serde_json::{json, Map, Value};

pub const REPORT_SCHEMA: &str = "bcenter.report/1";

pub struct Report {
    pub scenario: String,
    pub config: Value,
    pub checks: Vec<Check>,
    /// JSON sections, keyed by name.
    pub sections: Map<String, Value>,
    /// Human-readable lines for the same sections, in order.
    pub text: Vec<String>,
    pub conclusion: Option<String>,
}

impl Report {
    pub fn new(scenario: &str, config: Value) -> Report {
        Report {
            scenario: scenario.into(),
            config,
            checks: Vec::new(),
            sections: Map::new(),
            text: Vec::new(),
            conclusion: None,
        }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn flag(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }

    pub fn section(&mut self, name: &str, v: Value) {
        self.sections.insert(name.into(), v);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "scenario": self.scenario,
            "config": self.config,
            "checks": self.checks,
            "results": self.sections,
            "conclusion": self.conclusion,
            "passed": self.passed(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("bcenter {}", self.scenario));
        if let Some(m) = self.config.as_object() {
            let parts: Vec<String> = m
                .iter()
                .filter(|(_, v)| !v.is_null())
                .map(|(k, v)| format!("{k} = {}", v.as_str().map_or_else(|| v.to_string(), String::from)))
                .collect();
            if !parts.is_empty() {
                out.push_str(&format!(" ({})", parts.join(", ")));
            }
        }
        out.push('\n');
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("[{tag}] {}\n", c.name));
            } else {
                out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
            }
        }
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        if let Some(c) = &self.conclusion {
            out.push_str(&format!("conclusion: {c}\n"));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if self.checks.is_empty() {
            out.push_str("result: no checks selected\n");
        } else if failed == 0 {
            out.push_str(&format!("result: all {} checks passed\n", self.checks.len()));
        } else {
            out.push_str(&format!("result: {failed} of {} checks failed\n", self.checks.len()));
        }
        out
    }
}
