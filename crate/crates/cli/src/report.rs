//! Run reports, one JSON object per command.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

impl Input {
    pub fn new(path: &str, bytes: &[u8]) -> Self {
        Input { path: path.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

/// A measured value held against its bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: usize,
    pub bound: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<Input>,
    pub outputs: Vec<String>,
    pub measured: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
    /// `yes`, `no` or `error`.
    pub result: String,
    pub exit: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub wall_ms: f64,
}

impl RunReport {
    pub fn measure(&mut self, name: &str, value: usize) {
        self.measured.insert(name.to_string(), value);
    }

    /// Record `measured <= bound`.
    pub fn check(&mut self, name: &str, measured: usize, bound: usize) {
        self.checks.push(Check { name: name.to_string(), measured, bound, pass: measured <= bound });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command.join(" "));
        for input in &self.inputs {
            let _ = writeln!(out, "input:   {} sha256:{}", input.path, input.sha256);
        }
        for output in &self.outputs {
            let _ = writeln!(out, "output:  {output}");
        }
        for (name, value) in &self.measured {
            let _ = writeln!(out, "{name} = {value}");
        }
        for c in &self.checks {
            let verdict = if c.pass { "ok" } else { "FAILED" };
            let _ = writeln!(out, "{}: {} <= {} {verdict}", c.name, c.measured, c.bound);
        }
        if let Some(m) = &self.message {
            let _ = writeln!(out, "note: {m}");
        }
        let _ = writeln!(out, "result: {} (exit {}, {:.2} ms)", self.result, self.exit, self.wall_ms);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256() {
        let i = Input::new("x", b"abc");
        assert_eq!(i.sha256, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn checks() {
        let mut r = RunReport::default();
        r.check("width", 2, 2);
        assert!(r.all_pass());
        r.check("classes", 5, 4);
        assert!(!r.all_pass());
        assert!(r.to_text().contains("classes: 5 <= 4 FAILED"));
        assert!(r.to_json_line().contains("\"pass\":false"));
    }
}
