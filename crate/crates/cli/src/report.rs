use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub command: String,
    pub braids: Vec<String>,
    pub strands: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub modulus: u64,
    pub coloring: Vec<u64>,
    pub angles: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringEntry {
    pub r: u64,
    pub total: String,
    pub condition_o: String,
    pub nondegenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Output of every subcommand. Large integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Input,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander_poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep_count: Option<String>,
    #[serde(default)]
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes_skipped: Option<String>,
    #[serde(default)]
    pub colorings: Vec<ColoringEntry>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, braids: Vec<String>, strands: usize) -> Self {
        Report {
            input: Input { command: command.to_string(), braids, strands },
            determinant: None,
            alexander_poly: None,
            rep_count: None,
            classes: vec![],
            classes_skipped: None,
            colorings: vec![],
            checks: vec![],
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "command      {}", self.input.command)?;
        writeln!(s, "strands      {}", self.input.strands)?;
        for (i, b) in self.input.braids.iter().enumerate() {
            let b = if b.is_empty() { "(identity)" } else { b.as_str() };
            writeln!(s, "braid {}      {}", i + 1, b)?;
        }
        if let Some(d) = &self.determinant {
            writeln!(s, "determinant  {d}")?;
        }
        if let Some(p) = &self.alexander_poly {
            writeln!(s, "alexander    {p}")?;
        }
        if let Some(r) = &self.rep_count {
            writeln!(s, "reps         {r}")?;
        }
        if let Some(why) = &self.classes_skipped {
            writeln!(s, "classes      skipped: {why}")?;
        }
        if !self.classes.is_empty() {
            writeln!(s, "\n{:>4}  {:>8}  {:<24}  angles (mod 2m)", "#", "m", "coloring")?;
            for (i, c) in self.classes.iter().enumerate() {
                writeln!(s, "{:>4}  {:>8}  {:<24}  {:?}", i + 1, c.modulus, format!("{:?}", c.coloring), c.angles)?;
            }
        }
        if !self.colorings.is_empty() {
            writeln!(s, "\n{:>4}  {:>12}  {:>12}  nondegenerate", "r", "total", "cond. O")?;
            for c in &self.colorings {
                writeln!(s, "{:>4}  {:>12}  {:>12}  {}", c.r, c.total, c.condition_o, c.nondegenerate)?;
            }
        }
        if !self.checks.is_empty() {
            writeln!(s)?;
            for c in &self.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(s, "[{tag}] {}: {}", c.name, c.detail)?;
            }
        }
        f.write_str(&s)
    }
}
