use serde::Serialize;
use serde_json::Value;

use crate::config::{GridPoint, Mode, RunConfig, Suite};

pub const SCHEMA_VERSION: u32 = 1;

/// Witness lists are cut to this many entries; `count` keeps the full number.
pub const WITNESS_CAP: usize = 5;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witnesses {
    pub count: usize,
    pub shown: Vec<String>,
}

impl Witnesses {
    pub fn new(all: Vec<String>) -> Witnesses {
        let count = all.len();
        Witnesses {
            count,
            shown: all.into_iter().take(WITNESS_CAP).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

/// The parts of [`RunConfig`] that influence results. Paths are left out so that
/// runs against different cache or output locations stay byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub grid: Vec<GridPoint>,
    pub dmax: Option<usize>,
    pub mode: Mode,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub word_ceiling: u128,
}

impl ConfigEcho {
    pub fn of(c: &RunConfig) -> ConfigEcho {
        ConfigEcho {
            grid: c.grid.clone(),
            dmax: c.dmax,
            mode: c.mode,
            suites: c.suites.iter().copied().collect(),
            seed: c.seed,
            word_ceiling: c.ceiling,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub results: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl PointReport {
    pub fn suite(&self, s: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|x| x.suite == s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: Tool,
    pub config: ConfigEcho,
    pub passed: bool,
    pub points: Vec<PointReport>,
}

impl Report {
    pub fn point(&self, r: usize, s: usize, n: usize) -> Option<&PointReport> {
        self.points.iter().find(|p| (p.r, p.s, p.n) == (r, s, n))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per suite and grid point.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<10} {:<14} {:<8} {}\n",
            "point", "suite", "status", "detail"
        ));
        for p in &self.points {
            let tag = format!("({},{},{})", p.r, p.s, p.n);
            for s in &p.suites {
                let status = match s.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skipped",
                };
                let suite = serde_json::to_value(s.suite).unwrap();
                let detail = s.reason.clone().unwrap_or_else(|| summary(&s.results));
                out.push_str(&format!(
                    "{:<10} {:<14} {:<8} {}\n",
                    tag,
                    suite.as_str().unwrap_or(""),
                    status,
                    detail
                ));
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed { "pass" } else { "FAIL" }
        ));
        out
    }
}

fn summary(v: &Value) -> String {
    let Some(m) = v.as_object() else {
        return String::new();
    };
    let mut parts = Vec::new();
    for (k, x) in m {
        match x {
            Value::Bool(b) => parts.push(format!("{k}={b}")),
            Value::Number(n) => parts.push(format!("{k}={n}")),
            Value::Array(a) if a.iter().all(|e| e.is_number()) && a.len() <= 8 => {
                let xs: Vec<String> = a.iter().map(|e| e.to_string()).collect();
                parts.push(format!("{k}=[{}]", xs.join(",")));
            }
            _ => {}
        }
    }
    parts.join(" ")
}
