//! Batch driver: runs verification suites over a grid of `(r, s, n)` and assembles
//! a deterministic JSON report.

pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use qqueer::qfield::P61;
use qqueer::Error;

pub use config::{ConfigError, GridPoint, Mode, RunConfig, Suite};
pub use report::{PointReport, Report, Status, SuiteReport};

/// Two evaluation points for modular mode, drawn from the seed.
pub fn evaluation_points(seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..2).map(|_| rng.gen_range(2..P61 - 1)).collect()
}

fn run_suite(pt: &suites::Point, s: Suite) -> Result<(bool, Value), Error> {
    match s {
        Suite::Matrices => suites::matrices(pt),
        Suite::Presentations => suites::presentations(pt),
        Suite::Dims => suites::dims(pt),
        Suite::Actions => suites::actions(pt),
        Suite::Invariants => suites::invariants(pt),
        Suite::Fft => suites::fft(pt),
        Suite::Howe => suites::howe(pt),
    }
}

pub fn run_point(cfg: &RunConfig, p: GridPoint, q0: &[u64]) -> Result<PointReport, Error> {
    let pt = suites::Point::new(p, cfg, q0)?;
    let mut out = Vec::new();
    for s in Suite::ALL {
        if !cfg.suites.contains(&s) {
            continue;
        }
        let start = Instant::now();
        let (status, reason, results) = match run_suite(&pt, s) {
            Ok((true, v)) => (Status::Pass, None, v),
            Ok((false, v)) => (Status::Fail, None, v),
            Err(e @ Error::ResourceLimit { .. }) => {
                (Status::Skipped, Some(e.to_string()), Value::Null)
            }
            Err(e) => (Status::Fail, Some(e.to_string()), Value::Null),
        };
        let elapsed_ms = cfg.timings.then(|| start.elapsed().as_millis() as u64);
        out.push(SuiteReport {
            suite: s,
            status,
            reason,
            elapsed_ms,
            results,
        });
    }
    let passed = out.iter().all(|s| s.status == Status::Pass);
    Ok(PointReport {
        r: p.r,
        s: p.s,
        n: p.n,
        passed,
        suites: out,
    })
}

/// Runs the configured suites in dependency order at every grid point.
pub fn run(cfg: &RunConfig) -> Result<Report, anyhow::Error> {
    cfg.validate()?;
    let q0 = evaluation_points(cfg.seed);
    let mut points = Vec::new();
    for &p in &cfg.grid {
        points.push(run_point(cfg, p, &q0)?);
    }
    Ok(Report {
        schema_version: report::SCHEMA_VERSION,
        tool: report::Tool {
            name: "qqueer",
            version: env!("CARGO_PKG_VERSION"),
        },
        config: report::ConfigEcho::of(cfg),
        passed: points.iter().all(|p| p.passed),
        points,
    })
}

/// Reduced relation bases of `A_{r,n}`, `Ā_{s,n}` and the cross relations, one per line.
pub fn relation_dump(r: usize, s: usize, n: usize) -> String {
    let rs = qqueer::relset::RelationSet::new(r, s, n);
    let mut out = String::new();
    for (name, rels) in [("a", &rs.a), ("abar", &rs.abar), ("cross", &rs.cross)] {
        out.push_str(&format!("# {name} {}\n", rels.len()));
        out.push_str(&qqueer::relset::dump(rels));
    }
    out
}
