use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use qqueer::graded::DEFAULT_WORD_CEILING;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Matrices,
    Presentations,
    Dims,
    Actions,
    Invariants,
    Fft,
    Howe,
}

impl Suite {
    /// Dependency order.
    pub const ALL: [Suite; 7] = [
        Suite::Matrices,
        Suite::Presentations,
        Suite::Dims,
        Suite::Actions,
        Suite::Invariants,
        Suite::Fft,
        Suite::Howe,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Modular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GridPoint {
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl GridPoint {
    pub fn new(r: usize, s: usize, n: usize) -> GridPoint {
        GridPoint { r, s, n }
    }
}

/// `(r, s, n)` covering both `n >= max(r, s)` and `n < max(r, s)`.
pub const DEFAULT_GRID: [(usize, usize, usize); 6] = [
    (1, 1, 1),
    (1, 1, 2),
    (2, 1, 1),
    (1, 2, 1),
    (2, 2, 1),
    (2, 2, 2),
];

pub const DEFAULT_SEED: u64 = 1;
pub const SIZE_BOUND: usize = 3;
pub const DEGREE_BOUND: usize = 4;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub grid: Vec<GridPoint>,
    /// Overrides every per-suite degree bound when set.
    pub dmax: Option<usize>,
    pub mode: Mode,
    pub suites: BTreeSet<Suite>,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
    pub ceiling: u128,
    pub timings: bool,
    /// Where `verify-actions` writes operator matrices as triplets.
    pub export_dir: Option<PathBuf>,
    pub size_bound: usize,
    pub degree_bound: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid: DEFAULT_GRID
                .iter()
                .map(|&(r, s, n)| GridPoint::new(r, s, n))
                .collect(),
            dmax: None,
            mode: Mode::Exact,
            suites: Suite::ALL.into_iter().collect(),
            cache_dir: None,
            seed: DEFAULT_SEED,
            ceiling: DEFAULT_WORD_CEILING,
            timings: false,
            export_dir: None,
            size_bound: SIZE_BOUND,
            degree_bound: DEGREE_BOUND,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("no suites selected")]
    NoSuites,
    #[error("no grid points selected")]
    NoGrid,
    #[error("(r, s, n) = ({r}, {s}, {n}) outside 1..={bound}")]
    Size {
        r: usize,
        s: usize,
        n: usize,
        bound: usize,
    },
    #[error("dmax = {dmax} above the bound {bound}")]
    Degree { dmax: usize, bound: usize },
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        if self.grid.is_empty() {
            return Err(ConfigError::NoGrid);
        }
        for p in &self.grid {
            let ok = |x: usize| (1..=self.size_bound).contains(&x);
            if !(ok(p.r) && ok(p.s) && ok(p.n)) {
                return Err(ConfigError::Size {
                    r: p.r,
                    s: p.s,
                    n: p.n,
                    bound: self.size_bound,
                });
            }
        }
        if let Some(d) = self.dmax {
            if d > self.degree_bound {
                return Err(ConfigError::Degree {
                    dmax: d,
                    bound: self.degree_bound,
                });
            }
        }
        Ok(())
    }

    /// Total degree for dimension tables and flatness.
    pub fn dims_degree(&self) -> usize {
        self.dmax.unwrap_or(4)
    }

    /// Total degree for relation invariance under the actions.
    pub fn actions_degree(&self) -> usize {
        self.dmax.unwrap_or(3)
    }

    /// Diagonal degree for the invariant-theory check: 3 when `r = s = 1`, else 2.
    pub fn fft_degree(&self, p: GridPoint) -> usize {
        self.dmax
            .unwrap_or(if p.r == 1 && p.s == 1 { 3 } else { 2 })
    }

    /// Longest words for the two evaluations of `Δ̃`: 3 when `r = s = 1`, else 2.
    pub fn gen_delta_length(&self, p: GridPoint) -> usize {
        if p.r == 1 && p.s == 1 {
            3
        } else {
            2
        }
    }

    pub fn injectivity_degree(&self) -> usize {
        self.dmax.unwrap_or(2)
    }
}
