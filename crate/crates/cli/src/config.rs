use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use cyclecover::OracleBudget;

use crate::error::{read_file, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Random r-local colourings of `K_n`.
    RandomLocal,
    /// Every three-part 2-local configuration with part sizes in `n_range`.
    TriSweep,
    /// Colourings of mean locality at most 2 that are not 2-local.
    Mean,
    /// Planted monochromatic triangle cycles, `k` drawn from `n_range`.
    TriangleCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    TwoLocal,
    TwoMean,
    RLocal,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::TwoLocal => "two-local",
            SolverKind::TwoMean => "two-mean",
            SolverKind::RLocal => "r-local",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Exact minimum cycle partition for every instance.
    Oracle,
    /// Independent partition verification.
    Verifier,
}

/// A seeded campaign, read from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub family: Family,
    /// Rows for the random families; the sweep always has one row per size triple.
    pub count: usize,
    /// Inclusive range of `n` (part sizes for the sweep, `k` for triangle cycles).
    pub n_range: [usize; 2],
    #[serde(default = "default_r")]
    pub r: usize,
    /// Inclusive palette-size range for random colourings; defaults to `[r, 2r + 1]`.
    #[serde(default)]
    pub palette: Option<[usize; 2]>,
    pub seed: u64,
    /// Defaults by family: two-local for 2-local families, two-mean for
    /// mean instances, r-local otherwise.
    #[serde(default)]
    pub solver: Option<SolverKind>,
    #[serde(default)]
    pub checks: Vec<Check>,
    pub output: PathBuf,
}

fn default_r() -> usize {
    2
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    /// Reads a config file; a relative `output` is resolved against the file's directory.
    pub fn load(path: &Path) -> CliResult<Self> {
        let mut cfg = Self::from_toml(&read_file(path)?)?;
        if cfg.output.is_relative() {
            if let Some(dir) = path.parent() {
                cfg.output = dir.join(&cfg.output);
            }
        }
        Ok(cfg)
    }

    pub fn has(&self, check: Check) -> bool {
        self.checks.contains(&check)
    }

    pub fn palette_range(&self) -> [usize; 2] {
        self.palette.unwrap_or([self.r, 2 * self.r + 1])
    }

    pub fn solver(&self) -> SolverKind {
        self.solver.unwrap_or(match self.family {
            Family::RandomLocal if self.r == 2 => SolverKind::TwoLocal,
            Family::TriSweep => SolverKind::TwoLocal,
            Family::Mean => SolverKind::TwoMean,
            Family::RandomLocal | Family::TriangleCycle => SolverKind::RLocal,
        })
    }

    /// Largest vertex count any row can have.
    pub fn max_vertices(&self) -> usize {
        match self.family {
            Family::RandomLocal | Family::Mean => self.n_range[1],
            Family::TriSweep => 3 * self.n_range[1],
            Family::TriangleCycle => 2 * self.n_range[1],
        }
    }

    pub fn validate(&self, budget: &OracleBudget) -> CliResult<()> {
        let bad = |msg: String| Err(CliError::Config(msg));
        if self.count == 0 {
            return bad("count must be at least 1".into());
        }
        let [lo, hi] = self.n_range;
        if lo > hi {
            return bad(format!("empty n_range [{lo}, {hi}]"));
        }
        if self.r == 0 {
            return bad("r must be at least 1".into());
        }
        let [plo, phi] = self.palette_range();
        if plo == 0 || plo > phi {
            return bad(format!("bad palette range [{plo}, {phi}]"));
        }
        match self.family {
            Family::TriSweep if lo == 0 => return bad("sweep part sizes start at 1".into()),
            Family::Mean if lo < 4 => return bad("mean instances need n >= 4".into()),
            Family::TriangleCycle if lo < 3 => return bad("triangle cycles need k >= 3".into()),
            _ => {}
        }
        if self.has(Check::Oracle) && self.max_vertices() > budget.max_n {
            return bad(format!(
                "oracle check enabled but instances reach {} vertices, budget is {}",
                self.max_vertices(),
                budget.max_n
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
family = "random-local"
count = 10
n_range = [4, 8]
seed = 7
checks = ["oracle", "verifier"]
output = "out.csv"
"#;

    #[test]
    fn parses_with_defaults() {
        let cfg = ExperimentConfig::from_toml(SAMPLE).unwrap();
        assert_eq!(cfg.r, 2);
        assert_eq!(cfg.palette_range(), [2, 5]);
        assert_eq!(cfg.solver(), SolverKind::TwoLocal);
        assert!(cfg.has(Check::Oracle));
        cfg.validate(&OracleBudget::default()).unwrap();
    }

    #[test]
    fn rejects_bad_configs() {
        let b = OracleBudget::default();
        let mut cfg = ExperimentConfig::from_toml(SAMPLE).unwrap();
        cfg.count = 0;
        assert!(matches!(cfg.validate(&b), Err(CliError::Config(_))));
        cfg.count = 1;
        cfg.n_range = [4, 20];
        assert!(matches!(cfg.validate(&b), Err(CliError::Config(_))));
        assert!(ExperimentConfig::from_toml("family = \"nope\"").is_err());
        assert!(ExperimentConfig::from_toml(&format!("{SAMPLE}\nextra = 1")).is_err());
    }
}
