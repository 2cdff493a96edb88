use rayon::prelude::*;

use cyclecover::instances::{gen_mean_instance, gen_random_local, gen_tri_config, gen_triangle_cycle, IntraRule, Seed};
use cyclecover::oracle::min_cycle_partition;
use cyclecover::solvers::{r_local_partition, two_local_partition, two_mean_partition, PipelineParams, SolveTrace};
use cyclecover::{verify_partition, ColourId, CyclePartition, EdgeColouring, OracleBudget, VerifyOptions};

use crate::config::{Check, ExperimentConfig, Family, SolverKind};
use crate::error::{write_file, CliError, CliResult};

/// One instance of a campaign. Empty optionals mean "not computed".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub palette: usize,
    pub cycles: Option<usize>,
    pub oracle_min: Option<usize>,
    pub valid: Option<bool>,
    pub error: Option<String>,
    pub trace: String,
}

impl Row {
    /// An error, a verifier rejection, or an oracle minimum above what the
    /// solver achieved or above two for the two-cycle solvers.
    pub fn failed(&self, solver: SolverKind) -> bool {
        let two = matches!(solver, SolverKind::TwoLocal | SolverKind::TwoMean);
        self.error.is_some()
            || self.valid == Some(false)
            || self.oracle_min.zip(self.cycles).is_some_and(|(o, s)| o > s)
            || (two && self.oracle_min.is_some_and(|o| o > 2))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub solver: SolverKind,
    pub rows: Vec<Row>,
}

impl ExperimentReport {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.failed(self.solver)).count()
    }

    pub fn max_cycles(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.cycles).max()
    }

    pub fn mean_cycles(&self) -> Option<f64> {
        let counts: Vec<usize> = self.rows.iter().filter_map(|r| r.cycles).collect();
        (!counts.is_empty()).then(|| counts.iter().sum::<usize>() as f64 / counts.len() as f64)
    }

    pub fn max_oracle_min(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.oracle_min).max()
    }

    pub fn footer(&self) -> String {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        format!(
            "# solver: {}\n# rows: {}\n# failures: {}\n# max_cycles: {}\n# mean_cycles: {}\n# max_oracle_min: {}\n",
            self.solver.name(),
            self.rows.len(),
            self.failures(),
            opt(self.max_cycles()),
            self.mean_cycles().map_or("-".to_string(), |m| format!("{m:.4}")),
            opt(self.max_oracle_min()),
        )
    }

    /// CSV rows followed by the summary footer.
    pub fn render(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index",
            "seed",
            "n",
            "palette",
            "cycles",
            "oracle_min",
            "valid",
            "error",
            "trace",
        ])?;
        let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
        for r in &self.rows {
            w.write_record([
                r.index.to_string(),
                r.seed.to_string(),
                r.n.to_string(),
                r.palette.to_string(),
                opt(r.cycles),
                opt(r.oracle_min),
                r.valid.map_or(String::new(), |v| v.to_string()),
                r.error.clone().unwrap_or_default(),
                r.trace.clone(),
            ])?;
        }
        let body = w
            .into_inner()
            .map_err(|e| CliError::io("report buffer", e.into_error()))?;
        let mut text = String::from_utf8(body).expect("csv output is UTF-8");
        text.push_str(&self.footer());
        Ok(text)
    }
}

fn sweep_triples(lo: usize, hi: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            for c in lo..=hi {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn pick(x: u64, [lo, hi]: [usize; 2]) -> usize {
    lo + (x % (hi - lo + 1) as u64) as usize
}

fn make_instance(cfg: &ExperimentConfig, index: usize, seed: Seed) -> cyclecover::Result<EdgeColouring> {
    match cfg.family {
        Family::RandomLocal => {
            let n = pick(seed.0, cfg.n_range);
            let s = pick(seed.0 >> 32, cfg.palette_range());
            gen_random_local(n, cfg.r, s, seed.child(0))
        }
        Family::TriSweep => {
            let triple = sweep_triples(cfg.n_range[0], cfg.n_range[1])[index];
            gen_tri_config(triple, IntraRule::LowColour).map(|(c, _)| c)
        }
        Family::Mean => gen_mean_instance(pick(seed.0, cfg.n_range), seed.child(0)),
        Family::TriangleCycle => {
            let k = cfg.n_range[0] + index % (cfg.n_range[1] - cfg.n_range[0] + 1);
            gen_triangle_cycle(k, ColourId(0), ColourId(1)).map(|(c, _)| c)
        }
    }
}

pub fn solve_with(
    solver: SolverKind,
    c: &EdgeColouring,
    r: usize,
    budget: &OracleBudget,
) -> cyclecover::Result<(CyclePartition, SolveTrace)> {
    match solver {
        SolverKind::TwoLocal => two_local_partition(c, budget),
        SolverKind::TwoMean => two_mean_partition(c, budget),
        SolverKind::RLocal => r_local_partition(c, r, &PipelineParams::default(), budget),
    }
}

pub fn verify_options(solver: SolverKind) -> VerifyOptions {
    match solver {
        SolverKind::TwoLocal | SolverKind::TwoMean => VerifyOptions::two_distinct(),
        SolverKind::RLocal => VerifyOptions::cover(),
    }
}

fn run_row(cfg: &ExperimentConfig, index: usize, budget: &OracleBudget) -> Row {
    let seed = Seed(cfg.seed).child(index as u64);
    let mut row = Row {
        index,
        seed: seed.0,
        n: 0,
        palette: 0,
        cycles: None,
        oracle_min: None,
        valid: None,
        error: None,
        trace: String::new(),
    };
    let c = match make_instance(cfg, index, seed) {
        Ok(c) => c,
        Err(e) => {
            row.error = Some(format!("generation: {e}"));
            return row;
        }
    };
    row.n = c.n();
    row.palette = c.palette().len();
    let solver = cfg.solver();
    match solve_with(solver, &c, cfg.r, budget) {
        Ok((p, trace)) => {
            row.cycles = Some(p.nonempty_count());
            row.trace = trace.summary();
            if cfg.has(Check::Verifier) {
                row.valid = Some(verify_partition(&c, &p, verify_options(solver)).valid);
            }
        }
        Err(e) => row.error = Some(format!("solver: {e}")),
    }
    if cfg.has(Check::Oracle) {
        match min_cycle_partition(&c, budget) {
            Ok((m, _)) => row.oracle_min = Some(m),
            Err(e) => row.error = Some(format!("oracle: {e}")),
        }
    }
    row
}

/// Runs the campaign, rows in instance order regardless of scheduling.
pub fn collect_report(cfg: &ExperimentConfig, budget: &OracleBudget) -> CliResult<ExperimentReport> {
    cfg.validate(budget)?;
    let rows = match cfg.family {
        Family::TriSweep => sweep_triples(cfg.n_range[0], cfg.n_range[1]).len(),
        _ => cfg.count,
    };
    let rows: Vec<Row> = (0..rows).into_par_iter().map(|i| run_row(cfg, i, budget)).collect();
    Ok(ExperimentReport {
        solver: cfg.solver(),
        rows,
    })
}

/// Runs the campaign and writes the report to `cfg.output`.
pub fn run_experiment(cfg: &ExperimentConfig, budget: &OracleBudget) -> CliResult<ExperimentReport> {
    let report = collect_report(cfg, budget)?;
    write_file(&cfg.output, &report.render()?)?;
    Ok(report)
}
