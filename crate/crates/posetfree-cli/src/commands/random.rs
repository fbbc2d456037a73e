use posetfree::random::{
    aggregate, diamond_lower_bound_run, run_trial, sample as draw, trial_seed, union_bound_pi, CellStats,
    DiamondReport, EstimatorMode, ExperimentConfig, PGrid, PiReport, TrialResult,
};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::{DiamondArgs, ExperimentArgs, Format, PiArgs, SampleArgs};
use crate::formats::{read_text, resolve_pattern, write_family};
use crate::json::{csv_field, csv_real};
use crate::{json, CliError, CliResult, Ctx};

/// The experiment config file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentFile {
    pub pattern: String,
    pub n: Vec<u32>,
    /// Absolute probabilities.
    #[serde(default)]
    pub p: Option<Vec<f64>>,
    /// Coefficients `c` of `p = c / n`.
    #[serde(default)]
    pub c: Option<Vec<f64>>,
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_mode")]
    pub mode: String,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
}

fn default_mode() -> String {
    String::from("exact")
}

fn default_epsilon() -> f64 {
    0.1
}

impl ExperimentFile {
    pub fn into_config(self) -> CliResult<ExperimentConfig> {
        let grid = match (self.p, self.c) {
            (Some(p), None) => PGrid::Absolute(p),
            (None, Some(c)) => PGrid::OverN(c),
            _ => return Err(CliError::Domain(String::from("config needs exactly one of `p` and `c`"))),
        };
        let pattern = resolve_pattern(&self.pattern)?;
        let config = ExperimentConfig {
            pattern: pattern.poset,
            pattern_name: self.pattern,
            ns: self.n,
            grid,
            trials: self.trials,
            epsilon: self.epsilon,
            seed: self.seed,
            mode: EstimatorMode::parse(&self.mode)?,
        };
        config.validate()?;
        Ok(config)
    }
}

/// Header of the experiment CSV; `schema/random.md` documents each column.
pub const EXPERIMENT_HEADER: &str = "pattern,mode,n,p,trials,mean,min,max,upper_mean,certified,reference,error";

/// All cells, trials run on the pool and folded in trial order.
pub fn run_experiment(ctx: &Ctx, config: &ExperimentConfig) -> CliResult<Vec<CellStats>> {
    let cells = config.cells().len();
    let jobs: Vec<(usize, usize)> = (0..cells).flat_map(|c| (0..config.trials).map(move |t| (c, t))).collect();
    let results: Vec<posetfree::Result<TrialResult>> =
        ctx.pool(|| jobs.par_iter().map(|&(c, t)| run_trial(config, c, t)).collect())?;
    let mut it = results.into_iter();
    Ok((0..cells)
        .map(|c| {
            let rs: posetfree::Result<Vec<TrialResult>> = it.by_ref().take(config.trials).collect();
            aggregate(config, c, &rs)
        })
        .collect())
}

fn cell_csv(config: &ExperimentConfig, s: &CellStats) -> String {
    [
        csv_field(&config.pattern_name),
        config.mode.as_str().to_string(),
        s.n.to_string(),
        csv_real(s.p),
        s.trials.to_string(),
        csv_real(s.mean),
        csv_real(s.min),
        csv_real(s.max),
        csv_real(s.upper_mean),
        s.certified.to_string(),
        s.reference.map(csv_real).unwrap_or_default(),
        s.error.as_deref().map(csv_field).unwrap_or_default(),
    ]
    .join(",")
}

fn cell_json(config: &ExperimentConfig, s: &CellStats) -> Value {
    json!({
        "pattern": config.pattern_name,
        "mode": config.mode.as_str(),
        "n": s.n,
        "p": s.p,
        "trials": s.trials,
        "mean": json::real(s.mean),
        "min": json::real(s.min),
        "max": json::real(s.max),
        "upper_mean": json::real(s.upper_mean),
        "certified": s.certified,
        "reference": s.reference.map(json::real),
        "error": s.error,
    })
}

pub fn experiment(ctx: &Ctx, a: &ExperimentArgs) -> CliResult<String> {
    let format = ctx.format(&[Format::Csv, Format::Json], Format::Csv)?;
    let file: ExperimentFile = serde_json::from_str(&read_text(&a.config)?)
        .map_err(|e| CliError::Domain(format!("bad experiment config: {e}")))?;
    let config = file.into_config()?;
    let stats = run_experiment(ctx, &config)?;
    Ok(match format {
        Format::Json => json::pretty(&Value::Array(stats.iter().map(|s| cell_json(&config, s)).collect())),
        _ => {
            let mut out = format!("{EXPERIMENT_HEADER}\n");
            for s in &stats {
                out.push_str(&cell_csv(&config, s));
                out.push('\n');
            }
            out
        }
    })
}

pub const DIAMOND_HEADER: &str = "trial,seed,n,p,sampled,copies,removed,size,target,ratio,certified";

/// Trial `i` uses `trial_seed(seed, 0, i)`.
pub fn diamond_trials(ctx: &Ctx, n: u32, p: f64, seed: u64, trials: usize) -> CliResult<Vec<DiamondReport>> {
    let reports: posetfree::Result<Vec<DiamondReport>> = ctx.pool(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| diamond_lower_bound_run(n, p, trial_seed(seed, 0, i as u64)))
            .collect()
    })?;
    Ok(reports?)
}

pub fn diamond(ctx: &Ctx, a: &DiamondArgs) -> CliResult<String> {
    let format = ctx.format(&[Format::Csv, Format::Json], Format::Csv)?;
    if a.trials == 0 {
        return Err(CliError::Usage(String::from("--trials must be at least 1")));
    }
    let reports = diamond_trials(ctx, a.n, a.p, a.seed, a.trials)?;
    let ratio = |r: &DiamondReport| if r.target > 0.0 { r.family.len() as f64 / r.target } else { f64::NAN };
    Ok(match format {
        Format::Json => {
            let first = &reports[0];
            let rows: Vec<Value> = reports
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    json!({
                        "trial": i,
                        "seed": r.seed,
                        "sampled": r.sampled,
                        "copies": r.copies,
                        "removed": r.removed,
                        "size": r.family.len(),
                        "target": json::real(r.target),
                        "ratio": json::real(ratio(r)),
                        "certified": true,
                    })
                })
                .collect();
            json::pretty(&json!({
                "n": a.n,
                "p": a.p,
                "census": json::big(first.census),
                "census_formula": json::real(first.census_formula),
                "census_ratio": json::real(first.census as f64 / first.census_formula),
                "trials": rows,
            }))
        }
        _ => {
            let mut out = format!("{DIAMOND_HEADER}\n");
            for (i, r) in reports.iter().enumerate() {
                out.push_str(&format!(
                    "{i},{},{},{},{},{},{},{},{},{},true\n",
                    r.seed,
                    a.n,
                    csv_real(a.p),
                    r.sampled,
                    r.copies,
                    r.removed,
                    r.family.len(),
                    csv_real(r.target),
                    csv_real(ratio(r)),
                ));
            }
            out
        }
    })
}

fn pi_json(p: f64, r: &PiReport) -> Value {
    json!({
        "p": p,
        "ln_m": json::real(r.ln_m),
        "first_scaled": json::real(r.first_scaled),
        "second_scaled": json::real(r.second_scaled),
        "degenerate": r.degenerate,
        "count_factor": json::real(r.count_factor),
        "first_factor": json::real(r.first_factor),
        "second_factor": json::real(r.second_factor),
        "chernoff": json::real(r.chernoff),
        "allowance": json::real(r.allowance),
        "count_ok": r.count_ok,
        "first_ok": r.first_ok,
        "second_ok": r.second_ok,
        "log_pi_scaled": json::real(r.log_pi_scaled),
        "log_pi": r.log_pi.map(json::real),
        "vacuous": r.vacuous,
        "threshold_constant": json::real(r.threshold_constant),
        "above_threshold": r.above_threshold,
    })
}

pub fn pi(ctx: &Ctx, a: &PiArgs) -> CliResult<String> {
    let format = ctx.format(&[Format::Json, Format::Csv], Format::Json)?;
    let reports: Vec<(f64, PiReport)> = a
        .p
        .iter()
        .map(|&p| Ok((p, union_bound_pi(a.n, a.h, a.size, a.delta, a.epsilon, p)?)))
        .collect::<CliResult<_>>()?;
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("p,log_pi_scaled,count_factor,first_factor,second_factor,allowance,count_ok,first_ok,second_ok,vacuous\n");
            for (p, r) in &reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    p,
                    r.log_pi_scaled,
                    r.count_factor,
                    r.first_factor,
                    r.second_factor,
                    r.allowance,
                    r.count_ok,
                    r.first_ok,
                    r.second_ok,
                    r.vacuous
                ));
            }
            out
        }
        _ => {
            // Strictly decreasing along the given order, when that order ascends in p.
            let ascending = a.p.windows(2).all(|w| w[0] < w[1]);
            let decreasing = ascending.then(|| reports.windows(2).all(|w| w[1].1.log_pi_scaled < w[0].1.log_pi_scaled));
            json::pretty(&json!({
                "n": a.n,
                "h": a.h,
                "size": a.size,
                "delta": a.delta,
                "epsilon": a.epsilon,
                "strictly_decreasing": decreasing,
                "grid": reports.iter().map(|(p, r)| pi_json(*p, r)).collect::<Vec<_>>(),
            }))
        }
    })
}

pub fn sample(ctx: &Ctx, a: &SampleArgs) -> CliResult<String> {
    ctx.format(&[Format::Text], Format::Text)?;
    Ok(write_family(&draw(a.n, a.p, a.seed)?.family))
}
