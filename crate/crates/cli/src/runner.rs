//! Executes a run config job by job, emitting one report per check.

use crate::config::{Job, RunConfig};
use crate::report_json::{human_line, report_line};
use crate::DEFAULT_SEED;
use cartan_core::domains::DomainSpec;
use cartan_core::mapzoo::HoloMap;
use cartan_core::verify::{
    congruence_criterion, congruence_search, dangelo_solve, default_t_grid, degree_check,
    isometry_residual_tol, metric_pullback, minimality_rank, properness_probe,
    quadratic_classify, quadratic_relation_residual, reduce_nonminimal, Aux, CongruenceVerdict,
    Report, SamplePlan, Witness, CONGRUENCE_ITERS, CONGRUENCE_RESTARTS, TOL_DECOMPOSITION,
    TOL_FUNCTIONAL_EQ,
};
use std::io::Write;

/// Knobs resolved from flags and the environment.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub seed_flag: Option<u64>,
    pub env_seed: Option<u64>,
    pub samples_override: Option<usize>,
    pub tol_isometry_override: Option<f64>,
    pub json: bool,
}

/// Process exit status of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    AllPassed,
    CheckFailures,
    ConfigError,
}

impl RunStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            RunStatus::AllPassed => 0,
            RunStatus::CheckFailures => 1,
            RunStatus::ConfigError => 2,
        }
    }
}

/// Seed precedence: flag, then environment, then config, then the default.
pub fn resolve_seed(opts: &RunOptions, config: &RunConfig) -> u64 {
    opts.seed_flag
        .or(opts.env_seed)
        .or(config.seed)
        .unwrap_or(DEFAULT_SEED)
}

/// Runs every job in order; report lines stream to `out`, config errors go
/// to `err`.
pub fn run(
    config: &RunConfig,
    opts: &RunOptions,
    out: &mut impl Write,
    err: &mut impl Write,
) -> RunStatus {
    let base_seed = resolve_seed(opts, config);
    let mut all_pass = true;
    for (idx, job) in config.jobs.iter().enumerate() {
        match run_job(job, idx, base_seed, opts) {
            Ok(reports) => {
                for report in &reports {
                    all_pass &= report.pass;
                    let line = if opts.json {
                        report_line(report, &job.family.family, job.family.n, &job.family.params)
                    } else {
                        human_line(report, &report.family)
                    };
                    if writeln!(out, "{line}").is_err() {
                        return RunStatus::ConfigError;
                    }
                }
            }
            Err(message) => {
                let _ = writeln!(err, "job {idx}: {message}");
                return RunStatus::ConfigError;
            }
        }
    }
    if all_pass {
        RunStatus::AllPassed
    } else {
        RunStatus::CheckFailures
    }
}

/// Convenience wrapper returning the full report stream as a string
/// (JSON mode), for determinism checks and tests.
pub fn run_to_string(config: &RunConfig, opts: &RunOptions) -> Result<(String, RunStatus), String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut json_opts = opts.clone();
    json_opts.json = true;
    let status = run(config, &json_opts, &mut out, &mut err);
    if status == RunStatus::ConfigError {
        return Err(String::from_utf8_lossy(&err).into_owned());
    }
    Ok((String::from_utf8(out).expect("valid utf8"), status))
}

fn job_plan(job: &Job, idx: usize, base_seed: u64, opts: &RunOptions) -> SamplePlan {
    let spec = job.plan.clone().unwrap_or_default();
    let mut plan = SamplePlan::new(
        opts.samples_override
            .or(spec.count)
            .unwrap_or(1000),
        spec.seed.unwrap_or_else(|| base_seed.wrapping_add(idx as u64)),
    );
    plan.rmax = spec.rmax;
    plan
}

fn run_job(
    job: &Job,
    idx: usize,
    base_seed: u64,
    opts: &RunOptions,
) -> Result<Vec<Report>, String> {
    let plan = job_plan(job, idx, base_seed, opts);
    let tol_isometry = opts
        .tol_isometry_override
        .or(job.tolerances.as_ref().and_then(|t| t.isometry))
        .unwrap_or(TOL_FUNCTIONAL_EQ);
    let mut reports = Vec::new();
    // congruence jobs need no buildable map
    let needs_map = job.checks.iter().any(|c| c != "congruence");
    let map = if needs_map {
        Some(job.family.build()?)
    } else {
        None
    };
    for check in &job.checks {
        let report = match check.as_str() {
            "congruence" => congruence_report(job, &plan)?,
            other => {
                let map = map.as_ref().expect("map built above");
                match other {
                    "isometry" => isometry_residual_tol(map, &plan, tol_isometry)
                        .map_err(|e| e.to_string())?,
                    "metric" => metric_pullback(map, &plan, 1e-4).map_err(|e| e.to_string())?,
                    "proper" => properness_probe(map, plan.count, &default_t_grid(), plan.seed)
                        .map_err(|e| e.to_string())?,
                    "minimality" => minimality_rank(map, &plan).map_err(|e| e.to_string())?,
                    "reduce" => reduce_report(map, &plan)?,
                    "dangelo" => {
                        let dec = dangelo_solve(map, &plan).map_err(|e| e.to_string())?;
                        synthetic_report(
                            "dangelo",
                            map,
                            &plan,
                            dec.residual,
                            TOL_DECOMPOSITION,
                            Aux::None,
                        )
                    }
                    "quadratic" => {
                        let dec = dangelo_solve(map, &plan).map_err(|e| e.to_string())?;
                        let data =
                            quadratic_classify(&dec, map, &plan).map_err(|e| e.to_string())?;
                        let mut fresh = plan.clone();
                        fresh.seed = plan.seed.wrapping_add(1);
                        let residual = quadratic_relation_residual(&data, map, &fresh)
                            .map_err(|e| e.to_string())?;
                        synthetic_report(
                            "quadratic",
                            map,
                            &plan,
                            residual,
                            TOL_DECOMPOSITION,
                            Aux::Tag(data.tag.as_str().to_string()),
                        )
                    }
                    "degree" => degree_check(map, &plan).map_err(|e| e.to_string())?,
                    other => return Err(format!("unknown check {other}")),
                }
            }
        };
        reports.push(report);
    }
    Ok(reports)
}

fn synthetic_report(
    check: &'static str,
    map: &HoloMap,
    plan: &SamplePlan,
    residual: f64,
    tolerance: f64,
    aux: Aux,
) -> Report {
    Report {
        check,
        family: map.family.clone(),
        plan: plan.clone(),
        tolerance,
        max_residual: residual,
        mean_residual: residual,
        pass: residual <= tolerance,
        witness: Witness { z: vec![], aux },
    }
}

fn reduce_report(map: &HoloMap, plan: &SamplePlan) -> Result<Report, String> {
    let outcome = reduce_nonminimal(map, plan).map_err(|e| e.to_string())?;
    let (residual, aux) = match outcome {
        Some((_, reduced)) => {
            let m = match reduced.target {
                DomainSpec::TypeIV(m) => m,
                _ => unreachable!("reduction targets stay Lie balls"),
            };
            (0.0, Aux::Tag(format!("reduced_to_{m}")))
        }
        None => (1.0, Aux::Tag("no_kernel".to_string())),
    };
    Ok(Report {
        check: "reduce",
        family: map.family.clone(),
        plan: plan.clone(),
        tolerance: 0.5,
        max_residual: residual,
        mean_residual: residual,
        pass: residual <= 0.5,
        witness: Witness { z: vec![], aux },
    })
}

/// Obstruction check per job: spectra from `theta`/`theta2` at size
/// `n + 1`. Equal angles assert that the search finds the identity witness;
/// distinct angles assert the obstruction and that the search stays away.
fn congruence_report(job: &Job, plan: &SamplePlan) -> Result<Report, String> {
    let params = &job.family.params;
    let n = job
        .family
        .n
        .ok_or("congruence check requires the field n")?;
    let theta1 = params
        .theta
        .ok_or("congruence check requires params.theta")?;
    let theta2 = params
        .theta2
        .ok_or("congruence check requires params.theta2")?;
    // designate the larger angle: smaller |cos(2 theta)|
    let (big, small) = if theta1 >= theta2 {
        (theta1, theta2)
    } else {
        (theta2, theta1)
    };
    let lambda = (2.0 * big).cos();
    let mut others = vec![(2.0 * small).cos()];
    others.extend(std::iter::repeat_n(1.0, n - 1));
    others.push(-1.0);
    let spectrum_a: Vec<f64> = {
        let mut v = vec![lambda];
        v.extend(std::iter::repeat_n(1.0, n - 1));
        v.push(-1.0);
        v
    };
    let best = congruence_search(
        &spectrum_a,
        &others,
        CONGRUENCE_RESTARTS,
        CONGRUENCE_ITERS,
        plan.seed,
    )
    .map_err(|e| e.to_string())?;
    let equal = (theta1 - theta2).abs() < 1e-15;
    let (residual, tolerance) = if equal {
        (best, 1e-10)
    } else {
        match congruence_criterion(lambda, &others) {
            CongruenceVerdict::Impossible => ((0.01f64 - best).max(0.0), 0.0),
            CongruenceVerdict::Undecided => {
                return Err("congruence criterion is undecided for these angles".into())
            }
        }
    };
    Ok(Report {
        check: "congruence",
        family: job.family.family.clone(),
        plan: plan.clone(),
        tolerance,
        max_residual: residual,
        mean_residual: residual,
        pass: residual <= tolerance,
        witness: Witness {
            z: vec![],
            aux: Aux::Search {
                best_residual: best,
                restarts: CONGRUENCE_RESTARTS,
                iters: CONGRUENCE_ITERS,
            },
        },
    })
}
