//! Stable JSON encoding of verification reports: one object per line,
//! fields in schema order.

use crate::descriptor::Params;
use cartan_core::verify::{Aux, Report};
use serde::Serialize;

#[derive(Serialize)]
struct ReportLine<'a> {
    check: &'a str,
    family: &'a str,
    params: ParamsEcho<'a>,
    plan: PlanEcho,
    tolerance: f64,
    max_residual: f64,
    mean_residual: f64,
    pass: bool,
    witness: WitnessJson,
}

#[derive(Serialize)]
struct ParamsEcho<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(flatten)]
    params: &'a Params,
}

#[derive(Serialize)]
struct PlanEcho {
    count: usize,
    seed: u64,
    rmax: Option<f64>,
}

#[derive(Serialize)]
struct WitnessJson {
    z: Vec<[f64; 2]>,
    aux: AuxJson,
}

#[derive(Serialize)]
#[serde(untagged)]
enum AuxJson {
    Empty {},
    Lambda { lambda: f64 },
    Rank { rank: usize, full: bool },
    Search {
        best_residual: f64,
        restarts: usize,
        iters: usize,
    },
    Degree { degree: usize },
    Tag { tag: String },
}

impl From<&Aux> for AuxJson {
    fn from(aux: &Aux) -> Self {
        match aux {
            Aux::None => AuxJson::Empty {},
            Aux::Lambda(l) => AuxJson::Lambda { lambda: *l },
            Aux::Rank { rank, full } => AuxJson::Rank {
                rank: *rank,
                full: *full,
            },
            Aux::Search {
                best_residual,
                restarts,
                iters,
            } => AuxJson::Search {
                best_residual: *best_residual,
                restarts: *restarts,
                iters: *iters,
            },
            Aux::Degree(d) => AuxJson::Degree { degree: *d },
            Aux::Tag(t) => AuxJson::Tag { tag: t.clone() },
        }
    }
}

/// One report as a compact JSON line (without the trailing newline).
pub fn report_line(report: &Report, family: &str, n: Option<usize>, params: &Params) -> String {
    let line = ReportLine {
        check: report.check,
        family,
        params: ParamsEcho { n, params },
        plan: PlanEcho {
            count: report.plan.count,
            seed: report.plan.seed,
            rmax: report.plan.rmax,
        },
        tolerance: report.tolerance,
        max_residual: report.max_residual,
        mean_residual: report.mean_residual,
        pass: report.pass,
        witness: WitnessJson {
            z: report.witness.z.iter().map(|c| [c.re, c.im]).collect(),
            aux: AuxJson::from(&report.witness.aux),
        },
    };
    serde_json::to_string(&line).expect("report serialization cannot fail")
}

/// Human-readable single line for terminal runs.
pub fn human_line(report: &Report, family: &str) -> String {
    let flag = if report.pass { "PASS" } else { "FAIL" };
    let aux = match &report.witness.aux {
        Aux::None => String::new(),
        Aux::Lambda(l) => format!(" lambda={l:.6}"),
        Aux::Rank { rank, full } => format!(" rank={rank} full={full}"),
        Aux::Search {
            best_residual,
            restarts,
            iters,
        } => format!(" best_residual={best_residual:.3e} restarts={restarts} iters={iters}"),
        Aux::Degree(d) => format!(" degree={d}"),
        Aux::Tag(t) => format!(" tag={t}"),
    };
    format!(
        "{flag} {check:<10} {family:<28} max={max:.3e} mean={mean:.3e} tol={tol:.1e}{aux}",
        check = report.check,
        family = family,
        max = report.max_residual,
        mean = report.mean_residual,
        tol = report.tolerance,
    )
}
