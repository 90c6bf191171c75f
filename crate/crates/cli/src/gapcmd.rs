//! The gap-interval command: JSON in, JSON out.

use cartan_core::mapzoo::gap_intervals;
use serde::Serialize;

#[derive(Serialize)]
pub struct GapJson {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "I")]
    pub intervals: Vec<Vec<usize>>,
}

/// Evaluates the gap formulas and serializes the result; empty intervals
/// come out as empty arrays.
pub fn gap_json(n: usize) -> Result<String, String> {
    let gaps = gap_intervals(n).map_err(|e| e.to_string())?;
    let intervals = gaps
        .intervals
        .iter()
        .map(|iv| match iv {
            Some((lo, hi)) => vec![*lo, *hi],
            None => vec![],
        })
        .collect();
    let out = GapJson {
        n: gaps.n,
        k: gaps.k_max,
        intervals,
    };
    Ok(serde_json::to_string(&out).expect("gap serialization cannot fail"))
}
