//! Run configuration: a list of independently runnable jobs.

use crate::descriptor::FamilyDescriptor;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    /// Base seed; may instead come from the flag or the environment.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub jobs: Vec<Job>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Job {
    pub family: FamilyDescriptor,
    /// Subset of {isometry, metric, proper, minimality, reduce, dangelo,
    /// quadratic, degree, congruence}.
    pub checks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<Tolerances>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct PlanSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmax: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Tolerances {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isometry: Option<f64>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, String> {
        let config: RunConfig =
            serde_json::from_str(text).map_err(|e| format!("config parse error: {e}"))?;
        if config.jobs.is_empty() {
            return Err("config has no jobs".into());
        }
        const KNOWN: [&str; 9] = [
            "isometry",
            "metric",
            "proper",
            "minimality",
            "reduce",
            "dangelo",
            "quadratic",
            "degree",
            "congruence",
        ];
        for (i, job) in config.jobs.iter().enumerate() {
            if job.checks.is_empty() {
                return Err(format!("job {i} has no checks"));
            }
            for check in &job.checks {
                if !KNOWN.contains(&check.as_str()) {
                    return Err(format!("job {i}: unknown check {check}"));
                }
            }
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_minimal_config() {
        let config = RunConfig::from_json(
            r#"{"seed":7,"jobs":[{"family":{"family":"R_IV_canonical","params":{"m":2}},"checks":["isometry"]}]}"#,
        )
        .unwrap();
        assert_eq!(config.seed, Some(7));
        assert_eq!(config.jobs.len(), 1);
    }

    #[test]
    fn rejects_malformed_and_empty_configs() {
        assert!(RunConfig::from_json("{").is_err());
        assert!(RunConfig::from_json(r#"{"jobs":[]}"#).is_err());
        assert!(RunConfig::from_json(
            r#"{"jobs":[{"family":{"family":"R_IV_canonical"},"checks":["nope"]}]}"#
        )
        .is_err());
        assert!(RunConfig::from_json(
            r#"{"jobs":[{"family":{"family":"R_IV_canonical"},"checks":[]}]}"#
        )
        .is_err());
    }
}
