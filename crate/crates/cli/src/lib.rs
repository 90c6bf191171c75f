//! IO side of the workspace: map-family descriptors and run configs as JSON
//! documents, the family catalog, the verification runner with its
//! one-object-per-line report stream, and the gap-interval command.

pub mod catalog;
pub mod config;
pub mod descriptor;
pub mod gapcmd;
pub mod report_json;
pub mod runner;
pub mod suite;

/// Seed used when neither flag, environment, nor config provides one.
pub const DEFAULT_SEED: u64 = 20151201;

/// Environment variable consulted for the base seed.
pub const SEED_ENV_VAR: &str = "CARTAN_SEED";
