//! Verification results as value objects.

use super::plan::SamplePlan;
use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Auxiliary data carried by a check's witness.
#[derive(Debug, Clone, PartialEq)]
pub enum Aux {
    None,
    /// Estimated isometric constant.
    Lambda(f64),
    /// Real rank of the sampled lift matrix and whether it is full.
    Rank { rank: usize, full: bool },
    /// Best residual reached by a search, with the search budget that
    /// produced it.
    Search {
        best_residual: f64,
        restarts: usize,
        iters: usize,
    },
    /// Extracted map degree.
    Degree(usize),
    /// Classification tag.
    Tag(String),
}

/// Worst sample point plus auxiliary data.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub z: Vec<Complex64>,
    pub aux: Aux,
}

/// Outcome of one verification check. `pass` holds exactly when
/// `max_residual <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check: &'static str,
    pub family: String,
    pub plan: SamplePlan,
    pub tolerance: f64,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub pass: bool,
    pub witness: Witness,
}

/// Accumulates per-sample residuals, tracking the worst point, and freezes
/// them into a [`Report`].
pub(crate) struct ResidualSweep {
    max: f64,
    sum: f64,
    count: usize,
    worst: Vec<Complex64>,
}

impl ResidualSweep {
    pub fn new() -> Self {
        ResidualSweep {
            max: 0.0,
            sum: 0.0,
            count: 0,
            worst: Vec::new(),
        }
    }

    pub fn add(&mut self, residual: f64, z: &[Complex64]) {
        self.sum += residual;
        self.count += 1;
        if residual >= self.max {
            self.max = residual;
            self.worst = z.to_vec();
        }
    }

    pub fn finish(
        self,
        check: &'static str,
        family: String,
        plan: SamplePlan,
        tolerance: f64,
        aux: Aux,
    ) -> Report {
        let mean = if self.count > 0 {
            self.sum / self.count as f64
        } else {
            0.0
        };
        Report {
            check,
            family,
            plan,
            tolerance,
            max_residual: self.max,
            mean_residual: mean,
            pass: self.max <= tolerance,
            witness: Witness {
                z: self.worst,
                aux,
            },
        }
    }
}
