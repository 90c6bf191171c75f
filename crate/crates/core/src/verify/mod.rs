//! The verification harness: residual sweeps for the defect functional
//! equations, metric pullbacks with isometric-constant estimation,
//! properness probes, unitary decompositions and quadratic classification,
//! minimality certificates and the reduction of non-minimum isometries,
//! perfect-square tests, and the diagonal congruence obstruction with its
//! numerical falsifier.
//!
//! Defect functional equations are the primary gate: they are exact for the
//! constructed families and numerically far tighter than metric comparison,
//! which serves as a secondary cross-check.

mod congruence;
mod dangelo;
mod degree;
mod metric;
mod minimal;
mod plan;
mod proper;
mod report;
mod residual;
mod square;

pub use congruence::{
    congruence_criterion, congruence_search, CongruenceVerdict, CONGRUENCE_ITERS,
    CONGRUENCE_RESTARTS,
};
pub use dangelo::{
    dangelo_solve, quadratic_classify, quadratic_relation_residual, DAngeloDecomposition,
    QuadraticData, QuadraticTag,
};
pub use degree::degree_check;
pub use metric::{expected_lambda, metric_pullback, JACOBIAN_STEP};
pub use minimal::{minimality_rank, reduce_nonminimal};
pub use plan::{sample_ball_points, sample_directions, SamplePlan};
pub use proper::{default_t_grid, properness_probe, PROPER_FINAL_DEFECT};
pub use report::{Aux, Report, Witness};
pub use residual::{isometry_residual, isometry_residual_tol, relative_defect_residual};
pub use square::perfect_square_test;

/// Tolerance of the defect functional equation checks.
pub const TOL_FUNCTIONAL_EQ: f64 = 1e-10;

/// Tolerance of the finite-difference metric pullback deviation
/// (step-limited).
pub const TOL_METRIC: f64 = 1e-6;

/// Tolerance of the unitary decomposition reconstruction.
pub const TOL_DECOMPOSITION: f64 = 1e-8;
