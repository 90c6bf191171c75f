//! The shipped verification suites, generated programmatically so the
//! checked-in config file can never drift from the code.

use crate::config::{Job, PlanSpec, RunConfig};
use crate::descriptor::{FamilyDescriptor, Params};
use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

fn family(name: &str, n: Option<usize>, params: Params) -> FamilyDescriptor {
    FamilyDescriptor {
        family: name.to_string(),
        n,
        target: None,
        params,
        components: None,
    }
}

fn isometry_job(desc: FamilyDescriptor, count: usize) -> Job {
    Job {
        family: desc,
        checks: vec!["isometry".to_string()],
        plan: Some(PlanSpec {
            count: Some(count),
            seed: None,
            rmax: None,
        }),
        tolerances: None,
    }
}

/// Angle-list length of the rational family.
pub fn r_theta_count(n: usize, k: usize) -> usize {
    if k <= n {
        k - 1
    } else if k == n + 1 {
        n - 1
    } else {
        n
    }
}

/// Angle-list length of the radical family (the largest takes one extra).
pub fn i_theta_count(n: usize, k: usize) -> usize {
    if k <= n + 1 {
        k - 1
    } else {
        n + 1
    }
}

/// Every shipped isometric family at the acceptance dimensions: the
/// angle families for n in {2,3,4} over all admissible k and angles in
/// {pi/6, pi/4}, the canonical isometries, the polynomial isometries, and
/// the paired linear embeddings. One isometry check each.
pub fn canonical_isometry_suite(samples: usize) -> RunConfig {
    let mut jobs: Vec<Job> = Vec::new();
    let angles = [FRAC_PI_6, FRAC_PI_4];
    for n in [2usize, 3, 4] {
        for k in 2..=n + 2 {
            for &theta in &angles {
                // rational family: no extra admissibility constraints
                jobs.push(isometry_job(
                    family(
                        "R",
                        Some(n),
                        Params {
                            k: Some(k),
                            thetas: vec![theta; r_theta_count(n, k)],
                            ..Default::default()
                        },
                    ),
                    samples,
                ));
                // radical family: all-pi/4 lists are inadmissible once every
                // coordinate is paired, and the largest family carries one
                // strictly interior mixing angle
                let quarter = (theta - FRAC_PI_4).abs() < 1e-12;
                if k > n && quarter {
                    continue;
                }
                let thetas = if k == n + 2 {
                    // n pair angles plus the strictly interior mixing angle
                    let mut list = vec![theta; n];
                    list.push(FRAC_PI_6);
                    list
                } else {
                    vec![theta; i_theta_count(n, k)]
                };
                jobs.push(isometry_job(
                    family(
                        "I",
                        Some(n),
                        Params {
                            k: Some(k),
                            thetas,
                            ..Default::default()
                        },
                    ),
                    samples,
                ));
            }
            // one-real-parameter family: fixed beta, theta in {pi/6, pi/4}
            for &theta in &angles {
                let mut params = Params {
                    k: Some(k),
                    theta: Some(theta),
                    ..Default::default()
                };
                if k >= 3 {
                    params.beta = Some(FRAC_PI_6);
                }
                if k == n + 2 {
                    params.alpha = Some(FRAC_PI_6);
                }
                jobs.push(isometry_job(family("I_family4", Some(n), params), samples));
            }
        }
    }
    // canonical isometries from the maximal-dimension balls
    for (p, q) in [(2, 2), (2, 3)] {
        jobs.push(isometry_job(
            family(
                "R_I_canonical",
                None,
                Params {
                    p: Some(p),
                    q: Some(q),
                    ..Default::default()
                },
            ),
            samples,
        ));
    }
    for m in [4, 5] {
        jobs.push(isometry_job(
            family(
                "R_II_canonical",
                None,
                Params {
                    m: Some(m),
                    ..Default::default()
                },
            ),
            samples,
        ));
    }
    for m in 2..=4 {
        jobs.push(isometry_job(
            family(
                "R_III_canonical",
                None,
                Params {
                    m: Some(m),
                    ..Default::default()
                },
            ),
            samples,
        ));
    }
    for m in 2..=5 {
        for name in ["R_IV_canonical", "I_IV_canonical"] {
            jobs.push(isometry_job(
                family(
                    name,
                    None,
                    Params {
                        m: Some(m),
                        ..Default::default()
                    },
                ),
                samples,
            ));
        }
    }
    // polynomial isometries
    for (p, q) in [(2, 2), (2, 3)] {
        jobs.push(isometry_job(
            family(
                "poly_isometry_I",
                None,
                Params {
                    p: Some(p),
                    q: Some(q),
                    ..Default::default()
                },
            ),
            samples,
        ));
    }
    for (name, ms) in [
        ("poly_isometry_II", vec![4usize, 5]),
        ("poly_isometry_III", vec![2, 3]),
        ("poly_isometry_IV", vec![2, 4]),
    ] {
        for m in ms {
            jobs.push(isometry_job(
                family(
                    name,
                    None,
                    Params {
                        m: Some(m),
                        ..Default::default()
                    },
                ),
                samples,
            ));
        }
    }
    // linear embeddings
    for n in [2usize, 3, 4] {
        jobs.push(isometry_job(family("linear_2n", Some(n), Params::default()), samples));
    }
    RunConfig {
        seed: Some(42),
        jobs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_has_the_expected_shape() {
        let config = canonical_isometry_suite(1000);
        assert!(config.jobs.len() > 80, "got {}", config.jobs.len());
        // every job is an isometry check with the sample budget
        for job in &config.jobs {
            assert_eq!(job.checks, ["isometry"]);
            assert_eq!(job.plan.as_ref().unwrap().count, Some(1000));
        }
        // the inadmissible all-pi/4 radical families are skipped
        let quarter_i = config.jobs.iter().filter(|j| {
            j.family.family == "I"
                && j.family
                    .params
                    .thetas
                    .iter()
                    .all(|t| (t - FRAC_PI_4).abs() < 1e-12)
                && j.family.params.k.unwrap() > j.family.n.unwrap()
        });
        assert_eq!(quarter_i.count(), 0);
    }

    #[test]
    fn every_job_builds() {
        for job in canonical_isometry_suite(10).jobs {
            job.family
                .build()
                .unwrap_or_else(|e| panic!("{:?}: {e}", job.family));
        }
    }
}
