//! Verification suites: quadrature-based orthonormality, eigen-residual
//! sweeps, nonrelativistic limit studies and the exact angular algebra,
//! aggregated into a deterministic machine-readable report.
//!
//! Checks are independent, so `run_all` fans them out with rayon when the
//! `parallel` feature (default) is on; `run_all_seq` is the sequential path,
//! always compiled, used as the fallback and benchmarked against the
//! parallel one. Results are sorted by name before aggregation, so the two
//! produce byte-identical reports.

mod checks;
pub mod nr;
mod orthonormality;
mod quadrature;
mod report;

pub use checks::GridSpec;
pub use orthonormality::{
    envelope_truncation, full_orthonormality, measure_collapse_residual, nr_normalization,
    radial_orthonormality,
};
pub use quadrature::{integrate, QuadratureSpec, VerifyError, VerifyResult};
pub use report::{Check, Summary, VerificationReport};

use checks::CheckJob;

/// Which suites to run; parsed from the CLI `--suite` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    SpecFun,
    Model,
    FdOps,
    Orthonormality,
    Nr,
    Algebra,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::SpecFun,
        Suite::Model,
        Suite::FdOps,
        Suite::Orthonormality,
        Suite::Nr,
        Suite::Algebra,
    ];

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "specfun" => Some(Self::SpecFun),
            "model" => Some(Self::Model),
            "fdops" => Some(Self::FdOps),
            "orthonormality" => Some(Self::Orthonormality),
            "nr" => Some(Self::Nr),
            "algebra" => Some(Self::Algebra),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::SpecFun => "specfun",
            Self::Model => "model",
            Self::FdOps => "fdops",
            Self::Orthonormality => "orthonormality",
            Self::Nr => "nr",
            Self::Algebra => "algebra",
        }
    }

    fn jobs(&self, grid: &GridSpec) -> Vec<CheckJob> {
        match self {
            Self::SpecFun => checks::specfun_jobs(),
            Self::Model => checks::model_jobs(grid),
            Self::FdOps => checks::fdops_jobs(grid),
            Self::Orthonormality => checks::orthonormality_jobs(),
            Self::Nr => checks::nr_jobs(),
            Self::Algebra => checks::algebra_jobs(),
        }
    }
}

fn collect_jobs(grid: &GridSpec, suites: &[Suite]) -> Vec<CheckJob> {
    if grid.is_empty() {
        return Vec::new();
    }
    suites.iter().flat_map(|s| s.jobs(grid)).collect()
}

fn run_jobs_seq(jobs: Vec<CheckJob>) -> VerificationReport {
    VerificationReport::from_checks(jobs.into_iter().map(|j| j()).collect())
}

#[cfg(feature = "parallel")]
fn run_jobs_par(jobs: Vec<CheckJob>) -> VerificationReport {
    use rayon::prelude::*;
    VerificationReport::from_checks(jobs.into_par_iter().map(|j| j()).collect())
}

/// Run the selected suites sequentially.
pub fn run_suites_seq(grid: &GridSpec, suites: &[Suite]) -> VerificationReport {
    run_jobs_seq(collect_jobs(grid, suites))
}

/// Run the selected suites with rayon.
#[cfg(feature = "parallel")]
pub fn run_suites_par(grid: &GridSpec, suites: &[Suite]) -> VerificationReport {
    run_jobs_par(collect_jobs(grid, suites))
}

/// Run the selected suites, data-parallel when the feature is enabled.
pub fn run_suites(grid: &GridSpec, suites: &[Suite]) -> VerificationReport {
    #[cfg(feature = "parallel")]
    {
        run_suites_par(grid, suites)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_suites_seq(grid, suites)
    }
}

/// All suites on the given grid (empty grid: empty passing report).
pub fn run_all(grid: &GridSpec) -> VerificationReport {
    run_suites(grid, &Suite::ALL)
}

/// Sequential counterpart of [`run_all`].
pub fn run_all_seq(grid: &GridSpec) -> VerificationReport {
    run_suites_seq(grid, &Suite::ALL)
}

/// Parallel counterpart of [`run_all`].
#[cfg(feature = "parallel")]
pub fn run_all_par(grid: &GridSpec) -> VerificationReport {
    run_suites_par(grid, &Suite::ALL)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_gives_empty_passing_report() {
        let grid = GridSpec {
            omega0: vec![],
            ..GridSpec::default()
        };
        let report = run_all(&grid);
        assert_eq!(report.summary.total, 0);
        assert!(report.all_pass());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("bogus"), None);
    }

    #[test]
    fn algebra_suite_alone() {
        let report = run_suites(&GridSpec::default(), &[Suite::Algebra]);
        assert!(report.summary.total >= 5);
        assert!(report.checks.iter().all(|c| c.name.starts_with("algebra/")));
        assert!(
            report.all_pass(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}
