//! Suite orchestration: configuration ingestion, the check registry, and
//! deterministic report emission.

use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::generator::{GeneratorSpec, HerglotzData};
use crate::geometry::{self, find_r0};
use crate::grid::SamplingGrid;
use crate::report::{CheckReport, ParamValue, SuiteSummary};
use crate::resolvent::SolverConfig;
use crate::semigroup;

/// Registered check names, each backed by exactly one grid-check operation.
///
/// Per-(generator, r) checks: `starlike_disk`, `hyperbolic_convexity`,
/// `lemma_bounds`, `sector`, `resolvent_generator`. Per-generator checks
/// (consuming the whole `r_values` list): `squeezing`, `uniform_bound`,
/// `normalized_convergence`.
pub const REGISTERED_CHECKS: [&str; 8] = [
    "starlike_disk",
    "hyperbolic_convexity",
    "lemma_bounds",
    "squeezing",
    "sector",
    "resolvent_generator",
    "uniform_bound",
    "normalized_convergence",
];

fn is_per_r(check: &str) -> bool {
    matches!(
        check,
        "starlike_disk"
            | "hyperbolic_convexity"
            | "lemma_bounds"
            | "sector"
            | "resolvent_generator"
    )
}

/// A parsed and validated suite configuration.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub generators: Vec<(String, GeneratorSpec)>,
    pub r_values: Vec<f64>,
    pub grid: SamplingGrid,
    pub solver: SolverConfig,
    pub check_slack: f64,
    pub checks: Vec<String>,
    pub output_dir: PathBuf,
    pub seed: u64,
}

#[derive(Deserialize)]
struct GridJson {
    radii: usize,
    angles: usize,
    outer_radius: f64,
}

#[derive(Deserialize)]
struct TolerancesJson {
    solver: f64,
    check_slack: f64,
}

#[derive(Deserialize)]
struct SuiteJson {
    generators: Vec<serde_json::Value>,
    r_values: Vec<f64>,
    grid: GridJson,
    tolerances: TolerancesJson,
    checks: Vec<String>,
    output_dir: String,
    #[serde(default)]
    seed: u64,
}

fn config_err(path: &str, message: impl Into<String>) -> Error {
    Error::Config {
        path: path.to_string(),
        message: message.into(),
    }
}

impl SuiteConfig {
    /// The built-in configuration: the two bundled generators, a decade of
    /// `r` values, the default grid, and every check the bundled generators
    /// support (`lemma_bounds` needs an atomic measure, so it is left to
    /// explicit configs).
    pub fn default_config(output_dir: &Path) -> Self {
        SuiteConfig {
            generators: vec![
                (
                    "linear".to_string(),
                    crate::presets::linear(Complex64::new(1.0, 0.0)),
                ),
                ("koebe_flow".to_string(), crate::presets::koebe_flow()),
            ],
            r_values: vec![10.0, 100.0, 1000.0],
            grid: SamplingGrid::default_disk(),
            solver: SolverConfig::default(),
            check_slack: 1e-9,
            checks: REGISTERED_CHECKS
                .iter()
                .filter(|c| **c != "lemma_bounds")
                .map(|c| c.to_string())
                .collect(),
            output_dir: output_dir.to_path_buf(),
            seed: 0,
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let parsed: SuiteJson = serde_json::from_str(s)?;
        if parsed.generators.is_empty() {
            return Err(config_err("generators", "need at least one generator"));
        }
        let mut generators = Vec::with_capacity(parsed.generators.len());
        for (i, value) in parsed.generators.iter().enumerate() {
            let label = value
                .get("label")
                .and_then(|v| v.as_str())
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("g{i}"));
            let spec = GeneratorSpec::from_json_str(&value.to_string())
                .map_err(|e| config_err(&format!("generators[{i}]"), e.to_string()))?;
            generators.push((label, spec));
        }
        if parsed.r_values.is_empty() || parsed.r_values.iter().any(|r| !(*r > 0.0)) {
            return Err(config_err("r_values", "need a nonempty list of positive r"));
        }
        let grid = SamplingGrid::new(
            parsed.grid.radii,
            parsed.grid.angles,
            parsed.grid.outer_radius,
        )
        .map_err(|e| config_err("grid", e.to_string()))?;
        let solver = SolverConfig {
            tol: parsed.tolerances.solver,
            max_iter: SolverConfig::default().max_iter,
            continuation_steps: SolverConfig::default().continuation_steps,
        }
        .validated()
        .map_err(|e| config_err("tolerances.solver", e.to_string()))?;
        if !(parsed.tolerances.check_slack > 0.0) {
            return Err(config_err("tolerances.check_slack", "must be positive"));
        }
        for (i, check) in parsed.checks.iter().enumerate() {
            if !REGISTERED_CHECKS.contains(&check.as_str()) {
                return Err(config_err(
                    &format!("checks[{i}]"),
                    format!("unknown check `{check}`; see --list-checks"),
                ));
            }
        }
        Ok(SuiteConfig {
            generators,
            r_values: parsed.r_values,
            grid,
            solver,
            check_slack: parsed.tolerances.check_slack,
            checks: parsed.checks,
            output_dir: PathBuf::from(parsed.output_dir),
            seed: parsed.seed,
        })
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        Self::from_json_str(&fs::read_to_string(path)?)
    }

    /// Surface every precondition violation as a config error before any
    /// solving happens.
    pub fn validate(&self) -> Result<()> {
        let r0 = find_r0();
        for (gi, (label, g)) in self.generators.iter().enumerate() {
            if g.tau().norm() != 0.0 {
                return Err(config_err(
                    &format!("generators[{gi}]"),
                    format!("`{label}`: theorem checks require tau = 0"),
                ));
            }
            let q = g.q();
            if !(q.re > 0.0) {
                return Err(config_err(
                    &format!("generators[{gi}]"),
                    format!("`{label}`: theorem checks require Re q > 0, got q = {q}"),
                ));
            }
            for check in &self.checks {
                match check.as_str() {
                    "starlike_disk" | "sector" => {
                        for (ri, &r) in self.r_values.iter().enumerate() {
                            if !(r * q.re > r0) {
                                return Err(config_err(
                                    &format!("r_values[{ri}]"),
                                    format!(
                                        "`{check}` for `{label}` requires r Re q > r0 = {r0:.5}, got {}",
                                        r * q.re
                                    ),
                                ));
                            }
                        }
                    }
                    "resolvent_generator" => {
                        for (ri, &r) in self.r_values.iter().enumerate() {
                            if !(r * q.re >= 6.0) {
                                return Err(config_err(
                                    &format!("r_values[{ri}]"),
                                    format!(
                                        "`resolvent_generator` for `{label}` requires r Re q >= 6, got {}",
                                        r * q.re
                                    ),
                                ));
                            }
                        }
                    }
                    "uniform_bound" => {
                        for (ri, &r) in self.r_values.iter().enumerate() {
                            if !(r * q.re > 2.0) {
                                return Err(config_err(
                                    &format!("r_values[{ri}]"),
                                    format!(
                                        "`uniform_bound` for `{label}` requires r Re q > 2, got {}",
                                        r * q.re
                                    ),
                                ));
                            }
                        }
                    }
                    "lemma_bounds" => {
                        if !matches!(g.herglotz(), HerglotzData::Atomic { .. }) {
                            return Err(config_err(
                                &format!("generators[{gi}]"),
                                format!("`lemma_bounds` needs an atomic measure (`{label}` is rational)"),
                            ));
                        }
                        for (ri, &r) in self.r_values.iter().enumerate() {
                            if !(r * q.re > r0) {
                                return Err(config_err(
                                    &format!("r_values[{ri}]"),
                                    format!(
                                        "`lemma_bounds` for `{label}` requires r Re q > r0 = {r0:.5}, got {}",
                                        r * q.re
                                    ),
                                ));
                            }
                        }
                    }
                    "normalized_convergence" if self.r_values.windows(2).any(|w| w[1] <= w[0]) => {
                        return Err(config_err(
                            "r_values",
                            "`normalized_convergence` requires strictly increasing r_values",
                        ));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

fn format_r(r: f64) -> String {
    format!("{r}").replace('.', "_")
}

fn run_one(
    cfg: &SuiteConfig,
    g: &GeneratorSpec,
    check: &str,
    r: Option<f64>,
) -> Result<CheckReport> {
    match (check, r) {
        ("starlike_disk", Some(r)) => geometry::check_starlike_disk(g, r, &cfg.grid, &cfg.solver),
        ("hyperbolic_convexity", Some(r)) => {
            geometry::check_hyperbolic_convexity(g, r, &cfg.grid, &cfg.solver)
        }
        ("lemma_bounds", Some(r)) => geometry::check_lemma_bounds(g, r, &cfg.grid),
        ("sector", Some(r)) => {
            semigroup::check_resolvent_sector(g, r, Complex64::new(0.6, 0.2), 20.0, 5, &cfg.solver)
        }
        ("resolvent_generator", Some(r)) => {
            semigroup::resolvent_generator_suite(g, r, &cfg.grid, &cfg.solver)
        }
        ("squeezing", None) => {
            let kappa = semigroup::squeezing_coefficient(g);
            let flow_grid = cfg.grid.coarsened(4, 8);
            semigroup::check_squeezing(g, &flow_grid, &semigroup::DEFAULT_SQUEEZE_TIMES, kappa)
        }
        ("uniform_bound", None) => {
            semigroup::check_uniform_bound(g, &cfg.r_values, &cfg.grid, &cfg.solver)
        }
        ("normalized_convergence", None) => {
            semigroup::check_normalized_convergence(g, &cfg.r_values, 0.9, &cfg.solver)
        }
        _ => unreachable!("task construction matches the registry"),
    }
}

/// Run every requested check for every generator (and `r` where applicable),
/// write one JSON report per task plus `summary.json`, and return the
/// summary. Reports are written even when checks fail.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteSummary> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.output_dir)?;

    // (file stem, generator index, check, optional r) in deterministic order
    let mut tasks: Vec<(String, usize, String, Option<f64>)> = Vec::new();
    for (gi, (label, _)) in cfg.generators.iter().enumerate() {
        for check in &cfg.checks {
            if is_per_r(check) {
                for &r in &cfg.r_values {
                    tasks.push((
                        format!("{check}_{label}_r{}", format_r(r)),
                        gi,
                        check.clone(),
                        Some(r),
                    ));
                }
            } else {
                tasks.push((format!("{check}_{label}"), gi, check.clone(), None));
            }
        }
    }

    let mut reports = Vec::with_capacity(tasks.len());
    for (stem, gi, check, r) in &tasks {
        let (label, g) = &cfg.generators[*gi];
        let mut report = run_one(cfg, g, check, *r)?;
        report = report.with_param("generator", ParamValue::S(label.clone()));
        let path = cfg.output_dir.join(format!("{stem}.json"));
        fs::write(&path, report.to_json())?;
        reports.push(report);
    }
    let summary = SuiteSummary::from_reports(&reports);
    fs::write(cfg.output_dir.join("summary.json"), summary.to_json())?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_config(dir: &Path) -> SuiteConfig {
        let mut cfg = SuiteConfig::default_config(dir);
        cfg.grid = SamplingGrid::new(6, 12, 0.99).unwrap();
        cfg.r_values = vec![10.0, 100.0, 1000.0];
        cfg.checks = vec!["starlike_disk".into(), "uniform_bound".into()];
        cfg
    }

    #[test]
    fn registry_and_config_validation() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = SuiteConfig::default_config(dir.path());
        assert!(cfg.validate().is_ok());

        let json = r#"{
            "generators": [ { "q": [1.0, 0.0] } ],
            "r_values": [10.0],
            "grid": { "radii": 4, "angles": 8, "outer_radius": 0.9 },
            "tolerances": { "solver": 1e-13, "check_slack": 1e-9 },
            "checks": ["starlike_disk"],
            "output_dir": "out"
        }"#;
        let cfg = SuiteConfig::from_json_str(json).unwrap();
        assert!(cfg.validate().is_ok());

        let bad = json.replace("starlike_disk", "no_such_check");
        assert!(matches!(
            SuiteConfig::from_json_str(&bad),
            Err(Error::Config { .. })
        ));
    }

    #[test]
    fn precondition_violation_names_the_field() {
        let json = r#"{
            "generators": [ { "q": [1.0, 0.0] } ],
            "r_values": [3.0],
            "grid": { "radii": 4, "angles": 8, "outer_radius": 0.9 },
            "tolerances": { "solver": 1e-13, "check_slack": 1e-9 },
            "checks": ["starlike_disk"],
            "output_dir": "out"
        }"#;
        let cfg = SuiteConfig::from_json_str(json).unwrap();
        match cfg.validate() {
            Err(Error::Config { path, message }) => {
                assert_eq!(path, "r_values[0]");
                assert!(message.contains("r0"), "message: {message}");
            }
            other => panic!("expected a config error, got {other:?}"),
        }
    }

    #[test]
    fn suite_runs_and_is_byte_identical() {
        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        let mut cfg_a = tiny_config(dir_a.path());
        let summary_a = run_suite(&cfg_a).unwrap();
        assert!(summary_a.all_passed(), "failed: {}", summary_a.failed);
        let cfg_b = {
            cfg_a.output_dir = dir_b.path().to_path_buf();
            cfg_a
        };
        let summary_b = run_suite(&cfg_b).unwrap();
        assert_eq!(summary_a.total, summary_b.total);

        let mut names: Vec<_> = fs::read_dir(dir_a.path())
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        names.sort();
        assert!(names.iter().any(|n| n.to_string_lossy() == "summary.json"));
        for name in names {
            let a = fs::read(dir_a.path().join(&name)).unwrap();
            let b = fs::read(dir_b.path().join(&name)).unwrap();
            assert_eq!(a, b, "file {name:?} differs between runs");
        }
    }
}
