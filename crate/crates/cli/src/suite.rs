//! A directory of scenarios run in a worker pool, aggregated per criterion.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use morse_index::bounds::{calibrate, theorem1_bound, BoundConfig, Calibration, CalibrationSample};
use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{CheckOutcome, SubCheck};
use crate::error::CliError;
use crate::output::write_json;
use crate::pipeline::{run_scenario, RunOptions, ScenarioResult};
use crate::scenario::{CheckId, Scenario};

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub seed: Option<u64>,
    pub out_dir: PathBuf,
    /// Worker threads; rayon's default when `None`.
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotRun,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionRow {
    pub id: CheckId,
    pub title: &'static str,
    pub status: Status,
    pub scenarios: Vec<String>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioEntry {
    pub file: String,
    pub name: Option<String>,
    pub passed: bool,
    pub error: Option<String>,
    pub checks: Vec<CheckOutcome>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: Option<u64>,
    pub criteria: Vec<CriterionRow>,
    pub scenarios: Vec<ScenarioEntry>,
    pub calibration: Option<Calibration>,
}

impl SuiteReport {
    pub fn failures(&self) -> Vec<String> {
        self.scenarios
            .iter()
            .filter(|s| !s.passed)
            .map(|s| match &s.error {
                Some(e) => format!("{}: {e}", s.file),
                None => {
                    let ids: Vec<String> = s.checks.iter().filter(|c| !c.passed).map(|c| c.id.to_string()).collect();
                    format!("{}: failed {}", s.file, ids.join(", "))
                }
            })
            .chain(
                self.criteria
                    .iter()
                    .filter(|c| c.status == Status::Fail && c.scenarios.is_empty())
                    .map(|c| format!("{}: {}", c.id, c.failures.join("; "))),
            )
            .collect()
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.scenarios.iter().all(|s| s.passed) && self.criteria.iter().all(|c| c.status != Status::Fail) {
            0
        } else {
            1
        }
    }
}

/// Scenario files (`*.json`) in `dir`, sorted by name.
pub fn scenario_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let rd = std::fs::read_dir(dir).map_err(|e| CliError::Config(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in rd {
        let p = entry.map_err(|e| CliError::io(dir, e))?.path();
        if p.is_file() && p.extension().is_some_and(|e| e == "json") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Config(format!("--jobs: {e}")))
}

fn file_label(p: &Path) -> String {
    p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
}

type Loaded = (PathBuf, Result<(Scenario, ScenarioResult), CliError>);

fn run_all(files: &[PathBuf], seed: Option<u64>, out_dir: &Path, jobs: Option<usize>) -> Result<Vec<Loaded>, CliError> {
    let opts = RunOptions { seed, out_dir: out_dir.to_path_buf() };
    Ok(pool(jobs)?.install(|| {
        files
            .par_iter()
            .map(|f| {
                let base = f.parent().unwrap_or(Path::new("."));
                let r = Scenario::load(f).and_then(|sc| run_scenario(&sc, base, &opts).map(|r| (sc, r)));
                (f.clone(), r)
            })
            .collect()
    }))
}

/// Reruns `sc` into a scratch directory and compares every output file.
fn determinism(
    sc: &Scenario,
    base: &Path,
    first: &ScenarioResult,
    seed: Option<u64>,
    out_dir: &Path,
) -> Result<CheckOutcome, CliError> {
    let scratch = out_dir.join(".rerun");
    let second = run_scenario(sc, base, &RunOptions { seed, out_dir: scratch.clone() })?;
    let mut subs = Vec::new();
    for p in output_files(&first.out_dir)? {
        let rel = p.strip_prefix(&first.out_dir).expect("inside").to_path_buf();
        let a = std::fs::read(&p).map_err(|e| CliError::io(&p, e))?;
        let q = second.out_dir.join(&rel);
        let same = std::fs::read(&q).is_ok_and(|b| b == a);
        subs.push(SubCheck {
            name: rel.display().to_string(),
            passed: same,
            detail: if same { "identical" } else { "differs" }.into(),
        });
    }
    std::fs::remove_dir_all(&scratch).map_err(|e| CliError::io(&scratch, e))?;
    Ok(CheckOutcome::new(CheckId::AC11, subs))
}

fn output_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

/// Smallest constants for which every oracle count in `samples` respects
/// the main bound, plus the check that they do.
fn calibrated_check(samples: &[CalibrationSample], c: f64) -> (Calibration, Vec<SubCheck>) {
    let cal = calibrate(samples, c);
    let subs = samples
        .iter()
        .map(|s| {
            let bound = theorem1_bound(&s.g, &s.d, &cal.config).total;
            SubCheck {
                name: format!("{}: count <= bound (calibrated)", s.label),
                passed: s.count as f64 <= bound * (1.0 + 1e-12),
                detail: format!("count {} vs bound {bound:.4}", s.count),
            }
        })
        .collect();
    (cal, subs)
}

/// Runs every scenario in `dir` and writes `acceptance.json` to the output directory.
pub fn run_suite(dir: &Path, opts: &SuiteOptions) -> Result<SuiteReport, CliError> {
    let files = scenario_files(dir)?;
    let results = run_all(&files, opts.seed, &opts.out_dir, opts.jobs)?;

    let mut entries = Vec::new();
    let mut samples = Vec::new();
    let mut c = BoundConfig::default().c;
    for (f, r) in &results {
        let file = file_label(f);
        match r {
            Err(e) => entries.push(ScenarioEntry {
                file,
                name: None,
                passed: false,
                error: Some(e.to_string()),
                checks: Vec::new(),
                notes: Vec::new(),
            }),
            Ok((sc, res)) => {
                let mut checks = res.checks.clone();
                if sc.checks.contains(&CheckId::AC11) {
                    let base = f.parent().unwrap_or(Path::new("."));
                    checks.push(determinism(sc, base, res, opts.seed, &opts.out_dir)?);
                }
                if sc.checks.contains(&CheckId::AC7) {
                    samples.extend(res.samples.iter().cloned());
                    if let Some(b) = sc.bound {
                        c = b.c;
                    }
                }
                entries.push(ScenarioEntry {
                    file,
                    name: Some(res.name.clone()),
                    passed: checks.iter().all(|c| c.passed),
                    error: None,
                    checks,
                    notes: res.notes.clone(),
                });
            }
        }
    }

    let (calibration, calibrated) = if samples.is_empty() {
        (None, Vec::new())
    } else {
        let (cal, subs) = calibrated_check(&samples, c);
        (Some(cal), subs)
    };

    let mut by_id: BTreeMap<CheckId, (Vec<String>, Vec<String>)> = BTreeMap::new();
    for e in &entries {
        for ch in &e.checks {
            let slot = by_id.entry(ch.id).or_default();
            slot.0.push(e.name.clone().unwrap_or_default());
            slot.1.extend(ch.failures().into_iter().map(|f| format!("{}: {f}", e.file)));
        }
    }
    if let Some(slot) = by_id.get_mut(&CheckId::AC7) {
        slot.1.extend(calibrated.iter().filter(|s| !s.passed).map(|s| format!("{}: {}", s.name, s.detail)));
    }
    let criteria = CheckId::ALL
        .iter()
        .map(|&id| {
            let (scenarios, failures) = by_id.remove(&id).unwrap_or_default();
            let status = if scenarios.is_empty() {
                Status::NotRun
            } else if failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
            CriterionRow { id, title: id.title(), status, scenarios, failures }
        })
        .collect();

    let report = SuiteReport { seed: opts.seed, criteria, scenarios: entries, calibration };
    write_json(&opts.out_dir.join("acceptance.json"), &report)?;
    Ok(report)
}

/// Fits `A`, `B` over every oracle count in `dir` and writes `calibration.json`.
pub fn calibrate_dir(dir: &Path, opts: &SuiteOptions) -> Result<Calibration, CliError> {
    let files = scenario_files(dir)?;
    let results = run_all(&files, opts.seed, &opts.out_dir, opts.jobs)?;
    let mut samples = Vec::new();
    let mut c = BoundConfig::default().c;
    for (_, r) in results {
        let (sc, res) = r?;
        if let Some(b) = sc.bound {
            c = b.c;
        }
        samples.extend(res.samples);
    }
    let cal = calibrate(&samples, c);
    write_json(&opts.out_dir.join("calibration.json"), &cal)?;
    Ok(cal)
}
