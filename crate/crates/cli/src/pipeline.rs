//! One scenario from JSON to output files.

use std::path::{Path, PathBuf};

use morse_index::bounds::{
    corollary_bound, coupling_scan, domination_constant, radial_bounds, theorem1_bound, BoundConfig, BoundReport,
    CalibrationSample, CorollaryReport, RadialBound, ScanSummary,
};
use morse_index::decomposition::{
    build_annuli, cal_g_sequence, d_sequence, g_sequence, radialize, sequence_rows, write_sequences_csv, AnnularScheme,
    SchemeOptions, Sequence,
};
use morse_index::measure::AtomicMeasure;
use morse_index::oracle::{assemble_2d, negative_inertia, split_counts, MeshSpec};
use morse_index::Error;
use serde::Serialize;

use crate::checks::{self, CheckOutcome, RadialRow};
use crate::error::CliError;
use crate::output::{write_atomic, write_json};
use crate::scenario::{CheckId, Scenario};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Replaces the scenario's seed.
    pub seed: Option<u64>,
    /// Directory receiving `<name>/…`.
    pub out_dir: PathBuf,
}

/// Everything the suite needs from one scenario.
#[derive(Debug, Clone)]
pub struct ScenarioResult {
    pub name: String,
    pub out_dir: PathBuf,
    pub checks: Vec<CheckOutcome>,
    pub notes: Vec<String>,
    /// One sample per coupling value when the oracle ran.
    pub samples: Vec<CalibrationSample>,
}

impl ScenarioResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Serialize)]
struct BoundsRow {
    gamma: f64,
    theorem: BoundReport,
    radial: RadialBound,
    corollary: CorollaryReport,
    domination_b: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
struct BoundsFile<'a> {
    config: BoundConfig,
    eta: f64,
    ratio: f64,
    rows: Vec<BoundsRow>,
    scan: Option<&'a ScanSummary>,
}

#[derive(Debug, Clone, Serialize)]
struct Summary<'a> {
    name: &'a str,
    seed: u64,
    passed: bool,
    notes: &'a [String],
    checks: &'a [CheckOutcome],
}

struct OracleRow {
    gamma: f64,
    h: f64,
    dim: usize,
    coarse: usize,
    fine: usize,
    split: Option<(usize, usize)>,
}

fn as_config(what: &str) -> impl Fn(CliError) -> CliError + '_ {
    move |e| match e {
        CliError::Core(inner) => CliError::Config(format!("{what}: {inner}")),
        other => other,
    }
}

fn scaled(s: &Sequence, c: f64) -> Sequence {
    s.iter().map(|(&n, &x)| (n, c * x)).collect()
}

/// Annuli from the measure; supports of diameter at most 1 fall back to the
/// unbounded scheme with `η = 1`.
fn scheme_for(m: &AtomicMeasure, notes: &mut Vec<String>) -> Result<AnnularScheme, CliError> {
    match build_annuli(m, &SchemeOptions::default()) {
        Ok(s) => Ok(s),
        Err(Error::Precondition(msg)) if m.diam_support() <= 1.0 => {
            notes.push(format!("{msg}; annuli use eta = 1"));
            let ratio = m.c1_est().zip(m.c0_est()).map(|(c1, c0)| c1 / c0).unwrap_or(1.0);
            Ok(AnnularScheme::new(None, ratio, m.alpha())?.assign(m))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn run_scenario(sc: &Scenario, base_dir: &Path, opts: &RunOptions) -> Result<ScenarioResult, CliError> {
    let seed = opts.seed.or(sc.seed).unwrap_or(0);
    let out = opts.out_dir.join(&sc.name);
    std::fs::create_dir_all(&out).map_err(|e| CliError::io(&out, e))?;
    let config = sc.bound.unwrap_or_default();
    let mut notes = Vec::new();
    let mut outcomes = Vec::new();
    let mut samples = Vec::new();

    for id in [CheckId::AC1, CheckId::AC2, CheckId::AC3, CheckId::AC6] {
        if sc.checks.contains(&id) {
            outcomes.push(match id {
                CheckId::AC1 => checks::norm_equivalence(seed)?,
                CheckId::AC2 => checks::dual_brute_force(seed)?,
                CheckId::AC3 => checks::norm_lemmas(seed)?,
                _ => checks::delta_well()?,
            });
        }
    }
    if sc.checks.contains(&CheckId::AC9) {
        let (c, art) = checks::sharpness()?;
        write_json(&out.join("sharpness.json"), &art)?;
        outcomes.push(c);
    }
    if sc.checks.contains(&CheckId::AC10) {
        let (c, art) = checks::asymptotics()?;
        write_json(&out.join("asymptotics.json"), &art)?;
        outcomes.push(c);
    }

    if let (Some(ms), Some(ps)) = (&sc.measure, &sc.potential) {
        let m = ms.build(base_dir).map_err(as_config("measure"))?;
        let v = ps.build(&m).map_err(as_config("potential"))?;
        let scheme = scheme_for(&m, &mut notes)?;
        let g = g_sequence(&v, &m);
        let d = d_sequence(&v, &m, &scheme)?;
        let mut csv = Vec::new();
        write_sequences_csv(&sequence_rows(&m, &scheme, &g, &d), &mut csv).map_err(|e| CliError::io(&out, e))?;
        write_atomic(&out.join("sequences.csv"), &csv)?;

        if sc.checks.contains(&CheckId::AC4) {
            outcomes.push(checks::radialization(&v, &m));
        }

        let nu = radialize(&v, &m);
        let cal_g = cal_g_sequence(&nu);
        let cor1 = corollary_bound(&v, &m, &config)?;
        // G, D and both corollary integrals are 1-homogeneous in V.
        let bounds: Vec<BoundsRow> = sc
            .gammas
            .iter()
            .map(|&gamma| {
                let theorem = theorem1_bound(&scaled(&g, gamma), &scaled(&d, gamma), &config);
                let (log_term, norm_term) = (gamma * cor1.log_term, gamma * cor1.norm_term);
                let corollary = CorollaryReport { log_term, norm_term, total: 1.0 + config.b * (log_term + norm_term) };
                BoundsRow {
                    gamma,
                    domination_b: domination_constant(theorem.total, &corollary),
                    radial: radial_bounds(&scaled(&cal_g, gamma)),
                    theorem,
                    corollary,
                }
            })
            .collect();

        let scan = if sc.checks.contains(&CheckId::AC8) {
            let s = coupling_scan(&v, &m, &scheme, &sc.gammas, &config)?;
            outcomes.push(checks::coupling_shape(&s, &g, seed));
            Some(s)
        } else {
            None
        };
        write_json(
            &out.join("bounds.json"),
            &BoundsFile { config, eta: scheme.eta(), ratio: scheme.ratio(), rows: bounds.clone(), scan: scan.as_ref() },
        )?;

        let mut oracle_rows = Vec::new();
        if let Some(mp) = sc.mesh {
            let mut spec = MeshSpec::for_atoms(m.points(), mp.radius, mp.h);
            if let Some(r) = mp.r_min {
                spec.r_min = r;
            }
            let (coarse, fine) = rayon::join(|| assemble_2d(&v, &m, spec), || assemble_2d(&v, &m, spec.refined(1)));
            let (coarse, fine) = (coarse?, fine?);
            for &gamma in &sc.gammas {
                oracle_rows.push(OracleRow {
                    gamma,
                    h: fine.meta.h,
                    dim: fine.meta.dim,
                    coarse: negative_inertia(&coarse, gamma)?.negative_count,
                    fine: negative_inertia(&fine, gamma)?.negative_count,
                    split: None,
                });
            }
        }
        let mut radial_rows = Vec::new();
        if let Some(rp) = sc.radial {
            for (i, &gamma) in sc.gammas.iter().enumerate() {
                let split = split_counts(&nu, (rp.window[0], rp.window[1]), rp.h, gamma, rp.max_mode)?;
                radial_rows.push(RadialRow {
                    gamma,
                    radial_count: split.radial,
                    nonradial_count: split.nonradial,
                    cal_g_bound: bounds[i].radial.cal_g_form,
                });
                if let Some(row) = oracle_rows.get_mut(i) {
                    row.split = Some((split.radial, split.nonradial));
                }
            }
            if sc.checks.contains(&CheckId::AC5) {
                outcomes.push(checks::radial_bound_check(&radial_rows));
            }
        }
        if !oracle_rows.is_empty() {
            write_atomic(&out.join("oracle.csv"), oracle_csv(&oracle_rows).as_bytes())?;
            for (row, b) in oracle_rows.iter().zip(&bounds) {
                samples.push(CalibrationSample {
                    label: format!("{}@{}", sc.name, row.gamma),
                    g: scaled(&g, row.gamma),
                    d: scaled(&d, row.gamma),
                    corollary_integral: b.corollary.log_term + b.corollary.norm_term,
                    count: row.fine,
                });
            }
            if oracle_rows.iter().any(|r| r.fine < r.coarse) {
                notes.push("refined mesh counted fewer eigenvalues than the coarse one".into());
            }
        }
        if !radial_rows.is_empty() {
            let mut s = String::from("gamma,radial,nonradial,cal_g_bound\n");
            for r in &radial_rows {
                s += &format!("{},{},{},{:e}\n", r.gamma, r.radial_count, r.nonradial_count, r.cal_g_bound);
            }
            write_atomic(&out.join("radial.csv"), s.as_bytes())?;
        }
        if sc.checks.contains(&CheckId::AC7) {
            let rows: Vec<(f64, usize, f64)> =
                oracle_rows.iter().zip(&bounds).map(|(r, b)| (r.gamma, r.fine, b.theorem.total)).collect();
            let label = serde_json::to_value(config.provenance)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default();
            outcomes.push(checks::bound_state_check(&rows, &label));
        }
    }

    outcomes.sort_by_key(|c| c.id);
    write_json(
        &out.join("summary.json"),
        &Summary { name: &sc.name, seed, passed: outcomes.iter().all(|c| c.passed), notes: &notes, checks: &outcomes },
    )?;
    Ok(ScenarioResult { name: sc.name.clone(), out_dir: out, checks: outcomes, notes, samples })
}

fn oracle_csv(rows: &[OracleRow]) -> String {
    let mut s = String::from("gamma,h,dim,count_coarse,count_fine,radial,nonradial\n");
    for r in rows {
        let (a, b) = r.split.map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
        s += &format!("{},{:e},{},{},{},{},{}\n", r.gamma, r.h, r.dim, r.coarse, r.fine, a, b);
    }
    s
}
