//! Scenario files: what to build, what to compute and which checks to run.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use morse_index::bounds::BoundConfig;
use morse_index::measure::{
    generate_circle, generate_ifs, generate_lebesgue, generate_polyline, read_measure, verify_ahlfors, AtomicMeasure,
    Point, Rect, Similarity,
};
use morse_index::potential::PotentialField;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub measure: Option<MeasureSpec>,
    #[serde(default)]
    pub potential: Option<PotentialSpec>,
    /// Coupling grid, positive and strictly increasing.
    #[serde(default)]
    pub gammas: Vec<f64>,
    #[serde(default)]
    pub mesh: Option<MeshParams>,
    #[serde(default)]
    pub radial: Option<RadialParams>,
    #[serde(default)]
    pub bound: Option<BoundConfig>,
    #[serde(default)]
    pub checks: Vec<CheckId>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureSpec {
    pub generator: Generator,
    /// Declared dimension; must agree with the generator.
    pub alpha: f64,
    /// Ahlfors constants; estimated from the atoms when absent.
    #[serde(default)]
    pub c0: Option<f64>,
    #[serde(default)]
    pub c1: Option<f64>,
    /// Multiplies every position.
    #[serde(default)]
    pub scale: Option<f64>,
    #[serde(default)]
    pub translate: Option<Point>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generator {
    Circle {
        #[serde(default)]
        center: Point,
        radius: f64,
        n: usize,
    },
    /// Concentric circles about the origin; `density` atoms per unit length.
    Circles {
        radii: Vec<f64>,
        density: f64,
    },
    Lebesgue {
        min: Point,
        max: Point,
        resolution: usize,
    },
    Polyline {
        vertices: Vec<Point>,
        resolution: f64,
    },
    Ifs {
        maps: Vec<MapSpec>,
        depth: u32,
    },
    /// Four maps of ratio 1/3 onto the corners of the unit square.
    CantorDust {
        depth: u32,
    },
    File {
        path: String,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub ratio: f64,
    #[serde(default)]
    pub rotation: f64,
    pub translation: Point,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PotentialSpec {
    Constant {
        value: f64,
    },
    /// Piecewise linear in `|x|` through `[r, V]` knots, constant beyond them.
    Radial {
        knots: Vec<[f64; 2]>,
    },
    /// One value per atom.
    Table {
        values: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshParams {
    /// Domain radius `L`.
    pub radius: f64,
    pub h: f64,
    #[serde(default)]
    pub r_min: Option<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadialParams {
    pub window: [f64; 2],
    pub h: f64,
    #[serde(default = "default_max_mode")]
    pub max_mode: u32,
}

fn default_max_mode() -> u32 {
    64
}

/// Acceptance criterion identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CheckId {
    AC1,
    AC2,
    AC3,
    AC4,
    AC5,
    AC6,
    AC7,
    AC8,
    AC9,
    AC10,
    AC11,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        Self::AC1,
        Self::AC2,
        Self::AC3,
        Self::AC4,
        Self::AC5,
        Self::AC6,
        Self::AC7,
        Self::AC8,
        Self::AC9,
        Self::AC10,
        Self::AC11,
    ];

    pub fn title(&self) -> &'static str {
        match self {
            Self::AC1 => "norm equivalence",
            Self::AC2 => "dual norm against brute-force maximization",
            Self::AC3 => "norm lemma suites",
            Self::AC4 => "radialization identity",
            Self::AC5 => "radial bound with printed constants",
            Self::AC6 => "delta-well calibration",
            Self::AC7 => "one bound state and calibrated bound",
            Self::AC8 => "coupling-scan shape",
            Self::AC9 => "sharpness construction",
            Self::AC10 => "asymptotics",
            Self::AC11 => "determinism",
        }
    }

    /// Checks that read the scenario's measure and potential.
    pub fn needs_measure(&self) -> bool {
        matches!(self, Self::AC4 | Self::AC5 | Self::AC7 | Self::AC8)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Scenario {
    pub fn from_json(text: &str, origin: &str) -> Result<Self, CliError> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| CliError::Config(format!("{origin}: {e}")))?;
        s.validate().map_err(|e| CliError::Config(format!("{origin}: {e}")))?;
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: cannot read: {e}", path.display())))?;
        Self::from_json(&text, &path.display().to_string())
    }

    fn validate(&self) -> Result<(), String> {
        if self.name.is_empty() || self.name.contains(['/', '\\']) {
            return Err(format!("field `name` must be a plain non-empty file name, got {:?}", self.name));
        }
        if self.gammas.iter().any(|g| !(*g > 0.0 && g.is_finite())) || self.gammas.windows(2).any(|w| w[1] <= w[0]) {
            return Err("field `gammas` must be positive and strictly increasing".into());
        }
        if let Some(b) = &self.bound {
            b.validate().map_err(|e| format!("field `bound`: {e}"))?;
        }
        let needs: BTreeSet<CheckId> = self.checks.iter().copied().filter(CheckId::needs_measure).collect();
        if !needs.is_empty() && (self.measure.is_none() || self.potential.is_none()) {
            return Err(format!("checks {needs:?} need both `measure` and `potential`"));
        }
        if self.potential.is_some() && self.measure.is_none() {
            return Err("field `potential` given without `measure`".into());
        }
        if self.mesh.is_some() && self.gammas.is_empty() {
            return Err("field `mesh` needs a non-empty `gammas` grid".into());
        }
        if let Some(m) = &self.mesh {
            if !(m.radius > 0.0 && m.h > 0.0 && m.h <= 1.0) {
                return Err("field `mesh`: need radius > 0 and h in (0, 1]".into());
            }
        }
        if let Some(r) = &self.radial {
            if !(r.window[1] > r.window[0] && r.h > 0.0) {
                return Err("field `radial`: need window[1] > window[0] and h > 0".into());
            }
        }
        for (id, need) in [
            (CheckId::AC5, self.radial.is_some() && !self.gammas.is_empty()),
            (CheckId::AC7, self.mesh.is_some()),
            (CheckId::AC8, self.gammas.len() >= 2),
        ] {
            if self.checks.contains(&id) && !need {
                return Err(format!(
                    "check {id} needs {}",
                    match id {
                        CheckId::AC5 => "`radial` and `gammas`",
                        CheckId::AC7 => "`mesh`",
                        _ => "at least two `gammas`",
                    }
                ));
            }
        }
        Ok(())
    }
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl MeasureSpec {
    /// Generates the atoms, checks the declared `alpha` and attaches Ahlfors
    /// constants (given or estimated).
    pub fn build(&self, base_dir: &Path) -> Result<AtomicMeasure, CliError> {
        let mut m = match &self.generator {
            Generator::Circle { center, radius, n } => generate_circle(*center, *radius, *n)?,
            Generator::Circles { radii, density } => {
                if radii.is_empty() || !(*density > 0.0) {
                    return Err(config("measure.generator: circles need radii and a positive density"));
                }
                let mut out: Option<AtomicMeasure> = None;
                for &r in radii {
                    let n = ((2.0 * PI * r * density).ceil() as usize).max(16);
                    let c = generate_circle([0.0, 0.0], r, n)?;
                    out = Some(match out {
                        None => c,
                        Some(o) => o.union(&c)?,
                    });
                }
                out.expect("non-empty radii")
            }
            Generator::Lebesgue { min, max, resolution } => {
                generate_lebesgue(Rect { min: *min, max: *max }, *resolution)?
            }
            Generator::Polyline { vertices, resolution } => generate_polyline(vertices, *resolution)?,
            Generator::Ifs { maps, depth } => {
                let maps: Vec<Similarity> = maps
                    .iter()
                    .map(|m| Similarity { ratio: m.ratio, rotation: m.rotation, translation: m.translation })
                    .collect();
                generate_ifs(&maps, *depth)?
            }
            Generator::CantorDust { depth } => generate_ifs(&cantor_dust_maps(), *depth)?,
            Generator::File { path } => {
                let p = base_dir.join(path);
                let f = std::fs::File::open(&p)
                    .map_err(|e| config(format!("measure.generator.path {}: {e}", p.display())))?;
                read_measure(std::io::BufReader::new(f))?
            }
        };
        if (m.alpha() - self.alpha).abs() > 1e-9 * self.alpha.max(1.0) {
            return Err(config(format!(
                "field `measure.alpha` = {} disagrees with the generator's dimension {}",
                self.alpha,
                m.alpha()
            )));
        }
        if let Some(s) = self.scale {
            m = m.transformed(s, 0.0)?;
        }
        if let Some(t) = self.translate {
            m = m.translated(t);
        }
        let (c0, c1) = match (self.c0, self.c1, m.c0_est(), m.c1_est()) {
            (Some(a), Some(b), _, _) => (a, b),
            (None, None, Some(a), Some(b)) => (a, b),
            (None, None, _, _) => {
                let est = verify_ahlfors(&m, 64, &ahlfors_radii(&m))?;
                (est.c0, est.c1)
            }
            _ => return Err(config("fields `measure.c0` and `measure.c1` must be given together")),
        };
        Ok(m.with_ahlfors(c0, c1)?)
    }
}

/// Eight radii from a few cells up to the diameter, geometrically spaced.
fn ahlfors_radii(m: &AtomicMeasure) -> Vec<f64> {
    let d = m.diam_support();
    let lo = (4.0 * m.cell_size()).min(0.5 * d).max(d * 1e-6);
    (0..8).map(|i| lo * (d / lo).powf(i as f64 / 7.0)).map(|r| r.min(d)).collect()
}

pub fn cantor_dust_maps() -> Vec<Similarity> {
    [[0.0, 0.0], [2.0 / 3.0, 0.0], [0.0, 2.0 / 3.0], [2.0 / 3.0, 2.0 / 3.0]]
        .iter()
        .map(|&t| Similarity::new(1.0 / 3.0, t))
        .collect()
}

impl PotentialSpec {
    pub fn build(&self, measure: &AtomicMeasure) -> Result<PotentialField, CliError> {
        Ok(match self {
            Self::Constant { value } => PotentialField::constant(measure, *value)?,
            Self::Radial { knots } => {
                if knots.is_empty() || knots.windows(2).any(|w| w[1][0] <= w[0][0]) {
                    return Err(config("potential.knots must be non-empty with increasing radii"));
                }
                let knots = knots.clone();
                PotentialField::radial(measure, move |r| interpolate(&knots, r))?
            }
            Self::Table { values } => PotentialField::from_values(measure, values.clone())?,
        })
    }
}

fn interpolate(knots: &[[f64; 2]], r: f64) -> f64 {
    let first = knots[0];
    let last = knots[knots.len() - 1];
    if r <= first[0] {
        return first[1];
    }
    if r >= last[0] {
        return last[1];
    }
    let i = knots.partition_point(|k| k[0] <= r);
    let (a, b) = (knots[i - 1], knots[i]);
    a[1] + (b[1] - a[1]) * (r - a[0]) / (b[0] - a[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_alpha_is_named() {
        let text = r#"{
  "name": "x",
  "measure": { "generator": { "kind": "circle", "radius": 1.0, "n": 10 } }
}"#;
        let e = Scenario::from_json(text, "x.json").unwrap_err().to_string();
        assert!(e.contains("alpha") && e.contains("line 3"), "{e}");
    }

    #[test]
    fn unknown_fields_rejected() {
        let e = Scenario::from_json(r#"{"name": "x", "gamma": [1]}"#, "x.json").unwrap_err().to_string();
        assert!(e.contains("gamma"), "{e}");
    }

    #[test]
    fn alpha_must_match_generator() {
        let spec = MeasureSpec {
            generator: Generator::Circle { center: [0.0, 0.0], radius: 1.0, n: 50 },
            alpha: 2.0,
            c0: None,
            c1: None,
            scale: None,
            translate: None,
        };
        assert!(matches!(spec.build(Path::new(".")), Err(CliError::Config(_))));
    }

    #[test]
    fn radial_knots_interpolate() {
        let k = [[1.0, 2.0], [3.0, 6.0]];
        assert_eq!(interpolate(&k, 0.5), 2.0);
        assert_eq!(interpolate(&k, 2.0), 4.0);
        assert_eq!(interpolate(&k, 9.0), 6.0);
    }

    #[test]
    fn gamma_grid_validated() {
        let e = Scenario::from_json(r#"{"name": "x", "gammas": [1, 1]}"#, "x.json").unwrap_err();
        assert!(e.to_string().contains("gammas"));
    }
}
