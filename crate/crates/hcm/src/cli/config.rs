//! Run configuration: TOML with named sections, hand-editable and
//! diff-friendly. All config values use workshop units (mm, MPa, grams,
//! degrees, µN·m); conversion to SI happens here and nowhere else.

use serde::{Deserialize, Serialize};

use super::dataset;
use super::CliError;
use crate::buckling::AmplitudeClosure;
use crate::design::{DesignSpace, ParamRange};
use crate::grasp::{GripperForces, ObjectKind, ObjectSpec, SheetProperties};
use crate::model::{AssemblyConfig, Material, RibbonGeometry, SectionMode, PETG_DENSITY};

pub const MM: f64 = 1e-3;
pub const MPA: f64 = 1e6;
pub const GRAM: f64 = 1e-3;
/// µN·m (bending rigidity per unit width) to N·m.
pub const MICRO_NM: f64 = 1e-6;

/// A scalar or an inclusive range with step, both in config units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueOrRange {
    Scalar(f64),
    Range { from: f64, to: f64, step: f64 },
}

impl ValueOrRange {
    pub fn scalar(&self, field: &str) -> Result<f64, CliError> {
        match self {
            ValueOrRange::Scalar(v) => Ok(*v),
            ValueOrRange::Range { .. } => Err(CliError::Parse(format!(
                "{field}: expected a point value, found a range (ranges are only \
                 valid for `optimize` and the swept axis of `sweep`)"
            ))),
        }
    }

    pub fn to_param_range(&self, scale: f64) -> ParamRange {
        match self {
            ValueOrRange::Scalar(v) => ParamRange::Point(v * scale),
            ValueOrRange::Range { from, to, step } => ParamRange::Range {
                lo: from * scale,
                hi: to * scale,
                step: step * scale,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialSection {
    pub youngs_modulus_mpa: f64,
    pub poisson_ratio: f64,
    /// Defaults to the PETG stock density, 1270 kg/m³.
    #[serde(default = "default_density")]
    pub density_kg_m3: f64,
}

fn default_density() -> f64 {
    PETG_DENSITY
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySection {
    pub width_h_mm: ValueOrRange,
    pub thickness_t_mm: ValueOrRange,
    pub half_length_l_mm: ValueOrRange,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalibrationSection {
    pub d_ref_mm: f64,
    pub w_ref_mm: f64,
    pub tilt_ref_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssemblySection {
    pub install_gap_lf_mm: f64,
    pub prestress_d_mm: ValueOrRange,
    #[serde(default)]
    pub tilt_deg: f64,
    /// "thin-strip" (default) or "as-printed".
    #[serde(default = "default_section_mode")]
    pub section_mode: String,
    /// "shortening" (default) or "calibrated".
    #[serde(default = "default_closure")]
    pub closure: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub calibration: Option<CalibrationSection>,
}

fn default_section_mode() -> String {
    "thin-strip".to_string()
}

fn default_closure() -> String {
    "shortening".to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ObjectSection {
    /// Key into the bundled reference dataset; fills every field the
    /// section leaves unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dataset_key: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass_g: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_finger_object: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_object_ground: Option<f64>,
    /// Bending rigidity per unit engaged width, µN·m (sheets only).
    #[serde(
        default,
        rename = "rigidity_per_width_uNm",
        skip_serializing_if = "Option::is_none"
    )]
    pub rigidity_per_width_unm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engaged_width_mm: Option<f64>,
    /// Sustained pinch force F, N. Defaults to the dataset holding force.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pinch_force_n: Option<f64>,
    /// Snap-instant peak force F_max, N. Defaults to the pinch force
    /// (conservative).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub peak_force_n: Option<f64>,
    /// Finger-object normal force N. Defaults to the pinch force.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_force_n: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    /// "csv" or "json"; commands fall back to their native format when
    /// unset (text for analyze, csv for sweep, json for grasp-check).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    /// Significant digits in rendered numbers; the HCM_PRECISION
    /// environment variable overrides it.
    #[serde(default = "default_precision")]
    pub precision: usize,
}

fn default_precision() -> usize {
    9
}

impl Default for OutputSection {
    fn default() -> Self {
        Self {
            format: None,
            path: None,
            precision: default_precision(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub material: MaterialSection,
    pub geometry: GeometrySection,
    pub assembly: AssemblySection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<ObjectSection>,
    #[serde(default)]
    pub output: OutputSection,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(format!("config: {e}")))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Parse(format!("config {}: {e}", path.display()))
        })?;
        Self::from_toml(&text)
    }

    pub fn dump(&self) -> Result<String, CliError> {
        toml::to_string_pretty(self).map_err(|e| CliError::Compute(format!("config dump: {e}")))
    }

    pub fn material(&self) -> Result<Material, CliError> {
        Material::new(
            self.material.youngs_modulus_mpa * MPA,
            self.material.poisson_ratio,
            self.material.density_kg_m3,
        )
        .map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn section_mode(&self) -> Result<SectionMode, CliError> {
        self.assembly.section_mode.parse().map_err(CliError::Parse)
    }

    pub fn closure(&self) -> Result<AmplitudeClosure, CliError> {
        match self.assembly.closure.to_ascii_lowercase().as_str() {
            "shortening" => Ok(AmplitudeClosure::Shortening),
            "calibrated" => {
                let cal = self.assembly.calibration.as_ref().ok_or_else(|| {
                    CliError::Parse(
                        "assembly.closure = \"calibrated\" requires an [assembly.calibration] \
                         section (d_ref_mm, w_ref_mm, tilt_ref_deg)"
                            .to_string(),
                    )
                })?;
                Ok(AmplitudeClosure::Calibrated {
                    d_ref: cal.d_ref_mm * MM,
                    w_ref: cal.w_ref_mm * MM,
                    tilt_ref: cal.tilt_ref_deg.to_radians(),
                })
            }
            other => Err(CliError::Parse(format!(
                "assembly.closure: unknown closure '{other}' (expected 'shortening' or 'calibrated')"
            ))),
        }
    }

    /// Point geometry for analyze/grasp-check; rejects ranges.
    pub fn geometry(&self) -> Result<RibbonGeometry, CliError> {
        RibbonGeometry::new(
            self.geometry.width_h_mm.scalar("geometry.width_h_mm")? * MM,
            self.geometry.thickness_t_mm.scalar("geometry.thickness_t_mm")? * MM,
            self.geometry.half_length_l_mm.scalar("geometry.half_length_l_mm")? * MM,
        )
        .map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Point assembly for analyze/grasp-check; rejects ranges.
    pub fn assembly(&self) -> Result<AssemblyConfig, CliError> {
        AssemblyConfig::new(
            self.assembly.install_gap_lf_mm * MM,
            self.assembly.prestress_d_mm.scalar("assembly.prestress_d_mm")? * MM,
            self.assembly.tilt_deg.to_radians(),
            self.closure()?,
        )
        .map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Design space for optimize; ranges allowed on D, t, h, l.
    pub fn design_space(&self) -> Result<DesignSpace, CliError> {
        let space = DesignSpace {
            prestress_d: self.assembly.prestress_d_mm.to_param_range(MM),
            thickness_t: self.geometry.thickness_t_mm.to_param_range(MM),
            width_h: self.geometry.width_h_mm.to_param_range(MM),
            half_length_l: self.geometry.half_length_l_mm.to_param_range(MM),
            material: self.material()?,
            section_mode: self.section_mode()?,
            closure: self.closure()?,
            tilt: self.assembly.tilt_deg.to_radians(),
            install_gap: self.assembly.install_gap_lf_mm * MM,
        };
        space.validate().map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(space)
    }

    pub fn precision(&self) -> usize {
        match std::env::var("HCM_PRECISION") {
            Ok(s) => match s.trim().parse::<usize>() {
                Ok(p) if (1..=17).contains(&p) => p,
                _ => {
                    eprintln!(
                        "warning: ignoring invalid HCM_PRECISION value {s:?} (expected 1..=17)"
                    );
                    self.output.precision
                }
            },
            Err(_) => self.output.precision,
        }
    }
}

/// Fully resolved object + forces for a grasp check.
pub fn resolve_object(
    section: &ObjectSection,
) -> Result<(ObjectSpec, GripperForces), CliError> {
    let entry = match &section.dataset_key {
        Some(key) => Some(dataset::lookup(key).ok_or_else(|| {
            CliError::Parse(format!(
                "unknown dataset key '{key}'; available keys: {}",
                dataset::keys().join(", ")
            ))
        })?),
        None => None,
    };

    let missing = |field: &str| {
        CliError::Parse(format!(
            "object: '{field}' is required (set it in the [object] section or via a dataset_key)"
        ))
    };

    let kind_str = section
        .kind
        .clone()
        .or_else(|| entry.map(|e| e.kind.name().to_string()))
        .ok_or_else(|| missing("kind"))?;
    let kind: ObjectKind = kind_str.parse().map_err(CliError::Parse)?;

    let label = section
        .label
        .clone()
        .or_else(|| entry.map(|e| e.label.to_string()))
        .unwrap_or_else(|| "unnamed object".to_string());

    let mass = section
        .mass_g
        .map(|g| g * GRAM)
        .or_else(|| entry.map(|e| e.mass))
        .ok_or_else(|| missing("mass_g"))?;

    let mu1 = section
        .mu_finger_object
        .or_else(|| entry.map(|e| e.mu_finger_object))
        .ok_or_else(|| missing("mu_finger_object"))?;

    let sheet = if kind == ObjectKind::Sheet2D {
        let rigidity = section
            .rigidity_per_width_unm
            .map(|u| u * MICRO_NM)
            .or_else(|| entry.and_then(|e| e.rigidity_per_width))
            .ok_or_else(|| missing("rigidity_per_width_uNm"))?;
        let width = section
            .engaged_width_mm
            .map(|mm| mm * MM)
            .or_else(|| entry.and_then(|e| e.engaged_width))
            .ok_or_else(|| missing("engaged_width_mm"))?;
        Some(SheetProperties {
            rigidity_per_width: rigidity,
            engaged_width: width,
        })
    } else {
        None
    };

    let mu_ground = section
        .mu_object_ground
        .or_else(|| entry.and_then(|e| e.mu_object_ground))
        .unwrap_or(0.0);

    let object = ObjectSpec::new(kind, label, mass, mu1, mu_ground, sheet)
        .map_err(|e| CliError::Parse(e.to_string()))?;

    let pinch = section
        .pinch_force_n
        .or_else(|| entry.map(|e| e.holding_force))
        .ok_or_else(|| missing("pinch_force_n"))?;
    let peak = section.peak_force_n.unwrap_or(pinch);
    let normal = section.normal_force_n.unwrap_or(pinch);
    let forces =
        GripperForces::new(pinch, peak, normal).map_err(|e| CliError::Parse(e.to_string()))?;

    Ok((object, forces))
}
