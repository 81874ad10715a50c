//! Bundled reference dataset: measured holding forces and success rates
//! for common test objects, plus the measured span/speed context figures
//! quoted in reports. These are defaults and report context, never
//! computed truth.

use std::sync::OnceLock;

use crate::grasp::ObjectKind;

// Measured context for the 15 x 0.762 x 93.7 mm PETG finger pair at
// D = 20 mm with a 10 degree inward tilt.
pub const MEASURED_SPAN_M: f64 = 0.086;
pub const MEASURED_SNAP_S: f64 = 45.8e-3;
pub const MEASURED_SNAP_TOL_S: f64 = 6.7e-3;
/// Companion timescale-estimate figure quoted alongside the measurement.
pub const QUOTED_THEORY_SNAP_S: f64 = 53e-3;
/// Conventional parallel-jaw reference gripper on the same arm.
pub const REFERENCE_GRIPPER_SPAN_M: f64 = 0.032;
pub const REFERENCE_GRIPPER_CLOSE_S: f64 = 0.5;
/// Measured holding-force band for rigid objects at D = 40 mm.
pub const RIGID_FORCE_BAND_N: (f64, f64) = (2.0, 4.5);
/// Measured holding-force band for fabric/leather samples.
pub const FABRIC_FORCE_BAND_N: (f64, f64) = (0.5, 1.3);

const RAW: &str = include_str!("../../data/reference_objects.tsv");

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetEntry {
    pub key: &'static str,
    pub label: &'static str,
    pub kind: ObjectKind,
    /// kg
    pub mass: f64,
    /// Measured holding force, N.
    pub holding_force: f64,
    /// Ten-trial pick success rate, percent.
    pub success_rate_pct: f64,
    pub mu_finger_object: f64,
    pub mu_object_ground: Option<f64>,
    /// N·m per metre of width (sheets only).
    pub rigidity_per_width: Option<f64>,
    /// m (sheets only).
    pub engaged_width: Option<f64>,
}

fn parse() -> Vec<DatasetEntry> {
    let mut out = Vec::new();
    for (lineno, line) in RAW.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert!(
            fields.len() == 9,
            "reference_objects.tsv line {}: expected 9 columns, found {}",
            lineno + 1,
            fields.len()
        );
        let num = |s: &str, what: &str| -> f64 {
            s.parse()
                .unwrap_or_else(|_| panic!("reference_objects.tsv line {}: bad {what} '{s}'", lineno + 1))
        };
        let opt = |s: &str, what: &str| -> Option<f64> {
            if s == "-" {
                None
            } else {
                Some(num(s, what))
            }
        };
        let kind: ObjectKind = fields[1]
            .parse()
            .unwrap_or_else(|e| panic!("reference_objects.tsv line {}: {e}", lineno + 1));
        out.push(DatasetEntry {
            key: fields[0],
            label: fields[0],
            kind,
            mass: num(fields[2], "mass") * 1e-3,
            holding_force: num(fields[3], "holding force"),
            success_rate_pct: num(fields[4], "success rate"),
            mu_finger_object: num(fields[5], "mu_finger_object"),
            mu_object_ground: opt(fields[6], "mu_object_ground"),
            rigidity_per_width: opt(fields[7], "rigidity").map(|u| u * 1e-6),
            engaged_width: opt(fields[8], "engaged width").map(|mm| mm * 1e-3),
        });
    }
    out
}

pub fn entries() -> &'static [DatasetEntry] {
    static CACHE: OnceLock<Vec<DatasetEntry>> = OnceLock::new();
    CACHE.get_or_init(parse)
}

pub fn lookup(key: &str) -> Option<&'static DatasetEntry> {
    entries().iter().find(|e| e.key == key)
}

pub fn keys() -> Vec<&'static str> {
    entries().iter().map(|e| e.key).collect()
}
