//! Grasp-feasibility calculus for rigid 3D objects and limp 2D sheets.
//!
//! Three criteria, all strict inequalities (zero margin is infeasible):
//!
//! * liftable — pinch friction beats object weight, 2 F μ₁s > m g
//!   (every object);
//! * manipulable — grasp friction beats the sheet's ground friction,
//!   N μ₁s > m g μ_ground (sheets only);
//! * wrinkleable — both the friction force N μ₁s and the peak pinch force
//!   clear the sheet's Euler critical load, so it buckles into a graspable
//!   cusp (sheets only).
//!
//! The pinch/peak/normal forces are measured inputs, not derived from the
//! buckling model.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::buckling::BuckledState;

/// Standard gravity, m/s².
pub const STANDARD_GRAVITY: f64 = 9.80665;

/// Fixed-fixed effective-length design factor in the sheet's Euler load.
pub const EULER_EFFECTIVE_LENGTH_FACTOR: f64 = 0.65;

/// The printed Euler expression is read as π²EI/(0.65·W)²; the alternative
/// literal reading π²EI/(0.65·W²) differs by this factor. Reports flag the
/// ambiguity whenever a verdict sits within a factor of two of the
/// threshold.
pub const EULER_ALTERNATE_READING_FACTOR: f64 = 0.65;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GraspError {
    #[error("object '{label}': {field} = {value} violates {constraint}")]
    InvalidObject {
        label: String,
        field: &'static str,
        value: f64,
        constraint: &'static str,
    },
    #[error("forces: {field} = {value} violates {constraint}")]
    InvalidForces {
        field: &'static str,
        value: f64,
        constraint: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObjectKind {
    Rigid3D,
    Sheet2D,
}

impl ObjectKind {
    pub fn name(&self) -> &'static str {
        match self {
            ObjectKind::Rigid3D => "rigid-3d",
            ObjectKind::Sheet2D => "sheet-2d",
        }
    }
}

impl std::str::FromStr for ObjectKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "rigid-3d" | "rigid3d" | "rigid" => Ok(ObjectKind::Rigid3D),
            "sheet-2d" | "sheet2d" | "sheet" | "fabric" => Ok(ObjectKind::Sheet2D),
            other => Err(format!(
                "unknown object kind '{other}' (expected 'rigid-3d' or 'sheet-2d')"
            )),
        }
    }
}

/// Bending stiffness of a limp sheet, quoted per unit engaged width as in
/// fabric handbooks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SheetProperties {
    /// Bending rigidity per unit width, N·m (= N·m² per metre of width).
    pub rigidity_per_width: f64,
    /// Width of fabric engaged by the fingers, m.
    pub engaged_width: f64,
}

impl SheetProperties {
    /// Effective EI of the engaged strip, N·m².
    pub fn effective_ei(&self) -> f64 {
        self.rigidity_per_width * self.engaged_width
    }
}

/// Object to be grasped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObjectSpec {
    kind: ObjectKind,
    label: String,
    mass: f64,
    mu_finger_object: f64,
    mu_object_ground: f64,
    sheet: Option<SheetProperties>,
}

impl ObjectSpec {
    pub fn rigid(label: impl Into<String>, mass: f64, mu_finger_object: f64) -> Result<Self, GraspError> {
        Self::new(ObjectKind::Rigid3D, label, mass, mu_finger_object, 0.0, None)
    }

    pub fn new_sheet(
        label: impl Into<String>,
        mass: f64,
        mu_finger_object: f64,
        mu_object_ground: f64,
        sheet: SheetProperties,
    ) -> Result<Self, GraspError> {
        Self::new(
            ObjectKind::Sheet2D,
            label,
            mass,
            mu_finger_object,
            mu_object_ground,
            Some(sheet),
        )
    }

    pub fn new(
        kind: ObjectKind,
        label: impl Into<String>,
        mass: f64,
        mu_finger_object: f64,
        mu_object_ground: f64,
        sheet: Option<SheetProperties>,
    ) -> Result<Self, GraspError> {
        let label = label.into();
        let invalid = |field, value, constraint| GraspError::InvalidObject {
            label: label.clone(),
            field,
            value,
            constraint,
        };
        if !(mass.is_finite() && mass >= 0.0) {
            return Err(invalid("mass", mass, "mass >= 0"));
        }
        if !(mu_finger_object.is_finite() && mu_finger_object >= 0.0) {
            return Err(invalid("mu_finger_object", mu_finger_object, "mu >= 0"));
        }
        if !(mu_object_ground.is_finite() && mu_object_ground >= 0.0) {
            return Err(invalid("mu_object_ground", mu_object_ground, "mu >= 0"));
        }
        match (kind, &sheet) {
            (ObjectKind::Sheet2D, Some(s)) => {
                if !(s.rigidity_per_width.is_finite() && s.rigidity_per_width > 0.0) {
                    return Err(invalid(
                        "rigidity_per_width",
                        s.rigidity_per_width,
                        "rigidity > 0",
                    ));
                }
                if !(s.engaged_width.is_finite() && s.engaged_width > 0.0) {
                    return Err(invalid("engaged_width", s.engaged_width, "width > 0"));
                }
            }
            (ObjectKind::Sheet2D, None) => {
                return Err(invalid("sheet", f64::NAN, "sheet-2d requires sheet properties"));
            }
            (ObjectKind::Rigid3D, Some(_)) => {
                return Err(invalid(
                    "sheet",
                    f64::NAN,
                    "rigid-3d must not carry sheet properties",
                ));
            }
            (ObjectKind::Rigid3D, None) => {}
        }
        Ok(Self {
            kind,
            label,
            mass,
            mu_finger_object,
            mu_object_ground,
            sheet,
        })
    }

    pub fn kind(&self) -> ObjectKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn mu_finger_object(&self) -> f64 {
        self.mu_finger_object
    }

    pub fn mu_object_ground(&self) -> f64 {
        self.mu_object_ground
    }

    pub fn sheet(&self) -> Option<&SheetProperties> {
        self.sheet.as_ref()
    }

    pub fn weight(&self) -> f64 {
        self.mass * STANDARD_GRAVITY
    }

    /// Friction force between the sheet and the ground, N.
    pub fn bottom_friction(&self) -> f64 {
        self.weight() * self.mu_object_ground
    }
}

/// Finger forces: sustained bistable pinch F, snap-instant peak F_max, and
/// finger-object normal force N.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GripperForces {
    pinch_force_f: f64,
    peak_force_fmax: f64,
    normal_force_n: f64,
}

impl GripperForces {
    pub fn new(pinch_force_f: f64, peak_force_fmax: f64, normal_force_n: f64) -> Result<Self, GraspError> {
        if !(pinch_force_f.is_finite() && pinch_force_f >= 0.0) {
            return Err(GraspError::InvalidForces {
                field: "pinch_force_f",
                value: pinch_force_f,
                constraint: "F >= 0",
            });
        }
        if !(peak_force_fmax.is_finite() && peak_force_fmax >= pinch_force_f) {
            return Err(GraspError::InvalidForces {
                field: "peak_force_fmax",
                value: peak_force_fmax,
                constraint: "F_max >= F",
            });
        }
        if !(normal_force_n.is_finite() && normal_force_n >= 0.0) {
            return Err(GraspError::InvalidForces {
                field: "normal_force_n",
                value: normal_force_n,
                constraint: "N >= 0",
            });
        }
        Ok(Self {
            pinch_force_f,
            peak_force_fmax,
            normal_force_n,
        })
    }

    pub fn pinch_force_f(&self) -> f64 {
        self.pinch_force_f
    }

    pub fn peak_force_fmax(&self) -> f64 {
        self.peak_force_fmax
    }

    pub fn normal_force_n(&self) -> f64 {
        self.normal_force_n
    }
}

/// Euler critical load of the engaged fabric strip:
/// π² EI / (0.65 W)², with 0.65 the fixed-fixed effective-length factor.
pub fn euler_fabric_load(ei: f64, span_w: f64) -> f64 {
    let effective = EULER_EFFECTIVE_LENGTH_FACTOR * span_w;
    std::f64::consts::PI.powi(2) * ei / (effective * effective)
}

/// One criterion's outcome: whether it applies to the object kind, the
/// strict-inequality verdict, the margin in newtons (positive = feasible),
/// and the inputs that entered the comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionCheck {
    pub applied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin_n: Option<f64>,
    pub inputs: BTreeMap<&'static str, f64>,
}

impl CriterionCheck {
    fn not_applicable() -> Self {
        Self {
            applied: false,
            verdict: None,
            margin_n: None,
            inputs: BTreeMap::new(),
        }
    }

    fn decided(margin: f64, inputs: BTreeMap<&'static str, f64>) -> Self {
        Self {
            applied: true,
            verdict: Some(margin > 0.0),
            margin_n: Some(margin),
            inputs,
        }
    }
}

/// liftable: 2 F μ₁s > m g. Applies to every object.
pub fn check_liftable(forces: &GripperForces, object: &ObjectSpec) -> CriterionCheck {
    let friction = 2.0 * forces.pinch_force_f() * object.mu_finger_object();
    let weight = object.weight();
    let mut inputs = BTreeMap::new();
    inputs.insert("pinch_force_f_n", forces.pinch_force_f());
    inputs.insert("mu_finger_object", object.mu_finger_object());
    inputs.insert("weight_n", weight);
    CriterionCheck::decided(friction - weight, inputs)
}

/// manipulable: N μ₁s > m g μ_ground. Sheets only; rigid objects get a
/// criterion-not-applicable marker.
pub fn check_manipulable(forces: &GripperForces, object: &ObjectSpec) -> CriterionCheck {
    if object.kind() != ObjectKind::Sheet2D {
        return CriterionCheck::not_applicable();
    }
    let grasp_friction = forces.normal_force_n() * object.mu_finger_object();
    let bottom = object.bottom_friction();
    let mut inputs = BTreeMap::new();
    inputs.insert("normal_force_n", forces.normal_force_n());
    inputs.insert("mu_finger_object", object.mu_finger_object());
    inputs.insert("bottom_friction_n", bottom);
    CriterionCheck::decided(grasp_friction - bottom, inputs)
}

/// wrinkleable: N μ₁s > P_E and F_max > P_E + bottom friction, where P_E
/// is the fabric's Euler critical load at the current span. The margin is
/// the smaller of the two slacks.
pub fn check_wrinkleable(
    forces: &GripperForces,
    object: &ObjectSpec,
    span_w: f64,
) -> CriterionCheck {
    if object.kind() != ObjectKind::Sheet2D {
        return CriterionCheck::not_applicable();
    }
    let sheet = object.sheet().expect("sheet-2d always carries sheet properties");
    let p_e = euler_fabric_load(sheet.effective_ei(), span_w);
    let bottom = object.bottom_friction();
    let friction_slack = forces.normal_force_n() * object.mu_finger_object() - p_e;
    let peak_slack = forces.peak_force_fmax() - (p_e + bottom);
    let mut inputs = BTreeMap::new();
    inputs.insert("normal_force_n", forces.normal_force_n());
    inputs.insert("mu_finger_object", object.mu_finger_object());
    inputs.insert("peak_force_fmax_n", forces.peak_force_fmax());
    inputs.insert("euler_load_n", p_e);
    inputs.insert("bottom_friction_n", bottom);
    inputs.insert("span_w_m", span_w);
    CriterionCheck::decided(friction_slack.min(peak_slack), inputs)
}

/// Per-criterion verdicts with margins; `overall` is the conjunction over
/// the applied criteria.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraspReport {
    pub liftable: CriterionCheck,
    pub manipulable: CriterionCheck,
    pub wrinkleable: CriterionCheck,
    pub overall: bool,
    pub criteria_applied: Vec<&'static str>,
    /// Present when the wrinkleable verdict sits within a factor of two of
    /// the Euler threshold, where the alternative literal reading of the
    /// 0.65 factor could matter.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambiguity_note: Option<String>,
}

/// Compose the criteria for the object kind: rigid objects are judged on
/// liftable alone; sheets on all three.
pub fn grasp_feasibility(
    state: &BuckledState,
    forces: &GripperForces,
    object: &ObjectSpec,
) -> GraspReport {
    let span_w = state.span_w();
    let liftable = check_liftable(forces, object);
    let manipulable = check_manipulable(forces, object);
    let wrinkleable = check_wrinkleable(forces, object, span_w);

    let mut criteria_applied = vec!["liftable"];
    if manipulable.applied {
        criteria_applied.push("manipulable");
    }
    if wrinkleable.applied {
        criteria_applied.push("wrinkleable");
    }

    let overall = [&liftable, &manipulable, &wrinkleable]
        .iter()
        .filter(|c| c.applied)
        .all(|c| c.verdict == Some(true));

    let ambiguity_note = wrinkleable.applied.then(|| ambiguity_note(forces, object, span_w)).flatten();

    GraspReport {
        liftable,
        manipulable,
        wrinkleable,
        overall,
        criteria_applied,
        ambiguity_note,
    }
}

fn ambiguity_note(forces: &GripperForces, object: &ObjectSpec, span_w: f64) -> Option<String> {
    let sheet = object.sheet()?;
    let p_e = euler_fabric_load(sheet.effective_ei(), span_w);
    if p_e <= 0.0 {
        return None;
    }
    let friction = forces.normal_force_n() * object.mu_finger_object();
    let peak_head = forces.peak_force_fmax() - object.bottom_friction();
    let near = |q: f64| q > 0.5 * p_e && q < 2.0 * p_e;
    if near(friction) || near(peak_head) {
        Some(format!(
            "wrinkleable verdict is within 2x of the Euler threshold: adopted reading \
             pi^2 EI/(0.65 W)^2 = {:.4e} N; the literal reading pi^2 EI/(0.65 W^2) = {:.4e} N \
             differs by a factor {} and could flip the verdict",
            p_e,
            p_e * EULER_ALTERNATE_READING_FACTOR,
            EULER_ALTERNATE_READING_FACTOR,
        ))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sheet_object(mass: f64, mu1: f64, mu_g: f64) -> ObjectSpec {
        ObjectSpec::new_sheet(
            "test sheet",
            mass,
            mu1,
            mu_g,
            SheetProperties {
                rigidity_per_width: 10e-6,
                engaged_width: 0.2,
            },
        )
        .unwrap()
    }

    fn forces(f: f64, fmax: f64, n: f64) -> GripperForces {
        GripperForces::new(f, fmax, n).unwrap()
    }

    fn some_state(span: f64) -> BuckledState {
        // build a state through the real pipeline at a calibration that
        // reproduces the requested span
        let material = crate::model::Material::new(1.730e9, 0.38, 1270.0).unwrap();
        let geometry = crate::model::RibbonGeometry::new(0.015, 0.000762, 0.0937).unwrap();
        let closure = crate::buckling::AmplitudeClosure::Calibrated {
            d_ref: 0.020,
            w_ref: span,
            tilt_ref: 0.0,
        };
        let cfg = crate::model::AssemblyConfig::new(0.048, 0.020, 0.0, closure).unwrap();
        crate::buckling::span(&cfg, &material, &geometry, crate::model::SectionMode::ThinStrip)
            .unwrap()
    }

    #[test]
    fn euler_load_reference_value() {
        // frozen: EI = 10 N mm^2 (1e-5 N m^2), W = 86 mm
        let p = euler_fabric_load(1e-5, 0.086);
        assert!(((p - 0.031_584_654_430_475_326) / p).abs() < 1e-12, "P_E = {p}");
    }

    #[test]
    fn euler_load_scales_inverse_square_in_span() {
        let p1 = euler_fabric_load(1e-5, 0.086);
        let p2 = euler_fabric_load(1e-5, 0.043);
        assert_eq!(p2, 4.0 * p1);
        assert_eq!(euler_fabric_load(0.0, 0.086), 0.0);
    }

    #[test]
    fn liftable_margin_example() {
        let obj = ObjectSpec::rigid("ball", 0.5 / STANDARD_GRAVITY, 0.5).unwrap();
        let c = check_liftable(&forces(1.0, 1.0, 1.0), &obj);
        assert_eq!(c.verdict, Some(true));
        assert!((c.margin_n.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn zero_mass_is_liftable_with_any_grip() {
        let obj = ObjectSpec::rigid("massless", 0.0, 0.5).unwrap();
        let c = check_liftable(&forces(0.1, 0.1, 0.0), &obj);
        assert_eq!(c.verdict, Some(true));
        // strict inequality: zero friction on zero weight is infeasible
        let c = check_liftable(&forces(0.0, 0.0, 0.0), &obj);
        assert_eq!(c.verdict, Some(false));
    }

    #[test]
    fn rigid_band_forces_are_liftable() {
        // measured rigid-object holding forces 2.0-4.5 N lift the solid
        // reference shapes at mu = 0.6
        for (mass, f) in [(0.120, 3.8), (0.090, 4.5), (0.060, 2.6), (0.040, 2.0)] {
            let obj = ObjectSpec::rigid("shape", mass, 0.6).unwrap();
            let c = check_liftable(&forces(f, f, f), &obj);
            assert_eq!(c.verdict, Some(true), "mass {mass}, F {f}");
        }
    }

    #[test]
    fn manipulable_worked_example() {
        // 30 g cotton sheet, mu_ground 0.4, N = 1 N, mu1 = 0.6
        let obj = sheet_object(0.030, 0.6, 0.4);
        let c = check_manipulable(&forces(1.0, 1.0, 1.0), &obj);
        assert_eq!(c.verdict, Some(true));
        assert!((c.margin_n.unwrap() - 0.482_320_2).abs() < 1e-6);
    }

    #[test]
    fn manipulable_edge_cases() {
        // frictionless table
        let obj = sheet_object(0.030, 0.6, 0.0);
        assert_eq!(check_manipulable(&forces(1.0, 1.0, 0.1), &obj).verdict, Some(true));
        // no normal force
        let obj = sheet_object(0.030, 0.6, 0.4);
        assert_eq!(check_manipulable(&forces(1.0, 1.0, 0.0), &obj).verdict, Some(false));
        // rigid objects: marker, not verdict
        let rigid = ObjectSpec::rigid("cube", 0.1, 0.6).unwrap();
        let c = check_manipulable(&forces(1.0, 1.0, 1.0), &rigid);
        assert!(!c.applied && c.verdict.is_none());
    }

    #[test]
    fn wrinkleable_is_a_conjunction() {
        let obj = sheet_object(0.030, 0.6, 0.4);
        // huge friction, peak below the Euler load + bottom friction
        let p_e = euler_fabric_load(10e-6 * 0.2, 0.086);
        let bottom = obj.bottom_friction();
        let f = GripperForces::new(0.0, (p_e + bottom) * 0.5, 100.0).unwrap();
        let c = check_wrinkleable(&f, &obj, 0.086);
        assert_eq!(c.verdict, Some(false));
        assert!(c.margin_n.unwrap() < 0.0);
    }

    #[test]
    fn fabric_band_forces_are_wrinkleable_and_liftable() {
        // measured fabric holding forces 0.5-1.3 N with F = F_max = N
        for f in [0.5, 0.9, 1.3] {
            let obj = sheet_object(0.030, 0.6, 0.4);
            let report = grasp_feasibility(&some_state(0.086), &forces(f, f, f), &obj);
            assert!(report.overall, "F = {f}");
        }
    }

    #[test]
    fn criteria_routing_by_kind() {
        let rigid = ObjectSpec::rigid("sphere", 0.040, 0.6).unwrap();
        let report = grasp_feasibility(&some_state(0.086), &forces(2.0, 2.0, 2.0), &rigid);
        assert_eq!(report.criteria_applied, vec!["liftable"]);
        assert!(!report.manipulable.applied);
        assert!(!report.wrinkleable.applied);
        assert!(report.overall);

        let sheet = sheet_object(0.030, 0.6, 0.4);
        let report = grasp_feasibility(&some_state(0.086), &forces(1.0, 1.0, 1.0), &sheet);
        assert_eq!(
            report.criteria_applied,
            vec!["liftable", "manipulable", "wrinkleable"]
        );
    }

    #[test]
    fn failing_criterion_defeats_overall() {
        // manipulable fails (huge ground friction), others pass
        let obj = sheet_object(0.5, 0.6, 10.0);
        let report = grasp_feasibility(&some_state(0.086), &forces(10.0, 50.0, 1.0), &obj);
        assert_eq!(report.liftable.verdict, Some(true));
        assert_eq!(report.manipulable.verdict, Some(false));
        assert!(!report.overall);
    }

    #[test]
    fn ambiguity_note_appears_near_threshold() {
        let obj = sheet_object(0.0, 1.0, 0.0);
        let p_e = euler_fabric_load(10e-6 * 0.2, 0.086);
        // friction right at 1.5x the Euler load: proximal
        let f = GripperForces::new(0.0, 10.0, 1.5 * p_e).unwrap();
        let report = grasp_feasibility(&some_state(0.086), &f, &obj);
        assert!(report.ambiguity_note.is_some());
        // far above: no note
        let f = GripperForces::new(0.0, 10.0, 10.0 * p_e).unwrap();
        let report = grasp_feasibility(&some_state(0.086), &f, &obj);
        assert!(report.ambiguity_note.is_none());
    }

    #[test]
    fn degenerate_sheet_governed_by_euler_alone() {
        // zero-mass sheet on a frictionless ground
        let obj = sheet_object(0.0, 0.6, 0.0);
        let p_e = euler_fabric_load(10e-6 * 0.2, 0.086);
        let ok = GripperForces::new(0.1, 2.0 * p_e.max(0.1), 2.0 * p_e / 0.6).unwrap();
        let report = grasp_feasibility(&some_state(0.086), &ok, &obj);
        assert!(report.overall);
        let weak = GripperForces::new(0.25 * p_e, 0.5 * p_e, 0.1 * p_e).unwrap();
        let report = grasp_feasibility(&some_state(0.086), &weak, &obj);
        assert_eq!(report.wrinkleable.verdict, Some(false));
        assert_eq!(report.liftable.verdict, Some(true));
        assert_eq!(report.manipulable.verdict, Some(true));
    }

    proptest! {
        // increasing any of mu, N, F, F_max or the span never flips a
        // verdict from feasible to infeasible
        #[test]
        fn verdicts_monotone_in_forces_and_span(
            mass in 0.0f64..0.5,
            mu1 in 0.01f64..2.0,
            mu_g in 0.0f64..2.0,
            f in 0.0f64..5.0,
            extra_fmax in 0.0f64..5.0,
            n in 0.0f64..5.0,
            span in 0.02f64..0.2,
            bump in 1e-6f64..3.0,
            which in 0usize..5,
        ) {
            let obj = sheet_object(mass, mu1, mu_g);
            let base_forces = GripperForces::new(f, f + extra_fmax, n).unwrap();

            let mut mu2 = mu1;
            let mut f2 = f;
            let mut fmax2 = f + extra_fmax;
            let mut n2 = n;
            let mut span2 = span;
            match which {
                0 => mu2 += bump,
                1 => f2 += bump,
                2 => fmax2 += bump,
                3 => n2 += bump,
                _ => span2 += bump,
            }
            if f2 > fmax2 {
                fmax2 = f2;
            }
            let obj2 = sheet_object(mass, mu2, mu_g);
            let forces2 = GripperForces::new(f2, fmax2, n2).unwrap();

            for (c1, c2) in [
                (check_liftable(&base_forces, &obj), check_liftable(&forces2, &obj2)),
                (check_manipulable(&base_forces, &obj), check_manipulable(&forces2, &obj2)),
                (
                    check_wrinkleable(&base_forces, &obj, span),
                    check_wrinkleable(&forces2, &obj2, span2),
                ),
            ] {
                if c1.verdict == Some(true) {
                    prop_assert_eq!(c2.verdict, Some(true));
                }
            }
        }
    }
}
