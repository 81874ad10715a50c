//! Parameter sweeps and constrained design search over (D, t, h, l), plus
//! the fatigue advisory lookup.
//!
//! The optimizer enumerates the coarse grid spelled out by the design
//! space, filters by the constraints, then refines each ranged axis from
//! the best grid cell with golden-section search. Grid enumeration order is
//! fixed (D outer, then t, h, l), so results are reproducible and ties
//! resolve deterministically to the first candidate.

use serde::Serialize;
use thiserror::Error;

use crate::buckling::{span, AmplitudeClosure, BuckledState, SpanError};
use crate::energetics::{snap_metrics, SnapMetrics};
use crate::model::{AssemblyConfig, Material, ModelError, RibbonGeometry, SectionMode};
use crate::numerics::{minimize_scalar, NumericsError, Tolerance};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DesignError {
    #[error("design space: {0}")]
    InvalidSpace(String),
    #[error("sweep: parameter '{0}' is not ranged in this design space")]
    NotRanged(&'static str),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Span(#[from] SpanError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// One design axis: a fixed point or an inclusive interval with a step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ParamRange {
    Point(f64),
    Range { lo: f64, hi: f64, step: f64 },
}

impl ParamRange {
    pub fn validate(&self, name: &'static str) -> Result<(), DesignError> {
        match self {
            ParamRange::Point(v) => {
                if !v.is_finite() {
                    return Err(DesignError::InvalidSpace(format!("{name}: non-finite point")));
                }
            }
            ParamRange::Range { lo, hi, step } => {
                if !(lo.is_finite() && hi.is_finite() && step.is_finite()) {
                    return Err(DesignError::InvalidSpace(format!("{name}: non-finite range")));
                }
                if lo > hi {
                    return Err(DesignError::InvalidSpace(format!(
                        "{name}: lo {lo} exceeds hi {hi}"
                    )));
                }
                if *step <= 0.0 {
                    return Err(DesignError::InvalidSpace(format!(
                        "{name}: step must be positive"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_range(&self) -> bool {
        matches!(self, ParamRange::Range { .. })
    }

    pub fn bounds(&self) -> (f64, f64) {
        match self {
            ParamRange::Point(v) => (*v, *v),
            ParamRange::Range { lo, hi, .. } => (*lo, *hi),
        }
    }

    /// Grid values: lo, lo+step, ..., hi (hi always included; a final
    /// partial step collapses onto hi).
    pub fn values(&self) -> Vec<f64> {
        match self {
            ParamRange::Point(v) => vec![*v],
            ParamRange::Range { lo, hi, step } => {
                let mut out = Vec::new();
                let n = ((hi - lo) / step + 1e-9).floor() as usize;
                for i in 0..=n {
                    out.push(lo + i as f64 * step);
                }
                if let Some(last) = out.last_mut() {
                    if (*last - hi).abs() < step * 1e-9 {
                        *last = *hi;
                    } else if *last < *hi {
                        out.push(*hi);
                    }
                }
                out
            }
        }
    }
}

/// Parameter ranges plus everything held fixed across the space.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignSpace {
    pub prestress_d: ParamRange,
    pub thickness_t: ParamRange,
    pub width_h: ParamRange,
    pub half_length_l: ParamRange,
    pub material: Material,
    pub section_mode: SectionMode,
    pub closure: AmplitudeClosure,
    pub tilt: f64,
    pub install_gap: f64,
}

impl DesignSpace {
    pub fn validate(&self) -> Result<(), DesignError> {
        self.prestress_d.validate("prestress_d")?;
        self.thickness_t.validate("thickness_t")?;
        self.width_h.validate("width_h")?;
        self.half_length_l.validate("half_length_l")?;
        if self.prestress_d.bounds().0 < 0.0 {
            return Err(DesignError::InvalidSpace("prestress_d must be >= 0".into()));
        }
        if self.install_gap <= 0.0 || !self.install_gap.is_finite() {
            return Err(DesignError::InvalidSpace("install_gap must be > 0".into()));
        }
        if !(0.0..std::f64::consts::FRAC_PI_2).contains(&self.tilt) {
            return Err(DesignError::InvalidSpace("tilt must be in [0, pi/2)".into()));
        }
        Ok(())
    }

    fn axis(&self, p: VaryParam) -> &ParamRange {
        match p {
            VaryParam::PrestressD => &self.prestress_d,
            VaryParam::ThicknessT => &self.thickness_t,
            VaryParam::WidthH => &self.width_h,
            VaryParam::HalfLengthL => &self.half_length_l,
        }
    }
}

/// Which axis a sweep or refinement walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VaryParam {
    PrestressD,
    ThicknessT,
    WidthH,
    HalfLengthL,
}

impl VaryParam {
    pub const ALL: [VaryParam; 4] = [
        VaryParam::PrestressD,
        VaryParam::ThicknessT,
        VaryParam::WidthH,
        VaryParam::HalfLengthL,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            VaryParam::PrestressD => "D",
            VaryParam::ThicknessT => "t",
            VaryParam::WidthH => "h",
            VaryParam::HalfLengthL => "l",
        }
    }
}

impl std::str::FromStr for VaryParam {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "d" | "prestress" | "prestress_d" => Ok(VaryParam::PrestressD),
            "t" | "thickness" | "thickness_t" => Ok(VaryParam::ThicknessT),
            "h" | "width" | "width_h" => Ok(VaryParam::WidthH),
            "l" | "half_length" | "half_length_l" => Ok(VaryParam::HalfLengthL),
            other => Err(format!(
                "unknown sweep parameter '{other}' (expected one of D, t, h, l)"
            )),
        }
    }
}

/// A candidate design with its computed physics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignPoint {
    pub prestress_d: f64,
    pub thickness_t: f64,
    pub width_h: f64,
    pub half_length_l: f64,
    pub state: BuckledState,
    pub metrics: SnapMetrics,
}

impl DesignPoint {
    /// Recompute the metrics from the parameters and compare; guards
    /// against a point drifting out of sync with the modes it was built
    /// under.
    pub fn recompute_check(&self, space: &DesignSpace) -> bool {
        match evaluate_point(
            space,
            self.prestress_d,
            self.thickness_t,
            self.width_h,
            self.half_length_l,
        ) {
            Ok(fresh) => {
                let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1e-300);
                close(fresh.state.span_w(), self.state.span_w())
                    && close(fresh.state.critical_load_pcr(), self.state.critical_load_pcr())
                    && close(fresh.metrics.snap_time, self.metrics.snap_time)
                    && close(fresh.metrics.energy_barrier, self.metrics.energy_barrier)
            }
            Err(_) => false,
        }
    }
}

/// Optional feasibility bounds for the search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Constraints {
    pub min_span: Option<f64>,
    pub max_snap_time: Option<f64>,
    pub max_pcr: Option<f64>,
    pub max_energy_barrier: Option<f64>,
    /// Compared against the conservative low edge of the fatigue advisory
    /// band.
    pub min_fatigue_cycles: Option<f64>,
}

impl Constraints {
    pub fn validate(&self) -> Result<(), DesignError> {
        for (name, v) in [
            ("min_span", self.min_span),
            ("max_snap_time", self.max_snap_time),
            ("max_pcr", self.max_pcr),
            ("max_energy_barrier", self.max_energy_barrier),
            ("min_fatigue_cycles", self.min_fatigue_cycles),
        ] {
            if let Some(v) = v {
                if !(v.is_finite() && v > 0.0) {
                    return Err(DesignError::InvalidSpace(format!(
                        "constraint {name} must be positive and finite"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn violations(&self, p: &DesignPoint) -> Vec<&'static str> {
        let mut out = Vec::new();
        if let Some(min) = self.min_span {
            if p.state.span_w() < min {
                out.push("min_span");
            }
        }
        if let Some(max) = self.max_snap_time {
            if p.metrics.snap_time > max {
                out.push("max_snap_time");
            }
        }
        if let Some(max) = self.max_pcr {
            if p.state.critical_load_pcr() > max {
                out.push("max_pcr");
            }
        }
        if let Some(max) = self.max_energy_barrier {
            if p.metrics.energy_barrier > max {
                out.push("max_energy_barrier");
            }
        }
        if let Some(min) = self.min_fatigue_cycles {
            if fatigue_advisory(p.thickness_t).cycles_low < min {
                out.push("min_fatigue_cycles");
            }
        }
        out
    }

    pub fn feasible(&self, p: &DesignPoint) -> bool {
        self.violations(p).is_empty()
    }
}

/// Search objective; all are scored so that lower is better internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Objective {
    MaxSpan,
    MinSnapTime,
    MinEnergyBarrier,
}

impl Objective {
    pub fn name(&self) -> &'static str {
        match self {
            Objective::MaxSpan => "max-span",
            Objective::MinSnapTime => "min-snap-time",
            Objective::MinEnergyBarrier => "min-energy-barrier",
        }
    }

    /// Lower is better.
    pub fn score(&self, p: &DesignPoint) -> f64 {
        match self {
            Objective::MaxSpan => -p.state.span_w(),
            Objective::MinSnapTime => p.metrics.snap_time,
            Objective::MinEnergyBarrier => p.metrics.energy_barrier,
        }
    }
}

impl std::str::FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "max-span" | "maxspan" => Ok(Objective::MaxSpan),
            "min-snap-time" | "minsnaptime" => Ok(Objective::MinSnapTime),
            "min-energy-barrier" | "minenergybarrier" => Ok(Objective::MinEnergyBarrier),
            other => Err(format!(
                "unknown objective '{other}' (expected max-span, min-snap-time, or min-energy-barrier)"
            )),
        }
    }
}

/// Evaluate one candidate (all parameters in SI units).
pub fn evaluate_point(
    space: &DesignSpace,
    d: f64,
    t: f64,
    h: f64,
    l: f64,
) -> Result<DesignPoint, DesignError> {
    let geometry = RibbonGeometry::new(h, t, l)?;
    let config = AssemblyConfig::new(space.install_gap, d, space.tilt, space.closure.clone())?;
    let state = span(&config, &space.material, &geometry, space.section_mode)?;
    let metrics = snap_metrics(&space.material, &geometry, state.critical_load_pcr(), d);
    Ok(DesignPoint {
        prestress_d: d,
        thickness_t: t,
        width_h: h,
        half_length_l: l,
        state,
        metrics,
    })
}

/// One sweep row: the varied value and either the evaluated point or the
/// failure message. Per-row capture keeps one bad corner from killing a
/// batch.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub param_value: f64,
    pub outcome: Result<DesignPoint, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepTable {
    pub vary: VaryParam,
    pub rows: Vec<SweepRow>,
}

/// Sweep one ranged parameter at `steps` uniform values over its interval;
/// all other parameters must be points.
pub fn sweep(space: &DesignSpace, vary: VaryParam, steps: usize) -> Result<SweepTable, DesignError> {
    space.validate()?;
    let (lo, hi) = match space.axis(vary) {
        ParamRange::Range { lo, hi, .. } => (*lo, *hi),
        ParamRange::Point(_) => return Err(DesignError::NotRanged(vary.name())),
    };
    for p in VaryParam::ALL {
        if p != vary && space.axis(p).is_range() {
            return Err(DesignError::InvalidSpace(format!(
                "sweep varies '{}' but '{}' is also ranged; fix it to a point",
                vary.name(),
                p.name()
            )));
        }
    }
    if steps == 0 {
        return Err(DesignError::InvalidSpace("steps must be >= 1".into()));
    }

    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let value = if steps == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (steps - 1) as f64
        };
        let (d, t, h, l) = resolve(space, vary, value);
        let outcome = evaluate_point(space, d, t, h, l).map_err(|e| e.to_string());
        rows.push(SweepRow {
            param_value: value,
            outcome,
        });
    }
    Ok(SweepTable { vary, rows })
}

fn resolve(space: &DesignSpace, vary: VaryParam, value: f64) -> (f64, f64, f64, f64) {
    let pick = |p: VaryParam| {
        if p == vary {
            value
        } else {
            space.axis(p).bounds().0
        }
    };
    (
        pick(VaryParam::PrestressD),
        pick(VaryParam::ThicknessT),
        pick(VaryParam::WidthH),
        pick(VaryParam::HalfLengthL),
    )
}

/// Deterministic enumeration of the full coarse grid (D outer, then t, h, l).
pub fn enumerate_grid(space: &DesignSpace) -> Vec<(f64, f64, f64, f64)> {
    let mut out = Vec::new();
    for &d in &space.prestress_d.values() {
        for &t in &space.thickness_t.values() {
            for &h in &space.width_h.values() {
                for &l in &space.half_length_l.values() {
                    out.push((d, t, h, l));
                }
            }
        }
    }
    out
}

/// Result of a design search. Constructed once per search, so the size
/// skew between the variants is irrelevant.
#[derive(Debug, Clone, Serialize)]
#[allow(clippy::large_enum_variant)]
pub enum OptimizeOutcome {
    Feasible {
        /// Refined best point; dominates or ties every feasible grid point.
        best: DesignPoint,
        /// Winner of the coarse grid phase, before refinement.
        grid_best: DesignPoint,
        refinement_rounds: usize,
    },
    Infeasible {
        /// Constraints that excluded candidates, with violation counts.
        binding: Vec<(String, usize)>,
        evaluated: usize,
        evaluation_errors: usize,
    },
}

const MAX_REFINE_ROUNDS: usize = 8;

/// Coarse grid enumeration, feasibility filter, then golden-section
/// refinement along each ranged axis from the best grid cell, iterated
/// until no axis improves.
pub fn optimize(
    space: &DesignSpace,
    constraints: &Constraints,
    objective: Objective,
) -> Result<OptimizeOutcome, DesignError> {
    space.validate()?;
    constraints.validate()?;

    let grid = enumerate_grid(space);
    let mut best: Option<DesignPoint> = None;
    let mut best_score = f64::INFINITY;
    let mut violation_counts: Vec<(String, usize)> = Vec::new();
    let mut errors = 0usize;
    let evaluated = grid.len();

    for (d, t, h, l) in grid {
        match evaluate_point(space, d, t, h, l) {
            Ok(point) => {
                let violations = constraints.violations(&point);
                if violations.is_empty() {
                    let score = objective.score(&point);
                    if score < best_score {
                        best_score = score;
                        best = Some(point);
                    }
                } else {
                    for v in violations {
                        match violation_counts.iter_mut().find(|(name, _)| name == v) {
                            Some((_, n)) => *n += 1,
                            None => violation_counts.push((v.to_string(), 1)),
                        }
                    }
                }
            }
            Err(_) => errors += 1,
        }
    }

    let grid_best = match best {
        Some(p) => p,
        None => {
            violation_counts.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
            return Ok(OptimizeOutcome::Infeasible {
                binding: violation_counts,
                evaluated,
                evaluation_errors: errors,
            });
        }
    };

    let mut current = grid_best.clone();
    let mut current_score = objective.score(&current);
    let tol = Tolerance::minimization();
    let mut rounds = 0usize;

    for _ in 0..MAX_REFINE_ROUNDS {
        let mut improved = false;
        for axis in VaryParam::ALL {
            let (lo, hi) = match space.axis(axis) {
                ParamRange::Range { lo, hi, .. } => (*lo, *hi),
                ParamRange::Point(_) => continue,
            };
            let fixed = current.clone();
            let penalized = |x: f64| -> f64 {
                let (d, t, h, l) = substitute(&fixed, axis, x);
                match evaluate_point(space, d, t, h, l) {
                    Ok(p) if constraints.feasible(&p) => objective.score(&p),
                    _ => f64::INFINITY,
                }
            };
            let Ok((x_new, score_new)) = minimize_scalar(penalized, lo, hi, &tol) else {
                continue;
            };
            if score_new < current_score {
                let (d, t, h, l) = substitute(&current, axis, x_new);
                if let Ok(p) = evaluate_point(space, d, t, h, l) {
                    if constraints.feasible(&p) {
                        current = p;
                        current_score = score_new;
                        improved = true;
                    }
                }
            }
        }
        rounds += 1;
        if !improved {
            break;
        }
    }

    Ok(OptimizeOutcome::Feasible {
        best: current,
        grid_best,
        refinement_rounds: rounds,
    })
}

fn substitute(p: &DesignPoint, axis: VaryParam, x: f64) -> (f64, f64, f64, f64) {
    let mut d = p.prestress_d;
    let mut t = p.thickness_t;
    let mut h = p.width_h;
    let mut l = p.half_length_l;
    match axis {
        VaryParam::PrestressD => d = x,
        VaryParam::ThicknessT => t = x,
        VaryParam::WidthH => h = x,
        VaryParam::HalfLengthL => l = x,
    }
    (d, t, h, l)
}

// Fatigue advisory: the published endurance band for prestressed fingers
// cycled at D = 20 mm, PETG stock, thickness 0.381-1.524 mm. The
// endpoint-to-thickness assignment (thinner lasts longer) is inferred from
// bending-strain scaling, not read from per-thickness data; the
// per-thickness estimate is a log-log interpolation between the band
// endpoints, widened by a x2 scatter factor. Advisory only, never a
// physics output.

pub const FATIGUE_THICKNESS_THIN: f64 = 0.381e-3;
pub const FATIGUE_THICKNESS_THICK: f64 = 1.524e-3;
pub const FATIGUE_CYCLES_AT_THIN: f64 = 20_000.0;
pub const FATIGUE_CYCLES_AT_THICK: f64 = 460.0;
pub const FATIGUE_SCATTER_FACTOR: f64 = 2.0;
pub const FATIGUE_SCOPE: &str = "advisory; endurance band measured at D = 20 mm";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FatigueAdvisory {
    pub cycles_low: f64,
    pub cycles_center: f64,
    pub cycles_high: f64,
    /// Set when the thickness lies outside the measured 0.381-1.524 mm
    /// window and the interpolation extrapolates.
    pub extrapolated: bool,
}

/// Cycle-life band for a ribbon thickness (m). Out-of-range thicknesses
/// are flagged, not rejected.
pub fn fatigue_advisory(thickness_t: f64) -> FatigueAdvisory {
    let frac = (thickness_t.ln() - FATIGUE_THICKNESS_THIN.ln())
        / (FATIGUE_THICKNESS_THICK.ln() - FATIGUE_THICKNESS_THIN.ln());
    let ln_cycles = FATIGUE_CYCLES_AT_THIN.ln()
        + frac * (FATIGUE_CYCLES_AT_THICK.ln() - FATIGUE_CYCLES_AT_THIN.ln());
    let center = ln_cycles.exp();
    FatigueAdvisory {
        cycles_low: center / FATIGUE_SCATTER_FACTOR,
        cycles_center: center,
        cycles_high: center * FATIGUE_SCATTER_FACTOR,
        extrapolated: !(FATIGUE_THICKNESS_THIN..=FATIGUE_THICKNESS_THICK).contains(&thickness_t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PETG_DENSITY;

    fn reference_space() -> DesignSpace {
        DesignSpace {
            prestress_d: ParamRange::Range {
                lo: 0.0,
                hi: 0.040,
                step: 0.010,
            },
            thickness_t: ParamRange::Point(0.000762),
            width_h: ParamRange::Point(0.015),
            half_length_l: ParamRange::Point(0.0937),
            material: Material::new(1.730e9, 0.38, PETG_DENSITY).unwrap(),
            section_mode: SectionMode::ThinStrip,
            closure: AmplitudeClosure::Shortening,
            tilt: 0.0,
            install_gap: 0.048,
        }
    }

    #[test]
    fn param_range_values_inclusive() {
        let r = ParamRange::Range {
            lo: 0.0,
            hi: 0.040,
            step: 0.010,
        };
        let v = r.values();
        assert_eq!(v.len(), 5);
        assert_eq!(v[0], 0.0);
        assert_eq!(*v.last().unwrap(), 0.040);
        assert_eq!(ParamRange::Point(2.0).values(), vec![2.0]);
    }

    #[test]
    fn sweep_zero_prestress_row() {
        let table = sweep(&reference_space(), VaryParam::PrestressD, 41).unwrap();
        assert_eq!(table.rows.len(), 41);
        let first = table.rows[0].outcome.as_ref().unwrap();
        assert_eq!(first.state.span_untilted(), 0.048);
        assert_eq!(first.metrics.energy_barrier, 0.0);
    }

    #[test]
    fn sweep_span_column_non_decreasing_vs_finer_oracle() {
        let space = reference_space();
        let coarse = sweep(&space, VaryParam::PrestressD, 21).unwrap();
        let fine = sweep(&space, VaryParam::PrestressD, 201).unwrap();
        for rows in [&coarse.rows, &fine.rows] {
            let mut prev = -1.0;
            for row in rows.iter() {
                let w = row.outcome.as_ref().unwrap().state.span_w();
                assert!(w >= prev - 1e-12);
                prev = w;
            }
        }
        // coarse rows appear in the finer sweep at matching D
        for (i, row) in coarse.rows.iter().enumerate() {
            let fine_row = &fine.rows[i * 10];
            assert!((row.param_value - fine_row.param_value).abs() < 1e-15);
            let a = row.outcome.as_ref().unwrap().state.span_w();
            let b = fine_row.outcome.as_ref().unwrap().state.span_w();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sweep_requires_the_varied_axis_to_be_ranged() {
        let space = reference_space();
        assert!(matches!(
            sweep(&space, VaryParam::ThicknessT, 5),
            Err(DesignError::NotRanged("t"))
        ));
    }

    #[test]
    fn sweep_captures_row_failures() {
        let mut space = reference_space();
        // slide the thickness range into slenderness-violating territory
        space.prestress_d = ParamRange::Point(0.020);
        space.thickness_t = ParamRange::Range {
            lo: 0.004,
            hi: 0.009,
            step: 0.001,
        };
        space.width_h = ParamRange::Point(0.015);
        let table = sweep(&space, VaryParam::ThicknessT, 6).unwrap();
        let ok = table.rows.iter().filter(|r| r.outcome.is_ok()).count();
        let failed = table.rows.len() - ok;
        assert!(ok >= 1 && failed >= 1, "ok {ok}, failed {failed}");
        for row in table.rows.iter().filter(|r| r.outcome.is_err()) {
            let msg = row.outcome.as_ref().unwrap_err();
            assert!(msg.contains("slenderness"), "message: {msg}");
        }
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sweep(&reference_space(), VaryParam::PrestressD, 41).unwrap();
        let b = sweep(&reference_space(), VaryParam::PrestressD, 41).unwrap();
        for (x, y) in a.rows.iter().zip(b.rows.iter()) {
            assert_eq!(x.param_value.to_bits(), y.param_value.to_bits());
            let (px, py) = (x.outcome.as_ref().unwrap(), y.outcome.as_ref().unwrap());
            assert_eq!(px.state.span_w().to_bits(), py.state.span_w().to_bits());
        }
    }

    #[test]
    fn design_point_recompute_check() {
        let space = reference_space();
        let p = evaluate_point(&space, 0.020, 0.000762, 0.015, 0.0937).unwrap();
        assert!(p.recompute_check(&space));
        let mut tampered = p.clone();
        tampered.prestress_d = 0.021;
        assert!(!tampered.recompute_check(&space));
    }

    #[test]
    fn single_point_space_echoes_or_reports_infeasible() {
        let mut space = reference_space();
        space.prestress_d = ParamRange::Point(0.020);
        let c = Constraints::default();
        match optimize(&space, &c, Objective::MaxSpan).unwrap() {
            OptimizeOutcome::Feasible { best, grid_best, .. } => {
                assert_eq!(best.prestress_d, 0.020);
                assert_eq!(best.state.span_w(), grid_best.state.span_w());
            }
            other => panic!("expected feasible, got {other:?}"),
        }

        let c = Constraints {
            min_span: Some(1.0), // a metre of span: impossible
            ..Default::default()
        };
        match optimize(&space, &c, Objective::MaxSpan).unwrap() {
            OptimizeOutcome::Infeasible { binding, .. } => {
                assert_eq!(binding[0].0, "min_span");
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn max_span_rides_the_monotone_axis_to_its_bound() {
        let space = reference_space();
        match optimize(&space, &Constraints::default(), Objective::MaxSpan).unwrap() {
            OptimizeOutcome::Feasible { best, grid_best, .. } => {
                assert_eq!(grid_best.prestress_d, 0.040);
                assert!((best.prestress_d - 0.040).abs() < 1e-6);
                assert!(objective_ge(&grid_best, &best, Objective::MaxSpan));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    fn objective_ge(grid: &DesignPoint, refined: &DesignPoint, obj: Objective) -> bool {
        obj.score(refined) <= obj.score(grid) + 1e-15
    }

    #[test]
    fn two_axis_grid_matches_exhaustive_enumeration() {
        let mut space = reference_space();
        space.prestress_d = ParamRange::Range {
            lo: 0.005,
            hi: 0.040,
            step: 0.007,
        };
        space.half_length_l = ParamRange::Range {
            lo: 0.060,
            hi: 0.120,
            step: 0.012,
        };
        let constraints = Constraints {
            max_snap_time: Some(0.050),
            ..Default::default()
        };
        for objective in [Objective::MaxSpan, Objective::MinSnapTime, Objective::MinEnergyBarrier] {
            let exhaustive_best = enumerate_grid(&space)
                .into_iter()
                .filter_map(|(d, t, h, l)| evaluate_point(&space, d, t, h, l).ok())
                .filter(|p| constraints.feasible(p))
                .min_by(|a, b| objective.score(a).partial_cmp(&objective.score(b)).unwrap())
                .unwrap();
            match optimize(&space, &constraints, objective).unwrap() {
                OptimizeOutcome::Feasible { grid_best, best, .. } => {
                    assert_eq!(grid_best.prestress_d, exhaustive_best.prestress_d);
                    assert_eq!(grid_best.half_length_l, exhaustive_best.half_length_l);
                    assert!(objective_ge(&grid_best, &best, objective));
                    assert!(constraints.feasible(&best));
                }
                other => panic!("expected feasible, got {other:?}"),
            }
        }
    }

    #[test]
    fn minimize_scalar_matches_grid_argmin_on_negated_span() {
        use crate::numerics::{minimize_scalar, Tolerance};
        let space = reference_space();
        let objective = |d: f64| {
            -evaluate_point(&space, d, 0.000762, 0.015, 0.0937)
                .unwrap()
                .state
                .span_w()
        };
        let (x, _) = minimize_scalar(objective, 0.0, 0.040, &Tolerance::minimization()).unwrap();

        let n = 10_000usize;
        let mut best = (0.0, f64::INFINITY);
        for i in 0..=n {
            let d = 0.040 * i as f64 / n as f64;
            let v = objective(d);
            if v < best.1 {
                best = (d, v);
            }
        }
        let spacing = 0.040 / n as f64;
        assert!(
            (x - best.0).abs() <= spacing + 1e-12,
            "minimizer {x} vs grid argmin {} (spacing {spacing})",
            best.0
        );
    }

    #[test]
    fn fatigue_endpoints_and_geometric_mean() {
        let thin = fatigue_advisory(FATIGUE_THICKNESS_THIN);
        assert!((thin.cycles_center - 20_000.0).abs() < 1e-9 * 20_000.0);
        assert!(!thin.extrapolated);

        let thick = fatigue_advisory(FATIGUE_THICKNESS_THICK);
        assert!((thick.cycles_center - 460.0).abs() < 1e-9 * 460.0);

        // geometric-mean thickness maps to the geometric mean of the
        // endpoint cycle counts (definition of log-log interpolation)
        let t_gm = (FATIGUE_THICKNESS_THIN * FATIGUE_THICKNESS_THICK).sqrt();
        let mid = fatigue_advisory(t_gm);
        let expected = (20_000.0_f64 * 460.0).sqrt();
        assert!(((mid.cycles_center - expected) / expected).abs() < 1e-12);
        assert_eq!(mid.cycles_low, mid.cycles_center / FATIGUE_SCATTER_FACTOR);
        assert_eq!(mid.cycles_high, mid.cycles_center * FATIGUE_SCATTER_FACTOR);
    }

    #[test]
    fn fatigue_flags_extrapolation_and_stays_monotone() {
        assert!(fatigue_advisory(0.0002).extrapolated);
        assert!(fatigue_advisory(0.002).extrapolated);
        let mut prev = f64::INFINITY;
        for i in 0..50 {
            let t = 0.0002 + i as f64 * (0.002 - 0.0002) / 49.0;
            let a = fatigue_advisory(t);
            assert!(a.cycles_center <= prev);
            prev = a.cycles_center;
        }
    }
}
