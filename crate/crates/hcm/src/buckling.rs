//! Elastic-stability core: lateral-torsional critical load, post-buckling
//! mode shape, amplitude closure, and the opening span of the two-finger
//! assembly.
//!
//! The buckled half-ribbon rotates laterally by
//! φ(z) = √(l−z) · A₁ · J_{1/4}(k/2 · (l−z)²), k = P_cr/√(E I C), and the
//! tip deflects by the nested integral
//! u(a) = (P_cr/EI) ∫₀^a ∫₀^α φ(z)(l−z) dz dα (outward positive; the
//! original axis orientation writes this with a minus sign). At the
//! critical load the Bessel argument reduces to a universal profile, so the
//! deflection and end-shortening integrals separate into two dimensionless
//! shape constants; both are evaluated with the same nested adaptive
//! quadrature and cached.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::model::{RibbonGeometry, SectionProperties};
use crate::numerics::{bessel_j_quarter, find_root, integrate, NumericsError, Tolerance};

/// Critical-load coefficient of the clamped half-ribbon, as printed:
/// P_cr = 5.5618 / l² · √(E I_η C). Half of it is (to the printed digits)
/// the first zero of J_{1/4}, which is why the mode shape vanishes at both
/// ends.
pub const CRITICAL_LOAD_COEFFICIENT: f64 = 5.5618;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BucklingError {
    #[error("mode shape position z = {z} outside [0, {l}]")]
    PositionOutOfRange { z: f64, l: f64 },
    #[error("deflection position a = {a} outside [0, {l}]")]
    DeflectionOutOfRange { a: f64, l: f64 },
    #[error("calibration datum inconsistent: {reason}")]
    CalibrationInconsistent { reason: String },
    #[error("amplitude bracket not found: residual still {residual:.3e} at A1 = {at:.3e}")]
    BracketNotFound { residual: f64, at: f64 },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Rule that fixes the buckled-mode amplitude A₁ from the prestressing
/// distance D.
///
/// `Shortening` is the physics-motivated default: the lateral deflection
/// consumes axial length equal to half the prestressing distance per
/// half-ribbon, Δ(A₁) = ½∫₀^l u′(z)² dz = D/2.
///
/// `Calibrated` anchors A₁ to a single measured datum (D_ref, W_ref at
/// tilt_ref) and extrapolates with the square-root amplitude law of a
/// supercritical buckling branch, A₁(D) = A₁(D_ref)·√(D/D_ref). Use it to
/// reproduce the measured span curve; the √D law is a documented modelling
/// assumption.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum AmplitudeClosure {
    Shortening,
    Calibrated {
        /// Reference prestress, m.
        d_ref: f64,
        /// Reported (tilt-corrected) span observed at `d_ref`, m.
        w_ref: f64,
        /// Inward tilt at which `w_ref` was observed, rad.
        tilt_ref: f64,
    },
}

impl AmplitudeClosure {
    pub fn name(&self) -> &'static str {
        match self {
            AmplitudeClosure::Shortening => "shortening",
            AmplitudeClosure::Calibrated { .. } => "calibrated",
        }
    }

    pub(crate) fn validate(&self) -> Result<(), (&'static str, f64, &'static str)> {
        if let AmplitudeClosure::Calibrated { d_ref, w_ref, tilt_ref } = self {
            if !(d_ref.is_finite() && *d_ref > 0.0) {
                return Err(("closure.d_ref", *d_ref, "D_ref > 0"));
            }
            if !(w_ref.is_finite() && *w_ref > 0.0) {
                return Err(("closure.w_ref", *w_ref, "W_ref > 0"));
            }
            if !(tilt_ref.is_finite()
                && (0.0..std::f64::consts::FRAC_PI_2).contains(tilt_ref))
            {
                return Err(("closure.tilt_ref", *tilt_ref, "0 <= tilt_ref < pi/2"));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for AmplitudeClosure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AmplitudeClosure::Shortening => f.write_str("shortening"),
            AmplitudeClosure::Calibrated { d_ref, w_ref, tilt_ref } => write!(
                f,
                "calibrated (D_ref = {:.1} mm, W_ref = {:.1} mm, tilt_ref = {:.1} deg)",
                d_ref * 1e3,
                w_ref * 1e3,
                tilt_ref.to_degrees()
            ),
        }
    }
}

/// Post-buckled state of the installed finger pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BuckledState {
    critical_load_pcr: f64,
    amplitude_a1: f64,
    tip_deflection_u_l: f64,
    span_untilted: f64,
    span_w: f64,
    prestress_d: f64,
    closure: AmplitudeClosure,
}

impl BuckledState {
    /// Lateral-torsional critical load, N.
    pub fn critical_load_pcr(&self) -> f64 {
        self.critical_load_pcr
    }

    /// Mode-shape amplitude (internal m^{-1/2} scale).
    pub fn amplitude_a1(&self) -> f64 {
        self.amplitude_a1
    }

    /// Outward tip deflection |u(l)| of one finger, m.
    pub fn tip_deflection_u_l(&self) -> f64 {
        self.tip_deflection_u_l
    }

    /// Span before the tilt correction: L_f + 2|u(l)|, m.
    pub fn span_untilted(&self) -> f64 {
        self.span_untilted
    }

    /// Reported span after the inward-tilt correction, floored at 0, m.
    pub fn span_w(&self) -> f64 {
        self.span_w
    }

    pub fn prestress_d(&self) -> f64 {
        self.prestress_d
    }

    /// The closure rule that fixed A₁; always carried so reports can name it.
    pub fn closure(&self) -> &AmplitudeClosure {
        &self.closure
    }
}

/// P_cr = 5.5618 / l² · √(E I_η · C) with the bending rigidity embedded in
/// the section properties.
pub fn critical_load(section: &SectionProperties, geometry: &RibbonGeometry) -> f64 {
    let l = geometry.half_length_l();
    CRITICAL_LOAD_COEFFICIENT / (l * l)
        * (section.bending_rigidity_ei() * section.torsional_rigidity_c()).sqrt()
}

/// Lateral rotational angle φ(z) of the buckled half-ribbon; φ(l) = 0
/// exactly and φ is linear in A₁.
pub fn mode_shape(
    z: f64,
    a1: f64,
    pcr: f64,
    section: &SectionProperties,
    l: f64,
) -> Result<f64, BucklingError> {
    if !(0.0..=l).contains(&z) {
        return Err(BucklingError::PositionOutOfRange { z, l });
    }
    let w = l - z;
    let k = pcr / (section.bending_rigidity_ei() * section.torsional_rigidity_c()).sqrt();
    let arg = 0.5 * k * w * w;
    Ok(w.sqrt() * a1 * bessel_j_quarter(arg)?)
}

/// Lateral deflection profile u(a) on [0, l], evaluated by nested adaptive
/// quadrature of the mode shape. Deflections are outward positive; u(0) = 0
/// and u grows monotonically for a single-signed φ.
#[derive(Debug, Clone)]
pub struct DeflectionProfile {
    a1: f64,
    pcr: f64,
    ei: f64,
    c: f64,
    l: f64,
    tol: Tolerance,
}

impl DeflectionProfile {
    pub fn new(a1: f64, pcr: f64, section: &SectionProperties, l: f64) -> Self {
        Self {
            a1,
            pcr,
            ei: section.bending_rigidity_ei(),
            c: section.torsional_rigidity_c(),
            l,
            tol: Tolerance::quadrature(),
        }
    }

    fn phi(&self, z: f64) -> f64 {
        let w = self.l - z;
        let k = self.pcr / (self.ei * self.c).sqrt();
        match bessel_j_quarter(0.5 * k * w * w) {
            Ok(j) => w.max(0.0).sqrt() * self.a1 * j,
            Err(_) => f64::NAN, // surfaces as NonFiniteIntegrand upstream
        }
    }

    /// u(a) = (P_cr/EI) ∫₀^a ∫₀^α φ(z)(l−z) dz dα.
    pub fn eval(&self, a: f64) -> Result<f64, BucklingError> {
        if !(0.0..=self.l).contains(&a) {
            return Err(BucklingError::DeflectionOutOfRange { a, l: self.l });
        }
        if a == 0.0 || self.a1 == 0.0 {
            return Ok(0.0);
        }
        let inner = |alpha: f64| -> f64 {
            integrate(|z| self.phi(z) * (self.l - z), 0.0, alpha, &self.tol).unwrap_or(f64::NAN)
        };
        let double = integrate(inner, 0.0, a, &self.tol)?;
        Ok(self.pcr / self.ei * double)
    }

    /// Slope u′(a) = (P_cr/EI) ∫₀^a φ(z)(l−z) dz.
    pub fn slope(&self, a: f64) -> Result<f64, BucklingError> {
        if !(0.0..=self.l).contains(&a) {
            return Err(BucklingError::DeflectionOutOfRange { a, l: self.l });
        }
        let v = integrate(|z| self.phi(z) * (self.l - z), 0.0, a, &self.tol)?;
        Ok(self.pcr / self.ei * v)
    }
}

/// Dimensionless shape constants of the buckled profile for a given Bessel
/// argument coefficient b (arg = b·(1−s)² in the scaled coordinate
/// s = z/l):
///
///   c_u = ∫₀¹ ∫₀^x (1−s)^{3/2} J_{1/4}(b(1−s)²) ds dx  (tip deflection)
///   c_delta = ∫₀¹ G(s)² ds with G the inner integral    (end shortening)
///
/// so that |u(l)| = (P_cr/EI)·A₁·l^{7/2}·c_u and
/// Δ(A₁) = ½ (P_cr/EI)² A₁² l⁶ c_delta. The substitution is exact; both
/// constants are computed with the nested adaptive quadrature above.
#[derive(Debug, Clone, Copy, PartialEq)]
struct ShapeConstants {
    c_u: f64,
    c_delta: f64,
}

fn shape_constants(b: f64) -> Result<ShapeConstants, NumericsError> {
    let tol = Tolerance::quadrature();
    let scaled_phi = |s: f64| -> f64 {
        let w = (1.0 - s).max(0.0);
        match bessel_j_quarter(b * w * w) {
            Ok(j) => w.powf(1.5) * j,
            Err(_) => f64::NAN,
        }
    };
    let inner = |x: f64| -> f64 { integrate(scaled_phi, 0.0, x, &tol).unwrap_or(f64::NAN) };
    let c_u = integrate(inner, 0.0, 1.0, &tol)?;
    let c_delta = integrate(
        |s| {
            let g = inner(s);
            g * g
        },
        0.0,
        1.0,
        &tol,
    )?;
    Ok(ShapeConstants { c_u, c_delta })
}

/// Shape constants at the critical load, where b = 5.5618/2 regardless of
/// geometry or section mode. Computed once.
fn critical_shape_constants() -> Result<ShapeConstants, NumericsError> {
    static CACHE: OnceLock<Result<ShapeConstants, NumericsError>> = OnceLock::new();
    CACHE
        .get_or_init(|| shape_constants(CRITICAL_LOAD_COEFFICIENT / 2.0))
        .clone()
}

fn constants_for(
    pcr: f64,
    section: &SectionProperties,
    l: f64,
) -> Result<ShapeConstants, NumericsError> {
    let b = 0.5 * pcr * l * l
        / (section.bending_rigidity_ei() * section.torsional_rigidity_c()).sqrt();
    let b_crit = CRITICAL_LOAD_COEFFICIENT / 2.0;
    if (b / b_crit - 1.0).abs() < 1e-9 {
        critical_shape_constants()
    } else {
        shape_constants(b)
    }
}

/// |u(l)| per unit amplitude: (P_cr/EI)·l^{7/2}·c_u.
fn unit_tip_deflection(
    pcr: f64,
    section: &SectionProperties,
    l: f64,
) -> Result<f64, NumericsError> {
    let k = constants_for(pcr, section, l)?;
    Ok(pcr / section.bending_rigidity_ei() * l.powf(3.5) * k.c_u)
}

/// Amplitude A₁ for prestress D under the given closure. D = 0 yields 0.
///
/// Shortening: bracketed root finding on the monotone residual
/// Δ(A₁) − D/2 (Δ is exactly quadratic in A₁ because u′ is linear in A₁).
/// Calibrated: the datum (D_ref, W_ref, tilt_ref) is anchored through the
/// installation gap, then A₁(D) = A₁(D_ref)·√(D/D_ref).
pub fn solve_amplitude(
    d: f64,
    closure: &AmplitudeClosure,
    pcr: f64,
    section: &SectionProperties,
    geometry: &RibbonGeometry,
    install_gap: f64,
) -> Result<f64, BucklingError> {
    if d == 0.0 {
        return Ok(0.0);
    }
    let l = geometry.half_length_l();
    match closure {
        AmplitudeClosure::Shortening => {
            let k = constants_for(pcr, section, l)?;
            let slope_scale = pcr / section.bending_rigidity_ei();
            // Δ(A1) = 0.5 ∫ u'(z)² dz = 0.5 (A1 · slope_scale)² l⁶ c_delta
            let shortening = |a1: f64| {
                0.5 * (a1 * slope_scale) * (a1 * slope_scale) * l.powi(6) * k.c_delta
            };
            let residual = |a1: f64| shortening(a1) - d / 2.0;

            // residual(0) = -D/2 < 0; expand until the sign flips
            let mut hi = 1.0;
            let mut expansions = 0;
            while residual(hi) < 0.0 {
                hi *= 2.0;
                expansions += 1;
                if expansions > 200 {
                    return Err(BucklingError::BracketNotFound {
                        residual: residual(hi),
                        at: hi,
                    });
                }
            }
            Ok(find_root(residual, 0.0, hi, &Tolerance::root())?)
        }
        AmplitudeClosure::Calibrated { d_ref, w_ref, tilt_ref } => {
            let u_ref = (w_ref + 2.0 * l * tilt_ref.sin() - install_gap) / 2.0;
            if u_ref < 0.0 {
                return Err(BucklingError::CalibrationInconsistent {
                    reason: format!(
                        "W_ref = {:.4} m is below the tilt-corrected installation gap",
                        w_ref
                    ),
                });
            }
            let m = unit_tip_deflection(pcr, section, l)?;
            let a1_ref = u_ref / m;
            Ok(a1_ref * (d / d_ref).sqrt())
        }
    }
}

/// Full span pipeline: section constants, critical load, amplitude closure,
/// tip deflection, and the opening gap
/// W_untilted = L_f + 2|u(l)|, W = max(W_untilted − 2 l sin(tilt), 0).
pub fn span(
    config: &crate::model::AssemblyConfig,
    material: &crate::model::Material,
    geometry: &RibbonGeometry,
    mode: crate::model::SectionMode,
) -> Result<BuckledState, SpanError> {
    let section = crate::model::section_properties(material, geometry, mode)?;
    let pcr = critical_load(&section, geometry);
    let a1 = solve_amplitude(
        config.prestress_d(),
        config.closure(),
        pcr,
        &section,
        geometry,
        config.install_gap_lf(),
    )?;
    let u_l = if a1 == 0.0 {
        0.0
    } else {
        a1 * unit_tip_deflection(pcr, &section, geometry.half_length_l())
            .map_err(BucklingError::from)?
    };
    let span_untilted = config.install_gap_lf() + 2.0 * u_l;
    let span_w =
        (span_untilted - 2.0 * geometry.half_length_l() * config.tilt_angle().sin()).max(0.0);
    Ok(BuckledState {
        critical_load_pcr: pcr,
        amplitude_a1: a1,
        tip_deflection_u_l: u_l,
        span_untilted,
        span_w,
        prestress_d: config.prestress_d(),
        closure: config.closure().clone(),
    })
}

/// Errors from the span pipeline: invalid inputs or buckling failures.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpanError {
    #[error(transparent)]
    Model(#[from] crate::model::ModelError),
    #[error(transparent)]
    Buckling(#[from] BucklingError),
}
