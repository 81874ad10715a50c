//! Domain types for the ribbon material, geometry, cross-section constants,
//! and gripper assembly.
//!
//! All values are SI base units (m, kg, s, N, Pa); unit conversion happens
//! at the CLI boundary only. Types are immutable after construction and
//! every constructor enforces the type's invariants.

use serde::Serialize;
use thiserror::Error;

use crate::buckling::AmplitudeClosure;

/// Documented default density of the PETG ribbon stock, kg/m³.
pub const PETG_DENSITY: f64 = 1270.0;

/// Narrow-strip limit: thickness/width must stay below this.
pub const MAX_SLENDERNESS: f64 = 0.5;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    #[error("material: {field} = {value} violates {constraint}")]
    InvalidMaterial {
        field: &'static str,
        value: f64,
        constraint: &'static str,
    },
    #[error("geometry: {field} = {value} violates {constraint}")]
    InvalidGeometry {
        field: &'static str,
        value: f64,
        constraint: &'static str,
    },
    #[error(
        "slenderness t/h = {slenderness:.4} violates the narrow-strip assumption (must be < {limit})"
    )]
    SlendernessViolation { slenderness: f64, limit: f64 },
    #[error("assembly: {field} = {value} violates {constraint}")]
    InvalidAssembly {
        field: &'static str,
        value: f64,
        constraint: &'static str,
    },
}

/// Isotropic elastic ribbon stock.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Material {
    youngs_modulus: f64,
    poisson_ratio: f64,
    density: f64,
}

impl Material {
    /// `youngs_modulus` in Pa, `density` in kg/m³.
    pub fn new(youngs_modulus: f64, poisson_ratio: f64, density: f64) -> Result<Self, ModelError> {
        if !(youngs_modulus.is_finite() && youngs_modulus > 0.0) {
            return Err(ModelError::InvalidMaterial {
                field: "youngs_modulus",
                value: youngs_modulus,
                constraint: "E > 0",
            });
        }
        if !(poisson_ratio.is_finite() && (0.0..0.5).contains(&poisson_ratio)) {
            return Err(ModelError::InvalidMaterial {
                field: "poisson_ratio",
                value: poisson_ratio,
                constraint: "0 <= nu < 0.5",
            });
        }
        if !(density.is_finite() && density > 0.0) {
            return Err(ModelError::InvalidMaterial {
                field: "density",
                value: density,
                constraint: "rho > 0",
            });
        }
        Ok(Self {
            youngs_modulus,
            poisson_ratio,
            density,
        })
    }

    pub fn youngs_modulus(&self) -> f64 {
        self.youngs_modulus
    }

    pub fn poisson_ratio(&self) -> f64 {
        self.poisson_ratio
    }

    pub fn density(&self) -> f64 {
        self.density
    }

    /// Isotropic shear modulus G = E / (2 (1 + ν)), Pa.
    /// Strictly positive and below E for every valid material.
    pub fn shear_modulus(&self) -> f64 {
        self.youngs_modulus / (2.0 * (1.0 + self.poisson_ratio))
    }
}

/// Ribbon dimensions: width h, thickness t, effective half-length l.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RibbonGeometry {
    width_h: f64,
    thickness_t: f64,
    half_length_l: f64,
}

impl RibbonGeometry {
    /// All lengths in metres. Enforces h > t > 0, l > 0 and the
    /// narrow-strip slenderness bound t/h < 0.5.
    pub fn new(width_h: f64, thickness_t: f64, half_length_l: f64) -> Result<Self, ModelError> {
        let geom = Self::new_unchecked(width_h, thickness_t, half_length_l)?;
        let s = geom.slenderness();
        if s >= MAX_SLENDERNESS {
            return Err(ModelError::SlendernessViolation {
                slenderness: s,
                limit: MAX_SLENDERNESS,
            });
        }
        Ok(geom)
    }

    /// Basic positivity/ordering checks only, skipping the narrow-strip
    /// slenderness bound. Exists so that degenerate sections (h = t) can be
    /// pushed through the section formulas in tests.
    pub fn new_unchecked(
        width_h: f64,
        thickness_t: f64,
        half_length_l: f64,
    ) -> Result<Self, ModelError> {
        if !(thickness_t.is_finite() && thickness_t > 0.0) {
            return Err(ModelError::InvalidGeometry {
                field: "thickness_t",
                value: thickness_t,
                constraint: "t > 0",
            });
        }
        if !(width_h.is_finite() && width_h >= thickness_t) {
            return Err(ModelError::InvalidGeometry {
                field: "width_h",
                value: width_h,
                constraint: "h >= t",
            });
        }
        if !(half_length_l.is_finite() && half_length_l > 0.0) {
            return Err(ModelError::InvalidGeometry {
                field: "half_length_l",
                value: half_length_l,
                constraint: "l > 0",
            });
        }
        Ok(Self {
            width_h,
            thickness_t,
            half_length_l,
        })
    }

    pub fn width_h(&self) -> f64 {
        self.width_h
    }

    pub fn thickness_t(&self) -> f64 {
        self.thickness_t
    }

    pub fn half_length_l(&self) -> f64 {
        self.half_length_l
    }

    pub fn slenderness(&self) -> f64 {
        self.thickness_t / self.width_h
    }
}

/// Interpretation of the cross-section constants.
///
/// `AsPrinted` reproduces the originally printed expressions literally
/// (I = h³t/12, C = G h³/3); `ThinStrip` uses the standard narrow-rectangle results
/// (I = h t³/12, C = G h t³/3). The as-printed torsion expression is
/// dimensionally inhomogeneous (length³ instead of length⁴), so its value
/// depends on the unit system; see [`section_properties`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum SectionMode {
    AsPrinted,
    #[default]
    ThinStrip,
}

impl SectionMode {
    pub fn name(&self) -> &'static str {
        match self {
            SectionMode::AsPrinted => "as-printed",
            SectionMode::ThinStrip => "thin-strip",
        }
    }
}

impl std::fmt::Display for SectionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SectionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "thin-strip" | "thinstrip" => Ok(SectionMode::ThinStrip),
            "as-printed" | "asprinted" => Ok(SectionMode::AsPrinted),
            other => Err(format!(
                "unknown section mode '{other}' (expected 'thin-strip' or 'as-printed')"
            )),
        }
    }
}

/// Derived cross-section constants under a recorded interpretation mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectionProperties {
    moment_i: f64,
    torsional_rigidity_c: f64,
    bending_rigidity_ei: f64,
    mode: SectionMode,
}

impl SectionProperties {
    /// Area moment of inertia I_η, m⁴.
    pub fn moment_i(&self) -> f64 {
        self.moment_i
    }

    /// Torsional rigidity C, N·m².
    pub fn torsional_rigidity_c(&self) -> f64 {
        self.torsional_rigidity_c
    }

    /// Bending rigidity E·I_η, N·m².
    pub fn bending_rigidity_ei(&self) -> f64 {
        self.bending_rigidity_ei
    }

    pub fn mode(&self) -> SectionMode {
        self.mode
    }
}

/// Section constants for the ribbon under the chosen interpretation.
///
/// ThinStrip: I = h t³/12, C = G h t³/3 (standard narrow rectangle).
///
/// AsPrinted: I = h³ t/12 and C = G h³/3 taken literally. The torsion
/// expression carries units of force·length rather than force·length², so
/// it is evaluated in the mm/MPa working convention it was stated in and
/// the resulting N·mm² figure converted to N·m². That reading reproduces
/// the documented as-printed reference values (C ≈ 7.05e5 N·mm²,
/// P_cr ≈ 3.2e2 N for the reference ribbon).
pub fn section_properties(
    material: &Material,
    geometry: &RibbonGeometry,
    mode: SectionMode,
) -> Result<SectionProperties, ModelError> {
    let s = geometry.slenderness();
    if s >= MAX_SLENDERNESS {
        return Err(ModelError::SlendernessViolation {
            slenderness: s,
            limit: MAX_SLENDERNESS,
        });
    }
    Ok(section_properties_unchecked(material, geometry, mode))
}

/// [`section_properties`] without the narrow-strip guard, for probing
/// degenerate sections.
pub fn section_properties_unchecked(
    material: &Material,
    geometry: &RibbonGeometry,
    mode: SectionMode,
) -> SectionProperties {
    let g = material.shear_modulus();
    let e = material.youngs_modulus();
    let h = geometry.width_h();
    let t = geometry.thickness_t();

    let (moment_i, torsional_rigidity_c) = match mode {
        SectionMode::ThinStrip => {
            let i = h * t.powi(3) / 12.0;
            let c = g * h * t.powi(3) / 3.0;
            (i, c)
        }
        SectionMode::AsPrinted => {
            let i = h.powi(3) * t / 12.0;
            let g_mpa = g * 1e-6;
            let h_mm = h * 1e3;
            let c_n_mm2 = g_mpa * h_mm.powi(3) / 3.0;
            (i, c_n_mm2 * 1e-6)
        }
    };

    SectionProperties {
        moment_i,
        torsional_rigidity_c,
        bending_rigidity_ei: e * moment_i,
        mode,
    }
}

/// Installed two-finger assembly: gap, prestress, inward tilt, and the
/// amplitude-closure rule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssemblyConfig {
    install_gap_lf: f64,
    prestress_d: f64,
    tilt_angle: f64,
    closure: AmplitudeClosure,
}

impl AssemblyConfig {
    /// Lengths in metres, tilt in radians (0 <= tilt < π/2).
    pub fn new(
        install_gap_lf: f64,
        prestress_d: f64,
        tilt_angle: f64,
        closure: AmplitudeClosure,
    ) -> Result<Self, ModelError> {
        if !(install_gap_lf.is_finite() && install_gap_lf > 0.0) {
            return Err(ModelError::InvalidAssembly {
                field: "install_gap_lf",
                value: install_gap_lf,
                constraint: "L_f > 0",
            });
        }
        if !(prestress_d.is_finite() && prestress_d >= 0.0) {
            return Err(ModelError::InvalidAssembly {
                field: "prestress_d",
                value: prestress_d,
                constraint: "D >= 0",
            });
        }
        if !(tilt_angle.is_finite() && (0.0..std::f64::consts::FRAC_PI_2).contains(&tilt_angle)) {
            return Err(ModelError::InvalidAssembly {
                field: "tilt_angle",
                value: tilt_angle,
                constraint: "0 <= tilt < pi/2",
            });
        }
        closure
            .validate()
            .map_err(|(field, value, constraint)| ModelError::InvalidAssembly {
                field,
                value,
                constraint,
            })?;
        Ok(Self {
            install_gap_lf,
            prestress_d,
            tilt_angle,
            closure,
        })
    }

    pub fn install_gap_lf(&self) -> f64 {
        self.install_gap_lf
    }

    pub fn prestress_d(&self) -> f64 {
        self.prestress_d
    }

    pub fn tilt_angle(&self) -> f64 {
        self.tilt_angle
    }

    pub fn closure(&self) -> &AmplitudeClosure {
        &self.closure
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn reference_material() -> Material {
        Material::new(1.730e9, 0.38, PETG_DENSITY).unwrap()
    }

    pub(crate) fn reference_geometry() -> RibbonGeometry {
        RibbonGeometry::new(0.015, 0.000762, 0.0937).unwrap()
    }

    #[test]
    fn shear_modulus_halves_at_zero_poisson() {
        let m = Material::new(1000.0, 0.0, 1.0).unwrap();
        assert_eq!(m.shear_modulus(), 500.0);
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn shear_modulus_reference_value() {
        // 1730 MPa, nu = 0.38 -> 626.8115942028985 MPa (frozen arithmetic)
        let g = reference_material().shear_modulus();
        assert!(((g - 626_811_594.202_898_548_7) / g).abs() < 1e-14);
    }

    #[test]
    fn shear_modulus_limit_toward_half_poisson() {
        let eps = 1e-9;
        let m = Material::new(2.0, 0.5 - eps, 1.0).unwrap();
        let g = m.shear_modulus();
        assert!(g > 2.0 / 3.0);
        assert!(g - 2.0 / 3.0 < 1e-9);
    }

    #[test]
    fn material_invariants_enforced() {
        assert!(Material::new(0.0, 0.3, 1.0).is_err());
        assert!(Material::new(1.0, 0.5, 1.0).is_err());
        assert!(Material::new(1.0, -0.1, 1.0).is_err());
        assert!(Material::new(1.0, 0.3, 0.0).is_err());
    }

    #[test]
    fn geometry_rejects_slenderness_violation() {
        let err = RibbonGeometry::new(0.010, 0.006, 0.1).unwrap_err();
        assert!(matches!(err, ModelError::SlendernessViolation { .. }));
        // ... but the unchecked constructor admits it
        assert!(RibbonGeometry::new_unchecked(0.010, 0.006, 0.1).is_ok());
    }

    #[test]
    fn thin_strip_section_reference_values() {
        let s = section_properties(&reference_material(), &reference_geometry(), SectionMode::ThinStrip)
            .unwrap();
        // frozen: I = 5.5306341e-13 m^4, C = 1.386666230869565e-3 N m^2
        assert!(((s.moment_i() - 5.530_634_1e-13) / s.moment_i()).abs() < 1e-12);
        assert!(((s.torsional_rigidity_c() - 1.386_666_230_869_565e-3)
            / s.torsional_rigidity_c())
        .abs()
            < 1e-12);
        assert_eq!(s.mode(), SectionMode::ThinStrip);
    }

    #[test]
    fn as_printed_section_reference_values() {
        let s = section_properties(&reference_material(), &reference_geometry(), SectionMode::AsPrinted)
            .unwrap();
        // frozen: I = 2.143125e-10 m^4 (= 214.3 mm^4),
        //         C = 0.7051630434782608 N m^2 (= 7.05e5 N mm^2)
        assert!(((s.moment_i() - 2.143_125e-10) / s.moment_i()).abs() < 1e-12);
        assert!(((s.torsional_rigidity_c() - 0.705_163_043_478_260_8)
            / s.torsional_rigidity_c())
        .abs()
            < 1e-12);
    }

    #[test]
    fn square_section_moments_coincide() {
        // at h = t both interpretations give I = h^4 / 12
        let m = reference_material();
        let g = RibbonGeometry::new_unchecked(0.004, 0.004, 0.1).unwrap();
        let thin = section_properties_unchecked(&m, &g, SectionMode::ThinStrip);
        let printed = section_properties_unchecked(&m, &g, SectionMode::AsPrinted);
        assert_eq!(thin.moment_i(), printed.moment_i());
        let expected = 0.004_f64.powi(4) / 12.0;
        assert!(((thin.moment_i() - expected) / expected).abs() < 1e-14);
    }

    #[test]
    fn assembly_invariants_enforced() {
        let c = AmplitudeClosure::Shortening;
        assert!(AssemblyConfig::new(0.0, 0.0, 0.0, c.clone()).is_err());
        assert!(AssemblyConfig::new(0.048, -1e-6, 0.0, c.clone()).is_err());
        assert!(AssemblyConfig::new(0.048, 0.0, 1.6, c.clone()).is_err());
        assert!(AssemblyConfig::new(0.048, 0.02, 0.17, c).is_ok());
    }

    proptest! {
        // thin-strip I <= as-printed I, equality iff h = t
        #[test]
        fn thin_strip_moment_never_exceeds_as_printed(
            h in 1e-3f64..0.1,
            ratio in 0.01f64..1.0,
        ) {
            let m = reference_material();
            let t = h * ratio;
            let g = RibbonGeometry::new_unchecked(h, t, 0.1).unwrap();
            let thin = section_properties_unchecked(&m, &g, SectionMode::ThinStrip);
            let printed = section_properties_unchecked(&m, &g, SectionMode::AsPrinted);
            prop_assert!(thin.moment_i() <= printed.moment_i() * (1.0 + 1e-15));
        }

        // I scales as s^4 and (thin-strip) C scales as s^4 under uniform
        // length scaling
        #[test]
        fn section_scaling_is_homogeneous(s in 0.1f64..10.0) {
            let m = reference_material();
            let g1 = reference_geometry();
            let g2 = RibbonGeometry::new(
                g1.width_h() * s,
                g1.thickness_t() * s,
                g1.half_length_l() * s,
            ).unwrap();
            let p1 = section_properties(&m, &g1, SectionMode::ThinStrip).unwrap();
            let p2 = section_properties(&m, &g2, SectionMode::ThinStrip).unwrap();
            let s4 = s.powi(4);
            prop_assert!(((p2.moment_i() / p1.moment_i() - s4) / s4).abs() < 1e-12);
            prop_assert!(((p2.torsional_rigidity_c() / p1.torsional_rigidity_c() - s4) / s4).abs() < 1e-12);
        }

        // G strictly decreasing in nu at fixed E
        #[test]
        fn shear_modulus_decreases_with_poisson(
            nu1 in 0.0f64..0.49,
            d in 1e-6f64..0.01,
        ) {
            let nu2 = (nu1 + d).min(0.4999);
            let m1 = Material::new(1e9, nu1, 1.0).unwrap();
            let m2 = Material::new(1e9, nu2, 1.0).unwrap();
            prop_assert!(m2.shear_modulus() < m1.shear_modulus());
        }
    }
}
