//! Analysis report assembly and rendering (text, JSON, CSV).
//!
//! JSON carries raw SI values with a stable field order; the text report
//! adds workshop-unit (mm/ms) presentation and the measured reference
//! context.

use serde::Serialize;

use super::dataset;
use crate::buckling::BuckledState;
use crate::design::FatigueAdvisory;
use crate::energetics::SnapMetrics;
use crate::model::{Material, RibbonGeometry, SectionProperties};

/// Deterministic significant-digit formatting (scientific notation, '.'
/// decimal separator, locale-independent).
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    format!("{:.*e}", sig.saturating_sub(1), x)
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub youngs_modulus_pa: f64,
    pub poisson_ratio: f64,
    pub density_kg_m3: f64,
    pub shear_modulus_pa: f64,
    pub width_h_m: f64,
    pub thickness_t_m: f64,
    pub half_length_l_m: f64,
    pub install_gap_lf_m: f64,
    pub prestress_d_m: f64,
    pub tilt_rad: f64,
    pub section_mode: String,
    pub closure: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SectionEcho {
    pub moment_i_m4: f64,
    pub torsional_rigidity_c_nm2: f64,
    pub bending_rigidity_ei_nm2: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Results {
    pub critical_load_pcr_n: f64,
    pub amplitude_a1: f64,
    pub tip_deflection_u_l_m: f64,
    pub span_untilted_m: f64,
    pub span_w_m: f64,
    pub snap_time_s: f64,
    pub energy_barrier_j: f64,
}

/// Measured figures quoted for context, with ratios computed from the
/// configured design.
#[derive(Debug, Clone, Serialize)]
pub struct ReferenceContext {
    pub measured_span_m: f64,
    pub measured_snap_s: f64,
    pub measured_snap_tol_s: f64,
    pub quoted_theory_snap_s: f64,
    pub reference_gripper_span_m: f64,
    pub reference_gripper_close_s: f64,
    /// Configured span over the reference gripper's 32 mm.
    pub span_ratio: f64,
    /// Reference close time over the measured snap time.
    pub speed_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub inputs: InputEcho,
    pub section: SectionEcho,
    pub results: Results,
    pub fatigue: FatigueAdvisory,
    pub context: ReferenceContext,
}

impl AnalyzeReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        material: &Material,
        geometry: &RibbonGeometry,
        install_gap: f64,
        tilt: f64,
        section: &SectionProperties,
        state: &BuckledState,
        metrics: &SnapMetrics,
        fatigue: FatigueAdvisory,
    ) -> Self {
        Self {
            inputs: InputEcho {
                youngs_modulus_pa: material.youngs_modulus(),
                poisson_ratio: material.poisson_ratio(),
                density_kg_m3: material.density(),
                shear_modulus_pa: material.shear_modulus(),
                width_h_m: geometry.width_h(),
                thickness_t_m: geometry.thickness_t(),
                half_length_l_m: geometry.half_length_l(),
                install_gap_lf_m: install_gap,
                prestress_d_m: state.prestress_d(),
                tilt_rad: tilt,
                section_mode: section.mode().name().to_string(),
                closure: state.closure().to_string(),
            },
            section: SectionEcho {
                moment_i_m4: section.moment_i(),
                torsional_rigidity_c_nm2: section.torsional_rigidity_c(),
                bending_rigidity_ei_nm2: section.bending_rigidity_ei(),
            },
            results: Results {
                critical_load_pcr_n: state.critical_load_pcr(),
                amplitude_a1: state.amplitude_a1(),
                tip_deflection_u_l_m: state.tip_deflection_u_l(),
                span_untilted_m: state.span_untilted(),
                span_w_m: state.span_w(),
                snap_time_s: metrics.snap_time,
                energy_barrier_j: metrics.energy_barrier,
            },
            fatigue,
            context: ReferenceContext {
                measured_span_m: dataset::MEASURED_SPAN_M,
                measured_snap_s: dataset::MEASURED_SNAP_S,
                measured_snap_tol_s: dataset::MEASURED_SNAP_TOL_S,
                quoted_theory_snap_s: dataset::QUOTED_THEORY_SNAP_S,
                reference_gripper_span_m: dataset::REFERENCE_GRIPPER_SPAN_M,
                reference_gripper_close_s: dataset::REFERENCE_GRIPPER_CLOSE_S,
                span_ratio: state.span_w() / dataset::REFERENCE_GRIPPER_SPAN_M,
                speed_ratio: dataset::REFERENCE_GRIPPER_CLOSE_S / dataset::MEASURED_SNAP_S,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Two-column key,value CSV of the SI fields.
    pub fn to_csv(&self, sig: usize) -> String {
        let f = |x: f64| format_sig(x, sig);
        let mut rows: Vec<(String, String)> = vec![
            ("youngs_modulus_pa".into(), f(self.inputs.youngs_modulus_pa)),
            ("poisson_ratio".into(), f(self.inputs.poisson_ratio)),
            ("density_kg_m3".into(), f(self.inputs.density_kg_m3)),
            ("shear_modulus_pa".into(), f(self.inputs.shear_modulus_pa)),
            ("width_h_m".into(), f(self.inputs.width_h_m)),
            ("thickness_t_m".into(), f(self.inputs.thickness_t_m)),
            ("half_length_l_m".into(), f(self.inputs.half_length_l_m)),
            ("install_gap_lf_m".into(), f(self.inputs.install_gap_lf_m)),
            ("prestress_d_m".into(), f(self.inputs.prestress_d_m)),
            ("tilt_rad".into(), f(self.inputs.tilt_rad)),
            ("section_mode".into(), self.inputs.section_mode.clone()),
            ("closure".into(), self.inputs.closure.replace(',', ";")),
            ("moment_i_m4".into(), f(self.section.moment_i_m4)),
            (
                "torsional_rigidity_c_nm2".into(),
                f(self.section.torsional_rigidity_c_nm2),
            ),
            (
                "bending_rigidity_ei_nm2".into(),
                f(self.section.bending_rigidity_ei_nm2),
            ),
            ("critical_load_pcr_n".into(), f(self.results.critical_load_pcr_n)),
            ("amplitude_a1".into(), f(self.results.amplitude_a1)),
            ("tip_deflection_u_l_m".into(), f(self.results.tip_deflection_u_l_m)),
            ("span_untilted_m".into(), f(self.results.span_untilted_m)),
            ("span_w_m".into(), f(self.results.span_w_m)),
            ("snap_time_s".into(), f(self.results.snap_time_s)),
            ("energy_barrier_j".into(), f(self.results.energy_barrier_j)),
            ("fatigue_cycles_low".into(), f(self.fatigue.cycles_low)),
            ("fatigue_cycles_center".into(), f(self.fatigue.cycles_center)),
            ("fatigue_cycles_high".into(), f(self.fatigue.cycles_high)),
            ("span_ratio".into(), f(self.context.span_ratio)),
            ("speed_ratio".into(), f(self.context.speed_ratio)),
        ];
        let mut out = String::from("key,value\n");
        for (k, v) in rows.drain(..) {
            out.push_str(&k);
            out.push(',');
            out.push_str(&v);
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self, sig: usize) -> String {
        let f = |x: f64| format_sig(x, sig);
        let mm = |x: f64| format_sig(x * 1e3, sig);
        let ms = |x: f64| format_sig(x * 1e3, sig);
        let i = &self.inputs;
        let r = &self.results;
        let c = &self.context;
        let mut s = String::new();
        s.push_str("bistable finger analysis\n");
        s.push_str("========================\n");
        s.push_str("inputs\n");
        s.push_str(&format!(
            "  E = {} MPa, nu = {}, rho = {} kg/m^3, G = {} MPa\n",
            f(i.youngs_modulus_pa / 1e6),
            f(i.poisson_ratio),
            f(i.density_kg_m3),
            f(i.shear_modulus_pa / 1e6),
        ));
        s.push_str(&format!(
            "  h = {} mm, t = {} mm, l = {} mm\n",
            mm(i.width_h_m),
            mm(i.thickness_t_m),
            mm(i.half_length_l_m),
        ));
        s.push_str(&format!(
            "  L_f = {} mm, D = {} mm, tilt = {} deg\n",
            mm(i.install_gap_lf_m),
            mm(i.prestress_d_m),
            f(i.tilt_rad.to_degrees()),
        ));
        s.push_str(&format!("  section mode: {}\n", i.section_mode));
        s.push_str(&format!("  closure: {}\n", i.closure));
        s.push_str("section constants\n");
        s.push_str(&format!(
            "  I_eta = {} m^4 ({} mm^4)\n",
            f(self.section.moment_i_m4),
            f(self.section.moment_i_m4 * 1e12),
        ));
        s.push_str(&format!(
            "  C = {} N m^2 ({} N mm^2)\n",
            f(self.section.torsional_rigidity_c_nm2),
            f(self.section.torsional_rigidity_c_nm2 * 1e6),
        ));
        s.push_str(&format!(
            "  E I_eta = {} N m^2\n",
            f(self.section.bending_rigidity_ei_nm2),
        ));
        s.push_str("results\n");
        s.push_str(&format!("  P_cr = {} N\n", f(r.critical_load_pcr_n)));
        s.push_str(&format!("  A1 = {}\n", f(r.amplitude_a1)));
        s.push_str(&format!(
            "  u(l) = {} m ({} mm)\n",
            f(r.tip_deflection_u_l_m),
            mm(r.tip_deflection_u_l_m),
        ));
        s.push_str(&format!(
            "  W untilted = {} m ({} mm)\n",
            f(r.span_untilted_m),
            mm(r.span_untilted_m),
        ));
        s.push_str(&format!(
            "  W reported = {} m ({} mm)\n",
            f(r.span_w_m),
            mm(r.span_w_m),
        ));
        s.push_str(&format!(
            "  t* = {} s ({} ms)\n",
            f(r.snap_time_s),
            ms(r.snap_time_s),
        ));
        s.push_str(&format!("  U_barr = {} J\n", f(r.energy_barrier_j)));
        s.push_str("fatigue advisory\n");
        s.push_str(&format!(
            "  cycles ~ {} ({} - {}){}  [{}]\n",
            f(self.fatigue.cycles_center),
            f(self.fatigue.cycles_low),
            f(self.fatigue.cycles_high),
            if self.fatigue.extrapolated {
                ", extrapolated beyond the measured thickness window"
            } else {
                ""
            },
            crate::design::FATIGUE_SCOPE,
        ));
        s.push_str("reference context (measured figures, not computed)\n");
        s.push_str(&format!(
            "  measured span at D = 20 mm, 10 deg tilt: {:.0} mm\n",
            c.measured_span_m * 1e3,
        ));
        s.push_str(&format!(
            "  measured snap time: {:.1} +/- {:.1} ms; quoted timescale estimate: {:.0} ms\n",
            c.measured_snap_s * 1e3,
            c.measured_snap_tol_s * 1e3,
            c.quoted_theory_snap_s * 1e3,
        ));
        s.push_str(&format!(
            "  conventional reference gripper: {:.0} mm span, {:.0} ms close\n",
            c.reference_gripper_span_m * 1e3,
            c.reference_gripper_close_s * 1e3,
        ));
        s.push_str(&format!(
            "  span ratio vs reference: {:.1}x (configured W / 32 mm)\n",
            c.span_ratio,
        ));
        s.push_str(&format!(
            "  speed ratio vs reference: {:.1}x (500 ms / 45.8 ms measured)\n",
            c.speed_ratio,
        ));
        s
    }
}
