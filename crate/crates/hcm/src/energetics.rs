//! Snap-through timescale and bistable energy barrier.

use serde::Serialize;

use crate::model::{Material, RibbonGeometry};

/// Snap estimate and stored-energy gap of one prestressed finger.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SnapMetrics {
    /// Snap-through timescale t*, s. An order-of-magnitude estimate from
    /// ribbon inertia and stiffness, not a trajectory simulation.
    pub snap_time: f64,
    /// Energy gap between the bistable states, J. Zero exactly when D = 0.
    pub energy_barrier: f64,
}

/// t* = (2l)² / (t √(E/ρ_s)).
///
/// Depends only on l, t, E, ρ_s; width, installation gap, prestress, and
/// tilt do not enter.
///
/// For the reference finger this gives ~39.5 ms at the documented PETG
/// density. The 53 ms timescale figure quoted alongside the measured
/// 45.8 ± 6.7 ms is not reproducible from this formula with plausible
/// stock densities (it would need ρ_s ≈ 2.3e3 kg/m³ or a longer effective
/// length); reports therefore print the computed estimate and the quoted
/// figures side by side without reconciling them.
pub fn snap_time(material: &Material, geometry: &RibbonGeometry) -> f64 {
    let l = geometry.half_length_l();
    let wave_speed = (material.youngs_modulus() / material.density()).sqrt();
    (2.0 * l) * (2.0 * l) / (geometry.thickness_t() * wave_speed)
}

/// U_barr = 6 P_cr D, exactly bilinear in both arguments.
pub fn energy_barrier(pcr: f64, d: f64) -> f64 {
    6.0 * pcr * d
}

pub fn snap_metrics(material: &Material, geometry: &RibbonGeometry, pcr: f64, d: f64) -> SnapMetrics {
    SnapMetrics {
        snap_time: snap_time(material, geometry),
        energy_barrier: energy_barrier(pcr, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PETG_DENSITY;

    fn material() -> Material {
        Material::new(1.730e9, 0.38, PETG_DENSITY).unwrap()
    }

    fn geometry() -> RibbonGeometry {
        RibbonGeometry::new(0.015, 0.000762, 0.0937).unwrap()
    }

    #[test]
    fn snap_time_reference_value() {
        // frozen arithmetic: 39.4878065732 ms at rho = 1270 kg/m^3
        let t = snap_time(&material(), &geometry());
        assert!(((t - 0.039_487_806_573_223_8) / t).abs() < 1e-12, "t* = {t}");
    }

    #[test]
    fn snap_time_quadruples_when_length_doubles() {
        let g2 = RibbonGeometry::new(0.015, 0.000762, 2.0 * 0.0937).unwrap();
        let t1 = snap_time(&material(), &geometry());
        let t2 = snap_time(&material(), &g2);
        assert!((t2 / (4.0 * t1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn snap_time_ignores_width() {
        let narrow = RibbonGeometry::new(0.008, 0.000762, 0.0937).unwrap();
        assert_eq!(snap_time(&material(), &geometry()), snap_time(&material(), &narrow));
    }

    #[test]
    fn snap_time_monotone_in_modulus_and_density() {
        let stiffer = Material::new(2.0 * 1.730e9, 0.38, PETG_DENSITY).unwrap();
        let denser = Material::new(1.730e9, 0.38, 2.0 * PETG_DENSITY).unwrap();
        let base = snap_time(&material(), &geometry());
        assert!(snap_time(&stiffer, &geometry()) < base);
        assert!(snap_time(&denser, &geometry()) > base);
    }

    #[test]
    fn energy_barrier_reference_and_bilinearity() {
        assert_eq!(energy_barrier(0.73, 0.0), 0.0);
        // frozen: 6 * 0.7296803831647965 N * 0.020 m
        let u = energy_barrier(0.729_680_383_164_796_5, 0.020);
        assert!(((u - 0.087_561_645_979_775_58) / u).abs() < 1e-12);
        // (2 Pcr, D) and (Pcr, 2 D) coincide
        assert_eq!(energy_barrier(2.0 * 0.73, 0.02), energy_barrier(0.73, 2.0 * 0.02));
    }
}
