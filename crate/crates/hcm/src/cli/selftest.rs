//! Built-in oracle-comparison suite: special-function spot values,
//! quadrature cases, and the derived constants of the reference finger,
//! all checked against values frozen from a 50-digit arbitrary-precision
//! evaluation at build time.

use crate::buckling::{critical_load, span, AmplitudeClosure};
use crate::energetics::{energy_barrier, snap_time};
use crate::grasp::euler_fabric_load;
use crate::model::{
    section_properties, AssemblyConfig, Material, RibbonGeometry, SectionMode, PETG_DENSITY,
};
use crate::numerics::{bessel_j_quarter, gamma_fn, integrate, Tolerance};

struct Case {
    name: String,
    computed: f64,
    expected: f64,
    rel_tol: f64,
}

#[allow(clippy::excessive_precision)]
const BESSEL_ORACLE: [(f64, f64); 10] = [
    (0.25, 0.647_832_275_421_539_330_849_3),
    (1.0, 0.752_231_333_340_790_056_976_8),
    (2.5, 0.140_570_123_682_683_886_245_6),
    (5.0, -0.280_972_065_761_376_005_407_7),
    (7.5, 0.291_009_016_795_313_862_465_1),
    (10.0, -0.206_393_786_855_172_809_764_4),
    (13.0, 0.161_623_177_665_764_764_708_9),
    (20.0, 0.178_298_338_534_274_896_403_1),
    (35.0, -0.099_746_313_764_873_266_406_47),
    (50.0, 0.014_106_062_680_889_886_452_4),
];

#[allow(clippy::excessive_precision)]
const GAMMA_ORACLE: [(f64, f64); 5] = [
    (0.5, 1.772_453_850_905_516_027_298),
    (1.25, 0.906_402_477_055_477_077_982_7),
    (5.0, 24.0),
    (10.3, 716_430.689_062_376_406_625_4),
    (29.5, 1.634_812_519_827_426_644_438e30),
];

fn reference_finger() -> (Material, RibbonGeometry) {
    (
        Material::new(1.730e9, 0.38, PETG_DENSITY).expect("reference material is valid"),
        RibbonGeometry::new(0.015, 0.000762, 0.0937).expect("reference geometry is valid"),
    )
}

#[allow(clippy::excessive_precision)]
fn cases() -> Vec<Case> {
    let mut cases = Vec::new();

    for (x, expected) in BESSEL_ORACLE {
        cases.push(Case {
            name: format!("bessel_j_quarter({x})"),
            computed: bessel_j_quarter(x).unwrap_or(f64::NAN),
            expected,
            rel_tol: 1e-10,
        });
    }
    for (x, expected) in GAMMA_ORACLE {
        cases.push(Case {
            name: format!("gamma({x})"),
            computed: gamma_fn(x).unwrap_or(f64::NAN),
            expected,
            rel_tol: 1e-12,
        });
    }

    let tol = Tolerance::quadrature();
    cases.push(Case {
        name: "integral x^2 over [0,1]".to_string(),
        computed: integrate(|x| x * x, 0.0, 1.0, &tol).unwrap_or(f64::NAN),
        expected: 1.0 / 3.0,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "integral sin over [0,pi]".to_string(),
        computed: integrate(f64::sin, 0.0, std::f64::consts::PI, &tol).unwrap_or(f64::NAN),
        expected: 2.0,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "integral sqrt(1-z) J_{1/4}(z) over [0,1]".to_string(),
        computed: integrate(
            |z| (1.0 - z).max(0.0).sqrt() * bessel_j_quarter(z).unwrap_or(f64::NAN),
            0.0,
            1.0,
            &tol,
        )
        .unwrap_or(f64::NAN),
        expected: 0.438_770_255_326_654_014_467_712_1,
        rel_tol: 5e-10,
    });

    let (material, geometry) = reference_finger();
    cases.push(Case {
        name: "shear modulus (reference stock)".to_string(),
        computed: material.shear_modulus(),
        expected: 626_811_594.202_898_548_7,
        rel_tol: 1e-13,
    });

    let thin = section_properties(&material, &geometry, SectionMode::ThinStrip)
        .expect("reference section is valid");
    let printed = section_properties(&material, &geometry, SectionMode::AsPrinted)
        .expect("reference section is valid");
    cases.push(Case {
        name: "thin-strip I_eta".to_string(),
        computed: thin.moment_i(),
        expected: 5.530_634_1e-13,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "thin-strip C".to_string(),
        computed: thin.torsional_rigidity_c(),
        expected: 1.386_666_230_869_565e-3,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "as-printed I_eta".to_string(),
        computed: printed.moment_i(),
        expected: 2.143_125e-10,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "as-printed C".to_string(),
        computed: printed.torsional_rigidity_c(),
        expected: 0.705_163_043_478_260_8,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "P_cr thin-strip".to_string(),
        computed: critical_load(&thin, &geometry),
        expected: 0.729_680_383_164_796_5,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "P_cr as-printed".to_string(),
        computed: critical_load(&printed, &geometry),
        expected: 323.912_539_146_624_35,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "snap time t* (rho = 1270)".to_string(),
        computed: snap_time(&material, &geometry),
        expected: 0.039_487_806_573_223_8,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "energy barrier (thin-strip, D = 20 mm)".to_string(),
        computed: energy_barrier(critical_load(&thin, &geometry), 0.020),
        expected: 0.087_561_645_979_775_58,
        rel_tol: 1e-12,
    });
    cases.push(Case {
        name: "Euler fabric load (10 N mm^2, 86 mm)".to_string(),
        computed: euler_fabric_load(1e-5, 0.086),
        expected: 0.031_584_654_430_475_326,
        rel_tol: 1e-12,
    });

    let calibrated = AmplitudeClosure::Calibrated {
        d_ref: 0.020,
        w_ref: 0.086,
        tilt_ref: 10_f64.to_radians(),
    };
    let cfg = AssemblyConfig::new(0.048, 0.020, 10_f64.to_radians(), calibrated)
        .expect("reference assembly is valid");
    cases.push(Case {
        name: "calibrated span at the datum".to_string(),
        computed: span(&cfg, &material, &geometry, SectionMode::ThinStrip)
            .map(|s| s.span_w())
            .unwrap_or(f64::NAN),
        expected: 0.086,
        rel_tol: 1e-9,
    });

    let shortening = AssemblyConfig::new(
        0.048,
        0.020,
        10_f64.to_radians(),
        AmplitudeClosure::Shortening,
    )
    .expect("reference assembly is valid");
    cases.push(Case {
        name: "shortening span (D = 20 mm, tilt 10 deg)".to_string(),
        computed: span(&shortening, &material, &geometry, SectionMode::ThinStrip)
            .map(|s| s.span_w())
            .unwrap_or(f64::NAN),
        expected: 0.091_112_564_911_1,
        rel_tol: 1e-6,
    });

    cases
}

/// Run every case, print one PASS/FAIL line each plus a summary; returns
/// the number of failures.
pub fn run() -> usize {
    let cases = cases();
    let mut failed = 0usize;
    for case in &cases {
        let rel = if case.expected == 0.0 {
            case.computed.abs()
        } else {
            ((case.computed - case.expected) / case.expected).abs()
        };
        let ok = rel.is_finite() && rel < case.rel_tol;
        if !ok {
            failed += 1;
        }
        println!(
            "{} {} computed={:e} expected={:e} rel_err={:.2e} tol={:.0e}",
            if ok { "PASS" } else { "FAIL" },
            case.name,
            case.computed,
            case.expected,
            rel,
            case.rel_tol,
        );
    }
    println!(
        "selftest: {} / {} cases passed",
        cases.len() - failed,
        cases.len()
    );
    failed
}

#[cfg(test)]
mod tests {
    #[test]
    fn selftest_passes_on_a_fresh_build() {
        assert_eq!(super::run(), 0);
    }
}
