//! Subcommand implementations.

use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::{resolve_object, ObjectSection, RunConfig, MM};
use super::report::{format_sig, AnalyzeReport};
use super::{dataset, selftest, CliError, OutputFormat};
use crate::buckling::span;
use crate::design::{
    enumerate_grid, evaluate_point, fatigue_advisory, optimize, sweep, Constraints, DesignPoint,
    Objective, OptimizeOutcome, SweepTable, VaryParam,
};
use crate::grasp::{grasp_feasibility, GraspReport};
use crate::model::section_properties;

/// Whole-file atomic write: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = path.with_extension(format!(
        "{}.tmp",
        path.extension().and_then(|e| e.to_str()).unwrap_or("out")
    ));
    std::fs::write(&tmp, contents)
        .map_err(|e| CliError::Compute(format!("writing {}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path)
        .map_err(|e| CliError::Compute(format!("renaming into {}: {e}", path.display())))?;
    Ok(())
}

fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

/// Build the full analysis report for a point config.
pub fn build_analyze_report(config: &RunConfig) -> Result<AnalyzeReport, CliError> {
    let material = config.material()?;
    let geometry = config.geometry()?;
    let assembly = config.assembly()?;
    let mode = config.section_mode()?;
    let section = section_properties(&material, &geometry, mode)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let state = span(&assembly, &material, &geometry, mode)
        .map_err(|e| CliError::Compute(format!("span: {e}")))?;
    let metrics = crate::energetics::snap_metrics(
        &material,
        &geometry,
        state.critical_load_pcr(),
        assembly.prestress_d(),
    );
    Ok(AnalyzeReport::new(
        &material,
        &geometry,
        assembly.install_gap_lf(),
        assembly.tilt_angle(),
        &section,
        &state,
        &metrics,
        fatigue_advisory(geometry.thickness_t()),
    ))
}

pub fn analyze(
    config_path: &Path,
    dump_config: bool,
    format: Option<OutputFormat>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let config = RunConfig::load(config_path)?;
    if dump_config {
        print!("{}", config.dump()?);
        return Ok(());
    }
    let report = build_analyze_report(&config)?;
    let sig = config.precision();
    let format = match format {
        Some(f) => Some(f),
        None => config
            .output
            .format
            .as_deref()
            .map(|s| {
                s.parse()
                    .map_err(|e: String| CliError::Parse(format!("output.format: {e}")))
            })
            .transpose()?,
    };
    let rendered = match format {
        Some(OutputFormat::Json) => report.to_json(),
        Some(OutputFormat::Csv) => report.to_csv(sig),
        Some(OutputFormat::Text) | None => report.to_text(sig),
    };
    let out = out.or_else(|| config.output.path.as_ref().map(PathBuf::from));
    emit(out.as_deref(), &rendered)
}

/// Fixed sweep CSV schema. Numeric cells are empty on per-row failure and
/// the status column carries the message.
pub const SWEEP_CSV_HEADER: &str =
    "param,Pcr_N,A1,u_l_mm,W_untilted_mm,W_tilted_mm,t_star_ms,U_barr_J,status";

pub fn render_sweep_csv(table: &SweepTable, sig: usize) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in &table.rows {
        let param = format_sig(row.param_value / MM, sig);
        match &row.outcome {
            Ok(p) => {
                let cells = [
                    param,
                    format_sig(p.state.critical_load_pcr(), sig),
                    format_sig(p.state.amplitude_a1(), sig),
                    format_sig(p.state.tip_deflection_u_l() / MM, sig),
                    format_sig(p.state.span_untilted() / MM, sig),
                    format_sig(p.state.span_w() / MM, sig),
                    format_sig(p.metrics.snap_time * 1e3, sig),
                    format_sig(p.metrics.energy_barrier, sig),
                    "ok".to_string(),
                ];
                out.push_str(&cells.join(","));
            }
            Err(msg) => {
                let sanitized = msg.replace([',', '\n'], ";");
                out.push_str(&format!("{param},,,,,,,,{sanitized}"));
            }
        }
        out.push('\n');
    }
    out
}

#[allow(clippy::too_many_arguments)]
pub fn sweep_command(
    config_path: &Path,
    vary: &str,
    from: f64,
    to: f64,
    steps: usize,
    out: &Path,
) -> Result<(), CliError> {
    let config = RunConfig::load(config_path)?;
    let vary: VaryParam = vary.parse().map_err(CliError::Usage)?;
    if !(from.is_finite() && to.is_finite() && from <= to) {
        return Err(CliError::Usage(format!(
            "sweep range: --from {from} must not exceed --to {to}"
        )));
    }
    if steps == 0 {
        return Err(CliError::Usage("sweep requires --steps >= 1".to_string()));
    }

    let mut space = config.design_space()?;
    let step = if steps > 1 {
        (to - from) * MM / (steps - 1) as f64
    } else {
        1.0
    };
    let range = crate::design::ParamRange::Range {
        lo: from * MM,
        hi: to * MM,
        step: step.max(f64::MIN_POSITIVE),
    };
    match vary {
        VaryParam::PrestressD => space.prestress_d = range,
        VaryParam::ThicknessT => space.thickness_t = range,
        VaryParam::WidthH => space.width_h = range,
        VaryParam::HalfLengthL => space.half_length_l = range,
    }

    let table = sweep(&space, vary, steps).map_err(|e| CliError::Compute(e.to_string()))?;
    let csv = render_sweep_csv(&table, config.precision());
    write_atomic(out, &csv)
}

/// JSON payload of a grasp check.
#[derive(Debug, Clone, Serialize)]
pub struct GraspCheckReport {
    pub object: String,
    pub kind: String,
    pub span_w_m: f64,
    pub closure: String,
    pub forces: crate::grasp::GripperForces,
    #[serde(flatten)]
    pub report: GraspReport,
}

pub fn build_grasp_report(
    config: &RunConfig,
    object_arg: Option<&str>,
) -> Result<GraspCheckReport, CliError> {
    let section = match object_arg {
        Some(arg) => {
            let path = Path::new(arg);
            if path.exists() {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Parse(format!("object file {}: {e}", path.display()))
                })?;
                toml::from_str::<ObjectSection>(&text)
                    .map_err(|e| CliError::Parse(format!("object file {}: {e}", path.display())))?
            } else {
                ObjectSection {
                    dataset_key: Some(arg.to_string()),
                    ..Default::default()
                }
            }
        }
        None => config.object.clone().ok_or_else(|| {
            CliError::Usage(
                "grasp-check needs an [object] section in the config or --object <path|dataset-key>"
                    .to_string(),
            )
        })?,
    };

    let (object, forces) = resolve_object(&section)?;
    let material = config.material()?;
    let geometry = config.geometry()?;
    let assembly = config.assembly()?;
    let mode = config.section_mode()?;
    let state = span(&assembly, &material, &geometry, mode)
        .map_err(|e| CliError::Compute(format!("span: {e}")))?;
    let report = grasp_feasibility(&state, &forces, &object);
    Ok(GraspCheckReport {
        object: object.label().to_string(),
        kind: object.kind().name().to_string(),
        span_w_m: state.span_w(),
        closure: state.closure().to_string(),
        forces,
        report,
    })
}

pub fn grasp_check(
    config_path: &Path,
    object_arg: Option<&str>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let config = RunConfig::load(config_path)?;
    let report = build_grasp_report(&config, object_arg)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Compute(format!("grasp report serialization: {e}")))?;
    let out = out.or_else(|| config.output.path.as_ref().map(PathBuf::from));
    emit(out.as_deref(), &format!("{json}\n"))
}

fn describe_point(p: &DesignPoint, sig: usize) -> String {
    format!(
        "D = {} mm, t = {} mm, h = {} mm, l = {} mm | W = {} mm (untilted {} mm), \
         P_cr = {} N, t* = {} ms, U_barr = {} J",
        format_sig(p.prestress_d / MM, sig),
        format_sig(p.thickness_t / MM, sig),
        format_sig(p.width_h / MM, sig),
        format_sig(p.half_length_l / MM, sig),
        format_sig(p.state.span_w() / MM, sig),
        format_sig(p.state.span_untilted() / MM, sig),
        format_sig(p.state.critical_load_pcr(), sig),
        format_sig(p.metrics.snap_time * 1e3, sig),
        format_sig(p.metrics.energy_barrier, sig),
    )
}

#[allow(clippy::too_many_arguments)]
pub fn optimize_command(
    config_path: &Path,
    objective: Objective,
    min_span_mm: Option<f64>,
    max_snap_time_ms: Option<f64>,
    max_pcr_n: Option<f64>,
    max_energy_barrier_j: Option<f64>,
    min_fatigue_cycles: Option<f64>,
    exhaustive: bool,
) -> Result<(), CliError> {
    let config = RunConfig::load(config_path)?;
    let space = config.design_space()?;
    let constraints = Constraints {
        min_span: min_span_mm.map(|v| v * MM),
        max_snap_time: max_snap_time_ms.map(|v| v * 1e-3),
        max_pcr: max_pcr_n,
        max_energy_barrier: max_energy_barrier_j,
        min_fatigue_cycles,
    };
    let sig = config.precision();

    let outcome =
        optimize(&space, &constraints, objective).map_err(|e| CliError::Compute(e.to_string()))?;

    if exhaustive {
        // debug oracle: brute-force enumeration of the same grid
        let best = enumerate_grid(&space)
            .into_iter()
            .filter_map(|(d, t, h, l)| evaluate_point(&space, d, t, h, l).ok())
            .filter(|p| constraints.feasible(p))
            .min_by(|a, b| {
                objective
                    .score(a)
                    .partial_cmp(&objective.score(b))
                    .expect("scores are finite")
            });
        match best {
            Some(p) => println!("exhaustive: {}", describe_point(&p, sig)),
            None => println!("exhaustive: infeasible"),
        }
    }

    match outcome {
        OptimizeOutcome::Feasible {
            best,
            grid_best,
            refinement_rounds,
        } => {
            println!("objective: {}", objective.name());
            println!("grid winner: {}", describe_point(&grid_best, sig));
            println!(
                "refined winner ({refinement_rounds} rounds): {}",
                describe_point(&best, sig)
            );
            let advisory = fatigue_advisory(best.thickness_t);
            println!(
                "fatigue advisory: ~{} cycles ({} - {}) [{}]",
                format_sig(advisory.cycles_center, 3),
                format_sig(advisory.cycles_low, 3),
                format_sig(advisory.cycles_high, 3),
                crate::design::FATIGUE_SCOPE,
            );
            Ok(())
        }
        OptimizeOutcome::Infeasible {
            binding,
            evaluated,
            evaluation_errors,
        } => {
            println!("objective: {}", objective.name());
            println!(
                "infeasible: no grid point satisfies the constraints \
                 ({evaluated} evaluated, {evaluation_errors} evaluation errors)"
            );
            for (name, count) in &binding {
                println!("  binding constraint: {name} (violated by {count} points)");
            }
            Ok(())
        }
    }
}

pub fn selftest_command() -> Result<(), CliError> {
    let failed = selftest::run();
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::SelftestFailed { failed })
    }
}

pub fn dataset_keys_help() -> String {
    dataset::keys().join(", ")
}
