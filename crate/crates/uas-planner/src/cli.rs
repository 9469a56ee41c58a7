//! Command-line front end.
//!
//! Subcommands wrap the library analyses one-to-one: `coverage` prints and
//! saves the cell dimensioning, `pack` covers one realization of ground
//! nodes, `availability` prints the fleet curve, `figure` emits a dataset
//! CSV plus a run manifest. Exit codes: 0 success, 2 validation failure,
//! 3 I/O failure. `UAS_PLANNER_OUT` overrides `--out`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::channel::EnvironmentProfile;
use crate::config::{PlannerConfig, ResolvedConfig};
use crate::coverage::coverage_spec;
use crate::error::Error;
use crate::manifest::RunManifest;
use crate::packing::{pack, GroundNode};
use crate::reliability::{optimal_pap_count, TrafficModel};
use crate::scenario::{
    availability_curve, cells_csv, cells_dataset, cost_csv, cost_dataset, curves_csv,
    curves_dataset, sample_gns, trial_seed,
};

pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_IO: u8 = 3;

/// Environment variable overriding `--out`.
pub const OUT_ENV_VAR: &str = "UAS_PLANNER_OUT";

#[derive(Parser)]
#[command(name = "uas-planner", version, about = "PAP deployment planning: coverage, cell packing and fleet availability")]
struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Base seed override.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,
    /// Output directory (default "."); UAS_PLANNER_OUT takes precedence.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Monte Carlo trial count override.
    #[arg(long, global = true, value_name = "INT")]
    trials: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print and save the cell dimensioning for the configured environment.
    Coverage,
    /// Cover one realization of ground nodes with the fewest cells.
    Pack {
        /// Ground-node CSV (header `x,y`); nodes are sampled when absent.
        #[arg(long, value_name = "PATH")]
        gn_file: Option<PathBuf>,
    },
    /// Fleet availability/utilization table, optionally with the smallest
    /// fleet meeting a threshold.
    Availability {
        /// Number of cells.
        n: u32,
        /// Per-cell arrival rate λ.
        #[arg(allow_negative_numbers = true)]
        lambda: f64,
        /// Per-PAP service rate κ.
        #[arg(allow_negative_numbers = true)]
        kappa: f64,
        /// Availability threshold ρ.
        #[arg(long)]
        rho: Option<f64>,
    },
    /// Emit a figure dataset (fig4 | fig5 | fig6) and its run manifest.
    Figure {
        /// Dataset name.
        name: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::io(e.to_string()),
            _ => Failure::validation(e.to_string()),
        }
    }
}

/// Parse arguments, dispatch, and return the process exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let out_dir = resolve_out_dir(cli.out.as_deref());
    match cli.command {
        Command::Coverage => {
            let resolved = load_config(&cli)?;
            cmd_coverage(&resolved, &out_dir)
        }
        Command::Pack { ref gn_file } => {
            let resolved = load_config(&cli)?;
            cmd_pack(&resolved, gn_file.as_deref(), &out_dir)
        }
        Command::Availability {
            n,
            lambda,
            kappa,
            rho,
        } => cmd_availability(n, lambda, kappa, rho),
        Command::Figure { ref name } => {
            let resolved = load_config(&cli)?;
            cmd_figure(name, &resolved, &out_dir)
        }
    }
}

fn resolve_out_dir(flag: Option<&Path>) -> PathBuf {
    if let Ok(dir) = std::env::var(OUT_ENV_VAR) {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    flag.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."))
}

/// Read, override and resolve the configuration named by `--config`.
fn load_config(cli: &Cli) -> Result<ResolvedConfig, Failure> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| Failure::validation("this subcommand requires --config PATH"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read config {}: {e}", path.display())))?;
    let mut raw = PlannerConfig::from_json(&text)?;
    if let Some(seed) = cli.seed {
        raw.experiment.seed = seed;
    }
    if let Some(trials) = cli.trials {
        raw.experiment.trials = trials;
    }
    Ok(raw.resolve()?)
}

fn ensure_out_dir(out_dir: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(out_dir)
        .map_err(|e| Failure::io(format!("cannot create {}: {e}", out_dir.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}

fn cmd_coverage(resolved: &ResolvedConfig, out_dir: &Path) -> Result<(), Failure> {
    let spec = coverage_spec(&resolved.radio, &resolved.environment)?;
    println!("environment          : {}", resolved.environment_name);
    println!("downlink radius      : {:.3} m", spec.radius_dl);
    println!("uplink radius        : {:.3} m", spec.radius_ul);
    println!("cell radius          : {:.3} m", spec.radius);
    println!("hover height         : {:.3} m", spec.hover_height);
    println!("target arrival power : {:.6e} W", spec.target_arrival_power);

    ensure_out_dir(out_dir)?;
    let path = out_dir.join("coverage.json");
    let doc = serde_json::json!({
        "environment": resolved.environment_name,
        "radius_dl": spec.radius_dl,
        "radius_ul": spec.radius_ul,
        "radius": spec.radius,
        "hover_height": spec.hover_height,
        "target_arrival_power": spec.target_arrival_power,
        "config_hash": resolved.config_hash(),
    });
    write_text(&path, &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn parse_gn_file(path: &Path) -> Result<Vec<GroundNode>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read GN file {}: {e}", path.display())))?;
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header.trim() == "x,y" => {}
        _ => {
            return Err(Failure::validation(format!(
                "GN file {} must start with the header `x,y`",
                path.display()
            )))
        }
    }
    let mut gns = Vec::new();
    for (k, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let parse = |s: Option<&str>| -> Option<f64> { s?.trim().parse().ok() };
        let (x, y) = match (parse(parts.next()), parse(parts.next())) {
            (Some(x), Some(y)) => (x, y),
            _ => {
                return Err(Failure::validation(format!(
                    "GN file line {}: expected `x,y`, got `{line}`",
                    k + 2
                )))
            }
        };
        gns.push(GroundNode::new(x, y, k as u32));
    }
    if gns.is_empty() {
        return Err(Failure::validation("GN file contains no nodes"));
    }
    Ok(gns)
}

fn cmd_pack(
    resolved: &ResolvedConfig,
    gn_file: Option<&Path>,
    out_dir: &Path,
) -> Result<(), Failure> {
    let spec = coverage_spec(&resolved.radio, &resolved.environment)?;
    let gns = match gn_file {
        Some(path) => parse_gn_file(path)?,
        None => sample_gns(
            resolved.n_gns,
            resolved.region_radius,
            trial_seed(resolved.experiment.seed, 0),
        ),
    };
    let layout = pack(resolved.region_radius, &spec, &gns)?;
    debug_assert!(gns.iter().all(|g| layout.covers(g)));

    ensure_out_dir(out_dir)?;
    let path = out_dir.join("layout.csv");
    write_text(&path, &layout.to_csv())?;
    println!("environment : {}", resolved.environment_name);
    println!("cells n     : {}", layout.n_cells());
    println!("levels l_max: {}", layout.levels);
    println!("cell radius : {:.3} m", layout.cell_radius);
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_availability(n: u32, lambda: f64, kappa: f64, rho: Option<f64>) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::validation("n must be >= 1"));
    }
    let traffic = TrafficModel::new(lambda, kappa)?;
    let rows = availability_curve(n, &traffic)?;
    println!("u,u_over_n,A,eta");
    for row in &rows {
        println!(
            "{},{},{},{}",
            row.n_paps, row.cost, row.availability, row.utilization
        );
    }
    if let Some(rho) = rho {
        let u = optimal_pap_count(n, &traffic, rho)?;
        println!("u_opt = {u}");
    }
    Ok(())
}

fn cmd_figure(name: &str, resolved: &ResolvedConfig, out_dir: &Path) -> Result<(), Failure> {
    let start = Instant::now();
    let exp = &resolved.experiment;
    let scenario = resolved.scenario();
    let csv = match name {
        "fig4" => {
            let envs = [
                ("suburban".to_string(), EnvironmentProfile::suburban()),
                ("urban".to_string(), EnvironmentProfile::urban()),
            ];
            let rows = cells_dataset(&scenario, &envs, &exp.radii_m, &exp.gn_counts)?;
            cells_csv(&rows)
        }
        "fig5" => {
            let rows = curves_dataset(exp.n_cells, &exp.intensities)?;
            curves_csv(&rows)
        }
        "fig6" => {
            let rows = cost_dataset(&scenario, &exp.radii_m, &exp.intensities, &exp.thresholds)?;
            cost_csv(&rows)
        }
        other => {
            return Err(Failure::validation(format!(
                "unknown figure `{other}` (expected fig4, fig5 or fig6)"
            )))
        }
    };

    ensure_out_dir(out_dir)?;
    let csv_path = out_dir.join(format!("{name}.csv"));
    write_text(&csv_path, &csv)?;

    let manifest = RunManifest {
        config_hash: resolved.config_hash(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        outputs: vec![csv_path.display().to_string()],
        wall_time: start.elapsed().as_secs_f64(),
    };
    let manifest_path = out_dir.join(format!("{name}_manifest.json"));
    manifest.write(&manifest_path).map_err(|e| Failure::io(e.to_string()))?;

    println!("rows  : {}", csv.lines().count().saturating_sub(1));
    println!("wrote {}", csv_path.display());
    println!("wrote {}", manifest_path.display());
    Ok(())
}
