//! Produce the three experiment datasets through the library API and write
//! them as CSV files under `figures/`.
//!
//! ```bash
//! cargo run -p uas-planner --example figure_datasets
//! ```
//!
//! The `uas-planner figure` subcommand emits the same files from a JSON
//! config; this example shows the underlying calls with a reduced trial
//! count.

use uas_planner::scenario::{
    cells_csv, cells_dataset, cost_csv, cost_dataset, curves_csv, curves_dataset,
};
use uas_planner::{EnvironmentProfile, RadioConfig, ScenarioConfig, TrafficModel};

fn main() -> uas_planner::Result<()> {
    let radio = RadioConfig::new(1.42e-4, 1e-3, 1.0, 1.25e-14, 100.0, 100.0)?;
    let scenario = ScenarioConfig {
        region_radius: 600.0,
        n_gns: 25,
        environment: EnvironmentProfile::suburban(),
        radio,
        traffic: TrafficModel::from_intensity(0.1)?,
        threshold: 0.9,
        trials: 100,
        seed: 7,
    };

    let out = std::path::Path::new("figures");
    std::fs::create_dir_all(out)?;

    // average cells vs node count, per environment and region radius
    let envs = [
        ("suburban".to_string(), EnvironmentProfile::suburban()),
        ("urban".to_string(), EnvironmentProfile::urban()),
    ];
    let cells = cells_dataset(&scenario, &envs, &[600.0, 1000.0], &[5, 15, 25])?;
    std::fs::write(out.join("fig4.csv"), cells_csv(&cells))?;

    // availability and utilization vs normalized cost, per intensity
    let curves = curves_dataset(10, &[0.1, 0.5, 1.0, 2.0])?;
    std::fs::write(out.join("fig5.csv"), curves_csv(&curves))?;

    // normalized fleet cost vs region radius, per intensity and threshold
    let cost = cost_dataset(&scenario, &[400.0, 600.0, 800.0], &[0.1, 1.0], &[0.9, 0.99])?;
    std::fs::write(out.join("fig6.csv"), cost_csv(&cost))?;

    println!(
        "wrote {} ({} rows), {} ({} rows), {} ({} rows)",
        out.join("fig4.csv").display(),
        cells.len(),
        out.join("fig5.csv").display(),
        curves.len(),
        out.join("fig6.csv").display(),
        cost.len()
    );
    println!("plot any of them with e.g.:");
    println!("  python3 -c \"import pandas as pd, matplotlib.pyplot as p; d=pd.read_csv('figures/fig5.csv'); [p.plot(g.u_over_n, g.A, label=f'd={{k}}') for k,g in d.groupby('delta')]; p.legend(); p.savefig('fig5.png')\"");
    Ok(())
}
