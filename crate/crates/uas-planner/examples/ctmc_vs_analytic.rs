//! Check the closed-form stationary law against a discrete-event run.
//!
//! ```bash
//! cargo run -p uas-planner --example ctmc_vs_analytic
//! ```

use uas_planner::{FleetModel, TrafficModel};

fn main() -> uas_planner::Result<()> {
    let fleet = FleetModel::new(10, 5, TrafficModel::from_intensity(0.1)?)?;
    let analytic = fleet.stationary_distribution();

    println!("horizon      transitions   max |empirical - analytic|");
    for horizon in [1e3, 1e4, 1e5, 1e6] {
        let sample = fleet.simulate(horizon, 7)?;
        let worst = sample
            .occupancy
            .iter()
            .zip(&analytic)
            .map(|(e, a)| (e - a).abs())
            .fold(0.0f64, f64::max);
        println!("{horizon:9.0}   {:11}   {worst:.5}", sample.transitions);
    }

    println!("\nstate  analytic    simulated (horizon 1e6)");
    let sample = fleet.simulate(1e6, 7)?;
    for (j, (a, e)) in analytic.iter().zip(&sample.occupancy).enumerate() {
        println!("  {j}    {a:.6}    {e:.6}");
    }
    Ok(())
}
