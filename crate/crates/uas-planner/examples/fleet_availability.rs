//! Size a PAP fleet against an availability target.
//!
//! ```bash
//! cargo run -p uas-planner --example fleet_availability
//! ```

use uas_planner::{availability_curve, optimal_pap_count, FleetModel, TrafficModel};

fn main() -> uas_planner::Result<()> {
    let n_cells = 10;

    for delta in [0.1, 0.5, 2.0] {
        let traffic = TrafficModel::from_intensity(delta)?;
        println!("traffic intensity δ = {delta}");
        println!("  u   u/n    A          η");
        for row in availability_curve(n_cells, &traffic)? {
            println!(
                "  {:2}  {:.2}   {:.6}   {:.4}",
                row.n_paps, row.cost, row.availability, row.utilization
            );
        }
        for rho in [0.99, 0.999] {
            let u = optimal_pap_count(n_cells, &traffic, rho)?;
            println!("  smallest fleet with A >= {rho}: {u} PAPs");
        }
        println!();
    }

    // the full stationary picture for one configuration
    let fleet = FleetModel::new(10, 5, TrafficModel::from_intensity(0.1)?)?;
    let report = fleet.analyze()?;
    println!("n = 10, u = 5, δ = 0.1");
    println!("  stationary busy-PAP law: {:?}", report.stationary);
    println!("  availability {:.6}, blocking {:.2e}, utilization {:.4}",
        report.availability, report.blocking, report.utilization);
    Ok(())
}
