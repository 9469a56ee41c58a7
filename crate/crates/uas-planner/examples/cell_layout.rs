//! Cover a seeded realization of ground nodes with the fewest cells.
//!
//! ```bash
//! cargo run -p uas-planner --example cell_layout
//! ```

use uas_planner::{
    coverage_spec, levels_required, pack, sample_gns, EnvironmentProfile, RadioConfig,
};

fn main() -> uas_planner::Result<()> {
    let radio = RadioConfig::new(1.42e-4, 1e-3, 1.0, 1.25e-14, 100.0, 100.0)?;
    let env = EnvironmentProfile::urban();
    let spec = coverage_spec(&radio, &env)?;

    let region_radius = 800.0;
    let gns = sample_gns(15, region_radius, 42);

    println!(
        "region {region_radius} m, cell radius {:.1} m -> {} packing levels",
        spec.radius,
        levels_required(region_radius, spec.radius)
    );

    let layout = pack(region_radius, &spec, &gns)?;
    println!(
        "{} cells at {} levels (candidate radius {:.1} m)\n",
        layout.n_cells(),
        layout.levels,
        layout.level_radius()
    );

    println!("cell centers:");
    for (k, &(x, y)) in layout.centers.iter().enumerate() {
        let served: Vec<u32> = gns
            .iter()
            .filter(|g| {
                let dx = g.x - x;
                let dy = g.y - y;
                (dx * dx + dy * dy).sqrt() <= layout.level_radius() * (1.0 + 1e-9)
            })
            .map(|g| g.id)
            .collect();
        println!("  {k:2}: ({x:8.1}, {y:8.1})  nodes in final-level circle: {served:?}");
    }

    assert!(gns.iter().all(|g| layout.covers(g)));
    println!("\nevery node lies within the PAP radius of some center");
    print!("\nlayout CSV:\n{}", layout.to_csv());
    Ok(())
}
