//! Dimension PAP cells for the built-in deployment environments.
//!
//! ```bash
//! cargo run -p uas-planner --example coverage_radii
//! ```

use uas_planner::{coverage_spec, gn_transmit_power, EnvironmentProfile, RadioConfig};

fn main() -> uas_planner::Result<()> {
    // reference link budget: -108.5 dB @ 1 m, 1 mW downlink per node,
    // 1 W node cap, 20 dB SNR thresholds both ways
    let radio = RadioConfig::new(1.42e-4, 1e-3, 1.0, 1.25e-14, 100.0, 100.0)?;

    for name in ["suburban", "urban"] {
        let env = EnvironmentProfile::preset(name).expect("built-in preset");
        let spec = coverage_spec(&radio, &env)?;
        println!("{name}");
        println!("  downlink radius      : {:8.1} m", spec.radius_dl);
        println!("  uplink radius        : {:8.1} m", spec.radius_ul);
        println!("  cell radius          : {:8.1} m", spec.radius);
        println!("  hover height         : {:8.1} m", spec.hover_height);
        println!("  target arrival power : {:.3e} W", spec.target_arrival_power);

        // power-controlled node transmit power across the cell
        for frac in [0.0, 0.5, 1.0] {
            let r = spec.radius * frac;
            let p = gn_transmit_power(r, &spec, &env, &radio)?;
            println!("  GN power at r = {:6.1} m : {:.3e} W", r, p);
        }
        println!();
    }
    Ok(())
}
