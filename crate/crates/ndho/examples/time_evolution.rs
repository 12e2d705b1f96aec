//! Time evolution as a label rotation: k -> k e^{-2 i omega t} plus one
//! global phase, with the density breathing at period pi/omega.
//!
//! Run with: cargo run -p ndho --example time_evolution

use ndho::radial::density_evolution;
use ndho::{CoherentState, Complex64, OscillatorParams, RadialGrid};

fn main() -> ndho::Result<()> {
    let params = OscillatorParams::new(3, 0, 1.0)?;
    let k = 4.0;
    let state = CoherentState::new(&params, Complex64::new(k, 0.0), 128)?;

    println!("label rotation over one density period pi/omega:");
    for i in 0..=4 {
        let t = i as f64 * std::f64::consts::PI / 4.0;
        let (evolved, phase) = state.evolve(t);
        println!(
            "  t = {t:.4}: k_t = {:+.4} {:+.4} i, global phase = {:+.4} {:+.4} i",
            evolved.label().re,
            evolved.label().im,
            phase.re,
            phase.im
        );
    }

    // the radial density sloshes between the turning points
    let grid = RadialGrid::uniform(0.0, 2.0 * k.sqrt() + 6.0, 2e-3)?;
    println!("\nradial density r^2 |<r|k>_t|^2 (peak location and height):");
    for i in 0..=4 {
        let t = i as f64 * std::f64::consts::PI / 4.0;
        let density = density_evolution(&params, k, t, &grid)?;
        let (mut peak_r, mut peak) = (0.0, 0.0);
        for (&r, v) in grid.points().iter().zip(density.values()) {
            if v.re > peak {
                peak = v.re;
                peak_r = r;
            }
        }
        let bar = "#".repeat((peak_r * 4.0).round() as usize);
        println!("  t = {t:.4}: peak at r = {peak_r:.3} height {peak:9.3}  {bar}");
    }
    println!("\nclassical picture: a breathing radial packet, period pi/omega.");
    Ok(())
}
