//! Laguerre-ladder eigenfunctions and the coherent wave function computed by
//! two independent routes (coefficient series vs Bessel closed form).
//!
//! Run with: cargo run -p ndho --example radial_wavefunctions

use ndho::radial::{
    coherent_wavefunction, coherent_wavefunction_series, eigenfunction, ground_state_ode_residual,
};
use ndho::special::integrate;
use ndho::{CoherentState, Complex64, OscillatorParams, RadialGrid};

fn main() -> ndho::Result<()> {
    let params = OscillatorParams::new(3, 1, 1.0)?;
    let grid = RadialGrid::uniform(0.0, 8.0, 1e-3)?;

    // orthonormality under the radial measure r^{N-1} dr
    println!("eigenfunction overlaps <psi_n | psi_m> with the r^2 weight:");
    for n in 0..4usize {
        let mut row = String::new();
        for m in 0..4usize {
            let overlap = integrate(
                |r| {
                    let g = RadialGrid::new(vec![r]).unwrap();
                    eigenfunction(&params, n, &g).values()[0].re
                        * eigenfunction(&params, m, &g).values()[0].re
                        * r
                        * r
                },
                0.0,
                12.0,
                500,
            );
            row.push_str(&format!("{overlap:+.10} "));
        }
        println!("  n = {n}: {row}");
    }

    println!(
        "\nground state solves the first-order equation (l/2 - r/2 d/dr - r^2/2) psi = 0;"
    );
    let fd = RadialGrid::uniform(0.1, 4.0, 1e-3)?;
    println!(
        "finite-difference residual: {:.3e}",
        ground_state_ode_residual(&params, &fd)
    );

    // two routes to <r|k>
    let k = 2.0;
    let closed = coherent_wavefunction(&params, k, &grid)?;
    let state = CoherentState::new(&params, Complex64::new(k, 0.0), 128)?;
    let series = coherent_wavefunction_series(&state, &grid)?;
    let mut worst = 0.0f64;
    for (c, s) in closed.values().iter().zip(series.values()) {
        worst = worst.max((c - s).norm());
    }
    println!("\ncoherent wave function <r|k> at k = {k}:");
    println!("  closed form: r^l e^(-r^2/2) sqrt(2 Gamma(1+a)) e^(-k) Phi_a(r^2 k)");
    println!("  series:      sum_n c_n psi_nl(r) truncated at n_max = 128");
    println!("  max abs disagreement over the grid: {worst:.3e}");

    println!("\nsamples of <r|k>:");
    for &r in &[0.0, 0.5, 1.3, 2.83, 5.0] {
        let g = RadialGrid::new(vec![r])?;
        let v = coherent_wavefunction(&params, k, &g)?.values()[0].re;
        println!("  r = {r:4.2}: {v:+.12}");
    }
    Ok(())
}
