//! The one-dimensional oscillator carries two lowering-operator eigenstates,
//! one per parity. Neither is a coherent state of the annihilation operator;
//! combined with relative weight c they become exactly exp(c a†)|0>.
//!
//! Run with: cargo run -p ndho --example one_dim_recombination

use ndho::coherent::{best_fit_lowering_residual, fock_embedding, recombine_one_dim};
use ndho::radial::{hermite_eigenfunction, one_dim_density, RadialGrid};
use ndho::{CoherentState, Complex64, OscillatorParams};

fn main() -> ndho::Result<()> {
    let even = OscillatorParams::new(1, 0, 1.0)?; // alpha = -1/2
    let odd = OscillatorParams::new(1, 1, 1.0)?; // alpha = +1/2
    println!(
        "parity sectors: even alpha = {}, odd alpha = {}",
        even.alpha(),
        odd.alpha()
    );

    let c = Complex64::new(1.0, 0.7);
    let label = 0.5 * c * c; // K+ = (a†)²/2 identifies k = c²/2
    let even_state = CoherentState::new(&even, label, 64)?;
    let odd_state = CoherentState::new(&odd, label, 64)?;

    println!("\nagainst exp(c a†)|0> with c = {c} and lambda = c:");
    let report = recombine_one_dim(&even_state, &odd_state, c)?;
    println!(
        "  max Fock coefficient deviation over {} amplitudes: {:.3e}",
        report.fock_dim, report.max_deviation
    );

    println!("\nis either sector an annihilation-operator eigenstate on its own?");
    for (name, state) in [("even", &even_state), ("odd", &odd_state)] {
        let residual = best_fit_lowering_residual(&fock_embedding(state)?);
        println!("  {name}: best-fit residual {residual:.3} (0 would mean yes)");
    }

    // sector densities: two displaced Gaussians interfering with +/- sign
    println!("\nsector densities |<x|k>_t|^2 at k = 1, t = 0 (x >= 0 half shown):");
    let grid = RadialGrid::uniform(0.0, 4.0, 0.5)?;
    let e = one_dim_density(&even, 1.0, 0.0, &grid)?;
    let o = one_dim_density(&odd, 1.0, 0.0, &grid)?;
    println!(
        "  series vs two-Gaussian closed form: even dev {:.2e}, odd dev {:.2e}",
        e.max_rel_deviation, o.max_rel_deviation
    );
    println!("{:>6} {:>12} {:>12}", "x", "even", "odd");
    for (i, &x) in grid.points().iter().enumerate() {
        println!(
            "{x:>6.2} {:>12.6} {:>12.6}",
            e.density.values()[i].re,
            o.density.values()[i].re
        );
    }

    // the ladder eigenfunctions and the unified Hermite form differ only by
    // the half-line vs whole-line normalization, a factor sqrt(2)
    println!("\nladder form vs Hermite form at x = 0.9:");
    for (params, m, n) in [(&even, 6usize, 3usize), (&odd, 7, 3)] {
        let g = RadialGrid::new(vec![0.9])?;
        let ladder = ndho::radial::eigenfunction(params, n, &g).values()[0].re;
        let unified = hermite_eigenfunction(m, 0.9);
        println!(
            "  sector n = {n} vs psi_{m}: ratio = {:.12} (sqrt(2) = {:.12})",
            ladder / unified,
            2.0f64.sqrt()
        );
    }
    Ok(())
}
