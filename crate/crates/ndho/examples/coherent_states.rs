//! Eigenstates of the lowering operator: coefficient ladder, convergence,
//! the Bessel norm identity, and the eigen relation under truncation.
//!
//! Run with: cargo run -p ndho --example coherent_states

use ndho::coherent::norm_closed_form;
use ndho::{CoherentState, Complex64, LadderRep, OscillatorParams};

fn main() -> ndho::Result<()> {
    let params = OscillatorParams::new(3, 0, 1.0)?;
    let k = Complex64::new(1.0, 0.5);
    let state = CoherentState::new(&params, k, 128)?;

    println!(
        "K- eigenstate with label k = {k} (alpha = {}), n_max = {}, converged: {}",
        params.alpha(),
        state.n_max(),
        state.is_converged()
    );
    println!("\nleading coefficients c_n = k^n sqrt(Gamma(1+a)/(n! Gamma(n+1+a))):");
    for n in 0..8 {
        let c = state.coeff(n);
        println!(
            "  c_{n} = {:+.12} {:+.12} i   (log|c| = {:+.4})",
            c.re,
            c.im,
            state.log_abs_coeff(n)
        );
    }

    let series = state.norm_squared();
    let closed = norm_closed_form(&params, k.norm())?;
    println!("\nnorm identity <k|k> = Gamma(1+a) I_a(2|k|) |k|^-a:");
    println!("  series: {series:.15}");
    println!("  Bessel: {closed:.15}");
    println!("  rel dev: {:.3e}", ((series - closed) / closed).abs());

    let rep = LadderRep::new(&params, 128)?;
    println!(
        "\neigen relation ||K- v - k v|| / ||v|| = {:.3e} at n_max = 128",
        state.eigen_residual(&rep)?
    );

    // a deliberately short ladder leaves visible tail mass
    let short = CoherentState::new(&params, Complex64::new(4.0, 0.0), 16)?;
    let short_rep = LadderRep::new(&params, 16)?;
    println!(
        "short ladder (|k| = 4, n_max = 16): converged = {}, residual = {:.3e}",
        short.is_converged(),
        short.eigen_residual(&short_rep)?
    );
    Ok(())
}
