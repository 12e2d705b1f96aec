//! Builds the truncated J3/K+/K- matrices and measures how well they close
//! the o(2,1) commutation relations.
//!
//! Run with: cargo run -p ndho --example ladder_algebra

use ndho::algebra::{ladder_down, ladder_up};
use ndho::{LadderRep, OscillatorParams};

fn main() -> ndho::Result<()> {
    let params = OscillatorParams::new(3, 2, 1.0)?;
    println!(
        "N = {}, l = {}: alpha = {}, Casimir C = {}, lowest weight m0 = {}",
        params.dim(),
        params.ell(),
        params.alpha(),
        params.casimir(),
        params.lowest_weight()
    );

    println!("\nladder matrix elements (sigma_n^+ raises, sigma_n^- lowers):");
    for n in 0..6 {
        println!(
            "  n = {n}: sigma+ = {:.12}, sigma- = {:.12}",
            ladder_up(n, params.alpha()),
            ladder_down(n, params.alpha())
        );
    }

    let rep = LadderRep::new(&params, 64)?;
    let r = rep.commutator_residuals();
    println!("\ncommutator residuals away from the truncation boundary (n_max = 64):");
    println!("  [J3, K+] - K+  : {:.3e}", r.j3_k_plus);
    println!("  [J3, K-] + K-  : {:.3e}", r.j3_k_minus);
    println!("  [K+, K-] + 2J3 : {:.3e}", r.k_plus_k_minus);
    println!("  Casimir defect : {:.3e}", rep.casimir_residual());

    // at the boundary the cut ladder must fail, by exactly (sigma_nmax^+)^2
    println!(
        "\nfull-matrix defect {:.6} vs (sigma_64^+)^2 = {:.6}",
        rep.truncation_defect(),
        ladder_up(64, params.alpha()).powi(2)
    );
    Ok(())
}
