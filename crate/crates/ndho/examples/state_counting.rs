//! Cartesian vs spherical counting of oscillator states: the multiplicities
//! d(l) of fixed angular momentum, summed over one parity, reproduce the
//! weak-composition count D(n) exactly.
//!
//! Run with: cargo run -p ndho --example state_counting

use ndho::degeneracy::{brute_force_count, identity_check, spherical_multiplicity};

fn main() -> ndho::Result<()> {
    for dim in [2u32, 3, 4] {
        println!("N = {dim}:");
        println!(
            "{:>4} {:>10} {:>10} {:>8}   breakdown",
            "n~", "cartesian", "spherical", "oracle"
        );
        let table = identity_check(dim, 8)?;
        for row in &table.rows {
            let parts: Vec<String> = row
                .breakdown
                .iter()
                .map(|(l, d)| format!("d({l})={d}"))
                .collect();
            println!(
                "{:>4} {:>10} {:>10} {:>8}   {}",
                row.n_tilde,
                row.cartesian,
                row.spherical_total,
                brute_force_count(dim, row.n_tilde)?,
                parts.join(" + ")
            );
        }
        assert!(table.all_ok());
        println!();
    }

    println!("familiar specializations:");
    println!("  N = 3 gives d(l) = 2l + 1:");
    for l in 0..6u32 {
        print!(" d({l}) = {}", spherical_multiplicity(3, l)?);
    }
    println!("\n  N = 2 gives 1 at l = 0 and 2 (sin/cos pairs) beyond:");
    for l in 0..6u32 {
        print!(" d({l}) = {}", spherical_multiplicity(2, l)?);
    }
    println!();
    Ok(())
}
