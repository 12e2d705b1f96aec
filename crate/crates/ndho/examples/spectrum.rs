//! Energy towers of the N-dimensional oscillator and the fate of the second
//! eigenvalue branch.
//!
//! Run with: cargo run -p ndho --example spectrum

use ndho::OscillatorParams;

fn main() -> ndho::Result<()> {
    println!("first branch E_n = omega (2n + l + N/2):\n");
    println!("{:>4} {:>4} {}", "N", "l", "E_0 .. E_4");
    for (dim, ell) in [(1u32, 0u32), (1, 1), (2, 0), (3, 0), (3, 2), (6, 4)] {
        let params = OscillatorParams::new(dim, ell, 1.0)?;
        let branches = params.spectrum(5);
        let tower: Vec<String> = branches.first.iter().map(|e| format!("{e:.1}")).collect();
        println!("{dim:>4} {ell:>4} {}", tower.join(", "));
    }

    println!("\nsecond branch E_n = omega (2n + 2 - l - N/2), case by case:\n");
    for (dim, ell) in [(1u32, 0u32), (2, 0), (2, 1), (3, 0), (4, 0), (5, 0)] {
        let params = OscillatorParams::new(dim, ell, 1.0)?;
        let branches = params.spectrum(3);
        println!(
            "N={dim} l={ell}: starts at {:+.1} -> {:?} ({})",
            branches.second[0], branches.second_class, branches.second_reason
        );
    }

    println!("\nonly N = 1 keeps its second branch: it is the odd-parity tower.");
    Ok(())
}
