//! State counting: Cartesian degeneracy D(ñ), spherical multiplicity d(ℓ),
//! the parity-restricted summation identity between them, and a brute-force
//! enumeration oracle. Exact integer arithmetic throughout — the identity
//! must hold exactly, not approximately.

use crate::error::{Error, Result};

/// Largest enumeration the brute-force oracle will attempt.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Binomial coefficient by the multiplicative scheme; every intermediate
/// division is exact.
fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .expect("binomial overflow beyond u128");
        acc /= i + 1;
    }
    acc
}

/// Number of states of energy ω(ñ + N/2): D(ñ) = (N+ñ-1)! / (ñ! (N-1)!),
/// i.e. weak compositions of ñ into N parts.
pub fn cartesian_degeneracy(dim: u32, n_tilde: u32) -> u128 {
    binomial(dim as u128 + n_tilde as u128 - 1, n_tilde as u128)
}

/// Multiplicity of the angular momentum-ℓ sector in N ≥ 2 dimensions:
/// d(ℓ) = (2ℓ+N-2)(ℓ+N-3)! / (ℓ! (N-2)!).
///
/// The N = 2, ℓ = 0 value is formally indeterminate and fixed to 1, the
/// value the counting oracle produces. N = 1 is rejected: its parity sectors
/// each carry multiplicity one and never enter this formula.
pub fn spherical_multiplicity(dim: u32, ell: u32) -> Result<u128> {
    if dim < 2 {
        return Err(Error::InvalidInput(
            "spherical multiplicity requires N >= 2".into(),
        ));
    }
    if dim == 2 && ell == 0 {
        return Ok(1);
    }
    // (2l+N-2)/(l+N-2) * binom(l+N-2, l), multiplied before the exact division
    let l = ell as u128;
    let n = dim as u128;
    let num = (2 * l + n - 2)
        .checked_mul(binomial(l + n - 2, l))
        .expect("multiplicity overflow beyond u128");
    Ok(num / (l + n - 2))
}

/// Counts N-tuples of nonnegative integers summing to ñ by direct
/// enumeration; the independent oracle for [`cartesian_degeneracy`].
pub fn brute_force_count(dim: u32, n_tilde: u32) -> Result<u128> {
    let expected = cartesian_degeneracy(dim, n_tilde);
    if expected > BRUTE_FORCE_LIMIT {
        return Err(Error::InvalidInput(format!(
            "enumeration of {expected} compositions exceeds the guard of {BRUTE_FORCE_LIMIT}"
        )));
    }
    fn count(parts_left: u32, remaining: u32) -> u128 {
        if parts_left == 1 {
            return 1;
        }
        (0..=remaining)
            .map(|first| count(parts_left - 1, remaining - first))
            .sum()
    }
    Ok(count(dim, n_tilde))
}

/// One energy level: the Cartesian count against the spherical breakdown.
#[derive(Clone, Debug)]
pub struct DegeneracyRow {
    pub n_tilde: u32,
    pub cartesian: u128,
    /// (ℓ, d(ℓ)) for every ℓ ≤ ñ with ℓ ≡ ñ (mod 2).
    pub breakdown: Vec<(u32, u128)>,
    pub spherical_total: u128,
    pub ok: bool,
}

/// Level-by-level comparison table for one dimension.
#[derive(Clone, Debug)]
pub struct DegeneracyTable {
    pub dim: u32,
    pub rows: Vec<DegeneracyRow>,
}

impl DegeneracyTable {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

/// Builds the table for ñ = 0..=n_tilde_max, checking row by row that
/// D(ñ) = Σ d(ℓ) over ℓ of the same parity as ñ. A failed row is reported
/// through its `ok` flag, never silently dropped.
pub fn identity_check(dim: u32, n_tilde_max: u32) -> Result<DegeneracyTable> {
    if dim < 2 {
        return Err(Error::InvalidInput(
            "the summation identity requires N >= 2".into(),
        ));
    }
    let mut rows = Vec::with_capacity(n_tilde_max as usize + 1);
    for n_tilde in 0..=n_tilde_max {
        let cartesian = cartesian_degeneracy(dim, n_tilde);
        let mut breakdown = Vec::new();
        let mut total: u128 = 0;
        let mut ell = n_tilde % 2;
        while ell <= n_tilde {
            let d = spherical_multiplicity(dim, ell)?;
            breakdown.push((ell, d));
            total += d;
            ell += 2;
        }
        rows.push(DegeneracyRow {
            n_tilde,
            cartesian,
            breakdown,
            spherical_total: total,
            ok: cartesian == total,
        });
    }
    Ok(DegeneracyTable { dim, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartesian_values() {
        assert_eq!(cartesian_degeneracy(3, 2), 6);
        assert_eq!(cartesian_degeneracy(2, 5), 6);
        assert_eq!(cartesian_degeneracy(4, 3), 20);
        // one dimension never degenerates
        for n in 0..20 {
            assert_eq!(cartesian_degeneracy(1, n), 1);
        }
        assert_eq!(cartesian_degeneracy(5, 0), 1);
    }

    #[test]
    fn cartesian_matches_enumeration() {
        for dim in 1..=7u32 {
            for n_tilde in 0..=10u32 {
                assert_eq!(
                    cartesian_degeneracy(dim, n_tilde),
                    brute_force_count(dim, n_tilde).unwrap(),
                    "N={dim} n~={n_tilde}"
                );
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        assert!(brute_force_count(12, 40).is_err());
    }

    #[test]
    fn spherical_values() {
        // N=3 reproduces 2l+1
        for ell in 0..=10u32 {
            assert_eq!(
                spherical_multiplicity(3, ell).unwrap(),
                2 * ell as u128 + 1
            );
        }
        assert_eq!(spherical_multiplicity(3, 0).unwrap(), 1);
        assert_eq!(spherical_multiplicity(4, 1).unwrap(), 4);
        // N=2: one state at l=0, two (sin/cos) for l >= 1
        assert_eq!(spherical_multiplicity(2, 0).unwrap(), 1);
        for ell in 1..=8u32 {
            assert_eq!(spherical_multiplicity(2, ell).unwrap(), 2);
        }
        assert!(spherical_multiplicity(1, 0).is_err());
    }

    #[test]
    fn spherical_matches_harmonic_count() {
        // independent route: harmonic polynomials of degree l in N variables,
        // binom(l+N-1, l) - binom(l+N-3, l-2)
        for dim in 2..=8u32 {
            for ell in 0..=12u32 {
                let monomials = binomial(ell as u128 + dim as u128 - 1, ell as u128);
                let lower = if ell >= 2 {
                    binomial(ell as u128 + dim as u128 - 3, ell as u128 - 2)
                } else {
                    0
                };
                assert_eq!(
                    spherical_multiplicity(dim, ell).unwrap(),
                    monomials - lower,
                    "N={dim} l={ell}"
                );
            }
        }
    }

    #[test]
    fn summation_identity() {
        for dim in 2..=8u32 {
            let table = identity_check(dim, 14).unwrap();
            assert!(table.all_ok(), "identity fails for N={dim}");
            assert_eq!(table.rows.len(), 15);
        }
        // spot rows
        let table = identity_check(3, 3).unwrap();
        let row = &table.rows[2];
        assert_eq!(row.cartesian, 6);
        assert_eq!(row.breakdown, vec![(0, 1), (2, 5)]);
        let table = identity_check(2, 3).unwrap();
        let row = &table.rows[3];
        assert_eq!(row.cartesian, 4);
        assert_eq!(row.breakdown, vec![(1, 2), (3, 2)]);
        let table = identity_check(6, 0).unwrap();
        assert_eq!(table.rows[0].cartesian, 1);
        assert_eq!(table.rows[0].spherical_total, 1);
    }

    #[test]
    fn induction_step() {
        // adding the single top term d(n~+2) advances D by exactly two levels
        for dim in 2..=8u32 {
            for n_tilde in 0..=14u32 {
                let lhs = cartesian_degeneracy(dim, n_tilde)
                    + spherical_multiplicity(dim, n_tilde + 2).unwrap();
                assert_eq!(lhs, cartesian_degeneracy(dim, n_tilde + 2));
            }
        }
    }

    #[test]
    fn parity_structure_of_breakdown() {
        let table = identity_check(5, 9).unwrap();
        for row in &table.rows {
            for (ell, _) in &row.breakdown {
                assert_eq!(ell % 2, row.n_tilde % 2);
                assert!(*ell <= row.n_tilde);
            }
        }
    }
}
