//! Eigenstates of the lowering operator K₋ (Barut-Girardello type) for any
//! (N, ℓ), their norms and time evolution, and the N = 1 even/odd pair that
//! recombines into the standard displacement coherent state.

use num_complex::Complex64;

use crate::algebra::{LadderRep, OscillatorParams, Parity};
use crate::error::{Error, Result};
use crate::special::{hyp0f1_reg, log_gamma};

/// Tail mass below which a truncated expansion counts as converged.
pub const TAIL_BOUND: f64 = 1e-16;

/// K₋ eigenstate with complex label k, expanded over the energy basis as
/// c_n = kⁿ √(Γ(1+α) / (n! Γ(n+1+α))), unnormalized with c₀ = 1.
///
/// Coefficients are held as (log-magnitude, phase) pairs; |k|ⁿ/√(n! Γ(n+1+α))
/// spans hundreds of orders of magnitude across a 128-term ladder.
#[derive(Clone, Debug)]
pub struct CoherentState {
    params: OscillatorParams,
    label: Complex64,
    log_mags: Vec<f64>,
    phases: Vec<f64>,
    converged: bool,
}

impl CoherentState {
    pub fn new(params: &OscillatorParams, label: Complex64, n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidInput("n_max must be >= 1".into()));
        }
        if !label.re.is_finite() || !label.im.is_finite() {
            return Err(Error::InvalidInput("label must be finite".into()));
        }
        let alpha = params.alpha();
        let log_abs_k = label.norm().ln();
        let arg_k = if label.norm() == 0.0 { 0.0 } else { label.arg() };
        let mut log_mags = Vec::with_capacity(n_max + 1);
        let mut phases = Vec::with_capacity(n_max + 1);
        log_mags.push(0.0);
        phases.push(0.0);
        for n in 0..n_max {
            let nf = n as f64;
            // magnitudes walk the ladder so adjacent ratios stay exact;
            // phases are plain multiples of arg k, one rounding each
            let step = log_abs_k - 0.5 * ((nf + 1.0) * (nf + 1.0 + alpha)).ln();
            log_mags.push(log_mags[n] + step);
            phases.push((nf + 1.0) * arg_k);
        }
        let converged = tail_ratio(&log_mags) <= TAIL_BOUND;
        Ok(Self {
            params: *params,
            label,
            log_mags,
            phases,
            converged,
        })
    }

    pub fn params(&self) -> &OscillatorParams {
        &self.params
    }

    pub fn label(&self) -> Complex64 {
        self.label
    }

    pub fn n_max(&self) -> usize {
        self.log_mags.len() - 1
    }

    /// Whether the tail mass |c_{n_max}|² / Σ|c_n|² is below [`TAIL_BOUND`].
    pub fn is_converged(&self) -> bool {
        self.converged
    }

    pub fn log_abs_coeff(&self, n: usize) -> f64 {
        self.log_mags[n]
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        Complex64::from_polar(self.log_mags[n].exp(), self.phases[n])
    }

    pub fn coeffs(&self) -> Vec<Complex64> {
        (0..self.log_mags.len()).map(|n| self.coeff(n)).collect()
    }

    /// Σ |c_n|², accumulated against the largest coefficient so that labels
    /// far outside the materializable range still produce a finite ratio.
    pub fn norm_squared(&self) -> f64 {
        let m = self
            .log_mags
            .iter()
            .fold(f64::NEG_INFINITY, |acc, &v| acc.max(v));
        let scaled: f64 = self
            .log_mags
            .iter()
            .map(|&v| (2.0 * (v - m)).exp())
            .sum();
        (2.0 * m).exp() * scaled
    }

    /// ⟨self|other⟩ = Σ c̄_n c'_n over the common range.
    pub fn overlap(&self, other: &CoherentState) -> Result<Complex64> {
        if self.params != other.params {
            return Err(Error::InvalidInput(
                "overlap requires states with identical parameters".into(),
            ));
        }
        let n = self.log_mags.len().min(other.log_mags.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            acc += self.coeff(i).conj() * other.coeff(i);
        }
        Ok(acc)
    }

    /// ‖K₋ v − k v‖₂ / ‖v‖₂ under the truncated matrix action. The analytic
    /// eigenrelation is exact component by component, so what remains is the
    /// boundary mismatch k·c_{n_max} that the cut ladder cannot supply — the
    /// residual is a direct readout of the truncation tail.
    pub fn eigen_residual(&self, rep: &LadderRep) -> Result<f64> {
        if rep.params() != &self.params {
            return Err(Error::InvalidInput(
                "representation and state parameters differ".into(),
            ));
        }
        let n_max = self.n_max();
        if rep.n_max() != n_max {
            return Err(Error::InvalidInput(format!(
                "truncation mismatch: representation {} vs state {}",
                rep.n_max(),
                n_max
            )));
        }
        // scale by the largest coefficient; the ratio is scale-free
        let m = self
            .log_mags
            .iter()
            .fold(f64::NEG_INFINITY, |acc, &v| acc.max(v));
        let v: Vec<Complex64> = (0..=n_max)
            .map(|n| Complex64::from_polar((self.log_mags[n] - m).exp(), self.phases[n]))
            .collect();
        let mut num = 0.0;
        for n in 0..=n_max {
            let lowered = if n < n_max {
                rep.k_minus()[(n, n + 1)] * v[n + 1]
            } else {
                Complex64::new(0.0, 0.0)
            };
            num += (lowered - self.label * v[n]).norm_sqr();
        }
        let den: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        Ok((num / den).sqrt())
    }

    /// Time evolution: the label rotates to k e^{-2iωt} and the state picks
    /// up the global phase e^{-iω(ℓ+N/2)t}; nothing else changes.
    pub fn evolve(&self, t: f64) -> (CoherentState, Complex64) {
        let p = &self.params;
        let rotated = self.label * Complex64::from_polar(1.0, -2.0 * p.omega() * t);
        let state = CoherentState::new(p, rotated, self.n_max())
            .expect("evolved state shares the validated inputs");
        let phase = Complex64::from_polar(
            1.0,
            -p.omega() * (p.ell() as f64 + p.dim() as f64 / 2.0) * t,
        );
        (state, phase)
    }
}

fn tail_ratio(log_mags: &[f64]) -> f64 {
    let m = log_mags
        .iter()
        .fold(f64::NEG_INFINITY, |acc, &v| acc.max(v));
    let sum: f64 = log_mags.iter().map(|&v| (2.0 * (v - m)).exp()).sum();
    (2.0 * (log_mags[log_mags.len() - 1] - m)).exp() / sum
}

/// ⟨k|k⟩ = Γ(1+α) I_α(2|k|) |k|^{-α}, evaluated through the entire series
/// Γ(1+α) Φ_α(|k|²) so the |k| → 0 limit (value 1) needs no special case.
pub fn norm_closed_form(params: &OscillatorParams, label_abs: f64) -> Result<f64> {
    if !(label_abs >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "|k| must be nonnegative, got {label_abs}"
        )));
    }
    if label_abs == 0.0 {
        return Ok(1.0);
    }
    let alpha = params.alpha();
    Ok(log_gamma(1.0 + alpha)?.exp() * hyp0f1_reg(alpha + 1.0, label_abs * label_abs)?)
}

/// Standard one-dimensional coherent state exp(c a†)|0⟩ in the Fock basis:
/// coefficient of |m⟩ is c^m / √(m!), unnormalized.
#[derive(Clone, Debug)]
pub struct FockCoherent {
    label: Complex64,
    coeffs: Vec<Complex64>,
}

impl FockCoherent {
    pub fn new(label: Complex64, m_max: usize) -> Self {
        let log_abs = label.norm().ln();
        let arg = if label.norm() == 0.0 { 0.0 } else { label.arg() };
        let mut coeffs = Vec::with_capacity(m_max + 1);
        let mut log_mag = 0.0;
        let mut phase = 0.0;
        coeffs.push(Complex64::new(1.0, 0.0));
        for m in 0..m_max {
            log_mag += log_abs - 0.5 * ((m + 1) as f64).ln();
            phase += arg;
            coeffs.push(Complex64::from_polar(log_mag.exp(), phase));
        }
        Self { label, coeffs }
    }

    pub fn label(&self) -> Complex64 {
        self.label
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }
}

/// Embed an N = 1 sector state into the one-dimensional Fock basis.
///
/// K₊ = ½(a†)², so the n-th even-sector state is exactly |2n⟩ and the n-th
/// odd-sector state is exactly |2n+1⟩; the σ-product normalizations cancel
/// without any leftover factor.
pub fn fock_embedding(state: &CoherentState) -> Result<Vec<Complex64>> {
    let parity = state.params().parity().ok_or_else(|| {
        Error::InvalidInput("Fock embedding is defined for N = 1 sectors only".into())
    })?;
    let n_max = state.n_max();
    let mut fock = vec![Complex64::new(0.0, 0.0); 2 * n_max + 2];
    let offset = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    for n in 0..=n_max {
        fock[2 * n + offset] = state.coeff(n);
    }
    Ok(fock)
}

/// Outcome of recombining the N = 1 pair against exp(c a†)|0⟩.
#[derive(Clone, Debug)]
pub struct RecombinationReport {
    pub label: Complex64,
    pub fock_dim: usize,
    pub max_deviation: f64,
}

/// Combine the even and odd N = 1 coherent states with relative weight
/// λ = c and compare against the standard coherent state exp(c a†)|0⟩.
///
/// Both inputs must carry the label k = k̃ = c²/2.
pub fn recombine_one_dim(
    even: &CoherentState,
    odd: &CoherentState,
    c: Complex64,
) -> Result<RecombinationReport> {
    if even.params().parity() != Some(Parity::Even) {
        return Err(Error::InvalidInput(
            "first state must be the N = 1 even sector".into(),
        ));
    }
    if odd.params().parity() != Some(Parity::Odd) {
        return Err(Error::InvalidInput(
            "second state must be the N = 1 odd sector".into(),
        ));
    }
    if even.n_max() != odd.n_max() {
        return Err(Error::InvalidInput(
            "even and odd states must share the truncation".into(),
        ));
    }
    let half_c_sq = 0.5 * c * c;
    let tol = 1e-12 * (1.0 + half_c_sq.norm());
    if (even.label() - half_c_sq).norm() > tol || (odd.label() - half_c_sq).norm() > tol {
        return Err(Error::InvalidInput(format!(
            "labels must equal c²/2 = {half_c_sq}; got {} and {}",
            even.label(),
            odd.label()
        )));
    }
    let n_max = even.n_max();
    let mut combined = fock_embedding(even)?;
    for (n, slot) in combined.iter_mut().skip(1).step_by(2).enumerate() {
        *slot = c * odd.coeff(n);
    }
    let standard = FockCoherent::new(c, 2 * n_max + 1);
    let max_deviation = combined
        .iter()
        .zip(standard.coeffs())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    Ok(RecombinationReport {
        label: c,
        fock_dim: combined.len(),
        max_deviation,
    })
}

/// Residual of a Fock-basis vector against the best-fitting eigenvalue of
/// the annihilation operator: min_λ ‖a v − λ v‖ / ‖v‖.
pub fn best_fit_lowering_residual(fock: &[Complex64]) -> f64 {
    let len = fock.len();
    if len < 2 {
        return 0.0;
    }
    let mut proj = Complex64::new(0.0, 0.0);
    let mut weight = 0.0;
    let lowered: Vec<Complex64> = (0..len - 1)
        .map(|m| ((m + 1) as f64).sqrt() * fock[m + 1])
        .collect();
    for m in 0..len - 1 {
        proj += fock[m].conj() * lowered[m];
        weight += fock[m].norm_sqr();
    }
    if weight == 0.0 {
        return 0.0;
    }
    let lambda = proj / weight;
    let num: f64 = (0..len - 1)
        .map(|m| (lowered[m] - lambda * fock[m]).norm_sqr())
        .sum();
    let den: f64 = fock.iter().map(|c| c.norm_sqr()).sum();
    (num / den).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LadderRep;

    fn params(dim: u32, ell: u32) -> OscillatorParams {
        OscillatorParams::new(dim, ell, 1.0).unwrap()
    }

    fn real(k: f64) -> Complex64 {
        Complex64::new(k, 0.0)
    }

    #[test]
    fn coefficient_values() {
        // alpha = 0.5 via (N=3, l=0)
        let s = CoherentState::new(&params(3, 0), real(1.0), 16).unwrap();
        assert_eq!(s.coeff(0), Complex64::new(1.0, 0.0));
        assert!((s.coeff(1).re - 0.816496580927726).abs() <= 1e-14);
        // alpha = 0 via (N=2, l=0): c_2 = 4 sqrt(1/(2!*2!)) = 2
        let s = CoherentState::new(&params(2, 0), real(2.0), 16).unwrap();
        assert!((s.coeff(2).re - 2.0).abs() <= 1e-13);
        // alpha = 1.5 via (N=3, l=1)
        let s = CoherentState::new(&params(3, 1), real(0.7), 16).unwrap();
        assert!((s.coeff(3).re - 0.022315581668089792).abs() <= 1e-15);
    }

    #[test]
    fn adjacent_coefficient_ratio() {
        let p = params(5, 2);
        let k = Complex64::new(1.2, -0.9);
        let s = CoherentState::new(&p, k, 64).unwrap();
        for n in 0..40 {
            let want = k.norm() / ((n as f64 + 1.0) * (n as f64 + 1.0 + p.alpha())).sqrt();
            let got = s.coeff(n + 1).norm() / s.coeff(n).norm();
            assert!(
                ((got - want) / want).abs() <= 1e-12,
                "ratio at n={n}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn zero_label_is_ground_state() {
        let p = params(4, 1);
        let s = CoherentState::new(&p, real(0.0), 32).unwrap();
        assert_eq!(s.coeff(0), Complex64::new(1.0, 0.0));
        for n in 1..=32 {
            assert_eq!(s.coeff(n).norm(), 0.0);
        }
        assert!(s.is_converged());
        assert_eq!(s.norm_squared(), 1.0);
        let rep = LadderRep::new(&p, 32).unwrap();
        assert_eq!(s.eigen_residual(&rep).unwrap(), 0.0);
        assert_eq!(norm_closed_form(&p, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn norm_series_matches_closed_form() {
        for (dim, ell, k) in [(1u32, 0u32, 1.0), (1, 1, 1.0), (2, 0, 0.5), (2, 2, 3.0)] {
            let p = params(dim, ell);
            let s = CoherentState::new(&p, real(k), 128).unwrap();
            assert!(s.is_converged());
            let series = s.norm_squared();
            let closed = norm_closed_form(&p, k).unwrap();
            assert!(
                ((series - closed) / closed).abs() <= 1e-12,
                "N={dim} l={ell} k={k}: {series} vs {closed}"
            );
        }
        // frozen values: even sector cosh(2k); odd sector sinh(2k)/(2k)
        let even = CoherentState::new(&params(1, 0), real(1.0), 128).unwrap();
        assert!((even.norm_squared() - 3.7621956910836314).abs() <= 1e-12);
        let odd = CoherentState::new(&params(1, 1), real(1.0), 128).unwrap();
        assert!((odd.norm_squared() - 1.8134302039235094).abs() <= 1e-12);
        let p = params(2, 2);
        assert!((norm_closed_form(&p, 3.0).unwrap() - 10.397132159392125).abs() <= 1e-12);
    }

    #[test]
    fn eigen_residual_tracks_truncation() {
        // converged: residual at rounding level
        let p = params(3, 0);
        let s = CoherentState::new(&p, Complex64::new(1.0, 0.5), 128).unwrap();
        assert!(s.is_converged());
        let rep = LadderRep::new(&p, 128).unwrap();
        assert!(s.eigen_residual(&rep).unwrap() <= 1e-12);
        // deliberately short ladder: tail shows up in both flag and residual
        let p = params(2, 3); // alpha = 3
        let s = CoherentState::new(&p, real(4.0), 16).unwrap();
        assert!(!s.is_converged());
        let rep = LadderRep::new(&p, 16).unwrap();
        assert!(s.eigen_residual(&rep).unwrap() > 1e-12);
    }

    #[test]
    fn eigen_residual_rejects_mismatch() {
        let p = params(3, 0);
        let s = CoherentState::new(&p, real(1.0), 32).unwrap();
        let rep = LadderRep::new(&p, 16).unwrap();
        assert!(s.eigen_residual(&rep).is_err());
        let other = LadderRep::new(&params(3, 1), 32).unwrap();
        assert!(s.eigen_residual(&other).is_err());
    }

    #[test]
    fn overlap_closed_form_at_real_labels() {
        // <k|k'> = Γ(1+α)(k k')^{-α/2} I_α(2√(k k')) = Γ(1+α) Φ_α(k k')
        let p = params(3, 1); // alpha = 1.5
        let a = CoherentState::new(&p, real(0.7), 128).unwrap();
        let b = CoherentState::new(&p, real(2.3), 128).unwrap();
        let got = a.overlap(&b).unwrap();
        assert!(got.im.abs() <= 1e-14);
        assert!(((got.re - 1.8111438095625233) / 1.8111438095625233).abs() <= 1e-12);
        let closed = log_gamma(2.5).unwrap().exp() * hyp0f1_reg(2.5, 0.7 * 2.3).unwrap();
        assert!(((got.re - closed) / closed).abs() <= 1e-12);
    }

    #[test]
    fn evolution_is_label_rotation_plus_phase() {
        let p = OscillatorParams::new(2, 0, 1.0).unwrap();
        let k = Complex64::new(0.8, 0.3);
        let s = CoherentState::new(&p, k, 96).unwrap();

        let (same, phase) = s.evolve(0.0);
        assert_eq!(same.label(), k);
        assert_eq!(phase, Complex64::new(1.0, 0.0));

        // t = pi/omega: label returns, phase = e^{-i pi (l + N/2)} = -1
        let (back, phase) = s.evolve(std::f64::consts::PI);
        assert!((back.label() - k).norm() <= 1e-14);
        assert!((phase - Complex64::new(-1.0, 0.0)).norm() <= 1e-14);

        // t = pi/(2 omega), real label: k -> -k
        let s = CoherentState::new(&p, real(1.3), 96).unwrap();
        let (flipped, _) = s.evolve(std::f64::consts::FRAC_PI_2);
        assert!((flipped.label() - real(-1.3)).norm() <= 1e-14);

        // per-coefficient law: e^{-iE_n t} c_n(k) = phase * c_n(k e^{-2iwt})
        let s = CoherentState::new(&p, k, 96).unwrap();
        let t = 0.37;
        let (evolved, phase) = s.evolve(t);
        for n in 0..=96 {
            let direct = Complex64::from_polar(1.0, -p.energy(n) * t) * s.coeff(n);
            let mapped = phase * evolved.coeff(n);
            let scale = s.coeff(n).norm();
            if scale > 0.0 {
                assert!(
                    (direct - mapped).norm() <= 1e-12 * scale,
                    "n={n}: {direct} vs {mapped}"
                );
            }
        }
    }

    #[test]
    fn recombination_reproduces_standard_coherent_state() {
        for c in [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 2.0),
            Complex64::new(-0.7, 1.1),
        ] {
            let k = 0.5 * c * c;
            let even = CoherentState::new(&params(1, 0), k, 64).unwrap();
            let odd = CoherentState::new(&params(1, 1), k, 64).unwrap();
            let report = recombine_one_dim(&even, &odd, c).unwrap();
            assert!(
                report.max_deviation <= 1e-12,
                "c = {c}: deviation {}",
                report.max_deviation
            );
        }
    }

    #[test]
    fn recombination_rejects_wrong_labels() {
        let c = Complex64::new(1.0, 0.0);
        let even = CoherentState::new(&params(1, 0), real(0.5), 64).unwrap();
        let odd = CoherentState::new(&params(1, 1), real(0.5), 64).unwrap();
        assert!(recombine_one_dim(&even, &odd, c).is_ok());
        let wrong = CoherentState::new(&params(1, 1), real(0.7), 64).unwrap();
        assert!(recombine_one_dim(&even, &wrong, c).is_err());
        // swapped sectors
        assert!(recombine_one_dim(&odd, &even, c).is_err());
        // N >= 2 states cannot embed
        let s = CoherentState::new(&params(3, 0), real(0.5), 64).unwrap();
        assert!(fock_embedding(&s).is_err());
    }

    #[test]
    fn single_sector_is_not_an_a_eigenvector() {
        // each sector is a K- eigenvector, but not an eigenvector of a itself
        let k = real(1.0);
        for tag in [0u32, 1] {
            let s = CoherentState::new(&params(1, tag), k, 64).unwrap();
            let fock = fock_embedding(&s).unwrap();
            let residual = best_fit_lowering_residual(&fock);
            assert!(
                residual > 0.1,
                "sector {tag} looks like an a-eigenvector: residual {residual}"
            );
        }
        // while the recombined state is one
        let c = Complex64::new(1.2, 0.4);
        let fock = FockCoherent::new(c, 129);
        assert!(best_fit_lowering_residual(fock.coeffs()) <= 1e-12);
    }
}
