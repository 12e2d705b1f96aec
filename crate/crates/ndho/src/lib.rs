//! Algebraic treatment of the N-dimensional isotropic harmonic oscillator.
//!
//! The radial problem at fixed angular momentum ℓ carries a realization of
//! the noncompact O(2,1) ladder algebra: J₃ = H/2ω together with raising and
//! lowering operators K± that step the energy by 2ω. This crate builds that
//! realization concretely and keeps every claim checkable:
//!
//! - [`algebra`]: oscillator parameters, truncated J₃/K± matrices, both
//!   energy-eigenvalue branches and the case analysis of the second one;
//! - [`special`]: log-gamma, Laguerre/Hermite polynomials, the modified
//!   Bessel function I_α, and a composite Gauss-Legendre quadrature;
//! - [`coherent`]: K₋ eigenstates for any (N, ℓ), norms, time evolution, and
//!   the N = 1 even/odd pair recombining into exp(c a†)|0⟩;
//! - [`radial`]: Laguerre-ladder eigenfunctions, coherent wave functions by
//!   two independent routes, densities, and the large-label Gaussian limit;
//! - [`degeneracy`]: exact Cartesian/spherical state counting;
//! - [`cli`]: the deterministic CSV/JSON front end behind the `ndho` binary.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example spectrum`.
//!
//! All types are immutable after construction and all operations are pure
//! functions of their inputs, so everything here can be shared across
//! threads freely.

pub mod algebra;
pub mod cli;
pub mod coherent;
pub mod degeneracy;
mod error;
pub mod radial;
pub mod special;

pub use algebra::{LadderRep, OscillatorParams, Parity, SecondBranchClass, SpectrumBranches};
pub use coherent::{CoherentState, FockCoherent};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use radial::{RadialFunction, RadialGrid};
