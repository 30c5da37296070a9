//! Identification of the process-noise probability density of a linear
//! time-varying state-space model from measurement and control logs.
//!
//! The model is
//!
//! ```text
//! x[k+1] = F_k x[k] + G_k u[k] + w[k]      (state)
//! z[k]   = H_k x[k] + v[k]                 (measurement)
//! ```
//!
//! with known matrices `F_k`, `G_k`, `H_k`, known measurement-noise density
//! `p_v`, and unknown process-noise density `p_w`. Every `H_k` must have full
//! column rank. The estimate of `p_w` is obtained by
//!
//! 1. forming measurement-difference residues `r_k = H_k^+ (z_k - ẑ_k)`,
//!    which decompose as `r_k = w_{k-1} + ν_k` with `ν_k` a known Gaussian
//!    ([`residue`]),
//! 2. building a kernel density of the residue samples on an equidistant
//!    grid ([`kde`]),
//! 3. dividing characteristic functions (FFT of the gridded densities) and
//!    transforming back ([`deconv`]),
//! 4. reading the result as a point-mass density for moments, sampling, and
//!    error evaluation ([`pmd`]).
//!
//! Deconvolution parameters (kernel bandwidth, smoothness coefficient) are
//! selected by sweeping candidates against a moment-based reference
//! covariance ([`tuning`], [`moments`]).

pub mod deconv;
pub mod error;
pub mod grid;
pub mod io;
pub mod kde;
pub mod model;
pub mod moments;
pub mod pmd;
pub mod residue;
pub mod tuning;

mod fft;

pub use error::{Error, Result};
pub use grid::{GridSpec, GriddedDensity};
pub use model::{GaussianDensity, MatrixSeq, ModelSequence, NoiseDistribution, SimulationLog};
pub use residue::{NuDensities, ResidueSet, Residues};
