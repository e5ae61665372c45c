//! The heat kernel `H(t, x) = (4πt)^{-1/2} exp(-x²/(4t))` and the
//! closed-form heat evolution of Gaussian data.

use crate::error::Error;
use crate::math;
use crate::Result;

/// Fundamental solution of `u_t = u_xx` on the line. As `t → 0` the family
/// `H(t, ·)` is a δ-sequence, which is what the witness search relies on.
pub fn heat_kernel(t: f64, x: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument("heat kernel requires t > 0"));
    }
    let four_pi_t = 4.0 * core::f64::consts::PI * t;
    Ok(math::exp(-x * x / (4.0 * t)) / math::sqrt(four_pi_t))
}

/// Exact solution of `u_t = u_xx` from the initial profile
/// `exp(-(x - center)² / (2 width²))`: convolving Gaussians adds variances,
/// so the width parameter evolves as `width² + 2t` and the amplitude scales
/// to conserve mass.
pub fn gaussian_heat_evolution(t: f64, x: f64, width: f64, center: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument("heat evolution requires t > 0"));
    }
    if !(width > 0.0) {
        return Err(Error::InvalidArgument("gaussian width must be positive"));
    }
    let var = width * width + 2.0 * t;
    let d = x - center;
    Ok(width / math::sqrt(var) * math::exp(-d * d / (2.0 * var)))
}
