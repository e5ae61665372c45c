//! Discretization of the Schrödinger operator `A = Δ - 2f` as a symmetric
//! tridiagonal matrix, its quadratic form, and the equilibrium source term
//! `φ = f² - Δf` that conjugates the inhomogeneous equation to the
//! homogeneous one.

use alloc::vec::Vec;

use crate::error::Error;
use crate::grid::{Field, Grid};
use crate::math;
use crate::Result;

/// Apply the 3-point Dirichlet Laplacian `(v_{i-1} - 2 v_i + v_{i+1}) / h²`
/// with implicit zero boundary values. Every module that needs `Δ` goes
/// through this one stencil.
pub fn laplacian(grid: Grid, values: &[f64]) -> Vec<f64> {
    let n = values.len();
    debug_assert_eq!(n, grid.n_interior());
    let inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let left = if i > 0 { values[i - 1] } else { 0.0 };
        let right = if i + 1 < n { values[i + 1] } else { 0.0 };
        out.push((left - 2.0 * values[i] + right) * inv_h2);
    }
    out
}

/// Symmetric tridiagonal form of `Δ - 2f`: diagonal `-2/h² - 2 f(x_i)`,
/// off-diagonal `1/h²`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    grid: Grid,
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
}

impl TridiagonalOperator {
    /// Assemble `Δ - 2f` on the grid carrying `f`.
    pub fn assemble(grid: Grid, f: &Field) -> Result<Self> {
        if f.grid() != grid {
            return Err(Error::GridMismatch);
        }
        let inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
        let diagonal = f.values().iter().map(|fi| -2.0 * inv_h2 - 2.0 * fi).collect();
        let off_diagonal = alloc::vec![inv_h2; grid.n_interior() - 1];
        Ok(TridiagonalOperator {
            grid,
            diagonal,
            off_diagonal,
        })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    /// Matrix–vector product with implicit zero boundary.
    pub fn apply(&self, u: &Field) -> Result<Field> {
        if u.grid() != self.grid {
            return Err(Error::GridMismatch);
        }
        let v = u.values();
        let n = v.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = self.diagonal[i] * v[i];
            if i > 0 {
                s += self.off_diagonal[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                s += self.off_diagonal[i] * v[i + 1];
            }
            out.push(s);
        }
        Field::from_values(self.grid, out)
    }

    /// Discrete quadratic form `h · uᵀ A u`, the grid analogue of `⟨u, Au⟩`.
    pub fn quadratic_form(&self, u: &Field) -> Result<f64> {
        if u.values().iter().all(|v| *v == 0.0) {
            return Err(Error::ZeroField);
        }
        let au = self.apply(u)?;
        Ok(self.grid.spacing()
            * u.values()
                .iter()
                .zip(au.values())
                .map(|(a, b)| a * b)
                .sum::<f64>())
    }

    /// Row-sum norm `‖A‖_∞`; eigenvalue tolerances are scaled by it.
    pub fn norm_inf(&self) -> f64 {
        let n = self.diagonal.len();
        let mut best = 0.0_f64;
        for i in 0..n {
            let mut row = math::abs(self.diagonal[i]);
            if i > 0 {
                row += math::abs(self.off_diagonal[i - 1]);
            }
            if i + 1 < n {
                row += math::abs(self.off_diagonal[i]);
            }
            best = best.max(row);
        }
        best
    }
}

/// Source term that makes `f` an equilibrium of `w_t = Δw - w² + φ`:
/// from `Δf - f² + φ = 0`, `φ = f·f - Δ_h f` with the shared stencil.
pub fn compute_phi(grid: Grid, f: &Field) -> Result<Field> {
    if f.grid() != grid {
        return Err(Error::GridMismatch);
    }
    let lap = laplacian(grid, f.values());
    let values = f
        .values()
        .iter()
        .zip(&lap)
        .map(|(fi, li)| fi * fi - li)
        .collect();
    Field::from_values(grid, values)
}
