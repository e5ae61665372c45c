//! Uniform 1-D spatial mesh on `[-L, L]` with homogeneous Dirichlet
//! boundary, trapezoid quadrature, and `L^p` norms.
//!
//! Fields store interior values only; the boundary values at `±L` are
//! implicitly zero. With zero endpoints the trapezoid rule collapses to
//! `h · Σ v_i`, which keeps quadrature second order and consistent with the
//! second-order spatial stencil used everywhere else.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::math;
use crate::Result;

/// Uniform mesh on `[-L, L]` with `n` interior points and spacing
/// `h = 2L / (n + 1)`. Interior point `i` (0-based) sits at `-L + (i+1) h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    half_width: f64,
    n_interior: usize,
    spacing: f64,
}

impl Grid {
    /// Build a mesh on `[-half_width, half_width]` with `n_interior ≥ 3`
    /// interior points.
    pub fn new(half_width: f64, n_interior: usize) -> Result<Self> {
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::InvalidArgument("half_width must be positive"));
        }
        if n_interior < 3 {
            return Err(Error::InvalidArgument("n_interior must be at least 3"));
        }
        let spacing = 2.0 * half_width / (n_interior as f64 + 1.0);
        Ok(Grid {
            half_width,
            n_interior,
            spacing,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn n_interior(&self) -> usize {
        self.n_interior
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Coordinate of interior point `i` (0-based).
    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n_interior);
        -self.half_width + (i as f64 + 1.0) * self.spacing
    }

    /// Iterator over interior coordinates, left to right.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_interior).map(move |i| self.point(i))
    }

    /// The same mesh extended by `cells` grid cells on each side.
    ///
    /// The spacing is unchanged and every old interior point remains a grid
    /// point, so compactly supported fields extend exactly by zero padding.
    pub fn padded(&self, cells: usize) -> Grid {
        Grid {
            half_width: self.half_width + cells as f64 * self.spacing,
            n_interior: self.n_interior + 2 * cells,
            spacing: self.spacing,
        }
    }
}

/// Real-valued function sampled at the interior points of a [`Grid`].
///
/// All stored values are finite; NaN/Inf is a detected blow-up state and is
/// reported through [`Error::NonfiniteState`] by the time steppers, never
/// silently stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    values: Vec<f64>,
}

impl Field {
    /// The zero field.
    pub fn zeros(grid: Grid) -> Field {
        Field {
            grid,
            values: vec![0.0; grid.n_interior()],
        }
    }

    /// Sample `f` at the interior points.
    pub fn sample(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Field> {
        let values: Vec<f64> = grid.points().map(f).collect();
        Field::from_values(grid, values)
    }

    /// Wrap an existing value vector, checking length and finiteness.
    pub fn from_values(grid: Grid, values: Vec<f64>) -> Result<Field> {
        if values.len() != grid.n_interior() {
            return Err(Error::GridMismatch);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("field values must be finite"));
        }
        Ok(Field { grid, values })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Trapezoid-rule integral over `[-L, L]`; with the implicit zero
    /// boundary this is `h · Σ v_i`.
    pub fn integrate(&self) -> f64 {
        self.grid.spacing() * self.values.iter().sum::<f64>()
    }

    /// `(∫ |v|^p dx)^(1/p)` for finite `p ≥ 1`, or `max |v_i|` for
    /// `p = ∞`; `p < 1` is rejected.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidArgument("p must satisfy p >= 1"));
        }
        if p == f64::INFINITY {
            return Ok(self.max_abs());
        }
        let h = self.grid.spacing();
        let sum: f64 = if p == 1.0 {
            self.values.iter().map(|v| math::abs(*v)).sum()
        } else if p == 2.0 {
            self.values.iter().map(|v| v * v).sum()
        } else {
            self.values.iter().map(|v| math::powf(math::abs(*v), p)).sum()
        };
        Ok(math::powf(h * sum, 1.0 / p))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(math::abs(*v)))
    }

    /// Largest (signed) value; used by the sign-preservation checks.
    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .fold(f64::NEG_INFINITY, |m, v| m.max(*v))
    }

    /// `max(|v_0|, |v_{n-1}|)`, the field magnitude next to the boundary.
    /// Experiments use it to confirm the truncation is not doing the work.
    pub fn boundary_max(&self) -> f64 {
        let first = math::abs(self.values[0]);
        let last = math::abs(self.values[self.values.len() - 1]);
        first.max(last)
    }

    /// `a·self + b·other` on a shared grid.
    pub fn linear_combination(a: f64, u: &Field, b: f64, w: &Field) -> Result<Field> {
        if u.grid != w.grid {
            return Err(Error::GridMismatch);
        }
        let values = u
            .values
            .iter()
            .zip(&w.values)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Field::from_values(u.grid, values)
    }

    /// Pointwise product on a shared grid.
    pub fn pointwise_mul(&self, other: &Field) -> Result<Field> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| x * y)
            .collect();
        Field::from_values(self.grid, values)
    }

    /// The same field on [`Grid::padded`]`(cells)`, extended by zeros.
    /// Exact for compactly supported fields since old points are preserved.
    pub fn zero_padded(&self, cells: usize) -> Field {
        let grid = self.grid.padded(cells);
        let mut values = vec![0.0; grid.n_interior()];
        values[cells..cells + self.values.len()].copy_from_slice(&self.values);
        Field { grid, values }
    }
}
