//! Numerical laboratory for the semilinear heat equation
//! `u_t = Δu − 2 f u − u²` on a truncated line with Dirichlet boundary.
//!
//! The crate provides the pieces needed to study the zero equilibrium of that
//! equation at desk scale:
//!
//! * [`grid`] — uniform 1-D meshes, trapezoid quadrature, `L^p` norms;
//! * [`operator`] — the symmetric tridiagonal discretization of `Δ − 2f`;
//! * [`eigen`] — Sturm-sequence bisection eigensolver with inverse-iteration
//!   eigenvectors;
//! * [`probe`] — normalized Gaussian quasi-modes driving the operator residual
//!   `‖(Δ − 2f)ψ‖²` to zero, the witness that the spectrum reaches zero;
//! * [`solver`] — method-of-lines time stepping (explicit RK4 and IMEX
//!   Crank–Nicolson) with blow-up detection;
//! * [`blowup`] — arbitrarily small initial data, heat-kernel witnesses, the
//!   `J` functional and its Riccati comparison ODE.
//!
//! The core is `no_std`-compatible (with `alloc`); all float math goes through
//! `libm` so results are identical with and without the `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod blowup;
pub mod eigen;
pub mod error;
pub mod grid;
pub mod kernel;
pub mod operator;
pub mod probe;
pub mod solver;

pub use error::Error;
pub use grid::{Field, Grid};
pub use operator::TridiagonalOperator;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
