//! Numerical substrate: dense polynomial algebra, an embedded Runge–Kutta
//! integrator with dense output, adaptive cumulative quadrature and a
//! bracketing root finder.
//!
//! All operations are pure given their inputs; callbacks must be re-entrant.

mod grid;
mod ode;
mod poly;
mod quad;
mod roots;

pub use grid::Grid;
pub use ode::{integrate_ode, OdeSolution};
pub use poly::Polynomial;
pub use quad::{adaptive_integral, cumulative_quadrature};
pub use roots::{find_roots_scan, refine_bracket};
