//! Construction of integrable potentials for Schrödinger-type equations
//! `y'' + w(x) y = 0` from symmetries of the equation.
//!
//! A *symmetry* is a solution `z(x)` of the third-order Lie equation
//! `z''' + 4 w z' + 2 w' z = 0`. Given a nonzero symmetry, the equation is
//! solvable in quadratures: the constant `c_w = w z² − z'²/4 + z z''/2`
//! selects sin/cos, sinh/cosh or polynomial fundamental solutions built on
//! `Φ(x) = ∫ dx/z`, and every such pair `(w, z)` seeds a three-parameter
//! hierarchy of further integrable potentials.
//!
//! The crate provides:
//!
//! * [`numerics`] — dense polynomials, an adaptive Dormand–Prince 5(4)
//!   integrator with dense output, adaptive cumulative quadrature and a
//!   bracketing root scanner;
//! * [`elliptic`] — the Weierstrass ℘-function on the real line from
//!   invariants `(g2, g3)`;
//! * [`symmetry`] — scalar fields with analytic jets, symmetry pairs,
//!   fundamental solutions by quadrature, first integrals, the sl₂ bracket
//!   and the potential hierarchy;
//! * [`lame`] — polynomial families on the elliptic curve `p1² = 4p0³ −
//!   g2·p0 − g3`: the R1/R2 reduction, even- and odd-case coefficient
//!   recurrences and closed-form degenerate pairs;
//! * [`eigen`] — Dirichlet eigenvalue solvers (shooting and the
//!   fundamental-solution determinant) and density profiles.
//!
//! Everything numeric is generic over the scalar type through [`Real`];
//! `f64` aliases for the main types live at the crate root.

pub mod eigen;
pub mod elliptic;
mod error;
pub mod lame;
pub mod numerics;
mod real;
pub mod symmetry;
mod tol;

pub use error::{Error, Result};
pub use real::{real, Real};
pub use tol::Tolerances;

/// `f64` aliases for the most commonly used types.
pub type Polynomial64 = numerics::Polynomial<f64>;
pub type Grid64 = numerics::Grid<f64>;
pub type Field64 = symmetry::Field<f64>;
pub type SymmetryPair64 = symmetry::SymmetryPair<f64>;
pub type FundamentalPair64 = symmetry::FundamentalPair<f64>;
pub type WeierstrassEvaluator64 = elliptic::WeierstrassEvaluator<f64>;
pub type EigenProblem64 = eigen::EigenProblem<f64>;
pub type Tolerances64 = Tolerances<f64>;
