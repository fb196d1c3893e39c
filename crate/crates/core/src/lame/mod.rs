//! Polynomial families on the elliptic curve `p1² = 4p0³ − g2 p0 − g3`:
//! the reduction of the Lie equation to the polynomial system
//! `R1(p0) + p1 R2(p0) = 0`, the even- and odd-case coefficient
//! recurrences, the closed-form trivial odd pair, and assembly of `(w, z)`
//! as scalar fields through the ℘ evaluator.

mod assemble;
mod curve_poly;
mod even;
mod odd;
mod reduction;
mod trivial;

pub use assemble::{assemble_fields, CurveField};
pub use curve_poly::CurvePoly;
pub use even::{even_coefficients, even_cw_closed_form, EvenFamily};
pub use odd::{find_gc_roots, gc_residuals, odd_coefficients, GcRoot, OddFamily};
pub use reduction::{r1_r2_from_lie_reduction, r1_r2_polynomials, LamePotentialSpec, LameSymmetrySpec};
pub use trivial::{odd_trivial_pair, TrivialOddPair};
