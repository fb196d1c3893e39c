use crate::real::{real, Real};

/// Tolerance bundle threaded through the library.
///
/// * `rtol`/`atol` control the ODE integrator and quadrature;
/// * `xtol` is the root-refinement interval width;
/// * `pair_cw` bounds the allowed deviation of `c_w` across nodes
///   (relative to `1 + |c_w|`);
/// * `pair_lie` bounds the Lie residual of a symmetry pair relative to the
///   largest term magnitude.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances<T> {
    pub rtol: T,
    pub atol: T,
    pub xtol: T,
    pub pair_cw: T,
    pub pair_lie: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            rtol: real(1e-10),
            atol: real(1e-12),
            xtol: real(1e-10),
            pair_cw: real(1e-7),
            pair_lie: real(1e-7),
        }
    }
}

impl<T: Real> Tolerances<T> {
    /// Scales rtol/atol/xtol by a common factor, keeping pair tolerances.
    pub fn scaled(mut self, factor: T) -> Self {
        self.rtol = self.rtol * factor;
        self.atol = self.atol * factor;
        self.xtol = self.xtol * factor;
        self
    }
}
