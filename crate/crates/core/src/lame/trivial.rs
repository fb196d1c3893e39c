use std::sync::Arc;

use crate::error::Result;
use crate::real::{real, Real};
use crate::symmetry::{Field, LinearCombinationField, PowerField, SymmetryPair};
use crate::tol::Tolerances;

/// The closed-form pair at the trivial constraint root `c0 = g2 = g3 = 0`:
/// `w = (−15/4 − n(n+4))·(x+w0)⁻²`, `z = −2(x+w0)^{−2n−3}`. Always
/// parabolic (`c_w = 0`), with the explicit general solution
/// `y = α1 (x+w0)^{−3/2−n} + α2 (x+w0)^{n+5/2}`.
pub struct TrivialOddPair<T> {
    pub pair: SymmetryPair<T>,
    pub n: u32,
    pub w0: T,
    pub c1: T,
}

/// Builds the trivial odd pair on a domain not containing `−w0`.
pub fn odd_trivial_pair<T: Real>(
    n: u32,
    w0: T,
    domain: (T, T),
    tol: &Tolerances<T>,
) -> Result<TrivialOddPair<T>> {
    let nf = real::<T>(n as f64);
    let c1 = -real::<T>(15.0 / 4.0) - nf * (nf + real(4.0));
    let w: Field<T> = Arc::new(PowerField {
        coeff: c1,
        shift: w0,
        exponent: -real::<T>(2.0),
    });
    let z: Field<T> = Arc::new(PowerField {
        coeff: -real::<T>(2.0),
        shift: w0,
        exponent: -real::<T>((2 * n + 3) as f64),
    });
    let pair = SymmetryPair::new(w, z, domain, tol)?;
    Ok(TrivialOddPair { pair, n, w0, c1 })
}

impl<T: Real> TrivialOddPair<T> {
    /// Exponents of the two closed-form solutions: `(−3/2−n, n+5/2)`.
    pub fn solution_exponents(&self) -> (T, T) {
        let nf = real::<T>(self.n as f64);
        (-real::<T>(1.5) - nf, nf + real(2.5))
    }

    /// `y = α1 (x+w0)^{−3/2−n} + α2 (x+w0)^{n+5/2}` as a field.
    pub fn solution(&self, alpha1: T, alpha2: T) -> Field<T> {
        let (e1, e2) = self.solution_exponents();
        let p1: Field<T> = Arc::new(PowerField {
            coeff: T::one(),
            shift: self.w0,
            exponent: e1,
        });
        let p2: Field<T> = Arc::new(PowerField {
            coeff: T::one(),
            shift: self.w0,
            exponent: e2,
        });
        Arc::new(LinearCombinationField::new(vec![(alpha1, p1), (alpha2, p2)]))
    }
}
