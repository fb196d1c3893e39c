use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::Grid;
use crate::real::{real, Real};
use crate::symmetry::{
    symmetry_triple, Field, Jet, LinearCombinationField, ScalarField, SymmetryPair,
};
use crate::tol::Tolerances;

/// `ŵ = w + ĉ/ẑ²`, order 1 (`ŵ' = w' − 2ĉ ẑ'/ẑ³`).
struct ShiftedPotentialField<T> {
    w: Field<T>,
    z_hat: Field<T>,
    c_hat: T,
}

impl<T: Real> ScalarField<T> for ShiftedPotentialField<T> {
    fn order(&self) -> usize {
        1
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let wj = self.w.jet(x)?;
        let zj = self.z_hat.jet(x)?;
        let z = zj.value();
        if z.abs() < real::<T>(1e-12) * T::one().max(zj.d(1).abs()) {
            return Err(Error::ZeroSymmetry {
                x: x.to_f64().unwrap_or(f64::NAN),
            });
        }
        let w = wj.value() + self.c_hat / (z * z);
        let w1 = wj.d(1) - real::<T>(2.0) * self.c_hat * zj.d(1) / z.powi(3);
        Ok(Jet::from_slice(&[w, w1]))
    }
}

/// One step of the hierarchy: from `(w, z)` build the symmetry triple,
/// combine it as `ẑ = α1 z⁽¹⁾ + α2 z⁽²⁾ + α3 z⁽³⁾` and return the validated
/// pair `(ŵ, ẑ)` with `ŵ = w + ĉ/ẑ²`. The output passes the same invariant
/// suite as the input, so steps can be chained.
pub fn hierarchy_step<T: Real>(
    pair: &SymmetryPair<T>,
    c_hat: T,
    alpha: (T, T, T),
    x_b: T,
    grid: &Grid<T>,
    tol: &Tolerances<T>,
) -> Result<SymmetryPair<T>> {
    if alpha.0.is_zero() && alpha.1.is_zero() && alpha.2.is_zero() {
        return Err(Error::InvalidInput(
            "hierarchy combination must have a nonzero coefficient".into(),
        ));
    }
    let triple = symmetry_triple(pair, x_b, grid, tol)?;
    let z_hat: Field<T> = Arc::new(LinearCombinationField::new(vec![
        (alpha.0, triple.z1),
        (alpha.1, triple.z2),
        (alpha.2, triple.z3),
    ]));
    let w_hat: Field<T> = Arc::new(ShiftedPotentialField {
        w: pair.w().clone(),
        z_hat: z_hat.clone(),
        c_hat,
    });
    SymmetryPair::new(w_hat, z_hat, (grid.x0(), grid.x1()), tol)
}
