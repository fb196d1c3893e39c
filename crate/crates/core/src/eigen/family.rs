use std::sync::Arc;

use crate::elliptic::EllipticInvariants;
use crate::error::Result;
use crate::lame::even_coefficients;
use crate::numerics::Grid;
use crate::real::{real, Real};
use crate::symmetry::{
    fundamental_solutions, CaseKind, ConstantField, Field, FundamentalPair, Jet, ScalarField,
    SymmetryPair,
};
use crate::tol::Tolerances;

use super::shoot::IntegratedSolutionField;

/// λ-indexed family of symmetry pairs for the spectral potential
/// `w(x) − λ`; powers the determinant eigenvalue method.
pub trait SymmetryFamily<T: Real>: Send + Sync {
    fn pair_at(&self, lambda: T) -> Result<SymmetryPair<T>>;
    fn interval(&self) -> (T, T);
}

/// `w ≡ w0` with symmetry `z ≡ 1` and `c_w = w0 − λ`.
pub struct ConstantFamily<T> {
    pub w0: T,
    pub interval: (T, T),
    pub tol: Tolerances<T>,
}

impl<T: Real> SymmetryFamily<T> for ConstantFamily<T> {
    fn pair_at(&self, lambda: T) -> Result<SymmetryPair<T>> {
        SymmetryPair::new(
            Arc::new(ConstantField(self.w0 - lambda)),
            Arc::new(ConstantField(T::one())),
            self.interval,
            &self.tol,
        )
    }

    fn interval(&self) -> (T, T) {
        self.interval
    }
}

/// Even Lamé family `w = −n(n+1)℘ + c0`: the spectral shift acts on the
/// free constant, `z(·, λ)` is the even symmetry at `c0 − λ`.
pub struct LameEvenFamily<T> {
    pub n: u32,
    pub c0: T,
    pub inv: EllipticInvariants<T>,
    pub interval: (T, T),
    pub tol: Tolerances<T>,
}

impl<T: Real> SymmetryFamily<T> for LameEvenFamily<T> {
    fn pair_at(&self, lambda: T) -> Result<SymmetryPair<T>> {
        let fam = even_coefficients(self.n, self.c0 - lambda, self.inv)?;
        fam.assemble(self.interval, &self.tol)
    }

    fn interval(&self) -> (T, T) {
        self.interval
    }
}

/// `y1² + y2²` for two independent integrated solutions.
struct SumSquaresField<T> {
    y1: Arc<IntegratedSolutionField<T>>,
    y2: Arc<IntegratedSolutionField<T>>,
}

impl<T: Real> ScalarField<T> for SumSquaresField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let a = self.y1.jet(x)?;
        let b = self.y2.jet(x)?;
        Ok(a.mul(&a).add(&b.mul(&b)))
    }
}

struct ShiftedField<T> {
    w: Field<T>,
    shift: T,
}

impl<T: Real> ScalarField<T> for ShiftedField<T> {
    fn order(&self) -> usize {
        self.w.order()
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let j = self.w.jet(x)?;
        let mut vals: Vec<T> = (0..=j.order()).map(|k| j.d(k)).collect();
        vals[0] = vals[0] - self.shift;
        Ok(Jet::from_slice(&vals))
    }
}

/// Numeric fallback family for potentials without a closed-form symmetry:
/// `z(·, λ) = y1² + y2²` from two solutions integrated out of the interval
/// midpoint with Wronskian 1. The combination is strictly positive (the
/// solutions cannot vanish together), so the construction works on the whole
/// interval; `c_w = W² = 1`.
pub struct NumericFamily<T> {
    pub w: Field<T>,
    pub interval: (T, T),
    pub tol: Tolerances<T>,
}

impl<T: Real> SymmetryFamily<T> for NumericFamily<T> {
    fn pair_at(&self, lambda: T) -> Result<SymmetryPair<T>> {
        let (a, b) = self.interval;
        let x_m = (a + b) * real::<T>(0.5);
        let y1 = Arc::new(IntegratedSolutionField::from_midpoint(
            self.w.clone(),
            lambda,
            self.interval,
            x_m,
            T::one(),
            T::zero(),
            &self.tol,
        )?);
        let y2 = Arc::new(IntegratedSolutionField::from_midpoint(
            self.w.clone(),
            lambda,
            self.interval,
            x_m,
            T::zero(),
            T::one(),
            &self.tol,
        )?);
        let z: Field<T> = Arc::new(SumSquaresField { y1, y2 });
        let w_shift: Field<T> = Arc::new(ShiftedField {
            w: self.w.clone(),
            shift: lambda,
        });
        SymmetryPair::new(w_shift, z, self.interval, &self.tol)
    }

    fn interval(&self) -> (T, T) {
        self.interval
    }
}

/// The Theorem-form determinant `y⁽¹⁾(a,λ)y⁽²⁾(b,λ) − y⁽¹⁾(b,λ)y⁽²⁾(a,λ)`,
/// whose zeros in λ are the Dirichlet eigenvalues on `[a, b]`.
pub fn determinant_condition<T: Real>(
    family: &dyn SymmetryFamily<T>,
    lambda: T,
    a: T,
    b: T,
    samples: usize,
    tol: &Tolerances<T>,
) -> Result<T> {
    let (d, _pair) = determinant_parts(family, lambda, a, b, samples, tol)?;
    Ok(d)
}

/// Smooth variant used for λ-scanning: divides the elliptic/hyperbolic
/// determinant by q0, which extends it analytically across `c_w = 0`
/// (`sin(q0ΔΦ)/q0` and `sinh(q0ΔΦ)/q0` are the same analytic function of
/// `c_w`), removing the spurious touch-zero at case transitions.
pub fn determinant_scaled<T: Real>(
    family: &dyn SymmetryFamily<T>,
    lambda: T,
    a: T,
    b: T,
    samples: usize,
    tol: &Tolerances<T>,
) -> Result<T> {
    let (d, pair) = determinant_parts(family, lambda, a, b, samples, tol)?;
    Ok(match pair.case {
        CaseKind::Parabolic => d,
        _ => d / pair.q0,
    })
}

fn determinant_parts<T: Real>(
    family: &dyn SymmetryFamily<T>,
    lambda: T,
    a: T,
    b: T,
    samples: usize,
    tol: &Tolerances<T>,
) -> Result<(T, FundamentalPair<T>)> {
    let pair = family.pair_at(lambda)?;
    let grid = Grid::uniform(a, b, samples.max(33))?;
    let x_b = (a + b) * real::<T>(0.5);
    let fp = fundamental_solutions(&pair, x_b, &grid, tol)?;
    let y1a = fp.y1.value(a)?;
    let y1b = fp.y1.value(b)?;
    let y2a = fp.y2.value(a)?;
    let y2b = fp.y2.value(b)?;
    Ok((y1a * y2b - y1b * y2a, fp))
}
