use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::Polynomial;
use crate::real::{real, Real};
use crate::symmetry::Jet;

/// A scalar function of one real variable carrying analytic derivatives up
/// to its declared smooth order (≥ 1 for potentials, ≥ 3 for symmetries).
pub trait ScalarField<T: Real>: Send + Sync {
    fn order(&self) -> usize;

    /// Value and derivatives at `x`, up to [`ScalarField::order`].
    fn jet(&self, x: T) -> Result<Jet<T>>;

    fn value(&self, x: T) -> Result<T> {
        Ok(self.jet(x)?.value())
    }
}

/// Shared handle to a scalar field.
pub type Field<T> = Arc<dyn ScalarField<T>>;

/// Wraps a concrete field into a shared handle.
pub fn field<T: Real>(f: impl ScalarField<T> + 'static) -> Field<T> {
    Arc::new(f)
}

/// Constant function.
pub struct ConstantField<T>(pub T);

impl<T: Real> ScalarField<T> for ConstantField<T> {
    fn order(&self) -> usize {
        4
    }

    fn jet(&self, _x: T) -> Result<Jet<T>> {
        Ok(Jet::constant(self.0, 4))
    }
}

/// Polynomial in `x` with precomputed derivative polynomials.
pub struct PolynomialField<T> {
    derivs: Vec<Polynomial<T>>,
}

impl<T: Real> PolynomialField<T> {
    pub fn new(p: Polynomial<T>) -> Self {
        let mut derivs = vec![p];
        for k in 1..=4 {
            let next = derivs[k - 1].derivative();
            derivs.push(next);
        }
        Self { derivs }
    }
}

impl<T: Real> ScalarField<T> for PolynomialField<T> {
    fn order(&self) -> usize {
        4
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let vals = self.derivs.iter().map(|p| p.eval(x)).collect::<Vec<_>>();
        Ok(Jet::from_slice(&vals))
    }
}

/// Field backed by a closure that returns the full jet (used for fields with
/// a known analytic form).
pub struct CallbackField<T> {
    order: usize,
    f: Box<dyn Fn(T) -> Result<Jet<T>> + Send + Sync>,
}

impl<T: Real> CallbackField<T> {
    pub fn new(order: usize, f: impl Fn(T) -> Result<Jet<T>> + Send + Sync + 'static) -> Self {
        Self {
            order,
            f: Box::new(f),
        }
    }
}

impl<T: Real> ScalarField<T> for CallbackField<T> {
    fn order(&self) -> usize {
        self.order
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        (self.f)(x)
    }
}

/// `factor · inner`.
pub struct ScaledField<T> {
    pub inner: Field<T>,
    pub factor: T,
}

impl<T: Real> ScalarField<T> for ScaledField<T> {
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        Ok(self.inner.jet(x)?.scale(self.factor))
    }
}

/// `Σ cᵢ·fᵢ`, order = min over the terms.
pub struct LinearCombinationField<T> {
    terms: Vec<(T, Field<T>)>,
}

impl<T: Real> LinearCombinationField<T> {
    pub fn new(terms: Vec<(T, Field<T>)>) -> Self {
        assert!(!terms.is_empty());
        Self { terms }
    }
}

impl<T: Real> ScalarField<T> for LinearCombinationField<T> {
    fn order(&self) -> usize {
        self.terms.iter().map(|(_, f)| f.order()).min().unwrap()
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let mut acc = self.terms[0].1.jet(x)?.scale(self.terms[0].0);
        for (c, f) in &self.terms[1..] {
            acc = acc.add(&f.jet(x)?.scale(*c));
        }
        Ok(acc)
    }
}

/// Pointwise product, order = min of the factors.
pub struct ProductField<T> {
    pub a: Field<T>,
    pub b: Field<T>,
}

impl<T: Real> ScalarField<T> for ProductField<T> {
    fn order(&self) -> usize {
        self.a.order().min(self.b.order())
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        Ok(self.a.jet(x)?.mul(&self.b.jet(x)?))
    }
}

/// `coeff · (x + shift)^exponent` on a half-line where the base is positive
/// (negative bases are allowed for integer exponents).
pub struct PowerField<T> {
    pub coeff: T,
    pub shift: T,
    pub exponent: T,
}

impl<T: Real> PowerField<T> {
    fn pow(t: T, e: T) -> Result<T> {
        if t > T::zero() {
            Ok(t.powf(e))
        } else if e == e.round() {
            let k = e.to_i32().ok_or_else(|| {
                Error::InvalidInput("integer exponent out of range".into())
            })?;
            Ok(t.powi(k))
        } else {
            Err(Error::InvalidInput(format!(
                "fractional power of non-positive base {t}"
            )))
        }
    }
}

impl<T: Real> ScalarField<T> for PowerField<T> {
    fn order(&self) -> usize {
        4
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let t = x + self.shift;
        if t.is_zero() {
            return Err(Error::InvalidInput(
                "power field evaluated at its singular point".into(),
            ));
        }
        let mut vals = [T::zero(); 5];
        let mut c = self.coeff;
        let mut e = self.exponent;
        for v in &mut vals {
            *v = c * Self::pow(t, e)?;
            c = c * e;
            e = e - T::one();
        }
        Ok(Jet::from_slice(&vals))
    }
}

/// Potential reconstructed from a symmetry via
/// `w = c_w/z² + (z'/z)²/4 − z''/(2z)`; the derivative
/// `w' = −2 c_w z'/z³ + z'z''/z² − z'³/(2z³) − z'''/(2z)` uses `z` up to
/// order 3, so the returned field has order 1.
pub struct DerivedPotentialField<T> {
    pub z: Field<T>,
    pub c_w: T,
}

impl<T: Real> ScalarField<T> for DerivedPotentialField<T> {
    fn order(&self) -> usize {
        1
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let zj = self.z.jet(x)?;
        let (z, z1, z2, z3) = (zj.value(), zj.d(1), zj.d(2), zj.d(3));
        let floor = real::<T>(1e-12) * T::one().max(z1.abs()).max(z2.abs());
        if z.abs() < floor {
            return Err(Error::ZeroSymmetry {
                x: x.to_f64().unwrap_or(f64::NAN),
            });
        }
        let half = real::<T>(0.5);
        let w = self.c_w / (z * z) + (z1 / z).powi(2) * real::<T>(0.25) - z2 * half / z;
        let w1 = -real::<T>(2.0) * self.c_w * z1 / z.powi(3) + z1 * z2 / (z * z)
            - z1.powi(3) * half / z.powi(3)
            - z3 * half / z;
        Ok(Jet::from_slice(&[w, w1]))
    }
}

/// `w(x) = c_w/z² + (z'/z)²/4 − z''/(2z)` as a field of order 1.
pub fn potential_from_symmetry<T: Real>(z: Field<T>, c_w: T) -> Field<T> {
    Arc::new(DerivedPotentialField { z, c_w })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_field_jets() {
        let f = PolynomialField::new(Polynomial::new(vec![0.0, 0.0, -3.0, 0.0, 2.25]));
        let j = f.jet(1.0).unwrap();
        assert_eq!(j.value(), -0.75);
        assert_eq!(j.d(1), 9.0 - 6.0);
        assert_eq!(j.d(2), 27.0 - 6.0);
    }

    #[test]
    fn constant_symmetry_constant_potential() {
        // z ≡ 1, c_w = q² → w ≡ q²
        let w = potential_from_symmetry(field(ConstantField(1.0)), 2.25);
        let j = w.jet(0.3).unwrap();
        assert_eq!(j.value(), 2.25);
        assert_eq!(j.d(1), 0.0);
    }

    #[test]
    fn squared_solution_reproduces_potential() {
        // y = sin x solves y'' + y = 0; z = y² is parabolic (c_w = 0) and
        // must reconstruct w ≡ 1
        let z = CallbackField::new(3, |x: f64| {
            let s = x.sin();
            Ok(Jet::from_slice(&[
                s * s,
                (2.0 * x).sin(),
                2.0 * (2.0 * x).cos(),
                -4.0 * (2.0 * x).sin(),
            ]))
        });
        let w = potential_from_symmetry(field(z), 0.0);
        for k in 1..10 {
            let x = 0.1 + 0.25 * k as f64;
            let j = w.jet(x).unwrap();
            assert!((j.value() - 1.0).abs() < 1e-8, "w({x}) = {}", j.value());
            assert!(j.d(1).abs() < 1e-7);
        }
    }

    #[test]
    fn zero_symmetry_detected() {
        let z = CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[x, 1.0, 0.0, 0.0]))
        });
        let w = potential_from_symmetry(field(z), 1.0);
        assert!(matches!(w.jet(0.0), Err(Error::ZeroSymmetry { .. })));
    }

    #[test]
    fn power_field_jet() {
        // 3·(x+1)^{-2}
        let f = PowerField {
            coeff: 3.0,
            shift: 1.0,
            exponent: -2.0,
        };
        let j = f.jet(1.0).unwrap();
        assert_eq!(j.value(), 0.75);
        assert_eq!(j.d(1), -0.75);
        assert_eq!(j.d(2), 1.125);
    }
}
