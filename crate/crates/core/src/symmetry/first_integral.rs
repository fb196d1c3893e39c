use std::sync::Arc;

use crate::error::Result;
use crate::real::{real, Real};
use crate::symmetry::{ConstantField, Field, Jet, ScalarField};

/// Linear symmetry functional `φ = a(x)·u0 + b(x)·u1` of the equation
/// `u0'' + w u0 = 0` (with `u1 = u0'`).
#[derive(Clone)]
pub struct LinearSymmetry<T> {
    pub a: Field<T>,
    pub b: Field<T>,
}

/// `−z'/2` as a field (order drops by one).
struct HalfNegDeriv<T> {
    z: Field<T>,
}

impl<T: Real> ScalarField<T> for HalfNegDeriv<T> {
    fn order(&self) -> usize {
        self.z.order() - 1
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let zj = self.z.jet(x)?;
        let half = -real::<T>(0.5);
        let vals: Vec<T> = (1..=zj.order()).map(|k| zj.d(k) * half).collect();
        Ok(Jet::from_slice(&vals))
    }
}

impl<T: Real> LinearSymmetry<T> {
    /// φ = u0.
    pub fn u0() -> Self {
        Self {
            a: Arc::new(ConstantField(T::one())),
            b: Arc::new(ConstantField(T::zero())),
        }
    }

    /// φ = u1.
    pub fn u1() -> Self {
        Self {
            a: Arc::new(ConstantField(T::zero())),
            b: Arc::new(ConstantField(T::one())),
        }
    }

    /// φ_z = z·u1 − (z'/2)·u0 for a symmetry function z.
    pub fn from_symmetry(z: Field<T>) -> Self {
        Self {
            a: Arc::new(HalfNegDeriv { z: z.clone() }),
            b: z,
        }
    }

    /// Evaluates φ and its total derivative along a solution `y`:
    /// `D(φ) = a'y + (a + b')y' + b y''`.
    fn eval_with_derivative(&self, y: &dyn ScalarField<T>, x: T) -> Result<(T, T)> {
        let aj = self.a.jet(x)?;
        let bj = self.b.jet(x)?;
        let yj = y.jet(x)?;
        let phi = aj.value() * yj.value() + bj.value() * yj.d(1);
        let dphi = aj.d(1) * yj.value() + (aj.value() + bj.d(1)) * yj.d(1) + bj.value() * yj.d(2);
        Ok((phi, dphi))
    }
}

/// First integral `H = φ1·D(φ2) − φ2·D(φ1)` evaluated along the solution
/// `y` at `x`; constant in `x` whenever φ1, φ2 are symmetries and `y`
/// solves the equation.
pub fn first_integral<T: Real>(
    phi1: &LinearSymmetry<T>,
    phi2: &LinearSymmetry<T>,
    y: &dyn ScalarField<T>,
    x: T,
) -> Result<T> {
    let (p1, d1) = phi1.eval_with_derivative(y, x)?;
    let (p2, d2) = phi2.eval_with_derivative(y, x)?;
    Ok(p1 * d2 - p2 * d1)
}

/// The symmetry-space bracket `[z1, z2] = z1' z2 − z1 z2'`.
pub fn sl2_bracket<T: Real>(
    z1: &dyn ScalarField<T>,
    z2: &dyn ScalarField<T>,
    x: T,
) -> Result<T> {
    let j1 = z1.jet(x)?;
    let j2 = z2.jet(x)?;
    Ok(j1.d(1) * j2.value() - j1.value() * j2.d(1))
}

/// `[z1, z2]` as a field (order drops by one), so brackets can be nested
/// for Jacobi-identity checks.
pub struct BracketField<T> {
    pub z1: Field<T>,
    pub z2: Field<T>,
}

impl<T: Real> ScalarField<T> for BracketField<T> {
    fn order(&self) -> usize {
        self.z1.order().min(self.z2.order()) - 1
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let a = self.z1.jet(x)?;
        let b = self.z2.jet(x)?;
        let o = a.order().min(b.order());
        let mut vals = vec![a.d(1) * b.value() - a.value() * b.d(1)];
        if o >= 2 {
            vals.push(a.d(2) * b.value() - a.value() * b.d(2));
        }
        if o >= 3 {
            vals.push(a.d(3) * b.value() + a.d(2) * b.d(1) - a.d(1) * b.d(2) - a.value() * b.d(3));
        }
        Ok(Jet::from_slice(&vals))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{field, CallbackField};

    fn sin_solution() -> Field<f64> {
        field(CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[x.sin(), x.cos(), -x.sin(), -x.cos()]))
        }))
    }

    #[test]
    fn hand_computed_integral_for_sine() {
        // φ1 = u0, φ2 = u1 along y = sin x (w ≡ 1):
        // H = y·y'' − (y')² = −sin² − cos² = −1 at every x
        let y = sin_solution();
        let phi1 = LinearSymmetry::u0();
        let phi2 = LinearSymmetry::u1();
        for k in 0..20 {
            let x = 0.3 * k as f64;
            let h = first_integral(&phi1, &phi2, y.as_ref(), x).unwrap();
            assert!((h + 1.0).abs() < 1e-12, "H({x}) = {h}");
        }
    }

    #[test]
    fn antisymmetry_gives_zero() {
        let y = sin_solution();
        let phi = LinearSymmetry::from_symmetry(field(CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[
                x.cos().powi(2),
                -(2.0 * x).sin(),
                -2.0 * (2.0 * x).cos(),
                4.0 * (2.0 * x).sin(),
            ]))
        })));
        let h = first_integral(&phi, &phi, y.as_ref(), 0.8).unwrap();
        assert_eq!(h, 0.0);
    }

    #[test]
    fn bracket_basics() {
        let one = field(ConstantField(1.0));
        let x_field = field(CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[x, 1.0, 0.0, 0.0]))
        }));
        assert_eq!(sl2_bracket(one.as_ref(), one.as_ref(), 0.4).unwrap(), 0.0);
        assert_eq!(sl2_bracket(one.as_ref(), x_field.as_ref(), 0.4).unwrap(), -1.0);
    }

    #[test]
    fn bracket_field_derivative_consistent() {
        // [sin², cos²]' via the field vs finite differences
        let a = field(CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[
                x.sin().powi(2),
                (2.0 * x).sin(),
                2.0 * (2.0 * x).cos(),
                -4.0 * (2.0 * x).sin(),
            ]))
        }));
        let b = field(CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[
                x.cos().powi(2),
                -(2.0 * x).sin(),
                -2.0 * (2.0 * x).cos(),
                4.0 * (2.0 * x).sin(),
            ]))
        }));
        let br = BracketField {
            z1: a.clone(),
            z2: b.clone(),
        };
        let x = 0.37;
        let h = 1e-5;
        let f = |x: f64| sl2_bracket(a.as_ref(), b.as_ref(), x).unwrap();
        let fd = (f(x + h) - f(x - h)) / (2.0 * h);
        let j = br.jet(x).unwrap();
        assert!((j.d(1) - fd).abs() < 1e-8);
    }
}
