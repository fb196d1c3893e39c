use std::sync::Arc;

use crate::elliptic::WeierstrassEvaluator;
use crate::error::Result;
use crate::lame::{LamePotentialSpec, LameSymmetrySpec};
use crate::numerics::Polynomial;
use crate::real::Real;
use crate::symmetry::{Jet, ScalarField, SymmetryPair};
use crate::tol::Tolerances;

/// `P(℘(x)) + ℘'(x)·R(℘(x))` as a scalar field of order 3, differentiated
/// through the curve by the chain rule.
pub struct CurveField<T> {
    even: [Polynomial<T>; 4],
    odd: [Polynomial<T>; 4],
    ws: Arc<WeierstrassEvaluator<T>>,
}

impl<T: Real> CurveField<T> {
    pub fn new(even: Polynomial<T>, odd: Polynomial<T>, ws: Arc<WeierstrassEvaluator<T>>) -> Self {
        let stack = |p: Polynomial<T>| {
            let d1 = p.derivative();
            let d2 = d1.derivative();
            let d3 = d2.derivative();
            [p, d1, d2, d3]
        };
        Self {
            even: stack(even),
            odd: stack(odd),
            ws,
        }
    }
}

impl<T: Real> ScalarField<T> for CurveField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let d = self.ws.wp_derivatives(x, 4)?;
        let p0_jet = Jet::from_slice(&d[..4]);
        let p1_jet = Jet::from_slice(&d[1..5]);
        let t = d[0];
        let compose = |polys: &[Polynomial<T>; 4]| {
            p0_jet.compose([
                polys[0].eval(t),
                polys[1].eval(t),
                polys[2].eval(t),
                polys[3].eval(t),
            ])
        };
        let even = compose(&self.even);
        let odd = compose(&self.odd);
        Ok(even.add(&p1_jet.mul(&odd)))
    }
}

/// Assembles `(w, z)` from curve polynomials and validates them as a
/// [`SymmetryPair`] on `domain`, which must avoid the real poles of ℘.
pub fn assemble_fields<T: Real>(
    pot: &LamePotentialSpec<T>,
    sym: &LameSymmetrySpec<T>,
    ws: Arc<WeierstrassEvaluator<T>>,
    domain: (T, T),
    tol: &Tolerances<T>,
) -> Result<SymmetryPair<T>> {
    let w = Arc::new(CurveField::new(pot.c.clone(), pot.e.clone(), ws.clone()));
    let z = Arc::new(CurveField::new(sym.a.clone(), sym.b.clone(), ws));
    SymmetryPair::new(w, z, domain, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::EllipticInvariants;
    use crate::lame::even_coefficients;
    use crate::symmetry::lie_terms;

    fn ws(g2: f64, g3: f64) -> Arc<WeierstrassEvaluator<f64>> {
        Arc::new(WeierstrassEvaluator::new(EllipticInvariants::new(g2, g3)))
    }

    #[test]
    fn chain_rule_base_case() {
        // even n=1: z = ℘ + c0 ⇒ z' = ℘' exactly
        let e = ws(2.1, 0.4);
        let z = CurveField::new(
            Polynomial::new(vec![0.7, 1.0]),
            Polynomial::zero(),
            e.clone(),
        );
        for k in 1..12 {
            let x = 0.15 * k as f64;
            let j = z.jet(x).unwrap();
            let d = e.wp_derivatives(x, 3).unwrap();
            assert_eq!(j.d(1), d[1]);
            assert_eq!(j.d(2), d[2]);
            assert_eq!(j.d(3), d[3]);
        }
    }

    #[test]
    fn n2_pair_has_small_lie_residual() {
        let inv = EllipticInvariants::new(1.1, -0.6);
        let fam = even_coefficients(2, 0.8, inv).unwrap();
        let pair = fam.assemble((0.35, 0.95), &Tolerances::default()).unwrap();
        for k in 0..100 {
            let x = 0.35 + 0.006 * k as f64;
            let (res, scale) = lie_terms(pair.w().as_ref(), pair.z().as_ref(), x).unwrap();
            assert!(
                res.abs() <= 1e-7 * scale.max(1.0),
                "residual {res:e} at x={x}"
            );
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let e = ws(1.3, 0.2);
        let f = CurveField::new(
            Polynomial::new(vec![0.1, -0.4, 1.0]),
            Polynomial::new(vec![0.5, 0.3]),
            e,
        );
        let h = 1e-5;
        for &x in &[0.5, 0.9, 1.2] {
            let j = f.jet(x).unwrap();
            let vp = f.jet(x + h).unwrap();
            let vm = f.jet(x - h).unwrap();
            let fd1 = (vp.value() - vm.value()) / (2.0 * h);
            let fd2 = (vp.d(1) - vm.d(1)) / (2.0 * h);
            let fd3 = (vp.d(2) - vm.d(2)) / (2.0 * h);
            assert!((j.d(1) - fd1).abs() <= 1e-5 * (1.0 + fd1.abs()));
            assert!((j.d(2) - fd2).abs() <= 1e-5 * (1.0 + fd2.abs()));
            assert!((j.d(3) - fd3).abs() <= 1e-5 * (1.0 + fd3.abs()));
        }
    }

    #[test]
    fn degenerate_invariants_reduce_to_power_law() {
        // odd family at g2 = g3 = c0 = 0: z = ℘'·℘^n = −2 x^{−2n−3}
        let e = ws(0.0, 0.0);
        let n = 2usize;
        let mut b = vec![0.0; n + 1];
        b[n] = 1.0;
        let z = CurveField::new(Polynomial::zero(), Polynomial::new(b), e);
        for k in 1..8 {
            let x = 0.8 + 0.15 * k as f64;
            let expect = -2.0 * x.powi(-(2 * n as i32 + 3));
            let got = z.jet(x).unwrap().value();
            assert!((got - expect).abs() <= 1e-12 * expect.abs());
        }
    }
}
