use std::sync::Arc;

use crate::elliptic::{EllipticInvariants, WeierstrassEvaluator};
use crate::error::{Error, Result};
use crate::lame::{assemble_fields, LamePotentialSpec, LameSymmetrySpec};
use crate::numerics::Polynomial;
use crate::real::{real, Real};
use crate::symmetry::SymmetryPair;
use crate::tol::Tolerances;

/// Even-case family: `w = −n(n+1)℘ + c0`, `z = A(℘)` with
/// `A = p0^n + a_{n−1} p0^{n−1} + … + a_0` fixed by the coefficient
/// relations. Defined for every real `(c0, g2, g3)`.
#[derive(Debug, Clone)]
pub struct EvenFamily<T> {
    pub n: u32,
    pub c0: T,
    pub inv: EllipticInvariants<T>,
    /// `c1 = −n(n+1)`, the coefficient of `p0` in the potential.
    pub c1: T,
    /// `a_0..a_n` (leading coefficient normalized to 1).
    pub a: Vec<T>,
}

/// Builds the even family for `n ≥ 1`:
/// `a_{n−1} = c0/(2n−1)`,
/// `a_{n−2} = (8c0² − n g2 (2n−1)²)(n−1) / (8(2n−3)(2n−1)²)` for `n ≥ 2`,
/// then downward for `i = n−3..0`
/// `a_i = ((2i²+10i+12) a_{i+3} g3 + (2i²+7i+6) a_{i+2} g2 − 8 c0 a_{i+1})(i+1)
///        / (4(i+n+1)(2i+1)(i−n))`
/// (the denominator never vanishes on that range).
pub fn even_coefficients<T: Real>(
    n: u32,
    c0: T,
    inv: EllipticInvariants<T>,
) -> Result<EvenFamily<T>> {
    if n < 1 {
        return Err(Error::InvalidInput(
            "even family needs n ≥ 1 (n = 0 is the constant potential)".into(),
        ));
    }
    let nf = real::<T>(n as f64);
    let g2 = inv.g2();
    let g3 = inv.g3();
    let c1 = -nf * (nf + T::one());
    let nn = n as usize;
    let mut a = vec![T::zero(); nn + 1];
    a[nn] = T::one();
    a[nn - 1] = c0 / (real::<T>(2.0) * nf - T::one());
    if n >= 2 {
        let m1 = real::<T>((2 * n - 1) as f64);
        let num = (real::<T>(8.0) * c0 * c0 - nf * g2 * m1 * m1) * (nf - T::one());
        let den = real::<T>(8.0) * real::<T>((2 * n - 3) as f64) * m1 * m1;
        a[nn - 2] = num / den;
    }
    if n >= 3 {
        for i in (0..=nn - 3).rev() {
            let fi = i as f64;
            let t3 = real::<T>(2.0 * fi * fi + 10.0 * fi + 12.0) * a[i + 3] * g3;
            let t2 = real::<T>(2.0 * fi * fi + 7.0 * fi + 6.0) * a[i + 2] * g2;
            let t1 = real::<T>(8.0) * c0 * a[i + 1];
            let num = (t3 + t2 - t1) * real::<T>(fi + 1.0);
            let den = real::<T>(4.0 * (fi + n as f64 + 1.0) * (2.0 * fi + 1.0) * (fi - n as f64));
            a[i] = num / den;
        }
    }
    Ok(EvenFamily { n, c0, inv, c1, a })
}

impl<T: Real> EvenFamily<T> {
    /// `C = c1·p0 + c0`, `E = 0`.
    pub fn potential_spec(&self) -> LamePotentialSpec<T> {
        LamePotentialSpec {
            c: Polynomial::new(vec![self.c0, self.c1]),
            e: Polynomial::zero(),
            inv: self.inv,
        }
    }

    /// `A` from the coefficient vector, `B = 0`.
    pub fn symmetry_spec(&self) -> LameSymmetrySpec<T> {
        LameSymmetrySpec {
            a: Polynomial::new(self.a.clone()),
            b: Polynomial::zero(),
        }
    }

    /// Assembles `(w, z)` as validated scalar fields on `domain` (must be
    /// pole-free).
    pub fn assemble(&self, domain: (T, T), tol: &Tolerances<T>) -> Result<SymmetryPair<T>> {
        let ws = Arc::new(WeierstrassEvaluator::new(self.inv));
        assemble_fields(&self.potential_spec(), &self.symmetry_spec(), ws, domain, tol)
    }
}

/// The printed closed forms of `c_w` for the first three even families.
pub fn even_cw_closed_form<T: Real>(n: u32, c0: T, inv: EllipticInvariants<T>) -> Result<T> {
    let g2 = inv.g2();
    let g3 = inv.g3();
    let quarter = real::<T>(0.25);
    match n {
        1 => Ok(c0.powi(3) - (c0 * g2 - g3) * quarter),
        2 => {
            let f1 = c0 * c0 - real::<T>(3.0) * g2;
            let f2 = real::<T>(4.0) * c0.powi(3)
                - real::<T>(9.0) * c0 * g2
                - real::<T>(27.0) * g3;
            Ok(f1 * f2 / real::<T>(324.0))
        }
        3 => Ok(c0.powi(7) / real::<T>(50625.0)
            - real::<T>(7.0) * g2 * c0.powi(5) / real::<T>(11250.0)
            - real::<T>(11.0) * g3 * c0.powi(4) / real::<T>(3750.0)
            + real::<T>(31.0) * g2 * g2 * c0.powi(3) / real::<T>(6000.0)
            + real::<T>(9.0) * g2 * g3 * c0 * c0 / real::<T>(200.0)
            + (real::<T>(27.0) * g3 * g3 - g2.powi(3)) * c0 / real::<T>(240.0)),
        n => Err(Error::UnsupportedN { n }),
    }
}
