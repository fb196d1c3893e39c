//! Dirichlet eigenvalue problems for `y'' + (w(x) − λ)y = 0` on `[a, b]`:
//! a shooting solver, the fundamental-solution determinant condition, and
//! probability-density profiles. The sign convention keeps the paper form
//! `w − λ` (standard form `−y'' + Vy = Ey` has `V = −w`, `E = −λ`), so
//! bound states appear at negative λ.

mod family;
mod shoot;

pub use family::{
    determinant_condition, determinant_scaled, ConstantFamily, LameEvenFamily, NumericFamily,
    SymmetryFamily,
};
pub use shoot::{
    density_profile, interior_sign_changes, shoot_miss, shoot_solution, IntegratedSolutionField,
};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::{refine_bracket, Polynomial};
use crate::real::{real, Real};
use crate::symmetry::{field, Field, PolynomialField};
use crate::tol::Tolerances;

/// `w(x) = (9ν⁶/4)x⁴ − 3δx²`.
#[derive(Debug, Clone, Copy)]
pub struct MexicanHatSpec<T> {
    pub nu: T,
    pub delta: T,
}

impl<T: Real> MexicanHatSpec<T> {
    pub fn new(nu: T, delta: T) -> Result<Self> {
        if !(nu > T::zero()) || !(delta > T::zero()) {
            return Err(Error::InvalidInput(format!(
                "mexican hat needs ν > 0 and δ > 0 (got ν = {nu}, δ = {delta})"
            )));
        }
        Ok(Self { nu, delta })
    }
}

/// The Mexican-hat potential as a polynomial field (all derivatives
/// analytic).
pub fn mexican_hat_field<T: Real>(spec: &MexicanHatSpec<T>) -> Field<T> {
    let quartic = real::<T>(2.25) * spec.nu.powi(6);
    let quadratic = -real::<T>(3.0) * spec.delta;
    field(PolynomialField::new(Polynomial::new(vec![
        T::zero(),
        T::zero(),
        quadratic,
        T::zero(),
        quartic,
    ])))
}

/// Which scalar function the λ-scan brackets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenMethod {
    Shooting,
    Determinant,
    Both,
}

impl std::fmt::Display for EigenMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EigenMethod::Shooting => "shoot",
            EigenMethod::Determinant => "det",
            EigenMethod::Both => "both",
        })
    }
}

/// Eigenvalue search specification.
pub struct EigenProblem<T> {
    /// λ-independent part of the potential.
    pub w: Field<T>,
    pub interval: (T, T),
    pub lambda_range: (T, T),
    /// Number of scan nodes over the λ range.
    pub scan: usize,
    pub method: EigenMethod,
    /// Required for the determinant method.
    pub family: Option<Arc<dyn SymmetryFamily<T>>>,
    /// Worker threads for the λ-scan (1 = serial; the result does not
    /// depend on the count).
    pub threads: usize,
}

/// Sorted eigenvalues with per-root shooting residuals and the method that
/// located each root.
#[derive(Debug, Clone)]
pub struct EigenResult<T> {
    pub eigenvalues: Vec<T>,
    pub residuals: Vec<T>,
    pub flags: Vec<EigenMethod>,
}

/// Scans the λ range with the selected method's scalar function, brackets
/// sign changes, refines each bracket, and (for `Both`) merges the two root
/// lists with cross-validation flags.
pub fn solve_eigen<T: Real>(problem: &EigenProblem<T>, tol: &Tolerances<T>) -> Result<EigenResult<T>> {
    let (a, b) = problem.interval;
    if !(a < b) {
        return Err(Error::InvalidInput("interval must satisfy a < b".into()));
    }
    let (l0, l1) = problem.lambda_range;
    if !(l0 < l1) {
        return Err(Error::InvalidInput(
            "λ range must satisfy λ_min < λ_max".into(),
        ));
    }

    let shoot_fn = |lam: T| -> T {
        shoot_miss(problem.w.as_ref(), lam, a, b, tol)
            .unwrap_or_else(|_| T::nan())
    };
    let det_fn = |lam: T| -> T {
        let Some(family) = problem.family.as_ref() else {
            return T::nan();
        };
        determinant_scaled(family.as_ref(), lam, a, b, 65, tol)
            .unwrap_or_else(|_| T::nan())
    };

    let mut eigenvalues = Vec::new();
    let mut flags = Vec::new();
    match problem.method {
        EigenMethod::Shooting => {
            for root in scan_roots(&shoot_fn, l0, l1, problem.scan, tol.xtol, problem.threads) {
                eigenvalues.push(root);
                flags.push(EigenMethod::Shooting);
            }
        }
        EigenMethod::Determinant => {
            if problem.family.is_none() {
                return Err(Error::InvalidInput(
                    "determinant method needs a symmetry family".into(),
                ));
            }
            for root in scan_roots(&det_fn, l0, l1, problem.scan, tol.xtol, problem.threads) {
                eigenvalues.push(root);
                flags.push(EigenMethod::Determinant);
            }
        }
        EigenMethod::Both => {
            if problem.family.is_none() {
                return Err(Error::InvalidInput(
                    "method 'both' needs a symmetry family".into(),
                ));
            }
            let shoot = scan_roots(&shoot_fn, l0, l1, problem.scan, tol.xtol, problem.threads);
            let det = scan_roots(&det_fn, l0, l1, problem.scan, tol.xtol, problem.threads);
            let mut used = vec![false; det.len()];
            for &s in &shoot {
                let matched = det.iter().enumerate().find(|(i, &d)| {
                    !used[*i] && (d - s).abs() <= real::<T>(1e-6) * (T::one() + s.abs())
                });
                if let Some((i, _)) = matched {
                    used[i] = true;
                    eigenvalues.push(s);
                    flags.push(EigenMethod::Both);
                } else {
                    eigenvalues.push(s);
                    flags.push(EigenMethod::Shooting);
                }
            }
            for (i, &d) in det.iter().enumerate() {
                if !used[i] {
                    eigenvalues.push(d);
                    flags.push(EigenMethod::Determinant);
                }
            }
            let mut order: Vec<usize> = (0..eigenvalues.len()).collect();
            order.sort_by(|&i, &j| eigenvalues[i].partial_cmp(&eigenvalues[j]).unwrap());
            eigenvalues = order.iter().map(|&i| eigenvalues[i]).collect();
            flags = order.iter().map(|&i| flags[i]).collect();
        }
    }

    let residuals = eigenvalues
        .iter()
        .map(|&lam| {
            shoot_miss(problem.w.as_ref(), lam, a, b, tol)
                .map(|m| m.abs())
                .unwrap_or_else(|_| T::nan())
        })
        .collect();
    Ok(EigenResult {
        eigenvalues,
        residuals,
        flags,
    })
}

/// Samples `f` on uniform nodes (optionally in parallel), brackets sign
/// changes between finite samples, refines each bracket. Deterministic for
/// any thread count.
fn scan_roots<T, F>(f: &F, lo: T, hi: T, n_scan: usize, xtol: T, threads: usize) -> Vec<T>
where
    T: Real,
    F: Fn(T) -> T + Sync,
{
    let n = n_scan.max(8);
    let nodes: Vec<T> = (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * T::from_usize(i).unwrap() / T::from_usize(n - 1).unwrap()
            }
        })
        .collect();
    let values: Vec<T> = if threads > 1 {
        let mut out = vec![T::zero(); n];
        let chunk = n.div_ceil(threads);
        std::thread::scope(|scope| {
            for (idx, vals) in out.chunks_mut(chunk).enumerate() {
                let nodes = &nodes;
                scope.spawn(move || {
                    for (k, v) in vals.iter_mut().enumerate() {
                        *v = f(nodes[idx * chunk + k]);
                    }
                });
            }
        });
        out
    } else {
        nodes.iter().map(|&x| f(x)).collect()
    };

    let mut roots = Vec::new();
    for i in 1..n {
        let (fa, fb) = (values[i - 1], values[i]);
        if !fa.is_finite() || !fb.is_finite() {
            continue;
        }
        if fa.is_zero() {
            roots.push(nodes[i - 1]);
        } else if fa * fb < T::zero() {
            roots.push(refine_bracket(f, nodes[i - 1], nodes[i], fa, fb, xtol));
        }
    }
    if values[n - 1].is_finite() && values[n - 1].is_zero() {
        roots.push(nodes[n - 1]);
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|x, y| (*x - *y).abs() < real::<T>(10.0) * xtol);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::ConstantField;
    use std::f64::consts::PI;

    #[test]
    fn dirichlet_laplacian_spectrum() {
        let problem = EigenProblem {
            w: field(ConstantField(0.0)),
            interval: (0.0, 1.0),
            lambda_range: (-50.0, -1.0),
            scan: 400,
            method: EigenMethod::Shooting,
            family: None,
            threads: 1,
        };
        let res = solve_eigen(&problem, &Tolerances::default()).unwrap();
        assert_eq!(res.eigenvalues.len(), 2);
        assert!((res.eigenvalues[0] + 4.0 * PI * PI).abs() < 1e-6);
        assert!((res.eigenvalues[1] + PI * PI).abs() < 1e-6);
        for r in &res.residuals {
            assert!(*r < 1e-6);
        }
    }

    #[test]
    fn both_methods_agree_for_constant_potential() {
        let tol = Tolerances::default();
        let fam = Arc::new(ConstantFamily {
            w0: 0.0,
            interval: (0.0, 1.0),
            tol,
        });
        let problem = EigenProblem {
            w: field(ConstantField(0.0)),
            interval: (0.0, 1.0),
            lambda_range: (-50.0, -1.0),
            scan: 400,
            method: EigenMethod::Both,
            family: Some(fam),
            threads: 2,
        };
        let res = solve_eigen(&problem, &tol).unwrap();
        assert_eq!(res.eigenvalues.len(), 2);
        assert!(res.flags.iter().all(|f| *f == EigenMethod::Both));
    }

    #[test]
    fn mexican_hat_values() {
        let spec = MexicanHatSpec::new(1.0, 1.0).unwrap();
        let w = mexican_hat_field(&spec);
        assert_eq!(w.value(0.0).unwrap(), 0.0);
        assert_eq!(w.value(1.0).unwrap(), -0.75);
        assert_eq!(w.value(1.3).unwrap(), w.value(-1.3).unwrap());
        assert!(MexicanHatSpec::new(0.0, 1.0).is_err());
    }
}
