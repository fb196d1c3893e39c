use crate::error::{Error, Result};
use crate::real::{real, Real};
use crate::symmetry::{Field, ScalarField};
use crate::tol::Tolerances;

/// Sign class of `c_w`, selecting the fundamental-solution formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    Elliptic,
    Hyperbolic,
    Parabolic,
}

impl std::fmt::Display for CaseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseKind::Elliptic => "elliptic",
            CaseKind::Hyperbolic => "hyperbolic",
            CaseKind::Parabolic => "parabolic",
        };
        f.write_str(s)
    }
}

/// `z''' + 4 w z' + 2 w' z` at `x`.
pub fn lie_residual<T: Real>(
    w: &dyn ScalarField<T>,
    z: &dyn ScalarField<T>,
    x: T,
) -> Result<T> {
    Ok(lie_terms(w, z, x)?.0)
}

/// Residual together with the largest term magnitude (the natural scale for
/// "vanishes").
pub fn lie_terms<T: Real>(
    w: &dyn ScalarField<T>,
    z: &dyn ScalarField<T>,
    x: T,
) -> Result<(T, T)> {
    let wj = w.jet(x)?;
    let zj = z.jet(x)?;
    let four = real::<T>(4.0);
    let two = real::<T>(2.0);
    let t1 = zj.d(3);
    let t2 = four * wj.value() * zj.d(1);
    let t3 = two * wj.d(1) * zj.value();
    Ok((t1 + t2 + t3, t1.abs().max(t2.abs()).max(t3.abs())))
}

/// Evaluates `w z² − z'²/4 + z z''/2` at each node and returns the median
/// together with the maximal absolute deviation from it.
pub fn compute_cw<T: Real>(
    w: &dyn ScalarField<T>,
    z: &dyn ScalarField<T>,
    xs: &[T],
) -> Result<(T, T)> {
    assert!(!xs.is_empty());
    let mut vals = Vec::with_capacity(xs.len());
    for &x in xs {
        vals.push(cw_at(w, z, x)?);
    }
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = vals.len();
    let median = if n % 2 == 1 {
        vals[n / 2]
    } else {
        (vals[n / 2 - 1] + vals[n / 2]) * real::<T>(0.5)
    };
    let deviation = vals
        .iter()
        .fold(T::zero(), |acc, &v| acc.max((v - median).abs()));
    Ok((median, deviation))
}

fn cw_at<T: Real>(w: &dyn ScalarField<T>, z: &dyn ScalarField<T>, x: T) -> Result<T> {
    let zj = z.jet(x)?;
    let (zv, z1, z2) = (zj.value(), zj.d(1), zj.d(2));
    if zv.abs() < real::<T>(1e-12) * T::one().max(z1.abs()).max(z2.abs()) {
        return Err(Error::ZeroSymmetry {
            x: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    let wv = w.value(x)?;
    Ok(wv * zv * zv - z1 * z1 * real::<T>(0.25) + zv * z2 * real::<T>(0.5))
}

/// Sign classification of `c_w` with tolerance `1e-9·scale`.
pub fn classify_case<T: Real>(c_w: T, scale: T) -> CaseKind {
    let tol = real::<T>(1e-9) * scale;
    if c_w > tol {
        CaseKind::Elliptic
    } else if c_w < -tol {
        CaseKind::Hyperbolic
    } else {
        CaseKind::Parabolic
    }
}

/// A potential `w` with a symmetry `z` on a domain, carrying the constant
/// `c_w`, its sign class and `q0 = √|c_w|`.
///
/// Construction validates the defining invariants on a node set: the Lie
/// residual vanishes relative to its term magnitudes, and the `c_w`
/// expression is constant across nodes.
#[derive(Clone)]
pub struct SymmetryPair<T> {
    w: Field<T>,
    z: Field<T>,
    domain: (T, T),
    c_w: T,
    case: CaseKind,
    q0: T,
}

impl<T: Real> SymmetryPair<T> {
    pub fn new(w: Field<T>, z: Field<T>, domain: (T, T), tol: &Tolerances<T>) -> Result<Self> {
        Self::with_nodes(w, z, domain, tol, 64)
    }

    pub fn with_nodes(
        w: Field<T>,
        z: Field<T>,
        domain: (T, T),
        tol: &Tolerances<T>,
        n_nodes: usize,
    ) -> Result<Self> {
        let (x0, x1) = domain;
        if !(x0 < x1) {
            return Err(Error::InvalidInput(format!(
                "pair domain must satisfy x0 < x1 (got {x0}, {x1})"
            )));
        }
        if z.order() < 3 {
            return Err(Error::InvalidInput(
                "symmetry field must carry derivatives up to order 3".into(),
            ));
        }
        let n = n_nodes.max(8);
        let h = (x1 - x0) / T::from_usize(n + 1).unwrap();
        let nodes: Vec<T> = (1..=n)
            .map(|i| x0 + h * T::from_usize(i).unwrap())
            .collect();

        let (c_w, deviation) = compute_cw(w.as_ref(), z.as_ref(), &nodes)?;
        if deviation > tol.pair_cw * (T::one() + c_w.abs()) {
            return Err(Error::InvariantViolation(format!(
                "c_w varies across the domain: median {c_w}, deviation {deviation}"
            )));
        }

        let mut cls_scale = T::one();
        for &x in &nodes {
            let (res, scale) = lie_terms(w.as_ref(), z.as_ref(), x)?;
            let floor = real::<T>(1e-14);
            if res.abs() > tol.pair_lie * scale + floor {
                return Err(Error::InvariantViolation(format!(
                    "Lie residual {res} exceeds {}·{scale} at x = {x}",
                    tol.pair_lie
                )));
            }
            let wz2 = (w.value(x)? * z.value(x)?.powi(2)).abs();
            cls_scale = cls_scale.max(wz2);
        }

        let case = classify_case(c_w, cls_scale);
        let q0 = match case {
            CaseKind::Parabolic => T::zero(),
            _ => c_w.abs().sqrt(),
        };
        Ok(Self {
            w,
            z,
            domain,
            c_w,
            case,
            q0,
        })
    }

    pub fn w(&self) -> &Field<T> {
        &self.w
    }

    pub fn z(&self) -> &Field<T> {
        &self.z
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    pub fn c_w(&self) -> T {
        self.c_w
    }

    pub fn case(&self) -> CaseKind {
        self.case
    }

    pub fn q0(&self) -> T {
        self.q0
    }

    pub fn lie_residual_at(&self, x: T) -> Result<T> {
        lie_residual(self.w.as_ref(), self.z.as_ref(), x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{field, CallbackField, ConstantField, Jet};

    #[test]
    fn constants_solve_trivially() {
        let w = ConstantField(0.0);
        let z = ConstantField(1.0);
        assert_eq!(lie_residual(&w, &z, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn cos_squared_solves_unit_potential() {
        // z = cos²x: z''' = 4 sin 2x cancels 4wz' = −4 sin 2x for w ≡ 1
        let w = ConstantField(1.0);
        let z = CallbackField::new(3, |x: f64| {
            Ok(Jet::from_slice(&[
                x.cos().powi(2),
                -(2.0 * x).sin(),
                -2.0 * (2.0 * x).cos(),
                4.0 * (2.0 * x).sin(),
            ]))
        });
        for k in 0..20 {
            let x = -1.0 + 0.1 * k as f64;
            assert!(lie_residual(&w, &z, x).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn cw_of_constants() {
        let w = ConstantField(1.0);
        let z = ConstantField(1.0);
        let (c, dev) = compute_cw(&w, &z, &[0.0, 0.5, 1.0]).unwrap();
        assert_eq!(c, 1.0);
        assert_eq!(dev, 0.0);
    }

    #[test]
    fn classification() {
        assert_eq!(classify_case(1.0, 1.0), CaseKind::Elliptic);
        assert_eq!(classify_case(-4.0, 1.0), CaseKind::Hyperbolic);
        assert_eq!(classify_case(1e-15, 1.0), CaseKind::Parabolic);
    }

    #[test]
    fn pair_constructor_validates() {
        let tol = Tolerances::default();
        let pair = SymmetryPair::new(
            field(ConstantField(1.0)),
            field(ConstantField(1.0)),
            (0.0, 1.0),
            &tol,
        )
        .unwrap();
        assert_eq!(pair.case(), CaseKind::Elliptic);
        assert_eq!(pair.c_w(), 1.0);
        assert_eq!(pair.q0(), 1.0);

        // mismatched pair must be rejected
        let bad = SymmetryPair::new(
            field(ConstantField(1.0)),
            field(CallbackField::new(3, |x: f64| {
                Ok(Jet::from_slice(&[x.exp(), x.exp(), x.exp(), x.exp()]))
            })),
            (0.0, 1.0),
            &tol,
        );
        assert!(bad.is_err());
    }
}
