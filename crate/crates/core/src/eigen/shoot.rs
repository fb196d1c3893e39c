use crate::error::{Error, Result};
use crate::numerics::{integrate_ode, Grid, OdeSolution};
use crate::real::{real, Real};
use crate::symmetry::{Field, Jet, ScalarField};
use crate::tol::Tolerances;

/// Integrates `y'' + (w(x) − λ)y = 0` from `(y, y')(a) = (0, 1)` to `b`.
pub fn shoot_solution<T: Real>(
    w: &dyn ScalarField<T>,
    lambda: T,
    a: T,
    b: T,
    tol: &Tolerances<T>,
) -> Result<OdeSolution<T>> {
    let rhs = |x: T, u: &[T], du: &mut [T]| -> Result<()> {
        du[0] = u[1];
        du[1] = -(w.value(x)? - lambda) * u[0];
        Ok(())
    };
    integrate_ode(rhs, a, &[T::zero(), T::one()], b, tol.rtol, tol.atol)
}

/// Scale-invariant miss distance `y(b) / max|y|`; its zeros in λ are the
/// Dirichlet eigenvalues.
pub fn shoot_miss<T: Real>(
    w: &dyn ScalarField<T>,
    lambda: T,
    a: T,
    b: T,
    tol: &Tolerances<T>,
) -> Result<T> {
    let sol = shoot_solution(w, lambda, a, b, tol)?;
    let scale = sol.max_component_abs(0).max(real(1e-300));
    Ok(sol.final_state()[0] / scale)
}

/// Normalized probability density `z(x) = y(x)²/∫y²` along the shooting
/// eigenfunction; refuses λ whose miss distance exceeds `1e-4`.
pub fn density_profile<T: Real>(
    w: &dyn ScalarField<T>,
    lambda: T,
    a: T,
    b: T,
    grid: &Grid<T>,
    tol: &Tolerances<T>,
) -> Result<Grid<T>> {
    let threshold = real::<T>(1e-4);
    let miss = shoot_miss(w, lambda, a, b, tol)?;
    if miss.abs() > threshold {
        return Err(Error::NotAnEigenvalue {
            lambda: lambda.to_f64().unwrap_or(f64::NAN),
            miss: miss.abs().to_f64().unwrap_or(f64::NAN),
            threshold: threshold.to_f64().unwrap_or(f64::NAN),
        });
    }
    // augmented system tracks ∫ y² alongside the solution
    let rhs = |x: T, u: &[T], du: &mut [T]| -> Result<()> {
        du[0] = u[1];
        du[1] = -(w.value(x)? - lambda) * u[0];
        du[2] = u[0] * u[0];
        Ok(())
    };
    let sol = integrate_ode(
        rhs,
        a,
        &[T::zero(), T::one(), T::zero()],
        b,
        tol.rtol,
        tol.atol,
    )?;
    let norm = sol.final_state()[2];
    let mut out = Grid::uniform(grid.x0(), grid.x1(), grid.samples())?;
    let mut state = vec![T::zero(); 3];
    for i in 0..out.samples() {
        let x = out.node(i);
        sol.eval_into(x, &mut state);
        out.values_mut()[i] = state[0] * state[0] / norm;
    }
    Ok(out)
}

/// Counts strict sign changes of `y` strictly inside `(a, b)`, ignoring the
/// boundary zeros; used for Sturm-oscillation checks.
pub fn interior_sign_changes<T: Real>(sol: &OdeSolution<T>, a: T, b: T, samples: usize) -> usize {
    let n = samples.max(16);
    let h = (b - a) / T::from_usize(n + 1).unwrap();
    let max_y = sol.max_component_abs(0);
    let floor = real::<T>(1e-9) * max_y;
    let mut count = 0;
    let mut last_sign = T::zero();
    let mut state = vec![T::zero(); sol.dim()];
    for i in 1..=n {
        let x = a + h * T::from_usize(i).unwrap();
        sol.eval_into(x, &mut state);
        let y = state[0];
        if y.abs() < floor {
            continue;
        }
        let s = if y > T::zero() { T::one() } else { -T::one() };
        if !last_sign.is_zero() && s != last_sign {
            count += 1;
        }
        last_sign = s;
    }
    count
}

/// Solution of `y'' + (w − λ)y = 0` wrapped as a scalar field of order 3:
/// value and slope from the dense interpolant, higher derivatives from the
/// equation itself.
pub struct IntegratedSolutionField<T> {
    forward: OdeSolution<T>,
    backward: Option<OdeSolution<T>>,
    mid: T,
    w: Field<T>,
    lambda: T,
}

impl<T: Real> IntegratedSolutionField<T> {
    /// Integrates from `(y0, dy0)` at `x_m` out to both interval ends.
    pub fn from_midpoint(
        w: Field<T>,
        lambda: T,
        interval: (T, T),
        x_m: T,
        y0: T,
        dy0: T,
        tol: &Tolerances<T>,
    ) -> Result<Self> {
        let rhs = |x: T, u: &[T], du: &mut [T]| -> Result<()> {
            du[0] = u[1];
            du[1] = -(w.value(x)? - lambda) * u[0];
            Ok(())
        };
        let forward = integrate_ode(rhs, x_m, &[y0, dy0], interval.1, tol.rtol, tol.atol)?;
        let backward = if x_m > interval.0 {
            Some(integrate_ode(
                rhs,
                x_m,
                &[y0, dy0],
                interval.0,
                tol.rtol,
                tol.atol,
            )?)
        } else {
            None
        };
        Ok(Self {
            forward,
            backward,
            mid: x_m,
            w,
            lambda,
        })
    }
}

impl<T: Real> ScalarField<T> for IntegratedSolutionField<T> {
    fn order(&self) -> usize {
        3
    }

    fn jet(&self, x: T) -> Result<Jet<T>> {
        let sol = if x >= self.mid || self.backward.is_none() {
            &self.forward
        } else {
            self.backward.as_ref().unwrap()
        };
        let mut state = [T::zero(); 2];
        sol.eval_into(x, &mut state);
        let wj = self.w.jet(x)?;
        let weff = wj.value() - self.lambda;
        let y2 = -weff * state[0];
        let y3 = -(wj.d(1) * state[0] + weff * state[1]);
        Ok(Jet::from_slice(&[state[0], state[1], y2, y3]))
    }
}
